#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

const std::string kCli = SEMICUT_CLI_PATH;

fs::path work_dir() {
    const fs::path dir = fs::temp_directory_path() / "semicut_cli_test";
    fs::create_directories(dir);
    return dir;
}

struct RunResult {
    int exit_code;
    std::string output; // stdout only
};

RunResult run(const std::string& args) {
    const fs::path out = work_dir() / "stdout.txt";
    const std::string cmd = kCli + " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, buffer.str()};
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string triangle_file() {
    const fs::path path = work_dir() / "triangle.txt";
    std::ofstream out(path);
    out << "semicomplete 3\n010\n001\n100\n";
    out.close();
    return path.string();
}

} // namespace

TEST_CASE("gen writes valid deterministic instances") {
    const fs::path a = work_dir() / "gen_a.txt";
    const fs::path b = work_dir() / "gen_b.txt";
    CHECK(run("gen transitive --n 10 -o " + a.string()).exit_code == 0);
    const std::string text = slurp(a);
    CHECK(text.substr(0, 15) == "semicomplete 10");

    CHECK(run("gen semicomplete --n 8 --pdouble 0.2 --seed 1 -o " + a.string()).exit_code == 0);
    CHECK(run("gen semicomplete --n 8 --pdouble 0.2 --seed 1 -o " + b.string()).exit_code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(run("gen noisy --n 30 --flips 5 --seed 7 -o " + a.string()).exit_code == 0);
    CHECK(run("gen noisy --n 4 --flips 99 --seed 7").exit_code == 2); // invalid parameter
    CHECK(run("gen mystery --n 4").exit_code == 2);
}

TEST_CASE("solve exit codes and certificates") {
    const std::string triangle = triangle_file();
    const auto yes = run("solve fas " + triangle + " --k 1");
    CHECK(yes.exit_code == 0);
    CHECK(yes.output.find("answer: yes") != std::string::npos);
    CHECK(yes.output.find("fas:") != std::string::npos);

    CHECK(run("solve ola " + triangle + " --k 1").exit_code == 1);
    CHECK(run("solve cutwidth " + triangle + " --k 1").exit_code == 0);

    // usage and parse failures
    CHECK(run("solve fas " + triangle).exit_code == 2);            // no --k/--minimize
    CHECK(run("solve fas missing.txt --k 1").exit_code == 2);      // unreadable input
    CHECK(run("solve sorting " + triangle + " --k 1").exit_code == 2);
    const fs::path bad = work_dir() / "bad.txt";
    std::ofstream(bad) << "semicomplete 2\n00\n00\n";
    CHECK(run("solve fas " + bad.string() + " --k 1").exit_code == 2);

    const auto minimized = run("solve cutwidth " + triangle + " --minimize");
    CHECK(minimized.exit_code == 0);
    CHECK(minimized.output.find("k-star: 1") != std::string::npos);
}

TEST_CASE("solve --minimize on a transitive instance reports zero") {
    const fs::path trans = work_dir() / "trans10.txt";
    REQUIRE(run("gen transitive --n 10 -o " + trans.string()).exit_code == 0);
    const auto result = run("solve cutwidth " + trans.string() + " --minimize");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("k-star: 0") != std::string::npos);
    CHECK(result.output.find("ordering: 0 1 2 3 4 5 6 7 8 9") != std::string::npos);
}

TEST_CASE("count-cuts values") {
    const fs::path t4 = work_dir() / "t4.txt";
    const fs::path t6 = work_dir() / "t6.txt";
    REQUIRE(run("gen transitive --n 4 -o " + t4.string()).exit_code == 0);
    REQUIRE(run("gen transitive --n 6 -o " + t6.string()).exit_code == 0);

    CHECK(run("count-cuts " + t4.string() + " --k 1").output.find("count: 8") !=
          std::string::npos);
    CHECK(run("count-cuts " + t6.string() + " --k 0").output.find("count: 7") !=
          std::string::npos);
    CHECK(run("count-cuts " + triangle_file() + " --k 0").output.find("count: 2") !=
          std::string::npos);
    CHECK(run("count-cuts " + t6.string() + " --k 0 --cap 3").output.find("cap-exceeded") !=
          std::string::npos);
}

TEST_CASE("cut engine and brute engine agree") {
    for (int seed = 0; seed < 4; ++seed) {
        const fs::path inst = work_dir() / ("agree" + std::to_string(seed) + ".txt");
        REQUIRE(run("gen tournament --n 6 --seed " + std::to_string(seed) + " -o " +
                    inst.string())
                    .exit_code == 0);
        for (const std::string problem : {"fas", "cutwidth", "ola"}) {
            for (int k = 0; k <= 3; ++k) {
                const std::string tail =
                    " " + inst.string() + " --k " + std::to_string(k);
                CHECK(run("solve " + problem + tail + " --engine cuts").exit_code ==
                      run("solve " + problem + tail + " --engine brute").exit_code);
            }
        }
    }
    // brute refuses large instances
    const fs::path big = work_dir() / "big.txt";
    REQUIRE(run("gen transitive --n 12 -o " + big.string()).exit_code == 0);
    CHECK(run("solve fas " + big.string() + " --k 1 --engine brute").exit_code == 2);
}

TEST_CASE("json reports are byte-stable across runs") {
    const std::string triangle = triangle_file();
    const auto first = run("solve fas " + triangle + " --k 1 --json");
    const auto second = run("solve fas " + triangle + " --k 1 --json");
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(first.output.find("\"ms\": 0") != std::string::npos);

    const auto count1 = run("count-cuts " + triangle + " --k 2 --json");
    const auto count2 = run("count-cuts " + triangle + " --k 2 --json");
    CHECK(count1.output == count2.output);
}

TEST_CASE("bench emits the documented CSV schema") {
    const fs::path csv = work_dir() / "bench.csv";
    CHECK(run("bench --family transitive --n 4:6 --k 0:2 --seeds 2 --out " + csv.string())
              .exit_code == 0);
    const std::string text = slurp(csv);
    std::istringstream lines(text);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "family,n,k,seed,cuts,cap_fas,cap_cutwidth,capped,ms");
    int rows = 0;
    std::string row;
    while (std::getline(lines, row))
        if (!row.empty()) ++rows;
    CHECK(rows == 3 * 3 * 2); // n in 4..6, k in 0..2, 2 seeds

    // deterministic output
    const fs::path csv2 = work_dir() / "bench2.csv";
    CHECK(run("bench --family noisy --n 5:6 --k 1:2 --seeds 2 --out " + csv2.string())
              .exit_code == 0);
    const std::string noisy_a = slurp(csv2);
    CHECK(run("bench --family noisy --n 5:6 --k 1:2 --seeds 2 --out " + csv2.string())
              .exit_code == 0);
    CHECK(slurp(csv2) == noisy_a);

    // an empty k range yields a header-only file
    const fs::path empty_csv = work_dir() / "empty.csv";
    CHECK(run("bench --family transitive --n 4:5 --k 3:2 --seeds 1 --out " + empty_csv.string())
              .exit_code == 0);
    CHECK(slurp(empty_csv) == "family,n,k,seed,cuts,cap_fas,cap_cutwidth,capped,ms\n");
}

TEST_CASE("weighted solving through the CLI") {
    const fs::path w = work_dir() / "weighted.txt";
    std::ofstream(w) << "semicomplete 3 weighted\n010\n001\n100\n0 1 3/2\n1 2 1\n2 0 2\n";
    CHECK(run("solve fas " + w.string() + " --weighted --k 1").exit_code == 0);
    CHECK(run("solve fas " + w.string() + " --weighted --k 99/100").exit_code == 1);
    const auto report = run("solve fas " + w.string() + " --weighted --minimize --json");
    CHECK(report.exit_code == 0);
    CHECK(report.output.find("\"objective\": \"1\"") != std::string::npos);
    // --weighted demands a weighted instance
    CHECK(run("solve fas " + triangle_file() + " --weighted --k 1").exit_code == 2);
}
