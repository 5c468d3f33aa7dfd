#include "semicut/digraph_io.hpp"

#include "semicut/rational.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace semicut {

namespace {

struct LineReader {
    std::istream& in;
    int line_no = 0;

    /** Next line with comments stripped and trailing whitespace removed;
     *  skips lines that end up empty. */
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
            while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t' || raw.back() == '\r'))
                raw.pop_back();
            size_t start = raw.find_first_not_of(" \t");
            if (start == std::string::npos) continue;
            out = raw.substr(start);
            return true;
        }
        return false;
    }
};

} // namespace

SemiCompleteDigraph read_digraph(std::istream& in) {
    LineReader reader{in};
    std::string line;

    if (!reader.next(line)) throw ParseError(1, 1, "empty input, expected header");
    std::istringstream header(line);
    std::string magic;
    long long n = -1;
    std::string weighted_tag;
    header >> magic >> n;
    if (magic != "semicomplete" || header.fail())
        throw ParseError(reader.line_no, 1, "expected header 'semicomplete <n> [weighted]'");
    if (n < 0) throw ParseError(reader.line_no, 1, "vertex count must be non-negative");
    bool weighted = false;
    if (header >> weighted_tag) {
        if (weighted_tag != "weighted")
            throw ParseError(reader.line_no, 1, "unknown header flag '" + weighted_tag + "'");
        weighted = true;
    }

    std::vector<std::vector<bool>> matrix(n, std::vector<bool>(n, false));
    for (long long u = 0; u < n; ++u) {
        if (!reader.next(line))
            throw ParseError(reader.line_no + 1, 1, "missing matrix row " + std::to_string(u));
        if (static_cast<long long>(line.size()) != n)
            throw ParseError(reader.line_no, static_cast<int>(line.size()) + 1,
                             "matrix row has " + std::to_string(line.size()) +
                                 " entries, expected " + std::to_string(n));
        for (long long v = 0; v < n; ++v) {
            if (line[v] == '1')
                matrix[u][v] = true;
            else if (line[v] != '0')
                throw ParseError(reader.line_no, static_cast<int>(v) + 1,
                                 "matrix entries must be '0' or '1'");
        }
    }

    std::vector<std::tuple<int, int, Weight>> weights;
    if (weighted) {
        while (reader.next(line)) {
            std::istringstream ws(line);
            long long u, v;
            std::string wtext;
            ws >> u >> v >> wtext;
            if (ws.fail() || u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError(reader.line_no, 1, "expected weight line 'u v w'");
            try {
                weights.emplace_back(static_cast<int>(u), static_cast<int>(v),
                                     parse_weight(wtext));
            } catch (const InvalidParameterError& e) {
                throw ParseError(reader.line_no, 1, e.what());
            }
        }
    } else if (reader.next(line)) {
        throw ParseError(reader.line_no, 1, "unexpected content after matrix");
    }

    try {
        return weighted ? SemiCompleteDigraph::validate(matrix, weights)
                        : SemiCompleteDigraph::validate(matrix);
    } catch (const Error& e) {
        throw ParseError(reader.line_no, 1, std::string("invalid instance: ") + e.what());
    }
}

SemiCompleteDigraph read_digraph(const std::string& text) {
    std::istringstream in(text);
    return read_digraph(in);
}

SemiCompleteDigraph read_digraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    return read_digraph(in);
}

void write_digraph(const SemiCompleteDigraph& t, std::ostream& out) {
    const int n = t.size();
    out << "semicomplete " << n;
    if (t.is_weighted()) out << " weighted";
    out << '\n';
    for (int u = 0; u < n; ++u) {
        std::string row(n, '0');
        for (int v = 0; v < n; ++v)
            if (t.has_arc(u, v)) row[v] = '1';
        out << row << '\n';
    }
    if (t.is_weighted())
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (t.has_arc(u, v))
                    out << u << ' ' << v << ' ' << weight_to_string(t.arc_weight(u, v)) << '\n';
}

std::string write_digraph(const SemiCompleteDigraph& t) {
    std::ostringstream out;
    write_digraph(t, out);
    return out.str();
}

void write_digraph_file(const SemiCompleteDigraph& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    write_digraph(t, out);
}

} // namespace semicut
