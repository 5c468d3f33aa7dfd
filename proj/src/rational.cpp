#include "semicut/rational.hpp"

#include "semicut/error.hpp"

#include <cctype>

namespace semicut {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Weight parse_weight(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }

    Weight value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw InvalidParameterError("malformed rational: " + text);
        value = Weight(BigInt(num), BigInt(den));
        if (value.get_den() == 0) throw InvalidParameterError("zero denominator: " + text);
        value.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        const std::string whole = s.substr(0, dot);
        const std::string frac = s.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
            throw InvalidParameterError("malformed decimal: " + text);
        BigInt scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt numerator = (whole.empty() ? BigInt(0) : BigInt(whole)) * scale + BigInt(frac);
        value = Weight(numerator, scale);
        value.canonicalize();
    } else {
        if (!all_digits(s)) throw InvalidParameterError("malformed number: " + text);
        value = Weight(BigInt(s));
    }

    if (negative) value = -value;
    return value;
}

std::string weight_to_string(const Weight& w) {
    if (w.get_den() == 1) return w.get_num().get_str();
    return w.get_num().get_str() + "/" + w.get_den().get_str();
}

} // namespace semicut
