#include "bibnet/format.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace bibnet {

DecimalStyle decimal_style_from_env() {
    const char* v = std::getenv("BIBNET_DECIMAL");
    if (v != nullptr && std::strcmp(v, "comma") == 0)
        return DecimalStyle::Comma;
    return DecimalStyle::Period;
}

static std::string apply_style(std::string s, DecimalStyle style) {
    if (style == DecimalStyle::Comma) {
        for (char& c : s)
            if (c == '.')
                c = ',';
    }
    return s;
}

std::string format_fixed(double value, int decimals, DecimalStyle style) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    // snprintf may emit "-0.000"; normalize so tables stay tidy
    std::string s(buf);
    if (s.find_first_not_of("-0.,") == std::string::npos && s[0] == '-')
        s.erase(0, 1);
    return apply_style(std::move(s), style);
}

std::string format_sig(double value, int significant, DecimalStyle style) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, value);
    return apply_style(std::string(buf), style);
}

std::string format_opt(std::optional<double> value, int decimals, DecimalStyle style) {
    if (!value.has_value())
        return undefined_marker();
    return format_fixed(*value, decimals, style);
}

} // namespace bibnet
