#pragma once

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <string_view>
#include <tuple>

namespace h1::verify {

using ParameterMap = std::map<std::string, std::string>;

/// Shortest-safe round-trip formatting used for parameter echoes.
inline std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct VerificationReport {
    std::string check_name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string oracle;
    ParameterMap parameters;

    /// "k=v;k=v" with keys in sorted order.
    std::string parameter_string() const {
        std::string s;
        for (const auto& [k, v] : parameters) {
            if (!s.empty())
                s += ';';
            s += k;
            s += '=';
            s += v;
        }
        return s;
    }
};

/// passed <=> measured is finite and |measured| <= tolerance.
inline VerificationReport make_report(std::string name, double measured, double tolerance, std::string oracle,
                                      ParameterMap parameters) {
    VerificationReport r{std::move(name), measured, tolerance, false, std::move(oracle), std::move(parameters)};
    r.passed = std::isfinite(measured) && std::fabs(measured) <= tolerance;
    return r;
}

inline bool report_order(const VerificationReport& a, const VerificationReport& b) {
    return std::tie(a.check_name, a.parameters) < std::tie(b.check_name, b.parameters);
}

} // namespace h1::verify
