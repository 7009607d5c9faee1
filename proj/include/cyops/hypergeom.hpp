#pragma once
#include <algorithm>
#include <string>
#include <vector>

#include "series.hpp"

namespace cyops {

struct Prefactor {
    std::string base;  // "1-t", "1+t", "1-t^2", "1+t^2"
    rational exponent;
};

inline Poly prefactor_base(const std::string& b) {
    if (b == "1-t") return Poly{1, -1};
    if (b == "1+t") return Poly{1, 1};
    if (b == "1-t^2") return Poly{1, 0, -1};
    if (b == "1+t^2") return Poly{1, 0, 1};
    throw error(errc::parse_error, "unknown prefactor base '" + b + "'");
}

struct HypergeomSpec {
    std::vector<rational> upper;
    std::vector<rational> lower;  // the implicit m! is not listed
    int argument_power = 1;
    std::vector<Prefactor> prefactor;

    friend bool operator==(const HypergeomSpec& a, const HypergeomSpec& b) {
        auto sorted = [](std::vector<rational> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        if (a.argument_power != b.argument_power || a.prefactor.size() != b.prefactor.size()) return false;
        for (size_t i = 0; i < a.prefactor.size(); ++i)
            if (a.prefactor[i].base != b.prefactor[i].base || a.prefactor[i].exponent != b.prefactor[i].exponent)
                return false;
        return sorted(a.upper) == sorted(b.upper) && sorted(a.lower) == sorted(b.lower);
    }

    std::string str() const {
        auto list = [](const std::vector<rational>& v) {
            std::string s;
            for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
            return s;
        };
        std::string s = std::to_string(upper.size()) + "F" + std::to_string(lower.size()) + "(" + list(upper) + ";" +
                        list(lower) + "|" + (argument_power == 1 ? "t" : "t^" + std::to_string(argument_power)) + ")";
        for (auto& p : prefactor) s = "(" + p.base + ")^(" + p.exponent.get_str() + ")*" + s;
        return s;
    }
};

inline HypergeomSpec hg(std::vector<rational> up, std::vector<rational> lo, int power = 1) {
    return HypergeomSpec{std::move(up), std::move(lo), power, {}};
}

inline Series hypergeom_series(const HypergeomSpec& spec, int N) {
    if (spec.argument_power < 1) throw error(errc::unsupported_spec, "argument power must be positive");
    int M = N / spec.argument_power;
    for (auto& b : spec.lower)
        if (is_integer(b) && sgn(b) <= 0 && -b < M)
            throw error(errc::pole_in_coefficient, "lower parameter " + b.get_str() + " hits zero");
    Series s(N);
    rational c = 1;
    for (int m = 0; m <= M; ++m) {
        s[m * spec.argument_power] = c;
        if (m == M) break;
        rational num = 1, den = m + 1;
        for (auto& a : spec.upper) num *= a + m;
        for (auto& b : spec.lower) den *= b + m;
        c = c * num / den;
    }
    for (auto& p : spec.prefactor) s = s * algebraic_power(prefactor_base(p.base), p.exponent, N);
    return s;
}

} // namespace cyops
