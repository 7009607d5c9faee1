#pragma once
#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace cyops {

using rational = mpq_class;
using integer = mpz_class;

inline rational Q(long n, long d = 1) {
    rational r(n, d);
    r.canonicalize();
    return r;
}

inline rational parse_rational(std::string_view s) {
    std::string str;
    for (char c : s)
        if (c != ' ') str.push_back(c);
    if (str.empty()) throw error(errc::parse_error, "empty rational");
    rational r;
    if (r.set_str(str, 10) != 0 || r.get_den() == 0)
        throw error(errc::parse_error, "bad rational '" + str + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const rational& r) { return r.get_str(); }

inline rational pow(const rational& b, long e) {
    rational r = 1, x = b;
    bool inv = e < 0;
    unsigned long n = inv ? -e : e;
    while (n) {
        if (n & 1) r *= x;
        x *= x;
        n >>= 1;
    }
    return inv ? rational(1 / r) : r;
}

inline rational pochhammer(const rational& a, unsigned n) {
    rational r = 1;
    for (unsigned i = 0; i < n; ++i) r *= a + i;
    return r;
}

inline bool is_integer(const rational& r) { return r.get_den() == 1; }

// exact square root of a non-negative rational, if it exists
inline bool rational_sqrt(const rational& r, rational& out) {
    if (sgn(r) < 0) return false;
    integer n = r.get_num(), d = r.get_den(), sn, sd;
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    out = rational(sn, sd);
    out.canonicalize();
    return true;
}

inline std::vector<rational> parse_rationals(const std::vector<std::string>& v) {
    std::vector<rational> out;
    out.reserve(v.size());
    for (auto& s : v) out.push_back(parse_rational(s));
    return out;
}

} // namespace cyops
