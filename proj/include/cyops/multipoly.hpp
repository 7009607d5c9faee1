#pragma once
#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "poly.hpp"

namespace cyops {

// variable alphabet; exponents may be negative (Laurent monomials)
inline constexpr int nvars = 8;
inline constexpr std::array<std::string_view, nvars> var_names{"t", "u", "s", "v", "Z", "lam", "a", "b"};

inline int var_index(std::string_view name) {
    for (int i = 0; i < nvars; ++i)
        if (var_names[i] == name) return i;
    if (name == "λ" || name == "lambda") return 5;
    throw error(errc::parse_error, "unknown variable '" + std::string(name) + "'");
}

using Monomial = std::array<int, nvars>;

class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(const rational& c) {
        if (sgn(c) != 0) terms_[Monomial{}] = c;
    }
    MultiPoly(long c) : MultiPoly(rational(c)) {}

    static MultiPoly var(std::string_view name, int e = 1) { return monomial(1, name, e); }
    static MultiPoly monomial(const rational& c, std::string_view name, int e) {
        Monomial m{};
        m[var_index(name)] = e;
        return term(c, m);
    }
    static MultiPoly term(const rational& c, const Monomial& m) {
        MultiPoly p;
        if (sgn(c) != 0) p.terms_[m] = c;
        return p;
    }
    static MultiPoly from_poly(const Poly& p, std::string_view name) {
        MultiPoly r;
        int k = var_index(name);
        for (int i = 0; i <= p.degree(); ++i) {
            if (sgn(p[i]) == 0) continue;
            Monomial m{};
            m[k] = i;
            r.terms_[m] = p[i];
        }
        return r;
    }

    const std::map<Monomial, rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }
    rational constant() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? rational(0) : it->second;
    }

    int degree(std::string_view name) const { return degree(var_index(name)); }
    int degree(int k) const {
        int d = -(1 << 20);
        for (auto& [m, c] : terms_) d = std::max(d, m[k]);
        return d;
    }
    int min_degree(int k) const {
        int d = 1 << 20;
        for (auto& [m, c] : terms_) d = std::min(d, m[k]);
        return d;
    }
    int total_degree() const {
        int d = -(1 << 20);
        for (auto& [m, c] : terms_) {
            int s = 0;
            for (int e : m) s += e;
            d = std::max(d, s);
        }
        return d;
    }
    bool uses(int k) const {
        for (auto& [m, c] : terms_)
            if (m[k] != 0) return true;
        return false;
    }
    bool is_polynomial() const {
        for (auto& [m, c] : terms_)
            for (int e : m)
                if (e < 0) return false;
        return true;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    MultiPoly& operator*=(const rational& s) {
        if (sgn(s) == 0) terms_.clear();
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(MultiPoly a) { return a *= rational(-1); }
    friend MultiPoly operator*(MultiPoly a, const rational& s) { return a *= s; }
    friend MultiPoly operator*(const rational& s, MultiPoly a) { return a *= s; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) {
                Monomial m;
                for (int i = 0; i < nvars; ++i) m[i] = ma[i] + mb[i];
                r.add(m, ca * cb);
            }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    MultiPoly pow(unsigned e) const {
        MultiPoly r(1), x = *this;
        while (e) {
            if (e & 1) r *= x;
            e >>= 1;
            if (e) x *= x;
        }
        return r;
    }

    // value at a full assignment of the used variables
    rational eval(const std::map<std::string, rational>& point) const {
        std::array<rational, nvars> x;
        std::array<bool, nvars> have{};
        for (auto& [n, v] : point) {
            int k = var_index(n);
            x[k] = v;
            have[k] = true;
        }
        rational r = 0;
        for (auto& [m, c] : terms_) {
            rational term = c;
            for (int i = 0; i < nvars; ++i) {
                if (m[i] == 0) continue;
                if (!have[i]) throw error(errc::parse_error, "no value for " + std::string(var_names[i]));
                term *= cyops::pow(x[i], m[i]);
            }
            r += term;
        }
        return r;
    }

    // replace a variable by a rational number
    MultiPoly specialize(std::string_view name, const rational& value) const {
        int k = var_index(name);
        MultiPoly r;
        for (auto& [m, c] : terms_) {
            Monomial mm = m;
            mm[k] = 0;
            r.add(mm, c * cyops::pow(value, m[k]));
        }
        return r;
    }

    // replace a variable by a Laurent polynomial; negative powers need a monomial image
    MultiPoly substitute(std::string_view name, const MultiPoly& image) const {
        int k = var_index(name);
        MultiPoly inv;
        bool have_inv = false;
        std::map<int, MultiPoly> cache;
        MultiPoly r;
        for (auto& [m, c] : terms_) {
            Monomial mm = m;
            int e = mm[k];
            mm[k] = 0;
            auto it = cache.find(e);
            if (it == cache.end()) {
                MultiPoly p;
                if (e >= 0) {
                    p = image.pow(e);
                } else {
                    if (!have_inv) {
                        inv = image.monomial_inverse();
                        have_inv = true;
                    }
                    p = inv.pow(-e);
                }
                it = cache.emplace(e, std::move(p)).first;
            }
            r += term(c, mm) * it->second;
        }
        return r;
    }

    // sum c_i N^i D^(w-i) over the powers i of the variable: the numerator of p(N/D) * D^w
    MultiPoly substitute_fraction(std::string_view name, const MultiPoly& N, const MultiPoly& D, int w) const {
        int k = var_index(name);
        if (min_degree(k) < 0 || degree(k) > w)
            throw error(errc::non_polynomial_result, "weight too small for substitution");
        std::vector<MultiPoly> coeff(w + 1);
        for (auto& [m, c] : terms_) {
            Monomial mm = m;
            int e = mm[k];
            mm[k] = 0;
            coeff[e] += term(c, mm);
        }
        std::vector<MultiPoly> Np(w + 1), Dp(w + 1);
        Np[0] = Dp[0] = MultiPoly(1);
        for (int i = 1; i <= w; ++i) {
            Np[i] = Np[i - 1] * N;
            Dp[i] = Dp[i - 1] * D;
        }
        MultiPoly r;
        for (int i = 0; i <= w; ++i)
            if (!coeff[i].is_zero()) r += coeff[i] * Np[i] * Dp[w - i];
        return r;
    }

    MultiPoly monomial_inverse() const {
        if (terms_.size() != 1) throw error(errc::non_polynomial_result, "negative power of a non-monomial");
        auto& [m, c] = *terms_.begin();
        Monomial mm;
        for (int i = 0; i < nvars; ++i) mm[i] = -m[i];
        return term(1 / c, mm);
    }

    MultiPoly derivative(std::string_view name) const {
        int k = var_index(name);
        MultiPoly r;
        for (auto& [m, c] : terms_) {
            if (m[k] == 0) continue;
            Monomial mm = m;
            mm[k] -= 1;
            r.add(mm, c * m[k]);
        }
        return r;
    }

    Poly to_poly(std::string_view name) const {
        int k = var_index(name);
        std::vector<rational> v;
        for (auto& [m, c] : terms_) {
            for (int i = 0; i < nvars; ++i)
                if (i != k && m[i] != 0)
                    throw error(errc::non_polynomial_result,
                                "variable " + std::string(var_names[i]) + " still present");
            if (m[k] < 0) throw error(errc::non_polynomial_result, "negative power");
            if ((int)v.size() <= m[k]) v.resize(m[k] + 1);
            v[m[k]] = c;
        }
        return Poly(std::move(v));
    }

    std::pair<Monomial, rational> leading() const { return *terms_.rbegin(); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            auto& [m, c] = *it;
            bool neg = sgn(c) < 0;
            rational a = abs(c);
            s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            std::string mon;
            for (int i = 0; i < nvars; ++i) {
                if (m[i] == 0) continue;
                if (!mon.empty()) mon += "*";
                mon += std::string(var_names[i]);
                if (m[i] != 1) mon += "^" + std::to_string(m[i]);
            }
            if (mon.empty())
                s += a.get_str();
            else if (a == 1)
                s += mon;
            else
                s += a.get_str() + "*" + mon;
        }
        return s;
    }

private:
    void add(const Monomial& m, const rational& c) {
        if (sgn(c) == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    std::map<Monomial, rational> terms_;
};

// exact division in the polynomial ring; throws if b does not divide a
inline MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw error(errc::series_division_pole, "division by zero polynomial");
    if (!a.is_polynomial() || !b.is_polynomial())
        throw error(errc::non_polynomial_result, "exact division needs polynomials");
    auto [mb, cb] = b.leading();
    MultiPoly q, r = a;
    while (!r.is_zero()) {
        auto [mr, cr] = r.leading();
        Monomial m;
        for (int i = 0; i < nvars; ++i) m[i] = mr[i] - mb[i];
        MultiPoly t = MultiPoly::term(cr / cb, m);
        for (int e : m)
            if (e < 0) throw error(errc::non_polynomial_result, "not exactly divisible");
        q += t;
        r -= t * b;
    }
    return q;
}

inline bool divides(const MultiPoly& d, const MultiPoly& a) {
    try {
        divide_exact(a, d);
        return true;
    } catch (const error&) {
        return false;
    }
}

// multiplicity of h in a, as polynomials
inline int order_at(const MultiPoly& a, const MultiPoly& h) {
    if (a.is_zero()) return 1 << 20;
    int k = 0;
    MultiPoly x = a;
    while (true) {
        try {
            x = divide_exact(x, h);
        } catch (const error&) {
            break;
        }
        ++k;
    }
    return k;
}

inline MultiPoly var(std::string_view name, int e = 1) { return MultiPoly::var(name, e); }

} // namespace cyops
