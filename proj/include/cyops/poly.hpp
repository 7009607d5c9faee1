#pragma once
#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace cyops {

// dense univariate polynomial, ascending coefficients
class Poly {
public:
    Poly() = default;
    Poly(const rational& c) {
        if (sgn(c) != 0) c_.push_back(c);
    }
    Poly(long c) : Poly(rational(c)) {}
    Poly(std::initializer_list<rational> cs) : c_(cs) { trim(); }
    explicit Poly(std::vector<rational> cs) : c_(std::move(cs)) { trim(); }

    static Poly monomial(const rational& c, int k) {
        std::vector<rational> v(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }
    static Poly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<rational>& coeffs() const { return c_; }
    rational operator[](int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : rational(0); }
    rational lc() const { return c_.empty() ? rational(0) : c_.back(); }
    int valuation() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (sgn(c_[i]) != 0) return static_cast<int>(i);
        return -1;
    }

    rational eval(const rational& x) const {
        rational r = 0;
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<rational> v(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
        return Poly(std::move(v));
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const rational& s) {
        if (sgn(s) == 0) {
            c_.clear();
            return *this;
        }
        for (auto& a : c_) a *= s;
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& c : a.c_) c = -c;
        return a;
    }
    friend Poly operator*(Poly a, const rational& s) { return a *= s; }
    friend Poly operator*(const rational& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<rational> v(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly shifted(int k) const {  // times x^k, k >= 0
        if (is_zero()) return {};
        std::vector<rational> v(k, rational(0));
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v));
    }

    Poly pow(unsigned e) const {
        Poly r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // p(q(x))
    Poly compose(const Poly& q) const {
        Poly r;
        for (size_t i = c_.size(); i-- > 0;) r = r * q + Poly(c_[i]);
        return r;
    }

    // p(c*x)
    Poly scale_var(const rational& c) const {
        std::vector<rational> v = c_;
        rational f = 1;
        for (auto& a : v) {
            a *= f;
            f *= c;
        }
        return Poly(std::move(v));
    }

    Poly monic() const {
        if (is_zero()) return {};
        return *this * rational(1 / lc());
    }

    // integer coefficients with gcd 1 and positive leading coefficient
    Poly primitive() const {
        if (is_zero()) return {};
        integer l = 1, g = 0;
        for (auto& a : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
        std::vector<rational> v(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) {
            v[i] = c_[i] * l;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_num_mpz_t());
        }
        rational s(1, g);
        s.canonicalize();
        if (sgn(v.back()) < 0) s = -s;
        for (auto& a : v) a *= s;
        return Poly(std::move(v));
    }

    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }

    std::string str(const std::string& var = "t") const;

private:
    std::vector<rational> c_;
};

inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw error(errc::series_division_pole, "polynomial division by zero");
    std::vector<rational> r = a.coeffs();
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {Poly(), a};
    std::vector<rational> q(dq + 1);
    rational inv = 1 / b.lc();
    for (int k = dq; k >= 0; --k) {
        rational c = r[k + db] * inv;
        q[k] = c;
        if (sgn(c) == 0) continue;
        for (int j = 0; j <= db; ++j) r[k + j] -= c * b[j];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

inline bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = r.is_zero() ? r : r.primitive();
    }
    return a.monic();
}

// multiplicity of d in a (d non-constant)
inline int order_at(const Poly& a, const Poly& d) {
    if (a.is_zero()) return 1 << 20;
    int k = 0;
    Poly x = a;
    while (true) {
        auto [q, r] = divmod(x, d);
        if (!r.is_zero()) break;
        x = std::move(q);
        ++k;
    }
    return k;
}

// squarefree decomposition: pairs (factor, multiplicity), factors monic and squarefree
inline std::vector<std::pair<Poly, int>> squarefree(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    if (f.degree() < 1) return out;
    Poly a = f.monic();
    Poly b = a.derivative();
    Poly c = gcd(a, b);
    Poly w = a / c;
    int i = 1;
    while (!w.is_constant()) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (!z.is_constant()) out.push_back({z.monic(), i});
        ++i;
        w = y;
        c = c / y;
    }
    return out;
}

inline std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        rational a = c_[i];
        if (sgn(a) == 0) continue;
        bool neg = sgn(a) < 0;
        rational m = abs(a);
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        bool one = (m == 1);
        if (i == 0 || !one) s += m.get_str();
        if (i > 0) {
            if (!one) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace cyops
