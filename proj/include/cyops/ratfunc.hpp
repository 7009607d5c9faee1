#pragma once
#include <string>

#include "poly.hpp"

namespace cyops {

// num/den in lowest terms, den monic
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const Poly& p) : num_(p), den_(1) {}
    RatFunc(const rational& c) : num_(c), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const Poly& n, const Poly& d) : num_(n), den_(d) { normalize(); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0; }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }
    rational eval(const rational& x) const { return num_.eval(x) / den_.eval(x); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        Poly g = gcd(a.den_, b.den_);
        Poly ad = a.den_ / g;
        return RatFunc(a.num_ * (b.den_ / g) + b.num_ * ad, ad * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        RatFunc r;
        r.num_ = (a.num_ / g1) * (b.num_ / g2);
        r.den_ = (a.den_ / g2) * (b.den_ / g1);
        r.fix_sign();
        return r;
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw error(errc::series_division_pole, "rational function division by zero");
        return a * RatFunc::raw(b.den_, b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc pow(unsigned e) const { return RatFunc::raw(num_.pow(e), den_.pow(e)); }

    std::string str(const std::string& var = "t") const {
        if (is_poly()) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    static RatFunc raw(const Poly& n, const Poly& d) {
        RatFunc r;
        r.num_ = n;
        r.den_ = d;
        r.fix_sign();
        return r;
    }
    void fix_sign() {
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        rational l = den_.lc();
        if (l != 1) {
            rational inv = 1 / l;
            num_ *= inv;
            den_ *= inv;
        }
    }
    void normalize() {
        if (den_.is_zero()) throw error(errc::series_division_pole, "zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        fix_sign();
    }

    Poly num_, den_;
};

} // namespace cyops
