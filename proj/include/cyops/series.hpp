#pragma once
#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace cyops {

inline constexpr int default_order = 60;

// truncated power series c_0 + c_1 t + ... + c_N t^N
class Series {
public:
    Series() = default;
    explicit Series(int N) : c_(N + 1) {}
    explicit Series(std::vector<rational> c) : c_(std::move(c)) {}
    static Series from_poly(const Poly& p, int N) {
        Series s(N);
        for (int i = 0; i <= std::min(N, p.degree()); ++i) s.c_[i] = p[i];
        return s;
    }
    static Series one(int N) { return from_poly(Poly(1), N); }
    static Series geometric(int N) {
        Series s(N);
        for (auto& a : s.c_) a = 1;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<rational>& coeffs() const { return c_; }
    rational& operator[](int i) { return c_[i]; }
    const rational& operator[](int i) const { return c_[i]; }
    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const rational& a) { return sgn(a) == 0; });
    }

    Series truncate(int N) const {
        Series s(std::min(N, order()));
        std::copy(c_.begin(), c_.begin() + s.c_.size(), s.c_.begin());
        return s;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend Series operator-(Series a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend Series operator*(const rational& s, Series a) {
        for (auto& x : a.c_) x *= s;
        return a;
    }
    friend Series operator*(const Series& a, const Series& b) {
        int N = std::min(a.order(), b.order());
        Series r(N);
        for (int i = 0; i <= N; ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (int j = 0; i + j <= N; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    // truncation-aware equality
    friend bool operator==(const Series& a, const Series& b) { return !first_mismatch(a, b).has_value(); }

    friend std::optional<int> first_mismatch(const Series& a, const Series& b) {
        int N = std::min(a.order(), b.order());
        for (int i = 0; i <= N; ++i)
            if (a.c_[i] != b.c_[i]) return i;
        return std::nullopt;
    }

    // multiplication by t^k, keeping the truncation order; k < 0 drops the first −k terms and −k of precision
    Series shift(int k) const {
        Series r(k < 0 ? order() + k : order());
        for (int i = std::max(0, -k); i <= order() && i + k <= r.order(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    // multiplicative inverse of a unit
    Series inverse() const {
        if (c_.empty() || sgn(c_[0]) == 0) throw error(errc::series_division_pole, "series is not a unit");
        int N = order();
        Series r(N);
        rational inv = 1 / c_[0];
        r.c_[0] = inv;
        for (int n = 1; n <= N; ++n) {
            rational s = 0;
            for (int k = 1; k <= n; ++k) s += c_[k] * r.c_[n - k];
            r.c_[n] = -s * inv;
        }
        return r;
    }

    // d/dt, order drops by one
    Series derivative() const {
        if (order() < 1) return Series(0);
        Series r(order() - 1);
        for (int i = 1; i <= order(); ++i) r.c_[i - 1] = c_[i] * i;
        return r;
    }

private:
    std::vector<rational> c_;
};

inline Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

inline Series hadamard(const Series& f, const Series& g) {
    Series r(std::min(f.order(), g.order()));
    for (int i = 0; i <= r.order(); ++i) r[i] = f[i] * g[i];
    return r;
}

inline Series compose(const Series& f, const Series& g) {
    if (g.order() >= 0 && sgn(g[0]) != 0)
        throw error(errc::nonzero_constant_term, "inner series must vanish at 0");
    int N = std::min(f.order(), g.order());
    Series r(N);
    for (int k = N; k >= 0; --k) {
        r = r * g;
        r[0] += f[k];
    }
    return r;
}

// base^r, base with constant term 1
inline Series algebraic_power(const Series& base, const rational& r, int N) {
    if (base.order() < 0 || base[0] != 1)
        throw error(errc::nonzero_constant_term, "base must have constant term 1");
    Series x = base.truncate(N);
    x[0] = 0;
    int M = std::min(N, x.order());
    // binomial series in x
    Series b(M);
    rational c = 1;
    for (int k = 0; k <= M; ++k) {
        b[k] = c;
        c = c * (r - k) / (k + 1);
    }
    return compose(b, x);
}

inline Series algebraic_power(const Poly& base, const rational& r, int N) {
    return algebraic_power(Series::from_poly(base, N), r, N);
}

// first index where L applied to f fails to vanish, within the checked range
inline std::optional<int> first_nonzero(const Series& s, int upto) {
    for (int i = 0; i <= std::min(upto, s.order()); ++i)
        if (sgn(s[i]) != 0) return i;
    return std::nullopt;
}

// triangular two-variable series, c(m,n) for m+n <= N
class BiSeries {
public:
    BiSeries() = default;
    explicit BiSeries(int N) : N_(N), c_(N + 1) {
        for (int m = 0; m <= N; ++m) c_[m].resize(N + 1 - m);
    }
    int order() const { return N_; }
    rational& at(int m, int n) { return c_[m][n]; }
    const rational& at(int m, int n) const { return c_[m][n]; }
    rational get(int m, int n) const {
        if (m < 0 || n < 0 || m + n > N_) return 0;
        return c_[m][n];
    }

private:
    int N_ = -1;
    std::vector<std::vector<rational>> c_;
};

inline BiSeries biseries_f2(const rational& p, const rational& q, const rational& q2, const rational& r,
                            const rational& r2, int N) {
    auto bad = [&](const rational& x) { return is_integer(x) && sgn(x) <= 0 && -x < N; };
    if (bad(r) || bad(r2)) throw error(errc::pole_in_coefficient, "lower Appell parameter is a non-positive integer");
    BiSeries b(N);
    for (int m = 0; m <= N; ++m) {
        rational row = pochhammer(p, m) * pochhammer(q, m) / (pochhammer(r, m) * pochhammer(rational(1), m));
        for (int n = 0; m + n <= N; ++n) {
            if (n == 0) {
                b.at(m, 0) = row;
                continue;
            }
            // ratio in n: (p+m+n-1)(q'+n-1)/((r'+n-1) n)
            b.at(m, n) = b.at(m, n - 1) * (p + m + n - 1) * (q2 + n - 1) / ((r2 + n - 1) * n);
        }
    }
    return b;
}

} // namespace cyops
