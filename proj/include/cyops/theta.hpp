#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypergeom.hpp"
#include "ratfunc.hpp"

namespace cyops {

// linear factor θ + c as a polynomial in θ
inline Poly th(const rational& c = 0) { return Poly{c, 1}; }

// Σ_j t^j P_j(θ), stored as the polynomials P_j in θ
class ThetaOperator {
public:
    ThetaOperator() = default;
    explicit ThetaOperator(std::vector<Poly> tpolys) : P_(std::move(tpolys)) { trim(); }

    static ThetaOperator theta() { return ThetaOperator({th()}); }
    static ThetaOperator t_power(int j, const Poly& P = Poly(1)) {
        std::vector<Poly> v(j + 1);
        v[j] = P;
        return ThetaOperator(std::move(v));
    }

    // coefficient lists indexed by θ-power, each a polynomial in t
    static ThetaOperator from_theta_coeffs(const std::vector<Poly>& c) {
        int deg = -1;
        for (auto& p : c) deg = std::max(deg, p.degree());
        std::vector<Poly> P(std::max(deg + 1, 0));
        for (int j = 0; j <= deg; ++j) {
            std::vector<rational> v(c.size());
            for (size_t k = 0; k < c.size(); ++k) v[k] = c[k][j];
            P[j] = Poly(std::move(v));
        }
        return ThetaOperator(std::move(P));
    }

    const std::vector<Poly>& tpolys() const { return P_; }
    const Poly& tpoly(int j) const {
        static const Poly zero;
        return j >= 0 && j < (int)P_.size() ? P_[j] : zero;
    }
    int degree() const { return static_cast<int>(P_.size()) - 1; }
    int order() const {
        int n = -1;
        for (auto& p : P_) n = std::max(n, p.degree());
        return n;
    }
    bool is_zero() const { return P_.empty(); }

    std::vector<Poly> theta_coeffs() const {
        int n = order();
        std::vector<Poly> c(n + 1);
        for (int k = 0; k <= n; ++k) {
            std::vector<rational> v(P_.size());
            for (size_t j = 0; j < P_.size(); ++j) v[j] = P_[j][k];
            c[k] = Poly(std::move(v));
        }
        return c;
    }

    friend ThetaOperator operator+(const ThetaOperator& a, const ThetaOperator& b) {
        std::vector<Poly> v(std::max(a.P_.size(), b.P_.size()));
        for (size_t j = 0; j < v.size(); ++j) v[j] = a.tpoly(j) + b.tpoly(j);
        return ThetaOperator(std::move(v));
    }
    friend ThetaOperator operator-(const ThetaOperator& a) {
        ThetaOperator r = a;
        for (auto& p : r.P_) p = -p;
        return r;
    }
    friend ThetaOperator operator-(const ThetaOperator& a, const ThetaOperator& b) { return a + (-b); }
    friend ThetaOperator operator*(const rational& s, const ThetaOperator& a) {
        ThetaOperator r = a;
        for (auto& p : r.P_) p *= s;
        r.trim();
        return r;
    }
    // (t^a P(θ)) (t^b Q(θ)) = t^(a+b) P(θ+b) Q(θ)
    friend ThetaOperator operator*(const ThetaOperator& a, const ThetaOperator& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Poly> v(a.P_.size() + b.P_.size() - 1);
        for (size_t i = 0; i < a.P_.size(); ++i) {
            if (a.P_[i].is_zero()) continue;
            for (size_t j = 0; j < b.P_.size(); ++j) {
                if (b.P_[j].is_zero()) continue;
                v[i + j] += a.P_[i].compose(th(static_cast<long>(j))) * b.P_[j];
            }
        }
        return ThetaOperator(std::move(v));
    }

    // integer content 1 and positive leading coefficient of P_0 (or of the first nonzero P_j)
    ThetaOperator primitive() const {
        if (is_zero()) return {};
        integer l = 1, g = 0;
        for (auto& p : P_)
            for (auto& a : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
        for (auto& p : P_)
            for (auto& a : p.coeffs()) {
                rational x = a * l;
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
            }
        rational s(l, g);
        s.canonicalize();
        for (auto& p : P_)
            if (!p.is_zero()) {
                if (sgn(p.lc()) < 0) s = -s;
                break;
            }
        return s * *this;
    }

    friend bool operator==(const ThetaOperator& a, const ThetaOperator& b) {
        return a.primitive().P_ == b.primitive().P_;
    }

    // indicial polynomial at t=0 equals c·θ^order
    bool is_mum() const {
        const Poly& p = tpoly(0);
        return p.degree() == order() && p.valuation() == order();
    }

    // Σ_j P_j'(θ) t^j: the action on the log t part
    ThetaOperator theta_derivative() const {
        std::vector<Poly> v;
        for (auto& p : P_) v.push_back(p.derivative());
        return ThetaOperator(std::move(v));
    }

    // t ↦ t^k, so θ ↦ θ/k
    ThetaOperator substitute_t_power(int k) const {
        std::vector<Poly> v(static_cast<size_t>(degree()) * k + 1);
        for (size_t j = 0; j < P_.size(); ++j) v[j * k] = P_[j].scale_var(rational(1, k));
        return ThetaOperator(std::move(v));
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t j = 0; j < P_.size(); ++j) {
            if (P_[j].is_zero()) continue;
            std::string body = P_[j].str("θ");
            std::string tp = j == 0 ? "" : (j == 1 ? "t" : "t^" + std::to_string(j));
            if (s.empty())
                s = tp.empty() ? body : tp + "*(" + body + ")";
            else
                s += " + " + tp + "*(" + body + ")";
        }
        return s;
    }

private:
    void trim() {
        while (!P_.empty() && P_.back().is_zero()) P_.pop_back();
    }
    std::vector<Poly> P_;
};

inline Series apply(const ThetaOperator& L, const Series& f) {
    int N = f.order();
    Series r(N);
    for (int n = 0; n <= N; ++n) {
        rational s = 0;
        for (int j = 0; j <= std::min(n, L.degree()); ++j) {
            const Poly& P = L.tpoly(j);
            if (P.is_zero() || sgn(f[n - j]) == 0) continue;
            s += P.eval(rational(n - j)) * f[n - j];
        }
        r[n] = s;
    }
    return r;
}

struct Annihilation {
    bool ok;
    std::optional<int> first_nonzero;
    int checked_through;
};

inline Annihilation annihilates(const ThetaOperator& L, const Series& f) {
    int upto = f.order() - std::max(L.degree(), 0);
    auto idx = first_nonzero(apply(L, f), upto);
    return {!idx.has_value(), idx, upto};
}

// Π_{b ∈ lower ∪ {1}} (θ + p(b−1)) − t^p Π_a (θ + p a)
inline ThetaOperator hypergeom_operator(const HypergeomSpec& spec) {
    if (!spec.prefactor.empty()) throw error(errc::unsupported_spec, "prefactored spec has no plain operator");
    int p = spec.argument_power;
    if (p < 1 || p > 2) throw error(errc::unsupported_spec, "argument power must be 1 or 2");
    Poly lo = th();
    for (auto& b : spec.lower) lo = lo * th(p * (b - 1));
    Poly up(1);
    for (auto& a : spec.upper) up = up * th(p * a);
    return ThetaOperator::t_power(0, lo) - ThetaOperator::t_power(p, up);
}

// holomorphic solution with constant term 1, for operators with P_0 = c θ^n
inline Series frobenius(const ThetaOperator& L, int N) {
    if (!L.is_mum()) throw error(errc::unsupported_spec, "operator has no MUM point at t=0");
    Series f(N);
    f[0] = 1;
    const Poly& P0 = L.tpoly(0);
    for (int n = 1; n <= N; ++n) {
        rational s = 0;
        for (int j = 1; j <= std::min(n, L.degree()); ++j) s += L.tpoly(j).eval(rational(n - j)) * f[n - j];
        f[n] = -s / P0.eval(rational(n));
    }
    return f;
}

// f1 with y0·log t + f1 a solution, f1(0) = 0
inline Series frobenius_log(const ThetaOperator& L, const Series& y0) {
    int N = y0.order();
    Series g = apply(L.theta_derivative(), y0);
    Series f(N);
    const Poly& P0 = L.tpoly(0);
    for (int n = 1; n <= N; ++n) {
        rational s = g[n];
        for (int j = 1; j <= std::min(n, L.degree()); ++j) s += L.tpoly(j).eval(rational(n - j)) * f[n - j];
        f[n] = -s / P0.eval(rational(n));
    }
    return f;
}

// θ applied to a series
inline Series theta_of(const Series& f) {
    Series r = f;
    for (int n = 0; n <= r.order(); ++n) r[n] *= n;
    return r;
}

// ∂^n + Σ a_i ∂^i, coefficients are rational functions of t
class DOperator {
public:
    DOperator() = default;
    explicit DOperator(std::vector<RatFunc> a) : a_(std::move(a)) { normalize(); }

    int order() const { return static_cast<int>(a_.size()) - 1; }
    const RatFunc& operator[](int i) const { return a_[i]; }
    const std::vector<RatFunc>& coeffs() const { return a_; }
    friend bool operator==(const DOperator& x, const DOperator& y) { return x.a_ == y.a_; }

    std::string str() const {
        std::string s;
        for (int i = order(); i >= 0; --i) {
            if (a_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += (i == order() ? "" : "(" + a_[i].str() + ")*") + (i ? "∂^" + std::to_string(i) : "1");
        }
        return s;
    }

private:
    void normalize() {
        if (a_.empty()) throw error(errc::unsupported_spec, "empty operator");
        RatFunc lead = a_.back();
        if (lead.is_zero()) throw error(errc::unsupported_spec, "zero leading coefficient");
        if (!(lead == RatFunc(1)))
            for (auto& c : a_) c = c / lead;
    }
    std::vector<RatFunc> a_;
};

inline std::vector<std::vector<rational>> stirling2_table(int n) {
    std::vector<std::vector<rational>> S(n + 1, std::vector<rational>(n + 1));
    S[0][0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= k; ++i) S[k][i] = S[k - 1][i - 1] + rational(i) * S[k - 1][i];
    return S;
}

// θ^k = Σ_i S(k,i) t^i ∂^i
inline DOperator to_d_form(const ThetaOperator& L) {
    auto c = L.theta_coeffs();
    int n = L.order();
    auto S = stirling2_table(n);
    std::vector<RatFunc> a(n + 1);
    for (int i = 0; i <= n; ++i) {
        Poly s;
        for (int k = i; k <= n; ++k)
            if (sgn(S[k][i]) != 0) s += c[k] * S[k][i];
        a[i] = RatFunc(s * Poly::monomial(1, i));
    }
    return DOperator(std::move(a));
}

// ∂^i = t^{-i} θ(θ−1)…(θ−i+1), then clear denominators
inline ThetaOperator from_d_form(const DOperator& D) {
    int n = D.order();
    std::vector<RatFunc> c(n + 1);
    Poly ff(1);
    for (int i = 0; i <= n; ++i) {
        if (i > 0) ff = ff * th(-(i - 1));
        RatFunc w = D[i] / RatFunc(Poly::monomial(1, i));
        for (int k = 0; k <= i; ++k)
            if (sgn(ff[k]) != 0) c[k] += w * RatFunc(ff[k]);
    }
    Poly den(1);
    for (auto& x : c) den = den / gcd(den, x.den()) * x.den();
    std::vector<Poly> tc(n + 1);
    for (int k = 0; k <= n; ++k) tc[k] = c[k].num() * (den / c[k].den());
    return ThetaOperator::from_theta_coeffs(tc).primitive();
}

inline RatFunc deriv(const RatFunc& f, int k = 1) {
    RatFunc r = f;
    for (int i = 0; i < k; ++i) r = r.derivative();
    return r;
}

inline rational binomial(int n, int k) {
    integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return rational(r);
}

// L* = ∂^n + Σ (−1)^{n+i} ∂^i ∘ a_i
inline DOperator dual(const DOperator& D) {
    int n = D.order();
    std::vector<RatFunc> r(n + 1);
    r[n] = RatFunc(1);
    for (int i = 0; i < n; ++i) {
        if (D[i].is_zero()) continue;
        rational sign = (n + i) % 2 ? -1 : 1;
        for (int j = 0; j <= i; ++j) r[j] += RatFunc(sign * binomial(i, j)) * deriv(D[i], i - j);
    }
    return DOperator(std::move(r));
}

inline RatFunc self_dual4_residual(const DOperator& D) {
    if (D.order() != 4) throw error(errc::unsupported_spec, "order 4 expected");
    const RatFunc &a3 = D[3], &a2 = D[2], &a1 = D[1];
    return RatFunc(8) * a1 - RatFunc(8) * deriv(a2) + RatFunc(4) * deriv(a3, 2) - RatFunc(4) * a2 * a3 +
           RatFunc(6) * a3 * deriv(a3) + a3 * a3 * a3;
}

inline bool is_self_dual_order4(const DOperator& D) { return self_dual4_residual(D).is_zero(); }

inline std::pair<RatFunc, RatFunc> self_dual5_residuals(const DOperator& D) {
    if (D.order() != 5) throw error(errc::unsupported_spec, "order 5 expected");
    auto R = [](long n, long d) { return RatFunc(Q(n, d)); };
    const RatFunc &b4 = D[4], &b3 = D[3], &b2 = D[2], &b1 = D[1], &b0 = D[0];
    RatFunc b4p = deriv(b4), b4pp = deriv(b4, 2), b3p = deriv(b3);
    RatFunc c1 = b2 - (R(3, 2) * b3p + R(3, 5) * b4 * b3 - b4pp - R(6, 5) * b4 * b4p - R(4, 25) * b4 * b4 * b4);
    RatFunc c2 = b0 - (R(1, 5) * deriv(b4, 4) - R(1, 4) * deriv(b3, 3) + R(2, 5) * b4 * deriv(b4, 3) -
                       R(3, 10) * b4 * deriv(b3, 2) + (R(8, 25) * b4 * b4 + R(4, 5) * b4p - R(1, 10) * b3) * b4pp +
                       R(1, 2) * deriv(b1) + (R(-3, 25) * b4 * b4 - R(3, 10) * b4p) * b3p +
                       R(12, 25) * b4 * b4p * b4p + (R(-3, 25) * b3 * b4 + R(16, 125) * b4 * b4 * b4) * b4p -
                       R(2, 125) * b3 * b4 * b4 * b4 + R(1, 5) * b1 * b4 + R(16, 3125) * b4.pow(5));
    return {c1, c2};
}

inline bool is_self_dual_order5(const DOperator& D) {
    auto [c1, c2] = self_dual5_residuals(D);
    return c1.is_zero() && c2.is_zero();
}

// minimal monic operator annihilating the first basis element of a differential module:
// basis e_0..e_{d-1}, with e_l' = Σ_k M[l][k] e_k
inline DOperator minimal_annihilator(const std::vector<std::vector<RatFunc>>& M, int max_order) {
    size_t d = M.size();
    std::vector<std::vector<RatFunc>> vs;
    std::vector<RatFunc> v(d);
    v[0] = RatFunc(1);
    // echelon rows with the combination of the v's that produced them
    struct Row {
        std::vector<RatFunc> vec, combo;
        size_t pivot;
    };
    std::vector<Row> rows;
    for (int m = 0; m <= max_order; ++m) {
        vs.push_back(v);
        std::vector<RatFunc> vec = v, combo(m + 1);
        combo[m] = RatFunc(1);
        for (auto& r : rows) {
            if (vec[r.pivot].is_zero()) continue;
            RatFunc f = vec[r.pivot] / r.vec[r.pivot];
            for (size_t k = 0; k < d; ++k)
                if (!r.vec[k].is_zero()) vec[k] -= f * r.vec[k];
            for (size_t k = 0; k < r.combo.size(); ++k)
                if (!r.combo[k].is_zero()) combo[k] -= f * r.combo[k];
        }
        size_t piv = d;
        for (size_t k = 0; k < d; ++k)
            if (!vec[k].is_zero()) {
                piv = k;
                break;
            }
        if (piv == d) return DOperator(combo);
        rows.push_back({vec, combo, piv});
        std::vector<RatFunc> w(d);
        for (size_t k = 0; k < d; ++k) {
            if (v[k].is_zero()) continue;
            w[k] += v[k].derivative();
            for (size_t j = 0; j < d; ++j)
                if (!M[k][j].is_zero()) w[j] += v[k] * M[k][j];
        }
        v = std::move(w);
    }
    throw error(errc::degenerate_elimination, "no dependence up to order " + std::to_string(max_order));
}

// w = y1 y2' − y2 y1'; coordinates w_ij = y1^(i) y2^(j) − y2^(i) y1^(j), 0 ≤ i < j ≤ 3
inline DOperator exterior_square(const DOperator& D) {
    if (D.order() != 4) throw error(errc::unsupported_spec, "order 4 expected");
    std::vector<std::pair<int, int>> idx{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    auto find = [&](int i, int j) {
        for (size_t k = 0; k < idx.size(); ++k)
            if (idx[k] == std::make_pair(i, j)) return static_cast<int>(k);
        return -1;
    };
    std::vector<std::vector<RatFunc>> M(6, std::vector<RatFunc>(6));
    // add c·w_{i,j} with the convention w_{i,i} = 0, w_{j,i} = −w_{i,j}
    auto put = [&](std::vector<RatFunc>& row, int i, int j, const RatFunc& c) {
        if (i == j) return;
        if (i < j)
            row[find(i, j)] += c;
        else
            row[find(j, i)] -= c;
    };
    for (size_t k = 0; k < idx.size(); ++k) {
        auto [i, j] = idx[k];
        for (auto [a, b] : {std::make_pair(i + 1, j), std::make_pair(i, j + 1)}) {
            if (a < 4 && b < 4) {
                put(M[k], a, b, RatFunc(1));
            } else if (b == 4) {
                for (int l = 0; l < 4; ++l) put(M[k], a, l, -D[l]);
            } else {
                for (int l = 0; l < 4; ++l) put(M[k], l, b, -D[l]);
            }
        }
    }
    return minimal_annihilator(M, 6);
}

// y², y y', y'²
inline DOperator symmetric_square(const DOperator& D) {
    if (D.order() != 2) throw error(errc::unsupported_spec, "order 2 expected");
    const RatFunc &a1 = D[1], &a0 = D[0];
    std::vector<std::vector<RatFunc>> M{
        {RatFunc(0), RatFunc(2), RatFunc(0)},
        {-a0, -a1, RatFunc(1)},
        {RatFunc(0), RatFunc(-2) * a0, RatFunc(-2) * a1},
    };
    return minimal_annihilator(M, 3);
}

// Π p_k^{r_k}
struct TwistFactor {
    std::vector<std::pair<Poly, rational>> exponents;

    RatFunc log_derivative() const {
        RatFunc r;
        for (auto& [p, e] : exponents) r += RatFunc(e) * RatFunc(p.derivative(), p);
        return r;
    }
    TwistFactor pow(const rational& k) const {
        TwistFactor f = *this;
        for (auto& pe : f.exponents) pe.second *= k;
        return f;
    }
};

// F^{-1} ∘ D ∘ F, i.e. ∂ ↦ ∂ + F'/F
inline DOperator conjugate(const DOperator& D, const TwistFactor& F) {
    RatFunc ell = F.log_derivative();
    int n = D.order();
    std::vector<RatFunc> res(n + 1), cur{RatFunc(1)};
    for (int i = 0; i <= n; ++i) {
        for (size_t k = 0; k < cur.size(); ++k)
            if (!cur[k].is_zero()) res[k] += D[i] * cur[k];
        std::vector<RatFunc> nxt(cur.size() + 1);
        for (size_t k = 0; k < cur.size(); ++k) {
            if (cur[k].is_zero()) continue;
            nxt[k] += cur[k].derivative() + ell * cur[k];
            nxt[k + 1] += cur[k];
        }
        cur = std::move(nxt);
    }
    return DOperator(std::move(res));
}

inline ThetaOperator conjugate(const ThetaOperator& L, const TwistFactor& F) {
    return from_d_form(conjugate(to_d_form(L), F));
}

// the order-4 operator whose exterior square is D
inline DOperator yifan_yang_pullback(const DOperator& D) {
    if (D.order() != 5) throw error(errc::unsupported_spec, "order 5 expected");
    if (!is_self_dual_order5(D)) throw error(errc::not_self_dual, "operator fails the order-5 self-duality conditions");
    auto R = [](long n, long d) { return RatFunc(Q(n, d)); };
    const RatFunc &b4 = D[4], &b3 = D[3], &b1 = D[1];
    RatFunc b4p = deriv(b4);
    RatFunc a3 = R(2, 5) * b4;
    RatFunc a2 = R(-7, 50) * b4 * b4 - R(2, 5) * b4p + R(1, 2) * b3;
    RatFunc a1 = R(-9, 250) * b4 * b4 * b4 - R(12, 25) * b4 * b4p + R(1, 10) * b4 * b3 - R(3, 5) * deriv(b4, 2) +
                 R(1, 2) * deriv(b3);
    RatFunc a0 = R(-2, 5) * deriv(b4, 3) + R(3, 8) * deriv(b3, 2) - R(23, 50) * b4 * deriv(b4, 2) +
                 R(1, 5) * b4 * deriv(b3) - R(27, 100) * b4p * b4p + (R(-18, 125) * b4 * b4 - R(1, 20) * b3) * b4p -
                 R(19, 10000) * b4.pow(4) - R(3, 200) * b4 * b4 * b3 + R(1, 16) * b3 * b3 - R(1, 4) * b1;
    return DOperator({a0, a1, a2, a3, RatFunc(1)});
}

} // namespace cyops
