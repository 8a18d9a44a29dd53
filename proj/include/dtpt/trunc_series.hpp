#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dtpt/qrat.hpp"
#include "dtpt/rational.hpp"

namespace dtpt {

struct PoleAtOne : std::domain_error {
    explicit PoleAtOne(int idx)
        : std::domain_error("coefficient of t^" + std::to_string(idx) +
                            " has a pole at q = 1"),
          index(idx) {}
    int index;
};

namespace detail {
inline bool is_unit(const Rat& c) { return c != 0; }
inline Rat unit_inverse(const Rat& c) { return 1 / c; }
inline bool is_unit(const QRat& c) { return !c.is_zero(); }
inline QRat unit_inverse(const QRat& c) { return c.inverse(); }
} // namespace detail

// Truncated formal power series in t: exactly N+1 stored coefficients
// c_0..c_N over an exact coefficient ring (Rat or QRat). Values are
// immutable once built; every operation returns a fresh series.
//
// Operations on mismatched truncation orders truncate to the minimum, the
// formal-completion semantics: a degree-N truncation only ever determines
// the first N+1 coefficients of any product.
template <typename R>
class TruncSeries {
public:
    explicit TruncSeries(int trunc, std::string var = "t")
        : var_(std::move(var)), coeffs_(static_cast<size_t>(check_order(trunc)) + 1, R(0)) {}

    TruncSeries(std::vector<R> coeffs, std::string var = "t")
        : var_(std::move(var)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant term");
    }

    static TruncSeries one(int trunc, std::string var = "t") {
        TruncSeries s(trunc, std::move(var));
        s.coeffs_[0] = R(1);
        return s;
    }

    int trunc_order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::string& var() const { return var_; }
    const std::vector<R>& coeffs() const { return coeffs_; }
    const R& coeff(int n) const {
        if (n < 0 || n > trunc_order()) throw std::out_of_range("coefficient index beyond truncation");
        return coeffs_[static_cast<size_t>(n)];
    }

    TruncSeries truncated(int n) const {
        int m = std::min(n, trunc_order());
        return TruncSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + m + 1), var_);
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    static int check_order(int n) {
        if (n < 0) throw std::invalid_argument("negative truncation order");
        return n;
    }

    std::string var_;
    std::vector<R> coeffs_;
};

template <typename R>
TruncSeries<R> series_add(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    int n = std::min(a.trunc_order(), b.trunc_order());
    std::vector<R> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<size_t>(i)] = a.coeff(i) + b.coeff(i);
    return TruncSeries<R>(std::move(c), a.var());
}

template <typename R>
TruncSeries<R> series_sub(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    int n = std::min(a.trunc_order(), b.trunc_order());
    std::vector<R> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<size_t>(i)] = a.coeff(i) - b.coeff(i);
    return TruncSeries<R>(std::move(c), a.var());
}

template <typename R>
TruncSeries<R> series_scalar_mul(const R& s, const TruncSeries<R>& a) {
    std::vector<R> c(a.coeffs());
    for (auto& x : c) x = s * x;
    return TruncSeries<R>(std::move(c), a.var());
}

// Cauchy product truncated to min(N_a, N_b).
template <typename R>
TruncSeries<R> series_mul(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    int n = std::min(a.trunc_order(), b.trunc_order());
    std::vector<R> c(static_cast<size_t>(n) + 1, R(0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            c[static_cast<size_t>(i + j)] = c[static_cast<size_t>(i + j)] + a.coeff(i) * b.coeff(j);
    return TruncSeries<R>(std::move(c), a.var());
}

// Multiplicative inverse by solving the triangular system
// sum_{j<=n} a_j * inv_{n-j} = [n == 0]. Needs a unit constant term.
template <typename R>
TruncSeries<R> series_inv(const TruncSeries<R>& a) {
    if (!detail::is_unit(a.coeff(0)))
        throw std::domain_error("series_inv: constant term is not a unit");
    int n = a.trunc_order();
    R c0inv = detail::unit_inverse(a.coeff(0));
    std::vector<R> inv(static_cast<size_t>(n) + 1, R(0));
    inv[0] = c0inv;
    for (int k = 1; k <= n; ++k) {
        R acc(0);
        for (int j = 1; j <= k; ++j) acc = acc + a.coeff(j) * inv[static_cast<size_t>(k - j)];
        inv[static_cast<size_t>(k)] = R(0) - c0inv * acc;
    }
    return TruncSeries<R>(std::move(inv), a.var());
}

template <typename R>
TruncSeries<R> series_pow(const TruncSeries<R>& a, long k) {
    if (k < 0) return series_pow(series_inv(a), -k);
    TruncSeries<R> acc = TruncSeries<R>::one(a.trunc_order(), a.var());
    TruncSeries<R> base = a;
    long e = k;
    while (e > 0) {
        if (e & 1) acc = series_mul(acc, base);
        base = series_mul(base, base);
        e >>= 1;
    }
    return acc;
}

// c_n := c_n * q^{n * halfpowers / 2}. halfpowers = 2 realises t -> q t.
inline TruncSeries<QRat> series_scale_t(const TruncSeries<QRat>& a, int halfpowers) {
    std::vector<QRat> c(a.coeffs());
    for (int n = 0; n <= a.trunc_order(); ++n)
        c[static_cast<size_t>(n)] = c[static_cast<size_t>(n)] * QRat::q_half_power(n * halfpowers);
    return TruncSeries<QRat>(std::move(c), a.var());
}

// Coefficientwise evaluation at q = 1. Throws PoleAtOne naming the first
// offending coefficient; a pole here is meaningful (individual Hall terms
// genuinely have none-finite q -> 1 limits).
inline TruncSeries<Rat> limit_q1(const TruncSeries<QRat>& a) {
    std::vector<Rat> c(static_cast<size_t>(a.trunc_order()) + 1);
    for (int n = 0; n <= a.trunc_order(); ++n) {
        const QRat& x = a.coeff(n);
        if (x.has_pole_at_one()) throw PoleAtOne(n);
        c[static_cast<size_t>(n)] = x.limit_q1();
    }
    return TruncSeries<Rat>(std::move(c), a.var());
}

inline TruncSeries<QRat> to_qrat_series(const TruncSeries<Rat>& a) {
    std::vector<QRat> c;
    c.reserve(static_cast<size_t>(a.trunc_order()) + 1);
    for (const auto& x : a.coeffs()) c.emplace_back(x);
    return TruncSeries<QRat>(std::move(c), a.var());
}

// Truncation of prod_{k>=1} (1 - t^k)^{-k}, the generating function of
// 3-dimensional partitions. Computed purely by series arithmetic; the
// enumeration oracle lives elsewhere and the two are cross-checked.
TruncSeries<Rat> macmahon_euler_product(int trunc);

// 1/(1-t) truncated.
TruncSeries<Rat> geometric_series(int trunc);

} // namespace dtpt
