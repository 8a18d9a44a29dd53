#pragma once

#include <stdexcept>
#include <string>

#include "dtpt/poly.hpp"

namespace dtpt {

// Rational function in q^{1/2} over Rat. Internally a RatFun in the
// auxiliary variable u = q^{1/2}, so exponents live on the half-integer
// grid: the stored power of u is twice the power of q. All arithmetic is
// exact and values are kept canonical (gcd removed, monic denominator),
// so operator== decides equality.
class QRat {
public:
    QRat() = default;
    QRat(const Rat& c) : f_(c) {}
    QRat(long c) : f_(Rat(c)) {}
    explicit QRat(RatFun f) : f_(std::move(f)) {}

    // q^{twice/2}; twice may be negative.
    static QRat q_half_power(int twice) { return QRat(RatFun::var_power(twice)); }
    static QRat q_power(int exp) { return q_half_power(2 * exp); }
    static QRat q() { return q_power(1); }

    const RatFun& fun() const { return f_; }
    bool is_zero() const { return f_.is_zero(); }

    friend QRat operator+(const QRat& a, const QRat& b) { return QRat(a.f_ + b.f_); }
    friend QRat operator-(const QRat& a, const QRat& b) { return QRat(a.f_ - b.f_); }
    friend QRat operator*(const QRat& a, const QRat& b) { return QRat(a.f_ * b.f_); }
    friend QRat operator/(const QRat& a, const QRat& b) { return QRat(a.f_ / b.f_); }
    QRat operator-() const { return QRat(-f_); }
    QRat& operator+=(const QRat& o) { f_ = f_ + o.f_; return *this; }
    QRat& operator-=(const QRat& o) { f_ = f_ - o.f_; return *this; }
    QRat& operator*=(const QRat& o) { f_ = f_ * o.f_; return *this; }
    friend bool operator==(const QRat& a, const QRat& b) { return a.f_ == b.f_; }
    friend bool operator!=(const QRat& a, const QRat& b) { return !(a.f_ == b.f_); }

    QRat inverse() const { return QRat(f_.inverse()); }

    bool has_pole_at_one() const { return f_.has_pole_at(Rat(1)); }

    // Evaluation at q = 1 (u = 1). Throws std::domain_error on a pole.
    Rat limit_q1() const { return f_.eval(Rat(1)); }

    // Evaluation at a concrete value of q^{1/2}.
    Rat eval_half(const Rat& u) const { return f_.eval(u); }

    std::string to_string() const;

private:
    RatFun f_;
};

inline QRat pow(const QRat& base, int k) {
    if (k < 0) return pow(base.inverse(), -k);
    QRat acc(Rat(1));
    QRat b = base;
    int e = k;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

// 1 + q + ... + q^{n-1}, written out termwise (no closed form involved, so
// it can serve as an independent expansion to test the closed form against).
inline QRat q_geometric_sum(long n) {
    QRat acc(Rat(0));
    for (long i = 0; i < n; ++i) acc += QRat::q_power(static_cast<int>(i));
    return acc;
}

} // namespace dtpt
