#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dtpt/rational.hpp"

namespace dtpt {

// Dense univariate polynomial over Rat. coeffs[i] is the coefficient of
// the i-th power; the zero polynomial has an empty coefficient vector.
// The variable is anonymous here; callers attach meaning (a power of q^{1/2}
// in the Serre-polynomial code, the twist parameter l in the GIT code).
class Poly {
public:
    Poly() = default;
    explicit Poly(Rat c) {
        if (c != 0) coeffs_.push_back(std::move(c));
    }
    explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly monomial(const Rat& c, int exp) {
        if (exp < 0) throw std::invalid_argument("negative exponent in Poly::monomial");
        if (c == 0) return Poly{};
        std::vector<Rat> v(static_cast<size_t>(exp) + 1);
        v.back() = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
        return coeffs_[static_cast<size_t>(i)];
    }
    const Rat& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return Poly(std::move(v));
    }
    Poly operator-() const {
        std::vector<Rat> v(coeffs_);
        for (auto& c : v) c = -c;
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly{};
        std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(v));
    }
    friend Poly operator*(const Rat& c, const Poly& p) { return Poly(Rat(c)) * p; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    Rat eval(const Rat& x) const { // Horner
        Rat acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Euclidean division; divisor must be nonzero.
    static void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<Rat> r = a.coeffs_;
        std::vector<Rat> q;
        const int db = b.degree();
        if (static_cast<int>(r.size()) - 1 >= db)
            q.assign(r.size() - static_cast<size_t>(db), Rat(0));
        for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
            if (r[static_cast<size_t>(i)] == 0) continue;
            Rat f = r[static_cast<size_t>(i)] / b.leading();
            q[static_cast<size_t>(i - db)] = f;
            for (int j = 0; j <= db; ++j)
                r[static_cast<size_t>(i - db + j)] -= f * b.coeff(j);
        }
        quo = Poly(std::move(q));
        rem = Poly(std::move(r));
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        // normalise to monic so gcd is canonical
        Rat inv = 1 / a.leading();
        std::vector<Rat> v = a.coeffs_;
        for (auto& c : v) c *= inv;
        return Poly(std::move(v));
    }

    std::string to_string(const std::string& var) const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rat> coeffs_;
};

// Rational function num/den in canonical form: common polynomial factors
// removed, denominator monic and nonzero. Equality is structural.
class RatFun {
public:
    RatFun() : num_{}, den_(Poly(Rat(1))) {}
    RatFun(const Rat& c) : num_(Poly(c)), den_(Poly(Rat(1))) {}
    RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }
    explicit RatFun(Poly num) : num_(std::move(num)), den_(Poly(Rat(1))) {}

    static RatFun var_power(int exp) { // x^exp, exp may be negative
        if (exp >= 0) return RatFun(Poly::monomial(Rat(1), exp));
        return RatFun(Poly(Rat(1)), Poly::monomial(Rat(1), -exp));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Poly(Rat(1)); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    bool has_pole_at(const Rat& x) const { return den_.eval(x) == 0; }

    // Exact evaluation; the canonical form guarantees a vanishing
    // denominator is a genuine pole.
    Rat eval(const Rat& x) const {
        Rat d = den_.eval(x);
        if (d == 0) throw std::domain_error("pole of rational function at " + rat_to_string(x));
        return num_.eval(x) / d;
    }

    RatFun inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero rational function");
        return RatFun(den_, num_);
    }

    std::string to_string(const std::string& var) const;

private:
    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(Rat(1));
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            Poly q, r;
            Poly::divmod(num_, g, q, r);
            num_ = q;
            Poly::divmod(den_, g, q, r);
            den_ = q;
        }
        Rat lead = den_.leading();
        if (lead != 1) {
            Rat inv = 1 / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    Poly num_;
    Poly den_;
};

} // namespace dtpt
