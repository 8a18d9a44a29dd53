#include "dtpt/exact_linalg.hpp"

#include <stdexcept>

namespace dtpt {

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    RatMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix shape mismatch");
    RatMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

int rank(const RatMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    // scale each row integral; rank is invariant
    std::vector<std::vector<Int>> a(static_cast<size_t>(rows), std::vector<Int>(static_cast<size_t>(cols)));
    for (int i = 0; i < rows; ++i) {
        Int lcm = 1;
        for (int j = 0; j < cols; ++j) {
            const Int& den = m.at(i, j).get_den();
            lcm = lcm / gcd(lcm, den) * den;
        }
        for (int j = 0; j < cols; ++j) {
            const Rat& x = m.at(i, j);
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = x.get_num() * (lcm / x.get_den());
        }
    }

    Int prev = 1;
    int r = 0;
    int col = 0;
    while (r < rows && col < cols) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) { pivot = i; break; }
        if (pivot < 0) { ++col; continue; }
        std::swap(a[static_cast<size_t>(r)], a[static_cast<size_t>(pivot)]);
        const Int piv = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
        for (int i = r + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                Int t = a[static_cast<size_t>(i)][static_cast<size_t>(j)] * piv -
                        a[static_cast<size_t>(i)][static_cast<size_t>(col)] * a[static_cast<size_t>(r)][static_cast<size_t>(j)];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = t;
            }
            a[static_cast<size_t>(i)][static_cast<size_t>(col)] = 0;
        }
        prev = piv;
        ++r;
        ++col;
    }
    return r;
}

int kernel_dim(const RatMatrix& m) { return m.cols() - rank(m); }

} // namespace dtpt
