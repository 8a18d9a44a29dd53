#pragma once

#include <vector>

#include "dtpt/rational.hpp"

namespace dtpt {

// Row-major dense matrix over Rat.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Rat(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    bool is_zero() const {
        for (const auto& x : data_) if (x != 0) return false;
        return true;
    }

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

// Exact rank by fraction-free (Bareiss) elimination: denominators are
// cleared row by row, then all updates stay in integers with exact
// divisions. Row/column pivoting handles arbitrary rank profiles.
int rank(const RatMatrix& m);

// dim ker = cols - rank.
int kernel_dim(const RatMatrix& m);

} // namespace dtpt
