#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace dtpt {

// Arithmetic tables for a small finite field GF(p^e). Elements are ints in
// [0, q); prime fields use residues, prime powers a polynomial basis over
// an irreducible found by search (e <= 3 here, so root-freeness suffices).
class FqField {
public:
    explicit FqField(int q);

    int q() const { return q_; }
    int add(int a, int b) const { return add_[idx(a, b)]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[static_cast<size_t>(a)]; }
    int inv(int a) const;

    static const FqField& get(int q); // cached per q

private:
    size_t idx(int a, int b) const { return static_cast<size_t>(a) * q_ + b; }
    int q_;
    std::vector<int> add_, mul_, neg_, inv_;
};

// Dense matrix over GF(q); entries are field codes.
class FqMatrix {
public:
    FqMatrix() = default;
    FqMatrix(int rows, int cols, int q)
        : q_(q), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int q() const { return q_; }
    int at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, int v) { data_[static_cast<size_t>(r) * cols_ + c] = v; }

    FqMatrix multiplied_by(const FqMatrix& rhs) const;
    bool is_zero() const;

    // In-place row reduction of a copy; returns the rank.
    int rank() const;

    // Appends the rows of another matrix (same width).
    FqMatrix stacked_on(const FqMatrix& other) const;

private:
    int q_ = 2;
    int rows_ = 0, cols_ = 0;
    std::vector<uint8_t> data_;
};

// All subspaces of GF(q)^dim as lists of basis row vectors in reduced row
// echelon form, enumerated by pivot-column sets. Visits each subspace once.
void for_each_subspace(int dim, int q,
                       const std::function<void(const std::vector<std::vector<int>>&)>& fn);

} // namespace dtpt
