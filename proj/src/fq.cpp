#include "dtpt/fq.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace dtpt {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// polynomial arithmetic over F_p on digit vectors, reduced mod a monic
// irreducible of degree e
std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& mod, int p) {
    int e = static_cast<int>(mod.size()) - 1;
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (int d = static_cast<int>(prod.size()) - 1; d >= e; --d) {
        int c = prod[static_cast<size_t>(d)];
        if (c == 0) continue;
        for (int k = 0; k <= e; ++k) {
            int& slot = prod[static_cast<size_t>(d - e + k)];
            slot = ((slot - c * mod[static_cast<size_t>(k)]) % p + p * p) % p;
        }
    }
    prod.resize(static_cast<size_t>(e));
    return prod;
}

} // namespace

FqField::FqField(int q) : q_(q) {
    if (q < 2 || q > 64) throw std::invalid_argument("field size out of range");
    int p = 0, e = 0;
    for (int cand = 2; cand <= q; ++cand) {
        if (!is_prime(cand)) continue;
        int pow = cand, deg = 1;
        while (pow < q) pow *= cand, ++deg;
        if (pow == q) { p = cand; e = deg; break; }
    }
    if (p == 0) throw std::invalid_argument("field size must be a prime power");

    add_.resize(static_cast<size_t>(q) * q);
    mul_.resize(static_cast<size_t>(q) * q);
    neg_.resize(static_cast<size_t>(q));
    inv_.assign(static_cast<size_t>(q), -1);

    if (e == 1) {
        for (int a = 0; a < q; ++a) {
            neg_[static_cast<size_t>(a)] = (q - a) % q;
            for (int b = 0; b < q; ++b) {
                add_[idx(a, b)] = (a + b) % q;
                mul_[idx(a, b)] = (a * b) % q;
            }
        }
    } else {
        // monic irreducible of degree e over F_p; for e in {2,3} it is
        // enough that it has no roots
        std::vector<int> mod;
        for (int tail = 0; tail < p * p * p && mod.empty(); ++tail) {
            std::vector<int> cand(static_cast<size_t>(e) + 1, 0);
            cand[static_cast<size_t>(e)] = 1;
            int t = tail;
            for (int k = 0; k < e; ++k) { cand[static_cast<size_t>(k)] = t % p; t /= p; }
            bool has_root = false;
            for (int x = 0; x < p; ++x) {
                int val = 0, xp = 1;
                for (int k = 0; k <= e; ++k) {
                    val = (val + cand[static_cast<size_t>(k)] * xp) % p;
                    xp = (xp * x) % p;
                }
                if (val == 0) { has_root = true; break; }
            }
            if (!has_root) mod = cand;
        }
        if (mod.empty()) throw std::logic_error("no irreducible polynomial found");

        auto decode = [&](int code) {
            std::vector<int> digits(static_cast<size_t>(e));
            for (int k = 0; k < e; ++k) { digits[static_cast<size_t>(k)] = code % p; code /= p; }
            return digits;
        };
        auto encode = [&](const std::vector<int>& digits) {
            int code = 0;
            for (int k = e - 1; k >= 0; --k) code = code * p + digits[static_cast<size_t>(k)];
            return code;
        };
        for (int a = 0; a < q; ++a) {
            auto da = decode(a);
            std::vector<int> na(da);
            for (auto& d : na) d = (p - d) % p;
            neg_[static_cast<size_t>(a)] = encode(na);
            for (int b = 0; b < q; ++b) {
                auto db = decode(b);
                std::vector<int> sum(static_cast<size_t>(e));
                for (int k = 0; k < e; ++k)
                    sum[static_cast<size_t>(k)] = (da[static_cast<size_t>(k)] + db[static_cast<size_t>(k)]) % p;
                add_[idx(a, b)] = encode(sum);
                mul_[idx(a, b)] = encode(poly_mul_mod(da, db, mod, p));
            }
        }
    }

    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[idx(a, b)] == 1) inv_[static_cast<size_t>(a)] = b;
}

int FqField::inv(int a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[static_cast<size_t>(a)];
}

const FqField& FqField::get(int q) {
    static std::map<int, std::unique_ptr<FqField>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, std::make_unique<FqField>(q)).first;
    return *it->second;
}

FqMatrix FqMatrix::multiplied_by(const FqMatrix& rhs) const {
    const FqField& F = FqField::get(q_);
    FqMatrix out(rows_, rhs.cols_, q_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out.set(i, j, F.add(out.at(i, j), F.mul(a, rhs.at(k, j))));
        }
    return out;
}

bool FqMatrix::is_zero() const {
    for (uint8_t v : data_) if (v) return false;
    return true;
}

int FqMatrix::rank() const {
    const FqField& F = FqField::get(q_);
    std::vector<uint8_t> a = data_;
    auto at_ = [&](int r, int c) -> uint8_t& { return a[static_cast<size_t>(r) * cols_ + c]; };
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (at_(r, col)) { pivot = r; break; }
        if (pivot < 0) continue;
        for (int c = 0; c < cols_; ++c) std::swap(at_(rank, c), at_(pivot, c));
        int inv = F.inv(at_(rank, col));
        for (int c = col; c < cols_; ++c) at_(rank, c) = static_cast<uint8_t>(F.mul(at_(rank, c), inv));
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || !at_(r, col)) continue;
            int f = at_(r, col);
            for (int c = col; c < cols_; ++c)
                at_(r, c) = static_cast<uint8_t>(F.sub(at_(r, c), F.mul(f, at_(rank, c))));
        }
        ++rank;
    }
    return rank;
}

FqMatrix FqMatrix::stacked_on(const FqMatrix& other) const {
    FqMatrix out(rows_ + other.rows_, cols_, q_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
    for (int i = 0; i < other.rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(rows_ + i, j, other.at(i, j));
    return out;
}

void for_each_subspace(int dim, int q,
                       const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    // zero subspace
    fn({});
    for (int k = 1; k <= dim; ++k) {
        // choose pivot columns c_0 < ... < c_{k-1}
        std::vector<int> pivots(static_cast<size_t>(k));
        std::function<void(int, int)> choose = [&](int idx, int from) {
            if (idx == k) {
                // free positions: (row i, col j) with j > pivots[i], j not a pivot
                std::vector<std::pair<int, int>> frees;
                for (int i = 0; i < k; ++i)
                    for (int j = pivots[static_cast<size_t>(i)] + 1; j < dim; ++j) {
                        bool is_pivot = false;
                        for (int t = 0; t < k; ++t)
                            if (pivots[static_cast<size_t>(t)] == j) is_pivot = true;
                        if (!is_pivot) frees.emplace_back(i, j);
                    }
                std::vector<std::vector<int>> basis(static_cast<size_t>(k),
                                                    std::vector<int>(static_cast<size_t>(dim), 0));
                for (int i = 0; i < k; ++i) basis[static_cast<size_t>(i)][static_cast<size_t>(pivots[static_cast<size_t>(i)])] = 1;
                std::function<void(size_t)> fill = [&](size_t f) {
                    if (f == frees.size()) {
                        fn(basis);
                        return;
                    }
                    auto [i, j] = frees[f];
                    for (int v = 0; v < q; ++v) {
                        basis[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
                        fill(f + 1);
                    }
                    basis[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
                };
                fill(0);
                return;
            }
            for (int c = from; c < dim; ++c) {
                pivots[static_cast<size_t>(idx)] = c;
                choose(idx + 1, c + 1);
            }
        };
        choose(0, 0);
    }
}

} // namespace dtpt
