#include "sncdual/exact.hpp"

#include <stdexcept>

namespace sncdual {

MatQ::MatQ(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ ? int(rows.begin()->size()) : 0;
    a_.resize(size_t(rows_) * cols_);
    int i = 0;
    for (const auto& r : rows) {
        if (int(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
        int j = 0;
        for (long v : r) at(i, j++) = Rat(v);
        ++i;
    }
}

bool MatQ::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

MatQ MatQ::identity(int n) {
    MatQ m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatQ MatQ::operator*(const MatQ& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    MatQ r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

MatQ MatQ::operator-(const MatQ& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    MatQ r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

MatQ MatQ::hcat(const MatQ& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hcat row mismatch");
    MatQ r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

MatQ MatQ::col_slice(int c0, int c1) const {
    MatQ r(rows_, c1 - c0);
    for (int i = 0; i < rows_; ++i)
        for (int j = c0; j < c1; ++j) r.at(i, j - c0) = at(i, j);
    return r;
}

namespace {

// Integer matrix obtained by scaling each row of m to a common denominator.
// Row scaling by positive rationals leaves the rank unchanged.
std::vector<std::vector<Int>> clear_denominators(const MatQ& m) {
    std::vector<std::vector<Int>> z(m.rows(), std::vector<Int>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (int j = 0; j < m.cols(); ++j) {
            Int d = m.at(i, j).get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (int j = 0; j < m.cols(); ++j) {
            Rat v = m.at(i, j) * Rat(l);
            v.canonicalize();
            z[i][j] = v.get_num();
        }
    }
    return z;
}

// Bareiss fraction-free elimination with full pivoting; every division is exact.
int bareiss_rank(std::vector<std::vector<Int>> a) {
    const int rows = int(a.size());
    const int cols = rows ? int(a[0].size()) : 0;
    int r = 0;
    Int prev = 1;
    while (r < rows && r < cols) {
        int pi = -1, pj = -1;
        for (int i = r; i < rows && pi < 0; ++i)
            for (int j = r; j < cols; ++j)
                if (a[i][j] != 0) { pi = i; pj = j; break; }
        if (pi < 0) break;
        std::swap(a[r], a[pi]);
        if (pj != r)
            for (int i = 0; i < rows; ++i) std::swap(a[i][r], a[i][pj]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = r + 1; j < cols; ++j) {
                Int num = a[r][r] * a[i][j] - a[i][r] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][r] = 0;
        }
        prev = a[r][r];
        ++r;
    }
    return r;
}

} // namespace

int rank(const MatQ& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss_rank(clear_denominators(m));
}

int kernel_dim(const MatQ& m) { return m.cols() - rank(m); }

int image_intersection_dim(const MatQ& m, const std::vector<int>& coords) {
    // dim(U ∩ W) = dim U + dim W - dim(U + W) with U = im m, W = span{e_i}.
    MatQ w(m.rows(), int(coords.size()));
    for (int j = 0; j < int(coords.size()); ++j) w.at(coords[j], j) = 1;
    int dim_u = rank(m);
    int dim_w = int(coords.size());
    int dim_sum = rank(m.hcat(w));
    return dim_u + dim_w - dim_sum;
}

int kernel_intersection_dim(const MatQ& m, const std::vector<int>& coords) {
    // Restrict m to the coordinate subspace and take the kernel there.
    MatQ sub(m.rows(), int(coords.size()));
    for (int j = 0; j < int(coords.size()); ++j)
        for (int i = 0; i < m.rows(); ++i) sub.at(i, j) = m.at(i, coords[j]);
    return int(coords.size()) - rank(sub);
}

} // namespace sncdual
