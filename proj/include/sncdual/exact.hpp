#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <vector>

namespace sncdual {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense matrix with exact rational entries, row major.
class MatQ {
public:
    MatQ() = default;
    MatQ(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    MatQ(std::initializer_list<std::initializer_list<long>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
    bool is_zero() const;

    bool operator==(const MatQ& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    static MatQ identity(int n);
    static MatQ zero(int rows, int cols) { return MatQ(rows, cols); }

    MatQ operator*(const MatQ& o) const;
    MatQ operator-(const MatQ& o) const;

    /// Horizontal concatenation [this | o].
    MatQ hcat(const MatQ& o) const;
    /// Columns [c0, c1) of this matrix.
    MatQ col_slice(int c0, int c1) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

/// Rank by fraction-free Bareiss elimination after clearing denominators.
/// Exact, no rational division in the elimination loop.
int rank(const MatQ& m);

/// dim ker of m acting on column vectors.
int kernel_dim(const MatQ& m);

/// dim (im m ∩ span of unit vectors e_i, i in coords).
int image_intersection_dim(const MatQ& m, const std::vector<int>& coords);

/// dim (ker m ∩ span of unit vectors e_i, i in coords).
int kernel_intersection_dim(const MatQ& m, const std::vector<int>& coords);

} // namespace sncdual
