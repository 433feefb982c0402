#pragma once

#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace grasscoh {

/// Dense matrix with exact rational entries.
class RatMatrix {
  public:
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimensions");
    }

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    RatMatrix operator*(const RatMatrix& o) const;
    bool operator==(const RatMatrix& o) const = default;

    RatMatrix transposed() const;
    Rational trace() const;

  private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

/// Rank via exact Gaussian elimination.
int rank(RatMatrix m);

/// Basis of the right nullspace {x : Mx = 0}; size = cols - rank.
std::vector<std::vector<Rational>> nullspace(RatMatrix m);

/// Exact inverse; throws std::domain_error on singular or non-square input.
RatMatrix inverse(const RatMatrix& m);

}  // namespace grasscoh
