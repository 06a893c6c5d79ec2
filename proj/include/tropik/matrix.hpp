#pragma once

#include "tropik/values.hpp"

#include <cassert>
#include <cstddef>
#include <vector>

namespace tropik {

// Dense matrix over Z_max, row-major.
class TropicalMatrix {
 public:
  TropicalMatrix() : rows_(0), cols_(0) {}
  TropicalMatrix(int rows, int cols);  // all entries bottom; pre: rows, cols >= 1

  static TropicalMatrix identity(int d);  // 0 on the diagonal, bottom elsewhere

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  TropicalValue& at(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const TropicalValue& at(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  const std::vector<TropicalValue>& entries() const { return entries_; }

  bool all_finite() const;
  bool all_bottom() const;

  friend bool operator==(const TropicalMatrix& a, const TropicalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  // Lexicographic; usable as an ordered-container key.
  friend std::strong_ordering operator<=>(const TropicalMatrix& a, const TropicalMatrix& b);

 private:
  int rows_, cols_;
  std::vector<TropicalValue> entries_;
};

// Tropical matrix product; errors on inner dimension mismatch.
TropicalMatrix operator*(const TropicalMatrix& a, const TropicalMatrix& b);

// k-th tropical power by binary exponentiation; pre: square, k >= 0 (k = 0 gives identity).
TropicalMatrix power(const TropicalMatrix& m, unsigned long long k);

// Largest entry (bottom for the all-bottom matrix).
TropicalValue norm_inf(const TropicalMatrix& m);

// k (+) M: adds the scalar to every finite entry.
TropicalMatrix scalar_offset(const BigInt& k, const TropicalMatrix& m);

}  // namespace tropik
