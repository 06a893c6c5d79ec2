#include "tropik/matrix.hpp"

#include <stdexcept>

namespace tropik {

TropicalMatrix::TropicalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
  entries_.assign(static_cast<std::size_t>(rows) * cols, TropicalValue::bottom());
}

TropicalMatrix TropicalMatrix::identity(int d) {
  TropicalMatrix m(d, d);
  for (int i = 0; i < d; ++i) m.at(i, i) = TropicalValue::zero();
  return m;
}

bool TropicalMatrix::all_finite() const {
  for (const auto& e : entries_)
    if (e.is_bottom()) return false;
  return true;
}

bool TropicalMatrix::all_bottom() const {
  for (const auto& e : entries_)
    if (e.is_finite()) return false;
  return true;
}

std::strong_ordering operator<=>(const TropicalMatrix& a, const TropicalMatrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    if (auto c = a.entries_[i] <=> b.entries_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

TropicalMatrix operator*(const TropicalMatrix& a, const TropicalMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product dimension mismatch: " +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()));
  TropicalMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const TropicalValue& aik = a.at(i, k);
      if (aik.is_bottom()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const TropicalValue& bkj = b.at(k, j);
        if (bkj.is_bottom()) continue;
        TropicalValue cand(aik.value() + bkj.value());
        TropicalValue& o = out.at(i, j);
        if (o.is_bottom() || cand.value() > o.value()) o = std::move(cand);
      }
    }
  }
  return out;
}

TropicalMatrix power(const TropicalMatrix& m, unsigned long long k) {
  if (m.rows() != m.cols()) throw std::invalid_argument("power of a non-square matrix");
  TropicalMatrix acc = TropicalMatrix::identity(m.rows());
  TropicalMatrix base = m;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

TropicalValue norm_inf(const TropicalMatrix& m) {
  TropicalValue best = TropicalValue::bottom();
  for (const auto& e : m.entries()) best += e;
  return best;
}

TropicalMatrix scalar_offset(const BigInt& k, const TropicalMatrix& m) {
  TropicalMatrix out = m;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (out.at(i, j).is_finite()) out.at(i, j) = TropicalValue(out.at(i, j).value() + k);
  return out;
}

}  // namespace tropik
