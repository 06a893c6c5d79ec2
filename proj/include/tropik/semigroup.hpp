#pragma once

#include "tropik/matrix.hpp"
#include "tropik/values.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tropik {

inline constexpr std::size_t kDefaultMaxElements = 1'000'000;
inline constexpr int kDefaultMaxLen = 12;

// Finite set of square generators acting by tropical multiplication.
struct MatrixFamily {
  int dim = 0;
  std::vector<TropicalMatrix> generators;  // nonempty, all dim x dim

  void validate() const;        // throws std::invalid_argument
  bool finite_entries() const;  // no bottom entry in any generator
  BigInt entry_bound() const;   // b = max |finite entry| over all generators
};

// Offsets every generator by k; spectral quantities shift by k per letter.
MatrixFamily scalar_offset(const BigInt& k, const MatrixFamily& f);

// The semigroup generated by the family, stored projectively: each product is
// normalized by its (0,0) entry. Witnesses are shortest words over generator
// indices reproducing each element up to the normalization offset.
struct NormalizedSemigroup {
  std::vector<TropicalMatrix> elements;  // BFS order, deterministic
  std::vector<std::vector<int>> witnesses;
};

// Raised when a closure walk exceeds its element budget; carries what was
// found so far. With bottom entries present the closure need not be finite.
class ClosureBudgetError : public std::runtime_error {
 public:
  ClosureBudgetError(const std::string& msg, NormalizedSemigroup partial)
      : std::runtime_error(msg), partial_(std::move(partial)) {}
  const NormalizedSemigroup& partial() const { return partial_; }

 private:
  NormalizedSemigroup partial_;
};

NormalizedSemigroup normalized_closure(const MatrixFamily& f,
                                       std::size_t max_elements = kDefaultMaxElements);

// Orbit of the zero row vector under the generators, normalized so the first
// coordinate stays 0; edge offsets record the discarded growth. For a family
// with finite entries and bound b every coordinate stays within {-2b..2b}, so
// the graph is finite and its minimum mean cycle is the family's joint
// spectral radius.
struct ClosureGraph {
  int dim = 0;
  std::vector<std::vector<BigInt>> states;  // states[s][0] == 0
  struct Edge {
    int to;
    BigInt offset;
  };
  std::vector<std::vector<Edge>> edges;  // edges[s][g], one per generator
  int start = 0;
};

ClosureGraph vector_closure(const MatrixFamily& f,
                            std::size_t max_states = kDefaultMaxElements);

// Exact joint spectral radius inf (1/l) ||M1...Ml||; pre: finite entries.
Rational jsr_exact(const MatrixFamily& f,
                   std::size_t max_states = kDefaultMaxElements);

// min over products of length <= max_len of min(norm/len, rho/len).
// Bottom means a nilpotent product certified the radius as -inf.
Rational jsr_upper_bound(const MatrixFamily& f, int max_len = kDefaultMaxLen);

// First product word (length-lexicographic over generator indices) whose
// spectral radius is negative, with rho(product)/length; absent when none
// exists within the bound.
std::optional<std::pair<std::vector<int>, Rational>> certify_jsr_negative(
    const MatrixFamily& f, int max_len = kDefaultMaxLen);

// Subtracts the largest finite entry from every generator; returns (k, k-reduced
// family). Errors when every entry is bottom.
std::pair<BigInt, MatrixFamily> offset_reduce(const MatrixFamily& f);

// min ultimate rank over the semigroup; pre: finite entries.
int urk_exact(const MatrixFamily& f, std::size_t max_elements = kDefaultMaxElements);

}  // namespace tropik
