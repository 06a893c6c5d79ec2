#include "tropik/semigroup.hpp"

#include "tropik/spectral.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>

namespace tropik {

void MatrixFamily::validate() const {
  if (dim < 1) throw std::invalid_argument("family dimension must be positive");
  if (generators.empty()) throw std::invalid_argument("family needs at least one generator");
  for (const auto& g : generators)
    if (g.rows() != dim || g.cols() != dim)
      throw std::invalid_argument("generator dimension mismatch");
}

bool MatrixFamily::finite_entries() const {
  for (const auto& g : generators)
    if (!g.all_finite()) return false;
  return true;
}

BigInt MatrixFamily::entry_bound() const {
  BigInt b = 0;
  for (const auto& g : generators)
    for (const auto& e : g.entries())
      if (e.is_finite()) b = std::max(b, BigInt(abs(e.value())));
  return b;
}

MatrixFamily scalar_offset(const BigInt& k, const MatrixFamily& f) {
  MatrixFamily out;
  out.dim = f.dim;
  out.generators.reserve(f.generators.size());
  for (const auto& g : f.generators) out.generators.push_back(scalar_offset(k, g));
  return out;
}

namespace {

// Projective representative: subtract the (0,0) entry everywhere.
std::pair<TropicalMatrix, BigInt> normalize_by_anchor(const TropicalMatrix& m) {
  const TropicalValue& anchor = m.at(0, 0);
  if (anchor.is_bottom())
    throw std::invalid_argument(
        "normalization anchor entry (0,0) is -inf; the normalized closure is only "
        "defined over products with a finite anchor");
  return {scalar_offset(-anchor.value(), m), anchor.value()};
}

}  // namespace

NormalizedSemigroup normalized_closure(const MatrixFamily& f, std::size_t max_elements) {
  f.validate();
  bool finite = f.finite_entries();
  NormalizedSemigroup out;
  std::map<TropicalMatrix, int> seen;
  std::queue<int> pending;

  auto push = [&](const TropicalMatrix& product, std::vector<int> witness) {
    auto [n, c] = normalize_by_anchor(product);
    (void)c;
    if (seen.contains(n)) return;
    if (out.elements.size() >= max_elements) {
      throw ClosureBudgetError(
          finite ? "closure element budget exceeded (" + std::to_string(max_elements) +
                       "); raise --max-elements"
                 : "closure element budget exceeded with -inf entries present: closure "
                   "not guaranteed finite",
          out);
    }
    int id = static_cast<int>(out.elements.size());
    seen.emplace(n, id);
    out.elements.push_back(std::move(n));
    out.witnesses.push_back(std::move(witness));
    pending.push(id);
  };

  for (std::size_t g = 0; g < f.generators.size(); ++g)
    push(f.generators[g], {static_cast<int>(g)});
  while (!pending.empty()) {
    int id = pending.front();
    pending.pop();
    for (std::size_t g = 0; g < f.generators.size(); ++g) {
      std::vector<int> w = out.witnesses[id];
      w.push_back(static_cast<int>(g));
      push(out.elements[id] * f.generators[g], std::move(w));
    }
  }
  return out;
}

ClosureGraph vector_closure(const MatrixFamily& f, std::size_t max_states) {
  f.validate();
  if (!f.finite_entries())
    throw std::invalid_argument(
        "vector closure requires finite entries; use jsr_upper_bound for families "
        "with -inf entries");
  ClosureGraph g;
  g.dim = f.dim;
  std::map<std::vector<BigInt>, int> seen;
  std::vector<BigInt> zero(f.dim, BigInt(0));
  g.states.push_back(zero);
  seen.emplace(std::move(zero), 0);
  g.start = 0;

  for (std::size_t s = 0; s < g.states.size(); ++s) {
    g.edges.emplace_back();
    for (const auto& gen : f.generators) {
      std::vector<BigInt> next(f.dim);
      for (int j = 0; j < f.dim; ++j) {
        BigInt best = g.states[s][0] + gen.at(0, j).value();
        for (int k = 1; k < f.dim; ++k) {
          BigInt cand = g.states[s][k] + gen.at(k, j).value();
          if (cand > best) best = std::move(cand);
        }
        next[j] = std::move(best);
      }
      BigInt off = next[0];
      for (auto& x : next) x -= off;
      auto it = seen.find(next);
      int to;
      if (it != seen.end()) {
        to = it->second;
      } else {
        if (g.states.size() >= max_states)
          throw std::runtime_error("closure state budget exceeded (" +
                                   std::to_string(max_states) + "); raise --max-elements");
        to = static_cast<int>(g.states.size());
        g.states.push_back(next);
        seen.emplace(std::move(next), to);
      }
      g.edges[s].push_back({to, std::move(off)});
    }
  }
  return g;
}

Rational jsr_exact(const MatrixFamily& f, std::size_t max_states) {
  ClosureGraph g = vector_closure(f, max_states);
  // Minimum mean cycle = -(maximum mean cycle of the negated graph).
  MatrixGraph neg;
  neg.vertex_count = static_cast<int>(g.states.size());
  for (int s = 0; s < neg.vertex_count; ++s)
    for (const auto& e : g.edges[s]) neg.edges.push_back({s, e.to, -e.offset});
  Rational r = max_cycle_mean(neg);
  assert(r.is_finite());  // every state has out-degree >= 1, so cycles exist
  return -r;
}

namespace {

struct Level {
  // Normalized representative -> smallest offset seen at this length.
  std::map<TropicalMatrix, BigInt> reduced;
  // Products whose anchor is -inf, deduplicated exactly.
  std::vector<TropicalMatrix> raw;
};

}  // namespace

Rational jsr_upper_bound(const MatrixFamily& f, int max_len) {
  f.validate();
  if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");

  std::optional<Rational> best;
  auto feed = [&](const Rational& v) {
    if (!best || v < *best) best = v;
  };
  // Returns true when the bound collapsed to -inf and the search can stop.
  auto inspect = [&](const TropicalMatrix& p, int len) {
    TropicalValue norm = norm_inf(p);
    if (norm.is_bottom()) return true;  // nilpotent at this very length
    Rational rho = spectral_radius(p);
    if (rho.is_bottom()) return true;
    feed(Rational(norm.value(), BigInt(len)));
    feed(Rational(BigRational(rho.value() / len)));
    return false;
  };

  Level level;
  std::map<TropicalMatrix, int> raw_seen;
  auto add = [&](const TropicalMatrix& p, Level& to) {
    if (p.at(0, 0).is_bottom()) {
      if (!raw_seen.contains(p)) {
        raw_seen.emplace(p, 1);
        to.raw.push_back(p);
      }
      return;
    }
    auto [n, c] = normalize_by_anchor(p);
    auto it = to.reduced.find(n);
    if (it == to.reduced.end())
      to.reduced.emplace(std::move(n), c);
    else if (c < it->second)
      it->second = c;
  };

  for (const auto& g : f.generators) add(g, level);
  for (int len = 1;; ++len) {
    for (const auto& [n, c] : level.reduced)
      if (inspect(scalar_offset(c, n), len)) return Rational::bottom();
    for (const auto& p : level.raw)
      if (inspect(p, len)) return Rational::bottom();
    if (len == max_len) break;
    Level next;
    raw_seen.clear();
    for (const auto& [n, c] : level.reduced)
      for (const auto& g : f.generators) add(scalar_offset(c, n * g), next);
    for (const auto& p : level.raw)
      for (const auto& g : f.generators) add(p * g, next);
    level = std::move(next);
  }
  assert(best);
  return *best;
}

std::optional<std::pair<std::vector<int>, Rational>> certify_jsr_negative(const MatrixFamily& f,
                                                                          int max_len) {
  f.validate();
  if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
  int ngen = static_cast<int>(f.generators.size());

  // rho(p) < 0 without always running the full cycle-mean computation: a
  // nonnegative diagonal entry forces rho >= 0, a negative norm forces rho < 0.
  auto negative = [&](const TropicalMatrix& p) {
    for (int i = 0; i < p.rows(); ++i) {
      const TropicalValue& d = p.at(i, i);
      if (d.is_finite() && d.value() >= 0) return false;
    }
    TropicalValue norm = norm_inf(p);
    if (norm.is_bottom() || norm.value() < 0) return true;
    return spectral_radius(p).is_negative();
  };

  for (int target = 1; target <= max_len; ++target) {
    std::vector<TropicalMatrix> prefix(static_cast<std::size_t>(target) + 1);
    std::vector<int> word(target, 0);
    int depth = 0;
    while (depth >= 0) {
      if (word[depth] < ngen) {
        const TropicalMatrix& base = f.generators[word[depth]];
        prefix[depth + 1] = depth == 0 ? base : prefix[depth] * base;
        if (depth + 1 == target) {
          if (negative(prefix[depth + 1])) {
            Rational rho = spectral_radius(prefix[depth + 1]);
            Rational value = rho.is_bottom() ? Rational::bottom()
                                             : Rational(BigRational(rho.value() / target));
            return std::make_pair(std::vector<int>(word.begin(), word.end()), value);
          }
          ++word[depth];
        } else {
          ++depth;
          word[depth] = 0;
        }
      } else {
        --depth;
        if (depth >= 0) ++word[depth];
      }
    }
  }
  return std::nullopt;
}

std::pair<BigInt, MatrixFamily> offset_reduce(const MatrixFamily& f) {
  f.validate();
  std::optional<BigInt> k;
  for (const auto& g : f.generators)
    for (const auto& e : g.entries())
      if (e.is_finite() && (!k || e.value() > *k)) k = e.value();
  if (!k)
    throw std::invalid_argument("offset reduction impossible: every entry is -inf");
  return {*k, scalar_offset(-*k, f)};
}

int urk_exact(const MatrixFamily& f, std::size_t max_elements) {
  f.validate();
  if (!f.finite_entries())
    throw std::invalid_argument(
        "exact ultimate rank requires finite entries; use the truncated oracle for "
        "families with -inf entries");
  NormalizedSemigroup s = normalized_closure(f, max_elements);
  int best = -1;
  for (const auto& m : s.elements) {
    int r = ultimate_rank(m);
    if (best < 0 || r < best) best = r;
    if (best == 0) break;
  }
  assert(best >= 0);
  return best;
}

}  // namespace tropik
