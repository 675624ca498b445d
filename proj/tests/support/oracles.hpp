// Brute-force reference computations used to check the library. None of
// these call the library routine they are compared against.
#ifndef QCAT_TESTS_ORACLES_HPP
#define QCAT_TESTS_ORACLES_HPP

#include <optional>
#include <vector>

#include "qcat/category.hpp"
#include "qcat/module.hpp"
#include "qcat/quantale.hpp"

namespace qcat::testing {

/// Largest x among `candidates` (arrow order) with tensor(a, x) <= c.
inline std::optional<QVal> residual_by_search(const Quantale& q, const QVal& a, const QVal& c,
                                              const std::vector<QVal>& candidates) {
  std::optional<QVal> best;
  for (const auto& x : candidates) {
    if (!q.leq(q.tensor(a, x), c)) continue;
    if (!best || q.leq(*best, x)) best = x;
  }
  return best;
}

/// Maximum of a family in a totally ordered base, found by pairwise
/// comparison; bottom for the empty family.
inline QVal max_by_comparison(const Quantale& q, const std::vector<QVal>& family) {
  for (const auto& candidate : family) {
    bool dominates = true;
    for (const auto& other : family) dominates = dominates && q.leq(other, candidate);
    if (dominates) return candidate;
  }
  return q.bottom();
}

/// Composite of M : D -|-> E and N : C -|-> D over a totally ordered base:
/// every middle object is enumerated and the largest term kept.
inline Matrix compose_oracle(const VModule& m, const VModule& n) {
  const auto& q = m.quantale();
  Matrix out(m.target().size(), n.source().size());
  for (std::size_t x = 0; x < out.rows(); ++x)
    for (std::size_t p = 0; p < out.cols(); ++p) {
      std::vector<QVal> terms;
      for (std::size_t a = 0; a < m.source().size(); ++a) terms.push_back(q.tensor(m(x, a), n(a, p)));
      out(x, p) = max_by_comparison(q, terms);
    }
  return out;
}

/// Reflexive-transitive closure of a relation by Warshall's algorithm.
inline std::vector<std::vector<bool>> closure_oracle(std::size_t n,
                                                     const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (const auto& [a, b] : edges) r[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

/// Every adjunction and action inequality of a pair M : I -|-> E,
/// N : E -|-> I, written out directly. Counts failures per law.
struct PairCheck {
  int left_action_m = 0;
  int left_action_n = 0;
  int unit = 0;
  int counit = 0;
};

inline PairCheck exhaustive_pair_check(const VCategory& e, const std::vector<QVal>& m, const std::vector<QVal>& n) {
  const auto& q = e.quantale();
  PairCheck out;
  for (std::size_t y = 0; y < e.size(); ++y)
    for (std::size_t x = 0; x < e.size(); ++x) {
      if (!q.leq(q.tensor(e.hom(y, x), m[x]), m[y])) ++out.left_action_m;
      if (!q.leq(q.tensor(n[x], e.hom(x, y)), n[y])) ++out.left_action_n;
      if (!q.leq(q.tensor(m[x], n[y]), e.hom(x, y))) ++out.counit;
    }
  // Unit: some single term must already reach the unit, or their join must.
  QVal sup = q.bottom();
  for (std::size_t x = 0; x < e.size(); ++x) sup = q.join(sup, q.tensor(n[x], m[x]));
  if (!q.leq(q.unit(), sup)) ++out.unit;
  return out;
}

}  // namespace qcat::testing

#endif
