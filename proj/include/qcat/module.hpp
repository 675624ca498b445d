#ifndef QCAT_MODULE_HPP
#define QCAT_MODULE_HPP

#include <optional>
#include <vector>

#include "qcat/category.hpp"
#include "qcat/matrix.hpp"

namespace qcat {

/// A module (profunctor) M : D -|-> E, stored as a |E| x |D| matrix with
/// entry (X, A) = M(X, A) for X in E and A in D.
///
/// Left action:  E(Y,X) (x) M(X,A) <= M(Y,A)
/// Right action: M(X,A) (x) D(A,B) <= M(X,B)
class VModule {
 public:
  VModule() = default;
  /// Checks the shape and that both sides share the quantale. The action
  /// laws are checked by `validate_module`.
  VModule(VCategory source, VCategory target, Matrix mat);

  const VCategory& source() const { return source_; }
  const VCategory& target() const { return target_; }
  const Matrix& mat() const { return mat_; }
  const Quantale& quantale() const { return target_.quantale(); }
  const QVal& operator()(std::size_t x, std::size_t a) const { return mat_(x, a); }

  friend bool operator==(const VModule& a, const VModule& b) = default;

 private:
  VCategory source_;
  VCategory target_;
  Matrix mat_;
};

/// The hom matrix of E viewed as a module E -|-> E.
VModule identity_module(const VCategory& e);

/// Every violation of the two action laws: "left_action" with indices
/// {Y, X, A} and "right_action" with indices {X, A, B}.
ValidationReport validate_module(const VModule& m);

/// (M o N)(X, P) = join over A of M(X, A) (x) N(A, P), for M : D -|-> E and
/// N : C -|-> D. Throws InputError unless M.source() == N.target().
VModule compose(const VModule& m, const VModule& n);

/// Column C(-, P) as a module I -|-> C.
VModule representable(const VCategory& c, std::size_t p);
/// Row C(P, -) as a module C -|-> I.
VModule corepresentable(const VCategory& c, std::size_t p);

/// The largest N : E -|-> D satisfying the counit M o N <= E:
///   N(A, X) = meet over Y of residual(M(Y, A), E(Y, X)).
/// If M has any right adjoint, this is it.
VModule canonical_right_adjoint(const VModule& m);

struct AdjunctionReport {
  bool unit_ok = false;
  bool counit_ok = false;
  /// "unit" entries carry {A, B} with lhs D(A,B) and rhs (N o M)(A,B);
  /// "counit" entries carry {Y, X} with lhs (M o N)(Y,X) and rhs E(Y,X).
  std::vector<Violation> witnesses;
  bool ok() const { return unit_ok && counit_ok; }
};

/// Unit D <= N o M and counit M o N <= E, checked entrywise, for
/// M : D -|-> E and N : E -|-> D.
AdjunctionReport check_adjunction(const VModule& m, const VModule& n);

/// M : I -|-> E has a right adjoint. Throws InputError if the source of M is
/// not the unit category.
bool is_cauchy(const VModule& m);

/// Every object Z with M(Y) equivalent to E(Y, Z) for all Y, in label order.
std::vector<std::size_t> representing_objects(const VModule& m);
/// First entry of `representing_objects`, if any.
std::optional<std::size_t> find_representing(const VModule& m);

/// First object Z with unit <= N(Z) (x) M(Z). Throws InputError if (M, N)
/// fails `check_adjunction`.
std::optional<std::size_t> cauchy_witness(const VModule& m, const VModule& n);

/// Residual closure of the hom values of C plus the lattice bounds and the
/// unit, sorted structurally. Finite carriers (Bool and its products)
/// give the whole carrier instead. Throws InputError past `cap` values.
std::vector<QVal> default_grid(const VCategory& c, std::size_t cap = 64);

struct CauchyModule {
  std::vector<QVal> column;
  std::optional<std::size_t> representing;
  std::optional<std::size_t> witness;
};

struct CompletenessReport {
  std::vector<QVal> grid;
  std::size_t modules_checked = 0;
  /// Every Cauchy module found, sorted lexicographically by column.
  std::vector<CauchyModule> cauchy;
  /// Cauchy modules that no object represents, sorted lexicographically.
  std::vector<std::vector<QVal>> counterexamples;
  bool complete() const { return counterexamples.empty(); }
};

/// Enumerates every module I -|-> C whose entries lie in `grid` (pruning
/// partial columns that already break the left action), decides which are
/// Cauchy and which of those are representable. Candidates are tested
/// independently on `threads` workers; the report is identical for any
/// thread count. Throws CarrierError if a grid value is outside the carrier.
CompletenessReport cauchy_completeness_report(const VCategory& c, std::vector<QVal> grid, unsigned threads = 1);

/// Builds the module I -|-> C with the given column.
VModule column_module(const VCategory& c, const std::vector<QVal>& column);
/// Builds the module C -|-> I with the given row.
VModule row_module(const VCategory& c, const std::vector<QVal>& row);

}  // namespace qcat

#endif
