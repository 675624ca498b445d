#ifndef QCAT_CATEGORY_HPP
#define QCAT_CATEGORY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcat/matrix.hpp"
#include "qcat/quantale.hpp"

namespace qcat {

/// A finite category enriched in a quantale: labelled objects and a square
/// hom matrix with hom(i, j) = C(object_i, object_j).
///
/// Construction only checks the matrix shape and that labels are unique and
/// values lie in the carrier.
/// The unit and composition laws are checked by `validate_category`.
class VCategory {
 public:
  VCategory() = default;
  VCategory(Quantale q, std::vector<std::string> objects, Matrix hom);

  const Quantale& quantale() const { return q_; }
  const std::vector<std::string>& objects() const { return objects_; }
  const Matrix& hom_matrix() const { return hom_; }
  std::size_t size() const { return objects_.size(); }
  bool empty() const { return objects_.empty(); }

  const QVal& hom(std::size_t i, std::size_t j) const { return hom_(i, j); }
  /// Throws InputError for an unknown label.
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const VCategory& a, const VCategory& b) = default;

 private:
  Quantale q_;
  std::vector<std::string> objects_;
  Matrix hom_;
};

/// The one-object category with hom equal to the unit.
VCategory unit_category(const Quantale& q, std::string label = "*");

/// Whether C is the unit category (one object, endohom equivalent to unit).
bool is_unit_category(const VCategory& c);

/// Every unit violation (law "unit", indices {i}) and composition violation
/// (law "composition", indices {i, j, k}). Empty means valid.
ValidationReport validate_category(const VCategory& c);

VCategory opposite(const VCategory& c);

/// Objects are ordered pairs "(a,x)" in row-major order of (C, D); homs are
/// tensors of the component homs. Throws CarrierError on quantale mismatch.
VCategory tensor_categories(const VCategory& c, const VCategory& d);

/// Label bijection preserving every hom exactly, if one exists. Entry i of
/// the result is the index in `b` of object i of `a`.
std::optional<std::vector<std::size_t>> find_isomorphism(const VCategory& a, const VCategory& b);

/// An enriched functor candidate. `object_map[i]` is the target index of
/// source object i.
struct VFunctor {
  VCategory source;
  VCategory target;
  std::vector<std::size_t> object_map;

  /// Builds from a label map; throws InputError if the map is not total or
  /// names unknown objects.
  static VFunctor from_labels(VCategory source, VCategory target, const std::map<std::string, std::string>& map);
  static VFunctor identity(const VCategory& c);
  static VFunctor constant(const VCategory& source, const VCategory& target, std::size_t object);
};

/// D(A,B) <= E(FA,FB) for all A, B.
bool functor_check(const VFunctor& f);
/// Meet over A of E(FA, GA). Throws InputError if F and G are not parallel.
QVal functor_hom(const VFunctor& f, const VFunctor& g);
/// unit <= functor_hom(F, G).
bool nat_trans_exists(const VFunctor& f, const VFunctor& g);

/// A reflexive-transitive relation on labelled objects. Edges are sorted.
struct Preorder {
  std::vector<std::string> objects;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  bool related(std::size_t i, std::size_t j) const;
  bool is_reflexive() const;
  bool is_transitive() const;
};

/// Edge i -> j iff unit <= hom(i, j).
Preorder underlying_preorder(const VCategory& c);

/// Graphviz digraph: one node per object, one edge per non-identity relation.
std::string to_dot(const Preorder& p, const std::string& graph_name = "underlying");

/// Idempotent splitting in a preorder viewed as a thin category. Each
/// endo-arrow is an identity and splits through its own object, so this
/// holds for every preorder. Throws InputError if `p` is not a preorder.
bool idempotent_split_check(const Preorder& p);

enum class EventClass { Regular, Irregular, Invalid };

struct EndohomReport {
  std::vector<EventClass> classes;
  /// Laws "idempotent", "action_left", "action_right", "endohom_value",
  /// "irregular_homs", "regular_pair". Empty for every valid category.
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Classifies each object of an RBot category by its endohom (0 regular,
/// inf irregular) and checks the structural consequences of the category
/// laws on endohoms. Throws CarrierError for other quantales.
EndohomReport classify_endohoms(const VCategory& c);

const char* to_string(EventClass c);

}  // namespace qcat

#endif
