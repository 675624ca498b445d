#include "qcat/category.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace qcat {

VCategory::VCategory(Quantale q, std::vector<std::string> objects, Matrix hom)
    : q_(std::move(q)), objects_(std::move(objects)), hom_(std::move(hom)) {
  if (hom_.rows() != objects_.size() || hom_.cols() != objects_.size())
    throw InputError("hom matrix is " + std::to_string(hom_.rows()) + "x" + std::to_string(hom_.cols()) + " but there are " +
                     std::to_string(objects_.size()) + " objects");
  std::set<std::string> seen;
  for (const auto& label : objects_)
    if (!seen.insert(label).second) throw InputError("duplicate object label '" + label + "'");
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) q_.require(hom_(i, j));
}

std::size_t VCategory::index_of(const std::string& label) const {
  auto it = std::find(objects_.begin(), objects_.end(), label);
  if (it == objects_.end()) throw InputError("unknown object '" + label + "'");
  return static_cast<std::size_t>(it - objects_.begin());
}

VCategory unit_category(const Quantale& q, std::string label) {
  return VCategory(q, {std::move(label)}, Matrix(1, 1, q.unit()));
}

bool is_unit_category(const VCategory& c) {
  return c.size() == 1 && c.quantale().equiv(c.hom(0, 0), c.quantale().unit());
}

ValidationReport validate_category(const VCategory& c) {
  ValidationReport report;
  const auto& q = c.quantale();
  const QVal u = q.unit();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!q.leq(u, c.hom(i, i))) report.violations.push_back({"unit", {i}, u, c.hom(i, i)});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const QVal& ij = c.hom(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        QVal through = q.tensor(ij, c.hom(j, k));
        if (!q.leq(through, c.hom(i, k)))
          report.violations.push_back({"composition", {i, j, k}, std::move(through), c.hom(i, k)});
      }
    }
  return report;
}

VCategory opposite(const VCategory& c) { return VCategory(c.quantale(), c.objects(), c.hom_matrix().transposed()); }

VCategory tensor_categories(const VCategory& c, const VCategory& d) {
  if (!c.quantale().same_carrier(d.quantale()))
    throw CarrierError("cannot tensor categories over " + c.quantale().name() + " and " + d.quantale().name());
  const auto& q = c.quantale();
  const std::size_t n = c.size() * d.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& a : c.objects())
    for (const auto& x : d.objects()) labels.push_back("(" + a + "," + x + ")");
  Matrix hom(n, n);
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t x = 0; x < d.size(); ++x)
      for (std::size_t b = 0; b < c.size(); ++b)
        for (std::size_t y = 0; y < d.size(); ++y)
          hom(a * d.size() + x, b * d.size() + y) = q.tensor(c.hom(a, b), d.hom(x, y));
  return VCategory(q, std::move(labels), std::move(hom));
}

std::optional<std::vector<std::size_t>> find_isomorphism(const VCategory& a, const VCategory& b) {
  if (a.size() != b.size() || !a.quantale().same_carrier(b.quantale())) return std::nullopt;
  const std::size_t n = a.size();
  std::vector<std::size_t> map(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t]) continue;
      map[i] = t;
      bool consistent = true;
      for (std::size_t p = 0; p <= i && consistent; ++p)
        consistent = a.hom(i, p) == b.hom(t, map[p]) && a.hom(p, i) == b.hom(map[p], t);
      if (!consistent) continue;
      used[t] = true;
      if (extend(i + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

// ---------------------------------------------------------------------------
// Functors

VFunctor VFunctor::from_labels(VCategory source, VCategory target, const std::map<std::string, std::string>& map) {
  std::vector<std::size_t> object_map;
  object_map.reserve(source.size());
  for (const auto& label : source.objects()) {
    auto it = map.find(label);
    if (it == map.end()) throw InputError("functor object map is not total: no image for '" + label + "'");
    object_map.push_back(target.index_of(it->second));
  }
  for (const auto& [from, to] : map) source.index_of(from);
  return VFunctor{std::move(source), std::move(target), std::move(object_map)};
}

VFunctor VFunctor::identity(const VCategory& c) {
  std::vector<std::size_t> m(c.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = i;
  return VFunctor{c, c, std::move(m)};
}

VFunctor VFunctor::constant(const VCategory& source, const VCategory& target, std::size_t object) {
  if (object >= target.size()) throw InputError("constant functor target index out of range");
  return VFunctor{source, target, std::vector<std::size_t>(source.size(), object)};
}

namespace {

void require_total(const VFunctor& f) {
  if (f.object_map.size() != f.source.size()) throw InputError("functor object map is not total");
  for (auto t : f.object_map)
    if (t >= f.target.size()) throw InputError("functor maps to an object outside its target");
}

}  // namespace

bool functor_check(const VFunctor& f) {
  require_total(f);
  if (!f.source.quantale().same_carrier(f.target.quantale())) throw CarrierError("functor between different bases");
  const auto& q = f.target.quantale();
  for (std::size_t a = 0; a < f.source.size(); ++a)
    for (std::size_t b = 0; b < f.source.size(); ++b)
      if (!q.leq(f.source.hom(a, b), f.target.hom(f.object_map[a], f.object_map[b]))) return false;
  return true;
}

QVal functor_hom(const VFunctor& f, const VFunctor& g) {
  require_total(f);
  require_total(g);
  if (!(f.source == g.source) || !(f.target == g.target)) throw InputError("functors are not parallel");
  const auto& q = f.target.quantale();
  QVal acc = q.top();
  for (std::size_t a = 0; a < f.source.size(); ++a) acc = q.meet(acc, f.target.hom(f.object_map[a], g.object_map[a]));
  return acc;
}

bool nat_trans_exists(const VFunctor& f, const VFunctor& g) {
  return f.target.quantale().leq(f.target.quantale().unit(), functor_hom(f, g));
}

// ---------------------------------------------------------------------------
// Underlying preorder

bool Preorder::related(std::size_t i, std::size_t j) const {
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

bool Preorder::is_reflexive() const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (!related(i, i)) return false;
  return true;
}

bool Preorder::is_transitive() const {
  for (const auto& [i, j] : edges)
    for (const auto& [j2, k] : edges)
      if (j == j2 && !related(i, k)) return false;
  return true;
}

Preorder underlying_preorder(const VCategory& c) {
  Preorder p{c.objects(), {}};
  const QVal u = c.quantale().unit();
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c.quantale().leq(u, c.hom(i, j))) p.edges.emplace_back(i, j);
  return p;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Preorder& p, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << dot_quote(graph_name) << " {\n";
  for (const auto& label : p.objects) os << "  " << dot_quote(label) << ";\n";
  for (const auto& [i, j] : p.edges)
    if (i != j) os << "  " << dot_quote(p.objects[i]) << " -> " << dot_quote(p.objects[j]) << ";\n";
  os << "}\n";
  return os.str();
}

bool idempotent_split_check(const Preorder& p) {
  if (!std::is_sorted(p.edges.begin(), p.edges.end())) throw InputError("preorder edges must be sorted");
  if (!p.is_reflexive() || !p.is_transitive()) throw InputError("relation is not reflexive and transitive");
  // The only endo-arrow on i is id_i. A splitting object j needs arrows
  // i -> j -> i composing to id_i and j -> i -> j composing to id_j.
  for (std::size_t i = 0; i < p.objects.size(); ++i) {
    bool splits = false;
    for (std::size_t j = 0; j < p.objects.size() && !splits; ++j) splits = p.related(i, j) && p.related(j, i);
    if (!splits) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Endohoms

const char* to_string(EventClass c) {
  switch (c) {
    case EventClass::Regular:
      return "regular";
    case EventClass::Irregular:
      return "irregular";
    case EventClass::Invalid:
      return "invalid";
  }
  return "";
}

EndohomReport classify_endohoms(const VCategory& c) {
  const auto& q = c.quantale();
  if (q.kind() != Quantale::Kind::RBot) throw CarrierError("endohom classification needs an rbot category, got " + q.name());
  EndohomReport report;
  const std::size_t n = c.size();
  const QVal zero = QVal::finite(0);
  auto is_zero = [&](const QVal& v) { return v.is_finite() && q.equiv(v, zero); };

  for (std::size_t x = 0; x < n; ++x) {
    const QVal& e = c.hom(x, x);
    if (is_zero(e))
      report.classes.push_back(EventClass::Regular);
    else if (e.is_inf())
      report.classes.push_back(EventClass::Irregular);
    else {
      report.classes.push_back(EventClass::Invalid);
      report.violations.push_back({"endohom_value", {x}, e, e});
    }
    QVal doubled = q.tensor(e, e);
    if (!q.equiv(doubled, e)) report.violations.push_back({"idempotent", {x}, doubled, e});
  }

  for (std::size_t x = 0; x < n; ++x) {
    const QVal& e = c.hom(x, x);
    for (std::size_t y = 0; y < n; ++y) {
      QVal left = q.tensor(c.hom(y, x), e);
      if (!q.equiv(left, c.hom(y, x))) report.violations.push_back({"action_left", {y, x}, left, c.hom(y, x)});
      QVal right = q.tensor(e, c.hom(x, y));
      if (!q.equiv(right, c.hom(x, y))) report.violations.push_back({"action_right", {x, y}, right, c.hom(x, y)});

      const QVal& xy = c.hom(x, y);
      const QVal& yx = c.hom(y, x);
      if (report.classes[x] == EventClass::Irregular) {
        if (!(xy.is_bot() || xy.is_inf())) report.violations.push_back({"irregular_homs", {x, y}, xy, e});
        if (!(yx.is_bot() || yx.is_inf())) report.violations.push_back({"irregular_homs", {y, x}, yx, e});
      } else if (report.classes[x] == EventClass::Regular) {
        const bool both_zero = is_zero(xy) && is_zero(yx);
        if (!both_zero && !xy.is_bot() && !yx.is_bot())
          report.violations.push_back({"regular_pair", {x, y}, xy, yx});
      }
    }
  }
  return report;
}

}  // namespace qcat
