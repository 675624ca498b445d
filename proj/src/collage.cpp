#include "qcat/collage.hpp"

#include <algorithm>

namespace qcat {

namespace {

std::string describe(const ValidationReport& report) {
  std::string out;
  for (const auto& v : report.violations) {
    if (!out.empty()) out += "; ";
    out += v.law + " at (";
    for (std::size_t i = 0; i < v.indices.size(); ++i) out += (i ? "," : "") + std::to_string(v.indices[i]);
    out += "): " + v.lhs.to_string() + " > " + v.rhs.to_string();
  }
  return out;
}

std::string strip(const std::string& label, const std::string& prefix) {
  if (label.rfind(prefix, 0) == 0) return label.substr(prefix.size());
  return label;
}

}  // namespace

Collage collage(const VModule& m) {
  if (auto report = validate_module(m); !report.ok())
    throw InputError("module is not valid: " + describe(report));
  const auto& e = m.target();
  const auto& d = m.source();
  const auto& q = m.quantale();
  const std::size_t ne = e.size();
  const std::size_t n = ne + d.size();

  std::vector<std::string> labels;
  std::vector<Side> partition;
  for (const auto& l : e.objects()) {
    labels.push_back(kLeftPrefix + l);
    partition.push_back(Side::Left);
  }
  for (const auto& l : d.objects()) {
    labels.push_back(kRightPrefix + l);
    partition.push_back(Side::Right);
  }

  Matrix hom(n, n, q.bottom());
  for (std::size_t i = 0; i < ne; ++i)
    for (std::size_t j = 0; j < ne; ++j) hom(i, j) = e.hom(i, j);
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = 0; b < d.size(); ++b) hom(ne + a, ne + b) = d.hom(a, b);
  for (std::size_t x = 0; x < ne; ++x)
    for (std::size_t a = 0; a < d.size(); ++a) hom(x, ne + a) = m(x, a);
  return Collage{VCategory(q, std::move(labels), std::move(hom)), std::move(partition)};
}

VModule restrict(const Collage& c) {
  const auto& cat = c.category;
  if (c.partition.size() != cat.size())
    throw InputError("partition has " + std::to_string(c.partition.size()) + " entries for " +
                     std::to_string(cat.size()) + " objects");
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  for (std::size_t i = 0; i < cat.size(); ++i) (c.partition[i] == Side::Left ? left : right).push_back(i);

  const auto& q = cat.quantale();
  for (auto a : right)
    for (auto x : left)
      if (!(cat.hom(a, x) == q.bottom()))
        throw InputError("collage has a non-bottom hom from right object '" + cat.objects()[a] + "' to left object '" +
                         cat.objects()[x] + "'");

  auto block = [&](const std::vector<std::size_t>& idx, const std::string& prefix) {
    std::vector<std::string> labels;
    Matrix hom(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      labels.push_back(strip(cat.objects()[idx[i]], prefix));
      for (std::size_t j = 0; j < idx.size(); ++j) hom(i, j) = cat.hom(idx[i], idx[j]);
    }
    return VCategory(q, std::move(labels), std::move(hom));
  };
  VCategory e = block(left, kLeftPrefix);
  VCategory d = block(right, kRightPrefix);
  Matrix mat(left.size(), right.size());
  for (std::size_t x = 0; x < left.size(); ++x)
    for (std::size_t a = 0; a < right.size(); ++a) mat(x, a) = cat.hom(left[x], right[a]);
  return VModule(std::move(d), std::move(e), std::move(mat));
}

VCategory adjoin_point(const VModule& m, const VModule& n, const std::string& label) {
  if (!is_unit_category(m.source()) || !is_unit_category(n.target()) || !(m.target() == n.source()))
    throw InputError("adjoin_point needs M : I -|-> E and N : E -|-> I over the same E");
  const auto& e = m.target();
  const auto& q = e.quantale();
  const std::size_t k = e.size();
  if (std::find(e.objects().begin(), e.objects().end(), label) != e.objects().end())
    throw InputError("label '" + label + "' already names an object");

  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t r = 0; r < k; ++r) {
      QVal through = q.tensor(m(p, 0), n(0, r));
      if (!q.leq(through, e.hom(p, r)))
        throw InputError("counit fails at (" + e.objects()[p] + "," + e.objects()[r] + "): " + through.to_string() +
                         " > " + e.hom(p, r).to_string());
    }
  const QVal u = q.unit();
  for (std::size_t p = 0; p < k; ++p) {
    QVal loop = q.tensor(n(0, p), m(p, 0));
    if (!q.leq(loop, u))
      throw InputError("loop through '" + e.objects()[p] + "' gives " + loop.to_string() +
                       ", which exceeds the unit endohom of the new point");
  }

  std::vector<std::string> labels = e.objects();
  labels.push_back(label);
  Matrix hom(k + 1, k + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) hom(i, j) = e.hom(i, j);
  for (std::size_t p = 0; p < k; ++p) {
    hom(p, k) = m(p, 0);
    hom(k, p) = n(0, p);
  }
  hom(k, k) = u;
  return VCategory(q, std::move(labels), std::move(hom));
}

}  // namespace qcat
