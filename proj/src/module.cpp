#include "qcat/module.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace qcat {

VModule::VModule(VCategory source, VCategory target, Matrix mat)
    : source_(std::move(source)), target_(std::move(target)), mat_(std::move(mat)) {
  if (!source_.quantale().same_carrier(target_.quantale()))
    throw CarrierError("module between categories over " + source_.quantale().name() + " and " +
                       target_.quantale().name());
  if (mat_.rows() != target_.size() || mat_.cols() != source_.size())
    throw InputError("module matrix is " + std::to_string(mat_.rows()) + "x" + std::to_string(mat_.cols()) +
                     ", expected " + std::to_string(target_.size()) + "x" + std::to_string(source_.size()) +
                     " (target objects x source objects)");
  for (std::size_t x = 0; x < mat_.rows(); ++x)
    for (std::size_t a = 0; a < mat_.cols(); ++a) quantale().require(mat_(x, a));
}

VModule identity_module(const VCategory& e) { return VModule(e, e, e.hom_matrix()); }

ValidationReport validate_module(const VModule& m) {
  ValidationReport report;
  const auto& q = m.quantale();
  const auto& e = m.target();
  const auto& d = m.source();
  for (std::size_t y = 0; y < e.size(); ++y)
    for (std::size_t x = 0; x < e.size(); ++x)
      for (std::size_t a = 0; a < d.size(); ++a) {
        QVal lhs = q.tensor(e.hom(y, x), m(x, a));
        if (!q.leq(lhs, m(y, a))) report.violations.push_back({"left_action", {y, x, a}, std::move(lhs), m(y, a)});
      }
  for (std::size_t x = 0; x < e.size(); ++x)
    for (std::size_t a = 0; a < d.size(); ++a)
      for (std::size_t b = 0; b < d.size(); ++b) {
        QVal lhs = q.tensor(m(x, a), d.hom(a, b));
        if (!q.leq(lhs, m(x, b))) report.violations.push_back({"right_action", {x, a, b}, std::move(lhs), m(x, b)});
      }
  return report;
}

VModule compose(const VModule& m, const VModule& n) {
  if (!(m.source() == n.target())) throw InputError("modules are not composable: source of the first is not the target of the second");
  const auto& q = m.quantale();
  const std::size_t rows = m.target().size();
  const std::size_t mid = m.source().size();
  const std::size_t cols = n.source().size();
  Matrix out(rows, cols);
  for (std::size_t x = 0; x < rows; ++x)
    for (std::size_t p = 0; p < cols; ++p) {
      QVal acc = q.bottom();
      for (std::size_t a = 0; a < mid; ++a) acc = q.join(acc, q.tensor(m(x, a), n(a, p)));
      out(x, p) = std::move(acc);
    }
  return VModule(n.source(), m.target(), std::move(out));
}

VModule representable(const VCategory& c, std::size_t p) {
  if (p >= c.size()) throw InputError("object index out of range");
  Matrix col(c.size(), 1);
  for (std::size_t y = 0; y < c.size(); ++y) col(y, 0) = c.hom(y, p);
  return VModule(unit_category(c.quantale()), c, std::move(col));
}

VModule corepresentable(const VCategory& c, std::size_t p) {
  if (p >= c.size()) throw InputError("object index out of range");
  Matrix row(1, c.size());
  for (std::size_t y = 0; y < c.size(); ++y) row(0, y) = c.hom(p, y);
  return VModule(c, unit_category(c.quantale()), std::move(row));
}

VModule column_module(const VCategory& c, const std::vector<QVal>& column) {
  if (column.size() != c.size()) throw InputError("column length does not match object count");
  Matrix m(c.size(), 1);
  for (std::size_t y = 0; y < c.size(); ++y) m(y, 0) = column[y];
  return VModule(unit_category(c.quantale()), c, std::move(m));
}

VModule row_module(const VCategory& c, const std::vector<QVal>& row) {
  if (row.size() != c.size()) throw InputError("row length does not match object count");
  Matrix m(1, c.size());
  for (std::size_t y = 0; y < c.size(); ++y) m(0, y) = row[y];
  return VModule(c, unit_category(c.quantale()), std::move(m));
}

VModule canonical_right_adjoint(const VModule& m) {
  const auto& q = m.quantale();
  const auto& e = m.target();
  const auto& d = m.source();
  Matrix n(d.size(), e.size());
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t x = 0; x < e.size(); ++x) {
      QVal acc = q.top();
      for (std::size_t y = 0; y < e.size(); ++y) acc = q.meet(acc, q.residual(m(y, a), e.hom(y, x)));
      n(a, x) = std::move(acc);
    }
  return VModule(e, d, std::move(n));
}

AdjunctionReport check_adjunction(const VModule& m, const VModule& n) {
  if (!(m.source() == n.target()) || !(m.target() == n.source()))
    throw InputError("modules do not form a candidate adjoint pair (D -|-> E and E -|-> D)");
  AdjunctionReport report;
  const auto& q = m.quantale();
  const VModule nm = compose(n, m);
  const VModule mn = compose(m, n);
  const auto& d = m.source();
  const auto& e = m.target();
  report.unit_ok = true;
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = 0; b < d.size(); ++b)
      if (!q.leq(d.hom(a, b), nm(a, b))) {
        report.unit_ok = false;
        report.witnesses.push_back({"unit", {a, b}, d.hom(a, b), nm(a, b)});
      }
  report.counit_ok = true;
  for (std::size_t y = 0; y < e.size(); ++y)
    for (std::size_t x = 0; x < e.size(); ++x)
      if (!q.leq(mn(y, x), e.hom(y, x))) {
        report.counit_ok = false;
        report.witnesses.push_back({"counit", {y, x}, mn(y, x), e.hom(y, x)});
      }
  return report;
}

namespace {

void require_unit_source(const VModule& m) {
  if (!is_unit_category(m.source())) throw InputError("module source must be the one-object unit category I");
}

}  // namespace

bool is_cauchy(const VModule& m) {
  require_unit_source(m);
  return check_adjunction(m, canonical_right_adjoint(m)).ok();
}

std::vector<std::size_t> representing_objects(const VModule& m) {
  require_unit_source(m);
  const auto& q = m.quantale();
  const auto& e = m.target();
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < e.size(); ++z) {
    bool match = true;
    for (std::size_t y = 0; y < e.size() && match; ++y) match = q.equiv(m(y, 0), e.hom(y, z));
    if (match) out.push_back(z);
  }
  return out;
}

std::optional<std::size_t> find_representing(const VModule& m) {
  auto all = representing_objects(m);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::optional<std::size_t> cauchy_witness(const VModule& m, const VModule& n) {
  require_unit_source(m);
  if (!check_adjunction(m, n).ok()) throw InputError("cauchy_witness requires an adjoint pair");
  const auto& q = m.quantale();
  const QVal u = q.unit();
  for (std::size_t z = 0; z < m.target().size(); ++z)
    if (q.leq(u, q.tensor(n(0, z), m(z, 0)))) return z;
  return std::nullopt;
}

std::vector<QVal> default_grid(const VCategory& c, std::size_t cap) {
  const auto& q = c.quantale();
  // Finite carriers are searched in full.
  if (q.kind() == Quantale::Kind::Bool || q.kind() == Quantale::Kind::Product) {
    auto all = q.enumerate();
    if (all.size() > cap)
      throw InputError("carrier has " + std::to_string(all.size()) + " values, more than " + std::to_string(cap) +
                       "; pass an explicit grid");
    std::sort(all.begin(), all.end());
    return all;
  }
  std::set<QVal> values{q.bottom(), q.unit(), q.top()};
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) values.insert(c.hom(i, j));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<QVal> snapshot(values.begin(), values.end());
    for (const auto& a : snapshot)
      for (const auto& b : snapshot) {
        if (values.insert(q.residual(a, b)).second) grew = true;
        if (values.size() > cap)
          throw InputError("residual closure of the hom values exceeds " + std::to_string(cap) +
                           " values; pass an explicit grid");
      }
  }
  return {values.begin(), values.end()};
}

CompletenessReport cauchy_completeness_report(const VCategory& c, std::vector<QVal> grid, unsigned threads) {
  const auto& q = c.quantale();
  for (const auto& v : grid) q.require(v);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  CompletenessReport report;
  report.grid = grid;
  const std::size_t n = c.size();

  // Columns satisfying C(Y,X) (x) M(X) <= M(Y), built one entry at a time.
  std::vector<std::vector<QVal>> candidates;
  std::vector<QVal> column(n);
  auto consistent = [&](std::size_t k) {
    for (std::size_t j = 0; j <= k; ++j) {
      if (!q.leq(q.tensor(c.hom(j, k), column[k]), column[j])) return false;
      if (!q.leq(q.tensor(c.hom(k, j), column[j]), column[k])) return false;
    }
    return true;
  };
  auto extend = [&](auto& self, std::size_t k) -> void {
    if (k == n) {
      candidates.push_back(column);
      return;
    }
    for (const auto& v : grid) {
      column[k] = v;
      if (consistent(k)) self(self, k + 1);
    }
  };
  extend(extend, 0);
  report.modules_checked = candidates.size();

  std::vector<std::optional<CauchyModule>> results(candidates.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      VModule m = column_module(c, candidates[i]);
      VModule adj = canonical_right_adjoint(m);
      if (!check_adjunction(m, adj).ok()) continue;
      results[i] = CauchyModule{candidates[i], find_representing(m), cauchy_witness(m, adj)};
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1 || candidates.size() < 2) {
    work(0, candidates.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (candidates.size() + threads - 1) / threads;
    for (std::size_t begin = 0; begin < candidates.size(); begin += chunk)
      pool.emplace_back(work, begin, std::min(candidates.size(), begin + chunk));
  }

  for (auto& r : results)
    if (r) report.cauchy.push_back(std::move(*r));
  auto by_column = [](const CauchyModule& a, const CauchyModule& b) { return a.column < b.column; };
  std::sort(report.cauchy.begin(), report.cauchy.end(), by_column);
  for (const auto& cm : report.cauchy)
    if (!cm.representing) report.counterexamples.push_back(cm.column);
  return report;
}

}  // namespace qcat
