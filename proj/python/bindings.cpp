#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <limits>
#include <sstream>

#include "qcat/causal.hpp"
#include "qcat/cli.hpp"
#include "qcat/collage.hpp"
#include "qcat/io.hpp"
#include "qcat/module.hpp"

namespace py = pybind11;
using namespace qcat;

namespace {

// Values may be passed as Value objects or in the textual syntax.
QVal to_val(const Quantale& q, const py::handle& h) {
  if (py::isinstance<QVal>(h)) {
    QVal v = h.cast<QVal>();
    q.require(v);
    return v;
  }
  if (py::isinstance<py::bool_>(h)) return q.parse(h.cast<bool>() ? "true" : "false");
  if (py::isinstance<py::str>(h)) return q.parse(h.cast<std::string>());
  if (py::isinstance<py::int_>(h) || py::isinstance<py::float_>(h)) return q.parse(py::str(h).cast<std::string>());
  throw InputError("cannot interpret " + py::repr(h).cast<std::string>() + " as a value");
}

std::vector<QVal> to_vals(const Quantale& q, const py::iterable& xs) {
  std::vector<QVal> out;
  for (auto x : xs) out.push_back(to_val(q, x));
  return out;
}

Matrix to_matrix(const Quantale& q, const py::iterable& rows) {
  std::vector<std::vector<QVal>> out;
  for (auto r : rows) out.push_back(to_vals(q, r.cast<py::iterable>()));
  return Matrix::from_rows(out);
}

std::size_t to_index(const VCategory& c, const py::handle& h) {
  if (py::isinstance<py::str>(h)) return c.index_of(h.cast<std::string>());
  auto i = h.cast<std::size_t>();
  if (i >= c.size()) throw py::index_error("object index out of range");
  return i;
}

py::list violations(const std::vector<Violation>& vs) {
  py::list out;
  for (const auto& v : vs) {
    py::dict d;
    d["law"] = v.law;
    d["indices"] = v.indices;
    d["lhs"] = v.lhs;
    d["rhs"] = v.rhs;
    out.append(d);
  }
  return out;
}

std::optional<std::string> label(const VCategory& c, const std::optional<std::size_t>& i) {
  if (!i) return std::nullopt;
  return c.objects()[*i];
}

CausalDag dag_from(const std::vector<std::string>& vertices,
                   const std::vector<std::pair<std::string, std::string>>& edges) {
  return CausalDag::from_labels(vertices, edges);
}

io::Json parse_json(const std::string& text) {
  try {
    return io::Json::parse(text);
  } catch (const io::Json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

py::dict adjunction_dict(const AdjunctionReport& r) {
  py::dict d;
  d["unit_ok"] = r.unit_ok;
  d["counit_ok"] = r.counit_ok;
  d["witnesses"] = violations(r.witnesses);
  return d;
}

}  // namespace

PYBIND11_MODULE(_qcat, m) {
  m.doc() = "Finite quantale-enriched categories, modules, collages and causal spaces";

  // Later registrations are tried first, so the derived type comes last.
  auto& input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CarrierError>(m, "CarrierError", PyExc_ValueError);
  py::register_exception<CycleError>(m, "CycleError", input_error.ptr());

  py::class_<QVal>(m, "Value")
      .def_property_readonly("is_bot", &QVal::is_bot)
      .def_property_readonly("is_inf", &QVal::is_inf)
      .def_property_readonly("is_finite", &QVal::is_finite)
      .def("__float__",
           [](const QVal& v) {
             if (v.is_inf()) return std::numeric_limits<double>::infinity();
             if (!v.is_finite()) throw py::value_error("only finite or inf values convert to float");
             return v.scalar().to_double();
           })
      .def("__str__", &QVal::to_string)
      .def("__repr__", [](const QVal& v) { return "Value('" + v.to_string() + "')"; })
      .def("__eq__", [](const QVal& a, const QVal& b) { return a == b; })
      .def("__lt__", [](const QVal& a, const QVal& b) { return a < b; })
      .def("__hash__", [](const QVal& v) { return py::hash(py::str(v.to_string())); });

  py::class_<Quantale>(m, "Quantale")
      .def_static("rbot", &Quantale::rbot, py::arg("tolerance") = 0.0)
      .def_static("lawvere", &Quantale::lawvere, py::arg("tolerance") = 0.0)
      .def_static("boolean", &Quantale::boolean)
      .def_static("product", &Quantale::product)
      .def_static("from_name", [](const std::string& s) { return io::quantale_from_flag(s); })
      .def_property_readonly("name", &Quantale::name)
      .def_property_readonly("tolerance", &Quantale::tolerance)
      .def("with_tolerance", &Quantale::with_tolerance)
      .def("parse", [](const Quantale& q, const std::string& s) { return q.parse(s); })
      .def("leq", [](const Quantale& q, py::handle a, py::handle b) { return q.leq(to_val(q, a), to_val(q, b)); })
      .def("equiv", [](const Quantale& q, py::handle a, py::handle b) { return q.equiv(to_val(q, a), to_val(q, b)); })
      .def("tensor",
           [](const Quantale& q, py::handle a, py::handle b) { return q.tensor(to_val(q, a), to_val(q, b)); })
      .def("residual",
           [](const Quantale& q, py::handle a, py::handle c) { return q.residual(to_val(q, a), to_val(q, c)); })
      .def("join", [](const Quantale& q, const py::iterable& xs) { return q.join(to_vals(q, xs)); })
      .def("meet", [](const Quantale& q, const py::iterable& xs) { return q.meet(to_vals(q, xs)); })
      .def_property_readonly("unit", &Quantale::unit)
      .def_property_readonly("bottom", &Quantale::bottom)
      .def_property_readonly("top", &Quantale::top)
      .def("enumerate", &Quantale::enumerate)
      .def("check_laws",
           [](const Quantale& q, const py::iterable& sample) {
             auto r = check_laws(q, to_vals(q, sample));
             py::list vs;
             for (const auto& v : r.violations) vs.append(py::make_tuple(v.law, v.args));
             py::dict d;
             d["triples_checked"] = r.triples_checked;
             d["violations"] = vs;
             return d;
           })
      .def("join_witness", [](const Quantale& q, const py::iterable& xs) { return join_witness(q, to_vals(q, xs)); })
      .def("__eq__", [](const Quantale& a, const Quantale& b) { return a == b; })
      .def("__repr__", [](const Quantale& q) { return "Quantale('" + q.name() + "')"; });

  py::class_<VCategory>(m, "Category")
      .def(py::init([](const Quantale& q, std::vector<std::string> objects, const py::iterable& hom) {
             return VCategory(q, std::move(objects), to_matrix(q, hom));
           }),
           py::arg("quantale"), py::arg("objects"), py::arg("hom"))
      .def_static("from_json", [](const std::string& s) { return io::category_from_json(parse_json(s)); })
      .def("to_json", [](const VCategory& c) { return io::dump(io::category_to_json(c)); })
      .def_property_readonly("quantale", &VCategory::quantale)
      .def_property_readonly("objects", &VCategory::objects)
      .def("__len__", &VCategory::size)
      .def("hom", [](const VCategory& c, py::handle i, py::handle j) { return c.hom(to_index(c, i), to_index(c, j)); })
      .def("hom_matrix", [](const VCategory& c) { return c.hom_matrix().to_rows(); })
      .def("validate", [](const VCategory& c) { return violations(validate_category(c).violations); })
      .def("is_valid", [](const VCategory& c) { return validate_category(c).ok(); })
      .def("opposite", &opposite)
      .def("tensor", &tensor_categories)
      .def("is_isomorphic", [](const VCategory& a, const VCategory& b) { return find_isomorphism(a, b).has_value(); })
      .def("underlying_preorder",
           [](const VCategory& c) {
             Preorder p = underlying_preorder(c);
             std::vector<std::pair<std::string, std::string>> edges;
             for (auto [i, j] : p.edges) edges.emplace_back(p.objects[i], p.objects[j]);
             return edges;
           })
      .def("to_dot", [](const VCategory& c) { return to_dot(underlying_preorder(c)); })
      .def("classify_endohoms",
           [](const VCategory& c) {
             auto r = classify_endohoms(c);
             py::dict classes;
             for (std::size_t i = 0; i < c.size(); ++i) classes[py::str(c.objects()[i])] = to_string(r.classes[i]);
             py::dict d;
             d["classes"] = classes;
             d["violations"] = violations(r.violations);
             return d;
           })
      .def("__eq__", [](const VCategory& a, const VCategory& b) { return a == b; })
      .def("__repr__", [](const VCategory& c) {
        return "Category(" + c.quantale().name() + ", " + std::to_string(c.size()) + " objects)";
      });

  m.def("unit_category", &unit_category, py::arg("quantale"), py::arg("label") = "*");

  py::class_<VModule>(m, "Module")
      .def(py::init([](const VCategory& source, const VCategory& target, const py::iterable& mat) {
             return VModule(source, target, to_matrix(target.quantale(), mat));
           }),
           py::arg("source"), py::arg("target"), py::arg("mat"))
      .def_static("from_json", [](const std::string& s) { return io::module_from_json(parse_json(s)); })
      .def("to_json", [](const VModule& mod) { return io::dump(io::module_to_json(mod)); })
      .def_property_readonly("source", &VModule::source)
      .def_property_readonly("target", &VModule::target)
      .def("matrix", [](const VModule& mod) { return mod.mat().to_rows(); })
      .def("validate", [](const VModule& mod) { return violations(validate_module(mod).violations); })
      .def("is_valid", [](const VModule& mod) { return validate_module(mod).ok(); })
      .def("__eq__", [](const VModule& a, const VModule& b) { return a == b; });

  m.def("identity_module", &identity_module);
  m.def("compose", &compose, "(M o N) for M : D -|-> E and N : C -|-> D");
  m.def("representable", [](const VCategory& c, py::handle p) { return representable(c, to_index(c, p)); });
  m.def("corepresentable", [](const VCategory& c, py::handle p) { return corepresentable(c, to_index(c, p)); });
  m.def("column_module",
        [](const VCategory& c, const py::iterable& col) { return column_module(c, to_vals(c.quantale(), col)); });
  m.def("row_module",
        [](const VCategory& c, const py::iterable& row) { return row_module(c, to_vals(c.quantale(), row)); });
  m.def("canonical_right_adjoint", &canonical_right_adjoint);
  m.def("check_adjunction", [](const VModule& a, const VModule& b) { return adjunction_dict(check_adjunction(a, b)); });
  m.def("is_cauchy", &is_cauchy);
  m.def("find_representing", [](const VModule& mod) { return label(mod.target(), find_representing(mod)); });
  m.def("representing_objects", [](const VModule& mod) {
    std::vector<std::string> out;
    for (auto i : representing_objects(mod)) out.push_back(mod.target().objects()[i]);
    return out;
  });
  m.def("cauchy_witness",
        [](const VModule& a, const VModule& b) { return label(a.target(), cauchy_witness(a, b)); });
  m.def("default_grid", [](const VCategory& c) { return default_grid(c); });
  m.def(
      "completeness_report",
      [](const VCategory& c, std::optional<py::iterable> grid, unsigned threads) {
        std::vector<QVal> g = grid ? to_vals(c.quantale(), *grid) : default_grid(c);
        CompletenessReport r;
        {
          py::gil_scoped_release release;
          r = cauchy_completeness_report(c, g, threads);
        }
        py::list cauchy;
        for (const auto& cm : r.cauchy) {
          py::dict d;
          d["column"] = cm.column;
          d["representing"] = label(c, cm.representing);
          d["witness"] = label(c, cm.witness);
          cauchy.append(d);
        }
        py::dict d;
        d["grid"] = r.grid;
        d["modules_checked"] = r.modules_checked;
        d["cauchy"] = cauchy;
        d["non_representable"] = r.counterexamples;
        d["complete"] = r.complete();
        return d;
      },
      py::arg("category"), py::arg("grid") = py::none(), py::arg("threads") = 1);

  m.def("collage", [](const VModule& mod) {
    Collage c = collage(mod);
    std::vector<std::string> part;
    for (auto s : c.partition) part.push_back(s == Side::Left ? "left" : "right");
    return py::make_tuple(c.category, part);
  });
  m.def("restrict", [](const VCategory& c, const std::vector<std::string>& partition) {
    std::vector<Side> sides;
    for (const auto& s : partition) {
      if (s == "left")
        sides.push_back(Side::Left);
      else if (s == "right")
        sides.push_back(Side::Right);
      else
        throw InputError("partition entries must be 'left' or 'right'");
    }
    return restrict(Collage{c, sides});
  });
  m.def("adjoin_point", &adjoin_point, py::arg("m"), py::arg("n"), py::arg("label") = "*");

  m.def("causal_space_from_dag", [](const std::vector<std::string>& vertices,
                                    const std::vector<std::pair<std::string, std::string>>& edges) {
    return causal_space_from_dag(dag_from(vertices, edges));
  }, py::arg("vertices"), py::arg("edges"));
  m.def("causal_space_from_text", [](const std::string& text) { return causal_space_from_dag(io::dag_from_string(text)); });
  m.def("longest_path", [](const std::vector<std::string>& vertices,
                           const std::vector<std::pair<std::string, std::string>>& edges, const std::string& a,
                           const std::string& b) {
    CausalDag dag = dag_from(vertices, edges);
    const auto& vs = dag.vertices();
    auto find = [&](const std::string& l) {
      auto it = std::find(vs.begin(), vs.end(), l);
      if (it == vs.end()) throw InputError("unknown vertex '" + l + "'");
      return static_cast<std::size_t>(it - vs.begin());
    };
    return longest_path_oracle(dag, find(a), find(b));
  });
  m.def("minkowski_interval", [](std::pair<double, double> a, std::pair<double, double> b) {
    return minkowski_interval({a.first, a.second}, {b.first, b.second});
  });
  m.def(
      "minkowski_sample",
      [](std::size_t n, std::uint64_t seed, std::tuple<double, double, double, double> b) {
        auto s = minkowski_sample(n, seed, {std::get<0>(b), std::get<1>(b), std::get<2>(b), std::get<3>(b)});
        std::vector<std::pair<double, double>> events;
        for (const auto& e : s.events) events.emplace_back(e.t, e.x);
        return py::make_tuple(events, s.category);
      },
      py::arg("n"), py::arg("seed"), py::arg("bounds") = std::make_tuple(0.0, 1.0, 0.0, 1.0));
  m.def("mixed_signature_check", [] {
    auto r = mixed_signature_check();
    py::dict d;
    d["d_ab"] = r.d_ab;
    d["d_bc"] = r.d_bc;
    d["d_ac"] = r.d_ac;
    d["sum"] = r.sum;
    d["violation"] = r.violation;
    return d;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Runs one CLI invocation; returns (exit code, stdout, stderr).");
}
