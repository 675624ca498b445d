#include "qcat/io.hpp"

#include <cmath>
#include <sstream>

namespace qcat::io {

namespace {

std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

const Json& field(const Json& j, const std::string& at, const char* key) {
  if (!j.is_object()) throw FieldError(at.empty() ? "/" : at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw FieldError(child(at, key), "missing field");
  return *it;
}

QVal value_from_json(const Quantale& q, const Json& j, const std::string& at) {
  try {
    if (j.is_string()) return q.parse(j.get<std::string>());
    if (j.is_boolean()) return q.parse(j.get<bool>() ? "true" : "false");
    if (j.is_number_integer()) return q.parse(j.dump());
    if (j.is_number_float()) return q.parse(j.dump());
  } catch (const InputError& e) {
    throw FieldError(at, e.what());
  }
  throw FieldError(at, "expected a value string");
}

Matrix matrix_from_json(const Quantale& q, const Json& j, const std::string& at, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) throw FieldError(at, "expected an array of rows");
  if (j.size() != rows)
    throw FieldError(at, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    const auto row_at = child(at, r);
    if (!row.is_array()) throw FieldError(row_at, "expected an array");
    if (row.size() != cols)
      throw FieldError(row_at, "expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = value_from_json(q, row[c], child(row_at, c));
  }
  return m;
}

std::vector<std::string> labels_from_json(const Json& j, const std::string& at) {
  if (!j.is_array()) throw FieldError(at, "expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw FieldError(child(at, i), "expected a string label");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

bool is_unit_marker(const Json& j) { return j.is_string() && j.get<std::string>() == "I"; }

}  // namespace

// ---------------------------------------------------------------------------
// Quantales

Quantale quantale_from_json(const Json& j, const std::string& at) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "rbot") return Quantale::rbot();
    if (s == "lawvere") return Quantale::lawvere();
    if (s == "bool") return Quantale::boolean();
    throw FieldError(at, "unknown quantale '" + s + "' (expected rbot, lawvere, bool or a list)");
  }
  if (j.is_array() && !j.empty()) {
    std::vector<Quantale> factors;
    for (std::size_t i = 0; i < j.size(); ++i) factors.push_back(quantale_from_json(j[i], child(at, i)));
    return Quantale::product(std::move(factors));
  }
  throw FieldError(at, "expected a quantale name or a non-empty list of factors");
}

Json quantale_to_json(const Quantale& q) {
  if (q.kind() != Quantale::Kind::Product) return q.name();
  Json arr = Json::array();
  for (const auto& f : q.factors()) arr.push_back(quantale_to_json(f));
  return arr;
}

namespace {

std::vector<std::string_view> split_top_level(std::string_view text) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') --depth;
    else if (text[i] == ',' && depth == 0) {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(text.substr(start));
  return out;
}

}  // namespace

Quantale quantale_from_flag(std::string_view text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  auto parts = split_top_level(text);
  if (parts.size() == 1) return quantale_from_json(Json(std::string(parts[0])), "--quantale");
  std::vector<Quantale> factors;
  for (auto p : parts) factors.push_back(quantale_from_flag(p));
  return Quantale::product(std::move(factors));
}

std::vector<QVal> grid_from_flag(const Quantale& q, std::string_view text) {
  std::vector<QVal> out;
  if (text.empty()) return out;
  std::size_t i = 0;
  for (auto p : split_top_level(text)) {
    try {
      out.push_back(q.parse(p));
    } catch (const InputError& e) {
      throw FieldError("--grid item " + std::to_string(i), e.what());
    }
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Categories and modules

VCategory category_from_json(const Json& j, const std::string& at) {
  Quantale q = quantale_from_json(field(j, at, "quantale"), child(at, "quantale"));
  if (auto it = j.find("tolerance"); it != j.end()) {
    if (!it->is_number() || it->get<double>() < 0.0 || !std::isfinite(it->get<double>()))
      throw FieldError(child(at, "tolerance"), "expected a nonnegative number");
    q = q.with_tolerance(it->get<double>());
  }
  auto objects = labels_from_json(field(j, at, "objects"), child(at, "objects"));
  Matrix hom = matrix_from_json(q, field(j, at, "hom"), child(at, "hom"), objects.size(), objects.size());
  try {
    return VCategory(q, std::move(objects), std::move(hom));
  } catch (const InputError& e) {
    throw FieldError(child(at, "objects"), e.what());
  }
}

Json category_to_json(const VCategory& c) {
  return Json{{"quantale", quantale_to_json(c.quantale())},
              {"tolerance", c.quantale().tolerance()},
              {"objects", c.objects()},
              {"hom", matrix_to_json(c.hom_matrix())}};
}

VModule module_from_json(const Json& j, const std::string& at) {
  const Json& src = field(j, at, "source");
  const Json& tgt = field(j, at, "target");
  if (is_unit_marker(src) && is_unit_marker(tgt))
    throw FieldError(child(at, "source"), "at most one of source and target may be \"I\"");
  std::optional<VCategory> source;
  std::optional<VCategory> target;
  if (!is_unit_marker(src)) source = category_from_json(src, child(at, "source"));
  if (!is_unit_marker(tgt)) target = category_from_json(tgt, child(at, "target"));
  if (!source) source = unit_category(target->quantale());
  if (!target) target = unit_category(source->quantale());
  if (!source->quantale().same_carrier(target->quantale()))
    throw FieldError(child(at, "source"), "source and target use different quantales");
  const auto& q = target->quantale();
  Matrix mat = matrix_from_json(q, field(j, at, "mat"), child(at, "mat"), target->size(), source->size());
  return VModule(std::move(*source), std::move(*target), std::move(mat));
}

Json module_to_json(const VModule& m) {
  auto side = [&](const VCategory& c) -> Json {
    if (c == unit_category(m.quantale())) return "I";
    return category_to_json(c);
  };
  return Json{{"source", side(m.source())}, {"target", side(m.target())}, {"mat", matrix_to_json(m.mat())}};
}

Collage collage_from_json(const Json& j, const std::string& at) {
  VCategory c = category_from_json(j, at);
  const Json& p = field(j, at, "partition");
  const auto p_at = child(at, "partition");
  if (!p.is_array() || p.size() != c.size())
    throw FieldError(p_at, "expected one of \"left\"/\"right\" per object");
  std::vector<Side> partition;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == "left")
      partition.push_back(Side::Left);
    else if (p[i] == "right")
      partition.push_back(Side::Right);
    else
      throw FieldError(child(p_at, i), "expected \"left\" or \"right\"");
  }
  return Collage{std::move(c), std::move(partition)};
}

Json collage_to_json(const Collage& c) {
  Json j = category_to_json(c.category);
  Json p = Json::array();
  for (auto s : c.partition) p.push_back(s == Side::Left ? "left" : "right");
  j["partition"] = std::move(p);
  return j;
}

// ---------------------------------------------------------------------------
// DAGs

CausalDag dag_from_json(const Json& j) {
  std::vector<std::string> vertices;
  if (j.contains("vertices")) vertices = labels_from_json(j["vertices"], "/vertices");
  const Json& edges = field(j, "", "edges");
  if (!edges.is_array()) throw FieldError("/edges", "expected an array of [from, to] pairs");
  std::vector<std::pair<std::string, std::string>> labelled;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw FieldError(child("/edges", i), "expected a pair of vertex labels");
    labelled.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  if (j.contains("vertices")) {
    for (std::size_t i = 0; i < labelled.size(); ++i)
      for (const auto& l : {labelled[i].first, labelled[i].second})
        if (std::find(vertices.begin(), vertices.end(), l) == vertices.end())
          throw FieldError(child("/edges", i), "unknown vertex '" + l + "'");
  }
  try {
    return CausalDag::from_labels(std::move(vertices), labelled);
  } catch (const CycleError&) {
    throw;
  } catch (const InputError& e) {
    throw FieldError("/edges", e.what());
  }
}

CausalDag dag_from_text(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() == 1) {
      if (std::find(vertices.begin(), vertices.end(), tokens[0]) == vertices.end()) vertices.push_back(tokens[0]);
      continue;
    }
    if (tokens.size() != 2)
      throw FieldError("line " + std::to_string(lineno), "expected 'from to', got " + std::to_string(tokens.size()) + " fields");
    for (const auto& t : tokens)
      if (std::find(vertices.begin(), vertices.end(), t) == vertices.end()) vertices.push_back(t);
    if (std::find(edges.begin(), edges.end(), std::make_pair(tokens[0], tokens[1])) != edges.end())
      throw FieldError("line " + std::to_string(lineno), "duplicate edge '" + tokens[0] + " " + tokens[1] + "'");
    edges.emplace_back(tokens[0], tokens[1]);
  }
  return CausalDag::from_labels(std::move(vertices), edges);
}

CausalDag dag_from_string(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw FieldError("byte " + std::to_string(e.byte), "invalid JSON");
    }
    return dag_from_json(j);
  }
  return dag_from_text(text);
}

// ---------------------------------------------------------------------------
// Reports

Json values_to_json(const std::vector<QVal>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.to_string());
  return arr;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json law_report_to_json(const LawReport& r) {
  Json vs = Json::array();
  for (const auto& v : r.violations) vs.push_back(Json{{"law", v.law}, {"args", values_to_json(v.args)}});
  return Json{{"triples_checked", r.triples_checked}, {"violations", std::move(vs)}};
}

Json violations_to_json(const std::vector<Violation>& vs, const std::vector<const std::vector<std::string>*>& labels) {
  Json arr = Json::array();
  for (const auto& v : vs) {
    Json objects = Json::array();
    for (std::size_t k = 0; k < v.indices.size(); ++k) {
      const auto* names = labels.empty() ? nullptr : labels[std::min(k, labels.size() - 1)];
      objects.push_back(names && v.indices[k] < names->size() ? Json((*names)[v.indices[k]]) : Json(nullptr));
    }
    arr.push_back(Json{{"law", v.law},
                       {"indices", v.indices},
                       {"objects", std::move(objects)},
                       {"lhs", v.lhs.to_string()},
                       {"rhs", v.rhs.to_string()}});
  }
  return arr;
}

Json category_report_to_json(const VCategory& c, const ValidationReport& r) {
  return Json{{"valid", r.ok()}, {"violations", violations_to_json(r.violations, {&c.objects()})}};
}

Json endohom_report_to_json(const VCategory& c, const EndohomReport& r) {
  Json classes = Json::object();
  for (std::size_t i = 0; i < c.size(); ++i) classes[c.objects()[i]] = to_string(r.classes[i]);
  return Json{{"classes", std::move(classes)}, {"violations", violations_to_json(r.violations, {&c.objects()})}};
}

Json adjunction_report_to_json(const VModule& m, const AdjunctionReport& r) {
  Json unit = Json::array();
  Json counit = Json::array();
  for (const auto& w : r.witnesses) {
    if (w.law == "unit")
      unit.push_back(violations_to_json({w}, {&m.source().objects()})[0]);
    else
      counit.push_back(violations_to_json({w}, {&m.target().objects()})[0]);
  }
  return Json{{"unit_ok", r.unit_ok},
              {"counit_ok", r.counit_ok},
              {"unit_failures", std::move(unit)},
              {"counit_failures", std::move(counit)}};
}

Json completeness_report_to_json(const VCategory& c, const CompletenessReport& r, bool verbose) {
  Json counter = Json::array();
  for (const auto& col : r.counterexamples) counter.push_back(values_to_json(col));
  Json j{{"grid", values_to_json(r.grid)},
         {"modules_checked", r.modules_checked},
         {"cauchy_count", r.cauchy.size()},
         {"complete", r.complete()},
         {"non_representable", std::move(counter)}};
  if (verbose) {
    Json all = Json::array();
    for (const auto& cm : r.cauchy) {
      all.push_back(Json{{"column", values_to_json(cm.column)},
                         {"representing", cm.representing ? Json(c.objects()[*cm.representing]) : Json(nullptr)},
                         {"witness", cm.witness ? Json(c.objects()[*cm.witness]) : Json(nullptr)}});
    }
    j["cauchy_modules"] = std::move(all);
  }
  return j;
}

Json preorder_to_json(const Preorder& p) {
  Json edges = Json::array();
  for (const auto& [i, j] : p.edges) edges.push_back(Json::array({p.objects[i], p.objects[j]}));
  return Json{{"objects", p.objects}, {"edges", std::move(edges)}};
}

Json mixed_record_to_json(const MixedSignatureRecord& r) {
  auto pt = [](const Event2D& e) { return Json::array({e.t, e.x}); };
  return Json{{"points", Json{{"A", pt(r.a)}, {"B", pt(r.b)}, {"C", pt(r.c)}}},
              {"d_AB", r.d_ab},
              {"d_BC", r.d_bc},
              {"d_AC", r.d_ac},
              {"d_AB_plus_d_BC", r.sum},
              {"violation", r.violation}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qcat::io
