#include "qcat/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "qcat/causal.hpp"
#include "qcat/category.hpp"
#include "qcat/collage.hpp"
#include "qcat/io.hpp"
#include "qcat/module.hpp"

namespace qcat::cli {

namespace {

using io::Json;

/// Input problem tied to a file.
struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError(path + ": cannot write file");
  out << text;
}

// Parses a file with `parse`, prefixing any input error with the file name.
template <class F>
auto load(const std::string& path, F&& parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const io::FieldError& e) {
    throw FileError(path + ": " + e.what());
  } catch (const CycleError& e) {
    throw FileError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw FileError(path + ": " + e.what());
  } catch (const Json::exception& e) {
    throw FileError(path + ": " + e.what());
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw io::FieldError("byte " + std::to_string(e.byte), "invalid JSON");
  }
}

VCategory load_category(const std::string& path) {
  return load(path, [](const std::string& t) { return io::category_from_json(parse_json(t)); });
}

VModule load_module(const std::string& path) {
  return load(path, [](const std::string& t) { return io::module_from_json(parse_json(t)); });
}

const char* status_name(int code) {
  switch (code) {
    case kOk:
      return "ok";
    case kViolations:
      return "violations";
    default:
      return "error";
  }
}

int emit(std::ostream& out, Json payload, int code) {
  payload["status"] = status_name(code);
  out << io::dump(payload);
  return code;
}

Json labels_of(const VCategory& c, const std::vector<std::size_t>& idx) {
  Json arr = Json::array();
  for (auto i : idx) arr.push_back(c.objects()[i]);
  return arr;
}

Json label_or_null(const VCategory& c, const std::optional<std::size_t>& i) {
  return i ? Json(c.objects()[*i]) : Json(nullptr);
}

std::vector<QVal> default_law_sample(const Quantale& q) {
  switch (q.kind()) {
    case Quantale::Kind::RBot:
      return {QVal::bot(), QVal::finite(0), QVal::finite(1), QVal::finite(5, 2), QVal::finite(7), QVal::inf()};
    case Quantale::Kind::LawvereR:
      return {QVal::finite(0), QVal::finite(1), QVal::finite(5, 2), QVal::finite(7), QVal::inf()};
    default:
      return q.enumerate();
  }
}

std::vector<double> parse_bounds(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw FileError("--bounds: malformed number '" + item + "'");
    }
  }
  if (out.size() != 4) throw FileError("--bounds: expected t0,t1,x0,x1");
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite quantale-enriched categories, modules and causal spaces", "qcat"};
  app.require_subcommand(1);

  std::string quantale_flag;
  std::string grid_flag;
  std::string in1;
  std::string in2;
  std::string out_path;
  std::string dot_path;
  std::string label = "*";
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string bounds_flag = "0,1,0,1";
  unsigned threads = 1;
  bool verbose = false;

  auto* laws = app.add_subcommand("laws", "Check quantale laws on a sample grid");
  laws->add_option("--quantale", quantale_flag, "rbot | lawvere | bool | bool,bool")->required();
  laws->add_option("--grid", grid_flag, "Comma-separated sample values");

  auto* validate = app.add_subcommand("validate", "Validate a category (and classify endohoms over rbot)");
  validate->add_option("category", in1)->required();

  auto* compose_cmd = app.add_subcommand("compose", "Compose modules M o N");
  compose_cmd->add_option("m", in1)->required();
  compose_cmd->add_option("n", in2)->required();
  compose_cmd->add_option("-o,--output", out_path);

  auto* adjoint = app.add_subcommand("adjoint", "Canonical right adjoint and adjunction check");
  adjoint->add_option("module", in1)->required();
  adjoint->add_option("-o,--output", out_path);

  auto* cauchy = app.add_subcommand("cauchy", "Cauchy test, representing object and witness for M : I -|-> E");
  cauchy->add_option("module", in1)->required();

  auto* complete = app.add_subcommand("complete", "Search for Cauchy modules that are not representable");
  complete->add_option("category", in1)->required();
  complete->add_option("--grid", grid_flag, "Comma-separated entry values (default: residual closure)");
  complete->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  complete->add_flag("--verbose", verbose, "List every Cauchy module found");

  auto* collage_cmd = app.add_subcommand("collage", "Collage of a module");
  collage_cmd->add_option("module", in1)->required();
  collage_cmd->add_option("-o,--output", out_path);

  auto* restrict_cmd = app.add_subcommand("restrict", "Recover the module from a collage");
  restrict_cmd->add_option("collage", in1)->required();
  restrict_cmd->add_option("-o,--output", out_path);

  auto* adjoin = app.add_subcommand("adjoin", "Adjoin a point from M : I -|-> E and N : E -|-> I");
  adjoin->add_option("m", in1)->required();
  adjoin->add_option("n", in2)->required();
  adjoin->add_option("-o,--output", out_path);
  adjoin->add_option("--label", label, "Label of the new object");

  auto* from_dag = app.add_subcommand("from-dag", "Causal space of a DAG (edge list or JSON)");
  from_dag->add_option("dag", in1)->required();
  from_dag->add_option("-o,--output", out_path);

  auto* minkowski = app.add_subcommand("minkowski", "Sample events in 2D Minkowski space");
  minkowski->add_option("--n", n, "Number of events")->required();
  minkowski->add_option("--seed", seed, "Generator seed");
  minkowski->add_option("--bounds", bounds_flag, "t0,t1,x0,x1");
  minkowski->add_option("-o,--output", out_path);

  auto* underlying = app.add_subcommand("underlying", "Underlying preorder of a category");
  underlying->add_option("category", in1)->required();
  underlying->add_option("--dot", dot_path, "Write Graphviz output here");

  auto* mixed = app.add_subcommand("counterexample-mixed", "Mixed-signature triangle failure in 2D Minkowski space");

  std::vector<std::string> argv_storage{"qcat"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return emit(out, Json{{"error", e.what()}}, kInputError);
  }

  try {
    if (laws->parsed()) {
      Quantale q = io::quantale_from_flag(quantale_flag);
      auto sample = grid_flag.empty() ? default_law_sample(q) : io::grid_from_flag(q, grid_flag);
      auto report = check_laws(q, sample);
      return emit(out,
                  Json{{"quantale", io::quantale_to_json(q)},
                       {"sample", io::values_to_json(sample)},
                       {"report", io::law_report_to_json(report)}},
                  report.ok() ? kOk : kViolations);
    }

    if (validate->parsed()) {
      VCategory c = load_category(in1);
      auto report = validate_category(c);
      Json payload{{"validation", io::category_report_to_json(c, report)}};
      bool ok = report.ok();
      if (c.quantale().kind() == Quantale::Kind::RBot) {
        auto endo = classify_endohoms(c);
        payload["endohoms"] = io::endohom_report_to_json(c, endo);
        ok = ok && endo.ok();
      }
      return emit(out, std::move(payload), ok ? kOk : kViolations);
    }

    if (compose_cmd->parsed()) {
      VModule m = load_module(in1);
      VModule nm = load_module(in2);
      VModule result = [&] {
        try {
          return compose(m, nm);
        } catch (const InputError& e) {
          throw FileError(in1 + ", " + in2 + ": " + e.what());
        }
      }();
      Json mj = io::module_to_json(result);
      if (!out_path.empty()) write_file(out_path, io::dump(mj));
      return emit(out, Json{{"module", std::move(mj)}}, kOk);
    }

    if (adjoint->parsed()) {
      VModule m = load_module(in1);
      VModule adj = canonical_right_adjoint(m);
      auto report = check_adjunction(m, adj);
      Json aj = io::module_to_json(adj);
      if (!out_path.empty()) write_file(out_path, io::dump(aj));
      return emit(out,
                  Json{{"right_adjoint", std::move(aj)},
                       {"right_adjoint_valid", validate_module(adj).ok()},
                       {"adjunction", io::adjunction_report_to_json(m, report)}},
                  report.ok() ? kOk : kViolations);
    }

    if (cauchy->parsed()) {
      VModule m = load_module(in1);
      if (!is_unit_category(m.source())) throw FileError(in1 + ": /source: cauchy expects a module with source \"I\"");
      VModule adj = canonical_right_adjoint(m);
      const bool is_c = check_adjunction(m, adj).ok();
      auto reps = representing_objects(m);
      std::optional<std::size_t> witness;
      if (is_c) witness = cauchy_witness(m, adj);
      const auto& e = m.target();
      Json payload{{"cauchy", is_c},
                   {"right_adjoint", io::module_to_json(adj)},
                   {"representing", reps.empty() ? Json(nullptr) : Json(e.objects()[reps.front()])},
                   {"representing_all", labels_of(e, reps)},
                   {"witness", label_or_null(e, witness)}};
      return emit(out, std::move(payload), is_c && !reps.empty() ? kOk : kViolations);
    }

    if (complete->parsed()) {
      VCategory c = load_category(in1);
      auto validity = validate_category(c);
      if (!validity.ok())
        return emit(out, Json{{"validation", io::category_report_to_json(c, validity)}}, kViolations);
      std::vector<QVal> grid;
      try {
        grid = grid_flag.empty() ? default_grid(c) : io::grid_from_flag(c.quantale(), grid_flag);
      } catch (const InputError& e) {
        throw FileError(std::string(grid_flag.empty() ? in1 : "--grid") + ": " + e.what());
      }
      auto report = cauchy_completeness_report(c, grid, threads);
      return emit(out, Json{{"report", io::completeness_report_to_json(c, report, verbose)}},
                  report.complete() ? kOk : kViolations);
    }

    if (collage_cmd->parsed()) {
      VModule m = load_module(in1);
      auto report = validate_module(m);
      if (!report.ok()) {
        std::vector<const std::vector<std::string>*> names{&m.target().objects()};
        return emit(out, Json{{"module_violations", io::violations_to_json(report.violations, names)}}, kViolations);
      }
      Collage c = collage(m);
      Json cj = io::collage_to_json(c);
      if (!out_path.empty()) write_file(out_path, io::dump(cj));
      return emit(out,
                  Json{{"collage", std::move(cj)},
                       {"validation", io::category_report_to_json(c.category, validate_category(c.category))}},
                  kOk);
    }

    if (restrict_cmd->parsed()) {
      Collage c = load(in1, [](const std::string& t) { return io::collage_from_json(parse_json(t)); });
      VModule m = load(in1, [&](const std::string&) { return restrict(c); });
      Json mj = io::module_to_json(m);
      if (!out_path.empty()) write_file(out_path, io::dump(mj));
      return emit(out, Json{{"module", std::move(mj)}}, kOk);
    }

    if (adjoin->parsed()) {
      VModule m = load_module(in1);
      VModule nm = load_module(in2);
      AdjunctionReport adj;
      try {
        adj = check_adjunction(m, nm);
      } catch (const InputError& e) {
        throw FileError(in1 + ", " + in2 + ": " + e.what());
      }
      Json payload{{"unit_ok", adj.unit_ok}, {"counit_ok", adj.counit_ok}};
      try {
        VCategory c = adjoin_point(m, nm, label);
        Json cj = io::category_to_json(c);
        if (!out_path.empty()) write_file(out_path, io::dump(cj));
        payload["category"] = std::move(cj);
        payload["validation"] = io::category_report_to_json(c, validate_category(c));
        return emit(out, std::move(payload), kOk);
      } catch (const InputError& e) {
        payload["adjunction"] = io::adjunction_report_to_json(m, adj);
        payload["reason"] = e.what();
        return emit(out, std::move(payload), kViolations);
      }
    }

    if (from_dag->parsed()) {
      CausalDag dag = load(in1, [](const std::string& t) { return io::dag_from_string(t); });
      VCategory c = causal_space_from_dag(dag);
      Json cj = io::category_to_json(c);
      if (!out_path.empty()) write_file(out_path, io::dump(cj));
      return emit(out, Json{{"category", std::move(cj)}}, kOk);
    }

    if (minkowski->parsed()) {
      auto b = parse_bounds(bounds_flag);
      MinkowskiSample s = [&] {
        try {
          return minkowski_sample(n, seed, Bounds2D{b[0], b[1], b[2], b[3]});
        } catch (const InputError& e) {
          throw FileError(std::string("--bounds: ") + e.what());
        }
      }();
      Json events = Json::array();
      for (const auto& e : s.events) events.push_back(Json::array({e.t, e.x}));
      Json cj = io::category_to_json(s.category);
      if (!out_path.empty()) write_file(out_path, io::dump(cj));
      return emit(out, Json{{"events", std::move(events)}, {"category", std::move(cj)}}, kOk);
    }

    if (underlying->parsed()) {
      VCategory c = load_category(in1);
      auto validity = validate_category(c);
      if (!validity.ok())
        return emit(out, Json{{"validation", io::category_report_to_json(c, validity)}}, kViolations);
      Preorder p = underlying_preorder(c);
      if (!dot_path.empty()) write_file(dot_path, to_dot(p));
      return emit(out, Json{{"preorder", io::preorder_to_json(p)}, {"idempotents_split", idempotent_split_check(p)}},
                  kOk);
    }

    if (mixed->parsed()) {
      auto r = mixed_signature_check();
      return emit(out, Json{{"record", io::mixed_record_to_json(r)}}, r.violation ? kViolations : kOk);
    }
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return emit(out, Json{{"error", e.what()}}, kInputError);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return emit(out, Json{{"error", e.what()}}, kInputError);
  }
  return kInputError;
}

}  // namespace qcat::cli
