#ifndef QCAT_IO_HPP
#define QCAT_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcat/causal.hpp"
#include "qcat/category.hpp"
#include "qcat/collage.hpp"
#include "qcat/module.hpp"
#include "qcat/quantale.hpp"

namespace qcat::io {

using Json = nlohmann::json;

/// Malformed input at a JSON location (a JSON pointer such as "/hom/1/0")
/// or a text line ("line 3").
class FieldError : public InputError {
 public:
  FieldError(std::string location, const std::string& message)
      : InputError(location.empty() ? message : location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

/// "rbot" | "lawvere" | "bool" | [descriptor, ...] for products.
Quantale quantale_from_json(const Json& j, const std::string& at = "/quantale");
Json quantale_to_json(const Quantale& q);
/// Parses the --quantale flag syntax: "rbot", "lawvere", "bool",
/// "bool,bool" or "(bool,bool)".
Quantale quantale_from_flag(std::string_view text);

/// Comma-separated values at top level, respecting parentheses.
std::vector<QVal> grid_from_flag(const Quantale& q, std::string_view text);

/// {"quantale", "tolerance", "objects", "hom"}; tolerance defaults to 0.
VCategory category_from_json(const Json& j, const std::string& at = "");
Json category_to_json(const VCategory& c);

/// {"source": category | "I", "target": category | "I", "mat": [[...]]}.
VModule module_from_json(const Json& j, const std::string& at = "");
Json module_to_json(const VModule& m);

/// Category JSON plus {"partition": ["left" | "right", ...]}.
Collage collage_from_json(const Json& j, const std::string& at = "");
Json collage_to_json(const Collage& c);

/// {"vertices": [...], "edges": [[a, b], ...]}.
CausalDag dag_from_json(const Json& j);
/// One "a b" edge per line; blank lines and lines starting with '#' are
/// ignored. A line holding a single label declares an isolated vertex.
CausalDag dag_from_text(std::string_view text);
/// Picks JSON when the first non-blank character is '{'.
CausalDag dag_from_string(std::string_view text);

Json values_to_json(const std::vector<QVal>& values);
Json matrix_to_json(const Matrix& m);

Json law_report_to_json(const LawReport& r);
/// `labels[k]` names the objects that position k of each violation's
/// indices refers to; positions past the end fall back to the last entry.
Json violations_to_json(const std::vector<Violation>& vs, const std::vector<const std::vector<std::string>*>& labels);
Json category_report_to_json(const VCategory& c, const ValidationReport& r);
Json endohom_report_to_json(const VCategory& c, const EndohomReport& r);
Json adjunction_report_to_json(const VModule& m, const AdjunctionReport& r);
Json completeness_report_to_json(const VCategory& c, const CompletenessReport& r, bool verbose);
Json preorder_to_json(const Preorder& p);
Json mixed_record_to_json(const MixedSignatureRecord& r);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace qcat::io

#endif
