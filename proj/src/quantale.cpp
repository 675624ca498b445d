#include "qcat/quantale.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <limits>
#include <system_error>

namespace qcat {

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(Rational r) : exact_(true), rat_(r) {}

Scalar Scalar::exact(std::int64_t n, std::int64_t d) { return Scalar(Rational(n, d)); }

Scalar Scalar::approx(double v) {
  Scalar s;
  s.exact_ = false;
  s.approx_ = v;
  return s;
}

double Scalar::to_double() const {
  if (!exact_) return approx_;
  return static_cast<double>(rat_.numerator()) / static_cast<double>(rat_.denominator());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_) return Scalar(a.rat_ + b.rat_);
  return Scalar::approx(a.to_double() + b.to_double());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_) return Scalar(a.rat_ - b.rat_);
  return Scalar::approx(a.to_double() - b.to_double());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.exact_ != b.exact_) return false;
  if (a.exact_) return a.rat_ == b.rat_;
  return std::bit_cast<std::uint64_t>(a.approx_) == std::bit_cast<std::uint64_t>(b.approx_);
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.exact_ != b.exact_) return a.exact_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.exact_) {
    if (a.rat_ < b.rat_) return std::strong_ordering::less;
    if (b.rat_ < a.rat_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  if (a.approx_ < b.approx_) return std::strong_ordering::less;
  if (b.approx_ < a.approx_) return std::strong_ordering::greater;
  return std::bit_cast<std::uint64_t>(a.approx_) <=> std::bit_cast<std::uint64_t>(b.approx_);
}

std::string Scalar::to_string() const {
  if (exact_) {
    if (rat_.denominator() == 1) return std::to_string(rat_.numerator());
    return std::to_string(rat_.numerator()) + "/" + std::to_string(rat_.denominator());
  }
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), approx_);
  return std::string(buf, res.ptr);
}

bool numeric_leq(const Scalar& a, const Scalar& b, double tolerance) {
  if (a.is_exact() && b.is_exact() && tolerance == 0.0) return a.rational() <= b.rational();
  return a.to_double() <= b.to_double() + tolerance;
}

namespace {

// Strict numeric comparison without tolerance, used to pick representatives
// in joins and meets.
bool numeric_less(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() < b.rational();
  return a.to_double() < b.to_double();
}

Scalar clamp_nonnegative(Scalar s) {
  if (s.is_exact()) return s.rational() < 0 ? Scalar::exact(0) : s;
  return s.to_double() < 0.0 ? Scalar::approx(0.0) : s;
}

}  // namespace

// ---------------------------------------------------------------------------
// QVal

QVal QVal::bot() { return QVal{}; }

QVal QVal::inf() {
  QVal v;
  v.tag_ = Tag::Inf;
  return v;
}

QVal QVal::finite(Scalar s) {
  QVal v;
  v.tag_ = Tag::Finite;
  v.scalar_ = s;
  return v;
}

QVal QVal::finite(std::int64_t n, std::int64_t d) { return finite(Scalar::exact(n, d)); }

QVal QVal::boolean(bool b) {
  QVal v;
  v.tag_ = Tag::BoolVal;
  v.truth_ = b;
  return v;
}

QVal QVal::tuple(std::vector<QVal> parts) {
  QVal v;
  v.tag_ = Tag::Tuple;
  v.parts_ = std::move(parts);
  return v;
}

bool operator==(const QVal& a, const QVal& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const QVal& a, const QVal& b) {
  if (a.tag_ != b.tag_) return a.tag_ <=> b.tag_;
  switch (a.tag_) {
    case QVal::Tag::Bot:
    case QVal::Tag::Inf:
      return std::strong_ordering::equal;
    case QVal::Tag::Finite:
      return a.scalar_ <=> b.scalar_;
    case QVal::Tag::BoolVal:
      return a.truth_ <=> b.truth_;
    case QVal::Tag::Tuple:
      return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                    b.parts_.end());
  }
  return std::strong_ordering::equal;
}

std::string QVal::to_string() const {
  switch (tag_) {
    case Tag::Bot:
      return "bot";
    case Tag::Inf:
      return "inf";
    case Tag::Finite:
      return scalar_.to_string();
    case Tag::BoolVal:
      return truth_ ? "true" : "false";
    case Tag::Tuple: {
      std::string out = "(";
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += parts_[i].to_string();
      }
      return out + ")";
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Quantale

Quantale Quantale::rbot(double tolerance) {
  Quantale q;
  q.kind_ = Kind::RBot;
  q.tolerance_ = tolerance;
  return q;
}

Quantale Quantale::lawvere(double tolerance) {
  Quantale q;
  q.kind_ = Kind::LawvereR;
  q.tolerance_ = tolerance;
  return q;
}

Quantale Quantale::boolean() {
  Quantale q;
  q.kind_ = Kind::Bool;
  return q;
}

Quantale Quantale::product(std::vector<Quantale> factors) {
  if (factors.empty()) throw InputError("product quantale needs at least one factor");
  Quantale q;
  q.kind_ = Kind::Product;
  q.factors_ = std::move(factors);
  return q;
}

Quantale Quantale::with_tolerance(double tolerance) const {
  if (tolerance < 0.0 || !std::isfinite(tolerance)) throw InputError("tolerance must be a nonnegative real");
  Quantale q = *this;
  q.tolerance_ = tolerance;
  for (auto& f : q.factors_) f = f.with_tolerance(tolerance);
  return q;
}

std::string Quantale::name() const {
  switch (kind_) {
    case Kind::RBot:
      return "rbot";
    case Kind::LawvereR:
      return "lawvere";
    case Kind::Bool:
      return "bool";
    case Kind::Product: {
      std::string out = "(";
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ",";
        out += factors_[i].name();
      }
      return out + ")";
    }
  }
  return {};
}

bool Quantale::same_carrier(const Quantale& other) const {
  if (kind_ != other.kind_ || factors_.size() != other.factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (!factors_[i].same_carrier(other.factors_[i])) return false;
  return true;
}

bool operator==(const Quantale& a, const Quantale& b) {
  return a.same_carrier(b) && a.tolerance_ == b.tolerance_;
}

bool Quantale::contains(const QVal& v) const {
  using Tag = QVal::Tag;
  switch (kind_) {
    case Kind::RBot:
      if (v.tag() == Tag::Bot || v.tag() == Tag::Inf) return true;
      [[fallthrough]];
    case Kind::LawvereR:
      if (v.tag() == Tag::Inf) return true;
      if (v.tag() != Tag::Finite) return false;
      return v.scalar().is_exact() ? v.scalar().rational() >= 0
                                   : (std::isfinite(v.scalar().to_double()) && v.scalar().to_double() >= 0.0);
    case Kind::Bool:
      return v.tag() == Tag::BoolVal;
    case Kind::Product:
      if (v.tag() != Tag::Tuple || v.parts().size() != factors_.size()) return false;
      for (std::size_t i = 0; i < factors_.size(); ++i)
        if (!factors_[i].contains(v.parts()[i])) return false;
      return true;
  }
  return false;
}

void Quantale::require(const QVal& v) const {
  if (!contains(v)) throw CarrierError("value '" + v.to_string() + "' is not in the carrier of " + name());
}

bool Quantale::leq(const QVal& a, const QVal& b) const {
  switch (kind_) {
    case Kind::RBot:
      if (a.is_bot() || b.is_inf()) return true;
      if (b.is_bot() || a.is_inf()) return false;
      return numeric_leq(a.scalar(), b.scalar(), tolerance_);
    case Kind::LawvereR:
      if (a.is_inf()) return true;
      if (b.is_inf()) return false;
      return numeric_leq(b.scalar(), a.scalar(), tolerance_);
    case Kind::Bool:
      return !a.truth() || b.truth();
    case Kind::Product:
      for (std::size_t i = 0; i < factors_.size(); ++i)
        if (!factors_[i].leq(a.parts()[i], b.parts()[i])) return false;
      return true;
  }
  return false;
}

bool Quantale::equiv(const QVal& a, const QVal& b) const { return leq(a, b) && leq(b, a); }

QVal Quantale::tensor(const QVal& a, const QVal& b) const {
  switch (kind_) {
    case Kind::RBot:
      if (a.is_bot() || b.is_bot()) return QVal::bot();
      [[fallthrough]];
    case Kind::LawvereR:
      if (a.is_inf() || b.is_inf()) return QVal::inf();
      return QVal::finite(a.scalar() + b.scalar());
    case Kind::Bool:
      return QVal::boolean(a.truth() && b.truth());
    case Kind::Product: {
      std::vector<QVal> parts;
      parts.reserve(factors_.size());
      for (std::size_t i = 0; i < factors_.size(); ++i) parts.push_back(factors_[i].tensor(a.parts()[i], b.parts()[i]));
      return QVal::tuple(std::move(parts));
    }
  }
  return {};
}

QVal Quantale::residual(const QVal& a, const QVal& c) const {
  switch (kind_) {
    case Kind::RBot:
      if (a.is_bot()) return QVal::inf();
      if (c.is_bot()) return QVal::bot();
      if (c.is_inf()) return QVal::inf();
      if (a.is_inf()) return QVal::bot();
      if (!numeric_leq(a.scalar(), c.scalar(), tolerance_)) return QVal::bot();
      return QVal::finite(clamp_nonnegative(c.scalar() - a.scalar()));
    case Kind::LawvereR:
      if (a.is_inf()) return QVal::finite(0);
      if (c.is_inf()) return QVal::inf();
      return QVal::finite(clamp_nonnegative(c.scalar() - a.scalar()));
    case Kind::Bool:
      return QVal::boolean(!a.truth() || c.truth());
    case Kind::Product: {
      std::vector<QVal> parts;
      parts.reserve(factors_.size());
      for (std::size_t i = 0; i < factors_.size(); ++i)
        parts.push_back(factors_[i].residual(a.parts()[i], c.parts()[i]));
      return QVal::tuple(std::move(parts));
    }
  }
  return {};
}

namespace {

// Position in the total arrow order of RBot / LawvereR, ignoring tolerance.
bool arrow_less(Quantale::Kind kind, const QVal& a, const QVal& b) {
  if (kind == Quantale::Kind::RBot) {
    if (a.is_bot()) return !b.is_bot();
    if (b.is_bot() || a.is_inf()) return false;
    if (b.is_inf()) return true;
    return numeric_less(a.scalar(), b.scalar());
  }
  // LawvereR: inf is least, then decreasing numbers.
  if (a.is_inf()) return !b.is_inf();
  if (b.is_inf()) return false;
  return numeric_less(b.scalar(), a.scalar());
}

}  // namespace

QVal Quantale::join(const QVal& a, const QVal& b) const {
  switch (kind_) {
    case Kind::RBot:
    case Kind::LawvereR:
      return arrow_less(kind_, a, b) ? b : a;
    case Kind::Bool:
      return QVal::boolean(a.truth() || b.truth());
    case Kind::Product: {
      std::vector<QVal> parts;
      parts.reserve(factors_.size());
      for (std::size_t i = 0; i < factors_.size(); ++i) parts.push_back(factors_[i].join(a.parts()[i], b.parts()[i]));
      return QVal::tuple(std::move(parts));
    }
  }
  return {};
}

QVal Quantale::meet(const QVal& a, const QVal& b) const {
  switch (kind_) {
    case Kind::RBot:
    case Kind::LawvereR:
      return arrow_less(kind_, b, a) ? b : a;
    case Kind::Bool:
      return QVal::boolean(a.truth() && b.truth());
    case Kind::Product: {
      std::vector<QVal> parts;
      parts.reserve(factors_.size());
      for (std::size_t i = 0; i < factors_.size(); ++i) parts.push_back(factors_[i].meet(a.parts()[i], b.parts()[i]));
      return QVal::tuple(std::move(parts));
    }
  }
  return {};
}

QVal Quantale::join(std::span<const QVal> family) const {
  QVal acc = bottom();
  for (const auto& v : family) acc = join(acc, v);
  return acc;
}

QVal Quantale::meet(std::span<const QVal> family) const {
  QVal acc = top();
  for (const auto& v : family) acc = meet(acc, v);
  return acc;
}

QVal Quantale::unit() const {
  switch (kind_) {
    case Kind::RBot:
    case Kind::LawvereR:
      return QVal::finite(0);
    case Kind::Bool:
      return QVal::boolean(true);
    case Kind::Product: {
      std::vector<QVal> parts;
      for (const auto& f : factors_) parts.push_back(f.unit());
      return QVal::tuple(std::move(parts));
    }
  }
  return {};
}

QVal Quantale::bottom() const {
  switch (kind_) {
    case Kind::RBot:
      return QVal::bot();
    case Kind::LawvereR:
      return QVal::inf();
    case Kind::Bool:
      return QVal::boolean(false);
    case Kind::Product: {
      std::vector<QVal> parts;
      for (const auto& f : factors_) parts.push_back(f.bottom());
      return QVal::tuple(std::move(parts));
    }
  }
  return {};
}

QVal Quantale::top() const {
  switch (kind_) {
    case Kind::RBot:
      return QVal::inf();
    case Kind::LawvereR:
      return QVal::finite(0);
    case Kind::Bool:
      return QVal::boolean(true);
    case Kind::Product: {
      std::vector<QVal> parts;
      for (const auto& f : factors_) parts.push_back(f.top());
      return QVal::tuple(std::move(parts));
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw InputError("malformed number '" + std::string(whole) + "'");
  std::int64_t out = 0;
  auto res = std::from_chars(digits.data(), digits.data() + digits.size(), out);
  if (res.ec == std::errc::result_out_of_range)
    throw InputError("number '" + std::string(whole) + "' is too large for an exact rational");
  if (res.ec != std::errc{} || res.ptr != digits.data() + digits.size())
    throw InputError("malformed number '" + std::string(whole) + "'");
  return out;
}

// Exact parse of "n", "p/q" or "i.f".
Rational parse_exact(std::string_view s) {
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = parse_int(s.substr(0, slash), s);
    auto den = parse_int(s.substr(slash + 1), s);
    if (den == 0) throw InputError("zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw InputError("malformed number '" + std::string(s) + "'");
    if (fp.size() > 18) throw InputError("number '" + std::string(s) + "' has too many digits for an exact rational");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    std::int64_t whole = ip.empty() ? 0 : parse_int(ip, s);
    std::int64_t frac = fp.empty() ? 0 : parse_int(fp, s);
    if (whole > (std::numeric_limits<std::int64_t>::max() - frac) / scale)
      throw InputError("number '" + std::string(s) + "' is too large for an exact rational");
    return Rational(whole * scale + frac, scale);
  }
  return Rational(parse_int(s, s));
}

double parse_approx(std::string_view s) {
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational r = parse_exact(s);
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
  }
  double out = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(out))
    throw InputError("malformed number '" + std::string(s) + "'");
  return out;
}

std::vector<std::string_view> split_tuple(std::string_view body) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    else if (body[i] == ')') --depth;
    else if (body[i] == ',' && depth == 0) {
      out.push_back(body.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(body.substr(start));
  return out;
}

}  // namespace

QVal Quantale::parse(std::string_view text) const {
  std::string_view s = trim(text);
  const std::string quoted = "'" + std::string(text) + "'";
  switch (kind_) {
    case Kind::RBot:
      if (s == "bot" || s == "⊥") return QVal::bot();
      [[fallthrough]];
    case Kind::LawvereR: {
      if (s == "inf" || s == "∞") return QVal::inf();
      if (s.empty()) throw InputError("empty value");
      if (s.front() == '-') throw InputError("negative value " + quoted + " is not in the carrier of " + name());
      if (s.front() == '+') s.remove_prefix(1);
      QVal v = tolerance_ > 0.0 ? QVal::finite(Scalar::approx(parse_approx(s))) : QVal::finite(Scalar(parse_exact(s)));
      require(v);
      return v;
    }
    case Kind::Bool:
      if (s == "true" || s == "1") return QVal::boolean(true);
      if (s == "false" || s == "0") return QVal::boolean(false);
      throw InputError("expected a truth value, got " + quoted);
    case Kind::Product: {
      if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw InputError("expected a tuple for " + name() + ", got " + quoted);
      auto items = split_tuple(s.substr(1, s.size() - 2));
      if (items.size() != factors_.size())
        throw InputError("tuple " + quoted + " has " + std::to_string(items.size()) + " components, expected " +
                         std::to_string(factors_.size()));
      std::vector<QVal> parts;
      for (std::size_t i = 0; i < items.size(); ++i) parts.push_back(factors_[i].parse(items[i]));
      return QVal::tuple(std::move(parts));
    }
  }
  return {};
}

std::vector<QVal> Quantale::enumerate() const {
  switch (kind_) {
    case Kind::Bool:
      return {QVal::boolean(false), QVal::boolean(true)};
    case Kind::Product: {
      std::vector<std::vector<QVal>> acc{{}};
      for (const auto& f : factors_) {
        auto elems = f.enumerate();
        std::vector<std::vector<QVal>> next;
        for (const auto& prefix : acc)
          for (const auto& e : elems) {
            auto p = prefix;
            p.push_back(e);
            next.push_back(std::move(p));
          }
        acc = std::move(next);
      }
      std::vector<QVal> out;
      for (auto& p : acc) out.push_back(QVal::tuple(std::move(p)));
      return out;
    }
    default:
      throw CarrierError("carrier of " + name() + " is infinite");
  }
}

// ---------------------------------------------------------------------------
// Laws

QuantaleOps QuantaleOps::of(const Quantale& q) {
  return QuantaleOps{
      [q](const QVal& a, const QVal& b) { return q.leq(a, b); },
      [q](const QVal& a, const QVal& b) { return q.tensor(a, b); },
      [q](const QVal& a, const QVal& b) { return q.residual(a, b); },
      [q](const QVal& a, const QVal& b) { return q.join(a, b); },
      q.unit(),
  };
}

LawReport check_laws(const Quantale& q, std::span<const QVal> sample) {
  for (const auto& v : sample) q.require(v);
  return check_laws(QuantaleOps::of(q), sample);
}

LawReport check_laws(const QuantaleOps& ops, std::span<const QVal> sample) {
  LawReport report;
  auto eq = [&](const QVal& x, const QVal& y) { return ops.leq(x, y) && ops.leq(y, x); };
  auto fail = [&](const char* law, std::vector<QVal> args) { report.violations.push_back({law, std::move(args)}); };

  for (const auto& a : sample) {
    if (!eq(ops.tensor(ops.unit, a), a) || !eq(ops.tensor(a, ops.unit), a)) fail("unit", {a});
    for (const auto& b : sample) {
      if (!eq(ops.tensor(a, b), ops.tensor(b, a))) fail("commutativity", {a, b});
      for (const auto& c : sample) {
        ++report.triples_checked;
        const bool lhs = ops.leq(ops.tensor(a, b), c);
        const bool rhs = ops.leq(b, ops.residual(a, c));
        if (lhs != rhs) fail("residuation", {a, b, c});
        if (!eq(ops.tensor(ops.tensor(a, b), c), ops.tensor(a, ops.tensor(b, c)))) fail("associativity", {a, b, c});
        if (ops.leq(a, b) && !ops.leq(ops.tensor(a, c), ops.tensor(b, c))) fail("monotonicity", {a, b, c});
        if (!eq(ops.tensor(a, ops.join(b, c)), ops.join(ops.tensor(a, b), ops.tensor(a, c))))
          fail("distributivity", {a, b, c});
      }
    }
  }
  return report;
}

bool join_witness(const Quantale& q, std::span<const QVal> family) {
  for (const auto& v : family) q.require(v);
  const QVal u = q.unit();
  if (!q.leq(u, q.join(family))) return true;
  return std::any_of(family.begin(), family.end(), [&](const QVal& m) { return q.leq(u, m); });
}

}  // namespace qcat
