#ifndef QCAT_QUANTALE_HPP
#define QCAT_QUANTALE_HPP

#include <compare>
#include <functional>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace qcat {

using Rational = boost::rational<std::int64_t>;

/// Raised when a value does not belong to the carrier of the quantale it is
/// used with, or when two structures over different quantales are combined.
class CarrierError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for malformed input: textual values, dimensions, labels.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A nonnegative real number that is either an exact rational or an
/// approximate double. Arithmetic between two exact numbers stays exact.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational r);  // NOLINT(google-explicit-constructor)
  static Scalar exact(std::int64_t n, std::int64_t d = 1);
  static Scalar approx(double v);

  bool is_exact() const { return exact_; }
  const Rational& rational() const { return rat_; }
  double to_double() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);

  /// Structural equality: exact values compare by value, approximate values
  /// by bit pattern. Exact and approximate values never compare equal.
  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total structural order used for deterministic sorting.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  bool exact_ = true;
  Rational rat_{0};
  double approx_ = 0.0;
};

/// Numeric comparison a <= b + tolerance. Exact comparison when both sides
/// are exact and tolerance is zero.
bool numeric_leq(const Scalar& a, const Scalar& b, double tolerance);

/// An element of one of the built-in quantale carriers.
class QVal {
 public:
  enum class Tag : std::uint8_t { Bot, Finite, Inf, BoolVal, Tuple };

  QVal() = default;
  static QVal bot();
  static QVal inf();
  static QVal finite(Scalar s);
  static QVal finite(std::int64_t n, std::int64_t d = 1);
  static QVal boolean(bool b);
  static QVal tuple(std::vector<QVal> parts);

  Tag tag() const { return tag_; }
  bool is_bot() const { return tag_ == Tag::Bot; }
  bool is_inf() const { return tag_ == Tag::Inf; }
  bool is_finite() const { return tag_ == Tag::Finite; }
  const Scalar& scalar() const { return scalar_; }
  bool truth() const { return truth_; }
  const std::vector<QVal>& parts() const { return parts_; }

  /// Structural (not order-theoretic) equality and total order.
  friend bool operator==(const QVal& a, const QVal& b);
  friend std::strong_ordering operator<=>(const QVal& a, const QVal& b);

  /// Canonical text: "bot", "inf", "5", "5/2", "true", "(true,false)".
  /// Approximate finite values print as the shortest round-trip decimal.
  std::string to_string() const;

 private:
  Tag tag_ = Tag::Bot;
  Scalar scalar_;
  bool truth_ = false;
  std::vector<QVal> parts_;
};

/// Selects a built-in quantale instance and the tolerance used when comparing
/// finite values. All operations are pure.
///
/// Orders are given as arrow orders: `leq(a, b)` holds iff there is an arrow
/// a -> b in the base. For RBot that is the numeric order with bot least and
/// inf greatest. For LawvereR it is the reversed numeric order on [0, inf],
/// so its bottom is inf and its top is 0.
class Quantale {
 public:
  enum class Kind : std::uint8_t { RBot, LawvereR, Bool, Product };

  static Quantale rbot(double tolerance = 0.0);
  static Quantale lawvere(double tolerance = 0.0);
  static Quantale boolean();
  static Quantale product(std::vector<Quantale> factors);

  Kind kind() const { return kind_; }
  double tolerance() const { return tolerance_; }
  const std::vector<Quantale>& factors() const { return factors_; }
  Quantale with_tolerance(double tolerance) const;

  /// "rbot", "lawvere", "bool" or "(bool,bool)" for products.
  std::string name() const;

  /// Same instance (tolerance is ignored).
  bool same_carrier(const Quantale& other) const;
  friend bool operator==(const Quantale& a, const Quantale& b);

  bool contains(const QVal& v) const;
  /// Throws CarrierError unless `contains(v)`.
  void require(const QVal& v) const;

  bool leq(const QVal& a, const QVal& b) const;
  /// Mutual leq under the tolerance.
  bool equiv(const QVal& a, const QVal& b) const;
  QVal tensor(const QVal& a, const QVal& b) const;
  /// Largest x with tensor(a, x) <= c.
  QVal residual(const QVal& a, const QVal& c) const;
  QVal join(const QVal& a, const QVal& b) const;
  QVal meet(const QVal& a, const QVal& b) const;
  QVal join(std::span<const QVal> family) const;
  QVal meet(std::span<const QVal> family) const;

  QVal unit() const;
  QVal bottom() const;
  QVal top() const;

  /// Parses the textual value syntax in this carrier. Accepts "bot"/"⊥",
  /// "inf"/"∞", integers, "p/q", decimals, "true"/"false" (and "1"/"0" in
  /// Boolean positions), and parenthesised tuples for products.
  QVal parse(std::string_view text) const;

  /// Every element of a finite carrier (Bool and products of Bool).
  /// Throws CarrierError for infinite carriers.
  std::vector<QVal> enumerate() const;

 private:
  Kind kind_ = Kind::RBot;
  double tolerance_ = 0.0;
  std::vector<Quantale> factors_;
};

/// One failed law instance from `check_laws`.
struct LawViolation {
  std::string law;
  std::vector<QVal> args;
};

struct LawReport {
  std::size_t triples_checked = 0;
  std::vector<LawViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Table-level operations checked by `check_laws`. The default is the
/// quantale's own structure; tests substitute corrupted tables.
struct QuantaleOps {
  std::function<bool(const QVal&, const QVal&)> leq;
  std::function<QVal(const QVal&, const QVal&)> tensor;
  std::function<QVal(const QVal&, const QVal&)> residual;
  std::function<QVal(const QVal&, const QVal&)> join;
  QVal unit;

  static QuantaleOps of(const Quantale& q);
};

/// Checks residuation, commutativity, associativity, unit laws, monotonicity
/// of tensor and distributivity of tensor over binary joins on every triple
/// drawn from `sample`.
LawReport check_laws(const Quantale& q, std::span<const QVal> sample);
LawReport check_laws(const QuantaleOps& ops, std::span<const QVal> sample);

/// True iff unit <= join(family) implies some member m has unit <= m.
bool join_witness(const Quantale& q, std::span<const QVal> family);

}  // namespace qcat

#endif
