#ifndef QCAT_CAUSAL_HPP
#define QCAT_CAUSAL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcat/category.hpp"

namespace qcat {

/// A finite directed acyclic graph. Construction rejects duplicate edges,
/// unknown vertices and cycles.
class CausalDag {
 public:
  CausalDag() = default;
  CausalDag(std::vector<std::string> vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);
  /// Builds from labelled edges; vertices not in `vertices` are appended in
  /// order of first appearance.
  static CausalDag from_labels(std::vector<std::string> vertices,
                               const std::vector<std::pair<std::string, std::string>>& edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<std::size_t>& successors(std::size_t v) const { return succ_[v]; }
  /// A topological order of the vertices.
  const std::vector<std::size_t>& topological_order() const { return topo_; }

 private:
  std::vector<std::string> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> succ_;
  std::vector<std::size_t> topo_;
};

/// Raised when a graph handed to CausalDag has a directed cycle.
class CycleError : public InputError {
 public:
  CycleError(const std::string& what, std::vector<std::string> cycle) : InputError(what), cycle_(std::move(cycle)) {}
  /// Vertices along the cycle; the first vertex is repeated at the end.
  const std::vector<std::string>& cycle() const { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

/// RBot category with hom(A, B) the edge count of a longest path from A to
/// B. Unreachable pairs get bot.
VCategory causal_space_from_dag(const CausalDag& dag);

/// Exhaustive path enumeration: the longest path length from `from` to
/// `to`, or nothing if `to` is unreachable. Throws std::length_error after
/// visiting `max_paths` partial paths.
std::optional<std::int64_t> longest_path_oracle(const CausalDag& dag, std::size_t from, std::size_t to,
                                                std::size_t max_paths = 1'000'000);

struct Event2D {
  double t = 0.0;
  double x = 0.0;
};

struct Bounds2D {
  double t0 = 0.0;
  double t1 = 1.0;
  double x0 = 0.0;
  double x1 = 1.0;
};

inline constexpr double kMinkowskiTolerance = 1e-9;

/// Proper time from `a` to `b` when b lies in the closed future cone of a,
/// bot otherwise. The value is approximate.
QVal minkowski_interval(const Event2D& a, const Event2D& b);

/// RBot category on the given events (labels e0, e1, ...) with tolerance
/// kMinkowskiTolerance.
VCategory minkowski_category(const std::vector<Event2D>& events);

struct MinkowskiSample {
  std::vector<Event2D> events;
  VCategory category;
};

/// `n` events with independent uniform coordinates in `bounds`.
///
/// Generator: a std::mt19937_64 seeded with `seed`; each coordinate takes
/// one draw r and maps u = (r >> 11) * 2^-53 to lo + u * (hi - lo), t then x
/// for each event in turn. This is identical on every platform. Throws
/// InputError for empty or non-finite bounds.
MinkowskiSample minkowski_sample(std::size_t n, std::uint64_t seed, const Bounds2D& bounds);

/// Signed intervals in 2D Minkowski space with the mixed convention:
/// time-like pairs get minus the proper time, other pairs plus the spatial
/// separation.
double signed_interval(const Event2D& a, const Event2D& b);

/// The three-point failure of enrichment in [-inf, inf].
struct MixedSignatureRecord {
  Event2D a{0.0, 0.0};
  Event2D b{-1.0, 0.0};
  Event2D c{0.0, 1.0};
  double d_ab = 0.0;
  double d_bc = 0.0;
  double d_ac = 0.0;
  double sum = 0.0;
  /// The composition arrow d_ab + d_bc -> d_ac would need d_ac <= sum.
  bool violation = false;
};

MixedSignatureRecord mixed_signature_check();

}  // namespace qcat

#endif
