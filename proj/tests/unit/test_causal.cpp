#include <doctest.h>

#include <cmath>

#include "qcat/causal.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace qcat;

namespace {

const QVal B = QVal::bot();
QVal n(std::int64_t v) { return QVal::finite(v); }

std::vector<std::pair<std::string, std::string>> E(std::initializer_list<std::pair<const char*, const char*>> es) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [a, b] : es) out.emplace_back(a, b);
  return out;
}

}  // namespace

TEST_CASE("minkowski interval") {
  auto v = minkowski_interval({0, 0}, {2, 1});
  REQUIRE(v.is_finite());
  CHECK(v.scalar().to_double() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(minkowski_interval({0, 0}, {0, 1}).is_bot());
  auto light = minkowski_interval({0, 0}, {1, 1});
  REQUIRE(light.is_finite());
  CHECK(light.scalar().to_double() == 0.0);
  CHECK(minkowski_interval({2, 1}, {0, 0}).is_bot());
}

TEST_CASE("minkowski samples are deterministic and valid") {
  auto a = minkowski_sample(40, 123, {0, 2, -1, 1});
  auto b = minkowski_sample(40, 123, {0, 2, -1, 1});
  CHECK(a.category == b.category);
  for (const auto& e : a.events) {
    CHECK(e.t >= 0.0);
    CHECK(e.t <= 2.0);
    CHECK(e.x >= -1.0);
    CHECK(e.x <= 1.0);
  }
  CHECK(validate_category(a.category).ok());
  CHECK(a.category.quantale().tolerance() == kMinkowskiTolerance);
  CHECK(a.category.objects()[3] == "e3");
  auto c = minkowski_sample(40, 124, {0, 2, -1, 1});
  CHECK_FALSE(c.events[0].t == a.events[0].t);

  // Reachability matches the cone test.
  auto pre = underlying_preorder(a.category);
  for (std::size_t i = 0; i < a.events.size(); ++i)
    for (std::size_t j = 0; j < a.events.size(); ++j) {
      const double dt = a.events[j].t - a.events[i].t;
      const double dx = std::abs(a.events[j].x - a.events[i].x);
      CHECK(pre.related(i, j) == (dt >= dx));
    }

  CHECK_THROWS_AS(minkowski_sample(3, 1, {1, 1, 0, 1}), InputError);
  CHECK_THROWS_AS(minkowski_sample(3, 1, {0, 1, 0, std::nan("")}), InputError);
  CHECK(minkowski_sample(0, 1, {0, 1, 0, 1}).category.empty());
}

TEST_CASE("the generator mapping is the documented one") {
  std::mt19937_64 rng(42);
  const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
  auto s = minkowski_sample(1, 42, {0, 10, 0, 1});
  CHECK(s.events[0].t == 10.0 * u);
}

TEST_CASE("minkowski homs are invariant under time translation") {
  auto s = minkowski_sample(25, 9, {0, 1, 0, 1});
  auto shifted = s.events;
  for (auto& e : shifted) e.t += 0.5;
  auto c = minkowski_category(shifted);
  const auto& q = c.quantale();
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) CHECK(q.equiv(c.hom(i, j), s.category.hom(i, j)));
}

TEST_CASE("mixed-signature counterexample") {
  auto r = mixed_signature_check();
  CHECK(r.d_ab == -1.0);
  CHECK(r.d_bc == 0.0);
  CHECK(r.sum == -1.0);
  CHECK(r.d_ac == 1.0);
  CHECK(r.violation);
  CHECK(signed_interval({0, 0}, {0, 3}) == 3.0);
  CHECK(signed_interval({0, 0}, {5, 3}) == -4.0);
}

TEST_CASE("causal spaces from DAGs") {
  auto dag = CausalDag::from_labels({}, E({{"a", "b"}, {"b", "c"}, {"a", "c"}}));
  auto c = causal_space_from_dag(dag);
  CHECK(c.hom(c.index_of("a"), c.index_of("c")) == n(2));
  CHECK(c.hom(c.index_of("c"), c.index_of("a")) == B);
  CHECK(validate_category(c).ok());

  auto single = causal_space_from_dag(CausalDag({"v"}, {}));
  CHECK(single.hom_matrix() == Matrix(1, 1, n(0)));

  auto two = causal_space_from_dag(CausalDag({"u", "v"}, {}));
  CHECK(two.hom(0, 1) == B);
  CHECK(two.hom(1, 0) == B);
}

TEST_CASE("DAG ingestion errors") {
  CHECK_THROWS_AS(CausalDag({"a", "b"}, {{0, 1}, {0, 1}}), InputError);
  CHECK_THROWS_AS(CausalDag({"a", "a"}, {}), InputError);
  CHECK_THROWS_AS(CausalDag({"a"}, {{0, 3}}), InputError);
  CHECK_THROWS_AS(CausalDag({"a"}, {{0, 0}}), CycleError);
  try {
    CausalDag::from_labels({}, E({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}}));
    FAIL("expected a cycle");
  } catch (const CycleError& e) {
    const auto& cyc = e.cycle();
    REQUIRE(cyc.size() == 4);
    CHECK(cyc.front() == cyc.back());
    std::vector<std::string> body(cyc.begin(), cyc.end() - 1);
    std::sort(body.begin(), body.end());
    CHECK(body == std::vector<std::string>{"a", "b", "c"});
  }
}

TEST_CASE("longest path oracle") {
  auto diamond = CausalDag::from_labels({}, E({{"a", "b"}, {"b", "d"}, {"a", "c"}, {"c", "d"}}));
  // Vertices in order of first appearance: a, b, d, c.
  CHECK(longest_path_oracle(diamond, 0, 2) == std::optional<std::int64_t>(2));
  auto ab = CausalDag::from_labels({}, E({{"a", "b"}}));
  CHECK(longest_path_oracle(ab, 0, 1) == std::optional<std::int64_t>(1));
  CHECK_FALSE(longest_path_oracle(ab, 1, 0).has_value());
  CHECK(longest_path_oracle(ab, 0, 0) == std::optional<std::int64_t>(0));

  // A ladder has exponentially many paths.
  std::vector<std::pair<std::size_t, std::size_t>> es;
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < 41; ++i) vs.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i + 2 < 41; i += 2) {
    es.emplace_back(i, i + 1);
    es.emplace_back(i, i + 2);
    es.emplace_back(i + 1, i + 2);
  }
  CausalDag ladder(vs, es);
  CHECK_THROWS_AS(longest_path_oracle(ladder, 0, 40, 1000), std::length_error);
}

TEST_CASE("random DAGs agree with the oracles") {
  testing::Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    auto dag = testing::random_dag(rng, 1 + trial % 8, 0.4);
    auto c = causal_space_from_dag(dag);
    CHECK(validate_category(c).ok());
    auto closure = testing::closure_oracle(dag.size(), dag.edges());
    auto pre = underlying_preorder(c);
    for (std::size_t a = 0; a < dag.size(); ++a)
      for (std::size_t b = 0; b < dag.size(); ++b) {
        auto len = longest_path_oracle(dag, a, b);
        CHECK(c.hom(a, b) == (len ? n(*len) : B));
        CHECK(pre.related(a, b) == closure[a][b]);
      }
    for (auto cls : classify_endohoms(c).classes) CHECK(cls == EventClass::Regular);
  }
}
