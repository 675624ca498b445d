#include <doctest.h>

#include <random>

#include "qcat/quantale.hpp"
#include "support/oracles.hpp"

using namespace qcat;

namespace {

const QVal kBot = QVal::bot();
const QVal kInf = QVal::inf();
QVal num(std::int64_t n, std::int64_t d = 1) { return QVal::finite(n, d); }
QVal bools(bool a, bool b) { return QVal::tuple({QVal::boolean(a), QVal::boolean(b)}); }
const Quantale kBool2 = Quantale::product({Quantale::boolean(), Quantale::boolean()});

}  // namespace

TEST_CASE("rbot order: bot least, inf greatest, numeric in between") {
  const auto q = Quantale::rbot();
  CHECK(q.leq(kBot, num(0)));
  CHECK(q.leq(num(5), num(5)));
  CHECK_FALSE(q.leq(num(0), kBot));
  CHECK(q.leq(num(7), kInf));
  CHECK_FALSE(q.leq(kInf, num(7)));
  CHECK(q.leq(num(5, 2), num(3)));
  CHECK_FALSE(q.leq(num(3), num(5, 2)));
}

TEST_CASE("lawvere order is reversed numeric order") {
  const auto q = Quantale::lawvere();
  CHECK(q.leq(num(3), num(1)));
  CHECK_FALSE(q.leq(num(1), num(3)));
  CHECK(q.leq(kInf, num(0)));
  CHECK(q.bottom() == kInf);
  CHECK(q.top() == num(0));
}

TEST_CASE("rbot tensor reproduces the 3x3 table") {
  const auto q = Quantale::rbot();
  // rows a in {bot, 3, 5, inf}, columns b in {bot, 3, 5, inf}
  const std::vector<QVal> reps{kBot, num(3), num(5), kInf};
  const std::vector<std::vector<QVal>> expected{
      {kBot, kBot, kBot, kBot},
      {kBot, num(6), num(8), kInf},
      {kBot, num(8), num(10), kInf},
      {kBot, kInf, kInf, kInf},
  };
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) CHECK(q.tensor(reps[i], reps[j]) == expected[i][j]);
  CHECK(q.tensor(kBot, kInf) == kBot);
  for (const auto& x : {kBot, num(7), kInf}) CHECK(q.tensor(num(0), x) == x);
  CHECK(q.tensor(num(2), num(3)) == num(5));
}

TEST_CASE("rbot residual reproduces the internal hom table") {
  const auto q = Quantale::rbot();
  const std::vector<QVal> reps{kBot, num(3), num(5), kInf};
  const std::vector<std::vector<QVal>> expected{
      {kInf, kInf, kInf, kInf},
      {kBot, num(0), num(2), kInf},
      {kBot, kBot, num(0), kInf},
      {kBot, kBot, kBot, kInf},
  };
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) CHECK(q.residual(reps[i], reps[j]) == expected[i][j]);
  CHECK(q.residual(kBot, kBot) == kInf);
  CHECK(q.residual(num(3), num(5)) == num(2));
  CHECK(q.residual(num(5), num(3)) == kBot);
}

TEST_CASE("residual agrees with the largest solution found by search") {
  // Candidates include every difference of the grid, so the search can hit
  // the exact answer whenever it is finite.
  const std::vector<QVal> grid{kBot, num(0), num(1), num(5, 2), num(7), kInf};
  std::vector<QVal> candidates{kBot, kInf};
  for (const auto& a : grid)
    for (const auto& b : grid)
      if (a.is_finite() && b.is_finite() && a.scalar().rational() <= b.scalar().rational())
        candidates.push_back(QVal::finite(b.scalar() - a.scalar()));
  for (const auto& q : {Quantale::rbot(), Quantale::lawvere()})
    for (const auto& a : grid)
      for (const auto& c : grid) {
        if (!q.contains(a) || !q.contains(c)) continue;
        auto found = testing::residual_by_search(q, a, c, candidates);
        REQUIRE(found.has_value());
        CHECK(q.equiv(*found, q.residual(a, c)));
      }
}

TEST_CASE("lawvere tensor truncates at inf and residual is truncated subtraction") {
  const auto q = Quantale::lawvere();
  CHECK(q.tensor(num(2), num(3)) == num(5));
  CHECK(q.tensor(num(2), kInf) == kInf);
  CHECK(q.residual(num(3), num(5)) == num(2));
  CHECK(q.residual(num(5), num(3)) == num(0));
  CHECK(q.residual(num(1), kInf) == kInf);
  CHECK(q.residual(kInf, kInf) == num(0));
}

TEST_CASE("joins and meets") {
  const auto r = Quantale::rbot();
  const std::vector<QVal> fam{kBot, num(2), num(5)};
  CHECK(r.join(fam) == num(5));
  CHECK(r.join(std::vector<QVal>{}) == kBot);
  CHECK(r.meet(std::vector<QVal>{}) == kInf);
  CHECK(r.meet(fam) == kBot);

  const auto l = Quantale::lawvere();
  const std::vector<QVal> pair{num(1), num(3)};
  const QVal j = l.join(pair);
  CHECK(j == num(1));
  // Oracle: 1 is an upper bound of {1, 3} and below every other upper bound
  // drawn from a grid.
  CHECK(l.leq(num(1), j));
  CHECK(l.leq(num(3), j));
  for (const auto& ub : {num(0), num(1, 2), num(1)})
    if (l.leq(num(1), ub) && l.leq(num(3), ub)) CHECK(l.leq(j, ub));

  CHECK(kBool2.join(bools(true, false), bools(false, true)) == bools(true, true));
  CHECK(kBool2.meet(bools(true, false), bools(false, true)) == bools(false, false));
}

TEST_CASE("units, bottoms and tops") {
  const auto r = Quantale::rbot();
  CHECK(r.unit() == num(0));
  CHECK(r.bottom() == kBot);
  CHECK(r.top() == kInf);
  CHECK(Quantale::boolean().unit() == QVal::boolean(true));
  CHECK(kBool2.unit() == bools(true, true));
  CHECK(kBool2.bottom() == bools(false, false));
}

TEST_CASE("check_laws passes on the standard instances") {
  const std::vector<QVal> sample{kBot, num(0), num(1), num(5, 2), kInf};
  auto r = check_laws(Quantale::rbot(), sample);
  CHECK(r.triples_checked == 125);
  CHECK(r.ok());

  const std::vector<QVal> bools_sample{QVal::boolean(false), QVal::boolean(true)};
  CHECK(check_laws(Quantale::boolean(), bools_sample).ok());
  CHECK(check_laws(kBool2, kBool2.enumerate()).ok());

  const std::vector<QVal> metric{num(0), num(1), num(5, 2), num(7), kInf};
  CHECK(check_laws(Quantale::lawvere(), metric).ok());
}

TEST_CASE("check_laws finds a corrupted residual entry") {
  const auto q = Quantale::rbot();
  auto ops = QuantaleOps::of(q);
  ops.residual = [q](const QVal& a, const QVal& c) {
    if (a == num(3) && c == num(5)) return num(1);
    return q.residual(a, c);
  };
  const std::vector<QVal> sample{kBot, num(0), num(1), num(2), num(3), num(5), kInf};
  auto report = check_laws(ops, sample);
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations)
    if (v.law == "residuation" && v.args == std::vector<QVal>{num(3), num(2), num(5)}) found = true;
  CHECK(found);
}

TEST_CASE("join_witness") {
  const std::vector<QVal> rb{kBot, num(3)};
  CHECK(join_witness(Quantale::rbot(), rb));
  const std::vector<QVal> split{bools(true, false), bools(false, true)};
  CHECK_FALSE(join_witness(kBool2, split));
  const std::vector<QVal> f{QVal::boolean(false)};
  CHECK(join_witness(Quantale::boolean(), f));
}

TEST_CASE("the only monoidal idempotents of rbot are bot, 0 and inf") {
  const auto q = Quantale::rbot();
  std::vector<QVal> grid{kBot, kInf};
  for (int i = 0; i <= 40; ++i) grid.push_back(num(i, 4));
  std::vector<QVal> idempotents;
  for (const auto& v : grid)
    if (q.tensor(v, v) == v) idempotents.push_back(v);
  CHECK(idempotents == std::vector<QVal>{kBot, kInf, num(0)});
}

TEST_CASE("property: rbot and lawvere orders are total; join/meet are lattice operations") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, 12);
  auto random_value = [&](bool with_bot) {
    int k = pick(rng);
    if (k == 0) return with_bot ? kBot : kInf;
    if (k == 1) return kInf;
    return num(k - 2, 1 + (k % 3));
  };
  for (const auto& q : {Quantale::rbot(), Quantale::lawvere()}) {
    const bool with_bot = q.kind() == Quantale::Kind::RBot;
    for (int trial = 0; trial < 500; ++trial) {
      QVal a = random_value(with_bot), b = random_value(with_bot), c = random_value(with_bot);
      CHECK((q.leq(a, b) || q.leq(b, a)));
      CHECK(q.join(a, a) == a);
      CHECK(q.meet(a, a) == a);
      CHECK(q.equiv(q.join(a, b), q.join(b, a)));
      CHECK(q.equiv(q.join(q.join(a, b), c), q.join(a, q.join(b, c))));
      CHECK(q.equiv(q.meet(q.meet(a, b), c), q.meet(a, q.meet(b, c))));
      CHECK(q.equiv(q.tensor(a, q.join(b, c)), q.join(q.tensor(a, b), q.tensor(a, c))));
    }
  }
}

TEST_CASE("tolerance widens finite comparisons only") {
  const auto q = Quantale::rbot(1e-9);
  const QVal a = QVal::finite(Scalar::approx(1.0 + 5e-10));
  const QVal b = QVal::finite(Scalar::approx(1.0));
  CHECK(q.leq(a, b));
  CHECK_FALSE(Quantale::rbot().leq(a, b));
  CHECK_FALSE(q.leq(num(0), kBot));
}

TEST_CASE("value syntax") {
  const auto r = Quantale::rbot();
  CHECK(r.parse("bot") == kBot);
  CHECK(r.parse("⊥") == kBot);
  CHECK(r.parse("∞") == kInf);
  CHECK(r.parse(" inf ") == kInf);
  CHECK(r.parse("5/2") == num(5, 2));
  CHECK(r.parse("2.5") == num(5, 2));
  CHECK(r.parse("10/4") == num(5, 2));
  CHECK(r.parse("7").to_string() == "7");
  CHECK(num(5, 2).to_string() == "5/2");
  CHECK(kBool2.parse("(1,0)") == bools(true, false));
  CHECK(kBool2.parse("(true, false)").to_string() == "(true,false)");
  CHECK(Quantale::rbot(1e-9).parse("1.25").scalar().is_exact() == false);

  CHECK_THROWS_AS(r.parse("-1"), InputError);
  CHECK_THROWS_AS(r.parse("abc"), InputError);
  CHECK_THROWS_AS(r.parse("1/0"), InputError);
  CHECK_THROWS_AS(Quantale::lawvere().parse("bot"), InputError);
  CHECK_THROWS_AS(kBool2.parse("(1,0,1)"), InputError);
  CHECK_THROWS_AS(r.require(QVal::boolean(true)), CarrierError);
  CHECK_THROWS_AS(check_laws(r, std::vector<QVal>{QVal::boolean(true)}), CarrierError);
}

TEST_CASE("approximate values print as round-trip decimals") {
  const QVal v = QVal::finite(Scalar::approx(1.7320508075688772));
  const auto q = Quantale::rbot(1e-9);
  CHECK(q.parse(v.to_string()) == v);
}
