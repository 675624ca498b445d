#include <doctest.h>

#include "qcat/collage.hpp"
#include "support/generators.hpp"

using namespace qcat;

namespace {

const QVal B = QVal::bot();
QVal n(std::int64_t v) { return QVal::finite(v); }
const Quantale kRB = Quantale::rbot();

VCategory chain() {
  return VCategory(kRB, {"a", "b"}, Matrix::from_rows({{n(0), n(3)}, {B, n(0)}}));
}

}  // namespace

TEST_CASE("collage of the all-bot module is the disjoint union") {
  auto e = chain();
  auto d = testing::discrete_category(kRB, {"u"});
  VModule zero(d, e, Matrix(2, 1, B));
  auto c = collage(zero);
  CHECK(c.category.objects() == std::vector<std::string>{"L:a", "L:b", "R:u"});
  CHECK(c.partition == std::vector<Side>{Side::Left, Side::Left, Side::Right});
  CHECK(c.category.hom_matrix() == Matrix::from_rows({{n(0), n(3), B}, {B, n(0), B}, {B, B, n(0)}}));
  CHECK(validate_category(c.category).ok());
  auto back = restrict(c);
  CHECK(back == zero);
  CHECK(back.mat() == Matrix(2, 1, B));
}

TEST_CASE("black-hole collage") {
  auto e = chain();
  auto m = representable(e, 1);
  auto c = collage(m);
  REQUIRE(c.category.size() == 3);
  CHECK(validate_category(c.category).ok());
  CHECK(restrict(c) == m);
  // The adjoined point and b see E identically.
  const auto& h = c.category;
  for (std::size_t x = 0; x < e.size(); ++x) CHECK(h.hom(x, 2) == h.hom(x, 1));
}

TEST_CASE("collage rejects invalid modules") {
  auto e = chain();
  auto bad = column_module(e, {n(3), n(1)});
  CHECK_THROWS_AS(collage(bad), InputError);
}

TEST_CASE("restrict rejects malformed partitions") {
  auto c = collage(representable(chain(), 0));
  Collage swapped = c;
  swapped.partition = {Side::Right, Side::Left, Side::Left};
  CHECK_THROWS_AS(restrict(swapped), InputError);
  Collage short_part = c;
  short_part.partition.pop_back();
  CHECK_THROWS_AS(restrict(short_part), InputError);
  // A non-bottom hom from right to left.
  Matrix h = c.category.hom_matrix();
  h(2, 0) = n(1);
  Collage leaky{VCategory(kRB, c.category.objects(), h), c.partition};
  CHECK_THROWS_AS(restrict(leaky), InputError);
}

TEST_CASE("random collages validate and round-trip") {
  testing::Rng rng(17);
  for (int i = 0; i < 60; ++i) {
    auto d = i % 4 == 0 ? unit_category(kRB) : testing::random_rbot_category(rng, 1 + i % 4);
    auto e = testing::random_rbot_category(rng, 1 + (i / 4) % 4);
    auto m = testing::random_rbot_module(rng, d, e);
    auto c = collage(m);
    CHECK(validate_category(c.category).ok());
    CHECK(restrict(c) == m);
  }
}

TEST_CASE("adjoin_point") {
  auto unit = unit_category(kRB, "o");
  auto m = representable(unit, 0);
  auto nn = corepresentable(unit, 0);
  auto two = adjoin_point(m, nn);
  CHECK(two.objects() == std::vector<std::string>{"o", "*"});
  CHECK(two.hom_matrix() == Matrix(2, 2, n(0)));
  CHECK(validate_category(two).ok());

  // Cauchy pair on the chain, witness b.
  auto e = chain();
  auto cm = column_module(e, {n(3), n(0)});
  auto cn = canonical_right_adjoint(cm);
  auto x = adjoin_point(cm, cn, "p");
  REQUIRE(x.size() == 3);
  CHECK(validate_category(x).ok());
  auto p = x.index_of("p");
  auto b = x.index_of("b");
  CHECK(x.hom(p, b) == n(0));
  CHECK(x.hom(b, p) == n(0));
  auto pre = underlying_preorder(x);
  CHECK(pre.related(p, b));
  CHECK(pre.related(b, p));

  // Counit failure.
  auto big = row_module(e, {n(5), n(5)});
  CHECK_THROWS_AS(adjoin_point(cm, big), InputError);
  CHECK_THROWS_AS(adjoin_point(cm, cn, "a"), InputError);
}

TEST_CASE("adjoin_point works over the metric base") {
  const auto q = Quantale::lawvere();
  VCategory x(q, {"p", "q"}, Matrix::from_rows({{n(0), n(2)}, {n(3), n(0)}}));
  REQUIRE(validate_category(x).ok());
  auto m = representable(x, 0);
  auto nn = corepresentable(x, 0);
  CHECK(m.mat() == Matrix::from_rows({{n(0)}, {n(3)}}));
  CHECK(nn.mat() == Matrix::from_rows({{n(0), n(2)}}));
  auto y = adjoin_point(m, nn);
  CHECK(validate_category(y).ok());
  const auto star = y.index_of("*");
  CHECK(y.hom(star, 0) == n(0));
  CHECK(y.hom(0, star) == n(0));
  CHECK(y.hom(star, 1) == n(2));
  CHECK(y.hom(1, star) == n(3));
}
