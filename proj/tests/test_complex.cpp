#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "khcurves/complex.hpp"
#include "khcurves/curve.hpp"

using namespace khc;
using khc::testing::compiled;

namespace {

const Vertex B = Vertex::B;
const Vertex C = Vertex::C;

Complex single(Vertex v, int q = 0, int h = 0) {
  Complex x;
  x.add_generator({"x", v, q, h});
  return x;
}

}  // namespace

TEST_CASE("validate accepts the +2 arc") {
  Complex x;
  x.add_generator({"c1", C, -5, -2});
  x.add_generator({"c2", C, -3, -1});
  x.add_generator({"b", B, -2, 0});
  x.add_entry("c1", "c2", Element(Word::d_power(C, 1)));
  x.add_entry("c2", "b", Element(Word::s_power(C, 1)));
  const auto r = validate_complex(x);
  CHECK(r.ok());
  CHECK(r.reduced);
  CHECK(equal_up_to_ids(x, compiled("alpha-plus")));
}

TEST_CASE("validate reports inhomogeneous entries") {
  Complex x;
  x.add_generator({"c", C, 0, 0});
  x.add_generator({"b", B, 0, 1});
  x.add_entry(0, 1, Element(Word::s_power(C, 1)));
  const auto r = validate_complex(x);
  CHECK_FALSE(r.homogeneous);
  CHECK_FALSE(r.ok());
  CHECK_THROWS_AS(require_valid(x), ComplexError);
}

TEST_CASE("validate reports d squared nonzero") {
  Complex x;
  x.add_generator({"c", C, 0, 0});
  x.add_generator({"b", B, 1, 1});
  x.add_generator({"c'", C, 2, 2});
  x.add_entry(0, 1, Element(Word::s_power(C, 1)));
  x.add_entry(1, 2, Element(Word::s_power(B, 1)));
  const auto r = validate_complex(x);
  CHECK(r.homogeneous);
  CHECK_FALSE(r.d_squared_zero);
}

TEST_CASE("validate reports duplicate ids and endpoint mismatches") {
  Complex x;
  x.add_generator({"x", B, 0, 0});
  x.add_generator({"x", B, 2, 1});
  CHECK_FALSE(validate_complex(x).ids_unique);

  Complex y;
  y.add_generator({"b", B, 0, 0});
  y.add_generator({"c", C, 2, 1});
  y.add_entry(0, 1, Element(Word::d_power(B, 1)));
  CHECK_FALSE(validate_complex(y).endpoints_match);
}

TEST_CASE("shift") {
  const Complex s = shift_complex(single(B), 1, 0);
  CHECK(s.generator(0).q == 1);
  CHECK(s.generator(0).h == 0);
  CHECK(shift_complex(compiled("alpha-plus"), 0, 0) == compiled("alpha-plus"));
}

TEST_CASE("cone of a single generator") {
  for (Vertex v : {B, C}) {
    const Complex c = cone_h(single(v));
    REQUIRE(c.size() == 2);
    CHECK(c.generator(0).q == -1);
    CHECK(c.generator(0).h == -1);
    CHECK(c.generator(1).q == 1);
    CHECK(c.generator(1).h == 0);
    REQUIRE(c.entry(0, 1) != nullptr);
    CHECK(*c.entry(0, 1) == central_h(v));
    CHECK(validate_complex(c).ok());
  }
  CHECK(equal_up_to_ids(cone_h(single(C)), compiled("r1-inf")));
  CHECK(equal_up_to_ids(cone_h(single(B)), compiled("r1-0")));
}

TEST_CASE("cone keeps validity and doubles the size") {
  for (const auto& e : {"alpha-plus", "alpha-minus-n3", "bn-q13", "e2"}) {
    const Complex x = compiled(e);
    const Complex c = cone_h(x);
    CHECK(c.size() == 2 * x.size());
    CHECK(validate_complex(c).ok());
  }
}

TEST_CASE("gauss elimination of an acyclic pair") {
  Complex x;
  x.add_generator({"a", B, 0, 0});
  x.add_generator({"b", B, 0, 1});
  x.add_entry(0, 1, Element::identity(B));
  CHECK(gauss_reduce(x).empty());
}

TEST_CASE("gauss elimination with a vanishing induced entry") {
  Complex x;
  x.add_generator({"a", B, 0, 0});
  x.add_generator({"b", B, 0, 1});
  x.add_generator({"c", B, 2, 1});
  x.add_generator({"d", B, -2, 0});
  x.add_entry("a", "b", Element::identity(B));
  x.add_entry("a", "c", Element(Word::d_power(B, 1)));
  x.add_entry("d", "b", Element(Word::s_power(B, 2)));
  REQUIRE(validate_complex(x).ok());
  const Complex r = gauss_reduce(x);
  REQUIRE(r.size() == 2);
  CHECK(r.find("c").has_value());
  CHECK(r.find("d").has_value());
  CHECK(r.entries().empty());
}

TEST_CASE("gauss elimination with a surviving induced entry") {
  // a -> b (Id), a -> c (D), d -> b (D): the zigzag gives d -> c with D.D
  Complex x;
  x.add_generator({"a", B, 0, 0});
  x.add_generator({"b", B, 0, 1});
  x.add_generator({"c", B, 2, 1});
  x.add_generator({"d", B, -2, 0});
  x.add_entry("a", "b", Element::identity(B));
  x.add_entry("a", "c", Element(Word::d_power(B, 1)));
  x.add_entry("d", "b", Element(Word::d_power(B, 1)));
  const Complex r = gauss_reduce(x);
  REQUIRE(r.size() == 2);
  const auto d = *r.find("d");
  const auto c = *r.find("c");
  REQUIRE(r.entry(d, c) != nullptr);
  CHECK(*r.entry(d, c) == Element(Word::d_power(B, 2)));
}

TEST_CASE("direct sums") {
  const Complex s = direct_sum(single(B), single(C));
  CHECK(s.size() == 2);
  CHECK(s.entries().empty());
  CHECK(validate_complex(s).ok());

  const Complex t = direct_sum(compiled("e1"), shift_complex(compiled("a0"), 3, 1));
  CHECK(t.size() == 3);
  CHECK(validate_complex(t).ok());
  for (const auto& g : t.generators()) CHECK(g.vertex == B);
  CHECK(connected_components(t).size() == 2);
}

TEST_CASE("random fixtures are valid and reduce to valid reduced complexes") {
  std::mt19937 rng(7);
  for (int i = 0; i < 60; ++i) {
    const Complex x = testing::random_fixture(rng, i % 2 == 0);
    const auto r = validate_complex(x);
    INFO(r.problems.size());
    REQUIRE(r.ok());
    const Complex y = gauss_reduce(x);
    const auto ry = validate_complex(y);
    CHECK(ry.ok());
    CHECK(ry.reduced);
    // reduction is idempotent
    CHECK(gauss_reduce(y) == y);
  }
}

TEST_CASE("basis changes preserve validity") {
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    Complex x = direct_sum(cone_h(compiled("bn-q13")), testing::id_pair(B, -3, -1));
    for (int k = 0; k < 10; ++k) {
      x = testing::random_basis_change(rng, x);
      REQUIRE(validate_complex(x).ok());
    }
    CHECK(gauss_reduce(x).size() == 8);
  }
}

TEST_CASE("reduction gives the same shape regardless of scrambling") {
  std::mt19937 rng(3);
  const Complex base = direct_sum(compiled("alpha-plus"), testing::id_pair(C, -4, -1));
  for (int i = 0; i < 30; ++i) {
    Complex x = base;
    for (int k = 0; k < 6; ++k) x = testing::random_basis_change(rng, x);
    const Complex r = gauss_reduce(x);
    CHECK(match_up_to_shift(compiled("alpha-plus"), r).has_value());
  }
}
