#include "doctest.h"

#include "infcc/generators.hpp"
#include "infcc/laurent.hpp"
#include "infcc/serialize.hpp"

using namespace infcc;

namespace {

const std::vector<Arc> kVars{Arc{0, 2}, Arc{0, 3}, Arc{1, 3}, Arc{-2, 0}, Arc{-1, 4}};

LaurentPoly random_poly(Rng& rng) {
  LaurentPoly p;
  const int terms = uniform_int(rng, 0, 4);
  for (int k = 0; k < terms; ++k) {
    SplitK0Class e;
    for (int v = 0; v < 2; ++v) e.add(pick(kVars, rng), uniform_int(rng, -2, 2));
    p += LaurentPoly::term(Monomial{e}, uniform_int(rng, -9, 9));
  }
  return p;
}

}  // namespace

TEST_CASE("zero coefficients and exponents are dropped") {
  const LaurentPoly x = LaurentPoly::variable(Arc{0, 2});
  CHECK((x - x).is_zero());
  CHECK((x * x.div_exact_variable(Arc{0, 2}).div_exact_variable(Arc{0, 2})) == LaurentPoly::one());
  SplitK0Class k = SplitK0Class::of(Arc{0, 2}, 3);
  k.add(Arc{0, 2}, -3);
  CHECK(k.is_zero());
}

TEST_CASE("text rendering is canonical") {
  const LaurentPoly a = LaurentPoly::variable(Arc{0, 3});
  const LaurentPoly b = LaurentPoly::variable(Arc{0, 2});
  const LaurentPoly p = (a + LaurentPoly::one()).div_exact_variable(Arc{0, 2});
  CHECK(p.to_text() == "(x[0,3] + 1)/x[0,2]");
  CHECK((a * b + b + a + LaurentPoly::one()).to_text() == "x[0,2]*x[0,3] + x[0,2] + x[0,3] + 1");
  CHECK(LaurentPoly::constant(-4).to_text() == "-4");
  CHECK(LaurentPoly{}.to_text() == "0");
}

TEST_CASE("big coefficients survive") {
  LaurentPoly p = LaurentPoly::constant(3);
  for (int k = 0; k < 80; ++k) p *= LaurentPoly::constant(3);
  CHECK(p.eval_all_ones() == boost::multiprecision::pow(BigInt(3), 81));
  CHECK(laurent_from_json(to_json(p)) == p);
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng(11);
  for (int k = 0; k < 300; ++k) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly{});
    CHECK((a * b).eval_all_ones() == a.eval_all_ones() * b.eval_all_ones());
    CHECK(laurent_from_json(to_json(a)) == a);
  }
}

TEST_CASE("unit substitution is a ring map") {
  Rng rng(12);
  const std::set<Arc> units{Arc{0, 2}, Arc{-2, 0}};
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng);
    CHECK((a * b).substitute_unit(units) == a.substitute_unit(units) * b.substitute_unit(units));
    for (const auto& v : (a + b).substitute_unit(units).variables()) CHECK_FALSE(units.count(v));
  }
}

TEST_CASE("class json round trip") {
  SplitK0Class k = SplitK0Class::of(Arc{0, 3}) - SplitK0Class::of(Arc{0, 2}, 2);
  CHECK(split_class_from_json(to_json(k)) == k);
  ModClass e = ModClass::of(Arc{-1, 2}, 4);
  CHECK(mod_class_from_json(to_json(e)) == e);
}
