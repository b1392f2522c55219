#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "plain.hpp"
#include "ringrange/element_class.hpp"

using namespace ringrange;

TEST_CASE("classification examples") {
  const auto z6 = Ring::realize("Z6");
  const auto c3 = classify(*z6, z6->element(3));
  CHECK(c3.is_idempotent);
  CHECK(c3.is_vnr);
  CHECK(c3.is_semihereditary);
  CHECK_FALSE(c3.is_unit);
  CHECK_FALSE(c3.is_regular);

  const auto z36 = Ring::realize("Z36");
  const auto c6 = classify(*z36, z36->element(6));
  CHECK(c6.is_nilpotent);
  CHECK_FALSE(c6.is_vnr);
  CHECK_FALSE(c6.is_semihereditary);

  const auto c2 = classify(*z36, z36->element(2));
  CHECK_FALSE(c2.is_regular);
  CHECK_FALSE(c2.is_semihereditary);
  CHECK_FALSE(c2.sh_witness.has_value());

  const auto c0 = classify(*z36, z36->zero());
  CHECK_FALSE(c0.is_regular);  // zero is never regular
  CHECK(c0.is_vnr);
  CHECK(c0.is_semihereditary);
}

TEST_CASE("classification in Z_n matches the gcd test") {
  for (Code n = 2; n <= 100; ++n) {
    const auto ring = Ring::realize(RingSpec::modular(n));
    for (Code a = 0; a < n; ++a) {
      const auto& c = class_of(*ring, a);
      CAPTURE(n);
      CAPTURE(a);
      CHECK(c.is_unit == plain::coprime(a, n));
      CHECK(c.is_vnr == plain::idempotent_generated(a, n));
      CHECK(c.is_semihereditary == plain::idempotent_generated(a, n));
      CHECK(c.is_idempotent == ((std::uint64_t{a} * a) % n == a));
    }
  }
}

TEST_CASE("witnesses satisfy their definitions") {
  for (const char* text : {"Z36", "Z4[x]/(x^2)", "Z2 x Z12", "Z3[x]/(x^2+2x)"}) {
    const auto ring = Ring::realize(text);
    for (Element a : ring->elements()) {
      const auto c = classify(*ring, a);
      if (c.vnr_witness) {
        const Element x = *c.vnr_witness;
        CHECK(ring->mul(ring->mul(a, x), a) == a);
      }
      if (c.sh_witness) {
        CHECK(principal_ideal(*ring, *c.sh_witness) == annihilator(*ring, a));
        CHECK(ring->is_idempotent(c.sh_witness->code));
      }
      CHECK(c.vnr_witness.has_value() == c.is_vnr);
      CHECK(c.sh_witness.has_value() == c.is_semihereditary);
    }
  }
}

TEST_CASE("vnr_decompose examples") {
  const auto z6 = Ring::realize("Z6");
  const auto d = vnr_decompose(*z6, z6->element(3));
  CHECK(d.e.code == 3);
  CHECK(d.u.code == 1);
  CHECK(z6->mul(d.e, d.u).code == 3);

  for (Code u : {1u, 5u}) {
    const auto du = vnr_decompose(*z6, z6->element(u));
    CHECK(du.e == z6->one());
    CHECK(du.u.code == u);
  }
  const auto d0 = vnr_decompose(*z6, z6->zero());
  CHECK(d0.e == z6->zero());
  CHECK(d0.u == z6->one());

  const auto z36 = Ring::realize("Z36");
  CHECK_THROWS_AS(vnr_decompose(*z36, z36->element(6)), DecompositionError);
}

TEST_CASE("sh_decompose examples") {
  const auto z12 = Ring::realize("Z12");
  const auto d = sh_decompose(*z12, z12->element(4));
  CHECK(d.phi.code == 9);
  CHECK(d.e.code == 4);
  CHECK(d.r.code == 7);
  CHECK(z12->mul(d.e, d.r).code == 4);

  const auto d0 = sh_decompose(*z12, z12->zero());
  CHECK(d0.phi == z12->one());
  CHECK(d0.e == z12->zero());
  CHECK(d0.r.code == 11);

  const auto z36 = Ring::realize("Z36");
  try {
    sh_decompose(*z36, z36->element(2));
    FAIL("expected DecompositionError");
  } catch (const DecompositionError& e) {
    std::vector<Code> ann;
    for (Element m : e.annihilator().members()) ann.push_back(m.code);
    CHECK(ann == std::vector<Code>{0, 18});
  }
}

TEST_CASE("decompositions are sound on small rings") {
  for (const char* text : {"Z12", "Z36", "Z60", "Z2 x Z18", "Z4[x]/(x^2)", "Z2[x]/(x^2)",
                           "Z3[x]/(x^2+1)"}) {
    const auto ring = Ring::realize(text);
    for (Element a : ring->elements()) {
      const auto c = classify(*ring, a);
      CAPTURE(text);
      CAPTURE(ring->format(a));
      if (c.is_vnr) {
        const auto d = vnr_decompose(*ring, a);
        CHECK(ring->is_idempotent(d.e.code));
        CHECK(ring->is_unit(d.u.code));
        CHECK(ring->mul(d.e, d.u) == a);
      } else {
        CHECK_THROWS_AS(vnr_decompose(*ring, a), DecompositionError);
      }
      if (c.is_semihereditary) {
        const auto d = sh_decompose(*ring, a);
        CHECK(ring->is_idempotent(d.e.code));
        CHECK(ring->is_regular(d.r.code));
        CHECK(ring->mul(d.e, d.r) == a);
        const Element one_minus_e = ring->sub(ring->one(), d.e);
        CHECK(annihilator(*ring, a) == principal_ideal(*ring, one_minus_e));
      } else {
        CHECK_THROWS_AS(sh_decompose(*ring, a), DecompositionError);
      }
    }
  }
}

TEST_CASE("clean and almost clean decompositions") {
  const auto z6 = Ring::realize("Z6");
  const auto c = clean_decompose(*z6, z6->element(4));
  REQUIRE(c);
  CHECK(c->first.code == 3);
  CHECK(c->second.code == 1);
  const auto c1 = clean_decompose(*z6, z6->one());
  REQUIRE(c1);
  CHECK(c1->first == z6->zero());
  CHECK(c1->second == z6->one());

  const auto a0 = almost_clean_decompose(*z6, z6->zero());
  REQUIRE(a0);
  CHECK(a0->first == z6->one());
  CHECK(a0->second.code == 5);

  const auto z4 = Ring::realize("Z4");
  const auto a3 = almost_clean_decompose(*z4, z4->element(3));
  REQUIRE(a3);
  CHECK(a3->first == z4->zero());
  CHECK(a3->second.code == 3);

  for (const char* text : {"Z36", "Z2 x Z2 x Z3", "Z4[x]/(x^2+x+1)"}) {
    const auto ring = Ring::realize(text);
    for (Element a : ring->elements()) {
      const auto d = clean_decompose(*ring, a);
      REQUIRE(d);
      CHECK(ring->is_idempotent(d->first.code));
      CHECK(ring->is_unit(d->second.code));
      CHECK(ring->add(d->first, d->second) == a);
      CHECK(almost_clean_decompose(*ring, a).has_value());
    }
  }
}
