#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "plain.hpp"
#include "ringrange/ideal.hpp"

using namespace ringrange;

namespace {

std::vector<Code> codes(const Ideal& I) {
  std::vector<Code> out;
  for (Element e : I.members()) out.push_back(e.code);
  return out;
}

// Members of gcd(a, b, n) Z_n.
std::vector<Code> gcd_ideal(std::uint64_t n, std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(std::gcd(a, b), n);
  std::vector<Code> out;
  for (std::uint64_t k = 0; k < n; k += g) out.push_back(static_cast<Code>(k));
  return out;
}

}  // namespace

TEST_CASE("ideal examples in Z36 and Z12") {
  const auto z36 = Ring::realize("Z36");
  const auto e = [&](Code c) { return z36->element(c); };
  CHECK(codes(principal_ideal(*z36, e(18))) == std::vector<Code>{0, 18});
  CHECK(ideal_sum(*z36, principal_ideal(*z36, e(2)), principal_ideal(*z36, e(3))).is_whole_ring());
  CHECK(ideal_contains(principal_ideal(*z36, e(9)), e(27)));
  CHECK_FALSE(ideal_contains(principal_ideal(*z36, e(9)), e(3)));

  CHECK(is_unimodular(*z36, e(2), e(3)));
  CHECK_FALSE(is_unimodular(*z36, e(2), e(4)));
  for (Element a : z36->elements()) CHECK(is_unimodular(*z36, a, z36->one()));

  CHECK(codes(annihilator(*z36, e(2))) == std::vector<Code>{0, 18});
  CHECK(codes(annihilator(*z36, e(5))) == std::vector<Code>{0});

  const auto z12 = Ring::realize("Z12");
  CHECK(codes(annihilator(*z12, z12->element(4))) == std::vector<Code>{0, 3, 6, 9});
  CHECK(codes(jacobson_radical(*z12)) == std::vector<Code>{0, 6});
  CHECK(codes(jacobson_radical(*Ring::realize("Z7"))) == std::vector<Code>{0});
}

TEST_CASE("generators and equality") {
  const auto z12 = Ring::realize("Z12");
  const Element gens[] = {z12->element(8), z12->element(6)};
  const Ideal I = Ideal::generated_by(*z12, gens);
  CHECK(codes(I) == std::vector<Code>{0, 2, 4, 6, 8, 10});
  CHECK(I == principal_ideal(*z12, z12->element(2)));
  CHECK(I.size() == 6);
  const Ideal J = Ideal::from_mask(*z12, I.mask());
  CHECK(J == I);
  CHECK(Ideal::generated_by(*z12, J.generators()) == I);
  CHECK(Ideal::generated_by(*z12, {}).size() == 1);

  const auto other = Ring::realize("Z12");
  CHECK_THROWS_AS(ideal_sum(*z12, I, principal_ideal(*other, other->one())), MixedRingError);
}

TEST_CASE("sums and unimodularity in Z_n follow the gcd") {
  for (Code n = 2; n <= 40; ++n) {
    const auto ring = Ring::realize(RingSpec::modular(n));
    for (Code a = 0; a < n; ++a) {
      for (Code b = 0; b < n; ++b) {
        const Element x = ring->element(a);
        const Element y = ring->element(b);
        const Ideal s = ideal_sum(*ring, principal_ideal(*ring, x), principal_ideal(*ring, y));
        CHECK(codes(s) == gcd_ideal(n, a, b));
        CHECK(is_unimodular(*ring, x, y) == (std::gcd(std::gcd(a, b), n) == 1));
      }
    }
  }
}

TEST_CASE("Jacobson radical of Z_n is the radical of n") {
  for (Code n = 2; n <= 100; ++n) {
    std::uint64_t rad = 1;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p <= m; ++p) {
      if (m % p) continue;
      rad *= p;
      while (m % p == 0) m /= p;
    }
    CAPTURE(n);
    CHECK(codes(jacobson_radical(*Ring::realize(RingSpec::modular(n)))) ==
          gcd_ideal(n, rad, 0));
  }
}

TEST_CASE("Jacobson radical of a local ring is the non-units") {
  const auto r = Ring::realize("Z4[x]/(x^2)");
  std::vector<Code> non_units;
  for (Code c = 0; c < r->order(); ++c) {
    if (!r->is_unit(c)) non_units.push_back(c);
  }
  CHECK(codes(jacobson_radical(*r)) == non_units);
  CHECK(non_units.size() == 8);
}

TEST_CASE("bezout_pair examples") {
  const auto z36 = Ring::realize("Z36");
  const auto w = bezout_pair(*z36, z36->element(4), z36->element(6));
  REQUIRE(w);
  CHECK(w->d.code == 2);
  CHECK(w->a0.code == 2);
  CHECK(w->b0.code == 3);
  CHECK(verify_bezout_witness(*z36, z36->element(4), z36->element(6), *w));

  const auto r = Ring::realize("Z4[x]/(x^2)");
  CHECK_FALSE(bezout_pair(*r, r->parse_element("2"), r->parse_element("x")).has_value());

  // (a, 0): the generator is the smallest d with dR = aR; for a = 1 that is 1.
  const auto z12 = Ring::realize("Z12");
  const auto w1 = bezout_pair(*z12, z12->one(), z12->zero());
  REQUIRE(w1);
  CHECK(w1->d == z12->one());
  CHECK(w1->a0 == z12->one());
  CHECK(w1->b0 == z12->zero());
  const auto w4 = bezout_pair(*z12, z12->element(4), z12->zero());
  REQUIRE(w4);
  CHECK(w4->d.code == 4);
  CHECK(w4->a0.code == 1);
  CHECK(w4->b0.code == 0);
  const auto w8 = bezout_pair(*z12, z12->element(8), z12->zero());
  REQUIRE(w8);
  CHECK(w8->d.code == 4);
  CHECK(w8->a0.code == 2);
}

TEST_CASE("bezout witnesses are valid and minimal") {
  for (const char* text : {"Z12", "Z36", "Z2 x Z8", "Z3[x]/(x^2)", "Z2[x]/(x^2+x)"}) {
    const auto ring = Ring::realize(text);
    const Code n = static_cast<Code>(ring->order());
    for (Code a = 0; a < n; ++a) {
      for (Code b = 0; b < n; ++b) {
        const Element x = ring->element(a);
        const Element y = ring->element(b);
        const auto w = bezout_pair(*ring, x, y);
        const Ideal sum = ideal_sum(*ring, principal_ideal(*ring, x), principal_ideal(*ring, y));
        // Smallest generator found by scanning every d.
        std::optional<Code> first;
        for (Code d = 0; d < n && !first; ++d) {
          if (principal_ideal(*ring, ring->element(d)) == sum) first = d;
        }
        CAPTURE(text);
        CAPTURE(a);
        CAPTURE(b);
        REQUIRE(w.has_value() == first.has_value());
        if (!w) continue;
        CHECK(w->d.code == *first);
        CHECK(verify_bezout_witness(*ring, x, y, *w));
        CHECK(ring->mul(w->a0, w->d) == x);
        CHECK(ring->mul(w->b0, w->d) == y);
        CHECK(ring->add(ring->mul(x, w->x), ring->mul(y, w->y)) == w->d);
      }
    }
  }
}

TEST_CASE("verify_bezout_witness rejects a wrong witness") {
  const auto z12 = Ring::realize("Z12");
  auto w = *bezout_pair(*z12, z12->element(4), z12->element(6));
  w.a0 = z12->element(1);
  CHECK_FALSE(verify_bezout_witness(*z12, z12->element(4), z12->element(6), w));
}

TEST_CASE("unimodular coefficients") {
  const auto z36 = Ring::realize("Z36");
  const auto uv = unimodular_coefficients(*z36, z36->element(2), z36->element(3));
  REQUIRE(uv);
  CHECK(z36->add(z36->mul(z36->element(2), uv->first), z36->mul(z36->element(3), uv->second)) ==
        z36->one());
  // u = 0 and u = 1 leave 1 - 2u outside 3R.
  CHECK(uv->first.code == 2);
  CHECK(uv->second.code == 11);
  CHECK_FALSE(unimodular_coefficients(*z36, z36->element(2), z36->element(4)).has_value());
}
