#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <thread>

#include "plain.hpp"
#include "ringrange/harness.hpp"
#include "ringrange/ring.hpp"

using namespace ringrange;

namespace {

std::vector<Code> codes_of(const Subset& s) { return s.members; }

std::vector<RingSpec> small_corpus(std::uint64_t max_order) {
  CorpusConfig cfg;
  cfg.max_order = max_order;
  return corpus_specs(cfg);
}

}  // namespace

TEST_CASE("spec parsing and printing") {
  CHECK(RingSpec::parse("Z36").to_string() == "Z36");
  CHECK(RingSpec::parse(" Z4 x Z9 ").to_string() == "Z4 x Z9");
  CHECK(RingSpec::parse("Z4[x]/(x^2)").to_string() == "Z4[x]/(x^2)");
  CHECK(RingSpec::parse("Z2[x]/(x^2+x+1)").to_string() == "Z2[x]/(x^2+x+1)");
  CHECK(RingSpec::parse("Z3[x]/(x^2-1)").to_string() == "Z3[x]/(x^2+2)");
  CHECK(RingSpec::product({RingSpec::parse("Z2 x Z3"), RingSpec::modular(5)}).to_string() ==
        "Z2 x Z3 x Z5");

  CHECK(RingSpec::parse("Z36").order() == 36);
  CHECK(RingSpec::parse("Z4 x Z9").order() == 36);
  CHECK(RingSpec::parse("Z4[x]/(x^2)").order() == 16);
  CHECK(RingSpec::parse("Z2[x]/(x^2+x+1) x Z3").order() == 12);

  for (const char* bad : {"", "Z", "Z1", "Z0", "Zq", "Z2 x", "Z4[x]/(2x^2+1)",
                          "Z4[x]/(4x^2+x)", "Z4[x]/(3)", "Z3000", "Z50 x Z50", "Q5"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(RingSpec::parse(bad), RingError);
  }
  CHECK_THROWS_AS(RingSpec::product({RingSpec::modular(3)}).validate(), RingError);
  CHECK_THROWS_AS(RingSpec::poly_quotient(4, {0, 2}).validate(), RingError);
}

TEST_CASE("spec round trip") {
  for (const auto& spec : small_corpus(100)) {
    const auto text = spec.to_string();
    CAPTURE(text);
    CHECK(RingSpec::parse(text) == spec);
  }
}

TEST_CASE("tables agree with reference arithmetic") {
  std::vector<RingSpec> specs = small_corpus(100);
  specs.push_back(RingSpec::parse("Z2[x]/(x^2+x+1) x Z3"));
  specs.push_back(RingSpec::parse("Z2[x]/(x^3+x+1)"));
  specs.push_back(RingSpec::parse("Z2 x Z2 x Z3"));
  for (const auto& spec : specs) {
    const auto ring = Ring::realize(spec);
    const plain::Ring ref(spec);
    CAPTURE(ring->label());
    REQUIRE(ring->order() == ref.order());
    CHECK(ring->one_code() == ref.one());
    CHECK(ring->zero_code() == 0);
    bool ok = true;
    for (Code a = 0; a < ring->order() && ok; ++a) {
      for (Code b = 0; b < ring->order() && ok; ++b) {
        ok = ring->add(a, b) == ref.add(a, b) && ring->mul(a, b) == ref.mul(a, b);
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("ring axioms hold on every small ring") {
  for (const auto& spec : small_corpus(100)) {
    const auto ring = Ring::realize(spec);
    CAPTURE(ring->label());
    CHECK_FALSE(check_ring_axioms(*ring).has_value());
  }
}

TEST_CASE("axiom checker rejects broken tables") {
  // Z3 with a multiplication table that is not distributive.
  std::vector<Code> add = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  std::vector<Code> mul = {0, 0, 0, 0, 1, 2, 0, 2, 2};
  const auto ring = Ring::from_tables("bad", 3, add, mul, 0, 1, {"0", "1", "2"});
  CHECK(check_ring_axioms(*ring).has_value());
}

TEST_CASE("arithmetic examples") {
  const auto z36 = Ring::realize("Z36");
  CHECK(z36->mul(z36->element(9), z36->element(28)) == z36->zero());

  const auto r = Ring::realize("Z4[x]/(x^2)");
  const Element x = r->parse_element("x");
  CHECK(r->mul(x, x) == r->zero());
  CHECK(r->format(x) == "x");
  CHECK(r->format(r->parse_element("2+x")) == "2+x");
  CHECK(r->format(r->parse_element("3x")) == "3x");
  CHECK(r->parse_element("x+2") == r->parse_element("2+x"));

  for (const auto* ring : {z36.get(), r.get()}) {
    for (Element a : ring->elements()) CHECK(ring->add(a, ring->neg(a)) == ring->zero());
  }

  const auto p = Ring::realize("Z2 x Z3");
  CHECK(p->format(p->one()) == "(1,1)");
  CHECK(p->parse_element("(1,2)") == p->element(5));
  CHECK(p->parse_element("(1,-1)") == p->parse_element("(1,2)"));
  CHECK_THROWS_AS(p->parse_element("(1,2,0)"), RingError);
  CHECK_THROWS_AS(p->parse_element("7"), RingError);
}

TEST_CASE("format and parse are inverse") {
  for (const char* text : {"Z12", "Z2 x Z6", "Z3[x]/(x^2+1)", "Z4[x]/(x^2+3x)",
                           "Z2[x]/(x^2+x+1) x Z3"}) {
    const auto ring = Ring::realize(text);
    for (Element e : ring->elements()) {
      CAPTURE(ring->format(e));
      CHECK(ring->parse_element(ring->format(e)) == e);
    }
  }
}

TEST_CASE("elements of different rings do not mix") {
  const auto a = Ring::realize("Z6");
  const auto b = Ring::realize("Z6");
  CHECK(a->tag() != b->tag());
  CHECK_THROWS_AS(a->add(a->one(), b->one()), MixedRingError);
  CHECK_THROWS_AS(a->format(b->one()), MixedRingError);
  CHECK_THROWS_AS(a->element(6), RingError);
}

TEST_CASE("special subsets") {
  const auto z36 = Ring::realize("Z36");
  CHECK(codes_of(z36->idempotents()) == std::vector<Code>{0, 1, 9, 28});
  CHECK(codes_of(Ring::realize("Z6")->regulars()) == std::vector<Code>{1, 5});
  for (const char* field : {"Z7", "Z2[x]/(x^2+x+1)", "Z3[x]/(x^2+1)"}) {
    CHECK(Ring::realize(field)->idempotents().size() == 2);
    CHECK(Ring::realize(field)->units().size() == Ring::realize(field)->order() - 1);
  }
  const auto s = special_subsets(*z36);
  CHECK(s.units.size() == 12);
  CHECK(s.idempotents.size() == 4);
  CHECK(s.regulars == s.units);
}

TEST_CASE("special subsets match definitions") {
  for (const auto& spec : small_corpus(100)) {
    const auto ring = Ring::realize(spec);
    CAPTURE(ring->label());
    const Code n = static_cast<Code>(ring->order());
    std::vector<Code> units;
    std::vector<Code> idem;
    std::vector<Code> regular;
    for (Code a = 0; a < n; ++a) {
      bool unit = false;
      bool zero_divisor = a == ring->zero_code();
      for (Code x = 0; x < n; ++x) {
        unit = unit || ring->mul(a, x) == ring->one_code();
        zero_divisor = zero_divisor || (x != 0 && ring->mul(a, x) == 0);
      }
      if (unit) units.push_back(a);
      if (!zero_divisor) regular.push_back(a);
      if (ring->mul(a, a) == a) idem.push_back(a);
    }
    CHECK(codes_of(ring->units()) == units);
    CHECK(codes_of(ring->idempotents()) == idem);
    CHECK(codes_of(ring->regulars()) == regular);
    // Finite rings: regular elements are exactly the units.
    CHECK(regular == units);
    for (Code u : units) CHECK(ring->mul(u, ring->inverse(u)) == ring->one_code());
  }
  const auto z12 = Ring::realize("Z12");
  for (Code a = 0; a < 12; ++a) CHECK(z12->is_unit(a) == plain::coprime(a, 12));
  CHECK_THROWS_AS(z12->inverse(4), RingError);
}

TEST_CASE("cached ideal helpers") {
  const auto z12 = Ring::realize("Z12");
  CHECK(z12->multiples(8).members == std::vector<Code>{0, 4, 8});
  CHECK(z12->annihilator_of(4).members == std::vector<Code>{0, 3, 6, 9});
  CHECK(z12->divide(4, 8) == Code{2});
  CHECK_FALSE(z12->divide(4, 2).has_value());
  CHECK(z12->comaximal(4, 3));
  CHECK_FALSE(z12->comaximal(4, 6));
  CHECK(z12->principal_generator(z12->multiples(8).mask) == Code{4});
  std::vector<bool> not_ideal(12, false);
  not_ideal[1] = true;
  CHECK_FALSE(z12->principal_generator(not_ideal).has_value());
}

TEST_CASE("concurrent first use of caches") {
  const auto ring = Ring::realize("Z2 x Z50");
  std::vector<std::size_t> sizes(8);
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      pool.emplace_back([&, i] {
        sizes[i] = ring->units().size() + ring->idempotents().size() + ring->regulars().size();
      });
    }
  }
  CHECK(std::all_of(sizes.begin(), sizes.end(), [&](std::size_t s) { return s == sizes[0]; }));
  CHECK(sizes[0] == 20 + 8 + 20);
}

TEST_CASE("memo runs once per type") {
  const auto ring = Ring::realize("Z5");
  int calls = 0;
  struct Slot {
    int value;
  };
  const auto& a = ring->memo<Slot>([&] { return Slot{++calls}; });
  const auto& b = ring->memo<Slot>([&] { return Slot{++calls}; });
  CHECK(&a == &b);
  CHECK(calls == 1);
}
