#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "naive.hpp"
#include "ringrange/element_class.hpp"
#include "ringrange/harness.hpp"
#include "ringrange/properties.hpp"

using namespace ringrange;

namespace {

std::string bound(const Ring& ring, const Verdict& v, const char* name) {
  REQUIRE(v.witness);
  auto e = v.witness->get(name);
  REQUIRE(e);
  return ring.format(*e);
}

std::vector<RingSpec> specs_up_to(std::uint64_t max_order) {
  CorpusConfig cfg;
  cfg.max_order = max_order;
  return corpus_specs(cfg);
}

}  // namespace

TEST_CASE("property names") {
  for (PropertyId id : kAllProperties) {
    CHECK(parse_property(property_name(id)) == id);
    CHECK_FALSE(property_statement(id).empty());
  }
  CHECK(parse_property("sh-local") == PropertyId::ShLocal);
  CHECK(parse_property("Idem_Reg_Range1") == PropertyId::IdempotentRegularRange1);
  CHECK_FALSE(parse_property("SR3").has_value());
}

TEST_CASE("Z36 is semihereditary range 1 but not semihereditary local") {
  const auto z36 = Ring::realize("Z36");
  const Verdict local = decide(PropertyId::ShLocal, *z36);
  CHECK_FALSE(local.holds);
  CHECK(bound(*z36, local, "a") == "2");
  CHECK(bound(*z36, local, "b") == "3");
  CHECK(reverify(*z36, local));

  const Verdict range = decide(PropertyId::ShRange1, *z36);
  CHECK(range.holds);
  CHECK(reverify(*z36, range));
}

TEST_CASE("decider examples") {
  const auto z6 = Ring::realize("Z6");
  const Verdict reg_local = decide(PropertyId::RegularLocal, *z6);
  CHECK_FALSE(reg_local.holds);
  CHECK(bound(*z6, reg_local, "a") == "3");

  CHECK(decide(PropertyId::StableRange1, *z6).holds);
  const auto t = witness_for(PropertyId::StableRange1, *z6,
                             std::vector<Element>{z6->element(2), z6->element(3)});
  REQUIRE(t);
  CHECK(t->get("t")->code == 1);

  const auto r = Ring::realize("Z4[x]/(x^2)");
  for (PropertyId id : {PropertyId::Bezout, PropertyId::Hermite}) {
    const Verdict v = decide(id, *r);
    CHECK_FALSE(v.holds);
    CHECK(bound(*r, v, "a") == "2");
    CHECK(bound(*r, v, "b") == "x");
    CHECK(reverify(*r, v));
  }
  CHECK(decide(PropertyId::Local, *r).holds);
  CHECK(decide(PropertyId::RegularLocal, *r).holds);

  const auto z36 = Ring::realize("Z36");
  const auto f = hermite_factorization(*z36, z36->element(4), z36->element(6));
  REQUIRE(f);
  CHECK(f->d.code == 2);
  CHECK(f->a1.code == 2);
  CHECK(f->b1.code == 3);
  CHECK(decide(PropertyId::Hermite, *z36).holds);
  CHECK(decide(PropertyId::Bezout, *z36).holds);
}

TEST_CASE("fields satisfy every property") {
  for (const char* text : {"Z2", "Z7", "Z2[x]/(x^2+x+1)", "Z3[x]/(x^2+1)"}) {
    const auto ring = Ring::realize(text);
    for (PropertyId id : kAllProperties) {
      CAPTURE(text);
      CAPTURE(property_name(id));
      CHECK(decide(id, *ring).holds);
    }
  }
}

TEST_CASE("deciders agree with brute force") {
  for (const auto& spec : specs_up_to(32)) {
    const auto ring = Ring::realize(spec);
    const naive::Ring ref(spec);
    for (PropertyId id : kAllProperties) {
      CAPTURE(ring->label());
      CAPTURE(property_name(id));
      const Verdict v = decide(id, *ring);
      CHECK(v.holds == ref.holds(id));
      CHECK(reverify(*ring, v));
    }
  }
}

TEST_CASE("isomorphic rings get the same vector") {
  const auto a = Ring::realize("Z36");
  const auto b = Ring::realize("Z4 x Z9");
  for (PropertyId id : kAllProperties) {
    CAPTURE(property_name(id));
    CHECK(decide(id, *a).holds == decide(id, *b).holds);
  }
}

TEST_CASE("verdicts are deterministic") {
  const auto a = Ring::realize("Z2 x Z12");
  const auto b = Ring::realize("Z2 x Z12");
  for (PropertyId id : kAllProperties) {
    const Verdict x = decide(id, *a);
    const Verdict y = decide(id, *b);
    CHECK(x.holds == y.holds);
    CHECK(format_witness(*a, x.witness) == format_witness(*b, y.witness));
  }
}

TEST_CASE("cross-checked decisions") {
  DecideOptions opt;
  opt.cross_check = true;
  for (const char* text : {"Z12", "Z16", "Z4[x]/(x^2)", "Z2 x Z4", "Z3[x]/(x^2)"}) {
    const auto ring = Ring::realize(text);
    for (PropertyId id : kAllProperties) CHECK_NOTHROW(decide(id, *ring, opt));
  }
}

TEST_CASE("Hermite routes agree") {
  for (const auto& spec : specs_up_to(64)) {
    const auto ring = Ring::realize(spec);
    CAPTURE(ring->label());
    const bool h = decide_hermite(*ring).holds;
    CHECK(h == (decide(PropertyId::Bezout, *ring).holds &&
                decide(PropertyId::StableRange2, *ring).holds));
    if (ring->order() <= 16) CHECK(hermite_matrix_oracle(*ring).holds == h);
  }
  const auto r = Ring::realize("Z4[x]/(x^2)");
  const Verdict m = hermite_matrix_oracle(*r);
  CHECK_FALSE(m.holds);
  CHECK(reverify(*r, m));
  CHECK_THROWS_AS(hermite_matrix_oracle(*Ring::realize("Z17")), CapExceeded);
}

TEST_CASE("caps and deadlines") {
  CHECK_THROWS_AS(decide(PropertyId::StableRange2, *Ring::realize("Z65")), CapExceeded);
  DecideOptions opt;
  opt.sr2_cap = 100;
  CHECK(decide(PropertyId::StableRange2, *Ring::realize("Z65"), opt).holds);

  DecideOptions late;
  late.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK_THROWS_AS(decide(PropertyId::StableRange1, *Ring::realize("Z30"), late), DeadlineExceeded);
}

TEST_CASE("reverify rejects tampered witnesses") {
  const auto z36 = Ring::realize("Z36");
  Verdict v = decide(PropertyId::ShLocal, *z36);
  v.witness->bindings[0].second = z36->element(5);
  CHECK_FALSE(reverify(*z36, v));

  Verdict sr1 = decide(PropertyId::StableRange1, *z36);
  sr1.holds = false;
  CHECK_FALSE(reverify(*z36, sr1));
}

TEST_CASE("witness_for") {
  const auto z36 = Ring::realize("Z36");
  const std::vector<Element> pair = {z36->element(4), z36->element(6)};
  const auto b = witness_for(PropertyId::Bezout, *z36, pair);
  REQUIRE(b);
  CHECK(b->get("d")->code == 2);
  const std::vector<Element> not_unimodular = {z36->element(2), z36->element(4)};
  CHECK_FALSE(witness_for(PropertyId::StableRange1, *z36, not_unimodular).has_value());

  const auto clean = witness_for(PropertyId::Clean, *z36, std::vector<Element>{z36->element(9)});
  REQUIRE(clean);
  CHECK(z36->add(*clean->get("e"), *clean->get("u")).code == 9);
}
