#include "ringrange/transformers.hpp"

#include "ringrange/element_class.hpp"
#include "ringrange/ideal.hpp"

namespace ringrange {

namespace {

void require_unimodular(const Ring& ring, Element a, Element b) {
  if (!is_unimodular(ring, a, b)) {
    throw PreconditionError("(" + ring.format(a) + ", " + ring.format(b) +
                            ") is not unimodular in " + ring.label());
  }
}

// u, v with e u + b v = 1; exists whenever eR + bR = R.
std::pair<Element, Element> solve_unimodular(const Ring& ring, Element e, Element b) {
  auto uv = unimodular_coefficients(ring, e, b);
  if (!uv) {
    throw std::logic_error("eR + bR != R for e = " + ring.format(e) + ", b = " + ring.format(b));
  }
  return *uv;
}

}  // namespace

Element witness_sr1_from_vnr(const Ring& ring, Element a, Element b, Element y) {
  require_unimodular(ring, a, b);
  const Element c = ring.add(a, ring.mul(b, y));
  if (!classify(ring, c).is_vnr) {
    throw PreconditionError("a + by = " + ring.format(c) + " is not von Neumann regular");
  }
  const auto [x, e, k] = vnr_decompose(ring, c);
  const auto [u, v] = solve_unimodular(ring, e, b);
  // e + b(1 - e)v = 1, so k = ek + b(1 - e)kv = a + b(y + (1 - e)kv).
  const Element one_minus_e = ring.sub(ring.one(), e);
  const Element t = ring.add(y, ring.mul(ring.mul(one_minus_e, k), v));
  const Element result = ring.add(a, ring.mul(b, t));
  if (result != k || !ring.is_unit(result.code)) {
    throw std::logic_error("witness_sr1_from_vnr: a + bt is not the unit k");
  }
  return t;
}

Element witness_regular_from_sh(const Ring& ring, Element a, Element b, Element y) {
  require_unimodular(ring, a, b);
  const Element c = ring.add(a, ring.mul(b, y));
  if (!classify(ring, c).is_semihereditary) {
    throw PreconditionError("a + by = " + ring.format(c) + " is not semihereditary");
  }
  const auto [phi, e, r] = sh_decompose(ring, c);
  const auto [u, v] = solve_unimodular(ring, e, b);
  // er + br(1 - e)v = r with er = a + by.
  const Element s = ring.add(y, ring.mul(ring.mul(r, ring.sub(ring.one(), e)), v));
  const Element result = ring.add(a, ring.mul(b, s));
  if (result != r || !ring.is_regular(result.code)) {
    throw std::logic_error("witness_regular_from_sh: a + bs is not the regular r");
  }
  return s;
}

std::pair<Element, Element> witness_idem_reg_from_pp(const Ring& ring, Element a, Element b) {
  require_unimodular(ring, a, b);
  Element e;
  if (classify(ring, a).is_semihereditary) {
    // a = f r: s = a + b(1 - f), which is a itself when f = 1.
    const auto split = sh_decompose(ring, a);
    e = ring.sub(ring.one(), split.e);
  } else {
    // aR + (a + b)R = R forces a + b semihereditary in a semihereditary local
    // ring; with a + b = f r, (a + b) + (-b)(1 - f) = a + bf.
    const Element c = ring.add(a, b);
    if (!classify(ring, c).is_semihereditary) {
      throw PreconditionError("neither a = " + ring.format(a) + " nor a + b = " + ring.format(c) +
                              " is semihereditary");
    }
    e = sh_decompose(ring, c).e;
  }
  const Element s = ring.add(a, ring.mul(b, e));
  if (!ring.is_idempotent(e.code) || !ring.is_regular(s.code)) {
    throw std::logic_error("witness_idem_reg_from_pp: a + be is not regular");
  }
  return {e, s};
}

Element witness_additively_regular(const Ring& ring, Element a, Element b) {
  if (!ring.is_regular(ring.code_of(b))) {
    throw PreconditionError(ring.format(b) + " is not a regular element");
  }
  const auto w = bezout_pair(ring, a, b);
  if (!w) {
    throw PreconditionError("aR + bR is not principal for a = " + ring.format(a) +
                            ", b = " + ring.format(b));
  }
  // d divides the regular b, so d is regular and a0 R + b0 R = R.
  if (!ring.is_regular(w->d.code) ||
      ring.add(ring.mul(w->a0, w->x), ring.mul(w->b0, w->y)) != ring.one()) {
    throw std::logic_error("witness_additively_regular: cofactors are not unimodular");
  }
  std::optional<Element> t;
  for (auto candidate : ring.elements()) {
    if (ring.is_regular(ring.add(w->a0, ring.mul(w->b0, candidate)).code)) {
      t = candidate;
      break;
    }
  }
  if (!t) {
    throw PreconditionError("no t makes a0 + b0 t regular; the ring is not of regular range 1");
  }
  const Element value = ring.add(a, ring.mul(*t, b));
  if (!ring.is_regular(value.code)) {
    throw std::logic_error("witness_additively_regular: a + ub is not regular");
  }
  return *t;
}

}  // namespace ringrange
