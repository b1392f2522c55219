#include "ringrange/ideal.hpp"

namespace ringrange {

std::vector<bool> sum_mask(const Ring& r, const std::vector<bool>& lhs,
                           const std::vector<bool>& rhs) {
  const auto n = static_cast<Code>(r.order());
  std::vector<Code> left, right;
  for (Code c = 0; c < n; ++c) {
    if (lhs[c]) left.push_back(c);
    if (rhs[c]) right.push_back(c);
  }
  std::vector<bool> out(n, false);
  for (Code x : left) {
    for (Code y : right) out[r.add(x, y)] = true;
  }
  return out;
}

bool Ideal::contains(Element e) const {
  return e.ring == ring_ && e.code < mask_.size() && mask_[e.code];
}

Ideal Ideal::from_mask(const Ring& ring, std::vector<bool> mask) {
  Ideal ideal;
  ideal.ring_ = ring.tag();
  const auto n = static_cast<Code>(ring.order());
  for (Code c = 0; c < n; ++c) {
    if (mask[c]) ideal.members_.push_back(ring.element(c));
  }
  // Greedy generating set: add each member not yet reached.
  std::vector<bool> reached(n, false);
  reached[ring.zero_code()] = true;
  for (Code c = 0; c < n; ++c) {
    if (!mask[c] || reached[c]) continue;
    ideal.generators_.push_back(ring.element(c));
    reached = sum_mask(ring, reached, ring.multiples(c).mask);
  }
  ideal.mask_ = std::move(mask);
  return ideal;
}

Ideal Ideal::generated_by(const Ring& ring, std::span<const Element> gens) {
  const auto n = ring.order();
  std::vector<bool> mask(n, false);
  mask[ring.zero_code()] = true;
  for (auto g : gens) mask = sum_mask(ring, mask, ring.multiples(ring.code_of(g)).mask);
  Ideal ideal;
  ideal.ring_ = ring.tag();
  ideal.generators_.assign(gens.begin(), gens.end());
  for (Code c = 0; c < n; ++c) {
    if (mask[c]) ideal.members_.push_back(ring.element(c));
  }
  ideal.mask_ = std::move(mask);
  return ideal;
}

Ideal principal_ideal(const Ring& ring, Element a) {
  const Element gens[] = {a};
  return Ideal::generated_by(ring, gens);
}

Ideal ideal_sum(const Ring& ring, const Ideal& lhs, const Ideal& rhs) {
  if (lhs.ring() != ring.tag() || rhs.ring() != ring.tag()) {
    throw MixedRingError("ideal_sum: operands are not ideals of " + ring.label());
  }
  std::vector<Element> gens = lhs.generators();
  gens.insert(gens.end(), rhs.generators().begin(), rhs.generators().end());
  Ideal out = Ideal::generated_by(ring, gens);
  // Sum of the member sets directly, which must agree with the generated ideal.
  if (sum_mask(ring, lhs.mask(), rhs.mask()) != out.mask()) {
    throw RingError("ideal_sum: operands are not closed under ring multiplication");
  }
  return out;
}

bool ideal_contains(const Ideal& ideal, Element a) { return ideal.contains(a); }

bool is_unimodular(const Ring& ring, Element a, Element b) {
  return ring.comaximal(ring.code_of(a), ring.code_of(b));
}

std::optional<std::pair<Element, Element>> unimodular_coefficients(const Ring& ring, Element a,
                                                                   Element b) {
  const Code ac = ring.code_of(a);
  const Code bc = ring.code_of(b);
  const auto n = static_cast<Code>(ring.order());
  for (Code u = 0; u < n; ++u) {
    if (auto v = ring.divide(bc, ring.sub(ring.one_code(), ring.mul(ac, u)))) {
      return std::pair{ring.element(u), ring.element(*v)};
    }
  }
  return std::nullopt;
}

Ideal annihilator(const Ring& ring, Element a) {
  return Ideal::from_mask(ring, ring.annihilator_of(ring.code_of(a)).mask);
}

std::optional<BezoutWitness> bezout_pair(const Ring& ring, Element a, Element b) {
  const Code ac = ring.code_of(a);
  const Code bc = ring.code_of(b);
  const auto& ar = ring.multiples(ac);
  const auto& br = ring.multiples(bc);
  std::vector<bool> mask;
  if (ar.contains(bc)) {
    mask = ar.mask;
  } else if (br.contains(ac)) {
    mask = br.mask;
  } else {
    mask = sum_mask(ring, ar.mask, br.mask);
  }
  auto d = ring.principal_generator(mask);
  if (!d) return std::nullopt;
  auto a0 = ring.divide(*d, ac);
  auto b0 = ring.divide(*d, bc);
  const auto n = static_cast<Code>(ring.order());
  for (Code x = 0; x < n; ++x) {
    if (auto y = ring.divide(bc, ring.sub(*d, ring.mul(ac, x)))) {
      BezoutWitness w{ring.element(*d), ring.element(*a0), ring.element(*b0), ring.element(x),
                      ring.element(*y)};
      return w;
    }
  }
  throw std::logic_error("bezout_pair: generator found but no combination reaches it");
}

bool verify_bezout_witness(const Ring& ring, Element a, Element b, const BezoutWitness& w) {
  if (ring.mul(w.a0, w.d) != a || ring.mul(w.b0, w.d) != b) return false;
  if (ring.add(ring.mul(a, w.x), ring.mul(b, w.y)) != w.d) return false;
  return ideal_sum(ring, principal_ideal(ring, a), principal_ideal(ring, b)) ==
         principal_ideal(ring, w.d);
}

Ideal jacobson_radical(const Ring& ring) {
  const auto n = static_cast<Code>(ring.order());
  std::vector<bool> mask(n, false);
  for (Code a = 0; a < n; ++a) {
    bool inside = true;
    for (Code x = 0; x < n && inside; ++x) {
      inside = ring.is_unit(ring.add(ring.one_code(), ring.mul(a, x)));
    }
    mask[a] = inside;
  }
  return Ideal::from_mask(ring, std::move(mask));
}

}  // namespace ringrange
