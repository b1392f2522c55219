#include "ringrange/element_class.hpp"

#include <vector>

namespace ringrange {

namespace {

struct ClassTable {
  std::vector<ElementClass> classes;
};

ElementClass compute_class(const Ring& r, Code a) {
  ElementClass k;
  const auto n = static_cast<Code>(r.order());
  k.is_unit = r.is_unit(a);
  k.is_regular = r.is_regular(a);
  k.is_idempotent = r.is_idempotent(a);
  for (Code x = 0; x < n; ++x) {
    if (r.mul(r.mul(a, x), a) == a) {
      k.is_vnr = true;
      k.vnr_witness = r.element(x);
      break;
    }
  }
  const auto& ann = r.annihilator_of(a).mask;
  for (Code phi : r.idempotents().members) {
    if (r.multiples(phi).mask == ann) {
      k.is_semihereditary = true;
      k.sh_witness = r.element(phi);
      break;
    }
  }
  Code power = a;
  for (Code i = 0; i <= n && !k.is_nilpotent; ++i) {
    k.is_nilpotent = power == r.zero_code();
    power = r.mul(power, a);
  }
  return k;
}

}  // namespace

const ElementClass& class_of(const Ring& ring, Code a) {
  const auto& table = ring.memo<ClassTable>([&] {
    ClassTable t;
    t.classes.reserve(ring.order());
    for (Code c = 0; c < ring.order(); ++c) t.classes.push_back(compute_class(ring, c));
    return t;
  });
  return table.classes.at(a);
}

ElementClass classify(const Ring& ring, Element a) { return class_of(ring, ring.code_of(a)); }

VnrDecomposition vnr_decompose(const Ring& ring, Element a) {
  const auto& k = classify(ring, a);
  if (!k.is_vnr) {
    throw DecompositionError(ring.format(a) + " is not von Neumann regular in " + ring.label(),
                             annihilator(ring, a));
  }
  const Element x = *k.vnr_witness;
  const Element e = ring.mul(a, x);
  const Element u = ring.add(ring.sub(ring.one(), e), a);
  if (!ring.is_idempotent(e.code) || !ring.is_unit(u.code) || ring.mul(e, u) != a) {
    throw std::logic_error("vnr_decompose: postcondition failed for " + ring.format(a));
  }
  return {x, e, u};
}

ShDecomposition sh_decompose(const Ring& ring, Element a) {
  const auto& k = classify(ring, a);
  if (!k.is_semihereditary) {
    auto ann = annihilator(ring, a);
    throw DecompositionError("ann(" + ring.format(a) + ") in " + ring.label() +
                                 " is not generated by an idempotent",
                             std::move(ann));
  }
  const Element phi = *k.sh_witness;
  const Element e = ring.sub(ring.one(), phi);
  const Element r = ring.sub(a, phi);
  const auto complement = principal_ideal(ring, ring.sub(ring.one(), e));
  if (!ring.is_idempotent(e.code) || !ring.is_regular(r.code) || ring.mul(e, r) != a ||
      !(annihilator(ring, a) == complement)) {
    throw std::logic_error("sh_decompose: postcondition failed for " + ring.format(a));
  }
  return {phi, e, r};
}

std::optional<std::pair<Element, Element>> clean_decompose(const Ring& ring, Element a) {
  const Code ac = ring.code_of(a);
  for (Code e : ring.idempotents().members) {
    const Code u = ring.sub(ac, e);
    if (ring.is_unit(u)) return std::pair{ring.element(e), ring.element(u)};
  }
  return std::nullopt;
}

std::optional<std::pair<Element, Element>> almost_clean_decompose(const Ring& ring, Element a) {
  const Code ac = ring.code_of(a);
  for (Code e : ring.idempotents().members) {
    const Code r = ring.sub(ac, e);
    if (ring.is_regular(r)) return std::pair{ring.element(e), ring.element(r)};
  }
  return std::nullopt;
}

}  // namespace ringrange
