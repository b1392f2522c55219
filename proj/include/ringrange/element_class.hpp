#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "ringrange/ideal.hpp"
#include "ringrange/ring.hpp"

namespace ringrange {

struct ElementClass {
  bool is_unit = false;
  bool is_regular = false;
  bool is_idempotent = false;
  bool is_vnr = false;  // axa = a for some x
  bool is_semihereditary = false;  // ann(a) = phi R with phi idempotent
  bool is_nilpotent = false;  // diagnostic only
  std::optional<Element> vnr_witness;  // first x with axa = a
  std::optional<Element> sh_witness;  // the idempotent phi
};

/// Raised when an element lacks the structure a decomposition needs. Carries
/// the element's annihilator as evidence.
class DecompositionError : public std::domain_error {
 public:
  DecompositionError(const std::string& what, Ideal annihilator)
      : std::domain_error(what), annihilator_(std::move(annihilator)) {}
  const Ideal& annihilator() const { return annihilator_; }

 private:
  Ideal annihilator_;
};

ElementClass classify(const Ring& ring, Element a);

/// Code-level access to the per-ring classification table (computed once).
const ElementClass& class_of(const Ring& ring, Code a);

/// a = e u with e = ax idempotent and u = (1 - e) + a a unit.
struct VnrDecomposition {
  Element x;
  Element e;
  Element u;
};
VnrDecomposition vnr_decompose(const Ring& ring, Element a);

/// a = e r with phi the idempotent generating ann(a), e = 1 - phi, r = a - phi.
struct ShDecomposition {
  Element phi;
  Element e;
  Element r;
};
ShDecomposition sh_decompose(const Ring& ring, Element a);

/// First (e, u) with e idempotent (ascending), u = a - e a unit.
std::optional<std::pair<Element, Element>> clean_decompose(const Ring& ring, Element a);
/// First (e, r) with e idempotent (ascending), r = a - e regular.
std::optional<std::pair<Element, Element>> almost_clean_decompose(const Ring& ring, Element a);

}  // namespace ringrange
