#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ringrange/ring.hpp"

namespace ringrange {

/// A finitely generated ideal held as an explicit member set.
class Ideal {
 public:
  RingTag ring() const { return ring_; }
  const std::vector<Element>& generators() const { return generators_; }
  /// Ascending by code.
  const std::vector<Element>& members() const { return members_; }
  const std::vector<bool>& mask() const { return mask_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Element e) const;
  bool is_whole_ring() const { return members_.size() == mask_.size(); }

  /// Equality of member sets; generators are not compared.
  friend bool operator==(const Ideal& lhs, const Ideal& rhs) {
    return lhs.ring_ == rhs.ring_ && lhs.mask_ == rhs.mask_;
  }

  /// Wraps a member mask that is already known to be an ideal; generators are
  /// recovered greedily in ascending code order.
  static Ideal from_mask(const Ring& ring, std::vector<bool> mask);
  /// The ideal generated by `gens` (the zero ideal when empty).
  static Ideal generated_by(const Ring& ring, std::span<const Element> gens);

 private:
  RingTag ring_ = 0;
  std::vector<Element> generators_;
  std::vector<Element> members_;
  std::vector<bool> mask_;
};

/// (d, a0, b0, x, y) with a = a0 d, b = b0 d, a x + b y = d.
struct BezoutWitness {
  Element d;
  Element a0;
  Element b0;
  Element x;
  Element y;
};

/// Mask of {x + y : x in lhs, y in rhs} for two member masks.
std::vector<bool> sum_mask(const Ring& ring, const std::vector<bool>& lhs,
                           const std::vector<bool>& rhs);

Ideal principal_ideal(const Ring& ring, Element a);
Ideal ideal_sum(const Ring& ring, const Ideal& lhs, const Ideal& rhs);
bool ideal_contains(const Ideal& ideal, Element a);

/// True iff au + bv = 1 for some u, v.
bool is_unimodular(const Ring& ring, Element a, Element b);
/// First (u, v) in ascending order with au + bv = 1.
std::optional<std::pair<Element, Element>> unimodular_coefficients(const Ring& ring, Element a,
                                                                   Element b);

Ideal annihilator(const Ring& ring, Element a);

/// Picks the smallest-code d with aR + bR = dR, then the smallest a0, b0 and
/// the lexicographically smallest (x, y). Empty iff aR + bR is not principal.
std::optional<BezoutWitness> bezout_pair(const Ring& ring, Element a, Element b);

/// Checks the four defining equations of a Bezout witness for (a, b).
bool verify_bezout_witness(const Ring& ring, Element a, Element b, const BezoutWitness& w);

/// {a : 1 + ax is a unit for every x}.
Ideal jacobson_radical(const Ring& ring);

}  // namespace ringrange
