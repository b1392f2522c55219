#pragma once

// Witness transformers: each takes a witness for one range condition and
// rewrites it into a witness for a stronger one, step for step along the
// constructive argument. Every result is checked before it is returned; a
// failed check throws std::logic_error, a violated precondition throws
// PreconditionError.

#include <utility>

#include "ringrange/properties.hpp"
#include "ringrange/ring.hpp"

namespace ringrange {

/// Given aR + bR = R and a + by von Neumann regular, returns t with a + bt a
/// unit. Writes a + by = e k (e idempotent, k unit), solves eu + bv = 1 and
/// returns t = y + (1 - e) k v.
Element witness_sr1_from_vnr(const Ring& ring, Element a, Element b, Element y);

/// Given aR + bR = R and a + by = e r semihereditary, returns s with a + bs = r
/// regular: s = y + r (1 - e) v where eu + bv = 1.
Element witness_regular_from_sh(const Ring& ring, Element a, Element b, Element y);

/// Given aR + bR = R, returns (e, s) with e idempotent and s = a + be regular.
/// If a = f r is semihereditary, e = 1 - f. Otherwise a + b must be
/// semihereditary (as in a semihereditary local ring), a + b = f r, and e = f.
std::pair<Element, Element> witness_idem_reg_from_pp(const Ring& ring, Element a, Element b);

/// Given b regular and a Bezout witness for (a, b), returns u with a + ub
/// regular: a = a0 d, b = b0 d, and u is the first t with a0 + b0 t regular.
Element witness_additively_regular(const Ring& ring, Element a, Element b);

}  // namespace ringrange
