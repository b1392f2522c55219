#pragma once

// Ring-level conditions decided by bounded exhaustive search.
//
// Universally quantified tuples are enumerated in ascending code order and the
// existential part is searched the same way with early exit, so every verdict
// (including its witness) is a deterministic function of the ring.

#include <array>
#include <chrono>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringrange/ring.hpp"

namespace ringrange {

enum class PropertyId {
  StableRange1,
  StableRange2,
  VnrRange1,
  ShRange1,
  RegularRange1,
  IdempotentRegularRange1,
  RegularLocal,
  VnrLocal,
  ShLocal,
  Clean,
  AlmostClean,
  PpElementwise,
  Bezout,
  Hermite,
  AdditivelyRegular,
  Indecomposable,
  Local,
};

inline constexpr std::array kAllProperties = {
    PropertyId::StableRange1,   PropertyId::StableRange2,
    PropertyId::VnrRange1,      PropertyId::ShRange1,
    PropertyId::RegularRange1,  PropertyId::IdempotentRegularRange1,
    PropertyId::RegularLocal,   PropertyId::VnrLocal,
    PropertyId::ShLocal,        PropertyId::Clean,
    PropertyId::AlmostClean,    PropertyId::PpElementwise,
    PropertyId::Bezout,         PropertyId::Hermite,
    PropertyId::AdditivelyRegular, PropertyId::Indecomposable,
    PropertyId::Local,
};

/// Stable external name, e.g. "SR1", "SH_LOCAL".
std::string_view property_name(PropertyId id);
/// One-line statement of the condition.
std::string_view property_statement(PropertyId id);
/// Accepts the external name in any case, with '-' or '_'.
std::optional<PropertyId> parse_property(std::string_view text);

/// Named element bindings, e.g. {a: 2, b: 3} for a counterexample pair.
struct Witness {
  std::vector<std::pair<std::string, Element>> bindings;

  std::optional<Element> get(std::string_view name) const;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Name/value pairs in binding order, values formatted by `ring`.
std::vector<std::pair<std::string, std::string>> format_witness(const Ring& ring,
                                                                const std::optional<Witness>& w);

struct Verdict {
  PropertyId property;
  bool holds = false;
  /// holds: one sampled instance with its existential witness (absent for
  /// properties with no existential part). fails: the first violating tuple.
  std::optional<Witness> witness;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Search exceeds a configured size cap; the caller should fall back to a
/// characterization or report the property as undecided.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DeadlineExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input does not satisfy what a construction requires.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct DecideOptions {
  std::size_t sr2_cap = 64;
  std::size_t matrix_oracle_cap = 16;
  /// Re-verify witnesses and run the matrix oracle next to decide_hermite;
  /// disagreement throws std::logic_error.
  bool cross_check = false;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

Verdict decide(PropertyId prop, const Ring& ring, const DecideOptions& options = {});

/// Hermite via the factorization route: every (a, b) is d (a1, b1) with
/// a1 R + b1 R = R.
Verdict decide_hermite(const Ring& ring, const DecideOptions& options = {});

/// Hermite straight from the matrix definition: every 1x2 and 2x1 matrix is
/// equivalent to a diagonal one. Throws CapExceeded above matrix_oracle_cap.
Verdict hermite_matrix_oracle(const Ring& ring, const DecideOptions& options = {});

struct HermiteFactorization {
  Element d;
  Element a1;
  Element b1;
};
std::optional<HermiteFactorization> hermite_factorization(const Ring& ring, Element a, Element b);

/// The existential witness for one universally quantified tuple, e.g. t with
/// a + bt a unit for SR1 and (a, b). Empty if the tuple is outside the
/// hypothesis or no witness exists.
std::optional<Witness> witness_for(PropertyId prop, const Ring& ring,
                                   std::span<const Element> tuple);

/// Re-checks a verdict's witness against the raw definition, using naive
/// searches independent of the cached subsets the deciders use.
bool reverify(const Ring& ring, const Verdict& verdict);

}  // namespace ringrange
