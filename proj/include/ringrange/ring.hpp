#pragma once

// Finite commutative rings with identity, realized as dense Cayley tables.
//
// Every element of a realized ring is identified by a canonical code in
// [0, order). Codes are mixed-radix over the leaf factors of the ring: the
// first factor of a product is the most significant digit, and a polynomial
// residue c0 + c1 x + ... has c0 as its least significant digit. All witness
// searches in the library iterate codes in ascending order.

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <typeindex>
#include <unordered_map>
#include <variant>
#include <vector>

namespace ringrange {

using Code = std::uint32_t;
using RingTag = std::uint64_t;

/// Largest order the dense-table realization accepts.
inline constexpr std::uint64_t kMaxRealizableOrder = 2048;

class RingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation receives elements of two different rings.
class MixedRingError : public RingError {
 public:
  using RingError::RingError;
};

/// A construction recipe for a finite commutative ring.
struct RingSpec {
  struct Modular {
    std::uint32_t n = 0;
  };
  struct Product {
    std::vector<RingSpec> factors;
  };
  /// Z_n[x]/(f) with f monic; `modulus` holds f's coefficients, lowest degree
  /// first, so modulus.size() == deg f + 1.
  struct PolyQuotient {
    std::uint32_t n = 0;
    std::vector<std::uint32_t> modulus;
  };

  std::variant<Modular, Product, PolyQuotient> term;

  static RingSpec modular(std::uint32_t n);
  /// Nested products are flattened.
  static RingSpec product(std::vector<RingSpec> factors);
  static RingSpec poly_quotient(std::uint32_t n, std::vector<std::uint32_t> modulus);

  /// Parses "Z36", "Z4 x Z9", "Z4[x]/(x^2)", "Z2[x]/(x^2+x+1) x Z3".
  static RingSpec parse(std::string_view text);

  /// Throws RingError unless every invariant holds.
  void validate() const;
  std::uint64_t order() const;
  std::string to_string() const;

  friend bool operator==(const RingSpec& lhs, const RingSpec& rhs);
};

bool operator==(const RingSpec::Modular& lhs, const RingSpec::Modular& rhs);
bool operator==(const RingSpec::Product& lhs, const RingSpec::Product& rhs);
bool operator==(const RingSpec::PolyQuotient& lhs, const RingSpec::PolyQuotient& rhs);

/// One member of a realized ring: the owning ring's tag plus a canonical code.
struct Element {
  RingTag ring = 0;
  Code code = 0;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

/// A subset of the carrier kept both as an ascending code list and a mask.
struct Subset {
  std::vector<Code> members;
  std::vector<bool> mask;

  bool contains(Code c) const { return c < mask.size() && mask[c]; }
  std::size_t size() const { return members.size(); }
};

class Ring {
 public:
  using Ptr = std::shared_ptr<const Ring>;

  static Ptr realize(const RingSpec& spec);
  static Ptr realize(std::string_view spec_text);

  /// A ring given directly by Cayley tables over codes 0..n-1. The tables are
  /// trusted; callers that build them from another structure should verify the
  /// axioms with check_ring_axioms.
  static Ptr from_tables(std::string label, std::size_t order, std::vector<Code> add,
                         std::vector<Code> mul, Code zero, Code one,
                         std::vector<std::string> names);

  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;
  ~Ring();

  RingTag tag() const { return tag_; }
  std::size_t order() const { return n_; }
  const std::string& label() const { return label_; }
  /// Null for table-built rings.
  const RingSpec* spec() const { return spec_ ? &*spec_ : nullptr; }

  Element zero() const { return {tag_, zero_}; }
  Element one() const { return {tag_, one_}; }
  Code zero_code() const { return zero_; }
  Code one_code() const { return one_; }
  Element element(Code code) const;
  std::vector<Element> elements() const;
  std::vector<Element> to_elements(std::span<const Code> codes) const;
  bool owns(Element e) const { return e.ring == tag_ && e.code < n_; }
  /// Returns e.code; throws MixedRingError if e belongs to another ring.
  Code code_of(Element e) const;

  // Checked arithmetic on elements.
  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element mul(Element a, Element b) const;
  Element neg(Element a) const;

  // Unchecked arithmetic on codes.
  Code add(Code a, Code b) const { return add_[index(a, b)]; }
  Code mul(Code a, Code b) const { return mul_[index(a, b)]; }
  Code neg(Code a) const { return neg_[a]; }
  Code sub(Code a, Code b) const { return add(a, neg(b)); }

  std::string format(Code c) const { return names_[c]; }
  std::string format(Element e) const { return names_[code_of(e)]; }
  Element parse_element(std::string_view text) const;

  const Subset& units() const;
  const Subset& idempotents() const;
  const Subset& regulars() const;
  bool is_unit(Code c) const { return units().contains(c); }
  bool is_regular(Code c) const { return regulars().contains(c); }
  bool is_idempotent(Code c) const { return idempotents().contains(c); }
  /// Throws RingError if c is not a unit.
  Code inverse(Code c) const;

  /// aR as an ascending code list and a mask.
  const Subset& multiples(Code a) const;
  /// {x : xa = 0}.
  const Subset& annihilator_of(Code a) const;
  /// Smallest q with d*q == target, if any.
  std::optional<Code> divide(Code d, Code target) const;
  /// True iff 1 is in aR + bR.
  bool comaximal(Code a, Code b) const;
  /// Smallest d with dR equal to the ideal given by `mask`, if principal.
  std::optional<Code> principal_generator(const std::vector<bool>& mask) const;

  /// Per-ring memo slot: `make` runs at most once per T, concurrent callers
  /// block until it finishes and then all see the same value.
  template <class T>
  const T& memo(const std::function<T()>& make) const {
    auto slot = memo_slot(std::type_index(typeid(T)));
    std::call_once(slot->once, [&] { slot->value = std::make_shared<T>(make()); });
    return *static_cast<const T*>(slot->value.get());
  }

 private:
  struct Leaf;
  struct Caches;
  struct MemoSlot {
    std::once_flag once;
    std::shared_ptr<void> value;
  };

  Ring();
  std::size_t index(Code a, Code b) const { return static_cast<std::size_t>(a) * n_ + b; }
  std::shared_ptr<MemoSlot> memo_slot(std::type_index key) const;

  RingTag tag_ = 0;
  std::size_t n_ = 0;
  std::string label_;
  std::optional<RingSpec> spec_;
  std::vector<Leaf> leaves_;
  std::vector<Code> add_;
  std::vector<Code> mul_;
  std::vector<Code> neg_;
  std::vector<std::string> names_;
  Code zero_ = 0;
  Code one_ = 0;

  std::unique_ptr<Caches> caches_;
  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<std::type_index, std::shared_ptr<MemoSlot>> memo_;
};

/// Exhaustively checks associativity, commutativity, distributivity, and the
/// identities. Returns a description of the first failure, if any.
std::optional<std::string> check_ring_axioms(const Ring& ring);

struct SpecialSubsets {
  std::vector<Element> units;
  std::vector<Element> idempotents;
  std::vector<Element> regulars;
};

SpecialSubsets special_subsets(const Ring& ring);

}  // namespace ringrange
