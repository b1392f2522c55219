#pragma once

// The classical ring of quotients Q(R) of a finite ring: fractions a/s with s
// regular, compared by cross multiplication. Fractions are never reduced
// implicitly.

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ringrange/properties.hpp"
#include "ringrange/ring.hpp"

namespace ringrange {

struct Fraction {
  Element num;
  Element den;
};

/// (num, den) generates a non-principal ideal, so the fraction has no reduced
/// form.
class NotBezout : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class QRing {
 public:
  static QRing build(Ring::Ptr base);

  const Ring& base() const { return *base_; }
  const Ring::Ptr& base_ptr() const { return base_; }

  /// Throws PreconditionError unless den is regular.
  Fraction make(Element num, Element den) const;
  /// a -> a/1.
  Fraction embed(Element a) const;

  bool equal(const Fraction& lhs, const Fraction& rhs) const;
  Fraction add(const Fraction& lhs, const Fraction& rhs) const;
  Fraction sub(const Fraction& lhs, const Fraction& rhs) const;
  Fraction mul(const Fraction& lhs, const Fraction& rhs) const;
  Fraction neg(const Fraction& f) const;
  Fraction zero() const { return embed(base_->zero()); }
  Fraction one() const { return embed(base_->one()); }

  /// a/s is invertible iff a is regular.
  bool is_unit(const Fraction& f) const;
  bool is_idempotent(const Fraction& f) const;

  /// One fraction per class, the first met in (den, num) ascending order with
  /// den ranging over the regulars.
  const std::vector<Fraction>& representatives() const { return reps_; }
  /// Position of f's class in representatives().
  std::size_t index_of(const Fraction& f) const;
  std::string format(const Fraction& f) const;

  /// Q(R) as a table ring over the representatives, in the same order.
  Ring::Ptr as_ring() const;

 private:
  explicit QRing(Ring::Ptr base) : base_(std::move(base)) {}
  void require_own(const Fraction& f) const;

  Ring::Ptr base_;
  std::vector<Fraction> reps_;
  // Equal fractions have numerators with equal annihilators.
  std::unordered_map<std::vector<bool>, std::vector<std::size_t>> buckets_;
};

/// e/s -> e0/s0 with e = e0 d, s = s0 d and e0 R + s0 R = R.
Fraction frac_reduce(const QRing& q, const Fraction& f);

/// The element of R whose image is the idempotent fraction f: reduce to e0/s0,
/// solve e0 u + s0 v = 1, then e0/s0 = e0 (u + v)/1.
Element idempotent_descent(const QRing& q, const Fraction& f);

/// Injective and surjective check of a -> a/1, straight from frac_eq.
bool embedding_is_bijective(const QRing& q);

struct QCheck {
  std::string name;
  std::string status;  // "pass", "fail", "not-applicable"
  std::string detail;
  /// Formatted bindings of the first failing instance.
  std::vector<std::pair<std::string, std::string>> witness;
};

struct QCheckReport {
  std::string ring;
  std::vector<QCheck> checks;

  bool passed() const;
};

QCheckReport check_q_theorems(const Ring::Ptr& ring, const DecideOptions& options = {});

}  // namespace ringrange
