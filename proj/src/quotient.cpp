#include "ringrange/quotient.hpp"

#include <algorithm>

#include "ringrange/element_class.hpp"
#include "ringrange/ideal.hpp"

namespace ringrange {

QRing QRing::build(Ring::Ptr base) {
  QRing q(std::move(base));
  const Ring& r = *q.base_;
  for (Code s : r.regulars().members) {
    for (Code a = 0; a < r.order(); ++a) {
      const Fraction f{r.element(a), r.element(s)};
      auto& bucket = q.buckets_[r.annihilator_of(a).mask];
      const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                    [&](std::size_t i) { return q.equal(q.reps_[i], f); });
      if (!seen) {
        bucket.push_back(q.reps_.size());
        q.reps_.push_back(f);
      }
    }
  }
  return q;
}

void QRing::require_own(const Fraction& f) const {
  if (!base_->owns(f.num) || !base_->owns(f.den)) {
    throw MixedRingError("fraction does not belong to Q(" + base_->label() + ")");
  }
  if (!base_->is_regular(f.den.code)) {
    throw PreconditionError("denominator " + base_->format(f.den) + " is not regular");
  }
}

Fraction QRing::make(Element num, Element den) const {
  Fraction f{num, den};
  require_own(f);
  return f;
}

Fraction QRing::embed(Element a) const { return make(a, base_->one()); }

bool QRing::equal(const Fraction& lhs, const Fraction& rhs) const {
  const Ring& r = *base_;
  return r.mul(lhs.num.code, rhs.den.code) == r.mul(rhs.num.code, lhs.den.code);
}

Fraction QRing::add(const Fraction& lhs, const Fraction& rhs) const {
  require_own(lhs);
  require_own(rhs);
  const Ring& r = *base_;
  return {r.add(r.mul(lhs.num, rhs.den), r.mul(rhs.num, lhs.den)), r.mul(lhs.den, rhs.den)};
}

Fraction QRing::sub(const Fraction& lhs, const Fraction& rhs) const { return add(lhs, neg(rhs)); }

Fraction QRing::mul(const Fraction& lhs, const Fraction& rhs) const {
  require_own(lhs);
  require_own(rhs);
  const Ring& r = *base_;
  return {r.mul(lhs.num, rhs.num), r.mul(lhs.den, rhs.den)};
}

Fraction QRing::neg(const Fraction& f) const {
  require_own(f);
  return {base_->neg(f.num), f.den};
}

bool QRing::is_unit(const Fraction& f) const {
  require_own(f);
  return base_->is_regular(f.num.code);
}

bool QRing::is_idempotent(const Fraction& f) const { return equal(mul(f, f), f); }

std::size_t QRing::index_of(const Fraction& f) const {
  require_own(f);
  auto it = buckets_.find(base_->annihilator_of(f.num.code).mask);
  if (it != buckets_.end()) {
    for (std::size_t i : it->second) {
      if (equal(reps_[i], f)) return i;
    }
  }
  throw std::logic_error("fraction " + format(f) + " matches no representative");
}

std::string QRing::format(const Fraction& f) const {
  if (f.den == base_->one()) return base_->format(f.num);
  return base_->format(f.num) + "/" + base_->format(f.den);
}

Ring::Ptr QRing::as_ring() const {
  const std::size_t n = reps_.size();
  std::vector<Code> add_table(n * n);
  std::vector<Code> mul_table(n * n);
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(format(reps_[i]));
    for (std::size_t j = 0; j < n; ++j) {
      add_table[i * n + j] = static_cast<Code>(index_of(add(reps_[i], reps_[j])));
      mul_table[i * n + j] = static_cast<Code>(index_of(mul(reps_[i], reps_[j])));
    }
  }
  return Ring::from_tables("Q(" + base_->label() + ")", n, std::move(add_table),
                           std::move(mul_table), static_cast<Code>(index_of(zero())),
                           static_cast<Code>(index_of(one())), std::move(names));
}

Fraction frac_reduce(const QRing& q, const Fraction& f) {
  const Ring& r = q.base();
  const Fraction checked = q.make(f.num, f.den);
  const auto w = bezout_pair(r, checked.num, checked.den);
  if (!w) {
    throw NotBezout(q.format(f) + ": " + r.format(f.num) + "R + " + r.format(f.den) +
                    "R is not principal");
  }
  // d divides the regular den, so d and s0 are regular too.
  const Fraction reduced = q.make(w->a0, w->b0);
  if (!q.equal(reduced, f) || !is_unimodular(r, reduced.num, reduced.den)) {
    throw std::logic_error("frac_reduce: " + q.format(reduced) + " is not a reduced form of " +
                           q.format(f));
  }
  return reduced;
}

Element idempotent_descent(const QRing& q, const Fraction& f) {
  if (!q.is_idempotent(f)) {
    throw PreconditionError(q.format(f) + " is not idempotent in Q(" + q.base().label() + ")");
  }
  const Ring& r = q.base();
  const Fraction reduced = frac_reduce(q, f);
  const auto uv = unimodular_coefficients(r, reduced.num, reduced.den);
  if (!uv) throw std::logic_error("idempotent_descent: reduced fraction is not unimodular");
  // e0^2 = e0 s0, so e0 = e0^2 u + e0 s0 v = s0 e0 (u + v).
  const Element c = r.mul(reduced.num, r.add(uv->first, uv->second));
  if (!r.is_idempotent(c.code) || !q.equal(q.embed(c), f)) {
    throw std::logic_error("idempotent_descent: " + r.format(c) + " does not represent " +
                           q.format(f));
  }
  return c;
}

bool embedding_is_bijective(const QRing& q) {
  const Ring& r = q.base();
  for (Code a = 0; a < r.order(); ++a) {
    for (Code b = a + 1; b < r.order(); ++b) {
      if (q.equal(q.embed(r.element(a)), q.embed(r.element(b)))) return false;
    }
  }
  for (const Fraction& f : q.representatives()) {
    bool hit = false;
    for (Code a = 0; a < r.order() && !hit; ++a) hit = q.equal(q.embed(r.element(a)), f);
    if (!hit) return false;
  }
  return true;
}

bool QCheckReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const QCheck& c) { return c.status == "fail"; });
}

namespace {

std::string truth(bool b) { return b ? "true" : "false"; }

}  // namespace

QCheckReport check_q_theorems(const Ring::Ptr& ring, const DecideOptions& options) {
  const Ring& r = *ring;
  const QRing q = QRing::build(ring);
  const Ring::Ptr qr = q.as_ring();
  QCheckReport report{r.label(), {}};

  const bool bezout = decide(PropertyId::Bezout, r, options).holds;
  const bool reg1 = decide(PropertyId::RegularRange1, r, options).holds;

  // Both sides are always computed; outside the hypothesis a failure is
  // reported as not-applicable rather than fail.
  {
    const Verdict v = decide(PropertyId::StableRange1, *qr, options);
    const bool applies = bezout && reg1;
    QCheck c{"sr1-of-q", v.holds ? "pass" : applies ? "fail" : "not-applicable",
             "BEZOUT=" + truth(bezout) + " REG_RANGE1=" + truth(reg1) +
                 " SR1(Q)=" + truth(v.holds),
             {}};
    if (!v.holds) c.witness = format_witness(*qr, v.witness);
    report.checks.push_back(std::move(c));
  }

  {
    const Verdict lhs = decide(PropertyId::VnrLocal, *qr, options);
    const Verdict rhs = decide(PropertyId::ShLocal, r, options);
    const bool agree = lhs.holds == rhs.holds;
    QCheck c{"vnr-local-q-iff-sh-local", agree ? "pass" : bezout ? "fail" : "not-applicable",
             "BEZOUT=" + truth(bezout) + " VNR_LOCAL(Q)=" + truth(lhs.holds) +
                 " SH_LOCAL=" + truth(rhs.holds),
             {}};
    if (!agree) {
      c.witness = lhs.holds ? format_witness(r, rhs.witness) : format_witness(*qr, lhs.witness);
    }
    report.checks.push_back(std::move(c));
  }

  {
    QCheck c{"idempotent-descent", "pass", "", {}};
    std::size_t descended = 0;
    for (Code s : r.regulars().members) {
      for (Code a = 0; a < r.order() && c.status == "pass"; ++a) {
        const Fraction f{r.element(a), r.element(s)};
        if (!q.is_idempotent(f)) continue;
        try {
          idempotent_descent(q, f);
          ++descended;
        } catch (const std::exception& e) {
          c.status = "fail";
          c.detail = e.what();
          c.witness = {{"num", r.format(a)}, {"den", r.format(s)}};
        }
      }
    }
    if (c.status == "pass") c.detail = std::to_string(descended) + " idempotent fractions descended";
    report.checks.push_back(std::move(c));
  }

  {
    const bool bijective = embedding_is_bijective(q);
    report.checks.push_back({"embedding-bijective", bijective ? "pass" : "fail",
                             std::to_string(r.order()) + " elements, " +
                                 std::to_string(q.representatives().size()) + " classes",
                             {}});
  }

  {
    QCheck c{"vnr-lift", "pass", "", {}};
    std::size_t lifted = 0;
    for (Code a = 0; a < qr->order() && c.status == "pass"; ++a) {
      const Element x = qr->element(a);
      if (!class_of(*qr, a).is_vnr) continue;
      const auto d = vnr_decompose(*qr, x);
      if (!qr->is_idempotent(d.e.code) || !qr->is_unit(d.u.code) || qr->mul(d.e, d.u) != x) {
        c.status = "fail";
        c.witness = {{"a", qr->format(x)}, {"e", qr->format(d.e)}, {"u", qr->format(d.u)}};
      } else {
        ++lifted;
      }
    }
    c.detail = std::to_string(lifted) + " von Neumann regular fractions split as e u";
    report.checks.push_back(std::move(c));
  }

  return report;
}

}  // namespace ringrange
