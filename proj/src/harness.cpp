#include "ringrange/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <thread>

namespace ringrange {

void CorpusConfig::validate() const {
  if (max_modular_n < 2) throw std::invalid_argument("max_modular_n must be at least 2");
  if (product_order_cap == 0 || sr2_cap == 0 || matrix_oracle_cap == 0) {
    throw std::invalid_argument("corpus caps must be positive");
  }
  if (ring_timeout.count() <= 0) throw std::invalid_argument("ring_timeout must be positive");
  if (max_order && *max_order == 0) throw std::invalid_argument("max_order must be positive");
  for (auto n : poly_bases) {
    if (n < 2) throw std::invalid_argument("polynomial bases must be Z_n with n >= 2");
  }
}

DecideOptions CorpusConfig::decide_options() const {
  DecideOptions opt;
  opt.sr2_cap = sr2_cap;
  opt.matrix_oracle_cap = matrix_oracle_cap;
  return opt;
}

std::vector<RingSpec> corpus_specs(const CorpusConfig& cfg) {
  cfg.validate();
  std::vector<RingSpec> out;
  std::set<std::string> seen;
  auto keep = [&](RingSpec spec) {
    if (spec.order() > kMaxRealizableOrder) return;
    if (cfg.max_order && spec.order() > *cfg.max_order) return;
    if (seen.insert(spec.to_string()).second) out.push_back(std::move(spec));
  };

  for (std::uint32_t n = 2; n <= cfg.max_modular_n; ++n) keep(RingSpec::modular(n));
  for (std::uint64_t m = 2; m * m <= cfg.product_order_cap; ++m) {
    for (std::uint64_t n = m; m * n <= cfg.product_order_cap; ++n) {
      keep(RingSpec::product({RingSpec::modular(static_cast<std::uint32_t>(m)),
                              RingSpec::modular(static_cast<std::uint32_t>(n))}));
    }
  }
  for (std::uint32_t n : cfg.poly_bases) {
    for (std::uint32_t d = 1; d <= cfg.poly_degree_cap; ++d) {
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < d; ++i) count *= n;
      if (count > kMaxRealizableOrder) break;
      for (std::uint64_t k = 0; k < count; ++k) {
        std::vector<std::uint32_t> modulus(d + 1, 1);
        std::uint64_t rest = k;
        for (std::uint32_t i = 0; i < d; ++i, rest /= n) {
          modulus[i] = static_cast<std::uint32_t>(rest % n);
        }
        keep(RingSpec::poly_quotient(n, std::move(modulus)));
      }
    }
  }
  return out;
}

std::vector<Ring::Ptr> generate_corpus(const CorpusConfig& cfg) {
  std::vector<Ring::Ptr> rings;
  for (const auto& spec : corpus_specs(cfg)) rings.push_back(Ring::realize(spec));
  return rings;
}

std::string_view status_name(DecideStatus s) {
  switch (s) {
    case DecideStatus::Decided:
      return "decided";
    case DecideStatus::Undecided:
      return "undecided-by-search";
    case DecideStatus::Timeout:
      return "timeout";
  }
  return "unknown";
}

std::optional<bool> PropertyVector::holds(PropertyId id) const {
  const auto& e = entry(id);
  if (e.status != DecideStatus::Decided) return std::nullopt;
  return e.verdict->holds;
}

namespace {

PropertyEntry decide_entry(PropertyId id, const Ring& ring, const DecideOptions& opt) {
  PropertyEntry entry;
  try {
    entry.verdict = decide(id, ring, opt);
  } catch (const CapExceeded& e) {
    entry.status = DecideStatus::Undecided;
    entry.note = e.what();
  } catch (const DeadlineExceeded& e) {
    entry.status = DecideStatus::Timeout;
    entry.note = e.what();
  }
  return entry;
}

}  // namespace

PropertyVector property_vector(const Ring::Ptr& ring, const CorpusConfig& cfg) {
  DecideOptions opt = cfg.decide_options();
  opt.deadline = std::chrono::steady_clock::now() + cfg.ring_timeout;

  PropertyVector pv;
  pv.ring = ring;
  pv.spec = ring->label();
  pv.order = ring->order();
  pv.units = ring->units().size();
  pv.idempotents = ring->idempotents().size();
  pv.regulars = ring->regulars().size();
  for (PropertyId id : kAllProperties) pv.entries.push_back(decide_entry(id, *ring, opt));

  const Ring::Ptr q = QRing::build(ring).as_ring();
  pv.q_sr1 = decide_entry(PropertyId::StableRange1, *q, opt);
  pv.q_vnr_local = decide_entry(PropertyId::VnrLocal, *q, opt);
  // Q(R) witnesses name fractions; keep them readable after q is gone.
  for (PropertyEntry* e : {&pv.q_sr1, &pv.q_vnr_local}) {
    if (e->verdict && e->verdict->witness) {
      for (const auto& [name, value] : format_witness(*q, e->verdict->witness)) {
        e->note += (e->note.empty() ? "" : ", ") + name + "=" + value;
      }
      e->verdict->witness.reset();
    }
  }
  return pv;
}

const std::vector<ImplicationRule>& implication_rules() {
  using P = PropertyId;
  static const std::vector<ImplicationRule> rules = {
      {"R1", "SR1 <=> VNR_RANGE1", {}, {{P::StableRange1}}, {{P::VnrRange1}}, true, false},
      {"R2", "REG_RANGE1 <=> SH_RANGE1", {}, {{P::RegularRange1}}, {{P::ShRange1}}, true, false},
      {"R3", "SH_LOCAL => SH_RANGE1", {}, {{P::ShLocal}}, {{P::ShRange1}}},
      {"R4", "REG_LOCAL => IDEM_REG_RANGE1", {}, {{P::RegularLocal}},
       {{P::IdempotentRegularRange1}}},
      {"R5", "PP_ELEMENTWISE => IDEM_REG_RANGE1", {}, {{P::PpElementwise}},
       {{P::IdempotentRegularRange1}}},
      {"R6", "IDEM_REG_RANGE1 => ALMOST_CLEAN", {}, {{P::IdempotentRegularRange1}},
       {{P::AlmostClean}}},
      {"R7", "INDECOMPOSABLE and ALMOST_CLEAN <=> REG_LOCAL", {},
       {{P::Indecomposable}, {P::AlmostClean}}, {{P::RegularLocal}}, true},
      {"R8", "INDECOMPOSABLE and ALMOST_CLEAN and BEZOUT => HERMITE", {},
       {{P::Indecomposable}, {P::AlmostClean}, {P::Bezout}}, {{P::Hermite}}},
      {"R9", "SH_LOCAL => IDEM_REG_RANGE1", {}, {{P::ShLocal}}, {{P::IdempotentRegularRange1}}},
      {"R10", "REG_LOCAL and BEZOUT => SR2", {}, {{P::RegularLocal}, {P::Bezout}},
       {{P::StableRange2}}},
      {"R11", "BEZOUT => (HERMITE <=> SR2)", {{P::Bezout}}, {{P::Hermite}},
       {{P::StableRange2}}, true},
      {"R12", "BEZOUT and REG_RANGE1 => SR1 of Q(R)", {}, {{P::Bezout}, {P::RegularRange1}},
       {{P::StableRange1, true}}},
      {"R13", "BEZOUT => (SH_LOCAL <=> VNR_LOCAL of Q(R))", {{P::Bezout}}, {{P::ShLocal}},
       {{P::VnrLocal, true}}, true},
      {"R14", "BEZOUT and REG_RANGE1 => ADD_REGULAR", {}, {{P::Bezout}, {P::RegularRange1}},
       {{P::AdditivelyRegular}}},
      {"R15", "VNR_LOCAL => SH_LOCAL", {}, {{P::VnrLocal}}, {{P::ShLocal}}},
      {"R16", "CLEAN => IDEM_REG_RANGE1", {}, {{P::Clean}}, {{P::IdempotentRegularRange1}}},
      {"R17a", "SR1 => REG_RANGE1", {}, {{P::StableRange1}}, {{P::RegularRange1}}},
      {"R17b", "IDEM_REG_RANGE1 => REG_RANGE1", {}, {{P::IdempotentRegularRange1}},
       {{P::RegularRange1}}},
  };
  return rules;
}

std::string_view rule_status_name(RuleStatus s) {
  switch (s) {
    case RuleStatus::Pass:
      return "pass";
    case RuleStatus::NotApplicable:
      return "not-applicable";
    case RuleStatus::Skipped:
      return "skipped";
    case RuleStatus::Violation:
      return "violation";
  }
  return "unknown";
}

namespace {

enum class Tri { False, True, Unknown };

const PropertyEntry& atom_entry(const PropertyVector& pv, Atom a) {
  if (!a.over_q) return pv.entry(a.id);
  if (a.id == PropertyId::StableRange1) return pv.q_sr1;
  if (a.id == PropertyId::VnrLocal) return pv.q_vnr_local;
  throw std::logic_error("no Q(R) entry for " + std::string(property_name(a.id)));
}

std::string atom_name(Atom a) {
  return (a.over_q ? "Q:" : "") + std::string(property_name(a.id));
}

Tri conj(const PropertyVector& pv, const std::vector<Atom>& atoms) {
  bool unknown = false;
  for (Atom a : atoms) {
    const auto& e = atom_entry(pv, a);
    if (e.status != DecideStatus::Decided) {
      unknown = true;
    } else if (!e.verdict->holds) {
      return Tri::False;
    }
  }
  return unknown ? Tri::Unknown : Tri::True;
}

void collect_witness(const PropertyVector& pv, const std::vector<Atom>& atoms,
                     RuleOutcome& out) {
  for (Atom a : atoms) {
    const auto& e = atom_entry(pv, a);
    if (!e.verdict) continue;
    if (a.over_q) {
      if (!e.note.empty()) out.witness.emplace_back(atom_name(a), e.note);
      continue;
    }
    for (const auto& [name, value] : format_witness(*pv.ring, e.verdict->witness)) {
      out.witness.emplace_back(atom_name(a) + "." + name, value);
    }
  }
}

std::string undecided_atoms(const PropertyVector& pv, const ImplicationRule& rule) {
  std::string out;
  for (const auto* list : {&rule.context, &rule.hypothesis, &rule.conclusion}) {
    for (Atom a : *list) {
      const auto& e = atom_entry(pv, a);
      if (e.status == DecideStatus::Decided) continue;
      out += (out.empty() ? "" : ", ") + atom_name(a) + " " + std::string(status_name(e.status));
    }
  }
  return out;
}

}  // namespace

RuleOutcome evaluate_rule(const ImplicationRule& rule, const PropertyVector& pv) {
  RuleOutcome out{rule.id, pv.spec, RuleStatus::Pass, "", {}};
  const Tri ctx = conj(pv, rule.context);
  const Tri lhs = conj(pv, rule.hypothesis);
  const Tri rhs = conj(pv, rule.conclusion);

  if (ctx == Tri::False) {
    out.status = RuleStatus::NotApplicable;
    out.note = "context false";
    return out;
  }
  if (!rule.equivalence && lhs == Tri::False) {
    out.status = RuleStatus::NotApplicable;
    out.note = "hypothesis false";
    return out;
  }
  if (ctx == Tri::Unknown || lhs == Tri::Unknown || rhs == Tri::Unknown) {
    out.status = RuleStatus::Skipped;
    out.note = undecided_atoms(pv, rule);
    return out;
  }
  if (rule.equivalence) {
    if (lhs != rhs) {
      out.status = RuleStatus::Violation;
      out.note = lhs == Tri::True ? "left side holds, right side fails"
                                  : "right side holds, left side fails";
    } else {
      out.note = lhs == Tri::True ? "both sides hold" : "both sides fail";
    }
  } else if (rhs == Tri::False) {
    out.status = RuleStatus::Violation;
    out.note = "hypothesis holds, conclusion fails";
  }
  if (out.status == RuleStatus::Violation) {
    collect_witness(pv, rule.context, out);
    collect_witness(pv, rule.hypothesis, out);
    collect_witness(pv, rule.conclusion, out);
  } else if (!rule.separated_on_finite) {
    out.note += out.note.empty() ? "consistent, not separated" : "; consistent, not separated";
  }
  return out;
}

std::vector<RuleOutcome> assert_implications(const std::vector<PropertyVector>& vectors) {
  std::vector<RuleOutcome> out;
  for (const auto& pv : vectors) {
    for (const auto& rule : implication_rules()) out.push_back(evaluate_rule(rule, pv));
  }
  return out;
}

OpenQuestionReport mine_open_question(const std::vector<PropertyVector>& vectors) {
  OpenQuestionReport report;
  report.question = "ALMOST_CLEAN => IDEM_REG_RANGE1 for every commutative ring?";
  report.rationale =
      "Every finite commutative ring is clean, and clean rings have idempotent regular range 1, "
      "so no finite ring can be a counterexample. An empty list is a consistency check on the "
      "deciders; it says nothing about infinite rings.";
  for (const auto& pv : vectors) {
    const auto ac = pv.holds(PropertyId::AlmostClean);
    const auto irr = pv.holds(PropertyId::IdempotentRegularRange1);
    if (ac && irr && *ac && !*irr) report.counterexamples.push_back(pv.spec);
  }
  return report;
}

std::size_t CorpusReport::violations() const {
  return static_cast<std::size_t>(
      std::count_if(implications.begin(), implications.end(),
                    [](const RuleOutcome& o) { return o.status == RuleStatus::Violation; }));
}

std::size_t CorpusReport::q_failures() const {
  return static_cast<std::size_t>(std::count_if(
      rings.begin(), rings.end(), [](const RingReport& r) { return !r.q_checks.passed(); }));
}

CorpusReport run_corpus(const CorpusConfig& cfg) { return run_corpus(cfg, generate_corpus(cfg)); }

CorpusReport run_corpus(const CorpusConfig& cfg, const std::vector<Ring::Ptr>& rings) {
  cfg.validate();
  CorpusReport report;
  report.config = cfg;
  report.rings.resize(rings.size());

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(rings.size());
  auto work = [&] {
    for (std::size_t i = next++; i < rings.size(); i = next++) {
      try {
        auto& slot = report.rings[i];
        slot.vector = property_vector(rings[i], cfg);
        DecideOptions opt = cfg.decide_options();
        opt.deadline = std::chrono::steady_clock::now() + cfg.ring_timeout;
        try {
          slot.q_checks = check_q_theorems(rings[i], opt);
        } catch (const DeadlineExceeded& e) {
          slot.q_checks = {rings[i]->label(), {{"deadline", "skipped", e.what(), {}}}};
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(rings.size(), 1)));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<PropertyVector> vectors;
  vectors.reserve(report.rings.size());
  for (const auto& r : report.rings) vectors.push_back(r.vector);
  report.implications = assert_implications(vectors);
  report.open_question = mine_open_question(vectors);
  return report;
}

}  // namespace ringrange
