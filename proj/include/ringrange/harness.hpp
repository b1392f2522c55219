#pragma once

// Corpus runs: property vectors for a list of small rings, the implication
// audit over them, and report serialization.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringrange/properties.hpp"
#include "ringrange/quotient.hpp"
#include "ringrange/ring.hpp"

namespace ringrange {

struct CorpusConfig {
  std::uint32_t max_modular_n = 100;
  std::uint64_t product_order_cap = 100;
  std::vector<std::uint32_t> poly_bases = {2, 3, 4};
  std::uint32_t poly_degree_cap = 2;
  std::size_t sr2_cap = 64;
  std::size_t matrix_oracle_cap = 16;
  std::chrono::milliseconds ring_timeout{120000};
  /// Drops corpus rings above this order.
  std::optional<std::uint64_t> max_order;
  /// 0 picks the hardware concurrency. Does not affect results.
  unsigned threads = 0;

  /// Throws std::invalid_argument on non-positive caps.
  void validate() const;
  DecideOptions decide_options() const;
};

/// Z_n for 2 <= n <= max_modular_n, Z_m x Z_n for m <= n and mn within the
/// product cap, then Z_n[x]/(f) for every monic f over each base up to the
/// degree cap. Order preserved, duplicates by spec string dropped.
std::vector<RingSpec> corpus_specs(const CorpusConfig& cfg);
std::vector<Ring::Ptr> generate_corpus(const CorpusConfig& cfg);

enum class DecideStatus { Decided, Undecided, Timeout };
std::string_view status_name(DecideStatus s);

struct PropertyEntry {
  DecideStatus status = DecideStatus::Decided;
  std::optional<Verdict> verdict;  // set iff Decided
  std::string note;  // why the entry is undecided
};

struct PropertyVector {
  Ring::Ptr ring;
  std::string spec;
  std::size_t order = 0;
  std::size_t units = 0;
  std::size_t idempotents = 0;
  std::size_t regulars = 0;
  std::vector<PropertyEntry> entries;  // indexed by PropertyId
  /// SR1 and VNR_LOCAL of Q(R), for the rules that talk about Q(R).
  PropertyEntry q_sr1;
  PropertyEntry q_vnr_local;

  const PropertyEntry& entry(PropertyId id) const {
    return entries[static_cast<std::size_t>(id)];
  }
  /// Empty when undecided.
  std::optional<bool> holds(PropertyId id) const;
};

PropertyVector property_vector(const Ring::Ptr& ring, const CorpusConfig& cfg = {});

struct Atom {
  PropertyId id;
  bool over_q = false;
};

struct ImplicationRule {
  std::string id;
  std::string statement;
  /// Must hold for the rule to apply at all (e.g. BEZOUT for conditional
  /// equivalences).
  std::vector<Atom> context;
  std::vector<Atom> hypothesis;
  std::vector<Atom> conclusion;
  bool equivalence = false;
  /// Finite rings cannot tell the two sides apart.
  bool separated_on_finite = true;
};

const std::vector<ImplicationRule>& implication_rules();

enum class RuleStatus { Pass, NotApplicable, Skipped, Violation };
std::string_view rule_status_name(RuleStatus s);

struct RuleOutcome {
  std::string rule;
  std::string ring;
  RuleStatus status = RuleStatus::Pass;
  std::string note;
  /// "PROPERTY.name" -> formatted element, from the verdicts involved.
  std::vector<std::pair<std::string, std::string>> witness;
};

RuleOutcome evaluate_rule(const ImplicationRule& rule, const PropertyVector& pv);
std::vector<RuleOutcome> assert_implications(const std::vector<PropertyVector>& vectors);

struct OpenQuestionReport {
  std::string question;
  std::string rationale;
  std::vector<std::string> counterexamples;  // spec strings
};

OpenQuestionReport mine_open_question(const std::vector<PropertyVector>& vectors);

struct RingReport {
  PropertyVector vector;
  QCheckReport q_checks;
};

struct CorpusReport {
  CorpusConfig config;
  std::vector<RingReport> rings;
  std::vector<RuleOutcome> implications;
  OpenQuestionReport open_question;

  std::size_t violations() const;
  std::size_t q_failures() const;
};

/// Computes every ring's vector and Q(R) checks (in parallel when allowed),
/// then the audit. Ring order follows the corpus order.
CorpusReport run_corpus(const CorpusConfig& cfg);
CorpusReport run_corpus(const CorpusConfig& cfg, const std::vector<Ring::Ptr>& rings);

std::string to_json(const CorpusReport& report);
std::string to_csv(const CorpusReport& report);
std::string to_json(const PropertyVector& pv);
std::string to_json(const QCheckReport& report);

}  // namespace ringrange
