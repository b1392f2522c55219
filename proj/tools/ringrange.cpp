#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "ringrange/harness.hpp"
#include "ringrange/properties.hpp"
#include "ringrange/quotient.hpp"

using namespace ringrange;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string witness_text(const std::vector<std::pair<std::string, std::string>>& bindings) {
  std::string out;
  for (const auto& [name, value] : bindings) {
    out += (out.empty() ? "" : ", ") + name + "=" + value;
  }
  return out;
}

void print_entry(std::ostream& os, std::string_view name, const Ring& ring,
                 const PropertyEntry& e) {
  os << std::left << std::setw(18) << name;
  if (!e.verdict) {
    os << status_name(e.status) << '\n';
    return;
  }
  os << std::setw(7) << (e.verdict->holds ? "true" : "false");
  const auto w = witness_text(format_witness(ring, e.verdict->witness));
  os << (w.empty() ? e.note : w) << '\n';
}

int run_analyze(const std::string& spec, bool json) {
  const auto ring = Ring::realize(spec);
  const PropertyVector pv = property_vector(ring);
  std::size_t violations = 0;
  std::vector<RuleOutcome> outcomes;
  for (const auto& rule : implication_rules()) {
    outcomes.push_back(evaluate_rule(rule, pv));
    violations += outcomes.back().status == RuleStatus::Violation ? 1 : 0;
  }
  if (json) {
    std::cout << to_json(pv) << '\n';
  } else {
    std::cout << pv.spec << "  order " << pv.order << "  units " << pv.units << "  idempotents "
              << pv.idempotents << "  regulars " << pv.regulars << '\n';
    for (PropertyId id : kAllProperties) print_entry(std::cout, property_name(id), *ring, pv.entry(id));
    print_entry(std::cout, "Q:SR1", *ring, pv.q_sr1);
    print_entry(std::cout, "Q:VNR_LOCAL", *ring, pv.q_vnr_local);
    std::cout << '\n';
    for (const auto& o : outcomes) {
      std::cout << std::left << std::setw(6) << o.rule << std::setw(16)
                << rule_status_name(o.status) << o.note << '\n';
    }
  }
  return violations ? kExitViolation : 0;
}

int run_decide(const std::string& property, const std::string& spec, bool cross_check) {
  const auto id = parse_property(property);
  if (!id) {
    std::cerr << "unknown property: " << property << '\n';
    return kExitUsage;
  }
  const auto ring = Ring::realize(spec);
  DecideOptions opt;
  opt.cross_check = cross_check;
  try {
    const Verdict v = decide(*id, *ring, opt);
    std::cout << property_name(*id) << " = " << (v.holds ? "true" : "false");
    const auto w = witness_text(format_witness(*ring, v.witness));
    if (!w.empty()) std::cout << "  witness: " << w;
    std::cout << '\n';
  } catch (const CapExceeded& e) {
    std::cout << property_name(*id) << " = undecided-by-search  (" << e.what() << ")\n";
  }
  return 0;
}

int run_corpus_command(const CorpusConfig& cfg, const std::string& out, const std::string& format) {
  const CorpusReport report = run_corpus(cfg);
  const std::string text = format == "csv" ? to_csv(report) : to_json(report);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + out);
    file << text;
  }
  std::cerr << report.rings.size() << " rings, " << report.implications.size()
            << " rule checks, " << report.violations() << " violations, " << report.q_failures()
            << " Q(R) check failures\n";
  return report.violations() || report.q_failures() ? kExitViolation : 0;
}

int run_mine(const CorpusConfig& cfg) {
  std::vector<PropertyVector> vectors;
  for (const auto& ring : generate_corpus(cfg)) vectors.push_back(property_vector(ring, cfg));
  const auto report = mine_open_question(vectors);
  std::cout << "question: " << report.question << '\n'
            << "rings searched: " << vectors.size() << '\n'
            << "counterexamples: " << report.counterexamples.size() << '\n';
  for (const auto& spec : report.counterexamples) std::cout << "  " << spec << '\n';
  std::cout << "note: " << report.rationale << '\n';
  return 0;
}

int run_q_check(const std::string& spec, bool json) {
  const auto report = check_q_theorems(Ring::realize(spec));
  if (json) {
    std::cout << to_json(report) << '\n';
  } else {
    std::cout << "Q(" << report.ring << ")\n";
    for (const auto& c : report.checks) {
      std::cout << "  " << std::left << std::setw(26) << c.name << std::setw(16) << c.status
                << c.detail;
      if (!c.witness.empty()) std::cout << "  witness: " << witness_text(c.witness);
      std::cout << '\n';
    }
  }
  return report.passed() ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Range conditions and ring classes of finite commutative rings"};
  app.require_subcommand(1);

  std::string spec;
  std::string property;
  bool json = false;
  bool cross_check = false;

  auto* analyze = app.add_subcommand("analyze", "Decide every property of one ring");
  analyze->add_option("spec", spec, "Ring, e.g. Z36, \"Z4 x Z9\", \"Z4[x]/(x^2)\"")->required();
  analyze->add_flag("--json", json, "Print JSON");

  auto* decide_cmd = app.add_subcommand("decide", "Decide one property");
  decide_cmd->add_option("property", property, "Property name, e.g. SH_LOCAL")->required();
  decide_cmd->add_option("spec", spec, "Ring spec")->required();
  decide_cmd->add_flag("--cross-check", cross_check, "Re-verify the witness independently");

  CorpusConfig cfg;
  std::string out;
  std::string format = "json";
  std::uint64_t max_order = 0;
  std::int64_t timeout_ms = cfg.ring_timeout.count();
  auto add_corpus_options = [&](CLI::App* cmd) {
    cmd->add_option("--max-order", max_order, "Skip rings above this order");
    cmd->add_option("--max-modular-n", cfg.max_modular_n, "Largest n for Z_n");
    cmd->add_option("--product-order-cap", cfg.product_order_cap, "Largest product order");
    cmd->add_option("--sr2-cap", cfg.sr2_cap, "Largest order for the SR2 search");
    cmd->add_option("--timeout-ms", timeout_ms, "Per-ring time limit");
    cmd->add_option("--threads", cfg.threads, "Worker threads (0 = hardware)");
  };

  auto* corpus = app.add_subcommand("corpus", "Run the implication audit over the corpus");
  add_corpus_options(corpus);
  corpus->add_option("--out", out, "Report file (default stdout)");
  corpus->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* mine = app.add_subcommand("mine-open-question",
                                  "List almost clean rings without idempotent regular range 1");
  add_corpus_options(mine);

  auto* qcheck = app.add_subcommand("q-check", "Check the Q(R) statements on one ring");
  qcheck->add_option("spec", spec, "Ring spec")->required();
  qcheck->add_flag("--json", json, "Print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    if (max_order) cfg.max_order = max_order;
    cfg.ring_timeout = std::chrono::milliseconds(timeout_ms);
    if (*analyze) return run_analyze(spec, json);
    if (*decide_cmd) return run_decide(property, spec, cross_check);
    if (*corpus) return run_corpus_command(cfg, out, format);
    if (*mine) return run_mine(cfg);
    if (*qcheck) return run_q_check(spec, json);
  } catch (const RingError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
