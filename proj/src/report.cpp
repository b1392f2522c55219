#include <sstream>

#include "json.hpp"
#include "ringrange/harness.hpp"

namespace ringrange {

namespace {

using Json = nlohmann::ordered_json;

Json witness_json(const std::vector<std::pair<std::string, std::string>>& bindings) {
  if (bindings.empty()) return nullptr;
  Json out = Json::object();
  for (const auto& [name, value] : bindings) out[name] = value;
  return out;
}

Json entry_json(const Ring& ring, const PropertyEntry& e) {
  Json out = Json::object();
  if (e.verdict) {
    out["holds"] = e.verdict->holds;
    out["witness"] = witness_json(format_witness(ring, e.verdict->witness));
  } else {
    out["holds"] = nullptr;
    out["witness"] = nullptr;
  }
  out["status"] = std::string(status_name(e.status));
  if (!e.note.empty()) out["note"] = e.note;
  return out;
}

Json vector_json(const PropertyVector& pv) {
  Json out = Json::object();
  out["spec"] = pv.spec;
  out["order"] = pv.order;
  out["units"] = pv.units;
  out["idempotents"] = pv.idempotents;
  out["regulars"] = pv.regulars;
  Json props = Json::object();
  for (PropertyId id : kAllProperties) {
    props[std::string(property_name(id))] = entry_json(*pv.ring, pv.entry(id));
  }
  out["properties"] = std::move(props);
  out["q_properties"] = {{"SR1", entry_json(*pv.ring, pv.q_sr1)},
                         {"VNR_LOCAL", entry_json(*pv.ring, pv.q_vnr_local)}};
  return out;
}

Json q_json(const QCheckReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"status", c.status},
                      {"detail", c.detail},
                      {"witness", witness_json(c.witness)}});
  }
  return {{"ring", report.ring}, {"passed", report.passed()}, {"checks", std::move(checks)}};
}

Json config_json(const CorpusConfig& cfg) {
  Json out = Json::object();
  out["max_modular_n"] = cfg.max_modular_n;
  out["product_order_cap"] = cfg.product_order_cap;
  out["poly_bases"] = cfg.poly_bases;
  out["poly_degree_cap"] = cfg.poly_degree_cap;
  out["sr2_cap"] = cfg.sr2_cap;
  out["matrix_oracle_cap"] = cfg.matrix_oracle_cap;
  out["ring_timeout_ms"] = cfg.ring_timeout.count();
  out["max_order"] = cfg.max_order ? Json(*cfg.max_order) : Json(nullptr);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_value(const PropertyEntry& e) {
  if (!e.verdict) return std::string(status_name(e.status));
  return e.verdict->holds ? "true" : "false";
}

}  // namespace

std::string to_json(const PropertyVector& pv) { return vector_json(pv).dump(2); }

std::string to_json(const QCheckReport& report) { return q_json(report).dump(2); }

std::string to_json(const CorpusReport& report) {
  Json out = Json::object();
  out["config"] = config_json(report.config);

  Json rings = Json::array();
  std::size_t undecided = 0;
  for (const auto& r : report.rings) {
    Json ring = vector_json(r.vector);
    ring["q_checks"] = q_json(r.q_checks);
    rings.push_back(std::move(ring));
    for (const auto& e : r.vector.entries) undecided += e.verdict ? 0 : 1;
  }
  out["rings"] = std::move(rings);

  Json implications = Json::array();
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& o : report.implications) {
    ++counts[static_cast<int>(o.status)];
    Json item = {{"rule", o.rule},
                 {"ring", o.ring},
                 {"status", std::string(rule_status_name(o.status))},
                 {"note", o.note},
                 {"witness", witness_json(o.witness)}};
    implications.push_back(std::move(item));
  }
  out["implications"] = std::move(implications);

  Json rules = Json::array();
  for (const auto& rule : implication_rules()) {
    rules.push_back({{"rule", rule.id},
                     {"statement", rule.statement},
                     {"equivalence", rule.equivalence},
                     {"separated_on_finite", rule.separated_on_finite}});
  }
  out["rules"] = std::move(rules);

  out["open_question"] = {{"question", report.open_question.question},
                          {"rationale", report.open_question.rationale},
                          {"counterexamples", report.open_question.counterexamples}};

  out["summary"] = {
      {"rings", report.rings.size()},
      {"rule_checks", report.implications.size()},
      {"pass", counts[static_cast<int>(RuleStatus::Pass)]},
      {"not_applicable", counts[static_cast<int>(RuleStatus::NotApplicable)]},
      {"skipped", counts[static_cast<int>(RuleStatus::Skipped)]},
      {"violations", counts[static_cast<int>(RuleStatus::Violation)]},
      {"undecided_properties", undecided},
      {"q_check_failures", report.q_failures()},
      {"open_question_counterexamples", report.open_question.counterexamples.size()},
  };
  return out.dump(2) + "\n";
}

std::string to_csv(const CorpusReport& report) {
  std::ostringstream out;
  out << "spec,order,units,idempotents,regulars";
  for (PropertyId id : kAllProperties) out << ',' << property_name(id);
  out << ",Q_SR1,Q_VNR_LOCAL,q_checks,violations\n";
  for (const auto& r : report.rings) {
    const auto& pv = r.vector;
    std::size_t violations = 0;
    for (const auto& o : report.implications) {
      if (o.ring == pv.spec && o.status == RuleStatus::Violation) ++violations;
    }
    out << csv_field(pv.spec) << ',' << pv.order << ',' << pv.units << ',' << pv.idempotents
        << ',' << pv.regulars;
    for (const auto& e : pv.entries) out << ',' << csv_value(e);
    out << ',' << csv_value(pv.q_sr1) << ',' << csv_value(pv.q_vnr_local) << ','
        << (r.q_checks.passed() ? "pass" : "fail") << ',' << violations << '\n';
  }
  return out.str();
}

}  // namespace ringrange
