#include "qsing/report.hpp"

#include <sstream>

#include "qsing/rep_format.hpp"

#ifndef QSING_VERSION
#define QSING_VERSION "0.0.0"
#endif

namespace qsing::report {

using nlohmann::json;

namespace {

const char *flag(bool b) { return b ? "true" : "false"; }

json witness_json(const Witness &w) {
  if (const auto *t = std::get_if<CycleType>(&w))
    return {{"cycle_type", t->parts()}};
  return element_to_json(std::get<MonomialElement>(w));
}

} // namespace

std::string witness_string(const Witness &w) {
  if (const auto *t = std::get_if<CycleType>(&w))
    return "class " + t->to_string();
  return "element " + element_to_json(std::get<MonomialElement>(w)).dump();
}

json to_json(const SingularityVerdict &v) {
  json qr = json::array();
  for (const auto &g : v.quasi_reflections)
    qr.push_back(element_to_json(g));
  return {
      {"canonical", v.canonical},
      {"terminal", v.terminal},
      {"gorenstein", v.gorenstein},
      {"index", v.index},
      {"quasi_reflections", qr},
      {"min_age", v.min_age ? to_fraction_string(*v.min_age) : "inf"},
      {"witness", v.witness ? witness_json(*v.witness) : json(nullptr)},
      {"group_order", v.group_order.str()},
  };
}

json to_json(const AgeRecord &r) {
  return {
      {"cycle_type", r.cycle_type.parts()},
      {"class_size", r.class_size.str()},
      {"order", r.order},
      {"s_sum", r.s_sum},
      {"age", to_fraction_string(r.age)},
      {"det", r.det_is_plus_one ? 1 : -1},
  };
}

json to_json(const PlurigenusTable &t) {
  json rows = json::array();
  for (const auto &row : t.rows)
    rows.push_back({{"m", row.m},
                    {"p_m_x", row.p_m_x},
                    {"p_m_sigma", row.p_m_sigma.str()},
                    {"valid", row.valid}});
  return {{"n", t.n}, {"d", t.d}, {"rows", rows}};
}

json to_json(const SelftestReport &r) {
  json checks = json::array();
  for (const auto &c : r.checks)
    checks.push_back({{"name", c.name},
                      {"cases", c.cases},
                      {"passed", c.passed()},
                      {"discrepancies", c.discrepancies}});
  return {{"passed", r.passed()}, {"checks", checks}};
}

json envelope(const std::string &command, json input, json result) {
  return {{"command", command},
          {"input", std::move(input)},
          {"metadata", {{"version", QSING_VERSION}}},
          {"result", std::move(result)}};
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

std::string verdict_markdown(const std::string &title, const SingularityVerdict &v) {
  std::ostringstream os;
  os << "# " << title << "\n\n";
  os << "- group order: " << v.group_order << "\n";
  os << "- canonical: " << flag(v.canonical) << "\n";
  os << "- terminal: " << flag(v.terminal) << "\n";
  os << "- gorenstein: " << flag(v.gorenstein) << "\n";
  os << "- index: " << v.index << "\n";
  os << "- min age: " << (v.min_age ? to_display_string(*v.min_age) : "inf");
  if (v.witness)
    os << " at " << witness_string(*v.witness);
  os << "\n";
  return os.str();
}

std::string class_table_markdown(const std::vector<AgeRecord> &rows) {
  std::ostringstream os;
  os << "| class | size | order | S | age | det |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const auto &r : rows)
    os << "| " << r.cycle_type.to_string() << " | " << r.class_size << " | " << r.order << " | "
       << r.s_sum << " | " << to_display_string(r.age) << " | "
       << (r.det_is_plus_one ? "+1" : "-1") << " |\n";
  return os.str();
}

std::string plurigenus_markdown(const PlurigenusTable &t) {
  std::ostringstream os;
  os << "| m | P_m(X) | P_m(S^" << t.d << ") | mn even |\n";
  os << "|---|---|---|---|\n";
  for (const auto &row : t.rows)
    os << "| " << row.m << " | " << row.p_m_x << " | " << row.p_m_sigma << " | "
       << (row.valid ? "yes" : "no (not asserted)") << " |\n";
  return os.str();
}

std::string selftest_markdown(const SelftestReport &r) {
  std::ostringstream os;
  os << "# selftest (dim 2.." << r.options.max_dim << ", points 1.." << r.options.max_points
     << ", tolerance " << r.options.tolerance << ")\n\n";
  os << "| check | cases | result |\n|---|---|---|\n";
  for (const auto &c : r.checks)
    os << "| " << c.name << " | " << c.cases << " | "
       << (c.passed() ? "pass" : std::to_string(c.discrepancies.size()) + " discrepancies")
       << " |\n";
  for (const auto &c : r.checks)
    for (const auto &msg : c.discrepancies)
      os << "\n- " << c.name << ": " << msg;
  os << "\n" << (r.passed() ? "passed" : "FAILED") << "\n";
  return os.str();
}

} // namespace qsing::report
