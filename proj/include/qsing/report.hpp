#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qsing/agecalc.hpp"
#include "qsing/monomial.hpp"
#include "qsing/plurigenera.hpp"
#include "qsing/selftest.hpp"

// JSON and Markdown renderings of library results. JSON uses sorted keys;
// exact rationals are "p/q" strings and arbitrary-precision integers are
// decimal strings, so no floating point appears except a growth slope.
namespace qsing::report {

nlohmann::json to_json(const SingularityVerdict &v);
nlohmann::json to_json(const AgeRecord &r);
nlohmann::json to_json(const PlurigenusTable &t);
nlohmann::json to_json(const SelftestReport &r);

/// {"command": ..., "input": ..., "metadata": {"version": ...}, "result": ...}
nlohmann::json envelope(const std::string &command, nlohmann::json input, nlohmann::json result);

/// Two-space indented dump with a trailing newline.
std::string dump(const nlohmann::json &j);

std::string verdict_markdown(const std::string &title, const SingularityVerdict &v);
std::string class_table_markdown(const std::vector<AgeRecord> &rows);
std::string plurigenus_markdown(const PlurigenusTable &t);
std::string selftest_markdown(const SelftestReport &r);

std::string witness_string(const Witness &w);

} // namespace qsing::report
