#include "qsing/rep_format.hpp"

#include "qsing/errors.hpp"

namespace qsing {

using nlohmann::json;

namespace {

const json &field(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput(std::string("rep file: missing field '") + key + "'");
  return j.at(key);
}

std::uint64_t unsigned_field(const json &j, const char *key) {
  const auto &v = field(j, key);
  if (!v.is_number_unsigned())
    throw InvalidInput(std::string("rep file: '") + key + "' must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

} // namespace

MonomialRep rep_from_json(const json &j) {
  const auto dimension = unsigned_field(j, "dimension");
  const auto root_order = unsigned_field(j, "root_order");
  if (root_order > UINT32_MAX)
    throw InvalidInput("rep file: root_order too large");
  const auto &gens = field(j, "generators");
  if (!gens.is_array())
    throw InvalidInput("rep file: 'generators' must be an array");

  std::vector<MonomialElement> generators;
  for (const auto &g : gens) {
    const auto &perm = field(g, "perm");
    const auto &exps = field(g, "exponents");
    if (!perm.is_array() || !exps.is_array())
      throw InvalidInput("rep file: 'perm' and 'exponents' must be arrays");
    MonomialElement el;
    for (const auto &p : perm) {
      if (!p.is_number_unsigned() || p.get<std::uint64_t>() < 1 ||
          p.get<std::uint64_t>() > dimension)
        throw InvalidInput("rep file: perm images must be integers in 1.." +
                           std::to_string(dimension));
      el.perm.push_back(static_cast<int>(p.get<std::uint64_t>()) - 1);
    }
    for (const auto &k : exps) {
      if (!k.is_number_unsigned())
        throw InvalidInput("rep file: exponents must be nonnegative integers");
      el.exponents.push_back(static_cast<std::uint32_t>(k.get<std::uint64_t>() % root_order));
    }
    generators.push_back(std::move(el));
  }
  return MonomialRep(dimension, static_cast<std::uint32_t>(root_order), std::move(generators));
}

MonomialRep parse_rep(const std::string &text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error &e) {
    throw InvalidInput(std::string("rep file: ") + e.what());
  }
  return rep_from_json(j);
}

json element_to_json(const MonomialElement &g) {
  json perm = json::array();
  for (int p : g.perm)
    perm.push_back(p + 1);
  return {{"perm", perm}, {"exponents", g.exponents}};
}

json rep_to_json(const MonomialRep &rep) {
  json gens = json::array();
  for (const auto &g : rep.generators())
    gens.push_back(element_to_json(g));
  return {{"dimension", rep.dimension()}, {"root_order", rep.root_order()}, {"generators", gens}};
}

std::string canonical_rep_json(const MonomialRep &rep) { return rep_to_json(rep).dump(); }

} // namespace qsing
