#include "qsing/monomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "qsing/errors.hpp"

namespace qsing {

namespace {

struct ElementHash {
  std::size_t operator()(const MonomialElement &g) const {
    std::size_t h = boost::hash_range(g.perm.begin(), g.perm.end());
    boost::hash_combine(h, boost::hash_range(g.exponents.begin(), g.exponents.end()));
    return h;
  }
};

std::string describe(const MonomialElement &g) {
  std::string s = "perm=[";
  for (std::size_t i = 0; i < g.perm.size(); ++i)
    s += (i ? "," : "") + std::to_string(g.perm[i] + 1);
  s += "] exponents=[";
  for (std::size_t i = 0; i < g.exponents.size(); ++i)
    s += (i ? "," : "") + std::to_string(g.exponents[i]);
  return s + "]";
}

// Visits each cycle of g's permutation as (length, exponent sum mod m).
template <typename Fn>
void for_each_cycle(const MonomialElement &g, std::uint32_t m, Fn &&fn) {
  std::vector<bool> seen(g.dimension(), false);
  for (std::size_t i = 0; i < g.dimension(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0, k = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(g.perm[j])) {
      seen[j] = true;
      ++len;
      k += g.exponents[j];
    }
    fn(len, k % m);
  }
}

} // namespace

MonomialElement MonomialElement::identity(std::size_t dimension) {
  MonomialElement g;
  g.perm.resize(dimension);
  std::iota(g.perm.begin(), g.perm.end(), 0);
  g.exponents.assign(dimension, 0);
  return g;
}

bool MonomialElement::is_identity() const noexcept {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i) || exponents[i] != 0)
      return false;
  return true;
}

std::size_t closure_cap_from_environment() {
  const char *raw = std::getenv("QC_CLOSURE_CAP");
  if (!raw || !*raw)
    return kDefaultClosureCap;
  char *end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0 || raw[0] == '-')
    throw InvalidInput(std::string("QC_CLOSURE_CAP must be a positive integer, got '") + raw + "'");
  return static_cast<std::size_t>(v);
}

MonomialRep::MonomialRep(std::size_t dimension, std::uint32_t root_order,
                         std::vector<MonomialElement> generators)
    : dimension_(dimension), root_order_(root_order), generators_(std::move(generators)) {
  if (dimension_ == 0)
    throw InvalidInput("representation dimension must be >= 1");
  if (root_order_ == 0)
    throw InvalidInput("root_order must be >= 1");
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    auto &gen = generators_[g];
    const std::string where = "generator " + std::to_string(g + 1) + ": ";
    if (gen.perm.size() != dimension_ || gen.exponents.size() != dimension_)
      throw InvalidInput(where + "expected " + std::to_string(dimension_) +
                         " perm images and exponents");
    std::vector<bool> hit(dimension_, false);
    for (int img : gen.perm) {
      if (img < 0 || static_cast<std::size_t>(img) >= dimension_ || hit[img])
        throw InvalidInput(where + "perm is not a permutation");
      hit[img] = true;
    }
    for (auto &k : gen.exponents)
      k %= root_order_;
  }
}

const std::vector<MonomialElement> &MonomialRep::elements() const {
  if (!elements_)
    throw std::logic_error("contract violation: representation has not been closed");
  return *elements_;
}

MonomialElement MonomialRep::multiply(const MonomialElement &a, const MonomialElement &b) const {
  MonomialElement c;
  c.perm.resize(dimension_);
  c.exponents.resize(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) {
    const auto bi = static_cast<std::size_t>(b.perm[i]);
    c.perm[i] = a.perm[bi];
    c.exponents[i] = (b.exponents[i] + a.exponents[bi]) % root_order_;
  }
  return c;
}

MonomialRep close_group(const MonomialRep &rep, std::size_t cap) {
  std::vector<MonomialElement> elements{MonomialElement::identity(rep.dimension())};
  std::unordered_set<MonomialElement, ElementHash> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto &gen : rep.generators()) {
      auto next = rep.multiply(elements[head], gen);
      if (seen.contains(next))
        continue;
      if (elements.size() >= cap)
        throw GroupTooLarge(cap);
      seen.insert(next);
      elements.push_back(std::move(next));
    }
  }
  MonomialRep out = rep;
  out.elements_ = std::move(elements);
  return out;
}

std::uint64_t element_order(const MonomialElement &g, std::uint32_t root_order) {
  std::uint64_t r = 1;
  for_each_cycle(g, root_order, [&](std::uint64_t len, std::uint64_t k) {
    const std::uint64_t block = len * (root_order / std::gcd<std::uint64_t>(k, root_order));
    r = std::lcm(r, block);
  });
  return r;
}

EigenExponents element_eigen_exponents(const MonomialElement &g, std::uint32_t root_order) {
  const std::uint64_t r = element_order(g, root_order);
  const std::uint64_t m = root_order;
  std::vector<std::uint64_t> exps;
  exps.reserve(g.dimension());
  for_each_cycle(g, root_order, [&](std::uint64_t len, std::uint64_t k) {
    // eigenvalue exp(2 pi i (k + m j) / (m len)) rewritten at order r
    for (std::uint64_t j = 0; j < len; ++j) {
      const auto num = static_cast<unsigned __int128>(k + m * j) * r;
      exps.push_back(static_cast<std::uint64_t>(num / (m * len)));
    }
  });
  return EigenExponents(r, std::move(exps));
}

std::uint64_t det_exponent(const MonomialElement &g, std::uint32_t root_order) {
  const std::uint64_t two_m = 2ull * root_order;
  std::uint64_t e = 0;
  int parity = 0;
  for_each_cycle(g, root_order, [&](std::uint64_t len, std::uint64_t k) {
    e += 2 * k;
    parity += static_cast<int>((len - 1) % 2);
  });
  if (parity % 2)
    e += root_order;
  return e % two_m;
}

std::uint64_t det_order(const MonomialElement &g, std::uint32_t root_order) {
  const std::uint64_t two_m = 2ull * root_order;
  return two_m / std::gcd(det_exponent(g, root_order), two_m);
}

SingularityVerdict analyze(const MonomialRep &rep) {
  const auto &elements = rep.elements();
  const auto m = rep.root_order();

  SingularityVerdict v;
  v.group_order = elements.size();

  for (const auto &g : elements) {
    if (g.is_identity())
      continue;
    const auto exps = element_eigen_exponents(g, m);
    if (is_quasi_reflection(exps)) {
      v.quasi_reflections.push_back(g);
      continue;
    }
    const Rational a = age(exps).age;
    if (!v.min_age || a < *v.min_age) {
      v.min_age = a;
      v.witness = g;
    }
    v.index = std::lcm(v.index, det_order(g, m));
  }

  if (!v.quasi_reflections.empty()) {
    std::string msg = "quasi-reflections present (" + std::to_string(v.quasi_reflections.size()) +
                      "); age criterion requires none: ";
    for (std::size_t i = 0; i < v.quasi_reflections.size() && i < 5; ++i)
      msg += (i ? "; " : "") + describe(v.quasi_reflections[i]);
    if (v.quasi_reflections.size() > 5)
      msg += "; ...";
    throw QuasiReflectionError(msg);
  }

  if (v.min_age) {
    v.canonical = *v.min_age >= Rational(1);
    v.terminal = *v.min_age > Rational(1);
  }
  v.gorenstein = v.index == 1;
  return v;
}

} // namespace qsing
