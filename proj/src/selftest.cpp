#include "qsing/selftest.hpp"

#include <algorithm>
#include <numeric>

#include "qsing/agecalc.hpp"
#include "qsing/errors.hpp"
#include "qsing/plurigenera.hpp"
#include "qsing/sympower.hpp"

namespace qsing {

namespace {

std::string at(int n, int d) { return "n=" + std::to_string(n) + " d=" + std::to_string(d); }

bool galois_stable(const EigenExponents &e) {
  const auto r = e.order();
  for (std::uint64_t k = 1; k < r; ++k) {
    if (std::gcd(k, r) != 1)
      continue;
    std::vector<std::uint64_t> moved;
    for (auto a : e.exponents())
      moved.push_back((k * a) % r);
    std::sort(moved.begin(), moved.end());
    if (moved != e.exponents())
      return false;
  }
  return true;
}

} // namespace

bool SelftestReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.passed(); });
}

SelftestReport run_selftest(const SelftestOptions &opt) {
  if (opt.max_dim < 2 || opt.max_points < 1)
    throw InvalidInput("selftest: need max-dim >= 2 and max-points >= 1");
  if (opt.max_dim * opt.max_points > sympower::kDefaultMatrixCap)
    throw InvalidInput("selftest: max-dim * max-points exceeds oracle matrix cap " +
                       std::to_string(sympower::kDefaultMatrixCap));
  if (!(opt.tolerance > 0))
    throw InvalidInput("selftest: tolerance must be positive");

  SelftestCheck oracle{"oracle-equivalence", 0, {}};
  SelftestCheck closed{"closed-form-vs-construction", 0, {}};
  SelftestCheck galois{"galois-stability", 0, {}};
  SelftestCheck min_age{"minimal-age-law", 0, {}};
  SelftestCheck proposition{"canonical-and-index-law", 0, {}};
  SelftestCheck sizes{"class-size-sum", 0, {}};
  SelftestCheck burnside{"burnside-identity", 0, {}};

  for (int d = 1; d <= opt.max_points; ++d) {
    BigInt total = 0;
    for (const auto &t : partitions(d)) {
      total += class_size(t);
      ++galois.cases;
      if (!galois_stable(cycle_eigen_exponents(t)))
        galois.discrepancies.push_back("class " + t.to_string() + " not Galois stable");
    }
    ++sizes.cases;
    if (total != factorial(d))
      sizes.discrepancies.push_back("d=" + std::to_string(d) + ": sum " + total.str());
  }

  for (int n = 2; n <= opt.max_dim; ++n) {
    for (int d = 1; d <= opt.max_points; ++d) {
      for (const auto &c : sympower::bruteforce_check(n, d, opt.tolerance).classes) {
        ++oracle.cases;
        if (!c.passed())
          oracle.discrepancies.push_back(at(n, d) + " " + c.detail);
      }

      for (const auto &t : partitions(d)) {
        ++closed.cases;
        const auto cf = age_closed_form(t, n);
        const auto built = age(nfold(cycle_eigen_exponents(t), n));
        const Rational simplified(n * (d - t.num_parts()), 2);
        if (cf != built || cf.age != simplified)
          closed.discrepancies.push_back(at(n, d) + " class " + t.to_string() + ": closed " +
                                         to_fraction_string(cf.age) + ", construction " +
                                         to_fraction_string(built.age) + ", n(d-c)/2 " +
                                         to_fraction_string(simplified));
      }

      const auto v = sympower::verdict(n, d);
      ++proposition.cases;
      const std::uint64_t expected_index = (n % 2 == 0 || d == 1) ? 1 : 2;
      if (!v.canonical || v.index != expected_index || v.gorenstein != (expected_index == 1))
        proposition.discrepancies.push_back(at(n, d) + ": canonical " +
                                            (v.canonical ? "true" : "false") + ", index " +
                                            std::to_string(v.index));
      if (d >= 2) {
        ++min_age.cases;
        const bool at_transposition =
            v.witness && std::holds_alternative<CycleType>(*v.witness) &&
            std::get<CycleType>(*v.witness) == CycleType::transposition(d);
        if (!v.min_age || *v.min_age != Rational(n, 2) || !at_transposition)
          min_age.discrepancies.push_back(at(n, d) + ": min age " +
                                          (v.min_age ? to_fraction_string(*v.min_age) : "inf"));
      }
    }
  }

  for (std::uint64_t p = 0; p <= 10; ++p) {
    for (int d = 1; d <= 10; ++d) {
      ++burnside.cases;
      const auto a = invariant_dim_burnside(p, d);
      const auto b = binomial(p + static_cast<std::uint64_t>(d) - 1, static_cast<std::uint64_t>(d));
      if (a != b)
        burnside.discrepancies.push_back("p=" + std::to_string(p) + " d=" + std::to_string(d) +
                                         ": burnside " + a.str() + ", binomial " + b.str());
    }
  }

  return {opt, {oracle, closed, galois, min_age, proposition, sizes, burnside}};
}

} // namespace qsing
