#include "qsing/sympower.hpp"

#include <algorithm>
#include <numeric>

#include "qsing/oracle.hpp"

namespace qsing::sympower {

namespace {

void require_model(int n, int d) {
  if (n <= 1)
    throw UnsupportedDimension(n);
  if (d < 1)
    throw InvalidInput("number of points must be >= 1, got " + std::to_string(d));
}

std::string multiset_string(const EigenExponents &e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.exponents().size(); ++i)
    s += (i ? "," : "") + std::to_string(e.exponents()[i]);
  return s + "} @ order " + std::to_string(e.order());
}

} // namespace

UnsupportedDimension::UnsupportedDimension(int n)
    : QuasiReflectionError("unsupported dimension n=" + std::to_string(n) +
                           ": transpositions are quasi-reflections unless n > 1") {}

std::vector<AgeRecord> class_table(int n, int d) {
  require_model(n, d);
  std::vector<AgeRecord> rows;
  for (auto &info : conjugacy_classes(d)) {
    const auto a = age_closed_form(info.cycle_type, n);
    const bool det_plus = det_sign(info.cycle_type, n) == 1;
    rows.push_back({info.cycle_type, n, info.order, a.s_sum, a.age, det_plus, info.size});
  }
  return rows;
}

SingularityVerdict verdict(int n, int d) {
  SingularityVerdict v;
  v.group_order = factorial(d);
  for (const auto &row : class_table(n, d)) {
    if (row.cycle_type.is_identity())
      continue;
    if (is_quasi_reflection(nfold(cycle_eigen_exponents(row.cycle_type), n)))
      throw UnsupportedDimension(n);
    if (!v.min_age || row.age < *v.min_age) {
      v.min_age = row.age;
      v.witness = row.cycle_type;
    }
    if (!row.det_is_plus_one)
      v.index = 2;
  }
  if (v.min_age) {
    v.canonical = *v.min_age >= Rational(1);
    v.terminal = *v.min_age > Rational(1);
  }
  v.gorenstein = v.index == 1;
  return v;
}

bool BruteforceReport::passed() const noexcept {
  return std::all_of(classes.begin(), classes.end(), [](const auto &c) { return c.passed(); });
}

BruteforceReport bruteforce_check(int n, int d, double tolerance, int matrix_cap) {
  require_model(n, d);
  if (n * d > matrix_cap)
    throw InvalidInput("bruteforce_check: n*d = " + std::to_string(n * d) +
                       " exceeds matrix cap " + std::to_string(matrix_cap));

  BruteforceReport report{n, d, tolerance, {}};
  for (const auto &t : partitions(d)) {
    ClassCheck check{t, false, false, 0.0, {}};
    const auto constructed = nfold(cycle_eigen_exponents(t), n);
    const auto closed = age_closed_form(t, n);

    const auto images = oracle::representative_permutation(t);
    const auto M = oracle::nfold_permutation_matrix<double>(images, n);
    const auto recovered = oracle::recover_exponents(M, element_order(t), tolerance);
    check.max_deviation = recovered.max_deviation;

    if (!recovered.exponents) {
      check.detail = "class " + t.to_string() + ": exponent recovery deviation " +
                     std::to_string(recovered.max_deviation) + " exceeds tolerance";
    } else {
      check.exponents_match = *recovered.exponents == constructed;
      const auto numeric_age = age(*recovered.exponents);
      check.age_match = numeric_age == closed && age(constructed) == closed;
      if (!check.exponents_match)
        check.detail = "class " + t.to_string() + ": oracle " +
                       multiset_string(*recovered.exponents) + " vs construction " +
                       multiset_string(constructed);
      else if (!check.age_match)
        check.detail = "class " + t.to_string() + ": S oracle " +
                       std::to_string(numeric_age.s_sum) + " vs closed form " +
                       std::to_string(closed.s_sum);
    }
    report.classes.push_back(std::move(check));
  }
  return report;
}

MonomialRep materialize(int n, int d) {
  require_model(n, d);
  const auto N = static_cast<std::size_t>(n) * static_cast<std::size_t>(d);
  std::vector<MonomialElement> gens;
  for (int i = 0; i + 1 < d; ++i) {
    auto g = MonomialElement::identity(N);
    for (int k = 0; k < n; ++k) {
      g.perm[static_cast<std::size_t>(i * n + k)] = (i + 1) * n + k;
      g.perm[static_cast<std::size_t>((i + 1) * n + k)] = i * n + k;
    }
    gens.push_back(std::move(g));
  }
  return MonomialRep(N, 1, std::move(gens));
}

} // namespace qsing::sympower
