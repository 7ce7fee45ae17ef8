#include "qsing/plurigenera.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "qsing/combinatorics.hpp"
#include "qsing/errors.hpp"

namespace qsing {

namespace {

void require_points(int d) {
  if (d < 1)
    throw InvalidInput("number of points must be >= 1, got " + std::to_string(d));
}

double log_big(const BigInt &x) {
  const auto bits = boost::multiprecision::msb(x);
  if (bits < 1000)
    return std::log(x.convert_to<double>());
  const auto shift = bits - 900;
  return std::log(BigInt(x >> shift).convert_to<double>()) +
         static_cast<double>(shift) * std::log(2.0);
}

} // namespace

KodairaDim KodairaDim::finite(std::int64_t value) {
  if (value < 0)
    throw InvalidInput("Kodaira dimension must be -inf or >= 0, got " + std::to_string(value));
  KodairaDim k;
  k.value_ = value;
  return k;
}

KodairaDim KodairaDim::parse(const std::string &text) {
  if (text == "-inf" || text == "-infinity")
    return negative_infinity();
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception &) {
    throw InvalidInput("cannot parse Kodaira dimension '" + text + "'");
  }
  if (used != text.size())
    throw InvalidInput("cannot parse Kodaira dimension '" + text + "'");
  return finite(v);
}

std::int64_t KodairaDim::value() const {
  if (!value_)
    throw std::logic_error("Kodaira dimension is -inf");
  return *value_;
}

std::string KodairaDim::to_string() const {
  return value_ ? std::to_string(*value_) : "-inf";
}

KodairaDim kodaira_scale(const KodairaDim &kappa, int d) {
  require_points(d);
  if (!kappa.is_finite())
    return kappa;
  return KodairaDim::finite(kappa.value() * d);
}

BigInt binomial(std::uint64_t a, std::uint64_t k) {
  if (k > a)
    return 0;
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out *= a - k + i;
    out /= i;
  }
  return out;
}

BigInt sym_dim(std::uint64_t p, int d) {
  require_points(d);
  if (p == 0)
    return 0;
  return binomial(p + static_cast<std::uint64_t>(d) - 1, static_cast<std::uint64_t>(d));
}

BigInt invariant_dim_burnside(std::uint64_t p, int d) {
  require_points(d);
  BigInt total = 0;
  for (const auto &info : conjugacy_classes(d)) {
    BigInt trace = 1;
    for (int c = 0; c < info.cycle_type.num_parts(); ++c)
      trace *= p;
    total += info.size * trace;
  }
  const BigInt order = factorial(d);
  if (total % order != 0)
    throw std::logic_error("invariant_dim_burnside: non-integral average " + total.str() + "/" +
                           order.str());
  return total / order;
}

PlurigenusTable plurigenus_table(int n, int d, const std::vector<PlurigenusInput> &rows) {
  if (n < 2)
    throw InvalidInput("plurigenus table needs dim X >= 2, got " + std::to_string(n));
  require_points(d);
  PlurigenusTable table{n, d, {}};
  for (const auto &in : rows) {
    if (in.m < 1)
      throw InvalidInput("plurigenus index m must be >= 1");
    const bool valid = (in.m * static_cast<std::uint64_t>(n)) % 2 == 0;
    table.rows.push_back({in.m, in.p_m_x, sym_dim(in.p_m_x, d), valid});
  }
  return table;
}

std::uint64_t genus_bound(GenusRegime regime, int d) {
  require_points(d);
  const auto g = static_cast<std::uint64_t>(d);
  return regime == GenusRegime::GeneralType ? g + 1 : g;
}

double growth_exponent_check(const PlurigenusTable &table) {
  std::vector<double> xs, ys;
  for (const auto &row : table.rows) {
    if (!row.valid || row.p_m_sigma == 0)
      continue;
    xs.push_back(std::log(static_cast<double>(row.m)));
    ys.push_back(log_big(row.p_m_sigma));
  }
  if (xs.size() < 3)
    throw InvalidInput("growth check needs at least 3 valid rows with nonzero plurigenus, got " +
                       std::to_string(xs.size()));

  const auto k = static_cast<Eigen::Index>(xs.size());
  Eigen::MatrixXd A(k, 2);
  Eigen::VectorXd b(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    A(i, 0) = 1.0;
    A(i, 1) = xs[static_cast<std::size_t>(i)];
    b(i) = ys[static_cast<std::size_t>(i)];
  }
  const Eigen::Vector2d coef = A.colPivHouseholderQr().solve(b);
  return coef(1);
}

} // namespace qsing
