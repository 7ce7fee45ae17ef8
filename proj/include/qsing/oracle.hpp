#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qsing/agecalc.hpp"
#include "qsing/combinatorics.hpp"
#include "qsing/monomial.hpp"

// Numeric eigenvalue oracle. Builds explicit matrices and recovers root-of-unity
// exponents from a floating-point eigendecomposition; shares no code with the
// exact per-cycle construction or the closed forms it is used to check.
namespace qsing::oracle {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// A permutation with the given cycle type: consecutive blocks 0..r1-1,
/// r1..r1+r2-1, ... each shifted cyclically. 0-based images.
std::vector<int> representative_permutation(const CycleType &t);

/// P(images[i], i) = 1, so P e_i = e_{images[i]}.
template <typename Scalar>
Matrix<Scalar> permutation_matrix(const std::vector<int> &images) {
  const auto N = static_cast<Eigen::Index>(images.size());
  Matrix<Scalar> P = Matrix<Scalar>::Zero(N, N);
  for (Eigen::Index i = 0; i < N; ++i)
    P(images[static_cast<std::size_t>(i)], i) = Scalar(1);
  return P;
}

/// The action on (C^n)^d: factor i is carried to factor images[i], so the
/// matrix is P (x) I_n.
template <typename Scalar>
Matrix<Scalar> nfold_permutation_matrix(const std::vector<int> &images, int n) {
  const Matrix<Scalar> P = permutation_matrix<Scalar>(images);
  const auto d = P.rows();
  Matrix<Scalar> M = Matrix<Scalar>::Zero(d * n, d * n);
  for (Eigen::Index c = 0; c < d; ++c)
    for (Eigen::Index r = 0; r < d; ++r)
      if (P(r, c) != Scalar(0))
        M.block(r * n, c * n, n, n) = P(r, c) * Matrix<Scalar>::Identity(n, n);
  return M;
}

/// Dense complex matrix of a monomial element: column i holds
/// exp(2 pi i k_i / m) in row perm[i].
template <typename Real>
Matrix<std::complex<Real>> monomial_matrix(const MonomialElement &g, std::uint32_t root_order) {
  const auto N = static_cast<Eigen::Index>(g.dimension());
  Matrix<std::complex<Real>> M = Matrix<std::complex<Real>>::Zero(N, N);
  for (Eigen::Index i = 0; i < N; ++i) {
    const Real theta = Real(2) * std::numbers::pi_v<Real> *
                       static_cast<Real>(g.exponents[static_cast<std::size_t>(i)]) /
                       static_cast<Real>(root_order);
    M(g.perm[static_cast<std::size_t>(i)], i) = std::polar(Real(1), theta);
  }
  return M;
}

struct Recovered {
  /// Empty when some eigenvalue is farther than the tolerance from eps^a.
  std::optional<EigenExponents> exponents;
  /// Largest |arg(lambda) r / 2pi - nearest integer| seen.
  double max_deviation = 0.0;
};

/// Eigendecomposes M and writes each eigenvalue as eps^a, eps = exp(2 pi i / order).
template <typename Derived>
Recovered recover_exponents(const Eigen::MatrixBase<Derived> &M, std::uint64_t order,
                            double tolerance) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const Matrix<std::complex<Real>> Mc = M.template cast<std::complex<Real>>();
  Eigen::ComplexEigenSolver<Matrix<std::complex<Real>>> solver(Mc, false);

  Recovered out;
  std::vector<std::uint64_t> exps;
  const auto r = static_cast<double>(order);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const auto lambda = solver.eigenvalues()(i);
    double t = static_cast<double>(std::arg(lambda)) * r / (2.0 * std::numbers::pi);
    if (t < 0)
      t += r;
    const double nearest = std::round(t);
    out.max_deviation = std::max(out.max_deviation, std::abs(t - nearest));
    exps.push_back(static_cast<std::uint64_t>(nearest) % order);
  }
  if (out.max_deviation < tolerance)
    out.exponents = EigenExponents(order, std::move(exps));
  return out;
}

} // namespace qsing::oracle
