#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "fhre/dense.hpp"

namespace fhre {

struct GroundStateResult {
  double energy = 0.0;
  Eigen::VectorXcd state;   // unit norm, full 2^n dimension
  bool degenerate = false;  // lowest level within 1e-9 of the next
  double gap = 0.0;         // to the next distinct eigenvalue
  std::optional<int> particle_sector;
};

/// Lowest eigenpair of a Hermitian dense operator, optionally restricted to
/// a fixed particle-number sector (restriction by basis projection, so the
/// sector result is exact). Ties are broken deterministically by taking the
/// first eigenvector of the ascending-ordered solve.
GroundStateResult ground_state(const DenseOperator& hamiltonian,
                               std::optional<int> particle_sector = std::nullopt);

/// <state|obs|state>; throws ContractViolation if the imaginary part
/// survives above 1e-10 (the observable was not Hermitian).
double static_expectation(const DenseOperator& obs, const Eigen::VectorXcd& state);

/// chi(t) = <psi| A(t) B(0) |psi> with A(t) = e^{iHt} A e^{-iHt}, evaluated
/// through the full eigendecomposition of H. The trace is a finite sum of
/// complex exponentials whose frequencies are eigenvalue differences.
struct CorrelationTrace {
  std::vector<double> times;
  std::vector<std::complex<double>> values;
  double dt = 0.0;
  double t_max = 0.0;

  /// CSV with header "t,re,im".
  std::string to_csv() const;
};

/// Reusable eigendecomposition of a Hamiltonian for correlation evaluation.
class SpectralEvolution {
 public:
  explicit SpectralEvolution(const DenseOperator& hamiltonian);

  /// Single-point chi(t); t may be negative.
  std::complex<double> correlation_at(const DenseOperator& a, const DenseOperator& b,
                                      const Eigen::VectorXcd& state, double t) const;

  const Eigen::VectorXd& eigenvalues() const { return evals_; }
  const Eigen::MatrixXcd& eigenvectors() const { return evecs_; }

 private:
  Eigen::VectorXd evals_;
  Eigen::MatrixXcd evecs_;
};

/// Sampled chi(t) on the uniform grid t_n = n*dt, n = 0 .. floor(T_max/dt)-1
/// (half-open [0, T_max), matching the signal-lab sampling convention).
CorrelationTrace dynamic_correlation(const DenseOperator& a, const DenseOperator& b,
                                     const DenseOperator& hamiltonian,
                                     const GroundStateResult& gs, double dt, double t_max);

/// Largest singular value; the |chi| bound for unit-norm states.
double operator_norm(const DenseOperator& op);

}  // namespace fhre
