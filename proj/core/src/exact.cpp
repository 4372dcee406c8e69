#include "fhre/exact.hpp"

#include <bit>
#include <cmath>
#include <cstdio>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "fhre/errors.hpp"

namespace fhre {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kDegeneracyTol = 1e-9;

void require_hermitian(const DenseOperator& op) {
  const double defect = (op.matrix - op.matrix.adjoint()).cwiseAbs().maxCoeff();
  if (defect > kHermitianTol) {
    throw ContractViolation("operator is not Hermitian within 1e-10");
  }
}

}  // namespace

GroundStateResult ground_state(const DenseOperator& hamiltonian,
                               std::optional<int> particle_sector) {
  require_hermitian(hamiltonian);
  const Eigen::Index dim = hamiltonian.dim();
  GroundStateResult result;
  result.particle_sector = particle_sector;

  if (!particle_sector) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian.matrix);
    if (solver.info() != Eigen::Success) throw ContractViolation("eigensolver failed");
    const auto& evals = solver.eigenvalues();
    result.energy = evals(0);
    result.state = solver.eigenvectors().col(0);
    result.degenerate = dim > 1 && evals(1) - evals(0) < kDegeneracyTol;
    result.gap = 0.0;
    for (Eigen::Index i = 1; i < dim; ++i) {
      if (evals(i) - evals(0) >= kDegeneracyTol) {
        result.gap = evals(i) - evals(0);
        break;
      }
    }
    return result;
  }

  // Restrict to the fixed-particle-number block: the number operator is
  // diagonal in the occupation basis, so the sector is a basis selection.
  std::vector<Eigen::Index> keep;
  for (Eigen::Index b = 0; b < dim; ++b) {
    if (std::popcount(static_cast<std::uint64_t>(b)) == *particle_sector) keep.push_back(b);
  }
  if (keep.empty()) throw RangeError("particle sector is empty for this register");

  Eigen::MatrixXcd block(keep.size(), keep.size());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    for (std::size_t c = 0; c < keep.size(); ++c) {
      block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          hamiltonian.matrix(keep[r], keep[c]);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block);
  if (solver.info() != Eigen::Success) throw ContractViolation("eigensolver failed");
  const auto& evals = solver.eigenvalues();
  result.energy = evals(0);
  result.state = Eigen::VectorXcd::Zero(dim);
  for (std::size_t r = 0; r < keep.size(); ++r) {
    result.state(keep[r]) = solver.eigenvectors()(static_cast<Eigen::Index>(r), 0);
  }
  const Eigen::Index block_dim = static_cast<Eigen::Index>(keep.size());
  result.degenerate = block_dim > 1 && evals(1) - evals(0) < kDegeneracyTol;
  result.gap = 0.0;
  for (Eigen::Index i = 1; i < block_dim; ++i) {
    if (evals(i) - evals(0) >= kDegeneracyTol) {
      result.gap = evals(i) - evals(0);
      break;
    }
  }
  return result;
}

double static_expectation(const DenseOperator& obs, const Eigen::VectorXcd& state) {
  if (obs.dim() != state.size()) throw ContractViolation("dimension mismatch");
  const std::complex<double> value = state.adjoint() * (obs.matrix * state);
  if (std::abs(value.imag()) > 1e-10) {
    throw ContractViolation("expectation value has a surviving imaginary part");
  }
  return value.real();
}

std::string CorrelationTrace::to_csv() const {
  std::string out = "t,re,im\n";
  char line[96];
  for (std::size_t i = 0; i < times.size(); ++i) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n", times[i], values[i].real(),
                  values[i].imag());
    out += line;
  }
  return out;
}

SpectralEvolution::SpectralEvolution(const DenseOperator& hamiltonian) {
  require_hermitian(hamiltonian);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian.matrix);
  if (solver.info() != Eigen::Success) throw ContractViolation("eigensolver failed");
  evals_ = solver.eigenvalues();
  evecs_ = solver.eigenvectors();
}

std::complex<double> SpectralEvolution::correlation_at(const DenseOperator& a,
                                                       const DenseOperator& b,
                                                       const Eigen::VectorXcd& state,
                                                       double t) const {
  // chi(t) = (e^{-iHt} psi)^dag A (e^{-iHt} B psi)
  const Eigen::VectorXcd phi = evecs_.adjoint() * state;
  const Eigen::VectorXcd bphi = evecs_.adjoint() * (b.matrix * state);
  Eigen::VectorXcd rot_state(phi.size());
  Eigen::VectorXcd rot_bstate(phi.size());
  for (Eigen::Index k = 0; k < phi.size(); ++k) {
    const std::complex<double> phase{std::cos(evals_(k) * t), -std::sin(evals_(k) * t)};
    rot_state(k) = phase * phi(k);
    rot_bstate(k) = phase * bphi(k);
  }
  const Eigen::VectorXcd left = evecs_ * rot_state;
  const Eigen::VectorXcd right = evecs_ * rot_bstate;
  return (left.adjoint() * (a.matrix * right))(0);
}

CorrelationTrace dynamic_correlation(const DenseOperator& a, const DenseOperator& b,
                                     const DenseOperator& hamiltonian,
                                     const GroundStateResult& gs, double dt, double t_max) {
  if (dt <= 0.0) throw ContractViolation("dt must be positive");
  if (t_max < dt) throw ContractViolation("T_max must be at least dt");

  const SpectralEvolution evo(hamiltonian);
  const auto n = static_cast<std::size_t>(std::floor(t_max / dt + 1e-12));

  // chi(t) = sum_{mn} conj(phi_m) A~_{mn} b_n e^{i(E_m - E_n)t}: precompute
  // the weight matrix once, then sweep the grid.
  const Eigen::VectorXcd phi = evo.eigenvectors().adjoint() * gs.state;
  const Eigen::VectorXcd bphi = evo.eigenvectors().adjoint() * (b.matrix * gs.state);
  const Eigen::MatrixXcd a_eig =
      evo.eigenvectors().adjoint() * a.matrix * evo.eigenvectors();
  const Eigen::Index dim = phi.size();
  Eigen::MatrixXcd weights(dim, dim);
  for (Eigen::Index m = 0; m < dim; ++m) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      weights(m, c) = std::conj(phi(m)) * a_eig(m, c) * bphi(c);
    }
  }

  CorrelationTrace trace;
  trace.dt = dt;
  trace.t_max = t_max;
  trace.times.resize(n);
  trace.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) * dt;
    std::complex<double> chi{0.0, 0.0};
    for (Eigen::Index m = 0; m < dim; ++m) {
      for (Eigen::Index c = 0; c < dim; ++c) {
        const double w = (evo.eigenvalues()(m) - evo.eigenvalues()(c)) * t;
        chi += weights(m, c) * std::complex<double>{std::cos(w), std::sin(w)};
      }
    }
    trace.times[i] = t;
    trace.values[i] = chi;
  }
  return trace;
}

double operator_norm(const DenseOperator& op) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(op.matrix);
  return svd.singularValues()(0);
}

}  // namespace fhre
