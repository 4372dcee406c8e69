#pragma once

#include <Eigen/Dense>

#include "fhre/pauli.hpp"

namespace fhre {

/// Desk-scale cap on dense realizations: 2^14 is the largest dimension the
/// oracle will materialize.
inline constexpr int kMaxDenseModes = 14;

/// Dense matrix realization of an operator on n_qubits modes.
///
/// Basis convention: mode 0 is the leftmost tensor factor, i.e. the most
/// significant bit of the basis index. Z on mode 0 of a 2-qubit register
/// is diag(1, 1, -1, -1).
struct DenseOperator {
  Eigen::MatrixXcd matrix;
  int n_qubits = 0;

  Eigen::Index dim() const { return matrix.rows(); }
};

/// Materialize a Pauli sum as a dense matrix. Each string contributes one
/// (phase-weighted) entry per column, so the cost is O(L * 2^n).
/// Throws ResourceLimitError above kMaxDenseModes.
DenseOperator realize_dense(const PauliOperatorSum& op);

/// Occupation of mode j in basis state `index` under the convention above.
inline int mode_bit(std::uint64_t index, int mode, int n_qubits) {
  return static_cast<int>((index >> (n_qubits - 1 - mode)) & 1ULL);
}

}  // namespace fhre
