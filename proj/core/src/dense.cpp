#include "fhre/dense.hpp"

#include "fhre/errors.hpp"

namespace fhre {

DenseOperator realize_dense(const PauliOperatorSum& op) {
  const int n = op.n_qubits();
  if (n > kMaxDenseModes) {
    throw ResourceLimitError("dense realization capped at 14 modes (2^14 dimension)");
  }
  const std::uint64_t dim = 1ULL << n;
  DenseOperator out;
  out.n_qubits = n;
  out.matrix = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                      static_cast<Eigen::Index>(dim));

  for (const auto& term : op.terms()) {
    // Precompute flip mask and per-letter action; each string touches one
    // entry per column.
    std::uint64_t flip_mask = 0;
    for (int q = 0; q < n; ++q) {
      const char letter = term.letters[static_cast<std::size_t>(q)];
      if (letter == 'X' || letter == 'Y') flip_mask |= 1ULL << (n - 1 - q);
    }
    for (std::uint64_t in = 0; in < dim; ++in) {
      std::complex<double> amp = term.coefficient;
      for (int q = 0; q < n; ++q) {
        const char letter = term.letters[static_cast<std::size_t>(q)];
        if (letter == 'I' || letter == 'X') continue;
        const int bit = mode_bit(in, q, n);
        if (letter == 'Z') {
          if (bit) amp = -amp;
        } else {  // Y: |0> -> i|1>, |1> -> -i|0>
          amp *= bit ? std::complex<double>{0.0, -1.0} : std::complex<double>{0.0, 1.0};
        }
      }
      const std::uint64_t outIdx = in ^ flip_mask;
      out.matrix(static_cast<Eigen::Index>(outIdx), static_cast<Eigen::Index>(in)) += amp;
    }
  }
  return out;
}

}  // namespace fhre
