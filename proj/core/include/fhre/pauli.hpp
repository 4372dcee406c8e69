#pragma once

#include <complex>
#include <string>
#include <unordered_map>
#include <vector>

namespace fhre {

/// One Pauli string: a letter in {I,X,Y,Z} per qubit plus a complex
/// coefficient. Letters are stored as the characters 'I','X','Y','Z'.
struct PauliString {
  std::string letters;
  std::complex<double> coefficient{0.0, 0.0};

  bool is_identity() const { return letters.find_first_not_of('I') == std::string::npos; }
};

/// Deduplicated, deterministically ordered sum of Pauli strings.
///
/// alpha is the coefficient 1-norm over non-identity strings, the
/// subnormalization a block encoding of this operator would carry.
class PauliOperatorSum {
 public:
  PauliOperatorSum() = default;
  PauliOperatorSum(int n_qubits, std::vector<PauliString> terms);

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliString>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  double alpha() const { return alpha_; }

  /// Coefficient of the all-identity string (0 when absent).
  std::complex<double> identity_coefficient() const;

  /// True when every coefficient is real to within tol (Pauli strings are
  /// self-adjoint, so the sum is Hermitian iff all coefficients are real).
  bool is_hermitian(double tol = 1e-12) const;

  PauliOperatorSum adjoint() const;

  PauliOperatorSum scaled(std::complex<double> factor) const;

  /// Sorted |coefficient| multiset; equal for relabeled but equivalent models.
  std::vector<double> coefficient_magnitudes() const;

 private:
  int n_qubits_ = 0;
  std::vector<PauliString> terms_;
  double alpha_ = 0.0;
};

/// Accumulates letter-pattern -> coefficient, merging like strings.
/// finalize() drops coefficients below drop_tol and sorts lexicographically
/// so repeated runs produce byte-identical serializations.
class PauliAccumulator {
 public:
  explicit PauliAccumulator(int n_qubits) : n_qubits_(n_qubits) {}

  void add(const std::string& letters, std::complex<double> coefficient);
  void add(const PauliOperatorSum& sum, std::complex<double> factor = {1.0, 0.0});

  int n_qubits() const { return n_qubits_; }

  PauliOperatorSum finalize(double drop_tol = 1e-12) const;

 private:
  int n_qubits_;
  std::unordered_map<std::string, std::complex<double>> acc_;
};

/// Single-qubit product a*b = phase * letter with phase in {1, i, -1, -i}
/// encoded as a power of i.
struct LetterProduct {
  char letter;
  int phase_power_of_i;  // 0..3
};
LetterProduct multiply_letters(char a, char b);

/// String product (left * right) for equal-length strings.
PauliString multiply_strings(const PauliString& left, const PauliString& right);

/// left * right as an operator product, term by term, like terms merged.
PauliOperatorSum multiply_sums(const PauliOperatorSum& left, const PauliOperatorSum& right,
                               double drop_tol = 1e-12);

}  // namespace fhre
