#include "fhre/pauli.hpp"

#include <algorithm>
#include <cmath>

#include "fhre/errors.hpp"

namespace fhre {

namespace {

const std::complex<double> kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

double one_norm_nonidentity(const std::vector<PauliString>& terms) {
  double alpha = 0.0;
  for (const auto& t : terms) {
    if (!t.is_identity()) alpha += std::abs(t.coefficient);
  }
  return alpha;
}

}  // namespace

PauliOperatorSum::PauliOperatorSum(int n_qubits, std::vector<PauliString> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (static_cast<int>(t.letters.size()) != n_qubits_) {
      throw ContractViolation("Pauli string length does not match qubit count");
    }
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const PauliString& a, const PauliString& b) { return a.letters < b.letters; });
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (terms_[i].letters == terms_[i - 1].letters) {
      throw ContractViolation("duplicate Pauli pattern in operator sum");
    }
  }
  alpha_ = one_norm_nonidentity(terms_);
}

std::complex<double> PauliOperatorSum::identity_coefficient() const {
  for (const auto& t : terms_) {
    if (t.is_identity()) return t.coefficient;
  }
  return {0.0, 0.0};
}

bool PauliOperatorSum::is_hermitian(double tol) const {
  for (const auto& t : terms_) {
    if (std::abs(t.coefficient.imag()) > tol) return false;
  }
  return true;
}

PauliOperatorSum PauliOperatorSum::adjoint() const {
  std::vector<PauliString> out = terms_;
  for (auto& t : out) t.coefficient = std::conj(t.coefficient);
  return PauliOperatorSum(n_qubits_, std::move(out));
}

PauliOperatorSum PauliOperatorSum::scaled(std::complex<double> factor) const {
  std::vector<PauliString> out = terms_;
  for (auto& t : out) t.coefficient *= factor;
  return PauliOperatorSum(n_qubits_, std::move(out));
}

std::vector<double> PauliOperatorSum::coefficient_magnitudes() const {
  std::vector<double> mags;
  mags.reserve(terms_.size());
  for (const auto& t : terms_) mags.push_back(std::abs(t.coefficient));
  std::sort(mags.begin(), mags.end());
  return mags;
}

void PauliAccumulator::add(const std::string& letters, std::complex<double> coefficient) {
  if (static_cast<int>(letters.size()) != n_qubits_) {
    throw ContractViolation("Pauli string length does not match accumulator width");
  }
  acc_[letters] += coefficient;
}

void PauliAccumulator::add(const PauliOperatorSum& sum, std::complex<double> factor) {
  for (const auto& t : sum.terms()) add(t.letters, t.coefficient * factor);
}

PauliOperatorSum PauliAccumulator::finalize(double drop_tol) const {
  std::vector<PauliString> terms;
  terms.reserve(acc_.size());
  for (const auto& [letters, coeff] : acc_) {
    if (std::abs(coeff) < drop_tol) continue;
    terms.push_back({letters, coeff});
  }
  return PauliOperatorSum(n_qubits_, std::move(terms));
}

LetterProduct multiply_letters(char a, char b) {
  if (a == 'I') return {b, 0};
  if (b == 'I') return {a, 0};
  if (a == b) return {'I', 0};
  // Cyclic rule: XY = iZ, YZ = iX, ZX = iY; reversed order flips the sign.
  switch (a) {
    case 'X':
      return b == 'Y' ? LetterProduct{'Z', 1} : LetterProduct{'Y', 3};
    case 'Y':
      return b == 'Z' ? LetterProduct{'X', 1} : LetterProduct{'Z', 3};
    case 'Z':
      return b == 'X' ? LetterProduct{'Y', 1} : LetterProduct{'X', 3};
    default:
      throw ContractViolation("invalid Pauli letter");
  }
}

PauliString multiply_strings(const PauliString& left, const PauliString& right) {
  if (left.letters.size() != right.letters.size()) {
    throw ContractViolation("Pauli string lengths differ");
  }
  PauliString out;
  out.letters.resize(left.letters.size());
  int phase = 0;
  for (std::size_t q = 0; q < left.letters.size(); ++q) {
    const LetterProduct p = multiply_letters(left.letters[q], right.letters[q]);
    out.letters[q] = p.letter;
    phase = (phase + p.phase_power_of_i) & 3;
  }
  out.coefficient = left.coefficient * right.coefficient * kPhases[phase];
  return out;
}

PauliOperatorSum multiply_sums(const PauliOperatorSum& left, const PauliOperatorSum& right,
                               double drop_tol) {
  if (left.n_qubits() != right.n_qubits()) {
    throw ContractViolation("operator widths differ");
  }
  PauliAccumulator acc(left.n_qubits());
  for (const auto& l : left.terms()) {
    for (const auto& r : right.terms()) {
      const PauliString p = multiply_strings(l, r);
      acc.add(p.letters, p.coefficient);
    }
  }
  return acc.finalize(drop_tol);
}

}  // namespace fhre
