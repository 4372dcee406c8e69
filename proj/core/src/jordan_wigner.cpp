#include "fhre/jordan_wigner.hpp"

#include <complex>

#include "fhre/errors.hpp"

namespace fhre {

PauliOperatorSum jordan_wigner_ladder(FermionOp op, int n_modes) {
  if (static_cast<int>(op.mode) >= n_modes) {
    throw ContractViolation("mode index outside mode count");
  }
  std::string x_string(static_cast<std::size_t>(n_modes), 'I');
  for (std::uint32_t k = 0; k < op.mode; ++k) x_string[k] = 'Z';
  std::string y_string = x_string;
  x_string[op.mode] = 'X';
  y_string[op.mode] = 'Y';

  // c^dag = (X - iY)/2 behind the parity chain; c flips the sign of iY.
  const std::complex<double> y_coeff =
      op.dagger ? std::complex<double>{0.0, -0.5} : std::complex<double>{0.0, 0.5};
  std::vector<PauliString> terms;
  terms.push_back({std::move(x_string), {0.5, 0.0}});
  terms.push_back({std::move(y_string), y_coeff});
  return PauliOperatorSum(n_modes, std::move(terms));
}

PauliOperatorSum jordan_wigner_term(const FermionTerm& term, int n_modes) {
  std::vector<PauliString> identity{{std::string(static_cast<std::size_t>(n_modes), 'I'),
                                     term.coefficient}};
  PauliOperatorSum product(n_modes, std::move(identity));
  for (const FermionOp& op : term.ops) {
    product = multiply_sums(product, jordan_wigner_ladder(op, n_modes), 0.0);
  }
  return product;
}

PauliOperatorSum jordan_wigner(const std::vector<FermionTerm>& terms, int n_modes,
                               double drop_tol) {
  PauliAccumulator acc(n_modes);
  for (const FermionTerm& term : terms) {
    acc.add(jordan_wigner_term(term, n_modes));
  }
  return acc.finalize(drop_tol);
}

}  // namespace fhre
