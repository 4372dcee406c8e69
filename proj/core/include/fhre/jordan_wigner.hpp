#pragma once

#include <vector>

#include "fhre/model.hpp"
#include "fhre/pauli.hpp"

namespace fhre {

/// Jordan-Wigner image of a single ladder operator:
///   c^dag_j = Z_0 ... Z_{j-1} (X_j - iY_j)/2
///   c_j     = Z_0 ... Z_{j-1} (X_j + iY_j)/2
/// Two strings, coefficients +-1/2 and -+i/2.
PauliOperatorSum jordan_wigner_ladder(FermionOp op, int n_modes);

/// Map a product of ladder operators (leftmost factor first).
PauliOperatorSum jordan_wigner_term(const FermionTerm& term, int n_modes);

/// Map a sum of fermionic terms, merging like Pauli patterns. Coefficients
/// with magnitude below drop_tol are removed so spurious terms do not
/// inflate alpha.
PauliOperatorSum jordan_wigner(const std::vector<FermionTerm>& terms, int n_modes,
                               double drop_tol = 1e-12);

}  // namespace fhre
