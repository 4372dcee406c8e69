#pragma once

#include <array>
#include <optional>
#include <string>

#include "fhre/model.hpp"
#include "fhre/pauli.hpp"

namespace fhre {

enum class ObservableKind {
  density,             // n_i
  magnetization,       // m_i = n_{i,up} - n_{i,down}
  staggered,           // sum_i (-1)^(x+y) m_i
  pair_gap,            // sum_k phi_l(k) c^dag_{k up} c^dag_{-k down} c_{-k down} c_{k up}
  density_corr,        // n_i n_j (or one W_{ij,sigma,sigma'} piece when spins set)
  magnetization_corr,  // m_i m_j
  lesser_green,        // annihilation operator c_{k sigma}
  generic,             // caller-supplied Pauli operator, passed through
};

enum class FormFactor { s, d };

struct ObservableSpec {
  ObservableKind kind = ObservableKind::density;
  int site_i = 0;
  int site_j = 0;
  int orbital = 0;
  int kx_index = 0;
  int ky_index = 0;
  FormFactor form_factor = FormFactor::s;
  Spin spin = Spin::up;
  /// When set on density_corr / magnetization_corr, select the single
  /// projector piece W_{ij,sigma,sigma'} instead of the full spin sum.
  std::optional<Spin> sigma;
  std::optional<Spin> sigma_prime;
  /// Payload for kind == generic.
  std::optional<PauliOperatorSum> custom;

  void validate(const HubbardSpec& spec) const;
};

/// Encode an observable as a Pauli operator sum under the same mode
/// ordering as the Hamiltonian. Lesser-Green encodings are intentionally
/// non-Hermitian (they encode the bare annihilation operator; pair with
/// adjoint() for the A side of a correlation function).
PauliOperatorSum encode_observable(const ObservableSpec& obs, const HubbardSpec& spec);

/// The four projector pieces W_{ij,sigma,sigma'} = n_{i,sigma} n_{j,sigma'}
/// entering the density/magnetization correlators, in the spin order
/// (uu, ud, du, dd).
std::array<PauliOperatorSum, 4> correlator_pieces(int site_i, int site_j,
                                                  const HubbardSpec& spec);

/// Encoded total particle-number operator, for symmetry checks.
PauliOperatorSum total_number_operator(const HubbardSpec& spec);

/// Momentum-space annihilation operator c_{k sigma} =
/// (1/sqrt(N)) sum_j exp(-i k.r_j) c_{j sigma} with k = 2 pi (mx/nx, my/ny).
PauliOperatorSum momentum_annihilation(int kx_index, int ky_index, Spin spin,
                                       const HubbardSpec& spec);

ObservableKind observable_kind_from_string(const std::string& name);
std::string to_string(ObservableKind kind);

}  // namespace fhre
