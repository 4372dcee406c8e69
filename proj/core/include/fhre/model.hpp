#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fhre {

enum class Boundary { open, periodic };

enum class Spin : std::uint8_t { up = 0, down = 1 };

/// Parameters of one Fermi-Hubbard problem instance.
///
/// Base case (orbitals = 1): nearest-neighbour hopping V_nn, on-site
/// repulsion U and chemical potential mu on an nx-by-ny square lattice.
/// With orbitals > 1 the inter-orbital couplings U_prime (density-density),
/// J (spin exchange) and J_prime (pair hopping) become active.
struct HubbardSpec {
  int nx = 2;
  int ny = 2;
  int orbitals = 1;
  double V_nn = 1.0;
  double U = 2.0;
  double U_prime = 0.0;
  double J = 0.0;
  double J_prime = 0.0;
  double mu = 1.0;
  Boundary boundary = Boundary::open;

  /// Optional orbitals-by-orbitals hopping amplitude matrix (row-major).
  /// When absent, hopping is intra-orbital with amplitude V_nn.
  std::optional<std::vector<double>> orbital_hopping;

  int n_sites() const { return nx * ny; }
  int n_modes() const { return nx * ny * orbitals * 2; }
  int n_qubits() const { return n_modes(); }

  /// Row-major site index.
  int site_index(int x, int y) const { return y * nx + x; }

  /// Mode ordering: site (row-major) with orbital minor, spin slowest.
  /// mode = spin * (n_sites * orbitals) + site * orbitals + orbital.
  /// Jordan-Wigner strings depend on this ordering; it is part of the contract.
  int mode_index(int site, int orbital, Spin spin) const {
    return static_cast<int>(spin) * n_sites() * orbitals + site * orbitals + orbital;
  }

  /// Throws SpecError when extents or couplings are inconsistent.
  void validate() const;

  /// Undirected nearest-neighbour site pairs. Periodic wrap bonds are
  /// included once per direction, so a 2-site ring carries a double bond.
  std::vector<std::pair<int, int>> edges() const;
};

/// Parse a problem spec from a JSON document with keys
/// {nx, ny, orbitals, V_nn, U, U_prime, J, J_prime, mu, boundary}.
/// Key names are part of the contract; unknown keys are rejected by name.
HubbardSpec parse_hubbard_spec(const std::string& json_text);

std::string hubbard_spec_to_json(const HubbardSpec& spec);

/// One ladder operator: creation (dagger) or annihilation on a mode.
struct FermionOp {
  std::uint32_t mode = 0;
  bool dagger = false;
};

/// A product of ladder operators with a complex coefficient, kept in the
/// order in which the operators act (leftmost factor first).
struct FermionTerm {
  std::vector<FermionOp> ops;
  std::complex<double> coefficient{1.0, 0.0};

  FermionTerm() = default;
  FermionTerm(std::vector<FermionOp> o, std::complex<double> c)
      : ops(std::move(o)), coefficient(c) {}

  /// Adjoint: reversed operator order, daggers flipped, coefficient conjugated.
  FermionTerm adjoint() const;
};

/// Enumerate every Hamiltonian term for the given instance: hopping with
/// both directions stored explicitly (h.c. is not implicit), on-site U,
/// chemical potential, and, for orbitals > 1, the U', J and J' couplings.
std::vector<FermionTerm> build_hamiltonian(const HubbardSpec& spec);

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

}  // namespace fhre
