#include "fhre/observables.hpp"

#include <cmath>
#include <complex>

#include "fhre/errors.hpp"
#include "fhre/jordan_wigner.hpp"

namespace fhre {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

FermionOp cr(int mode) { return {static_cast<std::uint32_t>(mode), true}; }
FermionOp an(int mode) { return {static_cast<std::uint32_t>(mode), false}; }

// n_{i,sigma} as a fermionic term.
FermionTerm number_term(int mode, std::complex<double> coeff) {
  return {{cr(mode), an(mode)}, coeff};
}

double spin_sign(Spin s) { return s == Spin::up ? 1.0 : -1.0; }

void append_site_density(std::vector<FermionTerm>& terms, const HubbardSpec& spec, int site,
                         int orbital, double weight, bool signed_by_spin) {
  for (Spin s : {Spin::up, Spin::down}) {
    const double w = signed_by_spin ? weight * spin_sign(s) : weight;
    terms.push_back(number_term(spec.mode_index(site, orbital, s), {w, 0.0}));
  }
}

struct Momentum {
  double kx;
  double ky;
};

Momentum momentum_of(int kx_index, int ky_index, const HubbardSpec& spec) {
  return {kTwoPi * kx_index / spec.nx, kTwoPi * ky_index / spec.ny};
}

std::complex<double> plane_wave(const Momentum& k, int site, const HubbardSpec& spec) {
  const int x = site % spec.nx;
  const int y = site / spec.nx;
  const double phase = k.kx * x + k.ky * y;
  return {std::cos(phase), std::sin(phase)};
}

double form_factor_value(FormFactor f, const Momentum& k) {
  return f == FormFactor::s ? 1.0 : std::cos(k.kx) - std::cos(k.ky);
}

}  // namespace

void ObservableSpec::validate(const HubbardSpec& spec) const {
  const int n_sites = spec.n_sites();
  auto check_site = [&](int s, const char* which) {
    if (s < 0 || s >= n_sites) {
      throw RangeError(std::string(which) + " site index outside the lattice");
    }
  };
  auto check_momentum = [&]() {
    if (kx_index < 0 || kx_index >= spec.nx || ky_index < 0 || ky_index >= spec.ny) {
      throw RangeError("momentum index outside the Brillouin-zone grid");
    }
  };
  if (orbital < 0 || orbital >= spec.orbitals) throw RangeError("orbital index out of range");
  switch (kind) {
    case ObservableKind::density:
    case ObservableKind::magnetization:
      check_site(site_i, "observable");
      break;
    case ObservableKind::staggered:
      break;
    case ObservableKind::pair_gap:
      break;
    case ObservableKind::density_corr:
    case ObservableKind::magnetization_corr:
      check_site(site_i, "first");
      check_site(site_j, "second");
      break;
    case ObservableKind::lesser_green:
      check_momentum();
      break;
    case ObservableKind::generic:
      if (!custom) throw ContractViolation("generic observable needs a custom operator");
      break;
  }
}

PauliOperatorSum momentum_annihilation(int kx_index, int ky_index, Spin spin,
                                       const HubbardSpec& spec) {
  if (kx_index < 0 || kx_index >= spec.nx || ky_index < 0 || ky_index >= spec.ny) {
    throw RangeError("momentum index outside the Brillouin-zone grid");
  }
  const Momentum k = momentum_of(kx_index, ky_index, spec);
  const double norm = 1.0 / std::sqrt(static_cast<double>(spec.n_sites()));
  PauliAccumulator acc(spec.n_modes());
  for (int site = 0; site < spec.n_sites(); ++site) {
    // c_k carries exp(-i k.r); two Pauli strings per real-space operator.
    const std::complex<double> w = std::conj(plane_wave(k, site, spec)) * norm;
    FermionTerm term{{an(spec.mode_index(site, 0, spin))}, w};
    acc.add(jordan_wigner_term(term, spec.n_modes()));
  }
  return acc.finalize();
}

std::array<PauliOperatorSum, 4> correlator_pieces(int site_i, int site_j,
                                                  const HubbardSpec& spec) {
  std::array<PauliOperatorSum, 4> out;
  int idx = 0;
  for (Spin s1 : {Spin::up, Spin::down}) {
    for (Spin s2 : {Spin::up, Spin::down}) {
      std::vector<FermionTerm> product{
          {{cr(spec.mode_index(site_i, 0, s1)), an(spec.mode_index(site_i, 0, s1)),
            cr(spec.mode_index(site_j, 0, s2)), an(spec.mode_index(site_j, 0, s2))},
           {1.0, 0.0}}};
      out[idx++] = jordan_wigner(product, spec.n_modes());
    }
  }
  return out;
}

PauliOperatorSum total_number_operator(const HubbardSpec& spec) {
  std::vector<FermionTerm> terms;
  for (int mode = 0; mode < spec.n_modes(); ++mode) {
    terms.push_back(number_term(mode, {1.0, 0.0}));
  }
  return jordan_wigner(terms, spec.n_modes());
}

PauliOperatorSum encode_observable(const ObservableSpec& obs, const HubbardSpec& spec) {
  obs.validate(spec);
  const int n = spec.n_modes();
  std::vector<FermionTerm> terms;

  switch (obs.kind) {
    case ObservableKind::density:
      append_site_density(terms, spec, obs.site_i, obs.orbital, 1.0, false);
      return jordan_wigner(terms, n);

    case ObservableKind::magnetization:
      append_site_density(terms, spec, obs.site_i, obs.orbital, 1.0, true);
      return jordan_wigner(terms, n);

    case ObservableKind::staggered: {
      for (int y = 0; y < spec.ny; ++y) {
        for (int x = 0; x < spec.nx; ++x) {
          const double sign = ((x + y) % 2 == 0) ? 1.0 : -1.0;
          append_site_density(terms, spec, spec.site_index(x, y), obs.orbital, sign, true);
        }
      }
      return jordan_wigner(terms, n);
    }

    case ObservableKind::pair_gap: {
      const double norm = 1.0 / spec.n_sites();  // two 1/sqrt(N) momentum transforms squared
      for (int my = 0; my < spec.ny; ++my) {
        for (int mx = 0; mx < spec.nx; ++mx) {
          const Momentum k = momentum_of(mx, my, spec);
          const double phi = form_factor_value(obs.form_factor, k);
          if (phi == 0.0) continue;
          const int mnx = (spec.nx - mx) % spec.nx;
          const int mny = (spec.ny - my) % spec.ny;
          const Momentum mk = momentum_of(mnx, mny, spec);
          // phi(k) c^dag_{k up} c^dag_{-k down} c_{-k down} c_{k up}, expanded
          // over real-space sites with the plane-wave weights.
          for (int j1 = 0; j1 < spec.n_sites(); ++j1) {
            const std::complex<double> w1 = plane_wave(k, j1, spec);
            for (int j2 = 0; j2 < spec.n_sites(); ++j2) {
              const std::complex<double> w2 = plane_wave(mk, j2, spec);
              for (int j3 = 0; j3 < spec.n_sites(); ++j3) {
                const std::complex<double> w3 = std::conj(plane_wave(mk, j3, spec));
                for (int j4 = 0; j4 < spec.n_sites(); ++j4) {
                  const std::complex<double> w4 = std::conj(plane_wave(k, j4, spec));
                  const std::complex<double> coeff =
                      phi * norm * norm * w1 * w2 * w3 * w4;
                  terms.push_back({{cr(spec.mode_index(j1, obs.orbital, Spin::up)),
                                    cr(spec.mode_index(j2, obs.orbital, Spin::down)),
                                    an(spec.mode_index(j3, obs.orbital, Spin::down)),
                                    an(spec.mode_index(j4, obs.orbital, Spin::up))},
                                   coeff});
                }
              }
            }
          }
        }
      }
      return jordan_wigner(terms, n);
    }

    case ObservableKind::density_corr:
    case ObservableKind::magnetization_corr: {
      const bool magnetic = obs.kind == ObservableKind::magnetization_corr;
      for (Spin s1 : {Spin::up, Spin::down}) {
        if (obs.sigma && *obs.sigma != s1) continue;
        for (Spin s2 : {Spin::up, Spin::down}) {
          if (obs.sigma_prime && *obs.sigma_prime != s2) continue;
          const double w = magnetic ? spin_sign(s1) * spin_sign(s2) : 1.0;
          terms.push_back(
              {{cr(spec.mode_index(obs.site_i, obs.orbital, s1)),
                an(spec.mode_index(obs.site_i, obs.orbital, s1)),
                cr(spec.mode_index(obs.site_j, obs.orbital, s2)),
                an(spec.mode_index(obs.site_j, obs.orbital, s2))},
               {w, 0.0}});
        }
      }
      return jordan_wigner(terms, n);
    }

    case ObservableKind::lesser_green:
      return momentum_annihilation(obs.kx_index, obs.ky_index, obs.spin, spec);

    case ObservableKind::generic:
      return *obs.custom;
  }
  throw ContractViolation("unhandled observable kind");
}

ObservableKind observable_kind_from_string(const std::string& name) {
  if (name == "density") return ObservableKind::density;
  if (name == "magnetization") return ObservableKind::magnetization;
  if (name == "staggered") return ObservableKind::staggered;
  if (name == "pair_gap") return ObservableKind::pair_gap;
  if (name == "density_corr") return ObservableKind::density_corr;
  if (name == "magnetization_corr") return ObservableKind::magnetization_corr;
  if (name == "lesser_green") return ObservableKind::lesser_green;
  if (name == "identity" || name == "generic") return ObservableKind::generic;
  throw SpecError("unknown observable \"" + name + "\"");
}

std::string to_string(ObservableKind kind) {
  switch (kind) {
    case ObservableKind::density: return "density";
    case ObservableKind::magnetization: return "magnetization";
    case ObservableKind::staggered: return "staggered";
    case ObservableKind::pair_gap: return "pair_gap";
    case ObservableKind::density_corr: return "density_corr";
    case ObservableKind::magnetization_corr: return "magnetization_corr";
    case ObservableKind::lesser_green: return "lesser_green";
    case ObservableKind::generic: return "generic";
  }
  return "unknown";
}

}  // namespace fhre
