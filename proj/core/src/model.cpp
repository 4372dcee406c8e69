#include "fhre/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include "fhre/errors.hpp"

namespace fhre {

void HubbardSpec::validate() const {
  if (nx < 1 || ny < 1) throw SpecError("lattice extents must be positive");
  if (orbitals < 1) throw SpecError("orbitals must be positive");
  if (orbitals == 1 && (U_prime != 0.0 || J != 0.0 || J_prime != 0.0)) {
    throw SpecError("U_prime, J, J_prime must be zero for a single-orbital model");
  }
  if (orbital_hopping) {
    const std::size_t expected = static_cast<std::size_t>(orbitals) * orbitals;
    if (orbital_hopping->size() != expected) {
      throw SpecError("orbital_hopping must be an orbitals x orbitals matrix");
    }
  }
  if (!std::isfinite(V_nn) || !std::isfinite(U) || !std::isfinite(mu)) {
    throw SpecError("couplings must be finite");
  }
}

std::vector<std::pair<int, int>> HubbardSpec::edges() const {
  std::vector<std::pair<int, int>> result;
  for (int y = 0; y < ny; ++y) {
    for (int x = 0; x < nx; ++x) {
      const int here = site_index(x, y);
      if (nx > 1) {
        if (x + 1 < nx) {
          result.emplace_back(here, site_index(x + 1, y));
        } else if (boundary == Boundary::periodic) {
          const int wrapped = site_index(0, y);
          if (wrapped != here) result.emplace_back(here, wrapped);
        }
      }
      if (ny > 1) {
        if (y + 1 < ny) {
          result.emplace_back(here, site_index(x, y + 1));
        } else if (boundary == Boundary::periodic) {
          const int wrapped = site_index(x, 0);
          if (wrapped != here) result.emplace_back(here, wrapped);
        }
      }
    }
  }
  return result;
}

FermionTerm FermionTerm::adjoint() const {
  FermionTerm out;
  out.coefficient = std::conj(coefficient);
  out.ops.reserve(ops.size());
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    out.ops.push_back({it->mode, !it->dagger});
  }
  return out;
}

namespace {

FermionOp cr(int mode) { return {static_cast<std::uint32_t>(mode), true}; }
FermionOp an(int mode) { return {static_cast<std::uint32_t>(mode), false}; }

double hopping_amplitude(const HubbardSpec& spec, int orb_a, int orb_b) {
  if (spec.orbital_hopping) {
    return (*spec.orbital_hopping)[static_cast<std::size_t>(orb_a) * spec.orbitals + orb_b];
  }
  return orb_a == orb_b ? spec.V_nn : 0.0;
}

}  // namespace

std::vector<FermionTerm> build_hamiltonian(const HubbardSpec& spec) {
  spec.validate();
  std::vector<FermionTerm> terms;
  const auto bonds = spec.edges();

  // Kinetic energy: -V c^dag_i c_j, both directions explicit.
  for (const auto& [i, j] : bonds) {
    for (int la = 0; la < spec.orbitals; ++la) {
      for (int lb = 0; lb < spec.orbitals; ++lb) {
        const double v = hopping_amplitude(spec, la, lb);
        if (v == 0.0) continue;
        for (Spin s : {Spin::up, Spin::down}) {
          const int a = spec.mode_index(i, la, s);
          const int b = spec.mode_index(j, lb, s);
          terms.push_back({{cr(a), an(b)}, {-v, 0.0}});
          terms.push_back({{cr(b), an(a)}, {-v, 0.0}});
        }
      }
    }
  }

  for (int site = 0; site < spec.n_sites(); ++site) {
    for (int l = 0; l < spec.orbitals; ++l) {
      const int up = spec.mode_index(site, l, Spin::up);
      const int dn = spec.mode_index(site, l, Spin::down);
      // Intra-orbital repulsion U n_up n_down.
      if (spec.U != 0.0) {
        terms.push_back({{cr(up), an(up), cr(dn), an(dn)}, {spec.U, 0.0}});
      }
      // Chemical potential -mu n.
      if (spec.mu != 0.0) {
        terms.push_back({{cr(up), an(up)}, {-spec.mu, 0.0}});
        terms.push_back({{cr(dn), an(dn)}, {-spec.mu, 0.0}});
      }
    }

    if (spec.orbitals < 2) continue;
    for (int l = 0; l < spec.orbitals; ++l) {
      for (int lp = 0; lp < l; ++lp) {
        // Inter-orbital repulsion U' n_l n_l' (n summed over spin).
        if (spec.U_prime != 0.0) {
          for (Spin s1 : {Spin::up, Spin::down}) {
            for (Spin s2 : {Spin::up, Spin::down}) {
              const int a = spec.mode_index(site, l, s1);
              const int b = spec.mode_index(site, lp, s2);
              terms.push_back({{cr(a), an(a), cr(b), an(b)}, {spec.U_prime, 0.0}});
            }
          }
        }
        // Hund coupling J c^dag_{l s} c^dag_{l' s'} c_{l s'} c_{l' s}.
        if (spec.J != 0.0) {
          for (Spin s1 : {Spin::up, Spin::down}) {
            for (Spin s2 : {Spin::up, Spin::down}) {
              terms.push_back({{cr(spec.mode_index(site, l, s1)),
                                cr(spec.mode_index(site, lp, s2)),
                                an(spec.mode_index(site, l, s2)),
                                an(spec.mode_index(site, lp, s1))},
                               {spec.J, 0.0}});
            }
          }
        }
      }
      // Pair hopping J' c^dag_{l up} c^dag_{l down} c_{l' down} c_{l' up}, l != l'.
      if (spec.J_prime != 0.0) {
        for (int lp = 0; lp < spec.orbitals; ++lp) {
          if (lp == l) continue;
          terms.push_back({{cr(spec.mode_index(site, l, Spin::up)),
                            cr(spec.mode_index(site, l, Spin::down)),
                            an(spec.mode_index(site, lp, Spin::down)),
                            an(spec.mode_index(site, lp, Spin::up))},
                           {spec.J_prime, 0.0}});
        }
      }
    }
  }
  return terms;
}

std::string to_string(Boundary b) { return b == Boundary::open ? "open" : "periodic"; }

Boundary boundary_from_string(const std::string& s) {
  if (s == "open") return Boundary::open;
  if (s == "periodic") return Boundary::periodic;
  throw SpecError("boundary must be \"open\" or \"periodic\", got \"" + s + "\"");
}

namespace {

const std::set<std::string> kSpecKeys = {"schema_version", "nx", "ny",      "orbitals",
                                         "V_nn",           "U",  "U_prime", "J",
                                         "J_prime",        "mu", "boundary", "orbital_hopping"};

}  // namespace

HubbardSpec parse_hubbard_spec(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError(std::string("problem spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SpecError("problem spec must be a JSON object");

  for (const auto& [key, value] : doc.items()) {
    if (!kSpecKeys.count(key)) throw SpecError("unknown problem-spec key \"" + key + "\"");
  }
  for (const char* required : {"nx", "ny", "V_nn", "U", "mu"}) {
    if (!doc.contains(required)) {
      throw SpecError(std::string("problem spec is missing key \"") + required + "\"");
    }
  }

  HubbardSpec spec;
  try {
    spec.nx = doc.at("nx").get<int>();
    spec.ny = doc.at("ny").get<int>();
    spec.orbitals = doc.value("orbitals", 1);
    spec.V_nn = doc.at("V_nn").get<double>();
    spec.U = doc.at("U").get<double>();
    spec.U_prime = doc.value("U_prime", 0.0);
    spec.J = doc.value("J", 0.0);
    spec.J_prime = doc.value("J_prime", 0.0);
    spec.mu = doc.at("mu").get<double>();
    spec.boundary = boundary_from_string(doc.value("boundary", std::string("open")));
    if (doc.contains("orbital_hopping")) {
      spec.orbital_hopping = doc.at("orbital_hopping").get<std::vector<double>>();
    }
  } catch (const nlohmann::json::type_error& e) {
    throw SpecError(std::string("problem-spec value has the wrong type: ") + e.what());
  }
  spec.validate();
  return spec;
}

std::string hubbard_spec_to_json(const HubbardSpec& spec) {
  nlohmann::json doc;
  doc["schema_version"] = 1;
  doc["nx"] = spec.nx;
  doc["ny"] = spec.ny;
  doc["orbitals"] = spec.orbitals;
  doc["V_nn"] = spec.V_nn;
  doc["U"] = spec.U;
  doc["U_prime"] = spec.U_prime;
  doc["J"] = spec.J;
  doc["J_prime"] = spec.J_prime;
  doc["mu"] = spec.mu;
  doc["boundary"] = to_string(spec.boundary);
  if (spec.orbital_hopping) doc["orbital_hopping"] = *spec.orbital_hopping;
  return doc.dump(2) + "\n";
}

}  // namespace fhre
