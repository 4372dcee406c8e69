#include <doctest.h>

#include <algorithm>
#include <complex>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "fhre/dense.hpp"
#include "fhre/errors.hpp"
#include "fhre/jordan_wigner.hpp"
#include "fhre/model.hpp"
#include "fhre/observables.hpp"
#include "fhre/pauli.hpp"

using namespace fhre;

namespace {

// ---------------------------------------------------------------------------
// Independent Jordan-Wigner oracle in exact rational arithmetic. Expands each
// ladder operator symbolically with coefficients held as rational complex
// numbers, merges like strings, and reports the exact 1-norm. Shares no code
// with the production mapping.
// ---------------------------------------------------------------------------

struct Rat {
  long long num = 0;
  long long den = 1;

  static long long gcd_ll(long long a, long long b) {
    while (b != 0) {
      const long long t = a % b;
      a = b;
      b = t;
    }
    return a < 0 ? -a : a;
  }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = gcd_ll(num == 0 ? 1 : num, den);
    num /= g;
    den /= g;
  }

  Rat operator+(const Rat& o) const {
    Rat r{num * o.den + o.num * den, den * o.den};
    r.normalize();
    return r;
  }
  Rat operator*(const Rat& o) const {
    Rat r{num * o.num, den * o.den};
    r.normalize();
    return r;
  }
  Rat operator-() const { return {-num, den}; }
  bool is_zero() const { return num == 0; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  Rat abs() const { return {num < 0 ? -num : num, den}; }
};

struct CRat {
  Rat re, im;
  CRat operator+(const CRat& o) const { return {re + o.re, im + o.im}; }
  CRat operator*(const CRat& o) const {
    return {re * o.re + (-(im * o.im)), re * o.im + im * o.re};
  }
  CRat times_i_power(int k) const {
    switch (k & 3) {
      case 0: return *this;
      case 1: return {-im, re};       // * i
      case 2: return {-re, -im};      // * -1
      default: return {im, -re};      // * -i
    }
  }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

struct OracleTerm {
  std::vector<std::pair<int, bool>> ops;  // (mode, dagger)
  Rat coeff;                              // real rational coefficient
};

char oracle_mul(char a, char b, int& phase) {
  if (a == 'I') return b;
  if (b == 'I') return a;
  if (a == b) return 'I';
  if (a == 'X' && b == 'Y') { phase += 1; return 'Z'; }
  if (a == 'Y' && b == 'X') { phase += 3; return 'Z'; }
  if (a == 'Y' && b == 'Z') { phase += 1; return 'X'; }
  if (a == 'Z' && b == 'Y') { phase += 3; return 'X'; }
  if (a == 'Z' && b == 'X') { phase += 1; return 'Y'; }
  phase += 3;  // X * Z
  return 'Y';
}

std::map<std::string, CRat> oracle_expand(const std::vector<OracleTerm>& terms, int n_modes) {
  std::map<std::string, CRat> acc;
  const Rat half{1, 2};
  for (const OracleTerm& term : terms) {
    std::map<std::string, CRat> current;
    current[std::string(static_cast<std::size_t>(n_modes), 'I')] = {term.coeff, Rat{0, 1}};
    for (const auto& [mode, dagger] : term.ops) {
      // Ladder expansion: Z-chain then X or Y on the mode.
      std::string xs(static_cast<std::size_t>(n_modes), 'I');
      for (int k = 0; k < mode; ++k) xs[static_cast<std::size_t>(k)] = 'Z';
      std::string ys = xs;
      xs[static_cast<std::size_t>(mode)] = 'X';
      ys[static_cast<std::size_t>(mode)] = 'Y';
      const CRat x_coeff{half, Rat{0, 1}};
      const CRat y_coeff{Rat{0, 1}, dagger ? -half : half};

      std::map<std::string, CRat> next;
      for (const auto& [letters, coeff] : current) {
        for (const auto& [ladder, lcoeff] :
             {std::pair{xs, x_coeff}, std::pair{ys, y_coeff}}) {
          std::string prod(static_cast<std::size_t>(n_modes), 'I');
          int phase = 0;
          for (int q = 0; q < n_modes; ++q) {
            prod[static_cast<std::size_t>(q)] =
                oracle_mul(letters[static_cast<std::size_t>(q)],
                           ladder[static_cast<std::size_t>(q)], phase);
          }
          const CRat add = (coeff * lcoeff).times_i_power(phase);
          auto it = next.find(prod);
          if (it == next.end()) {
            next.emplace(prod, add);
          } else {
            it->second = it->second + add;
          }
        }
      }
      current = std::move(next);
    }
    for (const auto& [letters, coeff] : current) {
      auto it = acc.find(letters);
      if (it == acc.end()) {
        acc.emplace(letters, coeff);
      } else {
        it->second = it->second + coeff;
      }
    }
  }
  return acc;
}

// Exact alpha (1-norm over non-identity strings) for real-coefficient sums.
Rat oracle_alpha(const std::map<std::string, CRat>& acc) {
  Rat alpha{0, 1};
  for (const auto& [letters, coeff] : acc) {
    REQUIRE(coeff.im.is_zero());
    if (letters.find_first_not_of('I') == std::string::npos) continue;
    alpha = alpha + coeff.re.abs();
  }
  return alpha;
}

HubbardSpec two_site_spec() {
  HubbardSpec spec;
  spec.nx = 2;
  spec.ny = 1;
  spec.V_nn = 1.0;
  spec.U = 2.0;
  spec.mu = 1.0;
  return spec;
}

bool has_xy(const PauliString& s) {
  return s.letters.find('X') != std::string::npos || s.letters.find('Y') != std::string::npos;
}

}  // namespace

TEST_SUITE_BEGIN("model_core");

TEST_CASE("two-site hamiltonian term census") {
  const auto terms = build_hamiltonian(two_site_spec());
  int hopping = 0, onsite = 0, chemical = 0;
  for (const auto& t : terms) {
    if (t.ops.size() == 4) {
      ++onsite;
    } else if (t.ops[0].mode == t.ops[1].mode) {
      ++chemical;
    } else {
      ++hopping;
    }
  }
  CHECK(hopping == 4);   // 2 spins x 2 directions
  CHECK(onsite == 2);    // one U term per site
  CHECK(chemical == 4);  // mu on every mode
}

TEST_CASE("single site has no hopping") {
  HubbardSpec spec = two_site_spec();
  spec.nx = 1;
  for (const auto& t : build_hamiltonian(spec)) {
    CHECK(t.ops.size() >= 2);
    if (t.ops.size() == 2) CHECK(t.ops[0].mode == t.ops[1].mode);
  }
}

TEST_CASE("2x2 open lattice has 4 edges and 16 hopping terms") {
  HubbardSpec spec = two_site_spec();
  spec.nx = 2;
  spec.ny = 2;
  CHECK(spec.edges().size() == 4);
  int hopping = 0;
  for (const auto& t : build_hamiltonian(spec)) {
    if (t.ops.size() == 2 && t.ops[0].mode != t.ops[1].mode) ++hopping;
  }
  CHECK(hopping == 16);
}

TEST_CASE("invalid specs are rejected") {
  HubbardSpec spec = two_site_spec();
  spec.nx = 0;
  CHECK_THROWS_AS(build_hamiltonian(spec), SpecError);
  spec = two_site_spec();
  spec.U_prime = 1.0;  // single orbital model
  CHECK_THROWS_AS(spec.validate(), SpecError);
}

TEST_CASE("number operator maps to (I - Z)/2") {
  const std::vector<FermionTerm> n0{{{{0, true}, {0, false}}, {1.0, 0.0}}};
  const PauliOperatorSum sum = jordan_wigner(n0, 1);
  REQUIRE(sum.term_count() == 2);
  for (const auto& t : sum.terms()) {
    if (t.letters == "I") {
      CHECK(t.coefficient.real() == doctest::Approx(0.5).epsilon(1e-14));
    } else {
      CHECK(t.letters == "Z");
      CHECK(t.coefficient.real() == doctest::Approx(-0.5).epsilon(1e-14));
    }
  }
}

TEST_CASE("two-site hopping becomes XX/YY strings at -1/2") {
  const auto sum = jordan_wigner(build_hamiltonian(two_site_spec()), 4);
  int xy_strings = 0;
  for (const auto& t : sum.terms()) {
    if (!has_xy(t)) continue;
    ++xy_strings;
    CHECK(t.coefficient.real() == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(t.coefficient.imag() == doctest::Approx(0.0).epsilon(1e-14));
  }
  CHECK(xy_strings == 4);
}

TEST_CASE("alpha of the two-site model matches the exact rational oracle") {
  // Hand-enumerated term list, independent of build_hamiltonian: modes are
  // (site0 up, site1 up, site0 down, site1 down) = (0, 1, 2, 3).
  std::vector<OracleTerm> terms;
  const Rat mV{-1, 1}, U{2, 1}, mMu{-1, 1};
  for (const auto& [a, b] : {std::pair{0, 1}, std::pair{1, 0}, std::pair{2, 3}, std::pair{3, 2}}) {
    terms.push_back({{{a, true}, {b, false}}, mV});
  }
  terms.push_back({{{0, true}, {0, false}, {2, true}, {2, false}}, U});
  terms.push_back({{{1, true}, {1, false}, {3, true}, {3, false}}, U});
  for (int m = 0; m < 4; ++m) terms.push_back({{{m, true}, {m, false}}, mMu});

  const Rat exact = oracle_alpha(oracle_expand(terms, 4));
  const auto sum = jordan_wigner(build_hamiltonian(two_site_spec()), 4);
  CHECK(sum.alpha() == doctest::Approx(exact.value()).epsilon(1e-12));
  // At U = 2 mu the single-Z terms cancel; alpha = 4 hops * 1/2 + 2 ZZ * 1/2.
  CHECK(exact.num == 3);
  CHECK(exact.den == 1);
}

TEST_CASE("encoded hamiltonians are hermitian at the coefficient level") {
  for (HubbardSpec spec : {two_site_spec(), [] {
         HubbardSpec s;
         s.nx = 2;
         s.ny = 2;
         s.boundary = Boundary::periodic;
         return s;
       }()}) {
    const auto sum = jordan_wigner(build_hamiltonian(spec), spec.n_modes());
    CHECK(sum.is_hermitian());
  }

  HubbardSpec multi;
  multi.nx = 2;
  multi.ny = 1;
  multi.orbitals = 2;
  multi.U_prime = 0.7;
  multi.J = 0.3;
  multi.J_prime = 0.2;
  const auto sum = jordan_wigner(build_hamiltonian(multi), multi.n_modes());
  CHECK(sum.is_hermitian());
  CHECK(sum.alpha() > 0.0);
}

TEST_CASE("hamiltonian commutes with total particle number (dense, 8 modes)") {
  for (HubbardSpec spec : {two_site_spec(), [] {
         HubbardSpec s;
         s.nx = 2;
         s.ny = 2;
         return s;
       }()}) {
    const auto h = realize_dense(jordan_wigner(build_hamiltonian(spec), spec.n_modes()));
    const auto num = realize_dense(total_number_operator(spec));
    const double norm =
        (h.matrix * num.matrix - num.matrix * h.matrix).cwiseAbs().maxCoeff();
    CHECK(norm < 1e-10);
  }
}

TEST_CASE("alpha is invariant under lattice relabeling") {
  HubbardSpec a = two_site_spec();
  a.nx = 3;
  a.ny = 2;
  HubbardSpec b = a;
  b.nx = 2;
  b.ny = 3;
  const auto sum_a = jordan_wigner(build_hamiltonian(a), a.n_modes());
  const auto sum_b = jordan_wigner(build_hamiltonian(b), b.n_modes());
  CHECK(sum_a.alpha() == doctest::Approx(sum_b.alpha()).epsilon(1e-12));
  const auto mags_a = sum_a.coefficient_magnitudes();
  const auto mags_b = sum_b.coefficient_magnitudes();
  REQUIRE(mags_a.size() == mags_b.size());
  for (std::size_t i = 0; i < mags_a.size(); ++i) {
    CHECK(mags_a[i] == doctest::Approx(mags_b[i]).epsilon(1e-12));
  }
}

TEST_CASE("term counts scale with the lattice") {
  for (auto [nx, ny] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{3, 3}}) {
    HubbardSpec spec;
    spec.nx = nx;
    spec.ny = ny;
    spec.V_nn = 1.0;
    spec.U = 1.7;  // avoid the mu-merge cancellation
    spec.mu = 0.4;
    const auto sum = jordan_wigner(build_hamiltonian(spec), spec.n_modes());
    std::size_t hopping_strings = 0;
    std::size_t z_only = 0;
    for (const auto& t : sum.terms()) {
      if (has_xy(t)) {
        ++hopping_strings;
      } else if (!t.is_identity()) {
        ++z_only;
      }
    }
    CHECK(hopping_strings == 4 * spec.edges().size());
    CHECK(z_only <= 3 * static_cast<std::size_t>(spec.n_sites()));
  }
}

TEST_CASE("density observable combines to 3 strings") {
  const HubbardSpec spec = two_site_spec();
  ObservableSpec obs;
  obs.kind = ObservableKind::density;
  obs.site_i = 0;
  const auto sum = encode_observable(obs, spec);
  CHECK(sum.term_count() == 3);
  CHECK(sum.identity_coefficient().real() == doctest::Approx(1.0));
  CHECK(sum.is_hermitian());
}

TEST_CASE("magnetization observable is two signed Z strings") {
  const HubbardSpec spec = two_site_spec();
  ObservableSpec obs;
  obs.kind = ObservableKind::magnetization;
  obs.site_i = 0;
  const auto sum = encode_observable(obs, spec);
  REQUIRE(sum.term_count() == 2);
  const int up_mode = spec.mode_index(0, 0, Spin::up);
  const int dn_mode = spec.mode_index(0, 0, Spin::down);
  for (const auto& t : sum.terms()) {
    CHECK(t.letters.find('X') == std::string::npos);
    if (t.letters[static_cast<std::size_t>(up_mode)] == 'Z') {
      CHECK(t.coefficient.real() == doctest::Approx(-0.5));
    } else {
      CHECK(t.letters[static_cast<std::size_t>(dn_mode)] == 'Z');
      CHECK(t.coefficient.real() == doctest::Approx(0.5));
    }
  }
}

TEST_CASE("annihilation operator needs two strings per real-space mode") {
  HubbardSpec one_site = two_site_spec();
  one_site.nx = 1;
  CHECK(momentum_annihilation(0, 0, Spin::up, one_site).term_count() == 2);

  const HubbardSpec spec = two_site_spec();  // N = 2 sites
  for (int k = 0; k < spec.nx; ++k) {
    const auto c_k = momentum_annihilation(k, 0, Spin::up, spec);
    CHECK(c_k.term_count() == 2 * static_cast<std::size_t>(spec.n_sites()));
    CHECK_FALSE(c_k.is_hermitian());
  }
  CHECK_THROWS_AS(momentum_annihilation(5, 0, Spin::up, spec), RangeError);
}

TEST_CASE("correlator pieces are projectors") {
  const HubbardSpec spec = two_site_spec();
  const auto pieces = correlator_pieces(0, 1, spec);
  for (const auto& w : pieces) {
    const auto dense = realize_dense(w);
    const double idempotency_defect =
        (dense.matrix * dense.matrix - dense.matrix).cwiseAbs().maxCoeff();
    CHECK(idempotency_defect < 1e-12);
  }

  // Full density correlator equals the plain sum of the four pieces.
  ObservableSpec obs;
  obs.kind = ObservableKind::density_corr;
  obs.site_i = 0;
  obs.site_j = 1;
  const auto full = realize_dense(encode_observable(obs, spec));
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(full.dim(), full.dim());
  for (const auto& w : pieces) sum += realize_dense(w).matrix;
  CHECK((full.matrix - sum).cwiseAbs().maxCoeff() < 1e-12);

  // Magnetization correlator is the signed combination.
  obs.kind = ObservableKind::magnetization_corr;
  const auto magnetic = realize_dense(encode_observable(obs, spec));
  Eigen::MatrixXcd signed_sum = realize_dense(pieces[0]).matrix -
                                realize_dense(pieces[1]).matrix -
                                realize_dense(pieces[2]).matrix +
                                realize_dense(pieces[3]).matrix;
  CHECK((magnetic.matrix - signed_sum).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("single correlator piece selectable by spin labels") {
  const HubbardSpec spec = two_site_spec();
  ObservableSpec obs;
  obs.kind = ObservableKind::density_corr;
  obs.site_i = 0;
  obs.site_j = 1;
  obs.sigma = Spin::up;
  obs.sigma_prime = Spin::down;
  const auto piece = encode_observable(obs, spec);
  const auto expected = correlator_pieces(0, 1, spec)[1];  // (up, down)
  CHECK((realize_dense(piece).matrix - realize_dense(expected).matrix)
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("staggered magnetization alternates site signs") {
  const HubbardSpec spec = two_site_spec();
  ObservableSpec staggered;
  staggered.kind = ObservableKind::staggered;
  ObservableSpec m0;
  m0.kind = ObservableKind::magnetization;
  m0.site_i = 0;
  ObservableSpec m1 = m0;
  m1.site_i = 1;
  const auto lhs = realize_dense(encode_observable(staggered, spec)).matrix;
  const auto rhs = realize_dense(encode_observable(m0, spec)).matrix -
                   realize_dense(encode_observable(m1, spec)).matrix;
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("pair gap operator is hermitian for both form factors") {
  const HubbardSpec spec = two_site_spec();
  ObservableSpec obs;
  obs.kind = ObservableKind::pair_gap;
  obs.form_factor = FormFactor::s;
  CHECK(encode_observable(obs, spec).is_hermitian(1e-10));
  HubbardSpec square;
  square.nx = 2;
  square.ny = 2;
  obs.form_factor = FormFactor::d;
  CHECK(encode_observable(obs, square).is_hermitian(1e-10));
}

TEST_CASE("problem spec json round trip and diagnostics") {
  const char* good = R"({"nx": 2, "ny": 2, "V_nn": 1.0, "U": 2.0, "mu": 1.0,
                         "boundary": "periodic"})";
  const HubbardSpec spec = parse_hubbard_spec(good);
  CHECK(spec.nx == 2);
  CHECK(spec.boundary == Boundary::periodic);
  const HubbardSpec round = parse_hubbard_spec(hubbard_spec_to_json(spec));
  CHECK(round.ny == spec.ny);
  CHECK(round.mu == spec.mu);

  try {
    parse_hubbard_spec(R"({"nx": 2, "ny": 2, "V_nn": 1, "U": 2, "mu": 1, "hopping": 3})");
    FAIL("expected SpecError");
  } catch (const SpecError& e) {
    CHECK(std::string(e.what()).find("hopping") != std::string::npos);
  }

  try {
    parse_hubbard_spec(R"({"nx": 2, "ny": 2, "U": 2, "mu": 1})");
    FAIL("expected SpecError");
  } catch (const SpecError& e) {
    CHECK(std::string(e.what()).find("V_nn") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_hubbard_spec("not json at all"), SpecError);
}

TEST_CASE("encoding reruns are byte identical") {
  const HubbardSpec spec = two_site_spec();
  auto serialize = [&spec]() {
    const auto sum = jordan_wigner(build_hamiltonian(spec), spec.n_modes());
    std::string bytes;
    for (const auto& t : sum.terms()) {
      bytes += t.letters;
      bytes.append(reinterpret_cast<const char*>(&t.coefficient), sizeof(t.coefficient));
    }
    return bytes;
  };
  CHECK(serialize() == serialize());
}

TEST_SUITE_END();
