#include <doctest.h>

#include <cmath>
#include <vector>

#include "fhre/errors.hpp"
#include "fhre/jordan_wigner.hpp"
#include "fhre/logical_costs.hpp"
#include "fhre/model.hpp"

using namespace fhre;

TEST_SUITE_BEGIN("logical_costs");

TEST_CASE("budget split follows the even allocation") {
  const AccuracyBudget b = split_budget(0.8);
  CHECK(b.delta_S == doctest::Approx(0.4));
  CHECK(b.delta_C == doctest::Approx(0.4));
  CHECK(b.delta_gs == doctest::Approx(0.1));
  CHECK(b.delta_syn == doctest::Approx(0.1));

  const AccuracyBudget tight = split_budget(0.001);
  CHECK(tight.delta_S == doctest::Approx(5e-4));
  CHECK(tight.delta_gs == doctest::Approx(1.25e-4));

  CHECK_THROWS_AS(split_budget(0.0), ContractViolation);
  CHECK_THROWS_AS(split_budget(1.0), ContractViolation);
}

TEST_CASE("budget conservation is exact") {
  for (double d : {0.8, 0.1, 0.001, 3e-7}) {
    const AccuracyBudget b = split_budget(d);
    CHECK(b.delta_S + b.delta_C == d);
    CHECK(b.delta_gs + b.delta_syn + b.delta_dist + b.delta_data == b.delta_C);
  }
}

TEST_CASE("amplitude estimation at the paper operating point") {
  const AmplitudeEstimationCost cost = amplitude_estimation_cost(0.01, 0.0005);
  CHECK(cost.iterates_per_circuit == 39);  // floor(pi/0.08)
  CHECK(4 * cost.iterates_per_circuit == 156);

  // Independent long-double evaluation of the iterate-count formula.
  const long double eps = 0.01L, delta_s = 0.0005L;
  const long double inner = log2l(static_cast<long double>(M_PI) / (4.0L * eps));
  const long double total = (50.0L / eps) * logl((2.0L / delta_s) * inner);
  CHECK(cost.total_iterates == static_cast<long long>(ceill(total)));
  CHECK(cost.total_iterates == 50670);  // frozen from the evaluation above
  CHECK(cost.shots == 1300);            // ceil(50670 / 39); the reference input is 671

  const AmplitudeEstimationCost log2_read =
      amplitude_estimation_cost(0.01, 0.0005, LogConvention::log2);
  CHECK(log2_read.total_iterates > cost.total_iterates);

  CHECK_THROWS_AS(amplitude_estimation_cost(0.6, 0.1), ContractViolation);
  CHECK_THROWS_AS(amplitude_estimation_cost(0.01, 0.0), ContractViolation);
}

TEST_CASE("per-circuit failure division") {
  CHECK(per_circuit_failure(671, 0.001) == doctest::Approx(1.4903e-6).epsilon(1e-4));
  CHECK(per_circuit_failure(1, 0.37) == doctest::Approx(0.37));
  CHECK(per_circuit_failure(1000, 0.01) == doctest::Approx(1e-5));
  CHECK_THROWS_AS(per_circuit_failure(0, 0.5), ContractViolation);
}

TEST_CASE("qsp success chain reproduces the published operating point") {
  const QspChain chain = qsp_success_chain(1.5e-6, 156);
  CHECK(std::abs(chain.p_qsp - 0.9999999904) < 5e-11);
  CHECK(chain.epsilon_qsp == doctest::Approx(4.81e-9).epsilon(5e-3));

  const QspChain perfect = qsp_success_chain(0.0, 156);
  CHECK(perfect.p_qsp == 1.0);
  CHECK(perfect.epsilon_qsp == 0.0);

  // Closure: recomposing the per-circuit success from p_qsp.
  CHECK(std::pow(chain.p_qsp, 156.0) >= 1.0 - 1.5e-6 - 1e-12);
}

TEST_CASE("ground state preparation query count") {
  const GSPCost unit = gsp_queries(1.0, 1.0, 1.0, std::exp(-1.0));
  CHECK(unit.queries == 1);

  // Linear in alpha before the ceiling.
  const double base = 1.0 / (0.5 * 0.1) * std::log(1.0 / (0.5 * 0.01));
  CHECK(gsp_queries(2.0, 0.5, 0.1, 0.01).queries ==
        static_cast<long long>(std::ceil(2.0 * base - 1e-12)));
  CHECK(gsp_queries(1.0, 0.5, 0.1, 0.01).queries >= base / 1.0);

  CHECK_THROWS_AS(gsp_queries(1.0, 1.5, 1.0, 0.1), ContractViolation);
  CHECK(gsp_queries_per_circuit(1.0, 1.0, 1.0, std::exp(-1.0), M_PI / 4.0) == 1);
}

TEST_CASE("static t count reduces cleanly at eps = pi/8") {
  const long long t_h = 3, t_0 = 4;
  const TCountReport report =
      static_t_count(1.0, 1.0, 1.0, M_PI / 8.0, 0.8, t_h, t_0);
  const double expected = std::log(1.0 / 0.1) * static_cast<double>(2 * t_h + t_0);
  CHECK(report.per_circuit_t == static_cast<long long>(std::ceil(expected - 1e-12)));
}

TEST_CASE("static t count totals decrease with looser eps") {
  double previous = std::numeric_limits<double>::infinity();
  for (double eps : {0.001, 0.002, 0.005, 0.01, 0.02, 0.05, 0.1}) {
    const TCountReport r = static_t_count(3.0, 0.5, 0.2, eps, 0.001, 1000, 100);
    CHECK(r.total_t <= previous);
    CHECK(r.per_circuit_t <= r.total_t);
    previous = r.total_t;
  }
}

TEST_CASE("task multiplicity is 2N(N-1)") {
  CHECK(static_task_count(2) == 4);
  CHECK(static_task_count(4) == 24);
  CHECK(static_task_count(49) == 4704);
}

TEST_CASE("qsp degree examples") {
  CHECK(qsp_degree(2.0, 1.0, 4.81e-9) == 13);
  CHECK(qsp_degree(1.0, 0.0, 1e-9) == 0);
  CHECK(qsp_degree(0.0, 5.0, 1e-9) == 0);
  CHECK_THROWS_AS(qsp_degree(1.0, 1.0, 1.0), ContractViolation);

  int previous = 0;
  for (double t : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0}) {
    const int d = qsp_degree(3.0, t, 1e-8);
    CHECK(d >= previous);
    previous = d;
  }

  // Tiny evolution times fall back to the log cap.
  CHECK(qsp_degree(1.0, 1e-9, 1e-6) <= static_cast<int>(std::ceil(std::log(1e6))));
}

TEST_CASE("rotation synthesis and block encoding t model") {
  const long long rot = rotation_synthesis_t(0.001 / 8.0);
  CHECK(rot == static_cast<long long>(std::ceil(1.15 * std::log2(8000.0))) + 9);
  CHECK(block_encoding_t_cost(0, 1e-4) == 0);
  const long long t_h = block_encoding_t_cost(100, 1e-4);
  CHECK(t_h == 400 + 2 * 7 * rotation_synthesis_t(1e-4));
  CHECK(reflection_t_cost(8) == 28);
}

TEST_CASE("dynamic circuit parameter chain") {
  const DynamicCircuitParams params = dynamic_circuit_params(0.01, 0.001, 671);
  CHECK(params.u_t_per_circuit == 156);
  CHECK(params.shots == 671);
  CHECK(params.per_circuit_failure == doctest::Approx(0.001 / 671.0));
  CHECK(params.amp_est.shots == 1300);  // formula value still reported
  CHECK(std::abs(params.p_qsp - 0.9999999904) < 1e-9);

  const DynamicCircuitParams formula = dynamic_circuit_params(0.01, 0.001);
  CHECK(formula.shots == 1300);
}

TEST_CASE("dynamic t count composes and scales") {
  HubbardSpec spec;
  spec.nx = 2;
  spec.ny = 2;
  const auto h = jordan_wigner(build_hamiltonian(spec), spec.n_modes());
  const DynamicCircuitParams params = dynamic_circuit_params(0.01, 0.001, 671);
  const double delta_syn = 0.001 / 8.0;
  const TCountReport report = dynamic_t_count(h, 0.1, params, delta_syn);
  CHECK(report.qsp_degree > 0);
  CHECK(report.t_h > 0);
  CHECK(report.per_circuit_t ==
        params.u_t_per_circuit *
            (static_cast<long long>(report.qsp_degree) * report.t_h +
             static_cast<long long>(report.qsp_degree + 1) * rotation_synthesis_t(delta_syn)));
  CHECK(report.total_t == doctest::Approx(671.0 * static_cast<double>(report.per_circuit_t)));

  DynamicCircuitParams doubled = params;
  doubled.shots *= 2;
  const TCountReport twice = dynamic_t_count(h, 0.1, doubled, delta_syn);
  CHECK(twice.total_t == doctest::Approx(2.0 * report.total_t));

  const PauliOperatorSum empty(4, {});
  const TCountReport zero = dynamic_t_count(empty, 0.1, params, delta_syn);
  CHECK(zero.per_circuit_t == 0);
  CHECK(zero.total_t == 0.0);
}

TEST_CASE("cost monotonicity in alpha and time") {
  const DynamicCircuitParams params = dynamic_circuit_params(0.01, 0.001, 671);
  HubbardSpec small;
  small.nx = 2;
  small.ny = 2;
  HubbardSpec large = small;
  large.nx = 3;
  const auto h_small = jordan_wigner(build_hamiltonian(small), small.n_modes());
  const auto h_large = jordan_wigner(build_hamiltonian(large), large.n_modes());
  CHECK(h_large.alpha() > h_small.alpha());
  const double delta_syn = 0.001 / 8.0;
  CHECK(dynamic_t_count(h_large, 0.1, params, delta_syn).total_t >=
        dynamic_t_count(h_small, 0.1, params, delta_syn).total_t);
  CHECK(dynamic_t_count(h_small, 0.2, params, delta_syn).total_t >=
        dynamic_t_count(h_small, 0.1, params, delta_syn).total_t);
}

TEST_SUITE_END();
