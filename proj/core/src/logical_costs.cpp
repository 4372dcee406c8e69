#include "fhre/logical_costs.hpp"

#include <cmath>

#include "fhre/errors.hpp"

namespace fhre {

namespace {

long long ceil_ll(double v) {
  if (v < 0.0) throw ContractViolation("count formula produced a negative value");
  return static_cast<long long>(std::ceil(v - 1e-12));
}

}  // namespace

AccuracyBudget split_budget(double delta_bar) {
  if (!(delta_bar > 0.0 && delta_bar < 1.0)) {
    throw ContractViolation("overall failure tolerance must lie in (0, 1)");
  }
  AccuracyBudget b;
  b.delta_bar = delta_bar;
  b.delta_S = delta_bar / 2.0;
  b.delta_C = delta_bar / 2.0;
  b.delta_gs = delta_bar / 8.0;
  b.delta_syn = delta_bar / 8.0;
  b.delta_dist = delta_bar / 8.0;
  b.delta_data = delta_bar / 8.0;
  return b;
}

AmplitudeEstimationCost amplitude_estimation_cost(double eps, double delta_S,
                                                  LogConvention convention) {
  if (!(eps > 0.0 && eps < 0.5)) throw ContractViolation("eps must lie in (0, 1/2)");
  if (!(delta_S > 0.0 && delta_S < 1.0)) throw ContractViolation("delta_S must lie in (0, 1)");

  AmplitudeEstimationCost cost;
  cost.iterates_per_circuit = static_cast<long long>(std::floor(M_PI / (8.0 * eps)));
  const double inner = std::log2(M_PI / (4.0 * eps));
  const double arg = (2.0 / delta_S) * inner;
  const double outer = convention == LogConvention::natural ? std::log(arg) : std::log2(arg);
  cost.total_iterates = ceil_ll((50.0 / eps) * outer);
  cost.shots = cost.iterates_per_circuit > 0
                   ? ceil_ll(static_cast<double>(cost.total_iterates) /
                             static_cast<double>(cost.iterates_per_circuit))
                   : cost.total_iterates;
  cost.per_circuit_failure = delta_S / static_cast<double>(cost.shots);
  return cost;
}

double per_circuit_failure(long long shots, double delta) {
  if (shots < 1) throw ContractViolation("shots must be at least 1");
  return delta / static_cast<double>(shots);
}

QspChain qsp_success_chain(double per_circuit_failure, long long u_t_per_circuit) {
  if (per_circuit_failure < 0.0 || per_circuit_failure >= 1.0) {
    throw ContractViolation("per-circuit failure must lie in [0, 1)");
  }
  if (u_t_per_circuit < 1) throw ContractViolation("U(t) count must be positive");
  QspChain chain;
  // p^n >= 1 - f  =>  p = (1 - f)^(1/n); log1p/expm1 keep the tiny
  // complement exact.
  const double log_p = std::log1p(-per_circuit_failure) / static_cast<double>(u_t_per_circuit);
  chain.p_qsp = std::exp(log_p);
  chain.epsilon_qsp = -std::expm1(log_p) / 2.0;
  return chain;
}

GSPCost gsp_queries(double alpha, double gamma, double gap, double delta_gs,
                    double constant) {
  if (alpha <= 0.0 || gap <= 0.0 || delta_gs <= 0.0 || constant <= 0.0) {
    throw ContractViolation("GSP parameters must be positive");
  }
  if (gamma <= 0.0 || gamma > 1.0) {
    throw ContractViolation("initial overlap gamma must lie in (0, 1]");
  }
  GSPCost cost;
  cost.alpha = alpha;
  cost.gamma = gamma;
  cost.gap = gap;
  cost.constant = constant;
  cost.delta_gs = delta_gs;
  cost.queries = ceil_ll(constant * alpha / (gamma * gap) * std::log(1.0 / (gamma * delta_gs)));
  return cost;
}

long long gsp_queries_per_circuit(double alpha, double gamma, double gap, double delta_gs,
                                  double eps, double constant) {
  if (eps <= 0.0) throw ContractViolation("eps must be positive");
  gsp_queries(alpha, gamma, gap, delta_gs, constant);  // validate
  return ceil_ll(M_PI * constant * alpha / (4.0 * gamma * gap * eps) *
                 std::log(1.0 / (gamma * delta_gs)));
}

long long rotation_synthesis_t(double delta_syn, const TGateModel& model) {
  if (delta_syn <= 0.0 || delta_syn >= 1.0) {
    throw ContractViolation("synthesis tolerance must lie in (0, 1)");
  }
  return ceil_ll(model.rotation_log_coeff * std::log2(1.0 / delta_syn)) +
         static_cast<long long>(model.rotation_base_cost);
}

long long block_encoding_t_cost(std::size_t term_count, double delta_syn,
                                const TGateModel& model) {
  if (term_count == 0) return 0;
  const double l = static_cast<double>(term_count);
  const long long select_t = ceil_ll(model.select_t_per_term * l);
  const long long rotations =
      ceil_ll(model.prepare_rotations_factor * std::ceil(std::log2(std::max(l, 2.0))));
  return select_t + rotations * rotation_synthesis_t(delta_syn, model);
}

long long reflection_t_cost(int n_qubits, const TGateModel& model) {
  if (n_qubits < 1) throw ContractViolation("reflection needs at least one qubit");
  return static_cast<long long>(model.reflection_t_per_qubit) *
         static_cast<long long>(n_qubits - 1);
}

TCountReport static_t_count(double alpha, double gamma, double gap, double eps,
                            double delta_bar, long long t_h, long long t_0,
                            double constant) {
  const AccuracyBudget budget = split_budget(delta_bar);
  gsp_queries(alpha, gamma, gap, budget.delta_gs, constant);  // validates parameters
  if (eps <= 0.0) throw ContractViolation("eps must be positive");

  TCountReport report;
  report.t_h = t_h;
  report.t_0 = t_0;
  const double gate_factor = static_cast<double>(2 * t_h + t_0);
  const double per_circuit = M_PI * constant * alpha / (8.0 * gamma * gap * eps) *
                             std::log(1.0 / (gamma * budget.delta_gs)) * gate_factor;
  const double total = 50.0 * constant * alpha / (gamma * gap * eps) *
                       std::log((4.0 / delta_bar) * std::log2(M_PI / (4.0 * eps))) *
                       std::log(8.0 / (gamma * delta_bar)) * gate_factor;
  report.per_circuit_t = ceil_ll(per_circuit);
  report.total_t = std::ceil(total);
  return report;
}

long long static_task_count(int n_sites) {
  if (n_sites < 1) throw ContractViolation("lattice must have at least one site");
  return 2LL * n_sites * (n_sites - 1);
}

int qsp_degree(double alpha, double t, double eps_qsp) {
  if (!(eps_qsp > 0.0 && eps_qsp < 1.0)) {
    throw ContractViolation("eps_qsp must lie in (0, 1)");
  }
  if (alpha < 0.0) throw ContractViolation("alpha must be nonnegative");
  const double tau = alpha * std::abs(t);
  if (tau == 0.0) return 0;

  int d = 1;
  // (e tau / 2d)^d decreases monotonically once 2d > e tau.
  while (d < 1000000) {
    const double bound = static_cast<double>(d) *
                         std::log(M_E * tau / (2.0 * static_cast<double>(d)));
    if (bound <= std::log(eps_qsp)) break;
    ++d;
  }
  if (tau < 1.0) {
    const int cap = static_cast<int>(std::ceil(std::log(1.0 / eps_qsp)));
    d = std::min(d, std::max(cap, 1));
  }
  return d;
}

DynamicCircuitParams dynamic_circuit_params(double eps, double delta,
                                            std::optional<long long> shots_override,
                                            LogConvention convention) {
  const AccuracyBudget budget = split_budget(delta);
  DynamicCircuitParams params;
  params.amp_est = amplitude_estimation_cost(eps, budget.delta_S, convention);
  params.shots = shots_override.value_or(params.amp_est.shots);
  // V(t) and V(t)^dag of the Grover iterate each apply U(t) and U(-t).
  params.u_t_per_circuit = 4 * params.amp_est.iterates_per_circuit;
  params.per_circuit_failure = per_circuit_failure(params.shots, delta);
  const QspChain chain = qsp_success_chain(params.per_circuit_failure, params.u_t_per_circuit);
  params.p_qsp = chain.p_qsp;
  params.epsilon_qsp = chain.epsilon_qsp;
  return params;
}

TCountReport dynamic_t_count(const PauliOperatorSum& hamiltonian, double evolution_time,
                             const DynamicCircuitParams& params, double delta_syn,
                             const TGateModel& model) {
  TCountReport report;
  report.t_h = block_encoding_t_cost(hamiltonian.term_count(), delta_syn, model);
  report.t_0 = reflection_t_cost(std::max(hamiltonian.n_qubits(), 1), model);
  report.qsp_degree = qsp_degree(hamiltonian.alpha(), evolution_time, params.epsilon_qsp);
  if (report.qsp_degree == 0 || report.t_h == 0) {
    report.per_circuit_t = 0;
    report.total_t = 0.0;
    return report;
  }
  const long long per_u_t = static_cast<long long>(report.qsp_degree) * report.t_h +
                            static_cast<long long>(report.qsp_degree + 1) *
                                rotation_synthesis_t(delta_syn, model);
  report.per_circuit_t = params.u_t_per_circuit * per_u_t;
  report.total_t = static_cast<double>(params.shots) *
                   static_cast<double>(report.per_circuit_t);
  return report;
}

}  // namespace fhre
