#include "fhre/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "fhre/jordan_wigner.hpp"

namespace fhre {

double round_to_significant(double value, int digits) {
  if (value == 0.0) return 0.0;
  const double scale =
      std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(std::abs(value)))));
  return std::round(value * scale) / scale;
}

CostReport full_cost_chain(const HubbardSpec& spec, const CostOptions& options) {
  spec.validate();
  CostReport report;

  const PauliOperatorSum h = jordan_wigner(build_hamiltonian(spec), spec.n_modes());
  report.n_qubits = spec.n_qubits();
  report.n_sites = spec.n_sites();
  report.term_count = h.term_count();
  report.alpha = h.alpha();

  report.budget = split_budget(options.delta);
  report.params = dynamic_circuit_params(options.epsilon, options.delta,
                                         options.shots_override, options.log_convention);
  report.rounded_per_circuit_failure =
      round_to_significant(report.params.per_circuit_failure, 2);
  report.rounded_chain =
      qsp_success_chain(report.rounded_per_circuit_failure, report.params.u_t_per_circuit);

  report.dynamic_t = dynamic_t_count(h, options.evolution_time, report.params,
                                     report.budget.delta_syn, options.t_model);

  const long long t_h =
      block_encoding_t_cost(h.term_count(), report.budget.delta_syn, options.t_model);
  const long long t_0 = reflection_t_cost(std::max(spec.n_qubits(), 1), options.t_model);
  report.static_t = static_t_count(report.alpha, options.gamma, options.gap, options.epsilon,
                                   options.delta, t_h, t_0, options.gsp_constant);
  report.gsp = gsp_queries(report.alpha, options.gamma, options.gap, report.budget.delta_gs,
                           options.gsp_constant);
  report.gsp_per_circuit =
      gsp_queries_per_circuit(report.alpha, options.gamma, options.gap,
                              report.budget.delta_gs, options.epsilon, options.gsp_constant);
  report.static_tasks = static_task_count(spec.n_sites());

  // Physical layer: uniform division of the data budget over the T-count
  // volume sets the per-operation budget and therefore the code distance.
  const double volume = std::max(report.dynamic_t.total_t, 1.0);
  report.code_dist =
      code_distance(report.budget.delta_data / volume, options.architecture);
  report.logical_qubits = logical_qubit_count(spec.n_modes(), h.term_count());

  // Steady-state T consumption implied by the intramodule pace.
  const double d = static_cast<double>(report.code_dist);
  report.t_demand_per_s =
      1.0 / (options.widget.intra_cycles_per_t * d * options.architecture.cycle_time_s);
  report.layout = provision_layout(report.logical_qubits, report.t_demand_per_s,
                                   report.code_dist, options.architecture);
  if (report.layout.feasible) {
    report.runtime = runtime_breakdown(report.dynamic_t, report.params.shots, report.layout,
                                       options.widget, options.architecture);
  }
  return report;
}

}  // namespace fhre
