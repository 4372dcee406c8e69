#include "fhre/physical_costs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fhre/errors.hpp"

namespace fhre {

int code_distance(double per_operation_error_budget, const ArchitectureConfig& config) {
  if (!(per_operation_error_budget > 0.0 && per_operation_error_budget < 1.0)) {
    throw ContractViolation("error budget must lie in (0, 1)");
  }
  if (config.physical_error_rate >= config.threshold) {
    throw SpecError("physical error rate at or above the code threshold; no distance works");
  }
  const double log_ratio = std::log(config.physical_error_rate / config.threshold);
  // Compare in log space so exact-boundary budgets resolve to the intended
  // distance instead of tripping on rounding in pow().
  const double target = std::log(per_operation_error_budget) - std::log(config.prefactor);
  for (int d = 3; d < 10000; d += 2) {
    if (static_cast<double>((d + 1) / 2) * log_ratio <= target + 1e-9) return d;
  }
  throw SpecError("no code distance below 10000 meets the budget");
}

PhysicalLayout provision_layout(long long logical_qubits, double t_demand_per_s,
                                int distance, const ArchitectureConfig& config) {
  if (!std::isfinite(t_demand_per_s) || t_demand_per_s < 0.0) {
    throw ContractViolation("T demand must be finite and nonnegative");
  }
  PhysicalLayout layout;
  layout.distance = distance;
  layout.logical_qubits = logical_qubits;

  const double per_factory_rate =
      config.factory.t_states_per_round / (config.factory.round_cycles * config.cycle_time_s);
  layout.factory_count =
      t_demand_per_s > 0.0
          ? static_cast<long long>(std::ceil(t_demand_per_s / per_factory_rate - 1e-9))
          : 0;
  layout.factory_qubits =
      static_cast<double>(layout.factory_count) * config.factory.footprint_qubits;

  // Bus = computational tiles plus routing ancilla: every physical qubit
  // allocated to something other than distillation.
  const double tile = 2.0 * static_cast<double>(distance) * static_cast<double>(distance);
  layout.bus_qubits = static_cast<double>(logical_qubits) * tile * (1.0 + config.routing_overhead);

  const double capacity = config.qubits_per_fridge * static_cast<double>(config.fridge_count);
  const double used = layout.bus_qubits + layout.factory_qubits;
  layout.feasible = used <= capacity;
  layout.shortfall_qubits = layout.feasible ? 0.0 : used - capacity;
  return layout;
}

RuntimeBreakdown runtime_breakdown(const TCountReport& t_counts, long long shots,
                                   const PhysicalLayout& layout,
                                   const WidgetStreamParams& widget,
                                   const ArchitectureConfig& config) {
  if (!layout.feasible) throw ContractViolation("layout is infeasible; provision first");
  RuntimeBreakdown breakdown;
  const double per_circuit_t = static_cast<double>(t_counts.per_circuit_t);
  if (per_circuit_t <= 0.0 || shots <= 0) return breakdown;

  const double d = static_cast<double>(layout.distance);
  const double widgets = std::ceil(per_circuit_t / widget.t_states_per_widget);
  const double t_per_widget = per_circuit_t / widgets;

  const double factory_rate =
      static_cast<double>(std::max<long long>(layout.factory_count, 0)) *
      config.factory.t_states_per_round / (config.factory.round_cycles * config.cycle_time_s);

  // T supply: distillation wait plus injection cycles (grouped as one
  // category); the injection term is the floor when factories are ample.
  const double distill_wait = factory_rate > 0.0 ? t_per_widget / factory_rate
                                                 : std::numeric_limits<double>::infinity();
  const double inject = t_per_widget * widget.inject_cycles_per_t * d * config.cycle_time_s;
  const double tau_t = (layout.factory_count > 0 ? distill_wait : 0.0) + inject;

  const double tau_intra =
      t_per_widget * widget.intra_cycles_per_t * d * config.cycle_time_s;

  const double tau_inter = config.fridge_count > 1
                               ? t_per_widget * widget.bells_per_t / config.bell_rate_per_s
                               : 0.0;

  // The two fridges pipeline graph preparation against consumption, so the
  // widget advances at the pace of its slowest component; the first widget
  // pays its preparation up front.
  const double per_widget_wall = std::max({tau_t, tau_intra, tau_inter});
  breakdown.widgets_per_shot = widgets;
  breakdown.per_shot_seconds = widgets * per_widget_wall + tau_intra;
  breakdown.total_seconds = static_cast<double>(shots) * breakdown.per_shot_seconds;

  const double sum = tau_t + tau_intra + tau_inter;
  breakdown.share_distillation = tau_t / sum;
  breakdown.share_intramodule = tau_intra / sum;
  breakdown.share_intermodule = tau_inter / sum;
  return breakdown;
}

long long logical_qubit_count(int n_modes, std::size_t term_count) {
  const double l = std::max<double>(static_cast<double>(term_count), 2.0);
  return static_cast<long long>(n_modes) +
         static_cast<long long>(std::ceil(std::log2(l))) + 2;
}

}  // namespace fhre
