#pragma once

#include "fhre/logical_costs.hpp"

namespace fhre {

/// Magic-state factory recipe (defaults shaped like a two-level 15-to-1
/// pipeline; all values are config constants and fully swappable).
struct FactoryRecipe {
  double t_states_per_round = 1.0;
  double round_cycles = 120.0;
  double footprint_qubits = 4000.0;
  double output_error = 1e-10;
};

/// Two-fridge measurement-based architecture model. The physical layer of
/// the paper-scale toolchain is proprietary; this is an explicit analytic
/// stand-in whose outputs are compared for trends, not absolute values.
struct ArchitectureConfig {
  double physical_error_rate = 0.001;
  double threshold = 0.01;
  double prefactor = 0.1;  // A in A*(p/p_th)^((d+1)/2)
  double cycle_time_s = 1e-6;
  double qubits_per_fridge = 1e6;
  int fridge_count = 2;
  FactoryRecipe factory;
  double bell_rate_per_s = 1e6;  // intermodule Bell pair generation rate
  double bell_fidelity = 0.99;
  double routing_overhead = 1.0;  // ancilla fraction per computational qubit
};

/// Smallest odd distance d >= 3 with prefactor*(p/p_th)^((d+1)/2) within the
/// per-operation error budget. Throws SpecError when p >= p_th.
int code_distance(double per_operation_error_budget, const ArchitectureConfig& config);

struct PhysicalLayout {
  int distance = 3;
  long long logical_qubits = 0;
  double bus_qubits = 0.0;      // computational tiles + routing ancilla
  double factory_qubits = 0.0;  // distillation footprint
  long long factory_count = 0;
  bool feasible = true;
  double shortfall_qubits = 0.0;  // > 0 when capacity is exceeded
};

/// Size factories to the steady-state T demand, lay out computational
/// tiles at 2d^2 physical qubits per logical qubit plus routing overhead.
/// Infeasible demand is reported with the shortfall, never clipped.
PhysicalLayout provision_layout(long long logical_qubits, double t_demand_per_s,
                                int distance, const ArchitectureConfig& config);

/// Widget-stream shape knobs for the runtime decomposition.
struct WidgetStreamParams {
  double t_states_per_widget = 1000.0;
  double intra_cycles_per_t = 10.0;  // graph prep/consume cycles per T, times d
  double inject_cycles_per_t = 1.0;  // injection cycles per T, times d
  double bells_per_t = 1.0;          // intermodule Bell pairs per T
};

struct RuntimeBreakdown {
  double total_seconds = 0.0;
  double share_distillation = 0.0;  // T state distillation and injection
  double share_intermodule = 0.0;
  double share_intramodule = 0.0;
  double per_shot_seconds = 0.0;
  double widgets_per_shot = 0.0;
};

/// Per-widget wall time is the slowest of (T supply, intramodule work,
/// intermodule Bell supply); the two fridges overlap preparation and
/// consumption so components run concurrently at steady state. Shares are
/// the fractions of aggregate compute time per category and sum to one.
/// Totals cover all shots.
RuntimeBreakdown runtime_breakdown(const TCountReport& t_counts, long long shots,
                                   const PhysicalLayout& layout,
                                   const WidgetStreamParams& widget,
                                   const ArchitectureConfig& config);

/// Logical qubits used by the time-evolution circuit: system modes plus
/// block-encoding ancillas (declared model: n + ceil(log2 L) + 2).
long long logical_qubit_count(int n_modes, std::size_t term_count);

}  // namespace fhre
