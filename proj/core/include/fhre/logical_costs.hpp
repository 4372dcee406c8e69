#pragma once

#include <cstdint>
#include <optional>

#include "fhre/pauli.hpp"

namespace fhre {

/// Failure-budget split for one estimation task: half to statistical
/// failure, half to circuit failure, the latter split evenly across ground
/// state preparation, synthesis, distillation and data errors.
struct AccuracyBudget {
  double delta_bar = 0.0;
  double delta_S = 0.0;
  double delta_C = 0.0;
  double delta_gs = 0.0;
  double delta_syn = 0.0;
  double delta_dist = 0.0;
  double delta_data = 0.0;
};

AccuracyBudget split_budget(double delta_bar);

enum class LogConvention { natural, log2 };

struct AmplitudeEstimationCost {
  long long iterates_per_circuit = 0;  // floor(pi / (8 eps))
  long long total_iterates = 0;        // ceil of the iterate-count formula
  long long shots = 0;                 // ceil(total / per-circuit)
  double per_circuit_failure = 0.0;    // delta_S / shots
};

/// Iterate/shot counts for iterative amplitude estimation at target error
/// eps and statistical failure delta_S. The outer log of the total-iterate
/// formula is natural by default; the log2 reading is selectable.
AmplitudeEstimationCost amplitude_estimation_cost(double eps, double delta_S,
                                                  LogConvention convention = LogConvention::natural);

/// Evenly divided per-circuit failure tolerance.
double per_circuit_failure(long long shots, double delta);

struct QspChain {
  double p_qsp = 1.0;        // per-invocation success probability
  double epsilon_qsp = 0.0;  // (1 - p_qsp) / 2
};

/// Smallest per-invocation success probability meeting the per-circuit
/// tolerance across n applications: p = (1 - failure)^(1/n).
QspChain qsp_success_chain(double per_circuit_failure, long long u_t_per_circuit);

struct GSPCost {
  double alpha = 0.0;
  double gamma = 0.0;
  double gap = 0.0;
  double constant = 1.0;
  double delta_gs = 0.0;
  long long queries = 0;  // ceil(C alpha/(gamma gap) ln(1/(gamma delta_gs)))
};

GSPCost gsp_queries(double alpha, double gamma, double gap, double delta_gs,
                    double constant = 1.0);

/// Per-circuit variant: multiply the query bound by pi/(4 eps) before ceiling.
long long gsp_queries_per_circuit(double alpha, double gamma, double gap, double delta_gs,
                                  double eps, double constant = 1.0);

/// T-gate accounting model for the block-encoding query and the reflection.
/// Select: 4 T per term. Prepare: 2*ceil(log2 L) rotations, each synthesized
/// with ceil(1.15 log2(1/delta_syn)) + 9 T. Reflection about |0^n>: 4(n-1) T.
/// All knobs are configurable; these are declared model choices, not derived.
struct TGateModel {
  double select_t_per_term = 4.0;
  double prepare_rotations_factor = 2.0;  // times ceil(log2 L)
  double rotation_log_coeff = 1.15;
  double rotation_base_cost = 9.0;
  double reflection_t_per_qubit = 4.0;  // times (n - 1)
};

long long rotation_synthesis_t(double delta_syn, const TGateModel& model = {});
long long block_encoding_t_cost(std::size_t term_count, double delta_syn,
                                const TGateModel& model = {});
long long reflection_t_cost(int n_qubits, const TGateModel& model = {});

struct TCountReport {
  long long t_h = 0;
  long long t_0 = 0;
  int qsp_degree = 0;
  long long per_circuit_t = 0;
  double total_t = 0.0;  // shots * per-circuit; double to survive huge totals
};

/// Static-correlation amplitude-estimation T counts.
/// per-circuit: (pi C alpha / (8 gamma gap eps)) ln(1/(gamma delta_gs)) (2 T_H + T_0)
/// total:       (50 C alpha / (gamma gap eps)) ln((4/delta_bar) log2(pi/(4 eps)))
///              * ln(8/(gamma delta_bar)) (2 T_H + T_0)
/// with T_H evaluated by the caller at delta_syn = delta_bar/8.
TCountReport static_t_count(double alpha, double gamma, double gap, double eps,
                            double delta_bar, long long t_h, long long t_0,
                            double constant = 1.0);

/// Amplitude-estimation tasks for all site pairs of an N-site lattice:
/// 4 spin combinations for each of the N(N-1)/2 pairs = 2N(N-1).
long long static_task_count(int n_sites);

/// Smallest polynomial degree with (e alpha |t| / (2d))^d <= eps_qsp,
/// found by upward iteration; for alpha|t| < 1 the cap ceil(ln(1/eps_qsp))
/// applies when smaller. d = 0 for t = 0.
int qsp_degree(double alpha, double t, double eps_qsp);

struct DynamicCircuitParams {
  long long shots = 0;
  long long u_t_per_circuit = 0;  // 4 applications of U(t) per Grover iterate
  double per_circuit_failure = 0.0;
  double p_qsp = 1.0;
  double epsilon_qsp = 0.0;
  AmplitudeEstimationCost amp_est;
};

/// Full dynamic-correlation circuit parameter chain at (eps, delta).
/// shots_override substitutes an externally fixed shot count (the formula
/// value is still reported through amp_est).
DynamicCircuitParams dynamic_circuit_params(double eps, double delta,
                                            std::optional<long long> shots_override = std::nullopt,
                                            LogConvention convention = LogConvention::natural);

/// T counts for the time-evolution-dominated dynamic-correlation circuit:
/// per circuit, every U(t) application costs d block-encoding queries plus
/// d+1 synthesized phase rotations; U_SP and controlled-Pauli costs are
/// excluded under the standing dominance assumption.
TCountReport dynamic_t_count(const PauliOperatorSum& hamiltonian, double evolution_time,
                             const DynamicCircuitParams& params, double delta_syn,
                             const TGateModel& model = {});

}  // namespace fhre
