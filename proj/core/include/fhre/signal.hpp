#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fhre {

/// Multi-frequency test signal s(t_n) = sum_k a_k exp(i w_k t_n) sampled on
/// t_n = n*dt, n = 0 .. N-1 with N = floor(T_max/dt). The effective record
/// length N*dt sets the DFT grid spacing 2*pi/(N*dt).
struct SignalSpec {
  std::vector<double> frequencies;
  std::vector<double> amplitudes;
  double dt = 1.5;
  double t_max = 700.0;

  std::size_t n_samples() const;
  double t_effective() const { return static_cast<double>(n_samples()) * dt; }
  double bin_width() const;
  double nyquist() const;

  /// Throws SpecError on Nyquist violation or inconsistent sizes.
  void validate() const;
};

struct NoisyTrace {
  std::vector<std::complex<double>> clean;
  std::vector<std::complex<double>> noisy;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  double dt = 0.0;
};

NoisyTrace synthesize(const SignalSpec& spec);

/// Worst-case noise: every sample component (real and imaginary
/// independently) is displaced by exactly +-epsilon, signs drawn from the
/// seeded generator. Deterministic per seed.
NoisyTrace inject_noise(const NoisyTrace& trace, double epsilon, std::uint64_t seed);

/// Forward DFT X_j = sum_n s_n exp(-2 pi i j n / N), unnormalized.
/// Reported amplitudes elsewhere are |X_j| / N.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& samples);

struct Peak {
  double frequency = 0.0;
  double amplitude = 0.0;
};

struct PeakSet {
  std::vector<Peak> peaks;  // sorted by frequency
  double threshold = 0.0;
};

/// threshold = max(median_factor * median(|X|/N), floor_rel * max(|X|/N)),
/// unless an absolute threshold is supplied. A peak must additionally rise
/// above its surrounding saddles by prominence_factor * threshold, which
/// keeps noise ripples on spectral-leakage shoulders from registering as
/// peaks (0 disables the prominence requirement).
struct ThresholdPolicy {
  double median_factor = 5.0;
  double floor_rel = 1e-9;
  double prominence_factor = 1.0;
  std::optional<double> absolute;
};

/// Circular local maxima of the magnitude spectrum above threshold. Bin j
/// maps to frequency 2*pi*j/(N*dt), folded to (-pi/dt, pi/dt].
PeakSet spectrum_peaks(const std::vector<std::complex<double>>& samples, double dt,
                       const ThresholdPolicy& policy = {});

struct RecoveryScore {
  double freq_error = 0.0;
  double joint_error = 0.0;
  int missed = 0;
  int spurious = 0;
};

/// Greedy nearest matching of recovered to given frequencies.
/// freq_error = mean |w_g - w_r| over matches + bin_width per miss/spurious;
/// joint_error additionally adds mean |a_g - a_r| over matches.
RecoveryScore score_recovery(const SignalSpec& given, const PeakSet& found);

struct SweepGrid {
  std::vector<double> t_max_values;
  std::vector<double> epsilon_values;
  int n_freq_sets = 30;
  int n_noise_realizations = 100;
  int n_frequencies = 6;
  double dt = 1.5;
  std::vector<double> frequency_choices;  // defaults to {-2.0, -1.9, ..., 2.0}
  std::vector<double> amplitude_choices;  // defaults to {0.4, 0.45, ..., 1.0}
  ThresholdPolicy threshold;
  std::uint64_t master_seed = 1;

  void fill_defaults();
};

struct SweepCell {
  double t_max = 0.0;
  double epsilon = 0.0;
  double freq_error = 0.0;
  double joint_error = 0.0;
  double missed = 0.0;
  double spurious = 0.0;
  /// Standard error of the freq_error ensemble mean; monotonicity checks
  /// on the averaged surface are statistical (3 sigma convention).
  double freq_error_se = 0.0;
};

/// Ensemble-averaged recovery scores per (T_max, epsilon) cell. Each noisy
/// reconstruction is scored against the clean-record reconstruction at the
/// same T_max (epsilon = 0 therefore scores exactly zero); grid-alignment
/// bias cancels between the two. Frequency sets are drawn once per sweep;
/// per-cell noise seeds derive from (master_seed, set, cell, realization)
/// so results are independent of the execution schedule.
std::vector<SweepCell> resolution_sweep(const SweepGrid& grid);

/// CSV with header "t_max,epsilon,freq_error,joint_error,missed,spurious".
std::string sweep_to_csv(const std::vector<SweepCell>& cells);

}  // namespace fhre
