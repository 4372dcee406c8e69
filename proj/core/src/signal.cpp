#include "fhre/signal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include <fftw3.h>

#include "fhre/errors.hpp"
#include "fhre/rng.hpp"

namespace fhre {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// Process-wide FFTW plan cache. Plan creation is not thread-safe; execution
// through fftw_execute_dft on private buffers is.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  void transform(const std::vector<std::complex<double>>& in,
                 std::vector<std::complex<double>>& out) {
    const int n = static_cast<int>(in.size());
    fftw_plan plan = plan_for(n);
    out.resize(in.size());
    fftw_execute_dft(plan,
                     reinterpret_cast<fftw_complex*>(
                         const_cast<std::complex<double>*>(in.data())),
                     reinterpret_cast<fftw_complex*>(out.data()));
  }

 private:
  fftw_plan plan_for(int n) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    // Plan out-of-place on distinct buffers; fftw_execute_dft requires the
    // new arrays to match the plan's in-place-ness and alignment class.
    std::vector<std::complex<double>> dummy_in(static_cast<std::size_t>(n));
    std::vector<std::complex<double>> dummy_out(static_cast<std::size_t>(n));
    fftw_plan plan = fftw_plan_dft_1d(
        n, reinterpret_cast<fftw_complex*>(dummy_in.data()),
        reinterpret_cast<fftw_complex*>(dummy_out.data()), FFTW_FORWARD,
        FFTW_ESTIMATE | FFTW_UNALIGNED | FFTW_PRESERVE_INPUT);
    plans_.emplace(n, plan);
    return plan;
  }

  std::mutex mutex_;
  std::map<int, fftw_plan> plans_;
};

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers < 2 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  workers = std::min<unsigned>(workers, static_cast<unsigned>(count));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::vector<double> arange(double start, double stop, double step) {
  std::vector<double> out;
  for (int k = 0;; ++k) {
    const double v = start + k * step;
    if (v > stop + 1e-9) break;
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::size_t SignalSpec::n_samples() const {
  return static_cast<std::size_t>(std::floor(t_max / dt + 1e-12));
}

double SignalSpec::bin_width() const { return kTwoPi / t_effective(); }

double SignalSpec::nyquist() const { return M_PI / dt; }

void SignalSpec::validate() const {
  if (dt <= 0.0) throw SpecError("dt must be positive");
  if (t_max < 2.0 * dt) throw SpecError("T_max must cover at least two samples");
  if (frequencies.empty()) throw SpecError("no frequencies given");
  if (frequencies.size() != amplitudes.size()) {
    throw SpecError("frequency and amplitude lists differ in length");
  }
  for (double a : amplitudes) {
    if (a <= 0.0) throw SpecError("amplitudes must be positive");
  }
  const double w_max = nyquist();
  for (double w : frequencies) {
    if (std::abs(w) >= w_max) {
      throw SpecError("frequency exceeds the Nyquist bound pi/dt");
    }
  }
}

NoisyTrace synthesize(const SignalSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n_samples();
  NoisyTrace trace;
  trace.dt = spec.dt;
  trace.clean.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) * spec.dt;
    std::complex<double> s{0.0, 0.0};
    for (std::size_t k = 0; k < spec.frequencies.size(); ++k) {
      const double phase = spec.frequencies[k] * t;
      s += spec.amplitudes[k] * std::complex<double>{std::cos(phase), std::sin(phase)};
    }
    trace.clean[i] = s;
  }
  trace.noisy = trace.clean;
  return trace;
}

NoisyTrace inject_noise(const NoisyTrace& trace, double epsilon, std::uint64_t seed) {
  if (epsilon < 0.0) throw SpecError("epsilon must be nonnegative");
  NoisyTrace out = trace;
  out.epsilon = epsilon;
  out.seed = seed;
  if (epsilon == 0.0) {
    out.noisy = out.clean;
    return out;
  }
  Rng rng(seed);
  for (std::size_t i = 0; i < out.clean.size(); ++i) {
    const double re_sign = rng.bernoulli(0.5) ? 1.0 : -1.0;
    const double im_sign = rng.bernoulli(0.5) ? 1.0 : -1.0;
    out.noisy[i] = out.clean[i] + std::complex<double>{re_sign * epsilon, im_sign * epsilon};
  }
  return out;
}

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& samples) {
  if (samples.empty()) throw SpecError("empty sample vector");
  std::vector<std::complex<double>> out;
  PlanCache::instance().transform(samples, out);
  return out;
}

PeakSet spectrum_peaks(const std::vector<std::complex<double>>& samples, double dt,
                       const ThresholdPolicy& policy) {
  if (samples.empty()) throw SpecError("empty sample vector");
  const std::size_t n = samples.size();
  const std::vector<std::complex<double>> spectrum = dft(samples);

  std::vector<double> mag(n);
  for (std::size_t j = 0; j < n; ++j) mag[j] = std::abs(spectrum[j]) / static_cast<double>(n);

  double threshold;
  if (policy.absolute) {
    threshold = *policy.absolute;
  } else {
    std::vector<double> sorted = mag;
    std::sort(sorted.begin(), sorted.end());
    const double median = n % 2 == 1
                              ? sorted[n / 2]
                              : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    const double max_mag = sorted.back();
    threshold = std::max(policy.median_factor * median, policy.floor_rel * max_mag);
  }

  // Circular prominence: lowest saddle on the walk toward the first
  // strictly higher bin (the global maximum walks the full circle).
  auto base_toward = [&](std::size_t start, std::ptrdiff_t dir) {
    double lowest = mag[start];
    std::size_t idx = start;
    for (std::size_t step = 1; step < n; ++step) {
      idx = (idx + n + static_cast<std::size_t>(dir)) % n;
      if (mag[idx] > mag[start]) break;
      lowest = std::min(lowest, mag[idx]);
    }
    return lowest;
  };
  const double min_prominence = policy.prominence_factor * threshold;

  PeakSet result;
  result.threshold = threshold;
  const double t_eff = static_cast<double>(n) * dt;
  for (std::size_t j = 0; j < n; ++j) {
    if (mag[j] <= threshold) continue;
    if (n > 1) {
      const double prev = mag[(j + n - 1) % n];
      const double next = mag[(j + 1) % n];
      if (!(mag[j] > prev && mag[j] >= next)) continue;
      if (min_prominence > 0.0) {
        const double saddle = std::max(base_toward(j, -1), base_toward(j, +1));
        if (mag[j] - saddle < min_prominence) continue;
      }
    }
    // Fold bin j to (-pi/dt, pi/dt].
    double freq = kTwoPi * static_cast<double>(j) / t_eff;
    if (j > n / 2) freq -= kTwoPi / dt;
    result.peaks.push_back({freq, mag[j]});
  }
  std::sort(result.peaks.begin(), result.peaks.end(),
            [](const Peak& a, const Peak& b) { return a.frequency < b.frequency; });
  return result;
}

RecoveryScore score_recovery(const SignalSpec& given, const PeakSet& found) {
  const double bin = given.bin_width();
  const std::size_t ng = given.frequencies.size();
  const std::size_t nr = found.peaks.size();

  struct Pair {
    double dist;
    std::size_t g;
    std::size_t r;
  };
  std::vector<Pair> pairs;
  pairs.reserve(ng * nr);
  for (std::size_t g = 0; g < ng; ++g) {
    for (std::size_t r = 0; r < nr; ++r) {
      pairs.push_back({std::abs(given.frequencies[g] - found.peaks[r].frequency), g, r});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    if (a.dist != b.dist) return a.dist < b.dist;
    if (a.g != b.g) return a.g < b.g;
    return a.r < b.r;
  });

  std::vector<bool> g_used(ng, false), r_used(nr, false);
  double freq_sum = 0.0;
  double amp_sum = 0.0;
  std::size_t matches = 0;
  for (const Pair& p : pairs) {
    if (g_used[p.g] || r_used[p.r]) continue;
    g_used[p.g] = true;
    r_used[p.r] = true;
    freq_sum += p.dist;
    amp_sum += std::abs(given.amplitudes[p.g] - found.peaks[p.r].amplitude);
    ++matches;
  }

  RecoveryScore score;
  score.missed = static_cast<int>(ng - matches);
  score.spurious = static_cast<int>(nr - matches);
  const double mean_freq = matches > 0 ? freq_sum / static_cast<double>(matches) : 0.0;
  const double mean_amp = matches > 0 ? amp_sum / static_cast<double>(matches) : 0.0;
  score.freq_error = mean_freq + bin * static_cast<double>(score.missed + score.spurious);
  score.joint_error = score.freq_error + mean_amp;
  return score;
}

void SweepGrid::fill_defaults() {
  if (t_max_values.empty()) t_max_values = arange(70.0, 1000.0, 25.0);
  if (epsilon_values.empty()) epsilon_values = arange(0.01, 0.6, 0.02);
  if (frequency_choices.empty()) frequency_choices = arange(-2.0, 2.0, 0.1);
  if (amplitude_choices.empty()) amplitude_choices = arange(0.4, 1.0, 0.05);
}

std::vector<SweepCell> resolution_sweep(const SweepGrid& grid_in) {
  SweepGrid grid = grid_in;
  grid.fill_defaults();
  if (grid.t_max_values.empty() || grid.epsilon_values.empty()) {
    throw SpecError("sweep grids must be nonempty");
  }
  if (grid.n_frequencies > static_cast<int>(grid.frequency_choices.size())) {
    throw SpecError("more frequencies requested than distinct choices");
  }

  // Frequency/amplitude sets are drawn once per sweep and shared across
  // cells. Frequencies are drawn without replacement.
  struct FreqSet {
    std::vector<double> freqs;
    std::vector<double> amps;
  };
  std::vector<FreqSet> sets(static_cast<std::size_t>(grid.n_freq_sets));
  for (int s = 0; s < grid.n_freq_sets; ++s) {
    Rng rng(derive_seed(grid.master_seed, 0xFEED5E75ULL, static_cast<std::uint64_t>(s)));
    std::vector<double> pool = grid.frequency_choices;
    FreqSet fs;
    for (int k = 0; k < grid.n_frequencies; ++k) {
      const std::size_t pick =
          static_cast<std::size_t>(rng.uniform01() * static_cast<double>(pool.size()));
      const std::size_t idx = std::min(pick, pool.size() - 1);
      fs.freqs.push_back(pool[idx]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
      const std::size_t apick = static_cast<std::size_t>(
          rng.uniform01() * static_cast<double>(grid.amplitude_choices.size()));
      fs.amps.push_back(grid.amplitude_choices[std::min(
          apick, grid.amplitude_choices.size() - 1)]);
    }
    sets[static_cast<std::size_t>(s)] = std::move(fs);
  }

  const std::size_t n_t = grid.t_max_values.size();
  const std::size_t n_e = grid.epsilon_values.size();

  // Clean traces and their reconstructions depend only on (set, T_max);
  // cache both. The clean reconstruction is the scoring reference.
  std::vector<NoisyTrace> clean(static_cast<std::size_t>(grid.n_freq_sets) * n_t);
  std::vector<SignalSpec> references(clean.size());
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (std::size_t ti = 0; ti < n_t; ++ti) {
      SignalSpec spec;
      spec.frequencies = sets[s].freqs;
      spec.amplitudes = sets[s].amps;
      spec.dt = grid.dt;
      spec.t_max = grid.t_max_values[ti];
      const std::size_t idx = s * n_t + ti;
      clean[idx] = synthesize(spec);
      const PeakSet clean_peaks = spectrum_peaks(clean[idx].clean, grid.dt, grid.threshold);
      SignalSpec ref = spec;
      ref.frequencies.clear();
      ref.amplitudes.clear();
      for (const Peak& p : clean_peaks.peaks) {
        ref.frequencies.push_back(p.frequency);
        ref.amplitudes.push_back(p.amplitude);
      }
      references[idx] = std::move(ref);
    }
  }

  std::vector<SweepCell> cells(n_t * n_e);
  parallel_for(cells.size(), [&](std::size_t cell) {
    const std::size_t ti = cell / n_e;
    const std::size_t ei = cell % n_e;
    const double eps = grid.epsilon_values[ei];
    SweepCell out;
    out.t_max = grid.t_max_values[ti];
    out.epsilon = eps;
    double fe = 0.0, fe2 = 0.0, je = 0.0, miss = 0.0, spur = 0.0;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      const NoisyTrace& base = clean[s * n_t + ti];
      const SignalSpec& reference = references[s * n_t + ti];
      for (int rep = 0; rep < grid.n_noise_realizations; ++rep) {
        // Common random numbers: the sign stream depends on (set,
        // realization) only, so neighboring cells see correlated noise and
        // their averaged differences isolate the T_max / epsilon effect.
        const std::uint64_t seed =
            derive_seed(grid.master_seed, 2, s + 1, static_cast<std::uint64_t>(rep));
        const NoisyTrace noisy = inject_noise(base, eps, seed);
        const PeakSet peaks = spectrum_peaks(noisy.noisy, grid.dt, grid.threshold);
        const RecoveryScore score = score_recovery(reference, peaks);
        fe += score.freq_error;
        je += score.joint_error;
        miss += score.missed;
        spur += score.spurious;
      }
    }
    const double runs =
        static_cast<double>(sets.size()) * static_cast<double>(grid.n_noise_realizations);
    out.freq_error = fe / runs;
    out.joint_error = je / runs;
    out.missed = miss / runs;
    out.spurious = spur / runs;
    cells[cell] = out;
  });
  return cells;
}

std::string sweep_to_csv(const std::vector<SweepCell>& cells) {
  std::string out = "t_max,epsilon,freq_error,joint_error,missed,spurious\n";
  char line[160];
  for (const SweepCell& c : cells) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", c.t_max,
                  c.epsilon, c.freq_error, c.joint_error, c.missed, c.spurious);
    out += line;
  }
  return out;
}

}  // namespace fhre
