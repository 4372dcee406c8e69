#include "fhre/utility_mc.hpp"

#include <algorithm>
#include <cmath>

#include "fhre/errors.hpp"
#include "fhre/rng.hpp"

namespace fhre {

void DistributionSpec::validate() const {
  switch (family) {
    case DistFamily::beta:
      if (a <= 0.0 || b <= 0.0) throw SpecError("Beta parameters must be positive");
      break;
    case DistFamily::log_normal:
    case DistFamily::normal:
      if (b < 0.0) throw SpecError("scale parameter must be nonnegative");
      break;
    case DistFamily::uniform:
      if (b < a) throw SpecError("uniform upper bound below lower bound");
      break;
    case DistFamily::bernoulli:
      if (a < 0.0 || a > 1.0) throw SpecError("Bernoulli probability must lie in [0, 1]");
      break;
    case DistFamily::point_mass:
      break;
  }
}

double DistributionSpec::mean() const {
  switch (family) {
    case DistFamily::beta: return a / (a + b);
    case DistFamily::log_normal: return std::exp(a + b * b / 2.0);
    case DistFamily::normal: return a;
    case DistFamily::uniform: return 0.5 * (a + b);
    case DistFamily::bernoulli: return a;
    case DistFamily::point_mass: return a;
  }
  return 0.0;
}

namespace {

double draw(const DistributionSpec& dist, Rng& rng) {
  switch (dist.family) {
    case DistFamily::beta: return rng.beta(dist.a, dist.b);
    case DistFamily::log_normal: return rng.log_normal(dist.a, dist.b);
    case DistFamily::normal: return rng.normal(dist.a, dist.b);
    case DistFamily::uniform: return rng.uniform(dist.a, dist.b);
    case DistFamily::bernoulli: return rng.bernoulli(dist.a) ? 1.0 : 0.0;
    case DistFamily::point_mass: return dist.a;
  }
  throw ContractViolation("unhandled distribution family");
}

// Kahan-compensated mean.
double compensated_mean(const std::vector<double>& xs) {
  double sum = 0.0, comp = 0.0;
  for (double x : xs) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return xs.empty() ? 0.0 : sum / static_cast<double>(xs.size());
}

}  // namespace

std::vector<double> sample(const DistributionSpec& dist, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw ContractViolation("sample count must be at least 1");
  dist.validate();
  Rng rng(seed);
  std::vector<double> out(n);
  for (double& v : out) v = draw(dist, rng);
  return out;
}

// Per-factor stream ids: each uncertain factor draws from its own derived
// stream, so stages sharing a factor see the same draws (common random
// numbers) and degenerate configurations compare exactly.
namespace stream {
constexpr std::uint64_t hpc = 1;
constexpr std::uint64_t personnel = 2;
constexpr std::uint64_t guidance = 3;
constexpr std::uint64_t spillover = 4;
constexpr std::uint64_t transmission = 5;
}  // namespace stream

std::vector<double> stage23_annual_savings(const EconomicConstants& c, std::uint64_t seed,
                                           std::size_t n) {
  Rng hpc_rng(derive_seed(seed, stream::hpc));
  Rng personnel_rng(derive_seed(seed, stream::personnel));
  std::vector<double> out(n);
  for (double& v : out) {
    const double hpc = draw(c.hpc_fraction, hpc_rng) * c.hpc_pool;
    const double personnel = draw(c.productivity_gain, personnel_rng) * c.personnel_base();
    v = hpc + c.energy_hpc + c.carbon_hpc + personnel;
  }
  return out;
}

std::vector<double> stage45_annual_savings(const EconomicConstants& c, std::uint64_t seed,
                                           std::size_t n) {
  Rng guidance_rng(derive_seed(seed, stream::guidance));
  std::vector<double> out = stage23_annual_savings(c, seed, n);
  for (double& v : out) {
    v += draw(c.guidance_fraction, guidance_rng) * c.experiment_pool;
  }
  return out;
}

namespace {

struct SpilloverDraw {
  double npv_years;
  double reduction_years;
};

SpilloverDraw spillover_draw(const EconomicConstants& c, Rng& rng,
                             const SpilloverOptions& opt) {
  const double r = c.discount_rate;
  const double offset = c.solver_year_offset;
  const double exist_weight =
      opt.bernoulli_existence ? (rng.bernoulli(c.sc_exist_probability) ? 1.0 : 0.0)
                              : c.sc_exist_probability;
  const double y = draw(c.sc_discovery_years, rng);
  const double accel = draw(c.sc_acceleration, rng);
  if (exist_weight == 0.0 || y <= offset) return {0.0, 0.0};

  const double z = opt.multiplicative_acceleration
                       ? offset + (y - offset) * accel
                       : std::max(offset, y - (y - offset) * accel);
  const double npv =
      exist_weight * (std::pow(1.0 - r, z) - std::pow(1.0 - r, y)) / r;
  return {npv, exist_weight * (y - z)};
}

}  // namespace

std::vector<double> superconductor_npv_years(const EconomicConstants& c, std::uint64_t seed,
                                             std::size_t n, const SpilloverOptions& opt) {
  Rng rng(derive_seed(seed, stream::spillover));
  std::vector<double> out(n);
  for (double& v : out) v = spillover_draw(c, rng, opt).npv_years;
  return out;
}

std::vector<double> superconductor_reduction_years(const EconomicConstants& c,
                                                   std::uint64_t seed, std::size_t n,
                                                   const SpilloverOptions& opt) {
  Rng rng(derive_seed(seed, stream::spillover));
  std::vector<double> out(n);
  for (double& v : out) v = spillover_draw(c, rng, opt).reduction_years;
  return out;
}

UtilityDistribution::UtilityDistribution(std::vector<double> samples)
    : samples_(std::move(samples)), sorted_(samples_) {
  std::sort(sorted_.begin(), sorted_.end());
  mean_ = compensated_mean(samples_);
}

double UtilityDistribution::quantile(double q) const {
  if (sorted_.empty()) throw ContractViolation("empty distribution");
  if (q < 0.0 || q > 1.0) throw ContractViolation("quantile level must lie in [0, 1]");
  const double pos = q * static_cast<double>(sorted_.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  if (lo + 1 >= sorted_.size()) return sorted_.back();
  const double frac = pos - static_cast<double>(lo);
  return sorted_[lo] * (1.0 - frac) + sorted_[lo + 1] * frac;
}

double UtilityDistribution::mass_at_zero() const {
  if (samples_.empty()) return 0.0;
  std::size_t count = 0;
  for (double v : samples_) {
    if (std::abs(v) <= 1e-12) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(samples_.size());
}

UtilityDistribution::Histogram UtilityDistribution::histogram(int n_bins) const {
  if (n_bins < 1) throw ContractViolation("need at least one bin");
  if (sorted_.empty()) throw ContractViolation("empty distribution");
  Histogram h;
  const double lo = sorted_.front();
  const double hi = std::max(sorted_.back(), lo + 1e-12);
  const double width = (hi - lo) / n_bins;
  h.edges.resize(static_cast<std::size_t>(n_bins) + 1);
  for (int i = 0; i <= n_bins; ++i) h.edges[static_cast<std::size_t>(i)] = lo + width * i;
  std::vector<double> counts(static_cast<std::size_t>(n_bins), 0.0);
  for (double v : samples_) {
    int bin = static_cast<int>((v - lo) / width);
    bin = std::clamp(bin, 0, n_bins - 1);
    counts[static_cast<std::size_t>(bin)] += 1.0;
  }
  const double total = static_cast<double>(samples_.size());
  h.pdf.resize(counts.size());
  h.cdf.resize(counts.size());
  double running = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    h.pdf[i] = counts[i] / (total * width);
    running += counts[i];
    h.cdf[i] = running / total;
  }
  h.cdf.back() = 1.0;
  return h;
}

UtilityDistribution aggregate_stage(Stage stage, const EconomicConstants& c,
                                    std::uint64_t seed, std::size_t n,
                                    const SpilloverOptions& opt) {
  const double r = c.discount_rate;
  // M$/yr -> $B present value: perpetuity at the discount rate, times the
  // science reinvestment multiplier, discounted to the solver year.
  const double npv_factor = (1.0 / r) * c.science_multiplier *
                            std::pow(1.0 - r, c.solver_year_offset) / 1000.0;

  std::vector<double> annual = stage == Stage::s23
                                   ? stage23_annual_savings(c, seed, n)
                                   : stage45_annual_savings(c, seed, n);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = annual[i] * npv_factor;

  if (stage == Stage::s45_with_sc) {
    const std::vector<double> years = superconductor_npv_years(c, seed, n, opt);
    Rng rng(derive_seed(seed, stream::transmission));
    for (std::size_t i = 0; i < n; ++i) {
      const double rate_b = draw(c.transmission, rng) / 1000.0;  // M$/yr -> $B/yr
      values[i] += years[i] * rate_b;
    }
  }
  return UtilityDistribution(std::move(values));
}

UtilityDistribution transmission_spillover(const EconomicConstants& c, std::uint64_t seed,
                                           std::size_t n, const SpilloverOptions& opt) {
  const std::vector<double> years = superconductor_npv_years(c, seed, n, opt);
  Rng rng(derive_seed(seed, stream::transmission));
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = years[i] * draw(c.transmission, rng) / 1000.0;
  }
  return UtilityDistribution(std::move(values));
}

std::string to_string(Stage stage) {
  switch (stage) {
    case Stage::s23: return "stage23";
    case Stage::s45_no_sc: return "stage45_no_sc";
    case Stage::s45_with_sc: return "stage45_with_sc";
  }
  return "unknown";
}

}  // namespace fhre
