#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fhre {

enum class DistFamily { beta, log_normal, normal, uniform, bernoulli, point_mass };

/// Two-parameter distribution description: Beta(a,b), LogNormal(mu,sigma),
/// Normal(mu,sigma), Uniform(lo,hi), Bernoulli(p), PointMass(v).
struct DistributionSpec {
  DistFamily family = DistFamily::point_mass;
  double a = 0.0;
  double b = 0.0;

  void validate() const;
  double mean() const;
};

std::vector<double> sample(const DistributionSpec& dist, std::size_t n, std::uint64_t seed);

/// Dollar figures in M$/yr unless noted; the annual pools and fixed costs
/// feeding the savings model, plus the distributions over the uncertain
/// factors. Everything is overridable through the JSON config.
struct EconomicConstants {
  double hpc_pool = 589.0;
  double energy_hpc = 2.05;
  double carbon_hpc = 1.56;
  double experiment_pool = 817.0;  // 525 x-ray + 292 neutron
  double knowledge_fixed = 1.3;
  double personnel = 20.5;
  double discount_rate = 0.05;
  double science_multiplier = 5.0;
  double solver_year_offset = 10.0;
  double sc_exist_probability = 0.8;
  DistributionSpec transmission{DistFamily::uniform, 4000.0, 8000.0};  // M$/yr
  DistributionSpec hpc_fraction{DistFamily::beta, 2.0, 8.0};
  DistributionSpec productivity_gain{DistFamily::beta, 1.0, 4.0};
  DistributionSpec guidance_fraction{DistFamily::beta, 1.0, 99.0};
  DistributionSpec sc_discovery_years{DistFamily::log_normal, 3.5, 1.0};
  DistributionSpec sc_acceleration{DistFamily::beta, 2.0, 4.0};

  double personnel_base() const { return knowledge_fixed + personnel; }
};

/// Alternate readings of the spillover net-present-value expression.
struct SpilloverOptions {
  /// Existence enters as a Bernoulli draw (true) or as a deterministic
  /// 0.8 weight on every sample (false).
  bool bernoulli_existence = true;
  /// Acceleration multiplies the remaining time (true) or is subtracted
  /// from it (false).
  bool multiplicative_acceleration = true;
};

/// Annual stage-2/3 savings per sample (M$/yr):
/// Beta(2,8)*hpc_pool + energy + carbon + personnel_base*Beta(1,4).
std::vector<double> stage23_annual_savings(const EconomicConstants& c, std::uint64_t seed,
                                           std::size_t n);

/// Stage-4/5 adds experimental-guidance savings Beta(1,99)*experiment_pool.
std::vector<double> stage45_annual_savings(const EconomicConstants& c, std::uint64_t seed,
                                           std::size_t n);

/// Superconductor spillover in years of today's annual savings:
/// 0 when no superconductor exists or it is found before the solver;
/// otherwise (1/r)((1-r)^z - (1-r)^y) with y the discovery year and
/// z = offset + (y-offset)*Beta(2,4).
std::vector<double> superconductor_npv_years(const EconomicConstants& c, std::uint64_t seed,
                                             std::size_t n, const SpilloverOptions& opt = {});

/// Reduction y - z in years to discovery (0 for the non-existence /
/// pre-solver mass).
std::vector<double> superconductor_reduction_years(const EconomicConstants& c,
                                                   std::uint64_t seed, std::size_t n,
                                                   const SpilloverOptions& opt = {});

/// Monte Carlo sample set with quantile / histogram accessors.
class UtilityDistribution {
 public:
  UtilityDistribution() = default;
  explicit UtilityDistribution(std::vector<double> samples);

  const std::vector<double>& samples() const { return samples_; }
  double mean() const { return mean_; }

  /// Linearly interpolated empirical quantile, q in [0, 1].
  double quantile(double q) const;

  /// Fraction of samples equal to zero (within 1e-12).
  double mass_at_zero() const;

  struct Histogram {
    std::vector<double> edges;  // n_bins + 1
    std::vector<double> pdf;    // density per bin
    std::vector<double> cdf;    // right-edge cumulative, last == 1
  };
  Histogram histogram(int n_bins) const;

 private:
  std::vector<double> samples_;  // kept in draw order
  std::vector<double> sorted_;
  double mean_ = 0.0;
};

enum class Stage { s23, s45_no_sc, s45_with_sc };

/// Present value in $B: annual savings A (M$/yr) discounted into
/// A * (1/r) * science_multiplier * (1-r)^offset / 1000, plus, for
/// s45_with_sc, the superconductor years times Uniform(4,8) $B/yr.
UtilityDistribution aggregate_stage(Stage stage, const EconomicConstants& c,
                                    std::uint64_t seed, std::size_t n,
                                    const SpilloverOptions& opt = {});

/// Transmission-line spillover alone: npv_years * Uniform(4,8) $B/yr.
UtilityDistribution transmission_spillover(const EconomicConstants& c, std::uint64_t seed,
                                           std::size_t n, const SpilloverOptions& opt = {});

std::string to_string(Stage stage);

}  // namespace fhre
