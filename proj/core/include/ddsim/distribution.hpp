#pragma once

#include "ddsim/random.hpp"

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ddsim {

enum class DistributionFamily { fixed, normal, exponential, uniform, lognormal, gamma, triangular };

inline constexpr std::array<DistributionFamily, 7> kAllFamilies{
    DistributionFamily::fixed,     DistributionFamily::normal, DistributionFamily::exponential,
    DistributionFamily::uniform,   DistributionFamily::lognormal, DistributionFamily::gamma,
    DistributionFamily::triangular};

std::string_view to_string(DistributionFamily family);
std::optional<DistributionFamily> family_from_string(std::string_view name);
/// Number of parameters the family carries.
std::size_t parameter_count(DistributionFamily family);

/// A parametrised density over seconds. Parameter layout:
///   fixed       {value}
///   normal      {mean, stddev}
///   exponential {mean}
///   uniform     {min, max}
///   lognormal   {mu, sigma}          (of the underlying normal)
///   gamma       {shape, scale}
///   triangular  {min, mode, max}
struct DistributionSpec {
    DistributionFamily family = DistributionFamily::fixed;
    std::vector<double> params{0.0};
    double fit_error = 0.0;

    static DistributionSpec fixed(double value);
    static DistributionSpec normal(double mean, double stddev);
    static DistributionSpec exponential(double mean);
    static DistributionSpec uniform(double min, double max);
    static DistributionSpec lognormal(double mu, double sigma);
    static DistributionSpec gamma(double shape, double scale);
    static DistributionSpec triangular(double min, double mode, double max);

    /// Throws ArgumentError when the parameters do not suit the family.
    void validate() const;
    double mean() const;
    double cdf(double x) const;

    friend bool operator==(const DistributionSpec&, const DistributionSpec&) = default;
};

/// Method-of-moments fit of every family that admits the sample moments
/// (mean m, population variance v, extremes lo/hi):
///   fixed(m); normal(m, sqrt v); exponential(m);
///   uniform(m - sqrt(3v), m + sqrt(3v));
///   lognormal: sigma^2 = ln(1 + v/m^2), mu = ln m - sigma^2/2;
///   gamma: shape = m^2/v, scale = v/m;
///   triangular: min = lo, max = hi, mode = clamp(3m - lo - hi, lo, hi).
/// Each candidate's fit_error is the root mean square difference between the
/// empirical CDF (#{x_j <= x_i} / n) and the fitted CDF over the sample points.
/// Candidates come back in kAllFamilies order.
std::vector<DistributionSpec> fit_all_families(std::span<const double> samples);

/// Smallest fit_error wins; a family with fewer parameters is kept when its
/// error stays within parsimony_allowance() of a richer winner.
/// Fewer than five samples or zero variance give fixed(mean).
/// Throws ArgumentError for empty input or negative / non-finite samples.
DistributionSpec fit_distribution(std::span<const double> samples);

inline constexpr double kParsimonyTolerance = 0.10;
/// Absolute slack scaled by 1/sqrt(n), roughly the ECDF sampling noise.
inline constexpr double kParsimonySlack = 0.5;

/// Largest error a simpler family may have and still beat the best fit.
double parsimony_allowance(double best_error, std::size_t n);

/// One draw in seconds, never negative: negative draws are redrawn up to 100
/// times and then clamped to 0.
double sample(const DistributionSpec& spec, Rng& rng);

}  // namespace ddsim
