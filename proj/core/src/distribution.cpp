#include "ddsim/distribution.hpp"

#include "ddsim/errors.hpp"

#include <boost/math/distributions/exponential.hpp>
#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/lognormal.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/triangular.hpp>
#include <boost/math/distributions/uniform.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ddsim {
namespace {

constexpr std::array<std::pair<DistributionFamily, std::string_view>, 7> kNames{{
    {DistributionFamily::fixed, "fixed"},
    {DistributionFamily::normal, "normal"},
    {DistributionFamily::exponential, "exponential"},
    {DistributionFamily::uniform, "uniform"},
    {DistributionFamily::lognormal, "lognormal"},
    {DistributionFamily::gamma, "gamma"},
    {DistributionFamily::triangular, "triangular"},
}};

double gamma_draw(double shape, Rng& rng) {
    // Marsaglia & Tsang; shape < 1 uses the boost G(k) = G(k + 1) * U^(1/k).
    if (shape < 1.0) return gamma_draw(shape + 1.0, rng) * std::pow(rng.uniform_pos(), 1.0 / shape);
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = rng.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform_pos();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double raw_draw(const DistributionSpec& s, Rng& rng) {
    const auto& p = s.params;
    switch (s.family) {
    case DistributionFamily::fixed:
        return p[0];
    case DistributionFamily::normal:
        return p[0] + p[1] * rng.normal();
    case DistributionFamily::exponential:
        return -p[0] * std::log(rng.uniform_pos());
    case DistributionFamily::uniform:
        return p[0] + (p[1] - p[0]) * rng.uniform();
    case DistributionFamily::lognormal:
        return std::exp(p[0] + p[1] * rng.normal());
    case DistributionFamily::gamma:
        return gamma_draw(p[0], rng) * p[1];
    case DistributionFamily::triangular: {
        const double lo = p[0], mode = p[1], hi = p[2];
        const double u = rng.uniform();
        const double split = (mode - lo) / (hi - lo);
        if (u < split) return lo + std::sqrt(u * (hi - lo) * (mode - lo));
        return hi - std::sqrt((1.0 - u) * (hi - lo) * (hi - mode));
    }
    }
    return 0.0;
}

}  // namespace

std::string_view to_string(DistributionFamily family) {
    for (const auto& [f, n] : kNames)
        if (f == family) return n;
    return "unknown";
}

std::optional<DistributionFamily> family_from_string(std::string_view name) {
    for (const auto& [f, n] : kNames)
        if (n == name) return f;
    return std::nullopt;
}

std::size_t parameter_count(DistributionFamily family) {
    switch (family) {
    case DistributionFamily::fixed:
    case DistributionFamily::exponential:
        return 1;
    case DistributionFamily::triangular:
        return 3;
    default:
        return 2;
    }
}

DistributionSpec DistributionSpec::fixed(double value) { return {DistributionFamily::fixed, {value}, 0.0}; }
DistributionSpec DistributionSpec::normal(double mean, double stddev) {
    return {DistributionFamily::normal, {mean, stddev}, 0.0};
}
DistributionSpec DistributionSpec::exponential(double mean) {
    return {DistributionFamily::exponential, {mean}, 0.0};
}
DistributionSpec DistributionSpec::uniform(double min, double max) {
    return {DistributionFamily::uniform, {min, max}, 0.0};
}
DistributionSpec DistributionSpec::lognormal(double mu, double sigma) {
    return {DistributionFamily::lognormal, {mu, sigma}, 0.0};
}
DistributionSpec DistributionSpec::gamma(double shape, double scale) {
    return {DistributionFamily::gamma, {shape, scale}, 0.0};
}
DistributionSpec DistributionSpec::triangular(double min, double mode, double max) {
    return {DistributionFamily::triangular, {min, mode, max}, 0.0};
}

void DistributionSpec::validate() const {
    auto fail = [&](const char* why) {
        throw ArgumentError(std::string(to_string(family)) + " distribution: " + why);
    };
    if (params.size() != parameter_count(family)) fail("wrong number of parameters");
    for (double v : params)
        if (!std::isfinite(v)) fail("non-finite parameter");
    if (!(fit_error >= 0.0)) fail("negative fit error");
    const auto& p = params;
    switch (family) {
    case DistributionFamily::fixed:
        if (p[0] < 0.0) fail("negative value");
        break;
    case DistributionFamily::normal:
        if (!(p[1] > 0.0)) fail("stddev must be positive");
        break;
    case DistributionFamily::exponential:
        if (!(p[0] > 0.0)) fail("mean must be positive");
        break;
    case DistributionFamily::uniform:
        if (!(p[0] < p[1])) fail("min must be below max");
        break;
    case DistributionFamily::lognormal:
        if (!(p[1] > 0.0)) fail("sigma must be positive");
        break;
    case DistributionFamily::gamma:
        if (!(p[0] > 0.0) || !(p[1] > 0.0)) fail("shape and scale must be positive");
        break;
    case DistributionFamily::triangular:
        if (!(p[0] <= p[1] && p[1] <= p[2] && p[0] < p[2])) fail("need min <= mode <= max, min < max");
        break;
    }
}

double DistributionSpec::mean() const {
    const auto& p = params;
    switch (family) {
    case DistributionFamily::fixed:
    case DistributionFamily::normal:
    case DistributionFamily::exponential:
        return p[0];
    case DistributionFamily::uniform:
        return 0.5 * (p[0] + p[1]);
    case DistributionFamily::lognormal:
        return std::exp(p[0] + 0.5 * p[1] * p[1]);
    case DistributionFamily::gamma:
        return p[0] * p[1];
    case DistributionFamily::triangular:
        return (p[0] + p[1] + p[2]) / 3.0;
    }
    return 0.0;
}

double DistributionSpec::cdf(double x) const {
    namespace bm = boost::math;
    const auto& p = params;
    switch (family) {
    case DistributionFamily::fixed:
        return x >= p[0] ? 1.0 : 0.0;
    case DistributionFamily::normal:
        return bm::cdf(bm::normal_distribution<>(p[0], p[1]), x);
    case DistributionFamily::exponential:
        return x <= 0.0 ? 0.0 : bm::cdf(bm::exponential_distribution<>(1.0 / p[0]), x);
    case DistributionFamily::uniform:
        return x <= p[0] ? 0.0 : x >= p[1] ? 1.0 : bm::cdf(bm::uniform_distribution<>(p[0], p[1]), x);
    case DistributionFamily::lognormal:
        return x <= 0.0 ? 0.0 : bm::cdf(bm::lognormal_distribution<>(p[0], p[1]), x);
    case DistributionFamily::gamma:
        return x <= 0.0 ? 0.0 : bm::cdf(bm::gamma_distribution<>(p[0], p[1]), x);
    case DistributionFamily::triangular:
        return x <= p[0] ? 0.0 : x >= p[2] ? 1.0 : bm::cdf(bm::triangular_distribution<>(p[0], p[1], p[2]), x);
    }
    return 0.0;
}

namespace {

void check_samples(std::span<const double> samples) {
    if (samples.empty()) throw ArgumentError("cannot fit a distribution to zero samples");
    for (double x : samples) {
        if (!std::isfinite(x)) throw ArgumentError("non-finite sample");
        if (x < 0.0) throw ArgumentError("negative sample " + std::to_string(x));
    }
}

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

Moments moments(std::span<const double> xs) {
    Moments m;
    const double n = static_cast<double>(xs.size());
    m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    m.variance = ss / n;
    const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    m.lo = *lo;
    m.hi = *hi;
    return m;
}

}  // namespace

std::vector<DistributionSpec> fit_all_families(std::span<const double> samples) {
    check_samples(samples);
    std::vector<double> xs(samples.begin(), samples.end());
    std::sort(xs.begin(), xs.end());
    const Moments mo = moments(xs);
    const double m = mo.mean, v = mo.variance, sd = std::sqrt(v);

    std::vector<DistributionSpec> cands;
    cands.push_back(DistributionSpec::fixed(m));
    if (v > 0.0) {
        cands.push_back(DistributionSpec::normal(m, sd));
        if (m > 0.0) cands.push_back(DistributionSpec::exponential(m));
        cands.push_back(DistributionSpec::uniform(m - std::sqrt(3.0 * v), m + std::sqrt(3.0 * v)));
        if (m > 0.0) {
            const double s2 = std::log1p(v / (m * m));
            cands.push_back(DistributionSpec::lognormal(std::log(m) - 0.5 * s2, std::sqrt(s2)));
            cands.push_back(DistributionSpec::gamma(m * m / v, v / m));
        }
        if (mo.lo < mo.hi)
            cands.push_back(DistributionSpec::triangular(mo.lo, std::clamp(3.0 * m - mo.lo - mo.hi, mo.lo, mo.hi),
                                                         mo.hi));
    }

    const std::size_t n = xs.size();
    for (auto& c : cands) {
        double sse = 0.0;
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j < n && xs[j] == xs[i]) ++j;
            const double emp = static_cast<double>(j) / static_cast<double>(n);
            const double diff = emp - c.cdf(xs[i]);
            sse += static_cast<double>(j - i) * diff * diff;
            i = j;
        }
        c.fit_error = std::sqrt(sse / static_cast<double>(n));
    }
    return cands;
}

DistributionSpec fit_distribution(std::span<const double> samples) {
    check_samples(samples);
    const Moments mo = moments(samples);
    if (samples.size() < 5 || mo.variance == 0.0) return DistributionSpec::fixed(mo.mean);

    const auto cands = fit_all_families(samples);
    const auto best = std::min_element(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
        return a.fit_error < b.fit_error;
    });
    const DistributionSpec* chosen = &*best;
    const double allowance = parsimony_allowance(best->fit_error, samples.size());
    for (const auto& c : cands) {
        if (parameter_count(c.family) >= parameter_count(chosen->family)) continue;
        if (c.fit_error <= allowance) chosen = &c;
    }
    return *chosen;
}

double parsimony_allowance(double best_error, std::size_t n) {
    return best_error * (1.0 + kParsimonyTolerance) + kParsimonySlack / std::sqrt(static_cast<double>(n));
}

double sample(const DistributionSpec& spec, Rng& rng) {
    for (int attempt = 0; attempt <= 100; ++attempt) {
        const double x = raw_draw(spec, rng);
        if (x >= 0.0) return x;
    }
    return 0.0;
}

}  // namespace ddsim
