#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "envbench/metrics.hpp"

namespace envbench::bootstrap {

struct BootstrapConfig {
    uint64_t resamples = 2000;  // B
    double alpha = 0.05;        // 1 - confidence level
    uint64_t seed = 42;
    void validate() const;  // B >= 2, 0 < alpha < 1
};

// Percentile-bootstrap summary of one metric: replicate mean, replicate
// standard deviation (ddof = 1), and the alpha/2 and 1-alpha/2 percentiles
// (linear interpolation between closest ranks).
struct MetricCI {
    double mean = 0.0;
    double sd = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

// A metric's CI is nullopt when the metric was undefined on any replicate.
struct BootstrapReport {
    std::optional<MetricCI> rel_l2, mre, mae, mse, rmse, r2, max_err;
    std::optional<MetricCI> get(std::size_t i) const;
    std::optional<MetricCI>& slot(std::size_t i);
};

// Percentile bootstrap over N index draws per replicate. Replicate b's
// index stream is derived from the seed and b alone, so results are
// bit-identical for any thread count. Each replicate evaluates all seven
// metrics from shared per-point terms in a single pass.
BootstrapReport bootstrap_metrics(const metrics::PredictionSet& p, const BootstrapConfig& cfg,
                                  unsigned threads = 0);

enum class Overlap { Disjoint, Overlapping };

// Disjoint iff one interval ends strictly before the other begins.
Overlap ci_overlap(const MetricCI& a, const MetricCI& b);

// p-th percentile (p in [0, 1]) of an ascending-sorted sample, linear
// interpolation between closest ranks.
double percentile_linear(std::span<const double> sorted, double p);

}  // namespace envbench::bootstrap
