#include "envbench/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "envbench/error.hpp"
#include "envbench/parallel.hpp"
#include "envbench/prng.hpp"

namespace envbench::bootstrap {

void BootstrapConfig::validate() const {
    require(resamples >= 2, "bootstrap needs at least 2 resamples");
    require(alpha > 0.0 && alpha < 1.0, "bootstrap alpha must be in (0, 1)");
}

std::optional<MetricCI> BootstrapReport::get(std::size_t i) const {
    switch (i) {
        case 0: return rel_l2;
        case 1: return mre;
        case 2: return mae;
        case 3: return mse;
        case 4: return rmse;
        case 5: return r2;
        case 6: return max_err;
    }
    return std::nullopt;
}

std::optional<MetricCI>& BootstrapReport::slot(std::size_t i) {
    switch (i) {
        case 0: return rel_l2;
        case 1: return mre;
        case 2: return mae;
        case 3: return mse;
        case 4: return rmse;
        case 5: return r2;
        case 6: return max_err;
    }
    fail("metric index out of range");
}

double percentile_linear(std::span<const double> sorted, double p) {
    require(!sorted.empty(), "percentile of empty sample");
    require(p >= 0.0 && p <= 1.0, "percentile must be in [0, 1]");
    const double h = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

BootstrapReport bootstrap_metrics(const metrics::PredictionSet& p, const BootstrapConfig& cfg,
                                  unsigned threads) {
    cfg.validate();
    const metrics::SharedTerms terms = metrics::SharedTerms::from(p);
    const std::size_t n = terms.size();
    const std::size_t b_count = cfg.resamples;

    // Per-replicate sub-seeds come off the master stream in replicate
    // order; after this the replicates are order-free.
    std::vector<uint64_t> sub_seeds(b_count);
    SplitMix64 master(cfg.seed);
    for (auto& s : sub_seeds) s = master.next();

    constexpr double kUndefined = std::numeric_limits<double>::quiet_NaN();
    std::vector<std::vector<double>> replicates(metrics::kMetricCount,
                                                std::vector<double>(b_count));
    parallel_for(b_count, threads, [&](std::size_t b) {
        Xoshiro256 rng(sub_seeds[b]);
        metrics::Accumulator acc;
        for (std::size_t j = 0; j < n; ++j) {
            acc.add_term(terms, static_cast<std::size_t>(rng.below(n)));
        }
        const metrics::MetricVector mv = acc.finalize();
        for (std::size_t m = 0; m < metrics::kMetricCount; ++m) {
            const auto v = mv.get(m);
            replicates[m][b] = v.has_value() ? *v : kUndefined;
        }
    });

    BootstrapReport report;
    for (std::size_t m = 0; m < metrics::kMetricCount; ++m) {
        auto& vals = replicates[m];
        if (std::any_of(vals.begin(), vals.end(), [](double v) { return std::isnan(v); })) {
            continue;  // undefined on some replicate -> undefined CI
        }
        double sum = 0.0;
        for (double v : vals) sum += v;
        const double mean = sum / static_cast<double>(b_count);
        double ss = 0.0;
        for (double v : vals) ss += (v - mean) * (v - mean);
        const double sd = std::sqrt(ss / static_cast<double>(b_count - 1));
        std::sort(vals.begin(), vals.end());
        report.slot(m) = MetricCI{mean, sd, percentile_linear(vals, cfg.alpha / 2.0),
                                  percentile_linear(vals, 1.0 - cfg.alpha / 2.0)};
    }
    return report;
}

Overlap ci_overlap(const MetricCI& a, const MetricCI& b) {
    return (a.hi < b.lo || b.hi < a.lo) ? Overlap::Disjoint : Overlap::Overlapping;
}

}  // namespace envbench::bootstrap
