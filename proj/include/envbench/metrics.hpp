#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace envbench::metrics {

// Ground truth y (DEL values) and predictions y_hat, equal length >= 1,
// all finite.
struct PredictionSet {
    std::vector<double> truth;
    std::vector<double> pred;
    void validate() const;
};

// The seven regression metrics. A metric is nullopt when its value is
// undefined on the given data (constant truth for r2, a zero truth value
// for mre, a zero truth norm for rel_l2); the others are still returned.
struct MetricVector {
    std::optional<double> rel_l2, mre, mae, mse, rmse, r2, max_err;

    std::optional<double> get(std::size_t i) const;
};

// Leaderboard column order.
inline constexpr std::array<const char*, 7> kMetricNames = {"rel_l2", "mre",  "mae", "mse",
                                                            "rmse",   "r2",   "max_err"};
inline constexpr std::size_t kMetricCount = 7;

// Per-point quantities shared across resampled evaluations: one upfront
// pass computes them, every replicate only gathers and accumulates.
struct SharedTerms {
    std::vector<double> abs_err;  // |y_hat - y|
    std::vector<double> sq_err;   // (y_hat - y)^2
    std::vector<double> rel_err;  // |y_hat - y| / |y|  (inf/nan when y == 0)
    std::vector<double> y;
    std::vector<double> y_sq;

    static SharedTerms from(const PredictionSet& p);
    std::size_t size() const { return y.size(); }
};

// Streaming accumulator used by both the plain and the resampled paths;
// truth variance uses Welford so near-constant targets stay accurate.
struct Accumulator {
    std::size_t n = 0;
    double sum_abs = 0.0, sum_sq = 0.0, max_abs = 0.0;
    double sum_rel = 0.0;  // inf/nan once any y == 0 is touched
    double sum_ysq = 0.0;
    double mean_y = 0.0, m2_y = 0.0;

    void add(double y, double y_hat);
    void add_term(const SharedTerms& t, std::size_t i);
    MetricVector finalize() const;
};

// All seven metrics in one pass over the pair.
MetricVector compute_metrics(const PredictionSet& p);

// Metrics of the resample given by indices into the shared terms.
MetricVector compute_metrics(const SharedTerms& t, std::span<const uint32_t> indices);

}  // namespace envbench::metrics
