#include "envbench/metrics.hpp"

#include <cmath>

#include "envbench/error.hpp"

namespace envbench::metrics {

void PredictionSet::validate() const {
    require(truth.size() == pred.size(), "truth and prediction lengths differ");
    require(!truth.empty(), "prediction set is empty");
    for (double v : truth) require(std::isfinite(v), "non-finite truth value");
    for (double v : pred) require(std::isfinite(v), "non-finite prediction value");
}

std::optional<double> MetricVector::get(std::size_t i) const {
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

SharedTerms SharedTerms::from(const PredictionSet& p) {
    p.validate();
    const std::size_t n = p.truth.size();
    SharedTerms t;
    t.abs_err.resize(n);
    t.sq_err.resize(n);
    t.rel_err.resize(n);
    t.y.resize(n);
    t.y_sq.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = p.pred[i] - p.truth[i];
        t.abs_err[i] = std::fabs(r);
        t.sq_err[i] = r * r;
        t.rel_err[i] = std::fabs(r) / std::fabs(p.truth[i]);
        t.y[i] = p.truth[i];
        t.y_sq[i] = p.truth[i] * p.truth[i];
    }
    return t;
}

void Accumulator::add(double y, double y_hat) {
    const double r = y_hat - y;
    const double a = std::fabs(r);
    ++n;
    sum_abs += a;
    sum_sq += r * r;
    if (a > max_abs) max_abs = a;
    sum_rel += a / std::fabs(y);
    sum_ysq += y * y;
    const double delta = y - mean_y;
    mean_y += delta / static_cast<double>(n);
    m2_y += delta * (y - mean_y);
}

void Accumulator::add_term(const SharedTerms& t, std::size_t i) {
    ++n;
    sum_abs += t.abs_err[i];
    sum_sq += t.sq_err[i];
    if (t.abs_err[i] > max_abs) max_abs = t.abs_err[i];
    sum_rel += t.rel_err[i];
    sum_ysq += t.y_sq[i];
    const double y = t.y[i];
    const double delta = y - mean_y;
    mean_y += delta / static_cast<double>(n);
    m2_y += delta * (y - mean_y);
}

MetricVector Accumulator::finalize() const {
    MetricVector m;
    if (n == 0) return m;
    const double dn = static_cast<double>(n);
    m.mae = sum_abs / dn;
    m.mse = sum_sq / dn;
    m.rmse = std::sqrt(*m.mse);
    m.max_err = max_abs;
    if (std::isfinite(sum_rel)) m.mre = sum_rel / dn;
    if (sum_ysq > 0.0) m.rel_l2 = std::sqrt(sum_sq / sum_ysq);
    if (m2_y > 0.0) m.r2 = 1.0 - sum_sq / m2_y;
    return m;
}

MetricVector compute_metrics(const PredictionSet& p) {
    p.validate();
    Accumulator acc;
    for (std::size_t i = 0; i < p.truth.size(); ++i) acc.add(p.truth[i], p.pred[i]);
    return acc.finalize();
}

MetricVector compute_metrics(const SharedTerms& t, std::span<const uint32_t> indices) {
    Accumulator acc;
    for (uint32_t i : indices) acc.add_term(t, i);
    return acc.finalize();
}

}  // namespace envbench::metrics
