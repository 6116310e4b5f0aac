#pragma once

#include <span>
#include <string>
#include <vector>

namespace envbench::fatigue {

struct SectionGeometry {
    double radius_m = 0.0;     // outer radius
    double thickness_m = 0.0;  // wall thickness
    void validate() const;     // requires 0 < thickness < radius
};

// Single-slope S-N curve: cycles to failure N(S) = intercept * S^(-slope).
struct SNCurve {
    double intercept = 0.0;  // cycles * (stress unit)^slope
    double slope = 3.0;
    void validate() const;
    double cycles_to_failure(double range) const;
};

// One counted cycle: stress range, cycle mean, and a count of 0.5 (residue
// half cycle) or 1.0 (closed cycle).
struct Cycle {
    double range = 0.0;
    double mean = 0.0;
    double count = 0.0;
};
using CycleHistogram = std::vector<Cycle>;

struct DamageResult {
    double damage = 0.0;  // Miner sum
    double del = 0.0;     // damage^(1/slope)
};

// Thin-walled tube bending stress: sigma(t) = M(t) / (pi r^2 t_wall).
std::vector<double> moment_to_stress(std::span<const double> moment, const SectionGeometry& geom);

// Strict local extrema with both endpoints kept; equal-value plateaus are
// collapsed first. A constant series reduces to fewer than two points.
std::vector<double> reversals(std::span<const double> series);

// Four-point rainflow: a cycle closes whenever the inner of the three most
// recent ranges is no larger than both outer ones; whatever remains on the
// stack is counted as half cycles, so every reversal is consumed.
CycleHistogram rainflow(std::span<const double> series);

// Miner sum over the histogram: D = sum count_i / N(range_i); zero-range
// cycles contribute nothing. del = D^(1/slope).
DamageResult miner_damage(const CycleHistogram& hist, const SNCurve& curve);

// stress -> rainflow -> Miner over one moment time series.
DamageResult label_run(std::span<const double> moment, const SectionGeometry& geom,
                       const SNCurve& curve);

// Time-series input: two-column CSV (time_s,moment_Nm) or raw 64-bit
// little-endian floats at a fixed sample rate.
std::vector<double> read_series_csv(const std::string& path);
std::vector<double> read_series_binary(const std::string& path);
void write_series_csv(std::span<const double> series, double sample_rate_hz,
                      const std::string& path);

}  // namespace envbench::fatigue
