#pragma once

#include <cstdint>
#include <vector>

#include "envbench/dataio.hpp"

namespace envbench::synth {

using dataio::Record;

// Desk-scale fixture generator. Mirrors the released envelope structure:
// a dense (n_wind x n_hs x n_tp) condition grid, wind realizations shared
// across sea states per (wind bin, seed), wave states shared across seeds,
// saturated extreme wave levels, and a smooth positive damage function
// that grows convexly with mean wind so extrapolated bins are genuinely
// out of range for interpolating surrogates.
struct SynthConfig {
    int n_wind = 22;
    int n_hs = 7;
    int n_tp = 7;
    int n_seeds = 6;
    int n_sections = 30;
    uint64_t seed = 42;

    double cut_in = 3.0;    // m/s, envelope lower edge
    double cut_out = 25.0;  // m/s, envelope upper edge
    double mean_jitter = 0.45;   // m/s std of realized mean wind around nominal
    double turbulence_intensity = 0.14;
    double std_jitter = 0.25;    // relative jitter of realized std wind
    double wave_warp = 0.35;     // wind-dependent warp of interior wave levels
    double damage_scale = 1.0;

    void validate() const;
};

// Deterministic by seed; emitted records satisfy every loader invariant and
// the per-section damage weights sum to 1.
std::vector<Record> generate_dataset(const SynthConfig& cfg);

// Exact k-nearest-neighbor reference surrogate over the seven tabular
// features (mean wind, std wind, Hs, Tp, section height/radius/thickness),
// standardized on the training rows. Predicts the mean DEL
// (damage^(1/3)) of the k nearest training rows; distance ties break by
// smallest sim_id, then section_id.
std::vector<double> knn_predict(const std::vector<Record>& train,
                                const std::vector<Record>& query, int k, unsigned threads = 0);

}  // namespace envbench::synth
