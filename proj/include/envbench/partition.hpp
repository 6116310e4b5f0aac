#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "envbench/dataio.hpp"
#include "envbench/geometry.hpp"
#include "envbench/regime.hpp"

namespace envbench::partition {

using dataio::Record;

// Grid-index train/test assignment per envelope axis. A record is a train
// row iff all three of its IDs are in the train sets.
struct SplitSpec {
    std::set<int> wind_train, wind_test;
    std::set<int> hs_train, hs_test;
    std::set<int> tp_train, tp_test;

    // The released partition: wind {2-7, 9-14, 16-21} / {1, 8, 15, 22},
    // wave Hs and Tp both {2, 3, 5, 6} / {1, 4, 7}.
    static SplitSpec released();

    // Disjointness and full coverage of 1..n per axis.
    void validate(int n_wind, int n_hs, int n_tp) const;
};

// Parses "2-7,9-14,16-21" into an ID set.
std::set<int> parse_id_set(const std::string& text);

std::pair<std::vector<Record>, std::vector<Record>> apply_split(const std::vector<Record>& records,
                                                                const SplitSpec& spec);

// Simulation-grouped random assignment: all rows of a sim_id land in the
// same fold, the train fold gets exactly round(fraction * total) rows, and
// the draw is a pinned function of the seed. Throws when the target row
// count is not a whole number of simulations.
std::pair<std::vector<Record>, std::vector<Record>> random_split(
    const std::vector<Record>& records, double train_fraction, uint64_t seed);
std::pair<std::vector<Record>, std::vector<Record>> random_split_rows(
    const std::vector<Record>& records, std::size_t train_rows, uint64_t seed);

struct RegimeConfig {
    double tau = 0.5;       // IT/IP threshold on spacing-normalized distance
    double alpha = 0.1;     // hull parameter, standardized coordinates
    double epsilon = 1e-6;  // slack band outside the hull that stays IP
    geom::AlphaRule alpha_rule = geom::AlphaRule::InverseRadius;

    void validate() const;
};

struct RegimeLabel {
    Regime wind = Regime::IP;
    Regime wave = Regime::IP;
    std::string joint() const;
};

// Mean nearest-neighbor distance over the distinct points of a cloud
// (duplicates are dropped first; d holds one entry per unique point in
// first-occurrence order).
struct SpacingScale {
    double s = 0.0;
    std::vector<double> d;
};

SpacingScale spacing_scale(std::span<const geom::Point> pts);

// Three-stage labeling of one 2-D subspace. Both clouds must already be in
// the standardized units of a scaler fitted on the training rows.
// Stage 1: mean train-train nearest-neighbor spacing s. Stage 2: test points
// with nearest-train distance <= tau * s are IT, the rest IP. Stage 3:
// points outside the alpha-shape hull by at least epsilon become EX.
std::vector<Regime> label_axis(std::span<const geom::Point> train_std,
                               std::span<const geom::Point> test_std, const RegimeConfig& cfg);

// Per-record labels: wind subspace is (mean_wind_speed, std_wind_speed),
// wave subspace is (wave_hs, wave_tp); scalers are fitted on the train rows.
std::vector<RegimeLabel> label_records(const std::vector<Record>& train,
                                       const std::vector<Record>& test, const RegimeConfig& cfg);

// Copies of train/test with group fields populated (train rows get the
// In-train marker), ready for save_dataset.
std::pair<std::vector<Record>, std::vector<Record>> label_split(const std::vector<Record>& train,
                                                                const std::vector<Record>& test,
                                                                const RegimeConfig& cfg);

// Hulls and scalers of one labeling run, for the debug hull export.
struct AxisGeometry {
    geom::Standardizer scaler;
    geom::AlphaShape hull;
    SpacingScale spacing;
};
AxisGeometry axis_geometry(const std::vector<Record>& train, bool wind_axis,
                           const RegimeConfig& cfg);

}  // namespace envbench::partition
