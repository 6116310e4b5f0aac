#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "envbench/bootstrap.hpp"
#include "envbench/dataio.hpp"
#include "envbench/metrics.hpp"
#include "envbench/partition.hpp"

namespace envbench::evaluate {

using dataio::Record;

enum class Protocol { E1, E2, E3 };

Protocol parse_protocol(const std::string& s);

struct ModelInput {
    std::string name;
    std::vector<dataio::Prediction> predictions;
};

struct EvaluationRequest {
    Protocol protocol = Protocol::E2;
    // Training rows; required when the test rows do not already carry
    // regime labels (the labeler needs the training envelope).
    std::vector<Record> train;
    std::vector<Record> test;
    std::vector<ModelInput> models;
    partition::RegimeConfig regime;
    bootstrap::BootstrapConfig boot;
    double sn_slope = 3.0;  // ground-truth target is damage^(1/sn_slope)
    unsigned threads = 0;
};

struct CellStats {
    std::size_t n = 0;
    std::optional<double> mre;  // per-regime metric (ratio, not percent)
    std::optional<double> mse;
};

struct LeaderboardRow {
    std::string model;
    metrics::MetricVector global;       // plug-in point estimates
    bootstrap::BootstrapReport ci;      // bootstrap mean/sd/percentile CI
    std::map<std::string, CellStats> cells;  // all nine joint regimes
    std::map<int, std::optional<double>> section_rel_l2;
    std::size_t n_rows = 0;
    int global_rank = 0;                 // 1-based, ascending rel_l2, name-tiebreak
    std::optional<int> exex_rank;        // by EX_EX-cell MRE; unset when cell empty
    std::optional<int> sec_first_rank;   // by per-section rel_l2 (base section)
    std::optional<int> sec_last_rank;    // (top section)
    std::optional<double> latency_ms, throughput, train_time_s;  // sidecar pass-through
};

// Evaluates every model on the test rows: global metrics with bootstrap
// CIs, MRE per joint regime cell, Rel L2 per section, and the three
// subgroup rankings. Prediction files must cover the test rows exactly.
std::vector<LeaderboardRow> evaluate_models(const EvaluationRequest& req);

struct RankShiftRow {
    std::string model;
    int global_rank = 0;
    std::optional<int> exex_rank;
    std::optional<int> sec_first_rank;
    std::optional<int> sec_last_rank;
    bool flagged = false;  // |global - EX_EX| rank gap above threshold
};

// One row per model; flags models whose global and EX_EX ranks differ by
// more than `threshold` places (0 flags any difference).
std::vector<RankShiftRow> rank_shift_report(const std::vector<LeaderboardRow>& rows,
                                            int threshold = 0);

struct Fold {
    std::vector<std::string> train_towers;
    std::string test_tower;
    std::string name() const;
};

// The leave-one-tower-out folds: ref+opt1->opt2, ref+opt2->opt1,
// opt1+opt2->ref.
std::vector<Fold> released_folds();

// E3: trains-on-two / evaluates-on-the-held-out-third. Training tables are
// only used to build the labeling envelope; the held-out tower's full table
// is the test set. Throws when the test tower appears among the train
// towers or a table is missing.
std::vector<LeaderboardRow> cross_tower_fold(const Fold& fold,
                                             const std::map<std::string, std::vector<Record>>& towers,
                                             std::vector<ModelInput> models,
                                             const partition::RegimeConfig& regime,
                                             const bootstrap::BootstrapConfig& boot,
                                             double sn_slope = 3.0, unsigned threads = 0);

// Simulation-grouped 20% holdout for users training their own surrogates;
// not consumed by the evaluator itself.
std::pair<std::vector<Record>, std::vector<Record>> validation_holdout(
    const std::vector<Record>& train, double fraction = 0.2, uint64_t seed = 42);

// Optional sidecar with externally measured compute columns
// (model,latency_ms,throughput,train_time_s); matched by model name.
void apply_sidecar(std::vector<LeaderboardRow>& rows, const std::string& path);

// Deterministic CSV emitters. Leaderboard columns: rank, model, then each
// metric with its _lo/_hi percentile bounds; MRE columns are percentages.
void write_leaderboard(const std::vector<LeaderboardRow>& rows, const std::string& path);
void write_regime_matrix(const std::vector<LeaderboardRow>& rows, const std::string& path);
void write_rank_shift(const std::vector<RankShiftRow>& rows, const std::string& path);
void write_sections(const std::vector<LeaderboardRow>& rows, const std::string& path,
                    bool all_sections = false);

}  // namespace envbench::evaluate
