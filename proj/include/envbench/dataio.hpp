#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "envbench/regime.hpp"

namespace envbench::dataio {

// One per-section, per-simulation row of the tabular benchmark.
struct Record {
    int64_t sim_id = 0;
    int section_id = 0;
    int wind_speed_id = 0;
    int wave_hs_id = 0;
    int wave_tp_id = 0;
    int wind_seed_id = 0;
    double wind_speed = 0.0;       // nominal hub-height wind speed (m/s)
    double mean_wind_speed = 0.0;  // realized 10-min mean (m/s)
    double std_wind_speed = 0.0;   // realized 10-min std (m/s)
    double wave_hs = 0.0;          // significant wave height (m)
    double wave_tp = 0.0;          // wave peak period (s)
    double section_height_m = 0.0;
    double section_radius_m = 0.0;
    double section_thickness_m = 0.0;
    std::optional<Regime> wind_group;  // present on train/test files only
    std::optional<Regime> wave_group;
    double damage = 0.0;
    double damage_weight = 0.0;

    // Joint regime, derived at load time, never stored in the files.
    std::string joint_group() const;
};

enum class FileKind { Raw, Train, Test };

FileKind parse_file_kind(const std::string& s);

// Declared ID ranges used by the validator. Defaults match the released
// 22x7x7 envelope with 6 seeds and 30 sections.
struct GridShape {
    int n_wind = 22;
    int n_hs = 7;
    int n_tp = 7;
    int n_seeds = 6;
    int n_sections = 30;
};

struct ParseOptions {
    GridShape grid;
    // Strict mode treats feature inconsistencies within a sim_id as errors;
    // permissive mode downgrades them to warnings.
    bool strict = true;
};

struct ValidationIssue {
    std::size_t line = 0;  // 1-based file line (header is line 1)
    bool fatal = true;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    std::size_t rows = 0;
    // Sum of damage_weight over the rows of one section (the lowest present).
    // Reported only; whether it equals 1 is a dataset property, not a rule.
    double section_weight_sum = 0.0;
    bool ok() const;
};

// Loads and validates one benchmark CSV. With a report sink every issue is
// collected (fatal ones still abort the load at the end); without one the
// first fatal issue throws immediately.
std::vector<Record> load_dataset(const std::string& path, FileKind kind,
                                 const ParseOptions& opt = {},
                                 ValidationReport* report = nullptr);

// Deterministic writer: fixed column order, shortest round-trip floats,
// LF endings. load(save(x)) reproduces every field bit-exactly.
void save_dataset(const std::vector<Record>& records, const std::string& path, FileKind kind);

// Lifetime damage of one section: sum of damage * damage_weight over the
// rows of that section. Throws if the section has no rows.
double lifetime_damage(const std::vector<Record>& records, int section_id);

struct Prediction {
    int64_t sim_id = 0;
    int section_id = 0;
    double value = 0.0;  // DEL-format prediction
};

std::vector<Prediction> load_predictions(const std::string& path);
void save_predictions(const std::vector<Prediction>& rows, const std::string& path);

}  // namespace envbench::dataio
