// envbench: regime-aware evaluation harness for tabular fatigue surrogates.
// Subcommands compose over CSV files; all outputs are deterministic given
// identical inputs and flags. Exit codes: 0 success, 1 domain/data error,
// 2 usage error.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "envbench/bootstrap.hpp"
#include "envbench/csv.hpp"
#include "envbench/dataio.hpp"
#include "envbench/error.hpp"
#include "envbench/evaluate.hpp"
#include "envbench/fatigue.hpp"
#include "envbench/parallel.hpp"
#include "envbench/partition.hpp"
#include "envbench/synth.hpp"

namespace {

using namespace envbench;
namespace fs = std::filesystem;

struct UsageError : Error {
    using Error::Error;
};

// Loads a benchmark CSV whether or not it carries the regime columns.
std::vector<dataio::Record> load_any(const std::string& path, const dataio::ParseOptions& opt) {
    csv::Reader peek(path);
    std::vector<std::string_view> fields;
    require(peek.next(fields), path + ": empty file");
    if (fields.size() == 16) return dataio::load_dataset(path, dataio::FileKind::Raw, opt);
    // train and test share one 18-column schema
    return dataio::load_dataset(path, dataio::FileKind::Train, opt);
}

struct RegimeFlags {
    partition::RegimeConfig cfg;
    std::string rule = "inverse-radius";

    void attach(CLI::App* cmd) {
        cmd->add_option("--tau", cfg.tau, "IT/IP threshold on spacing-normalized distance");
        cmd->add_option("--alpha", cfg.alpha, "alpha-shape parameter (standardized units)");
        cmd->add_option("--epsilon", cfg.epsilon, "slack band outside the hull that stays IP");
        cmd->add_option("--alpha-rule", rule,
                        "alpha convention: inverse-radius (keep r < 1/alpha) or radius");
    }
    partition::RegimeConfig resolve() const {
        partition::RegimeConfig out = cfg;
        out.alpha_rule = geom::parse_alpha_rule(rule);
        out.validate();
        return out;
    }
};

struct GridFlags {
    dataio::ParseOptions opt;
    void attach(CLI::App* cmd) {
        cmd->add_option("--n-wind", opt.grid.n_wind, "declared wind bin count");
        cmd->add_option("--n-hs", opt.grid.n_hs, "declared Hs level count");
        cmd->add_option("--n-tp", opt.grid.n_tp, "declared Tp level count");
        cmd->add_option("--n-seeds", opt.grid.n_seeds, "declared seed count");
        cmd->add_option("--n-sections", opt.grid.n_sections, "declared section count");
    }
};

std::pair<std::string, std::string> parse_named(const std::string& item, const char* what) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
        throw UsageError(std::string(what) + " must be NAME=PATH, got '" + item + "'");
    }
    return {item.substr(0, eq), item.substr(eq + 1)};
}

int cmd_synth(const synth::SynthConfig& cfg, std::string out_dir) {
    if (out_dir.empty()) {
        const char* env = std::getenv("ENVBENCH_OUT_DIR");
        out_dir = env ? env : ".";
    }
    fs::create_directories(out_dir);
    const auto records = synth::generate_dataset(cfg);
    const std::string path = (fs::path(out_dir) / "data.csv").string();
    dataio::save_dataset(records, path, dataio::FileKind::Raw);
    std::cout << path << ": " << records.size() << " rows\n";
    return 0;
}

int cmd_validate(const std::string& file, const std::string& kind_name, bool permissive,
                 dataio::ParseOptions opt) {
    opt.strict = !permissive;
    dataio::ValidationReport report;
    bool loaded_ok = true;
    try {
        dataio::load_dataset(file, dataio::parse_file_kind(kind_name), opt, &report);
    } catch (const Error&) {
        loaded_ok = false;
    }
    for (const auto& issue : report.issues) {
        std::cout << (issue.fatal ? "error" : "warning") << " " << file << ":" << issue.line
                  << ": " << issue.message << "\n";
    }
    std::cout << file << ": " << report.rows << " valid rows, " << report.issues.size()
              << " issue(s); section damage_weight sum = "
              << csv::format_double(report.section_weight_sum) << "\n";
    return loaded_ok && report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"regime-aware evaluation harness for tabular fatigue surrogates"};
    app.require_subcommand(1);
    app.fallthrough();

    unsigned threads = 0;
    app.add_option("--threads", threads, "worker threads (default: all cores)")
        ->capture_default_str();

    // --- synth ---
    auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic benchmark fixture");
    synth::SynthConfig synth_cfg;
    std::string synth_out;
    synth_cmd->add_option("--out-dir", synth_out, "output directory (default: $ENVBENCH_OUT_DIR or .)");
    synth_cmd->add_option("--n-wind", synth_cfg.n_wind, "wind bins")->capture_default_str();
    synth_cmd->add_option("--n-hs", synth_cfg.n_hs, "Hs levels")->capture_default_str();
    synth_cmd->add_option("--n-tp", synth_cfg.n_tp, "Tp levels")->capture_default_str();
    synth_cmd->add_option("--seeds", synth_cfg.n_seeds, "turbulence seeds per condition")
        ->capture_default_str();
    synth_cmd->add_option("--sections", synth_cfg.n_sections, "tower sections")
        ->capture_default_str();
    synth_cmd->add_option("--seed", synth_cfg.seed, "generator seed")->capture_default_str();
    synth_cmd->add_option("--mean-jitter", synth_cfg.mean_jitter, "std of realized mean wind (m/s)")
        ->capture_default_str();
    synth_cmd->add_option("--wave-warp", synth_cfg.wave_warp, "wind-dependence of interior wave levels")
        ->capture_default_str();
    synth_cmd->add_option("--damage-scale", synth_cfg.damage_scale, "overall damage magnitude")
        ->capture_default_str();

    // --- split ---
    auto* split_cmd = app.add_subcommand("split", "deterministic grid split or random grouped split");
    std::string split_input, split_train_out, split_test_out;
    split_cmd->add_option("--input", split_input, "raw data csv")->required();
    split_cmd->add_option("--train-out", split_train_out)->required();
    split_cmd->add_option("--test-out", split_test_out)->required();
    bool split_random = false;
    double split_fraction = -1.0;
    int64_t split_rows = -1;
    uint64_t split_seed = 42;
    std::string wind_train, hs_train, tp_train;
    split_cmd->add_flag("--random", split_random, "simulation-grouped random split");
    split_cmd->add_option("--train-fraction", split_fraction, "random split train fraction");
    split_cmd->add_option("--train-rows", split_rows, "random split exact train row count");
    split_cmd->add_option("--seed", split_seed, "random split seed")->capture_default_str();
    split_cmd->add_option("--wind-train", wind_train, "train wind ids, e.g. 2-7,9-14,16-21");
    split_cmd->add_option("--hs-train", hs_train, "train Hs ids, e.g. 2,3,5,6");
    split_cmd->add_option("--tp-train", tp_train, "train Tp ids, e.g. 2,3,5,6");
    GridFlags split_grid;
    split_grid.attach(split_cmd);

    // --- regimes ---
    auto* regimes_cmd =
        app.add_subcommand("regimes", "three-stage regime labeling; emits labeled train/test csvs");
    std::string reg_train_in, reg_test_in, reg_train_out, reg_test_out, hull_wind, hull_wave;
    regimes_cmd->add_option("--train", reg_train_in)->required();
    regimes_cmd->add_option("--test", reg_test_in)->required();
    regimes_cmd->add_option("--train-out", reg_train_out)->required();
    regimes_cmd->add_option("--test-out", reg_test_out)->required();
    regimes_cmd->add_option("--hull-wind", hull_wind, "debug: wind-subspace hull polyline csv");
    regimes_cmd->add_option("--hull-wave", hull_wave, "debug: wave-subspace hull polyline csv");
    RegimeFlags reg_flags;
    reg_flags.attach(regimes_cmd);
    GridFlags reg_grid;
    reg_grid.attach(regimes_cmd);

    // --- damage ---
    auto* damage_cmd = app.add_subcommand("damage", "moment time series -> damage and DEL");
    std::string series_path, series_format = "csv", damage_out;
    double radius = 0.0, thickness = 0.0, sn_a = 0.0, sn_m = 3.0;
    damage_cmd->add_option("--series", series_path, "input time series")->required();
    damage_cmd->add_option("--format", series_format, "csv or binary")->capture_default_str();
    damage_cmd->add_option("--radius", radius, "section outer radius (m)")->required();
    damage_cmd->add_option("--thickness", thickness, "section wall thickness (m)")->required();
    damage_cmd->add_option("--sn-a", sn_a, "S-N intercept (cycles * stress^m)")->required();
    damage_cmd->add_option("--sn-m", sn_m, "S-N slope")->capture_default_str();
    damage_cmd->add_option("--out", damage_out, "write damage,del csv here instead of stdout");

    // --- eval / rankshift (shared surface) ---
    struct EvalFlags {
        std::string protocol = "e2";
        std::string train_path, test_path;
        std::vector<std::string> train_towers;
        std::string test_tower;
        std::vector<std::string> preds;
        std::string out, regime_matrix, rank_shift_out, sections_out, sidecar;
        bool all_sections = false;
        int shift_threshold = 0;
        bootstrap::BootstrapConfig boot;
        double sn_m = 3.0;
        RegimeFlags regime;
        GridFlags grid;

        void attach(CLI::App* cmd, bool with_out) {
            cmd->add_option("--protocol", protocol, "e1, e2 or e3")->capture_default_str();
            cmd->add_option("--train", train_path, "training csv (labels computed when test lacks them)");
            cmd->add_option("--test", test_path, "test csv (labeled or raw)");
            cmd->add_option("--train-tower", train_towers, "e3: NAME=PATH, repeat twice");
            cmd->add_option("--test-tower", test_tower, "e3: NAME=PATH of the held-out tower");
            cmd->add_option("--pred", preds, "model predictions, NAME=PATH (repeatable)")
                ->required();
            if (with_out) {
                cmd->add_option("--out", out, "leaderboard csv")->required();
                cmd->add_option("--regime-matrix", regime_matrix, "per-regime MRE matrix csv");
                cmd->add_option("--rank-shift", rank_shift_out, "rank-shift table csv");
                cmd->add_option("--sections-out", sections_out, "per-section rel_l2 csv");
                cmd->add_flag("--all-sections", all_sections, "widen the section report to all sections");
            } else {
                cmd->add_option("--out", out, "rank-shift table csv")->required();
            }
            cmd->add_option("--shift-threshold", shift_threshold,
                            "flag models whose global/EX_EX ranks differ by more than this")
                ->capture_default_str();
            cmd->add_option("--sidecar", sidecar, "compute metadata csv to pass through");
            cmd->add_option("--bootstrap-b", boot.resamples, "bootstrap resamples")
                ->capture_default_str();
            cmd->add_option("--bootstrap-alpha", boot.alpha, "bootstrap significance level")
                ->capture_default_str();
            cmd->add_option("--seed", boot.seed, "bootstrap seed")->capture_default_str();
            cmd->add_option("--sn-m", sn_m, "S-N slope of the DEL transform")->capture_default_str();
            regime.attach(cmd);
            grid.attach(cmd);
        }

        std::vector<evaluate::LeaderboardRow> run(unsigned threads) const {
            boot.validate();
            std::vector<evaluate::ModelInput> models;
            for (const auto& item : preds) {
                auto [name, path] = parse_named(item, "--pred");
                models.push_back({name, dataio::load_predictions(path)});
            }
            const auto proto = evaluate::parse_protocol(protocol);
            std::vector<evaluate::LeaderboardRow> rows;
            if (proto == evaluate::Protocol::E3) {
                if (train_towers.size() < 2 || test_tower.empty()) {
                    throw UsageError("e3 needs two --train-tower options and --test-tower");
                }
                std::map<std::string, std::vector<dataio::Record>> towers;
                evaluate::Fold fold;
                for (const auto& item : train_towers) {
                    auto [name, path] = parse_named(item, "--train-tower");
                    towers[name] = load_any(path, grid.opt);
                    fold.train_towers.push_back(name);
                }
                auto [tname, tpath] = parse_named(test_tower, "--test-tower");
                towers[tname] = load_any(tpath, grid.opt);
                fold.test_tower = tname;
                rows = evaluate::cross_tower_fold(fold, towers, std::move(models),
                                                  regime.resolve(), boot, sn_m, threads);
            } else {
                if (test_path.empty()) throw UsageError("--test is required for e1/e2");
                evaluate::EvaluationRequest req;
                req.protocol = proto;
                req.test = load_any(test_path, grid.opt);
                if (!train_path.empty()) req.train = load_any(train_path, grid.opt);
                req.models = std::move(models);
                req.regime = regime.resolve();
                req.boot = boot;
                req.sn_slope = sn_m;
                req.threads = threads;
                rows = evaluate::evaluate_models(req);
            }
            if (!sidecar.empty()) evaluate::apply_sidecar(rows, sidecar);
            return rows;
        }
    };

    auto* eval_cmd = app.add_subcommand("eval", "evaluate prediction files into a leaderboard");
    EvalFlags eval_flags;
    eval_flags.attach(eval_cmd, /*with_out=*/true);

    auto* shift_cmd = app.add_subcommand("rankshift", "global vs subgroup rank comparison");
    EvalFlags shift_flags;
    shift_flags.attach(shift_cmd, /*with_out=*/false);

    // --- validate ---
    auto* validate_cmd = app.add_subcommand("validate", "schema and invariant check of one csv");
    std::string val_file, val_kind = "raw";
    bool permissive = false;
    validate_cmd->add_option("--file", val_file)->required();
    validate_cmd->add_option("--kind", val_kind, "raw, train or test")->capture_default_str();
    validate_cmd->add_flag("--permissive", permissive,
                           "downgrade feature-consistency violations to warnings");
    GridFlags val_grid;
    val_grid.attach(validate_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (synth_cmd->parsed()) return cmd_synth(synth_cfg, synth_out);

        if (split_cmd->parsed()) {
            const auto records = load_any(split_input, split_grid.opt);
            std::vector<dataio::Record> train, test;
            if (split_random) {
                if (split_rows >= 0) {
                    std::tie(train, test) = partition::random_split_rows(
                        records, static_cast<std::size_t>(split_rows), split_seed);
                } else if (split_fraction > 0.0) {
                    std::tie(train, test) =
                        partition::random_split(records, split_fraction, split_seed);
                } else {
                    throw UsageError("--random needs --train-fraction or --train-rows");
                }
            } else {
                partition::SplitSpec spec = partition::SplitSpec::released();
                const auto& g = split_grid.opt.grid;
                auto fill = [&](const std::string& text, std::set<int>& train_set,
                                std::set<int>& test_set, int n) {
                    if (text.empty()) return;
                    train_set = partition::parse_id_set(text);
                    test_set.clear();
                    for (int id = 1; id <= n; ++id) {
                        if (!train_set.count(id)) test_set.insert(id);
                    }
                };
                fill(wind_train, spec.wind_train, spec.wind_test, g.n_wind);
                fill(hs_train, spec.hs_train, spec.hs_test, g.n_hs);
                fill(tp_train, spec.tp_train, spec.tp_test, g.n_tp);
                spec.validate(g.n_wind, g.n_hs, g.n_tp);
                std::tie(train, test) = partition::apply_split(records, spec);
            }
            dataio::save_dataset(train, split_train_out, dataio::FileKind::Raw);
            dataio::save_dataset(test, split_test_out, dataio::FileKind::Raw);
            std::cout << split_train_out << ": " << train.size() << " rows\n"
                      << split_test_out << ": " << test.size() << " rows\n";
            return 0;
        }

        if (regimes_cmd->parsed()) {
            const auto cfg = reg_flags.resolve();
            auto train = load_any(reg_train_in, reg_grid.opt);
            auto test = load_any(reg_test_in, reg_grid.opt);
            const auto [ltrain, ltest] = partition::label_split(train, test, cfg);
            dataio::save_dataset(ltrain, reg_train_out, dataio::FileKind::Train);
            dataio::save_dataset(ltest, reg_test_out, dataio::FileKind::Test);
            std::size_t ex = 0;
            for (const auto& r : ltest) {
                if (r.wind_group == Regime::EX || r.wave_group == Regime::EX) ++ex;
            }
            std::cout << reg_test_out << ": " << ltest.size() << " rows, " << ex
                      << " with extrapolation on some axis\n";
            if (!hull_wind.empty()) {
                csv::write_file(hull_wind,
                                partition::axis_geometry(train, true, cfg).hull.boundary_csv());
            }
            if (!hull_wave.empty()) {
                csv::write_file(hull_wave,
                                partition::axis_geometry(train, false, cfg).hull.boundary_csv());
            }
            return 0;
        }

        if (damage_cmd->parsed()) {
            std::vector<double> series;
            if (series_format == "csv") {
                series = fatigue::read_series_csv(series_path);
            } else if (series_format == "binary") {
                series = fatigue::read_series_binary(series_path);
            } else {
                throw UsageError("--format must be csv or binary");
            }
            const fatigue::SectionGeometry geom{radius, thickness};
            const fatigue::SNCurve curve{sn_a, sn_m};
            const auto result = fatigue::label_run(series, geom, curve);
            std::string text = "damage,del\n";
            csv::append_double(text, result.damage);
            text += ',';
            csv::append_double(text, result.del);
            text += '\n';
            if (damage_out.empty()) {
                std::cout << text;
            } else {
                csv::write_file(damage_out, text);
            }
            return 0;
        }

        if (eval_cmd->parsed()) {
            const auto rows = eval_flags.run(threads);
            evaluate::write_leaderboard(rows, eval_flags.out);
            if (!eval_flags.regime_matrix.empty()) {
                evaluate::write_regime_matrix(rows, eval_flags.regime_matrix);
            }
            if (!eval_flags.rank_shift_out.empty()) {
                evaluate::write_rank_shift(
                    evaluate::rank_shift_report(rows, eval_flags.shift_threshold),
                    eval_flags.rank_shift_out);
            }
            if (!eval_flags.sections_out.empty()) {
                evaluate::write_sections(rows, eval_flags.sections_out, eval_flags.all_sections);
            }
            std::cout << eval_flags.out << ": " << rows.size() << " model(s)\n";
            return 0;
        }

        if (shift_cmd->parsed()) {
            const auto rows = shift_flags.run(threads);
            evaluate::write_rank_shift(
                evaluate::rank_shift_report(rows, shift_flags.shift_threshold), shift_flags.out);
            std::cout << shift_flags.out << ": " << rows.size() << " model(s)\n";
            return 0;
        }

        if (validate_cmd->parsed()) {
            return cmd_validate(val_file, val_kind, permissive, val_grid.opt);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
