// Acceptance suite: one line per criterion, PASS/FAIL/SKIP, nonzero exit on
// any failure. Conditional criteria run only when ENVBENCH_DATA_DIR points
// at the released per-tower CSVs ({ref,opt1,opt2}/data.csv); they are
// skipped, not failed, when the data is absent.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "envbench/bootstrap.hpp"
#include "envbench/dataio.hpp"
#include "envbench/evaluate.hpp"
#include "envbench/fatigue.hpp"
#include "envbench/geometry.hpp"
#include "envbench/metrics.hpp"
#include "envbench/parallel.hpp"
#include "envbench/partition.hpp"
#include "envbench/prng.hpp"
#include "envbench/synth.hpp"
#include "oracles.hpp"

using namespace envbench;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& id, const std::string& name, bool pass, const std::string& note,
            double seconds) {
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << "  " << id << "  " << name;
    if (!note.empty()) line << "  [" << note << "]";
    line << "  (" << std::fixed;
    line.precision(1);
    line << seconds << "s)";
    std::cout << line.str() << std::endl;
    if (!pass) ++failures;
}

void skip(const std::string& id, const std::string& name, const std::string& why) {
    std::cout << "SKIP  " << id << "  " << name << "  [" << why << "]" << std::endl;
}

void run(const std::string& id, const std::string& name,
         const std::function<std::pair<bool, std::string>()>& body) {
    const auto start = Clock::now();
    bool pass = false;
    std::string note;
    try {
        std::tie(pass, note) = body();
    } catch (const std::exception& e) {
        pass = false;
        note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    report(id, name, pass, note, secs);
}

const std::vector<dataio::Record>& fixture() {
    static const std::vector<dataio::Record> records =
        synth::generate_dataset(synth::SynthConfig{});
    return records;
}

const std::array<const char*, 9> kCells = {"IT_IT", "IT_IP", "IT_EX", "IP_IT", "IP_IP",
                                           "IP_EX", "EX_IT", "EX_IP", "EX_EX"};

std::map<std::string, std::size_t> composition(const std::vector<partition::RegimeLabel>& labels) {
    std::map<std::string, std::size_t> comp;
    for (const char* c : kCells) comp[c] = 0;
    for (const auto& l : labels) ++comp[l.joint()];
    return comp;
}

std::string data_dir() {
    const char* env = std::getenv("ENVBENCH_DATA_DIR");
    return env ? env : "";
}

void c01_split_arithmetic() {
    run("C01", "grid split arithmetic 51840/142200", []() -> std::pair<bool, std::string> {
        const auto [train, test] =
            partition::apply_split(fixture(), partition::SplitSpec::released());
        const bool pass =
            fixture().size() == 194040 && train.size() == 51840 && test.size() == 142200;
        return {pass, "train=" + std::to_string(train.size()) +
                          " test=" + std::to_string(test.size())};
    });
}

void c02_random_vacuity() {
    run("C02", "random split leaves every EX cell empty", []() -> std::pair<bool, std::string> {
        const auto [train, test] = partition::random_split_rows(fixture(), 51840, 42);
        if (train.size() != 51840) return {false, "train size off"};
        const auto labels = partition::label_records(train, test, partition::RegimeConfig{});
        const auto comp = composition(labels);
        std::size_t ex_rows = 0, covered = 0;
        for (const char* c : kCells) {
            const std::string cell(c);
            if (cell.find("EX") != std::string::npos) {
                ex_rows += comp.at(cell);
            } else {
                covered += comp.at(cell);
            }
        }
        const bool pass = ex_rows == 0 && covered == test.size();
        return {pass, "EX rows=" + std::to_string(ex_rows) +
                          " IT/IP rows=" + std::to_string(covered) + "/" +
                          std::to_string(test.size())};
    });
}

void c03_released_composition() {
    const std::string dir = data_dir();
    if (dir.empty()) {
        skip("C03", "released-dataset regime composition", "set ENVBENCH_DATA_DIR to run");
        return;
    }
    const std::map<std::string, std::size_t> expected = {
        {"IT_IT", 22560}, {"IT_IP", 37350}, {"IT_EX", 51420},
        {"IP_IT", 4920},  {"IP_IP", 5280},  {"IP_EX", 4500},
        {"EX_IT", 2760},  {"EX_IP", 5790},  {"EX_EX", 7620}};
    for (const char* tower : {"ref", "opt1", "opt2"}) {
        const std::string path = dir + "/" + tower + "/data.csv";
        if (!std::filesystem::exists(path)) {
            skip("C03", std::string("regime composition (") + tower + ")", path + " missing");
            continue;
        }
        run("C03", std::string("regime composition (") + tower + ")",
            [&]() -> std::pair<bool, std::string> {
                const auto records = dataio::load_dataset(path, dataio::FileKind::Raw);
                const auto [train, test] =
                    partition::apply_split(records, partition::SplitSpec::released());
                std::size_t best_mismatched = kCells.size() + 1;
                std::string best_note;
                // documented sweep over the alpha convention and epsilon
                for (const auto rule : {geom::AlphaRule::InverseRadius, geom::AlphaRule::Radius}) {
                    for (const double eps : {1e-9, 1e-6, 1e-3}) {
                        partition::RegimeConfig cfg;
                        cfg.epsilon = eps;
                        cfg.alpha_rule = rule;
                        const auto comp = composition(partition::label_records(train, test, cfg));
                        std::size_t mismatched = 0;
                        std::string diff;
                        for (const char* c : kCells) {
                            if (comp.at(c) != expected.at(c)) {
                                ++mismatched;
                                diff += std::string(c) + "=" + std::to_string(comp.at(c)) +
                                        "(want " + std::to_string(expected.at(c)) + ") ";
                            }
                        }
                        if (mismatched == 0) {
                            return {true, std::string("matched with rule=") +
                                              (rule == geom::AlphaRule::InverseRadius
                                                   ? "inverse-radius"
                                                   : "radius") +
                                              " eps=" + std::to_string(eps)};
                        }
                        if (mismatched < best_mismatched) {
                            best_mismatched = mismatched;
                            best_note = diff;
                        }
                    }
                }
                return {false, "no sweep config matched; closest per-cell diff: " + best_note};
            });
    }
}

void c04_released_spacing() {
    const std::string dir = data_dir();
    if (dir.empty() || !std::filesystem::exists(dir + "/ref/data.csv")) {
        skip("C04", "released-dataset spacing scale", "set ENVBENCH_DATA_DIR to run");
        return;
    }
    run("C04", "released-dataset spacing scale", [&]() -> std::pair<bool, std::string> {
        const auto records = dataio::load_dataset(dir + "/ref/data.csv", dataio::FileKind::Raw);
        const auto [train, test] =
            partition::apply_split(records, partition::SplitSpec::released());
        const auto wind = partition::axis_geometry(train, /*wind_axis=*/true, {});
        const auto wave = partition::axis_geometry(train, /*wind_axis=*/false, {});
        const bool pass = wind.spacing.d.size() == 108 &&
                          std::fabs(wind.spacing.s - 0.099) <= 0.001 &&
                          wave.spacing.d.size() == 288 &&
                          std::fabs(wave.spacing.s - 0.042) <= 0.001;
        std::ostringstream note;
        note << "wind n=" << wind.spacing.d.size() << " s=" << wind.spacing.s
             << "; wave n=" << wave.spacing.d.size() << " s=" << wave.spacing.s;
        return {pass, note.str()};
    });
}

void c05_metric_oracle() {
    run("C05", "metrics match naive recomputation on 10^4 random sets",
        []() -> std::pair<bool, std::string> {
            Xoshiro256 rng(2024);
            double worst = 0.0;
            for (int trial = 0; trial < 10000; ++trial) {
                const auto n = std::max<std::size_t>(
                    1, static_cast<std::size_t>(
                           std::exp(rng.unit() * std::log(10000.0))));  // log-uniform [1, 1e4]
                metrics::PredictionSet p;
                p.truth.reserve(n);
                p.pred.reserve(n);
                const double mean = 0.5 + 10.0 * rng.unit();
                for (std::size_t i = 0; i < n; ++i) {
                    const double y = mean + rng.normal();
                    p.truth.push_back(y);
                    p.pred.push_back(y + 0.2 * rng.normal());
                }
                const auto ours = metrics::compute_metrics(p);
                const auto naive = oracle::naive_metrics(p.truth, p.pred);
                auto rel = [&](std::optional<double> a, std::optional<double> b) {
                    if (!a.has_value() || !b.has_value()) {
                        return a.has_value() == b.has_value() ? 0.0 : 1.0;
                    }
                    const double scale = std::max({std::fabs(*a), std::fabs(*b), 1e-300});
                    return std::fabs(*a - *b) / scale;
                };
                worst = std::max({worst, rel(ours.mae, naive.mae), rel(ours.mse, naive.mse),
                                  rel(ours.rmse, naive.rmse), rel(ours.max_err, naive.max_err),
                                  rel(ours.rel_l2, naive.rel_l2), rel(ours.mre, naive.mre),
                                  rel(ours.r2, naive.r2)});
            }
            std::ostringstream note;
            note << "worst relative deviation " << worst;
            return {worst <= 1e-12, note.str()};
        });
}

void c06_bootstrap() {
    run("C06", "bootstrap determinism across thread counts {1,8}",
        []() -> std::pair<bool, std::string> {
            Xoshiro256 rng(9);
            metrics::PredictionSet p;
            for (int i = 0; i < 20000; ++i) {
                const double y = 3.0 + rng.normal();
                p.truth.push_back(y);
                p.pred.push_back(y + 0.1 * rng.normal());
            }
            bootstrap::BootstrapConfig cfg;
            cfg.resamples = 500;
            const auto a = bootstrap::bootstrap_metrics(p, cfg, 1);
            const auto b = bootstrap::bootstrap_metrics(p, cfg, 8);
            for (std::size_t m = 0; m < metrics::kMetricCount; ++m) {
                const auto ca = a.get(m), cb = b.get(m);
                if (ca.has_value() != cb.has_value()) return {false, "definedness differs"};
                if (ca && (ca->mean != cb->mean || ca->sd != cb->sd || ca->lo != cb->lo ||
                           ca->hi != cb->hi)) {
                    return {false, std::string("metric ") + metrics::kMetricNames[m] +
                                       " differs between thread counts"};
                }
            }
            return {true, "bit-identical"};
        });

    run("C06", "bootstrap width halves from N to 4N (+-25%)",
        []() -> std::pair<bool, std::string> {
            double w_n = 0.0, w_4n = 0.0;
            for (uint64_t trial = 0; trial < 20; ++trial) {
                auto make = [&](std::size_t n, uint64_t seed) {
                    Xoshiro256 rng(seed);
                    metrics::PredictionSet p;
                    for (std::size_t i = 0; i < n; ++i) {
                        const double y = 3.0 + rng.normal();
                        p.truth.push_back(y);
                        p.pred.push_back(y + 0.5 * rng.normal());
                    }
                    return p;
                };
                bootstrap::BootstrapConfig cfg;
                cfg.resamples = 2000;
                cfg.seed = 42 + trial;
                const auto small = bootstrap::bootstrap_metrics(make(2000, 100 + trial), cfg);
                const auto big = bootstrap::bootstrap_metrics(make(8000, 500 + trial), cfg);
                w_n += small.mae->hi - small.mae->lo;
                w_4n += big.mae->hi - big.mae->lo;
            }
            const double ratio = w_4n / w_n;
            const bool pass = ratio >= 0.5 * 0.75 && ratio <= 0.5 * 1.25;
            std::ostringstream note;
            note << "mean width ratio " << ratio << " (target 0.5 +- 25%)";
            return {pass, note.str()};
        });

    run("C06", "bootstrap B=2000 on N=142200 under 60 s",
        []() -> std::pair<bool, std::string> {
            Xoshiro256 rng(7);
            metrics::PredictionSet p;
            p.truth.reserve(142200);
            p.pred.reserve(142200);
            for (int i = 0; i < 142200; ++i) {
                const double y = 2.0 + rng.normal();
                p.truth.push_back(y);
                p.pred.push_back(y + 0.2 * rng.normal());
            }
            bootstrap::BootstrapConfig cfg;  // B = 2000
            const auto start = Clock::now();
            const auto rep = bootstrap::bootstrap_metrics(p, cfg, 0);
            const double secs = std::chrono::duration<double>(Clock::now() - start).count();
            const bool defined = rep.mae.has_value() && rep.r2.has_value() &&
                                 rep.rel_l2.has_value() && rep.mre.has_value() &&
                                 rep.mse.has_value() && rep.rmse.has_value() &&
                                 rep.max_err.has_value();
            std::ostringstream note;
            note << secs << " s on " << default_threads() << " threads";
            return {defined && secs < 60.0, note.str()};
        });
}

void c07_rainflow_oracle() {
    run("C07", "rainflow equals independent three-point counting",
        []() -> std::pair<bool, std::string> {
            // frozen hand trace of the classic nine-reversal example
            const std::vector<double> classic = {-2, 1, -3, 5, -1, 3, -4, 4, -2};
            const fatigue::CycleHistogram expected = {
                {4, 1.0, 1.0}, {3, -0.5, 0.5}, {4, -1.0, 0.5}, {8, 1.0, 0.5},
                {9, 0.5, 0.5}, {8, 0.0, 0.5},  {6, 1.0, 0.5}};
            if (!oracle::cycles_equal(fatigue::rainflow(classic), expected)) {
                return {false, "hand-traced example mismatch"};
            }
            for (uint64_t seed = 1; seed <= 1000; ++seed) {
                Xoshiro256 rng(seed);
                std::vector<double> series;
                for (int i = 0; i < 50; ++i) series.push_back(rng.normal() * 10.0);
                if (!oracle::cycles_equal(fatigue::rainflow(series),
                                          oracle::rainflow_three_point(series))) {
                    return {false, "multiset mismatch at seed " + std::to_string(seed)};
                }
            }
            return {true, "1000 random 50-point series, identical multisets"};
        });
}

void c08_fatigue_scaling() {
    run("C08", "fatigue scaling laws and sinusoid closed form",
        []() -> std::pair<bool, std::string> {
            const fatigue::SectionGeometry geom{4.0, 0.05};
            const fatigue::SNCurve curve{1e15, 3.0};

            Xoshiro256 rng(3);
            std::vector<double> series;
            for (int i = 0; i < 600; ++i) series.push_back(rng.normal() * 1e6);
            const double base = fatigue::label_run(series, geom, curve).damage;
            for (const double k : {0.5, 2.0, 10.0}) {
                auto scaled = series;
                for (double& v : scaled) v *= k;
                const double got = fatigue::label_run(scaled, geom, curve).damage;
                const double want = std::pow(k, 3.0) * base;
                if (std::fabs(got - want) > 1e-10 * want) {
                    return {false, "cube law violated at k=" + std::to_string(k)};
                }
            }

            const fatigue::CycleHistogram hist = {{2e3, 0.0, 1.0}, {5e2, 1.0, 0.5}};
            const auto d1 = fatigue::miner_damage(hist, curve);
            fatigue::CycleHistogram h8 = hist;
            for (auto& c : h8) c.count *= 8.0;
            const auto d8 = fatigue::miner_damage(h8, curve);
            if (std::fabs(d8.del - 2.0 * d1.del) > 1e-12 * d8.del) {
                return {false, "DEL(8D) != 2 DEL(D)"};
            }

            // quarter-period samples hit the +-A extrema exactly
            const double amp = 3e6;
            const double sigma = amp / (3.14159265358979323846 * geom.radius_m *
                                        geom.radius_m * geom.thickness_m);
            for (int periods = 1; periods <= 100; ++periods) {
                std::vector<double> wave;
                wave.reserve(4 * static_cast<std::size_t>(periods) + 1);
                for (int p = 0; p < periods; ++p) {
                    wave.insert(wave.end(), {0.0, amp, 0.0, -amp});
                }
                wave.push_back(0.0);
                const double got = fatigue::label_run(wave, geom, curve).damage;
                const double want = (periods - 0.5) / curve.cycles_to_failure(2.0 * sigma) +
                                    1.0 / curve.cycles_to_failure(sigma);
                if (std::fabs(got - want) > 1e-12 * want) {
                    return {false, "sinusoid closed form off at n=" + std::to_string(periods)};
                }
            }
            return {true, "cube law, DEL homogeneity, 1..100 period sinusoids"};
        });
}

void c09_alpha_shape() {
    run("C09", "alpha shape: hull limit, raster containment, boundary distance",
        []() -> std::pair<bool, std::string> {
            for (uint64_t seed = 1; seed <= 3; ++seed) {
                Xoshiro256 rng(seed);
                std::vector<geom::Point> cloud;
                for (int i = 0; i < 300; ++i) cloud.push_back({rng.normal(), rng.normal()});
                const auto shape = geom::build_alpha_shape(cloud, 0.0);
                const double hull = oracle::polygon_area(oracle::convex_hull(cloud));
                if (std::fabs(shape.area() - hull) > 1e-9) {
                    return {false, "alpha=0 area differs from convex hull"};
                }
            }

            std::vector<geom::Point> c_cloud;
            const double pi = 3.14159265358979323846;
            for (int ring = 0; ring < 2; ++ring) {
                const double r = ring == 0 ? 30.0 : 18.0;
                for (int i = 0; i < 24; ++i) {
                    const double t = pi / 4 + (2 * pi - pi / 2) * i / 23.0;
                    c_cloud.push_back({r * std::cos(t), r * std::sin(t)});
                }
            }
            const auto shape = geom::build_alpha_shape(c_cloud, 0.1);
            if (shape.contains({0.0, 0.0})) return {false, "cavity not excluded"};

            const int n = 1000;
            const double lo = -32.0, hi = 32.0, cell = (hi - lo) / n;
            std::vector<std::size_t> row_disagree(n, 0);
            parallel_for(static_cast<std::size_t>(n), 0, [&](std::size_t i) {
                std::size_t local = 0;
                for (int j = 0; j < n; ++j) {
                    const geom::Point p{lo + (static_cast<double>(i) + 0.5) * cell,
                                        lo + (j + 0.5) * cell};
                    if (shape.contains(p) !=
                        oracle::crossing_contains(p, shape.boundary_edges(), shape.points())) {
                        ++local;
                    }
                }
                row_disagree[i] = local;
            });
            std::size_t disagree = 0;
            for (const auto c : row_disagree) disagree += c;
            if (static_cast<double>(disagree) >= 0.002 * n * n) {
                return {false, "raster disagreement " + std::to_string(disagree) + " cells"};
            }

            Xoshiro256 rng(44);
            double worst = 0.0;
            for (int trial = 0; trial < 40; ++trial) {
                const geom::Point p{(rng.unit() - 0.5) * 80.0, (rng.unit() - 0.5) * 80.0};
                double sampled = std::numeric_limits<double>::infinity();
                for (const auto& e : shape.boundary_edges()) {
                    const auto a = shape.points()[e[0]];
                    const auto b = shape.points()[e[1]];
                    for (int k = 0; k <= 10000; ++k) {
                        const double t = k / 10000.0;
                        sampled = std::min(sampled, std::hypot(p.x - (a.x + t * (b.x - a.x)),
                                                               p.y - (a.y + t * (b.y - a.y))));
                    }
                }
                worst = std::max(worst, std::fabs(shape.boundary_distance(p) - sampled));
            }
            if (worst > 1e-6) return {false, "boundary distance off by " + std::to_string(worst)};
            return {true, "raster disagreement " + std::to_string(disagree) + "/1e6 cells"};
        });
}

struct E2Evaluation {
    std::vector<evaluate::LeaderboardRow> rows;
    std::size_t test_rows = 0;
};

const E2Evaluation& e2_knn_evaluation() {
    static const E2Evaluation cached = [] {
        const auto [train, test] =
            partition::apply_split(fixture(), partition::SplitSpec::released());
        const auto predictions = synth::knn_predict(train, test, 8, 0);
        evaluate::EvaluationRequest req;
        req.train = train;
        req.test = test;
        std::vector<dataio::Prediction> rows;
        rows.reserve(test.size());
        for (std::size_t i = 0; i < test.size(); ++i) {
            rows.push_back({test[i].sim_id, test[i].section_id, predictions[i]});
        }
        req.models.push_back({"knn8", std::move(rows)});
        req.boot.resamples = 2000;
        return E2Evaluation{evaluate::evaluate_models(req), test.size()};
    }();
    return cached;
}

double axis_group_mre(const evaluate::LeaderboardRow& row, bool wind_axis, Regime which) {
    double num = 0.0;
    std::size_t den = 0;
    const std::string want(regime_name(which));
    for (const auto& [cell, stats] : row.cells) {
        const auto sep = cell.find('_');
        const std::string axis_label = wind_axis ? cell.substr(0, sep) : cell.substr(sep + 1);
        if (axis_label == want && stats.n > 0) {
            num += *stats.mre * static_cast<double>(stats.n);
            den += stats.n;
        }
    }
    return den == 0 ? std::numeric_limits<double>::quiet_NaN() : num / static_cast<double>(den);
}

void c10_regime_hierarchy() {
    run("C10", "kNN baseline under E2: extrapolation error dominates",
        []() -> std::pair<bool, std::string> {
            const auto& eval = e2_knn_evaluation();
            const auto& row = eval.rows.front();
            const auto& exex = row.cells.at("EX_EX");
            const auto& itit = row.cells.at("IT_IT");
            if (exex.n == 0 || itit.n == 0) return {false, "a regime cell is empty"};
            const double wind_ex = axis_group_mre(row, true, Regime::EX);
            const double wind_it = axis_group_mre(row, true, Regime::IT);
            std::ostringstream note;
            note << "MRE: EX_EX=" << *exex.mre << " IT_IT=" << *itit.mre << " windEX=" << wind_ex
                 << " windIT=" << wind_it;
            const bool pass = *exex.mre > *itit.mre && wind_ex > wind_it;
            return {pass, note.str()};
        });
}

void c11_rank_shift() {
    run("C11", "rank-shift crossover and error-partition identity",
        []() -> std::pair<bool, std::string> {
            const auto [train, test] =
                partition::apply_split(fixture(), partition::SplitSpec::released());
            const auto labels = partition::label_records(train, test, {});

            std::vector<dataio::Prediction> steady, sprinter;
            for (std::size_t i = 0; i < test.size(); ++i) {
                const double del = std::pow(test[i].damage, 1.0 / 3.0);
                const bool exex = labels[i].wind == Regime::EX && labels[i].wave == Regime::EX;
                steady.push_back({test[i].sim_id, test[i].section_id, del * 1.02});
                sprinter.push_back(
                    {test[i].sim_id, test[i].section_id, del * (exex ? 1.001 : 1.05)});
            }
            evaluate::EvaluationRequest req;
            req.train = train;
            req.test = test;
            req.models = {{"steady", std::move(steady)}, {"sprinter", std::move(sprinter)}};
            req.boot.resamples = 200;
            const auto rows = evaluate::evaluate_models(req);

            const auto& a = rows[0].model == "steady" ? rows[0] : rows[1];
            const auto& b = rows[0].model == "sprinter" ? rows[0] : rows[1];
            if (!(a.global_rank == 1 && *a.exex_rank == 2 && b.global_rank == 2 &&
                  *b.exex_rank == 1)) {
                return {false, "ranks did not invert"};
            }
            const auto shifts = evaluate::rank_shift_report(rows, 0);
            if (!(shifts[0].flagged && shifts[1].flagged)) {
                return {false, "crossover not flagged"};
            }

            double worst = 0.0;
            auto check_rows = e2_knn_evaluation().rows;
            check_rows.insert(check_rows.end(), rows.begin(), rows.end());
            for (const auto& row : check_rows) {
                double weighted = 0.0;
                std::size_t n = 0;
                for (const auto& [cell, stats] : row.cells) {
                    if (stats.n > 0) {
                        weighted += static_cast<double>(stats.n) * *stats.mse;
                        n += stats.n;
                    }
                }
                const double global = *row.global.mse * static_cast<double>(n);
                worst = std::max(worst, std::fabs(weighted - global) / global);
            }
            if (worst > 1e-9) {
                return {false, "partition identity off by " + std::to_string(worst)};
            }
            std::ostringstream note;
            note << "ranks inverted, both flagged; partition identity within " << worst;
            return {true, note.str()};
        });
}

}  // namespace

int main() {
    std::cout << "envbench acceptance suite" << std::endl;
    c01_split_arithmetic();
    c02_random_vacuity();
    c03_released_composition();
    c04_released_spacing();
    c05_metric_oracle();
    c06_bootstrap();
    c07_rainflow_oracle();
    c08_fatigue_scaling();
    c09_alpha_shape();
    c10_regime_hierarchy();
    c11_rank_shift();
    if (failures == 0) {
        std::cout << "all runnable criteria passed" << std::endl;
    } else {
        std::cout << failures << " criteria FAILED" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
