#include "envbench/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "envbench/csv.hpp"
#include "envbench/error.hpp"

namespace envbench::evaluate {

namespace {

const std::array<const char*, 9> kJointCells = {"IT_IT", "IT_IP", "IT_EX", "IP_IT", "IP_IP",
                                                "IP_EX", "EX_IT", "EX_IP", "EX_EX"};

uint64_t row_key(int64_t sim_id, int section_id) {
    return (static_cast<uint64_t>(sim_id) << 16) | static_cast<uint16_t>(section_id);
}

// Dense 1-based ranks over (value ascending, model name ascending).
template <typename Getter>
void assign_ranks(std::vector<LeaderboardRow>& rows, Getter value,
                  void (*store)(LeaderboardRow&, int)) {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (value(rows[i]).has_value()) order.push_back(i);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double va = *value(rows[a]), vb = *value(rows[b]);
        if (va != vb) return va < vb;
        return rows[a].model < rows[b].model;
    });
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        store(rows[order[pos]], static_cast<int>(pos + 1));
    }
}

void append_opt(std::string& out, const std::optional<double>& v, double factor = 1.0) {
    if (v.has_value()) csv::append_double(out, *v * factor);
}

}  // namespace

Protocol parse_protocol(const std::string& s) {
    if (s == "e1" || s == "E1") return Protocol::E1;
    if (s == "e2" || s == "E2") return Protocol::E2;
    if (s == "e3" || s == "E3") return Protocol::E3;
    fail("unknown protocol '" + s + "' (expected e1, e2 or e3)");
}

std::string Fold::name() const {
    std::string s;
    for (std::size_t i = 0; i < train_towers.size(); ++i) {
        if (i) s += '+';
        s += train_towers[i];
    }
    s += "->";
    s += test_tower;
    return s;
}

std::vector<Fold> released_folds() {
    return {{{"ref", "opt1"}, "opt2"}, {{"ref", "opt2"}, "opt1"}, {{"opt1", "opt2"}, "ref"}};
}

std::vector<LeaderboardRow> evaluate_models(const EvaluationRequest& req) {
    require(!req.test.empty(), "evaluation needs a non-empty test set");
    require(!req.models.empty(), "evaluation needs at least one model");
    require(req.sn_slope > 0.0, "sn_slope must be > 0");

    // Joint regime per test row: stored labels when present, otherwise
    // computed against the training envelope.
    std::vector<std::string> joint(req.test.size());
    const bool labeled = std::all_of(req.test.begin(), req.test.end(), [](const Record& r) {
        return r.wind_group.has_value() && r.wave_group.has_value();
    });
    if (labeled) {
        for (std::size_t i = 0; i < req.test.size(); ++i) {
            const Record& r = req.test[i];
            require(*r.wind_group != Regime::InTrain && *r.wave_group != Regime::InTrain,
                    "test rows carry In-train labels; pass the test file, not the train file");
            joint[i] = r.joint_group();
        }
    } else {
        require(!req.train.empty(),
                "test rows lack regime labels and no training rows were supplied");
        const auto labels = partition::label_records(req.train, req.test, req.regime);
        for (std::size_t i = 0; i < labels.size(); ++i) joint[i] = labels[i].joint();
    }

    std::vector<double> truth(req.test.size());
    const double exponent = 1.0 / req.sn_slope;
    for (std::size_t i = 0; i < req.test.size(); ++i) {
        truth[i] = std::pow(req.test[i].damage, exponent);
    }

    std::unordered_map<uint64_t, std::size_t> index;
    index.reserve(req.test.size() * 2);
    for (std::size_t i = 0; i < req.test.size(); ++i) {
        const bool inserted =
            index.try_emplace(row_key(req.test[i].sim_id, req.test[i].section_id), i).second;
        require(inserted, "duplicate (sim_id, section_id) in test rows");
    }

    std::vector<std::size_t> order(req.test.size());
    std::vector<std::vector<uint32_t>> cell_rows;   // per joint cell
    std::map<std::string, std::size_t> cell_index;
    for (std::size_t c = 0; c < kJointCells.size(); ++c) {
        cell_index[kJointCells[c]] = c;
        cell_rows.emplace_back();
    }
    for (std::size_t i = 0; i < joint.size(); ++i) {
        auto it = cell_index.find(joint[i]);
        require(it != cell_index.end(), "unexpected joint regime '" + joint[i] + "'");
        cell_rows[it->second].push_back(static_cast<uint32_t>(i));
    }
    std::map<int, std::vector<uint32_t>> section_rows;
    for (std::size_t i = 0; i < req.test.size(); ++i) {
        section_rows[req.test[i].section_id].push_back(static_cast<uint32_t>(i));
    }

    std::vector<LeaderboardRow> rows;
    rows.reserve(req.models.size());
    for (const ModelInput& model : req.models) {
        require(model.predictions.size() == req.test.size(),
                "model '" + model.name + "': " + std::to_string(model.predictions.size()) +
                    " predictions for " + std::to_string(req.test.size()) + " test rows");
        std::vector<double> pred(req.test.size());
        std::vector<bool> seen(req.test.size(), false);
        for (const dataio::Prediction& p : model.predictions) {
            auto it = index.find(row_key(p.sim_id, p.section_id));
            require(it != index.end(), "model '" + model.name + "': prediction for unknown row (" +
                                           std::to_string(p.sim_id) + ", " +
                                           std::to_string(p.section_id) + ")");
            require(!seen[it->second], "model '" + model.name + "': duplicate prediction for (" +
                                           std::to_string(p.sim_id) + ", " +
                                           std::to_string(p.section_id) + ")");
            seen[it->second] = true;
            pred[it->second] = p.value;
        }

        metrics::PredictionSet set{truth, std::move(pred)};
        LeaderboardRow row;
        row.model = model.name;
        row.n_rows = req.test.size();
        row.global = metrics::compute_metrics(set);
        row.ci = bootstrap::bootstrap_metrics(set, req.boot, req.threads);

        const metrics::SharedTerms terms = metrics::SharedTerms::from(set);
        for (std::size_t c = 0; c < kJointCells.size(); ++c) {
            CellStats stats;
            stats.n = cell_rows[c].size();
            if (stats.n > 0) {
                const auto mv = metrics::compute_metrics(terms, cell_rows[c]);
                stats.mre = mv.mre;
                stats.mse = mv.mse;
            }
            row.cells[kJointCells[c]] = stats;
        }
        for (const auto& [section, indices] : section_rows) {
            row.section_rel_l2[section] = metrics::compute_metrics(terms, indices).rel_l2;
        }
        rows.push_back(std::move(row));
    }

    assign_ranks(
        rows, [](const LeaderboardRow& r) { return r.global.rel_l2; },
        [](LeaderboardRow& r, int rank) { r.global_rank = rank; });
    assign_ranks(
        rows,
        [](const LeaderboardRow& r) -> std::optional<double> {
            auto it = r.cells.find("EX_EX");
            return it == r.cells.end() ? std::nullopt : it->second.mre;
        },
        [](LeaderboardRow& r, int rank) { r.exex_rank = rank; });
    if (!rows.empty() && !rows.front().section_rel_l2.empty()) {
        const int first = rows.front().section_rel_l2.begin()->first;
        const int last = rows.front().section_rel_l2.rbegin()->first;
        assign_ranks(
            rows,
            [first](const LeaderboardRow& r) { return r.section_rel_l2.at(first); },
            [](LeaderboardRow& r, int rank) { r.sec_first_rank = rank; });
        if (last != first) {
            assign_ranks(
                rows,
                [last](const LeaderboardRow& r) { return r.section_rel_l2.at(last); },
                [](LeaderboardRow& r, int rank) { r.sec_last_rank = rank; });
        }
    }
    return rows;
}

std::vector<RankShiftRow> rank_shift_report(const std::vector<LeaderboardRow>& rows,
                                            int threshold) {
    std::vector<RankShiftRow> out;
    out.reserve(rows.size());
    for (const LeaderboardRow& r : rows) {
        RankShiftRow s;
        s.model = r.model;
        s.global_rank = r.global_rank;
        s.exex_rank = r.exex_rank;
        s.sec_first_rank = r.sec_first_rank;
        s.sec_last_rank = r.sec_last_rank;
        s.flagged = rows.size() > 1 && r.exex_rank.has_value() &&
                    std::abs(*r.exex_rank - r.global_rank) > threshold;
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const RankShiftRow& a, const RankShiftRow& b) {
        return a.global_rank < b.global_rank;
    });
    return out;
}

std::vector<LeaderboardRow> cross_tower_fold(const Fold& fold,
                                             const std::map<std::string, std::vector<Record>>& towers,
                                             std::vector<ModelInput> models,
                                             const partition::RegimeConfig& regime,
                                             const bootstrap::BootstrapConfig& boot,
                                             double sn_slope, unsigned threads) {
    require(!fold.train_towers.empty(), "fold has no training towers");
    for (const std::string& t : fold.train_towers) {
        require(t != fold.test_tower,
                "test tower '" + fold.test_tower + "' also appears in the training set");
    }
    auto table = [&](const std::string& name) -> const std::vector<Record>& {
        auto it = towers.find(name);
        require(it != towers.end(), "no table loaded for tower '" + name + "'");
        return it->second;
    };

    EvaluationRequest req;
    req.protocol = Protocol::E3;
    for (const std::string& t : fold.train_towers) {
        const auto& rows = table(t);
        req.train.insert(req.train.end(), rows.begin(), rows.end());
    }
    req.test = table(fold.test_tower);
    for (Record& r : req.test) {  // labels are recomputed against the fold envelope
        r.wind_group.reset();
        r.wave_group.reset();
    }
    req.models = std::move(models);
    req.regime = regime;
    req.boot = boot;
    req.sn_slope = sn_slope;
    req.threads = threads;
    return evaluate_models(req);
}

std::pair<std::vector<Record>, std::vector<Record>> validation_holdout(
    const std::vector<Record>& train, double fraction, uint64_t seed) {
    return partition::random_split(train, 1.0 - fraction, seed);
}

void apply_sidecar(std::vector<LeaderboardRow>& rows, const std::string& path) {
    csv::Reader reader(path);
    std::vector<std::string_view> fields;
    if (!reader.next(fields)) fail(path + ": empty sidecar");
    if (fields.size() != 4 || fields[0] != "model" || fields[1] != "latency_ms" ||
        fields[2] != "throughput" || fields[3] != "train_time_s") {
        fail(path + ":1: expected header 'model,latency_ms,throughput,train_time_s'");
    }
    std::unordered_map<std::string, std::array<double, 3>> meta;
    while (reader.next(fields)) {
        if (fields.size() == 1 && fields[0].empty()) continue;
        require(fields.size() == 4,
                path + ":" + std::to_string(reader.line()) + ": expected 4 fields");
        std::array<double, 3> vals{};
        for (int i = 0; i < 3; ++i) {
            bool ok = false;
            vals[i] = csv::parse_double(fields[i + 1], ok);
            require(ok, path + ":" + std::to_string(reader.line()) + ": bad number");
        }
        meta[std::string(fields[0])] = vals;
    }
    for (LeaderboardRow& r : rows) {
        auto it = meta.find(r.model);
        if (it != meta.end()) {
            r.latency_ms = it->second[0];
            r.throughput = it->second[1];
            r.train_time_s = it->second[2];
        }
    }
}

void write_leaderboard(const std::vector<LeaderboardRow>& rows, const std::string& path) {
    const bool sidecar = std::any_of(rows.begin(), rows.end(), [](const LeaderboardRow& r) {
        return r.latency_ms || r.throughput || r.train_time_s;
    });
    std::string out = "rank,model";
    for (const char* name : metrics::kMetricNames) {
        out += ',';
        out += name;
        out += ',';
        out += name;
        out += "_lo,";
        out += name;
        out += "_hi";
    }
    if (sidecar) out += ",latency_ms,throughput,train_time_s";
    out += '\n';

    std::vector<const LeaderboardRow*> sorted;
    for (const auto& r : rows) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(), [](const LeaderboardRow* a, const LeaderboardRow* b) {
        if (a->global_rank != b->global_rank) return a->global_rank < b->global_rank;
        return a->model < b->model;
    });

    for (const LeaderboardRow* r : sorted) {
        csv::append_int(out, r->global_rank);
        out += ',';
        out += r->model;
        for (std::size_t m = 0; m < metrics::kMetricCount; ++m) {
            const double factor = (std::string_view(metrics::kMetricNames[m]) == "mre") ? 100.0 : 1.0;
            out += ',';
            append_opt(out, r->global.get(m), factor);
            const auto ci = r->ci.get(m);
            out += ',';
            if (ci) csv::append_double(out, ci->lo * factor);
            out += ',';
            if (ci) csv::append_double(out, ci->hi * factor);
        }
        if (sidecar) {
            out += ',';
            append_opt(out, r->latency_ms);
            out += ',';
            append_opt(out, r->throughput);
            out += ',';
            append_opt(out, r->train_time_s);
        }
        out += '\n';
    }
    csv::write_file(path, out);
}

void write_regime_matrix(const std::vector<LeaderboardRow>& rows, const std::string& path) {
    std::string out = "model";
    for (const char* cell : kJointCells) {
        out += ',';
        out += cell;
    }
    out += '\n';
    for (const LeaderboardRow& r : rows) {
        out += r.model;
        for (const char* cell : kJointCells) {
            out += ',';
            const auto it = r.cells.find(cell);
            if (it != r.cells.end() && it->second.mre) {
                csv::append_double(out, *it->second.mre * 100.0);
            }
        }
        out += '\n';
    }
    csv::write_file(path, out);
}

void write_rank_shift(const std::vector<RankShiftRow>& rows, const std::string& path) {
    std::string out = "model,global_rank,exex_rank,sec1_rank,sec30_rank,flagged\n";
    for (const RankShiftRow& r : rows) {
        out += r.model;
        out += ',';
        csv::append_int(out, r.global_rank);
        out += ',';
        if (r.exex_rank) csv::append_int(out, *r.exex_rank);
        out += ',';
        if (r.sec_first_rank) csv::append_int(out, *r.sec_first_rank);
        out += ',';
        if (r.sec_last_rank) csv::append_int(out, *r.sec_last_rank);
        out += ',';
        out += r.flagged ? "1" : "0";
        out += '\n';
    }
    csv::write_file(path, out);
}

void write_sections(const std::vector<LeaderboardRow>& rows, const std::string& path,
                    bool all_sections) {
    std::string out = "section_id,model,rel_l2\n";
    if (!rows.empty()) {
        const auto& sections = rows.front().section_rel_l2;
        const int first = sections.begin()->first;
        const int last = sections.rbegin()->first;
        for (const auto& [section, unused] : sections) {
            if (!all_sections && section != first && section != last) continue;
            for (const LeaderboardRow& r : rows) {
                csv::append_int(out, section);
                out += ',';
                out += r.model;
                out += ',';
                append_opt(out, r.section_rel_l2.at(section));
                out += '\n';
            }
        }
    }
    csv::write_file(path, out);
}

}  // namespace envbench::evaluate
