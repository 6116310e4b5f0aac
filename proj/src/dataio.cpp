#include "envbench/dataio.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "envbench/csv.hpp"
#include "envbench/error.hpp"

namespace envbench::dataio {

namespace {

constexpr std::array<const char*, 18> kTrainTestColumns = {
    "sim_id",           "section_id",       "wind_speed_id",
    "wave_hs_id",       "wave_tp_id",       "wind_seed_id",
    "wind_speed",       "mean_wind_speed",  "std_wind_speed",
    "wave_hs",          "wave_tp",          "section_height_m",
    "section_radius_m", "section_thickness_m",
    "wind_group",       "wave_group",
    "damage",           "damage_weight"};

std::vector<std::string_view> columns_for(FileKind kind) {
    std::vector<std::string_view> cols;
    for (const char* c : kTrainTestColumns) {
        std::string_view sv(c);
        if (kind == FileKind::Raw && (sv == "wind_group" || sv == "wave_group")) continue;
        cols.push_back(sv);
    }
    return cols;
}

struct IssueSink {
    ValidationReport* report;
    std::string context;
    bool failed = false;

    void add(std::size_t line, bool fatal, std::string msg) {
        if (fatal) failed = true;
        if (report) {
            report->issues.push_back({line, fatal, std::move(msg)});
        } else if (fatal) {
            fail(context + ":" + std::to_string(line) + ": " + msg);
        }
    }
};

bool same_features(const Record& a, const Record& b) {
    return a.wind_speed_id == b.wind_speed_id && a.wave_hs_id == b.wave_hs_id &&
           a.wave_tp_id == b.wave_tp_id && a.wind_seed_id == b.wind_seed_id &&
           a.wind_speed == b.wind_speed && a.mean_wind_speed == b.mean_wind_speed &&
           a.std_wind_speed == b.std_wind_speed && a.wave_hs == b.wave_hs &&
           a.wave_tp == b.wave_tp;
}

}  // namespace

std::string Record::joint_group() const {
    require(wind_group.has_value() && wave_group.has_value(),
            "joint regime requested on a record without regime labels");
    std::string s(regime_name(*wind_group));
    s += '_';
    s += regime_name(*wave_group);
    return s;
}

FileKind parse_file_kind(const std::string& s) {
    if (s == "raw") return FileKind::Raw;
    if (s == "train") return FileKind::Train;
    if (s == "test") return FileKind::Test;
    fail("unknown file kind '" + s + "' (expected raw, train, or test)");
}

bool ValidationReport::ok() const {
    return std::none_of(issues.begin(), issues.end(),
                        [](const ValidationIssue& i) { return i.fatal; });
}

std::vector<Record> load_dataset(const std::string& path, FileKind kind,
                                 const ParseOptions& opt, ValidationReport* report) {
    csv::Reader reader(path);
    IssueSink sink{report, path};
    const auto expected = columns_for(kind);

    std::vector<std::string_view> fields;
    if (!reader.next(fields)) fail(path + ": empty file");
    if (fields.size() != expected.size()) {
        fail(path + ":1: expected " + std::to_string(expected.size()) + " columns for this kind, got " +
             std::to_string(fields.size()));
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (fields[i] != expected[i]) {
            fail(path + ":1: column " + std::to_string(i + 1) + " is '" + std::string(fields[i]) +
                 "', expected '" + std::string(expected[i]) + "'");
        }
    }

    std::vector<Record> records;
    std::unordered_map<int64_t, std::size_t> first_row_of_sim;

    auto check_id = [&](std::size_t line, const char* name, int64_t v, int lo, int hi) {
        if (v < lo || v > hi) {
            sink.add(line, true,
                     std::string(name) + " = " + std::to_string(v) + " outside [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]");
            return false;
        }
        return true;
    };

    while (reader.next(fields)) {
        const std::size_t line = reader.line();
        if (fields.size() == 1 && fields[0].empty()) continue;  // trailing newline
        if (fields.size() != expected.size()) {
            sink.add(line, true,
                     "expected " + std::to_string(expected.size()) + " fields, got " +
                         std::to_string(fields.size()));
            continue;
        }

        Record r;
        std::size_t f = 0;
        bool ok = true;
        auto geti = [&](int& dst) {
            bool field_ok = false;
            const int64_t v = csv::parse_int(fields[f], field_ok);
            if (!field_ok) {
                sink.add(line, true, "bad integer in column '" + std::string(expected[f]) + "'");
                ok = false;
            }
            dst = static_cast<int>(v);
            ++f;
        };
        auto getd = [&](double& dst) {
            bool field_ok = false;
            dst = csv::parse_double(fields[f], field_ok);
            if (!field_ok || !std::isfinite(dst)) {
                sink.add(line, true,
                         "non-finite or malformed number in column '" + std::string(expected[f]) + "'");
                ok = false;
            }
            ++f;
        };

        {
            bool field_ok = false;
            r.sim_id = csv::parse_int(fields[f], field_ok);
            if (!field_ok) {
                sink.add(line, true, "bad integer in column 'sim_id'");
                ok = false;
            }
            ++f;
        }
        geti(r.section_id);
        geti(r.wind_speed_id);
        geti(r.wave_hs_id);
        geti(r.wave_tp_id);
        geti(r.wind_seed_id);
        getd(r.wind_speed);
        getd(r.mean_wind_speed);
        getd(r.std_wind_speed);
        getd(r.wave_hs);
        getd(r.wave_tp);
        getd(r.section_height_m);
        getd(r.section_radius_m);
        getd(r.section_thickness_m);
        if (kind != FileKind::Raw) {
            for (auto* dst : {&r.wind_group, &r.wave_group}) {
                try {
                    *dst = parse_regime(fields[f]);
                } catch (const Error& e) {
                    sink.add(line, true, e.what());
                    ok = false;
                }
                ++f;
            }
        }
        getd(r.damage);
        getd(r.damage_weight);
        if (!ok) continue;

        ok &= check_id(line, "section_id", r.section_id, 1, opt.grid.n_sections);
        ok &= check_id(line, "wind_speed_id", r.wind_speed_id, 1, opt.grid.n_wind);
        ok &= check_id(line, "wave_hs_id", r.wave_hs_id, 1, opt.grid.n_hs);
        ok &= check_id(line, "wave_tp_id", r.wave_tp_id, 1, opt.grid.n_tp);
        ok &= check_id(line, "wind_seed_id", r.wind_seed_id, 1, opt.grid.n_seeds);
        if (r.damage < 0.0) {
            sink.add(line, true, "damage < 0");
            ok = false;
        }
        if (r.damage_weight < 0.0) {
            sink.add(line, true, "damage_weight < 0");
            ok = false;
        }
        if (!ok) continue;

        auto [it, inserted] = first_row_of_sim.try_emplace(r.sim_id, records.size());
        if (!inserted && !same_features(records[it->second], r)) {
            sink.add(line, opt.strict,
                     "environmental features differ from earlier rows of sim_id " +
                         std::to_string(r.sim_id));
            if (opt.strict) continue;
        }
        records.push_back(r);
    }

    if (report) {
        report->rows = records.size();
        if (!records.empty()) {
            int lowest = std::numeric_limits<int>::max();
            for (const Record& r : records) lowest = std::min(lowest, r.section_id);
            double sum = 0.0;
            for (const Record& r : records)
                if (r.section_id == lowest) sum += r.damage_weight;
            report->section_weight_sum = sum;
        }
    }
    if (sink.failed) fail(path + ": validation failed");
    return records;
}

void save_dataset(const std::vector<Record>& records, const std::string& path, FileKind kind) {
    std::string out;
    out.reserve(records.size() * 160 + 256);
    const auto cols = columns_for(kind);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out += ',';
        out += cols[i];
    }
    out += '\n';
    for (const Record& r : records) {
        if (kind != FileKind::Raw) {
            require(r.wind_group.has_value() && r.wave_group.has_value(),
                    "record without regime labels cannot be written to a train/test file");
        }
        csv::append_int(out, r.sim_id);
        out += ',';
        csv::append_int(out, r.section_id);
        out += ',';
        csv::append_int(out, r.wind_speed_id);
        out += ',';
        csv::append_int(out, r.wave_hs_id);
        out += ',';
        csv::append_int(out, r.wave_tp_id);
        out += ',';
        csv::append_int(out, r.wind_seed_id);
        out += ',';
        csv::append_double(out, r.wind_speed);
        out += ',';
        csv::append_double(out, r.mean_wind_speed);
        out += ',';
        csv::append_double(out, r.std_wind_speed);
        out += ',';
        csv::append_double(out, r.wave_hs);
        out += ',';
        csv::append_double(out, r.wave_tp);
        out += ',';
        csv::append_double(out, r.section_height_m);
        out += ',';
        csv::append_double(out, r.section_radius_m);
        out += ',';
        csv::append_double(out, r.section_thickness_m);
        out += ',';
        if (kind != FileKind::Raw) {
            out += regime_name(*r.wind_group);
            out += ',';
            out += regime_name(*r.wave_group);
            out += ',';
        }
        csv::append_double(out, r.damage);
        out += ',';
        csv::append_double(out, r.damage_weight);
        out += '\n';
    }
    csv::write_file(path, out);
}

double lifetime_damage(const std::vector<Record>& records, int section_id) {
    double sum = 0.0;
    bool seen = false;
    for (const Record& r : records) {
        if (r.section_id == section_id) {
            sum += r.damage * r.damage_weight;
            seen = true;
        }
    }
    require(seen, "no rows for section_id " + std::to_string(section_id));
    return sum;
}

std::vector<Prediction> load_predictions(const std::string& path) {
    csv::Reader reader(path);
    std::vector<std::string_view> fields;
    if (!reader.next(fields)) fail(path + ": empty file");
    if (fields.size() != 3 || fields[0] != "sim_id" || fields[1] != "section_id" ||
        fields[2] != "prediction") {
        fail(path + ":1: expected header 'sim_id,section_id,prediction'");
    }
    std::vector<Prediction> rows;
    while (reader.next(fields)) {
        if (fields.size() == 1 && fields[0].empty()) continue;
        const std::size_t line = reader.line();
        if (fields.size() != 3) fail(path + ":" + std::to_string(line) + ": expected 3 fields");
        Prediction p;
        bool ok1 = false, ok2 = false, ok3 = false;
        p.sim_id = csv::parse_int(fields[0], ok1);
        p.section_id = static_cast<int>(csv::parse_int(fields[1], ok2));
        p.value = csv::parse_double(fields[2], ok3);
        if (!ok1 || !ok2 || !ok3 || !std::isfinite(p.value)) {
            fail(path + ":" + std::to_string(line) + ": malformed prediction row");
        }
        rows.push_back(p);
    }
    return rows;
}

void save_predictions(const std::vector<Prediction>& rows, const std::string& path) {
    std::string out = "sim_id,section_id,prediction\n";
    out.reserve(rows.size() * 40 + 32);
    for (const Prediction& p : rows) {
        csv::append_int(out, p.sim_id);
        out += ',';
        csv::append_int(out, p.section_id);
        out += ',';
        csv::append_double(out, p.value);
        out += '\n';
    }
    csv::write_file(path, out);
}

}  // namespace envbench::dataio
