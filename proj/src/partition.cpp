#include "envbench/partition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "envbench/error.hpp"
#include "envbench/prng.hpp"

namespace envbench::partition {

namespace {

using geom::Point;

uint64_t pt_key_part(double v) { return std::bit_cast<uint64_t>(v + 0.0); }

struct PtKey {
    uint64_t x, y;
    bool operator==(const PtKey&) const = default;
};
struct PtKeyHash {
    std::size_t operator()(const PtKey& k) const {
        uint64_t h = k.x * 0x9e3779b97f4a7c15ull;
        h ^= k.y + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

std::vector<Point> unique_points(std::span<const Point> pts) {
    std::vector<Point> out;
    std::unordered_map<PtKey, int, PtKeyHash> seen;
    for (const Point& p : pts) {
        if (seen.try_emplace({pt_key_part(p.x), pt_key_part(p.y)}, 0).second) out.push_back(p);
    }
    return out;
}

double nearest_distance(const Point& p, std::span<const Point> cloud, bool skip_self) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point& q : cloud) {
        if (skip_self && q == p) continue;
        const double dx = p.x - q.x, dy = p.y - q.y;
        best = std::min(best, dx * dx + dy * dy);
    }
    return std::sqrt(best);
}

Point wind_point(const Record& r) { return {r.mean_wind_speed, r.std_wind_speed}; }
Point wave_point(const Record& r) { return {r.wave_hs, r.wave_tp}; }

}  // namespace

SplitSpec SplitSpec::released() {
    SplitSpec s;
    s.wind_train = parse_id_set("2-7,9-14,16-21");
    s.wind_test = {1, 8, 15, 22};
    s.hs_train = {2, 3, 5, 6};
    s.hs_test = {1, 4, 7};
    s.tp_train = {2, 3, 5, 6};
    s.tp_test = {1, 4, 7};
    return s;
}

void SplitSpec::validate(int n_wind, int n_hs, int n_tp) const {
    auto check = [](const std::set<int>& train, const std::set<int>& test, int n,
                    const char* axis) {
        for (int id : train) {
            require(!test.count(id), std::string(axis) + " id " + std::to_string(id) +
                                         " appears in both train and test sets");
        }
        for (int id = 1; id <= n; ++id) {
            require(train.count(id) || test.count(id),
                    std::string(axis) + " id " + std::to_string(id) +
                        " is in neither train nor test set");
        }
        for (const auto& set : {train, test}) {
            for (int id : set) {
                require(id >= 1 && id <= n,
                        std::string(axis) + " id " + std::to_string(id) + " outside 1.." +
                            std::to_string(n));
            }
        }
    };
    check(wind_train, wind_test, n_wind, "wind_speed");
    check(hs_train, hs_test, n_hs, "wave_hs");
    check(tp_train, tp_test, n_tp, "wave_tp");
}

std::set<int> parse_id_set(const std::string& text) {
    std::set<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        const std::size_t dash = item.find('-');
        try {
            if (dash == std::string::npos) {
                out.insert(std::stoi(item));
            } else {
                const int lo = std::stoi(item.substr(0, dash));
                const int hi = std::stoi(item.substr(dash + 1));
                require(lo <= hi, "bad range '" + item + "'");
                for (int v = lo; v <= hi; ++v) out.insert(v);
            }
        } catch (const Error&) {
            throw;
        } catch (...) {
            fail("cannot parse id set item '" + item + "'");
        }
        pos = comma + 1;
    }
    require(!out.empty(), "empty id set");
    return out;
}

std::pair<std::vector<Record>, std::vector<Record>> apply_split(const std::vector<Record>& records,
                                                                const SplitSpec& spec) {
    std::vector<Record> train, test;
    for (const Record& r : records) {
        const bool is_train = spec.wind_train.count(r.wind_speed_id) &&
                              spec.hs_train.count(r.wave_hs_id) && spec.tp_train.count(r.wave_tp_id);
        (is_train ? train : test).push_back(r);
    }
    return {std::move(train), std::move(test)};
}

std::pair<std::vector<Record>, std::vector<Record>> random_split(
    const std::vector<Record>& records, double train_fraction, uint64_t seed) {
    require(train_fraction > 0.0 && train_fraction < 1.0, "train fraction must be in (0, 1)");
    const auto target =
        static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(records.size())));
    return random_split_rows(records, target, seed);
}

std::pair<std::vector<Record>, std::vector<Record>> random_split_rows(
    const std::vector<Record>& records, std::size_t train_rows, uint64_t seed) {
    require(!records.empty(), "no records to split");
    std::unordered_map<int64_t, std::size_t> rows_per_sim;
    for (const Record& r : records) ++rows_per_sim[r.sim_id];
    std::size_t group = rows_per_sim.begin()->second;
    for (const auto& [sim, n] : rows_per_sim) {
        require(n == group, "sim_id " + std::to_string(sim) +
                                " has a different row count; grouped split needs uniform groups");
    }
    require(train_rows % group == 0 && train_rows > 0 && train_rows < records.size(),
            "requested train row count " + std::to_string(train_rows) +
                " is not achievable with " + std::to_string(group) + " rows per simulation");
    const std::size_t train_sims = train_rows / group;

    std::vector<int64_t> sims;
    sims.reserve(rows_per_sim.size());
    for (const auto& [sim, n] : rows_per_sim) sims.push_back(sim);
    std::sort(sims.begin(), sims.end());

    Xoshiro256 rng(seed);
    for (std::size_t i = sims.size() - 1; i > 0; --i) {
        std::swap(sims[i], sims[rng.below(i + 1)]);
    }
    std::unordered_map<int64_t, bool> in_train;
    in_train.reserve(sims.size());
    for (std::size_t i = 0; i < sims.size(); ++i) in_train[sims[i]] = i < train_sims;

    std::vector<Record> train, test;
    train.reserve(train_rows);
    test.reserve(records.size() - train_rows);
    for (const Record& r : records) {
        (in_train[r.sim_id] ? train : test).push_back(r);
    }
    return {std::move(train), std::move(test)};
}

void RegimeConfig::validate() const {
    require(tau > 0.0, "tau must be > 0");
    require(alpha >= 0.0, "alpha must be >= 0");
    require(epsilon >= 0.0, "epsilon must be >= 0");
}

std::string RegimeLabel::joint() const {
    std::string s(regime_name(wind));
    s += '_';
    s += regime_name(wave);
    return s;
}

SpacingScale spacing_scale(std::span<const geom::Point> pts) {
    const auto uniq = unique_points(pts);
    require(uniq.size() >= 2, "spacing scale needs at least 2 distinct points");
    SpacingScale out;
    out.d.reserve(uniq.size());
    double sum = 0.0;
    for (const Point& p : uniq) {
        const double d = nearest_distance(p, uniq, /*skip_self=*/true);
        out.d.push_back(d);
        sum += d;
    }
    out.s = sum / static_cast<double>(uniq.size());
    return out;
}

std::vector<Regime> label_axis(std::span<const geom::Point> train_std,
                               std::span<const geom::Point> test_std, const RegimeConfig& cfg) {
    cfg.validate();
    const auto train_uniq = unique_points(train_std);
    const SpacingScale spacing = spacing_scale(train_uniq);
    const geom::AlphaShape hull = geom::build_alpha_shape(train_uniq, cfg.alpha, cfg.alpha_rule);

    // Many rows share one envelope point; label each distinct point once.
    std::unordered_map<PtKey, Regime, PtKeyHash> memo;
    std::vector<Regime> labels;
    labels.reserve(test_std.size());
    for (const Point& p : test_std) {
        const PtKey key{pt_key_part(p.x), pt_key_part(p.y)};
        auto it = memo.find(key);
        if (it == memo.end()) {
            const double dist = nearest_distance(p, train_uniq, /*skip_self=*/false);
            Regime label = (dist / spacing.s <= cfg.tau) ? Regime::IT : Regime::IP;
            if (!hull.contains(p) && hull.boundary_distance(p) >= cfg.epsilon) {
                label = Regime::EX;
            }
            it = memo.emplace(key, label).first;
        }
        labels.push_back(it->second);
    }
    return labels;
}

namespace {

std::vector<Regime> label_axis_records(const std::vector<Record>& train,
                                       const std::vector<Record>& test, bool wind_axis,
                                       const RegimeConfig& cfg) {
    std::vector<Point> train_pts, test_pts;
    train_pts.reserve(train.size());
    test_pts.reserve(test.size());
    for (const Record& r : train) train_pts.push_back(wind_axis ? wind_point(r) : wave_point(r));
    for (const Record& r : test) test_pts.push_back(wind_axis ? wind_point(r) : wave_point(r));
    const geom::Standardizer scaler = geom::fit_standardizer(train_pts);
    return label_axis(scaler.transform(train_pts), scaler.transform(test_pts), cfg);
}

}  // namespace

std::vector<RegimeLabel> label_records(const std::vector<Record>& train,
                                       const std::vector<Record>& test, const RegimeConfig& cfg) {
    require(!train.empty(), "labeling needs a non-empty training set");
    const auto wind = label_axis_records(train, test, /*wind_axis=*/true, cfg);
    const auto wave = label_axis_records(train, test, /*wind_axis=*/false, cfg);
    std::vector<RegimeLabel> out(test.size());
    for (std::size_t i = 0; i < test.size(); ++i) out[i] = {wind[i], wave[i]};
    return out;
}

std::pair<std::vector<Record>, std::vector<Record>> label_split(const std::vector<Record>& train,
                                                                const std::vector<Record>& test,
                                                                const RegimeConfig& cfg) {
    const auto labels = label_records(train, test, cfg);
    std::vector<Record> train_out = train;
    for (Record& r : train_out) {
        r.wind_group = Regime::InTrain;
        r.wave_group = Regime::InTrain;
    }
    std::vector<Record> test_out = test;
    for (std::size_t i = 0; i < test_out.size(); ++i) {
        test_out[i].wind_group = labels[i].wind;
        test_out[i].wave_group = labels[i].wave;
    }
    return {std::move(train_out), std::move(test_out)};
}

AxisGeometry axis_geometry(const std::vector<Record>& train, bool wind_axis,
                           const RegimeConfig& cfg) {
    std::vector<Point> pts;
    pts.reserve(train.size());
    for (const Record& r : train) pts.push_back(wind_axis ? wind_point(r) : wave_point(r));
    const geom::Standardizer scaler = geom::fit_standardizer(pts);
    const auto std_pts = scaler.transform(pts);
    const auto uniq = unique_points(std_pts);
    return {scaler, geom::build_alpha_shape(uniq, cfg.alpha, cfg.alpha_rule),
            spacing_scale(uniq)};
}

}  // namespace envbench::partition
