#include <doctest.h>

#include <set>
#include <unordered_set>

#include "envbench/partition.hpp"
#include "envbench/prng.hpp"
#include "envbench/synth.hpp"

using namespace envbench;
using geom::Point;
using partition::RegimeConfig;
using partition::SplitSpec;

namespace {

const std::vector<dataio::Record>& paper_grid() {
    static const std::vector<dataio::Record> records = [] {
        synth::SynthConfig cfg;  // released shape: 22x7x7 x 6 seeds x 30 sections
        return synth::generate_dataset(cfg);
    }();
    return records;
}

}  // namespace

TEST_CASE("released split spec has the documented id sets") {
    const SplitSpec spec = SplitSpec::released();
    CHECK(spec.wind_train == std::set<int>{2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14, 16, 17, 18, 19, 20, 21});
    CHECK(spec.wind_test == std::set<int>{1, 8, 15, 22});
    CHECK(spec.hs_train == std::set<int>{2, 3, 5, 6});
    CHECK(spec.hs_test == std::set<int>{1, 4, 7});
    CHECK(spec.tp_train == spec.hs_train);
    CHECK_NOTHROW(spec.validate(22, 7, 7));

    SplitSpec broken = spec;
    broken.wind_test.insert(2);
    CHECK_THROWS_AS(broken.validate(22, 7, 7), Error);
    broken = spec;
    broken.wind_test.erase(22);
    CHECK_THROWS_AS(broken.validate(22, 7, 7), Error);
}

TEST_CASE("id set parser handles ranges and rejects junk") {
    CHECK(partition::parse_id_set("2-7,9-14,16-21") == SplitSpec::released().wind_train);
    CHECK(partition::parse_id_set("1,4,7") == std::set<int>{1, 4, 7});
    CHECK_THROWS_AS(partition::parse_id_set("5-2"), Error);
    CHECK_THROWS_AS(partition::parse_id_set("abc"), Error);
}

TEST_CASE("grid split row arithmetic on the full synthetic envelope") {
    const auto& records = paper_grid();
    REQUIRE(records.size() == 194040);
    const auto [train, test] = partition::apply_split(records, SplitSpec::released());
    CHECK(train.size() == 51840);
    CHECK(test.size() == 142200);
}

TEST_CASE("membership of single rows follows the id sets") {
    dataio::Record r;
    r.sim_id = 1;
    const SplitSpec spec = SplitSpec::released();

    r.wind_speed_id = 5;
    r.wave_hs_id = 2;
    r.wave_tp_id = 6;
    auto [train1, test1] = partition::apply_split({r}, spec);
    CHECK(train1.size() == 1);

    r.wind_speed_id = 8;
    r.wave_hs_id = 4;
    r.wave_tp_id = 7;
    auto [train2, test2] = partition::apply_split({r}, spec);
    CHECK(test2.size() == 1);
}

TEST_CASE("random split is grouped, exact and seed-deterministic") {
    synth::SynthConfig cfg;
    cfg.n_wind = 6;
    cfg.n_hs = 3;
    cfg.n_tp = 3;
    cfg.n_seeds = 2;
    cfg.n_sections = 4;
    const auto records = synth::generate_dataset(cfg);

    const auto [train, test] = partition::random_split_rows(records, 24 * 4, 42);
    CHECK(train.size() == 96);
    CHECK(test.size() == records.size() - 96);

    std::unordered_set<int64_t> train_sims, test_sims;
    for (const auto& r : train) train_sims.insert(r.sim_id);
    for (const auto& r : test) test_sims.insert(r.sim_id);
    for (int64_t sim : train_sims) CHECK(!test_sims.count(sim));

    const auto [train_b, test_b] = partition::random_split_rows(records, 96, 42);
    REQUIRE(train_b.size() == train.size());
    for (std::size_t i = 0; i < train.size(); ++i) CHECK(train_b[i].sim_id == train[i].sim_id);

    const auto [train_c, test_c] = partition::random_split_rows(records, 96, 43);
    CHECK(train_c.size() == 96);
    bool same = train_c.size() == train.size();
    for (std::size_t i = 0; same && i < train.size(); ++i) {
        same = train_c[i].sim_id == train[i].sim_id;
    }
    CHECK(!same);

    CHECK_THROWS_AS(partition::random_split_rows(records, 95, 42), Error);  // not a sim multiple
    CHECK_THROWS_AS(partition::random_split(records, 0.0, 42), Error);
}

TEST_CASE("spacing scale over unique points") {
    const std::vector<Point> corners = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    const auto s = partition::spacing_scale(corners);
    CHECK(s.s == doctest::Approx(1.0));
    CHECK(s.d.size() == 4);

    // duplicates do not shrink the spacing
    std::vector<Point> dup = corners;
    dup.insert(dup.end(), corners.begin(), corners.end());
    CHECK(partition::spacing_scale(dup).s == doctest::Approx(1.0));

    CHECK_THROWS_AS(partition::spacing_scale(std::vector<Point>{{1, 1}, {1, 1}}), Error);
}

TEST_CASE("axis labeling: the three stages") {
    // 11x11 grid, spacing 1, so s = 1 and tau * s = 0.5
    std::vector<Point> train;
    for (int i = 0; i <= 10; ++i) {
        for (int j = 0; j <= 10; ++j) {
            train.push_back({static_cast<double>(i), static_cast<double>(j)});
        }
    }
    RegimeConfig cfg;

    SUBCASE("coincident test point is IT") {
        const auto labels = partition::label_axis(train, std::vector<Point>{{3.0, 4.0}}, cfg);
        CHECK(labels[0] == Regime::IT);
    }
    SUBCASE("interior point beyond tau stays IP") {
        // grid cell center: nearest distance sqrt(0.5) > 0.5, inside hull
        const auto labels = partition::label_axis(train, std::vector<Point>{{5.5, 5.5}}, cfg);
        CHECK(labels[0] == Regime::IP);
    }
    SUBCASE("outside the hull beyond the slack band is EX") {
        const auto labels =
            partition::label_axis(train, std::vector<Point>{{5.0, 10.0 + 10 * cfg.epsilon}}, cfg);
        CHECK(labels[0] == Regime::EX);
    }
    SUBCASE("outside the hull inside the slack band keeps its stage-2 label") {
        // near a training point: stage 2 says IT, the override does not fire
        auto labels =
            partition::label_axis(train, std::vector<Point>{{5.0, 10.0 + 0.5 * cfg.epsilon}}, cfg);
        CHECK(labels[0] == Regime::IT);
        // far from training points: stage 2 says IP and it stays IP
        labels =
            partition::label_axis(train, std::vector<Point>{{5.5, 10.0 + 0.5 * cfg.epsilon}}, cfg);
        CHECK(labels[0] == Regime::IP);
    }
    SUBCASE("training points relabeled as test are all IT") {
        const auto labels = partition::label_axis(train, train, cfg);
        for (const auto l : labels) CHECK(l == Regime::IT);
    }
    SUBCASE("raising tau never demotes IT") {
        std::vector<Point> test;
        Xoshiro256 rng(3);
        for (int i = 0; i < 200; ++i) test.push_back({rng.unit() * 14 - 2, rng.unit() * 14 - 2});
        RegimeConfig lo = cfg, hi = cfg;
        lo.tau = 0.3;
        hi.tau = 0.9;
        const auto l1 = partition::label_axis(train, test, lo);
        const auto l2 = partition::label_axis(train, test, hi);
        for (std::size_t i = 0; i < test.size(); ++i) {
            if (l1[i] == Regime::IT) CHECK(l2[i] != Regime::IP);
        }
    }
}

TEST_CASE("record labeling composes wind and wave axes") {
    synth::SynthConfig cfg;
    cfg.n_seeds = 2;
    cfg.n_sections = 2;
    const auto records = synth::generate_dataset(cfg);
    const auto [train, test] = partition::apply_split(records, SplitSpec::released());

    const auto labels = partition::label_records(train, test, RegimeConfig{});
    REQUIRE(labels.size() == test.size());
    std::set<std::string> joints;
    for (const auto& l : labels) joints.insert(l.joint());
    for (const auto& j : joints) {
        CHECK(j.find('_') != std::string::npos);
    }
    // extreme wind bins land outside the training hull
    bool saw_wind_ex = false;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (test[i].wind_speed_id == 22 && labels[i].wind == Regime::EX) saw_wind_ex = true;
    }
    CHECK(saw_wind_ex);

    const auto [ltrain, ltest] = partition::label_split(train, test, RegimeConfig{});
    for (const auto& r : ltrain) {
        CHECK(r.wind_group == Regime::InTrain);
        CHECK(r.wave_group == Regime::InTrain);
    }
    for (std::size_t i = 0; i < ltest.size(); ++i) {
        CHECK(ltest[i].wind_group == labels[i].wind);
        CHECK(ltest[i].wave_group == labels[i].wave);
    }
}

TEST_CASE("fold purity on both split flavours") {
    synth::SynthConfig cfg;
    cfg.n_wind = 22;
    cfg.n_seeds = 1;
    cfg.n_sections = 2;
    const auto records = synth::generate_dataset(cfg);

    const auto [gt, gte] = partition::apply_split(records, SplitSpec::released());
    std::unordered_set<int64_t> sims;
    for (const auto& r : gt) sims.insert(r.sim_id);
    for (const auto& r : gte) CHECK(!sims.count(r.sim_id));
}
