#include "envbench/fatigue.hpp"

#include <cmath>
#include <cstring>

#include "envbench/csv.hpp"
#include "envbench/error.hpp"

namespace envbench::fatigue {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void SectionGeometry::validate() const {
    require(thickness_m > 0.0 && thickness_m < radius_m,
            "section geometry needs 0 < thickness < radius");
}

void SNCurve::validate() const {
    require(intercept > 0.0, "S-N intercept must be > 0");
    require(slope > 0.0, "S-N slope must be > 0");
}

double SNCurve::cycles_to_failure(double range) const {
    return intercept * std::pow(range, -slope);
}

std::vector<double> moment_to_stress(std::span<const double> moment, const SectionGeometry& geom) {
    geom.validate();
    const double modulus = kPi * geom.radius_m * geom.radius_m * geom.thickness_m;
    std::vector<double> stress;
    stress.reserve(moment.size());
    for (double m : moment) {
        require(std::isfinite(m), "non-finite moment sample");
        stress.push_back(m / modulus);
    }
    return stress;
}

std::vector<double> reversals(std::span<const double> series) {
    std::vector<double> collapsed;
    collapsed.reserve(series.size());
    for (double v : series) {
        if (collapsed.empty() || v != collapsed.back()) collapsed.push_back(v);
    }
    if (collapsed.size() < 2) return {};

    std::vector<double> out;
    out.reserve(collapsed.size());
    out.push_back(collapsed.front());
    for (std::size_t i = 1; i + 1 < collapsed.size(); ++i) {
        const double a = collapsed[i - 1], b = collapsed[i], c = collapsed[i + 1];
        if ((b > a && b > c) || (b < a && b < c)) out.push_back(b);
    }
    out.push_back(collapsed.back());
    return out;
}

CycleHistogram rainflow(std::span<const double> series) {
    const auto rev = reversals(series);
    CycleHistogram hist;
    if (rev.size() < 2) return hist;

    std::vector<double> stack;
    stack.reserve(rev.size());
    for (double point : rev) {
        stack.push_back(point);
        while (stack.size() >= 4) {
            const std::size_t n = stack.size();
            const double r1 = std::fabs(stack[n - 3] - stack[n - 4]);
            const double r2 = std::fabs(stack[n - 2] - stack[n - 3]);
            const double r3 = std::fabs(stack[n - 1] - stack[n - 2]);
            if (r2 <= r1 && r2 <= r3) {
                hist.push_back({r2, 0.5 * (stack[n - 2] + stack[n - 3]), 1.0});
                stack.erase(stack.begin() + static_cast<std::ptrdiff_t>(n - 3),
                            stack.begin() + static_cast<std::ptrdiff_t>(n - 1));
            } else {
                break;
            }
        }
    }
    for (std::size_t i = 0; i + 1 < stack.size(); ++i) {
        hist.push_back({std::fabs(stack[i + 1] - stack[i]), 0.5 * (stack[i] + stack[i + 1]), 0.5});
    }
    return hist;
}

DamageResult miner_damage(const CycleHistogram& hist, const SNCurve& curve) {
    curve.validate();
    double damage = 0.0;
    for (const Cycle& c : hist) {
        if (c.range <= 0.0) continue;  // N -> infinity
        damage += c.count / curve.cycles_to_failure(c.range);
    }
    return {damage, std::pow(damage, 1.0 / curve.slope)};
}

DamageResult label_run(std::span<const double> moment, const SectionGeometry& geom,
                       const SNCurve& curve) {
    const auto stress = moment_to_stress(moment, geom);
    return miner_damage(rainflow(stress), curve);
}

std::vector<double> read_series_csv(const std::string& path) {
    csv::Reader reader(path);
    std::vector<std::string_view> fields;
    if (!reader.next(fields)) fail(path + ": empty file");
    if (fields.size() != 2 || fields[0] != "time_s" || fields[1] != "moment_Nm") {
        fail(path + ":1: expected header 'time_s,moment_Nm'");
    }
    std::vector<double> out;
    while (reader.next(fields)) {
        if (fields.size() == 1 && fields[0].empty()) continue;
        if (fields.size() != 2) {
            fail(path + ":" + std::to_string(reader.line()) + ": expected 2 fields");
        }
        bool ok = false;
        const double v = csv::parse_double(fields[1], ok);
        if (!ok || !std::isfinite(v)) {
            fail(path + ":" + std::to_string(reader.line()) + ": bad moment value");
        }
        out.push_back(v);
    }
    return out;
}

std::vector<double> read_series_binary(const std::string& path) {
    const std::string raw = csv::read_file(path);
    require(raw.size() % sizeof(double) == 0,
            path + ": size is not a multiple of 8 bytes");
    std::vector<double> out(raw.size() / sizeof(double));
    std::memcpy(out.data(), raw.data(), raw.size());
    for (double v : out) require(std::isfinite(v), path + ": non-finite sample");
    return out;
}

void write_series_csv(std::span<const double> series, double sample_rate_hz,
                      const std::string& path) {
    require(sample_rate_hz > 0.0, "sample rate must be > 0");
    std::string out = "time_s,moment_Nm\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        csv::append_double(out, static_cast<double>(i) / sample_rate_hz);
        out += ',';
        csv::append_double(out, series[i]);
        out += '\n';
    }
    csv::write_file(path, out);
}

}  // namespace envbench::fatigue
