#include "envbench/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

#include "envbench/csv.hpp"
#include "envbench/error.hpp"

namespace envbench::geom {

namespace {

constexpr int kInf = -1;  // symbolic vertex at infinity

struct Face {
    // Finite faces hold three ccw point indices. Infinite faces are
    // normalized to (u, v, kInf) and stand for the unbounded region
    // strictly left of the directed hull edge u -> v.
    std::array<int, 3> v;
    bool infinite() const { return v[2] == kInf; }
};

Face normalize(std::array<int, 3> v) {
    while (v[0] == kInf || v[1] == kInf) {
        v = {v[1], v[2], v[0]};
    }
    return Face{v};
}

// True when c lies strictly between a and b on their common line.
bool strictly_between(const Point& a, const Point& b, const Point& c) {
    if (a.x != b.x) return (a.x < c.x && c.x < b.x) || (b.x < c.x && c.x < a.x);
    return (a.y < c.y && c.y < b.y) || (b.y < c.y && c.y < a.y);
}

struct Triangulator {
    const std::vector<Point>& pts;
    std::vector<Face> faces;

    bool in_conflict(const Face& f, const Point& p) const {
        if (!f.infinite()) {
            return incircle(pts[f.v[0]], pts[f.v[1]], pts[f.v[2]], p) > 0;
        }
        const Point& u = pts[f.v[0]];
        const Point& v = pts[f.v[1]];
        const int o = orient2d(u, v, p);
        if (o > 0) return true;
        if (o < 0) return false;
        return strictly_between(u, v, p);
    }

    void insert(int ip) {
        const Point& p = pts[static_cast<std::size_t>(ip)];
        std::vector<std::size_t> bad;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            if (in_conflict(faces[i], p)) bad.push_back(i);
        }
        require(!bad.empty(), "triangulation: point conflicts with no face (duplicate input?)");

        // Directed edges of the cavity; an edge is on the cavity boundary
        // when its reverse does not belong to a conflicting face.
        std::unordered_set<uint64_t> bad_edges;
        auto key = [](int a, int b) {
            return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) |
                   static_cast<uint32_t>(b);
        };
        for (std::size_t i : bad) {
            const auto& v = faces[i].v;
            bad_edges.insert(key(v[0], v[1]));
            bad_edges.insert(key(v[1], v[2]));
            bad_edges.insert(key(v[2], v[0]));
        }
        std::vector<std::array<int, 2>> boundary;
        for (std::size_t i : bad) {
            const auto& v = faces[i].v;
            const std::array<std::array<int, 2>, 3> edges = {
                {{v[0], v[1]}, {v[1], v[2]}, {v[2], v[0]}}};
            for (const auto& e : edges) {
                if (!bad_edges.count(key(e[1], e[0]))) boundary.push_back(e);
            }
        }

        std::sort(bad.begin(), bad.end(), std::greater<>());
        for (std::size_t i : bad) {
            faces[i] = faces.back();
            faces.pop_back();
        }
        for (const auto& e : boundary) {
            const Face f = normalize({e[0], e[1], ip});
            if (!f.infinite()) {
                require(orient2d(pts[f.v[0]], pts[f.v[1]], pts[f.v[2]]) > 0,
                        "triangulation: degenerate face created");
            }
            faces.push_back(f);
        }
    }
};

uint64_t coord_key(double v) {
    return std::bit_cast<uint64_t>(v + 0.0);  // fold -0.0 into +0.0
}

struct PointKey {
    uint64_t x, y;
    bool operator==(const PointKey&) const = default;
};

struct PointKeyHash {
    std::size_t operator()(const PointKey& k) const {
        uint64_t h = k.x * 0x9e3779b97f4a7c15ull;
        h ^= k.y + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

std::vector<Point> dedupe(std::span<const Point> pts) {
    std::vector<Point> out;
    std::unordered_set<PointKey, PointKeyHash> seen;
    out.reserve(pts.size());
    for (const Point& p : pts) {
        require(std::isfinite(p.x) && std::isfinite(p.y), "non-finite point");
        if (seen.insert({coord_key(p.x), coord_key(p.y)}).second) out.push_back(p);
    }
    return out;
}

}  // namespace

std::vector<Point> Standardizer::transform(std::span<const Point> pts) const {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const Point& p : pts) out.push_back(transform(p));
    return out;
}

Standardizer fit_standardizer(std::span<const Point> pts) {
    require(pts.size() >= 2, "standardizer needs at least 2 points");
    double sx = 0.0, sy = 0.0;
    for (const Point& p : pts) {
        sx += p.x;
        sy += p.y;
    }
    const double n = static_cast<double>(pts.size());
    Standardizer s;
    s.mean_x = sx / n;
    s.mean_y = sy / n;
    double vx = 0.0, vy = 0.0;
    for (const Point& p : pts) {
        vx += (p.x - s.mean_x) * (p.x - s.mean_x);
        vy += (p.y - s.mean_y) * (p.y - s.mean_y);
    }
    s.std_x = std::sqrt(vx / n);
    s.std_y = std::sqrt(vy / n);
    require(s.std_x > 0.0, "zero-variance x axis");
    require(s.std_y > 0.0, "zero-variance y axis");
    return s;
}

AlphaRule parse_alpha_rule(const std::string& s) {
    if (s == "inverse-radius") return AlphaRule::InverseRadius;
    if (s == "radius") return AlphaRule::Radius;
    fail("unknown alpha rule '" + s + "' (expected inverse-radius or radius)");
}

std::vector<std::array<int, 3>> delaunay(const std::vector<Point>& pts) {
    require(pts.size() >= 3, "triangulation needs at least 3 distinct points");

    // Seed with the first non-collinear triple; if none exists the whole
    // cloud lies on one line.
    std::size_t third = 0;
    for (std::size_t k = 2; k < pts.size(); ++k) {
        if (orient2d(pts[0], pts[1], pts[k]) != 0) {
            third = k;
            break;
        }
    }
    require(third != 0, "all points are collinear");

    Triangulator tri{pts, {}};
    std::array<int, 3> seed = {0, 1, static_cast<int>(third)};
    if (orient2d(pts[seed[0]], pts[seed[1]], pts[seed[2]]) < 0) std::swap(seed[1], seed[2]);
    tri.faces.push_back(Face{seed});
    tri.faces.push_back(normalize({seed[1], seed[0], kInf}));
    tri.faces.push_back(normalize({seed[2], seed[1], kInf}));
    tri.faces.push_back(normalize({seed[0], seed[2], kInf}));

    for (std::size_t k = 2; k < pts.size(); ++k) {
        if (k == third) continue;
        tri.insert(static_cast<int>(k));
    }

    std::vector<std::array<int, 3>> out;
    out.reserve(tri.faces.size());
    for (const Face& f : tri.faces) {
        if (!f.infinite()) out.push_back(f.v);
    }
    return out;
}

double triangle_area(const Point& a, const Point& b, const Point& c) {
    return 0.5 * std::fabs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

double circumradius(const Point& a, const Point& b, const Point& c) {
    const double la = std::hypot(b.x - a.x, b.y - a.y);
    const double lb = std::hypot(c.x - b.x, c.y - b.y);
    const double lc = std::hypot(a.x - c.x, a.y - c.y);
    const double area = triangle_area(a, b, c);
    if (area == 0.0) return std::numeric_limits<double>::infinity();
    return la * lb * lc / (4.0 * area);
}

double point_segment_distance(const Point& p, const Point& a, const Point& b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0) return std::hypot(p.x - a.x, p.y - a.y);
    double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

AlphaShape build_alpha_shape(std::span<const Point> input, double alpha, AlphaRule rule) {
    require(alpha >= 0.0, "alpha must be >= 0");
    AlphaShape shape;
    shape.alpha_ = alpha;
    shape.rule_ = rule;
    shape.points_ = dedupe(input);
    require(shape.points_.size() >= 3, "alpha shape needs at least 3 distinct points");

    const auto tris = delaunay(shape.points_);

    double cutoff = std::numeric_limits<double>::infinity();
    if (rule == AlphaRule::InverseRadius) {
        if (alpha > 0.0) cutoff = 1.0 / alpha;
    } else {
        cutoff = alpha;
    }
    for (const auto& t : tris) {
        const double r =
            circumradius(shape.points_[t[0]], shape.points_[t[1]], shape.points_[t[2]]);
        if (r < cutoff) shape.triangles_.push_back(t);
    }

    // Boundary: undirected edges incident to exactly one kept triangle.
    std::unordered_map<uint64_t, int> edge_count;
    auto ukey = [](int a, int b) {
        if (a > b) std::swap(a, b);
        return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) | static_cast<uint32_t>(b);
    };
    for (const auto& t : shape.triangles_) {
        ++edge_count[ukey(t[0], t[1])];
        ++edge_count[ukey(t[1], t[2])];
        ++edge_count[ukey(t[2], t[0])];
    }
    for (const auto& [key, count] : edge_count) {
        if (count == 1) {
            shape.boundary_.push_back(
                {static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu)});
        }
    }
    std::sort(shape.boundary_.begin(), shape.boundary_.end());

    shape.build_grid();
    return shape;
}

void AlphaShape::build_grid() {
    if (triangles_.empty()) return;
    double xmin = points_[triangles_[0][0]].x, xmax = xmin;
    double ymin = points_[triangles_[0][0]].y, ymax = ymin;
    for (const auto& t : triangles_) {
        for (int v : t) {
            xmin = std::min(xmin, points_[v].x);
            xmax = std::max(xmax, points_[v].x);
            ymin = std::min(ymin, points_[v].y);
            ymax = std::max(ymax, points_[v].y);
        }
    }
    grid_n_ = std::clamp(static_cast<int>(std::ceil(std::sqrt(
                             static_cast<double>(triangles_.size())))),
                         1, 128);
    grid_x0_ = xmin;
    grid_y0_ = ymin;
    grid_dx_ = (xmax - xmin) / grid_n_;
    grid_dy_ = (ymax - ymin) / grid_n_;
    if (grid_dx_ <= 0.0) grid_dx_ = 1.0;
    if (grid_dy_ <= 0.0) grid_dy_ = 1.0;
    grid_cells_.assign(static_cast<std::size_t>(grid_n_) * grid_n_, {});

    auto cell_of = [&](double v, double v0, double dv) {
        return std::clamp(static_cast<int>((v - v0) / dv), 0, grid_n_ - 1);
    };
    for (std::size_t i = 0; i < triangles_.size(); ++i) {
        const auto& t = triangles_[i];
        double txmin = points_[t[0]].x, txmax = txmin, tymin = points_[t[0]].y, tymax = tymin;
        for (int v : t) {
            txmin = std::min(txmin, points_[v].x);
            txmax = std::max(txmax, points_[v].x);
            tymin = std::min(tymin, points_[v].y);
            tymax = std::max(tymax, points_[v].y);
        }
        const int cx0 = cell_of(txmin, grid_x0_, grid_dx_), cx1 = cell_of(txmax, grid_x0_, grid_dx_);
        const int cy0 = cell_of(tymin, grid_y0_, grid_dy_), cy1 = cell_of(tymax, grid_y0_, grid_dy_);
        for (int cy = cy0; cy <= cy1; ++cy) {
            for (int cx = cx0; cx <= cx1; ++cx) {
                grid_cells_[static_cast<std::size_t>(cy) * grid_n_ + cx].push_back(
                    static_cast<int>(i));
            }
        }
    }
}

bool AlphaShape::contains(const Point& p) const {
    if (triangles_.empty()) return false;
    const double xmax = grid_x0_ + grid_dx_ * grid_n_;
    const double ymax = grid_y0_ + grid_dy_ * grid_n_;
    if (p.x < grid_x0_ || p.x > xmax || p.y < grid_y0_ || p.y > ymax) return false;
    const int cx = std::clamp(static_cast<int>((p.x - grid_x0_) / grid_dx_), 0, grid_n_ - 1);
    const int cy = std::clamp(static_cast<int>((p.y - grid_y0_) / grid_dy_), 0, grid_n_ - 1);
    for (int ti : grid_cells_[static_cast<std::size_t>(cy) * grid_n_ + cx]) {
        const auto& t = triangles_[ti];
        if (orient2d(points_[t[0]], points_[t[1]], p) >= 0 &&
            orient2d(points_[t[1]], points_[t[2]], p) >= 0 &&
            orient2d(points_[t[2]], points_[t[0]], p) >= 0) {
            return true;
        }
    }
    return false;
}

double AlphaShape::boundary_distance(const Point& p) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& e : boundary_) {
        best = std::min(best, point_segment_distance(p, points_[e[0]], points_[e[1]]));
    }
    return best;
}

double AlphaShape::area() const {
    double sum = 0.0;
    for (const auto& t : triangles_) {
        sum += triangle_area(points_[t[0]], points_[t[1]], points_[t[2]]);
    }
    return sum;
}

std::string AlphaShape::boundary_csv() const {
    // Walk boundary edges into polylines; a debug aid for plotting the hull.
    std::unordered_map<int, std::vector<std::size_t>> incident;
    for (std::size_t i = 0; i < boundary_.size(); ++i) {
        incident[boundary_[i][0]].push_back(i);
        incident[boundary_[i][1]].push_back(i);
    }
    std::vector<bool> used(boundary_.size(), false);
    std::string out = "x,y,component_id\n";
    int component = 0;
    for (std::size_t start = 0; start < boundary_.size(); ++start) {
        if (used[start]) continue;
        used[start] = true;
        std::vector<int> chain = {boundary_[start][0], boundary_[start][1]};
        for (;;) {
            const int tail = chain.back();
            std::size_t next = boundary_.size();
            for (std::size_t e : incident[tail]) {
                if (!used[e]) {
                    next = e;
                    break;
                }
            }
            if (next == boundary_.size()) break;
            used[next] = true;
            chain.push_back(boundary_[next][0] == tail ? boundary_[next][1] : boundary_[next][0]);
        }
        for (int v : chain) {
            csv::append_double(out, points_[v].x);
            out += ',';
            csv::append_double(out, points_[v].y);
            out += ',';
            csv::append_int(out, component);
            out += '\n';
        }
        ++component;
    }
    return out;
}

}  // namespace envbench::geom
