#pragma once

#include <array>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace envbench::geom {

struct Point {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

// Sign of (b-a) x (c-a): +1 if a,b,c turn counter-clockwise, -1 clockwise,
// 0 collinear. Double evaluation with a Shewchuk-style error filter and an
// exact rational fallback, so grid-aligned input is safe.
int orient2d(const Point& a, const Point& b, const Point& c);

// For a ccw triangle (a,b,c): +1 if d lies strictly inside the
// circumcircle, -1 strictly outside, 0 on it. Same filtering scheme.
int incircle(const Point& a, const Point& b, const Point& c, const Point& d);

// Affine per-axis standardization fitted on a training cloud.
struct Standardizer {
    double mean_x = 0.0, mean_y = 0.0;
    double std_x = 1.0, std_y = 1.0;

    Point transform(const Point& p) const {
        return {(p.x - mean_x) / std_x, (p.y - mean_y) / std_y};
    }
    Point inverse(const Point& p) const {
        return {p.x * std_x + mean_x, p.y * std_y + mean_y};
    }
    std::vector<Point> transform(std::span<const Point> pts) const;
};

// Population mean/std per axis. Throws on fewer than two points or a
// zero-variance axis.
Standardizer fit_standardizer(std::span<const Point> pts);

// Which triangles an alpha value keeps. InverseRadius is the classical
// rule on standardized coordinates: keep iff circumradius < 1/alpha
// (alpha = 0 keeps everything, i.e. the convex hull). Radius keeps iff
// circumradius < alpha, for harnesses that quote alpha as a radius.
enum class AlphaRule { InverseRadius, Radius };

AlphaRule parse_alpha_rule(const std::string& s);

// Concave hull of a 2-D point cloud: Delaunay triangulation with triangles
// pruned by circumradius. Immutable after construction; queries are
// thread-safe.
class AlphaShape {
public:
    double alpha() const { return alpha_; }
    AlphaRule rule() const { return rule_; }
    const std::vector<Point>& points() const { return points_; }  // deduplicated input
    const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }  // kept, ccw
    const std::vector<std::array<int, 2>>& boundary_edges() const { return boundary_; }

    // True iff p lies inside or on a kept triangle (boundary counts as inside).
    bool contains(const Point& p) const;

    // Euclidean distance from p to the nearest boundary edge segment;
    // 0 on the boundary, +inf when the shape has no kept triangles.
    double boundary_distance(const Point& p) const;

    // Sum of kept triangle areas (they are interior-disjoint by construction).
    double area() const;

    // Boundary polylines as (x, y, component id) rows for plotting.
    std::string boundary_csv() const;

private:
    friend AlphaShape build_alpha_shape(std::span<const Point>, double, AlphaRule);

    void build_grid();

    double alpha_ = 0.0;
    AlphaRule rule_ = AlphaRule::InverseRadius;
    std::vector<Point> points_;
    std::vector<std::array<int, 3>> triangles_;
    std::vector<std::array<int, 2>> boundary_;

    // Uniform grid over the cloud bounding box accelerating contains().
    int grid_n_ = 0;
    double grid_x0_ = 0.0, grid_y0_ = 0.0, grid_dx_ = 1.0, grid_dy_ = 1.0;
    std::vector<std::vector<int>> grid_cells_;
};

// Deduplicates points, Delaunay-triangulates them and prunes by the alpha
// rule. Throws if fewer than three distinct points remain or all points
// are collinear.
AlphaShape build_alpha_shape(std::span<const Point> pts, double alpha,
                             AlphaRule rule = AlphaRule::InverseRadius);

// Full Delaunay triangulation of deduplicated points (ccw triangles).
// Exposed for tests; build_alpha_shape is the primary entry point.
std::vector<std::array<int, 3>> delaunay(const std::vector<Point>& unique_pts);

double point_segment_distance(const Point& p, const Point& a, const Point& b);
double triangle_area(const Point& a, const Point& b, const Point& c);
double circumradius(const Point& a, const Point& b, const Point& c);

}  // namespace envbench::geom
