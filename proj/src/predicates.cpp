#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "envbench/geometry.hpp"

// Filtered geometric predicates. The fast path evaluates the determinant in
// doubles and accepts the sign when its magnitude exceeds a forward error
// bound (constants from Shewchuk's robust predicates). Otherwise the
// determinant is recomputed in exact rational arithmetic; doubles are dyadic
// rationals, so the fallback sign is exact.

namespace envbench::geom {

namespace {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// 2^-53; error bounds below are Shewchuk's ccwerrboundA / iccerrboundA.
constexpr double kEps = 1.1102230246251565e-16;
constexpr double kOrientBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIncircleBound = (10.0 + 96.0 * kEps) * kEps;

Rat to_rat(double v) {
    if (v == 0.0) return Rat(0);
    int exp = 0;
    const double m = std::frexp(v, &exp);                       // v = m * 2^exp, 0.5 <= |m| < 1
    const auto mant = static_cast<long long>(std::ldexp(m, 53));  // exact integer
    const int e2 = exp - 53;
    Rat r(mant);
    if (e2 >= 0) {
        r *= Rat(Int(1) << e2);
    } else {
        r /= Rat(Int(1) << -e2);
    }
    return r;
}

int sign_of(const Rat& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

int orient2d_exact(const Point& a, const Point& b, const Point& c) {
    const Rat ax = to_rat(a.x), ay = to_rat(a.y);
    const Rat bx = to_rat(b.x), by = to_rat(b.y);
    const Rat cx = to_rat(c.x), cy = to_rat(c.y);
    const Rat det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    return sign_of(det);
}

int incircle_exact(const Point& a, const Point& b, const Point& c, const Point& d) {
    const Rat adx = to_rat(a.x) - to_rat(d.x);
    const Rat ady = to_rat(a.y) - to_rat(d.y);
    const Rat bdx = to_rat(b.x) - to_rat(d.x);
    const Rat bdy = to_rat(b.y) - to_rat(d.y);
    const Rat cdx = to_rat(c.x) - to_rat(d.x);
    const Rat cdy = to_rat(c.y) - to_rat(d.y);
    const Rat alift = adx * adx + ady * ady;
    const Rat blift = bdx * bdx + bdy * bdy;
    const Rat clift = cdx * cdx + cdy * cdy;
    const Rat det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
                    clift * (adx * bdy - bdx * ady);
    return sign_of(det);
}

}  // namespace

int orient2d(const Point& a, const Point& b, const Point& c) {
    const double detleft = (b.x - a.x) * (c.y - a.y);
    const double detright = (b.y - a.y) * (c.x - a.x);
    const double det = detleft - detright;
    double detsum = 0.0;
    if (detleft > 0.0) {
        if (detright <= 0.0) return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
        detsum = -detleft - detright;
    } else {
        return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
    }
    const double errbound = kOrientBound * detsum;
    if (det > errbound || -det > errbound) return det > 0.0 ? 1 : -1;
    return orient2d_exact(a, b, c);
}

int incircle(const Point& a, const Point& b, const Point& c, const Point& d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;

    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;
    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;

    const double det =
        alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
    const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                             (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                             (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
    const double errbound = kIncircleBound * permanent;
    if (det > errbound || -det > errbound) return det > 0.0 ? 1 : -1;
    return incircle_exact(a, b, c, d);
}

}  // namespace envbench::geom
