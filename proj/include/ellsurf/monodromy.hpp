#ifndef ELLSURF_MONODROMY_HPP
#define ELLSURF_MONODROMY_HPP

#include <complex>
#include <vector>

#include "ellsurf/diffop.hpp"
#include "ellsurf/weierstrass.hpp"

namespace ellsurf {

using Cplx = std::complex<double>;

struct Mat2 {
    Cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};

    Cplx trace() const { return a + d; }
    Cplx det() const { return a * d - b * c; }
    friend Mat2 operator*(const Mat2& l, const Mat2& r) {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c,
                l.c * r.b + l.d * r.d};
    }
    Mat2 inverse() const;
    double dist(const Mat2& o) const; // max-norm of the difference
};

struct PathPlan {
    Cplx base_point{0.0};
    std::vector<Cplx> polyline;        // waypoints, base_point first
    std::vector<Place> enclosed_places;
    std::vector<Cplx> enclosed_points; // geometric points inside loop plans
};

struct MonodromyMatrix {
    Mat2 m;
    double error = 0.0; // heuristic accumulated estimate
};

// Complex roots of a rational-coefficient polynomial (Durand-Kerner, fixed
// deterministic start).
std::vector<Cplx> complex_roots(const Poly& p);

// All geometric singular points of op in the finite plane, with their places.
std::vector<std::pair<Place, Cplx>> singular_points(const DiffOp2& op);

// Transfer matrix of op along the polyline: maps (y, y') at the start to
// (y, y') at the end. Taylor recurrence with adaptive order, step bounded by
// half the distance to the nearest singular point.
MonodromyMatrix integrate(const DiffOp2& op, const PathPlan& plan, double tol);

// A loop plan from base around exactly the given geometric point.
PathPlan loop_around(const DiffOp2& op, const Cplx& base, const Cplx& point);

// One monodromy matrix per geometric singular point, in a fixed planar order,
// followed by the loop around infinity; the left-to-right product in list
// order is the identity up to the accumulated error.
std::vector<std::pair<Place, MonodromyMatrix>> local_monodromies(const WeierstrassModel& model,
                                                                 const DiffOp2& op,
                                                                 const Cplx& base_point,
                                                                 double tol);

} // namespace ellsurf

#endif
