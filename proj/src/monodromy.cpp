#include "ellsurf/monodromy.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace ellsurf {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double to_double(const Rat& r) { return mpq_class(r).get_d(); }

Cplx ceval(const Poly& p, const Cplx& z) {
    Cplx acc = 0.0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * z + to_double(p.coeff(i));
    return acc;
}

// Taylor coefficients of p around z0, full length.
std::vector<Cplx> cshift(const Poly& p, const Cplx& z0) {
    if (p.is_zero()) return {Cplx(0.0)};
    int d = p.degree();
    std::vector<Cplx> a(d + 1);
    for (int i = 0; i <= d; ++i) a[i] = to_double(p.coeff(i));
    for (int j = 0; j <= d; ++j)
        for (int i = d - 1; i >= j; --i) a[i] += z0 * a[i + 1];
    return a;
}

std::vector<Cplx> cseries_div(const std::vector<Cplx>& num, const std::vector<Cplx>& den,
                              size_t n) {
    std::vector<Cplx> out(n, Cplx(0.0));
    Cplx lead = 1.0 / den[0];
    for (size_t k = 0; k < n; ++k) {
        Cplx acc = k < num.size() ? num[k] : Cplx(0.0);
        for (size_t j = 1; j <= k && j < den.size(); ++j) acc -= den[j] * out[k - j];
        out[k] = acc * lead;
    }
    return out;
}

std::vector<Cplx> ratfunc_taylor(const RatFunc& f, const Cplx& z0, size_t n) {
    if (f.is_zero()) return std::vector<Cplx>(n, Cplx(0.0));
    return cseries_div(cshift(f.num(), z0), cshift(f.den(), z0), n);
}

struct Stepper {
    const DiffOp2& op;
    std::vector<Cplx> sing;
    double tol;

    double dist_to_singular(const Cplx& z) const {
        double d = 1e300;
        for (const Cplx& s : sing) d = std::min(d, std::abs(z - s));
        return d;
    }

    // transfer over one Taylor step of size h centered at z0; works with the
    // scaled coefficients d_k = c_k h^k so nothing over- or underflows
    Mat2 step(const Cplx& z0, const Cplx& h, double& err) const {
        double ah = std::abs(h);
        size_t order = 32;
        for (;;) {
            auto P = ratfunc_taylor(op.p, z0, order);
            auto Q = ratfunc_taylor(op.q, z0, order);
            std::vector<Cplx> Ph(order), Qh(order);
            Cplx hj = 1.0;
            for (size_t j = 0; j < order; ++j) {
                Ph[j] = P[j] * hj;
                Qh[j] = Q[j] * hj;
                hj *= h;
            }
            double tail = 0.0;
            Cplx cols[2][2];
            for (int b = 0; b < 2; ++b) {
                std::vector<Cplx> d(order + 2, Cplx(0.0));
                d[0] = b == 0 ? 1.0 : 0.0;
                d[1] = b == 0 ? 0.0 : h;
                for (size_t k = 0; k + 2 <= order + 1; ++k) {
                    Cplx acc = 0.0;
                    for (size_t j = 0; j <= k; ++j)
                        acc += Ph[j] * (double(k + 1 - j) * h) * d[k + 1 - j] +
                               Qh[j] * (h * h) * d[k - j];
                    d[k + 2] = -acc / double((k + 2) * (k + 1));
                }
                Cplx y = 0.0, dy = 0.0;
                for (size_t k = 0; k < d.size(); ++k) {
                    y += d[k];
                    if (k >= 1) dy += double(k) * d[k] / h;
                }
                cols[b][0] = y;
                cols[b][1] = dy;
                for (size_t k = d.size() - 4; k < d.size(); ++k)
                    tail += std::abs(d[k]) * (1.0 + double(k) / ah);
            }
            Mat2 T{cols[0][0], cols[1][0], cols[0][1], cols[1][1]};
            if (tail < tol) {
                err += tail;
                return T;
            }
            order *= 2;
            if (order > 2048) throw ToleranceNotMet("Taylor order exhausted");
        }
    }

    Mat2 segment(const Cplx& from, const Cplx& to, double& err) const {
        Mat2 T;
        Cplx z = from;
        double total = std::abs(to - from);
        if (total == 0.0) return T;
        Cplx dir = (to - from) / total;
        double done = 0.0;
        while (done < total) {
            double d = dist_to_singular(z);
            if (d < 1e-12) throw StepUnderflow("path too close to a singular point");
            double h = std::min(0.45 * d, total - done);
            T = step(z, h * dir, err) * T;
            done += h;
            z = from + done * dir;
        }
        return T;
    }
};

// deterministic Durand-Kerner with Newton polish
std::vector<Cplx> roots_monic(std::vector<Cplx> a) {
    size_t n = a.size();
    std::vector<Cplx> x(n);
    double radius = 1.0;
    for (size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[i]));
    radius = 1.0 + radius;
    Cplx seed(0.4, 0.9);
    Cplx w = radius;
    for (size_t i = 0; i < n; ++i) {
        w *= seed;
        x[i] = w / std::abs(w) * radius * (0.5 + 0.5 * double(i + 1) / double(n));
    }
    auto eval = [&](const Cplx& z) {
        Cplx acc = 1.0;
        for (size_t i = n; i-- > 0;) acc = acc * z + a[i];
        return acc;
    };
    for (int pass = 0; pass < 500; ++pass) {
        double move = 0.0;
        for (size_t i = 0; i < n; ++i) {
            Cplx den = 1.0;
            for (size_t j = 0; j < n; ++j)
                if (j != i) den *= x[i] - x[j];
            Cplx delta = eval(x[i]) / den;
            x[i] -= delta;
            move = std::max(move, std::abs(delta));
        }
        if (move < 1e-14 * radius) break;
    }
    return x;
}

} // namespace

Mat2 Mat2::inverse() const {
    Cplx dt = det();
    return {d / dt, -b / dt, -c / dt, a / dt};
}

double Mat2::dist(const Mat2& o) const {
    return std::max(std::max(std::abs(a - o.a), std::abs(b - o.b)),
                    std::max(std::abs(c - o.c), std::abs(d - o.d)));
}

std::vector<Cplx> complex_roots(const Poly& p) {
    assert(p.degree() >= 1);
    std::vector<Cplx> a(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) a[i] = to_double(p.coeff(i));
    Cplx lead = a.back();
    for (auto& c : a) c /= lead;
    a.pop_back();
    return roots_monic(std::move(a));
}

std::vector<std::pair<Place, Cplx>> singular_points(const DiffOp2& op) {
    std::vector<std::pair<Place, Cplx>> out;
    for (const Place& v : singular_support(op)) {
        if (v.is_infinity()) continue;
        for (const Cplx& z : complex_roots(v.pi())) out.emplace_back(v, z);
    }
    return out;
}

MonodromyMatrix integrate(const DiffOp2& op, const PathPlan& plan, double tol) {
    Stepper st{op, {}, tol};
    for (const auto& [v, z] : singular_points(op)) st.sing.push_back(z);
    MonodromyMatrix out;
    double err = 0.0;
    Mat2 T;
    for (size_t i = 0; i + 1 < plan.polyline.size(); ++i)
        T = st.segment(plan.polyline[i], plan.polyline[i + 1], err) * T;
    out.m = T;
    out.error = err;
    return out;
}

PathPlan loop_around(const DiffOp2& op, const Cplx& base, const Cplx& point) {
    auto pts = singular_points(op);
    double near = 1e300;
    for (const auto& [v, z] : pts)
        if (std::abs(z - point) > 1e-9) near = std::min(near, std::abs(z - point));
    near = std::min(near, std::abs(base - point));
    double r = 0.4 * near;

    PathPlan plan;
    plan.base_point = base;
    Cplx dir = (base - point) / std::abs(base - point);
    Cplx entry = point + r * dir;
    plan.polyline.push_back(base);
    plan.polyline.push_back(entry);
    const int kSides = 16;
    for (int i = 1; i <= kSides; ++i) {
        double a = 2.0 * kPi * double(i) / kSides;
        plan.polyline.push_back(point + r * dir * Cplx(std::cos(a), std::sin(a)));
    }
    plan.polyline.push_back(base);
    for (const auto& [v, z] : pts)
        if (std::abs(z - point) <= 1e-9) {
            plan.enclosed_places.push_back(v);
            plan.enclosed_points.push_back(z);
        }
    return plan;
}

std::vector<std::pair<Place, MonodromyMatrix>> local_monodromies(const WeierstrassModel& model,
                                                                 const DiffOp2& op,
                                                                 const Cplx& base_point,
                                                                 double tol) {
    (void)model;
    auto pts = singular_points(op);

    // generic spider center: all petal directions distinct
    Cplx mean = 0.0;
    double spread = 1.0;
    for (const auto& [v, z] : pts) mean += z;
    if (!pts.empty()) mean /= double(pts.size());
    for (const auto& [v, z] : pts) spread = std::max(spread, std::abs(z - mean));
    Cplx center = mean + spread * Cplx(0.137, 0.319);
    for (int tries = 0; tries < 64; ++tries) {
        bool ok = true;
        for (size_t i = 0; i < pts.size() && ok; ++i) {
            if (std::abs(pts[i].second - center) < 1e-6 * spread) ok = false;
            for (size_t j = i + 1; j < pts.size() && ok; ++j) {
                double di = std::arg((pts[i].second - center) / (pts[j].second - center));
                if (std::abs(di) < 1e-3) ok = false;
            }
        }
        if (std::abs(base_point - center) < 1e-6 * spread) ok = false;
        if (ok) break;
        center += spread * Cplx(0.211, -0.173);
    }

    double radius = std::abs(base_point - center);
    for (const auto& [v, z] : pts) radius = std::max(radius, std::abs(z - center));
    radius = 2.0 * radius + 1.0;

    // order petals by direction from the spider center, starting just past
    // the direction of the work base point
    struct Petal {
        size_t idx;
        double angle;
    };
    // base direction: middle of the largest angular gap
    std::vector<double> angles;
    for (const auto& [v, z] : pts) angles.push_back(std::arg(z - center));
    std::vector<double> sorted = angles;
    std::sort(sorted.begin(), sorted.end());
    double phi0 = 0.0, best_gap = -1.0;
    for (size_t i = 0; i < sorted.size(); ++i) {
        double a = sorted[i];
        double b = i + 1 < sorted.size() ? sorted[i + 1] : sorted[0] + 2.0 * kPi;
        if (b - a > best_gap) {
            best_gap = b - a;
            phi0 = 0.5 * (a + b);
        }
    }
    if (pts.empty()) phi0 = 0.0;
    Cplx work_base = center + radius * Cplx(std::cos(phi0), std::sin(phi0));

    std::vector<Petal> petals;
    for (size_t i = 0; i < pts.size(); ++i) {
        double rel = angles[i] - phi0;
        while (rel <= 0.0) rel += 2.0 * kPi;
        petals.push_back({i, rel});
    }
    std::sort(petals.begin(), petals.end(),
              [](const Petal& a, const Petal& b) { return a.angle < b.angle; });

    Stepper st{op, {}, tol};
    for (const auto& [v, z] : pts) st.sing.push_back(z);

    auto arc_points = [&](double from, double to) { // along the big circle
        std::vector<Cplx> w;
        int n = std::max(2, static_cast<int>(std::ceil(std::abs(to - from) / 0.25)));
        for (int i = 0; i <= n; ++i) {
            double a = from + (to - from) * double(i) / n;
            w.push_back(center + radius * Cplx(std::cos(a), std::sin(a)));
        }
        return w;
    };

    // transfer from the user base to the work base
    double conj_err = 0.0;
    Mat2 A = st.segment(base_point, work_base, conj_err);
    Mat2 Ainv = A.inverse();

    std::vector<std::pair<Place, MonodromyMatrix>> out;
    for (const Petal& pl : petals) {
        const auto& [place, z] = pts[pl.idx];
        double rho = std::abs(z - center);
        double near = radius - rho;
        for (size_t j = 0; j < pts.size(); ++j)
            if (j != pl.idx) near = std::min(near, std::abs(pts[j].second - z));
        double r = 0.35 * near;
        double theta = std::arg(z - center);

        double err = conj_err * 2.0;
        // approach: big-circle arc from the base direction to the petal
        // direction, then a radial spoke inward
        Mat2 approach;
        auto arc = arc_points(phi0, phi0 + pl.angle);
        for (size_t i = 0; i + 1 < arc.size(); ++i)
            approach = st.segment(arc[i], arc[i + 1], err) * approach;
        Cplx dir(std::cos(theta), std::sin(theta));
        Cplx entry = center + (rho + r) * dir;
        approach = st.segment(arc.back(), entry, err) * approach;
        // small counterclockwise circle around the point
        const int kSides = 16;
        Mat2 circle;
        Cplx prev = entry;
        for (int i = 1; i <= kSides; ++i) {
            double a = 2.0 * kPi * double(i) / kSides;
            Cplx nxt = z + (entry - z) * Cplx(std::cos(a), std::sin(a));
            circle = st.segment(prev, nxt, err) * circle;
            prev = nxt;
        }
        Mat2 loop = approach.inverse() * circle * approach; // at the work base
        loop = Ainv * loop * A;                             // at the user base
        out.push_back({place, MonodromyMatrix{loop, err}});
    }

    // loop around infinity: the big circle, clockwise
    {
        double err = conj_err * 2.0;
        Mat2 T;
        auto arc = arc_points(phi0, phi0 - 2.0 * kPi);
        for (size_t i = 0; i + 1 < arc.size(); ++i)
            T = st.segment(arc[i], arc[i + 1], err) * T;
        Mat2 loop = Ainv * T * A;
        out.push_back({Place::infinity(), MonodromyMatrix{loop, err}});
    }
    return out;
}

} // namespace ellsurf
