#include "ellsurf/idr.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "ellsurf/errors.hpp"
#include "ellsurf/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ellsurf {

namespace {

// Q-coordinates of rational functions over a common denominator; rows share
// the same length, so ranks and intersections are plain linear algebra.
Matrix<Rat> coordinate_rows(const std::vector<RatFunc>& fs) {
    Poly den = Poly::one();
    for (const RatFunc& f : fs)
        if (!f.is_zero()) den = poly_lcm(den, f.den());
    std::vector<Poly> nums;
    int width = 1;
    for (const RatFunc& f : fs) {
        Poly n = f.is_zero() ? Poly::zero() : f.num() * den.div_exact(f.den());
        width = std::max(width, n.degree() + 1);
        nums.push_back(std::move(n));
    }
    Matrix<Rat> rows;
    for (const Poly& n : nums) {
        std::vector<Rat> r(width, Rat(0));
        for (int i = 0; i <= n.degree(); ++i) r[i] = n.coeff(i);
        rows.push_back(std::move(r));
    }
    return rows;
}

// incremental row reduction: add rows one by one, report rank increases
struct RowSpace {
    Matrix<Rat> rows; // reduced, each with a recorded pivot
    std::vector<size_t> pivots;

    bool add(std::vector<Rat> r) {
        for (size_t k = 0; k < rows.size(); ++k) {
            const Rat& c = r[pivots[k]];
            if (sgn(c) == 0) continue;
            Rat f = c;
            for (size_t j = 0; j < r.size(); ++j) r[j] -= f * rows[k][j];
        }
        size_t p = r.size();
        for (size_t j = 0; j < r.size(); ++j)
            if (sgn(r[j]) != 0) {
                p = j;
                break;
            }
        if (p == r.size()) return false;
        Rat inv = Rat(1) / r[p];
        for (Rat& x : r) x *= inv;
        // keep earlier rows reduced against the new pivot
        for (size_t k = 0; k < rows.size(); ++k) {
            Rat c = rows[k][p];
            if (sgn(c) == 0) continue;
            for (size_t j = 0; j < r.size(); ++j) rows[k][j] -= c * r[j];
        }
        rows.push_back(std::move(r));
        pivots.push_back(p);
        return true;
    }
};

} // namespace

bool PoleDivisor::operator==(const PoleDivisor& o) const {
    PoleDivisor all;
    for (const auto& [v, k] : orders) all.orders[v] = 0;
    for (const auto& [v, k] : o.orders) all.orders[v] = 0;
    for (const auto& [v, k] : all.orders)
        if (at(v) != o.at(v)) return false;
    return true;
}

std::string PoleDivisor::to_string(const std::string& var) const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [v, k] : orders) {
        if (k == 0) continue;
        if (!first) out << " + ";
        first = false;
        out << k << "*(" << v.to_string(var) << ")";
    }
    if (first) out << "0";
    return out.str();
}

long expected_dimension(const WeierstrassModel& m) {
    SurfaceInvariants inv = surface_invariants(m);
    return inv.b2 - 2 - inv.sum_m_minus_1;
}

IdrSolver::IdrSolver(DiffOp2 op, bool parallel) : op_(std::move(op)), parallel_(parallel) {
    places_ = singular_support(op_);
    if (std::find_if(places_.begin(), places_.end(),
                     [](const Place& v) { return v.is_infinity(); }) == places_.end())
        places_.push_back(Place::infinity());
    std::sort(places_.begin(), places_.end());
    for (const Place& v : places_) {
        introots_.push_back(integer_indicial_roots(op_, v));
        long lo = 0;
        for (long r : introots_.back()) lo = std::min(lo, r);
        // low enough for every candidate in a degree-bounded search
        kmin_.push_back(std::min(lo, -30L));
    }
}

std::optional<long> IdrSolver::pole_cap(const Place& v) const {
    auto it = std::find(places_.begin(), places_.end(), v);
    if (it == places_.end()) return 2; // ordinary place: indicial roots {0, 1}
    const auto& roots = introots_[it - places_.begin()];
    if (roots.empty()) return std::nullopt;
    long lo = roots.front();
    for (long r : roots) lo = std::min(lo, r);
    return std::max(0L, 2 - lo);
}

std::vector<IdrSolver::Mono> IdrSolver::monomials(const PoleDivisor& D) const {
    std::vector<Mono> out;
    for (long i = 0; i <= D.at(Place::infinity()); ++i) out.push_back({-1, 0, i});
    for (size_t vi = 0; vi < places_.size(); ++vi) {
        if (places_[vi].is_infinity()) continue;
        long d = places_[vi].degree();
        for (long j = 1; j <= D.at(places_[vi]); ++j)
            for (long i = 0; i < d; ++i) out.push_back({static_cast<int>(vi), j, i});
    }
    // divisors may mention places the operator never sees
    for (const auto& [v, k] : D.orders) {
        if (v.is_infinity() || k == 0) continue;
        if (std::find(places_.begin(), places_.end(), v) != places_.end()) continue;
        throw Error("pole divisor is not supported on the singular places");
    }
    return out;
}

RatFunc IdrSolver::mono_func(const Mono& m) const {
    Poly ti = Poly::monomial(static_cast<int>(m.i), Rat(1));
    if (m.place < 0) return RatFunc(ti);
    return RatFunc(ti, places_[m.place].pi().pow(static_cast<unsigned>(m.j)));
}

std::vector<RatFunc> IdrSolver::l_basis(const PoleDivisor& D) const {
    std::vector<RatFunc> out;
    for (const Mono& m : monomials(D)) out.push_back(mono_func(m));
    return out;
}

void IdrSolver::warm_caches(const std::vector<Mono>& ms) {
    struct Job {
        size_t vi;
        Mono m;
    };
    std::vector<Job> jobs;
    for (size_t vi = 0; vi < places_.size(); ++vi)
        for (const Mono& m : ms)
            if (!obstruction_cache_.count({vi, m})) jobs.push_back({vi, m});
    std::vector<std::vector<Rat>> results(jobs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel_)
#endif
    for (size_t k = 0; k < jobs.size(); ++k) {
        results[k] =
            is_locally_exact(op_, mono_func(jobs[k].m), places_[jobs[k].vi], kmin_[jobs[k].vi])
                .obstructions;
    }
    for (size_t k = 0; k < jobs.size(); ++k)
        obstruction_cache_.emplace(std::make_pair(jobs[k].vi, jobs[k].m),
                                   std::move(results[k]));
}

const std::vector<Rat>& IdrSolver::obstruction(size_t vi, const Mono& m) {
    auto it = obstruction_cache_.find({vi, m});
    if (it == obstruction_cache_.end()) {
        auto cert = is_locally_exact(op_, mono_func(m), places_[vi], kmin_[vi]);
        it = obstruction_cache_.emplace(std::make_pair(vi, m), std::move(cert.obstructions))
                 .first;
    }
    return it->second;
}

const RatFunc& IdrSolver::image(const Mono& m) {
    auto it = image_cache_.find(m);
    if (it == image_cache_.end())
        it = image_cache_.emplace(m, op_.apply(mono_func(m))).first;
    return it->second;
}

std::vector<RatFunc> IdrSolver::parabolic_subspace(const PoleDivisor& D) {
    auto ms = monomials(D);
    warm_caches(ms);
    Matrix<Rat> A;
    for (size_t vi = 0; vi < places_.size(); ++vi) {
        size_t nrows = obstruction(vi, ms.front()).size();
        for (size_t r = 0; r < nrows; ++r) {
            std::vector<Rat> row(ms.size(), Rat(0));
            for (size_t c = 0; c < ms.size(); ++c) row[c] = obstruction(vi, ms[c])[r];
            A.push_back(std::move(row));
        }
    }
    std::vector<RatFunc> basis;
    for (const auto& coeffs : kernel_basis(A, ms.size(), Rat(0))) {
        RatFunc f;
        for (size_t c = 0; c < ms.size(); ++c)
            if (sgn(coeffs[c]) != 0) f += RatFunc(coeffs[c]) * mono_func(ms[c]);
        basis.push_back(std::move(f));
    }
    return basis;
}

std::vector<RatFunc> IdrSolver::exact_generators(const PoleDivisor& D) {
    // g with op(g) in L(D) has pole orders bounded by the indicial roots
    PoleDivisor Dp;
    for (size_t vi = 0; vi < places_.size(); ++vi) {
        long r = 0;
        for (long k : introots_[vi]) r = std::max(r, -k);
        Dp.orders[places_[vi]] = std::max(D.at(places_[vi]) + 2, r);
    }
    std::vector<RatFunc> out;
    for (const Mono& m : monomials(Dp)) out.push_back(image(m));
    return out;
}

IdrQuotient IdrSolver::idr_quotient(const PoleDivisor& D) {
    std::vector<RatFunc> para = parabolic_subspace(D);
    std::vector<RatFunc> exact = exact_generators(D);

    std::vector<RatFunc> all = exact;
    all.insert(all.end(), para.begin(), para.end());
    Matrix<Rat> rows = coordinate_rows(all);

    RowSpace space;
    for (size_t k = 0; k < exact.size(); ++k) space.add(rows[k]);
    IdrQuotient q;
    for (size_t k = 0; k < para.size(); ++k)
        if (space.add(rows[exact.size() + k])) {
            q.representatives.push_back(para[k]);
            ++q.dimension;
        }
    return q;
}

bool IdrSolver::is_exact(const RatFunc& Z) const {
    return rational_solutions(op_, Z).has_value();
}

std::vector<RatFunc> parabolic_subspace(const DiffOp2& op, const PoleDivisor& D) {
    return IdrSolver(op).parabolic_subspace(D);
}

IdrQuotient idr_quotient(const DiffOp2& op, const PoleDivisor& D) {
    return IdrSolver(op).idr_quotient(D);
}

namespace {

// all divisors on the given places with the given total degree, orders capped,
// lexicographic in the place order
void enumerate_level(const std::vector<Place>& places, const std::vector<long>& caps, size_t i,
                     long remaining, PoleDivisor& cur, std::vector<PoleDivisor>& out) {
    if (i == places.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    long d = places[i].degree();
    long hi = std::min(caps[i], remaining / d);
    for (long k = hi; k >= 0; --k) {
        cur.orders[places[i]] = k;
        enumerate_level(places, caps, i + 1, remaining - k * d, cur, out);
    }
    cur.orders[places[i]] = 0;
}

} // namespace

HodgeDivisors hodge_search(const WeierstrassModel& m, const DiffOp2& op, long bound) {
    SurfaceInvariants inv = surface_invariants(m);
    long pg = inv.p_g;
    long h11p = expected_dimension(m) - 2 * pg;

    IdrSolver solver(op);
    const auto& places = solver.places();
    std::vector<long> caps(places.size());
    for (size_t i = 0; i < places.size(); ++i) {
        auto c = solver.pole_cap(places[i]);
        caps[i] = c ? *c : bound / places[i].degree();
    }

    HodgeDivisors out;
    bool have_a0 = pg == 0; // the zero space: nothing to search for
    for (long n = 0; n <= bound && !have_a0; ++n) {
        std::vector<PoleDivisor> level;
        PoleDivisor cur;
        enumerate_level(places, caps, 0, n, cur, level);
        for (const PoleDivisor& D : level) {
            auto para = solver.parabolic_subspace(D);
            if (static_cast<long>(para.size()) != pg) continue;
            // no nonzero exact element: quotient keeps the full dimension
            if (solver.idr_quotient(D).dimension != pg) continue;
            out.a0 = D;
            out.a0_basis = para;
            have_a0 = true;
            break;
        }
    }
    if (!have_a0) throw SearchExhausted("no divisor matches the geometric genus");

    for (long n = out.a0.total_degree(); n <= bound; ++n) {
        std::vector<PoleDivisor> level;
        PoleDivisor cur;
        enumerate_level(places, caps, 0, n, cur, level);
        for (const PoleDivisor& D : level) {
            if (!D.contains(out.a0)) continue;
            IdrQuotient q = solver.idr_quotient(D);
            if (q.dimension != pg + h11p) continue;
            out.a = D;
            out.a_basis = q.representatives;
            return out;
        }
    }
    throw SearchExhausted("no divisor realizes the expected Hodge dimensions");
}

} // namespace ellsurf
