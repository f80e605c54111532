#ifndef ELLSURF_IDR_HPP
#define ELLSURF_IDR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellsurf/localsolve.hpp"
#include "ellsurf/surface.hpp"

namespace ellsurf {

// Allowed pole orders of a rational function, place by place.
struct PoleDivisor {
    std::map<Place, long> orders;

    long at(const Place& v) const {
        auto it = orders.find(v);
        return it == orders.end() ? 0 : it->second;
    }
    long total_degree() const {
        long d = 0;
        for (const auto& [v, k] : orders) d += k * v.degree();
        return d;
    }
    bool contains(const PoleDivisor& o) const {
        for (const auto& [v, k] : o.orders)
            if (at(v) < k) return false;
        return true;
    }
    bool operator==(const PoleDivisor& o) const;
    std::string to_string(const std::string& var = "t") const;
};

// dim H^1(X, R^1 pi_* C) = b2 - 2 - sum(m_s - 1)
long expected_dimension(const WeierstrassModel& m);

struct IdrQuotient {
    long dimension = 0;
    std::vector<RatFunc> representatives; // parabolic classes independent mod exact
};

// Finite-dimensional linear algebra on the pole-bounded spaces L(D). The
// solver caches per-place obstruction functionals and images under the
// operator, so sweeps over many divisors share almost all of the work.
class IdrSolver {
public:
    explicit IdrSolver(DiffOp2 op, bool parallel = true);

    const DiffOp2& op() const { return op_; }
    // singular places of the operator plus infinity; the divisor support
    const std::vector<Place>& places() const { return places_; }

    // partial-fraction basis of L(D): 1..t^{D(inf)} and t^i/pi^j
    std::vector<RatFunc> l_basis(const PoleDivisor& D) const;

    // basis of the locally exact elements of L(D)
    std::vector<RatFunc> parabolic_subspace(const PoleDivisor& D);

    // parabolic_subspace(D) modulo the exact classes it contains
    IdrQuotient idr_quotient(const PoleDivisor& D);

    // true when the given element is exact (has a rational antiderivative
    // under the operator); small wrapper used when labelling representatives
    bool is_exact(const RatFunc& Z) const;

    // Largest pole order a locally exact function can have at v, when the
    // indicial roots bound it; divisors exceeding the cap carry no new
    // parabolic content.
    std::optional<long> pole_cap(const Place& v) const;

private:
    struct Mono { // place < 0: t^i; otherwise t^i / pi_{place}^j
        int place = -1;
        long j = 0;
        long i = 0;
        bool operator<(const Mono& o) const {
            if (place != o.place) return place < o.place;
            if (j != o.j) return j < o.j;
            return i < o.i;
        }
    };

    std::vector<Mono> monomials(const PoleDivisor& D) const;
    RatFunc mono_func(const Mono& m) const;
    const std::vector<Rat>& obstruction(size_t vi, const Mono& m);
    const RatFunc& image(const Mono& m);
    void warm_caches(const std::vector<Mono>& ms);
    std::vector<RatFunc> exact_generators(const PoleDivisor& D);

    DiffOp2 op_;
    bool parallel_;
    std::vector<Place> places_;
    std::vector<std::vector<long>> introots_;
    std::vector<long> kmin_;
    std::map<std::pair<size_t, Mono>, std::vector<Rat>> obstruction_cache_;
    std::map<Mono, RatFunc> image_cache_;
};

// One-shot conveniences matching the solver methods.
std::vector<RatFunc> parabolic_subspace(const DiffOp2& op, const PoleDivisor& D);
IdrQuotient idr_quotient(const DiffOp2& op, const PoleDivisor& D);

struct HodgeDivisors {
    PoleDivisor a0;
    std::vector<RatFunc> a0_basis; // all of L(A0): locally exact, never exact
    PoleDivisor a;
    std::vector<RatFunc> a_basis;  // representatives mod exact, p_g + h11' of them
};

// Iterative-deepening search (total pole degree, then lexicographic in the
// place order) for the Hodge-piece divisors; throws SearchExhausted past the
// bound.
HodgeDivisors hodge_search(const WeierstrassModel& m, const DiffOp2& op, long bound = 24);

} // namespace ellsurf

#endif
