#ifndef ELLSURF_FACTOR_HPP
#define ELLSURF_FACTOR_HPP

#include <utility>
#include <vector>

#include "ellsurf/poly.hpp"

namespace ellsurf {

struct Factorization {
    Rat content;                               // p = content * prod f_i^e_i
    std::vector<std::pair<Poly, int>> factors; // monic irreducible over Q, sorted
};

// Full factorization over Q: squarefree decomposition (Yun) followed by
// Zassenhaus on each squarefree part. Throws ZeroPolynomial on p = 0.
Factorization factor(const Poly& p);

// Convenience: distinct monic irreducible factors, no multiplicities.
std::vector<Poly> irreducible_factors(const Poly& p);

bool is_irreducible(const Poly& p);

} // namespace ellsurf

#endif
