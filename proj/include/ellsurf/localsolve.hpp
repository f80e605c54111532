#ifndef ELLSURF_LOCALSOLVE_HPP
#define ELLSURF_LOCALSOLVE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ellsurf/diffop.hpp"

namespace ellsurf {

// Formal solution u^exponent * (sum_k coeffs[k] u^k) + log_multiplier *
// log(u) * (first basis solution), in the uniformizer u at the place (u = 1/t
// at infinity). Coefficients live in the residue field of the place.
struct FrobeniusSolution {
    Place place;
    Rat exponent;
    int log_degree = 0;        // 0 or 1
    ResidueElem log_multiplier; // C in y = series + C log(u) y1
    ResidueFieldPtr field;
    std::vector<ResidueElem> coeffs;
};

// Two independent formal solutions at a regular singular (or ordinary) place;
// first has the larger exponent and no logarithm, with leading coefficient 1.
std::pair<FrobeniusSolution, FrobeniusSolution> frobenius_basis(const DiffOp2& op, const Place& v,
                                                                int N);

struct ExactnessCertificate {
    Place place;
    bool locally_exact = true;
    // Q-coordinates of the resonance residues after eliminating the free
    // series parameters; all zero iff locally exact. The defining functionals
    // depend only on (op, place, window), so the values are linear in Z.
    std::vector<Rat> obstructions;
};

// Decides whether op f = Z has a single-valued meromorphic solution near the
// place. kmin, when given, fixes the bottom of the ansatz window so that
// certificates of different Z in a common pole-bounded space share the same
// obstruction functionals; it must not exceed val(Z) + 2.
ExactnessCertificate is_locally_exact(const DiffOp2& op, const RatFunc& Z, const Place& v,
                                      std::optional<long> kmin = std::nullopt);

// Integer roots of the indicial polynomial of op at the place.
std::vector<long> integer_indicial_roots(const DiffOp2& op, const Place& v);

// Global rational solution of op f = Z, or nullopt. Z = 0 returns the zero
// function.
std::optional<RatFunc> rational_solutions(const DiffOp2& op, const RatFunc& Z);

} // namespace ellsurf

#endif
