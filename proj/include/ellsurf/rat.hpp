#ifndef ELLSURF_RAT_HPP
#define ELLSURF_RAT_HPP

#include <gmpxx.h>
#include <optional>
#include <string>

namespace ellsurf {

// Exact arithmetic scalars. mpq_class keeps gcd(num,den)=1 and den>0 after
// canonicalize(), which the gmpxx operators do for us.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) { Rat r(n, d); r.canonicalize(); return r; }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Floor of a rational as an integer.
inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

// Exact square root, if the argument is a perfect square of a rational.
std::optional<Rat> rat_sqrt(const Rat& r);

std::string rat_to_string(const Rat& r);

} // namespace ellsurf

#endif
