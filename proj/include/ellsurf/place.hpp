#ifndef ELLSURF_PLACE_HPP
#define ELLSURF_PLACE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ellsurf/ratfunc.hpp"

namespace ellsurf {

// A closed point of P^1 over Q: either a monic irreducible polynomial or the
// point at infinity.
class Place {
public:
    static Place infinity() { return Place(); }
    static Place finite(Poly pi);             // pi monic irreducible
    static Place rational(const Rat& a);      // the place t - a

    bool is_infinity() const { return !pi_.has_value(); }
    const Poly& pi() const { return *pi_; }   // only for finite places
    int degree() const { return is_infinity() ? 1 : pi_->degree(); }

    bool operator==(const Place& o) const;
    bool operator!=(const Place& o) const { return !(*this == o); }
    bool operator<(const Place& o) const;     // deterministic order, infinity last

    std::string to_string(const std::string& var = "t") const;

private:
    Place() = default;
    std::optional<Poly> pi_;
};

// Order of vanishing of f at v; negative for poles. The zero function gets
// the distinguished +infinity marker (nullopt).
using Valuation = std::optional<long>;

Valuation valuation(const RatFunc& f, const Place& v);

// All places where f has a zero or pole (finite support plus infinity when
// the degree valuation is nonzero). f must be nonzero.
std::vector<Place> support(const RatFunc& f);

// ---- residue field arithmetic ---------------------------------------------

struct ResidueField {
    Poly modulus;                             // monic irreducible
    int degree() const { return modulus.degree(); }
};

using ResidueFieldPtr = std::shared_ptr<const ResidueField>;

// Element of Q[t]/(pi). Arithmetic requires both operands to share the field.
class ResidueElem {
public:
    ResidueElem() = default;
    ResidueElem(Poly rep, ResidueFieldPtr fld);

    static ResidueElem from_rat(const Rat& c, const ResidueFieldPtr& fld) {
        return ResidueElem(Poly::constant(c), fld);
    }

    const Poly& rep() const { return rep_; }
    const ResidueFieldPtr& field() const { return fld_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.is_constant(); }
    Rat rational_value() const { return rep_.coeff(0); }

    ResidueElem operator-() const;
    friend ResidueElem operator+(const ResidueElem& a, const ResidueElem& b);
    friend ResidueElem operator-(const ResidueElem& a, const ResidueElem& b);
    friend ResidueElem operator*(const ResidueElem& a, const ResidueElem& b);
    friend ResidueElem operator/(const ResidueElem& a, const ResidueElem& b);
    bool operator==(const ResidueElem& o) const { return rep_ == o.rep_; }
    bool operator!=(const ResidueElem& o) const { return !(*this == o); }

    ResidueElem inverse() const;
    // Trace of multiplication-by-this, i.e. the field trace to Q.
    Rat trace() const;

private:
    Poly rep_;
    ResidueFieldPtr fld_;
};

// ---- minimal field abstraction used by the series machinery ---------------

inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline bool field_is_zero(const Rat& x) { return sgn(x) == 0; }
inline Rat field_inv(const Rat& x) { return Rat(1) / x; }
inline Rat scalar_mul(const Rat& s, const Rat& x) { return s * x; }

inline ResidueElem zero_like(const ResidueElem& x) {
    return ResidueElem(Poly::zero(), x.field());
}
inline ResidueElem one_like(const ResidueElem& x) {
    return ResidueElem(Poly::one(), x.field());
}
inline bool field_is_zero(const ResidueElem& x) { return x.is_zero(); }
inline ResidueElem field_inv(const ResidueElem& x) { return x.inverse(); }
inline ResidueElem scalar_mul(const Rat& s, const ResidueElem& x) {
    return ResidueElem::from_rat(s, x.field()) * x;
}

// Q-coordinates of a field element (length = field degree over Q).
inline std::vector<Rat> field_coords(const Rat& x) { return {x}; }
std::vector<Rat> field_coords(const ResidueElem& x);

} // namespace ellsurf

#endif
