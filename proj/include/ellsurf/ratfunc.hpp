#ifndef ELLSURF_RATFUNC_HPP
#define ELLSURF_RATFUNC_HPP

#include <string>

#include "ellsurf/poly.hpp"

namespace ellsurf {

// Element of Q(t), kept reduced with monic denominator so equality is
// coefficient-wise.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::one()) {}
    RatFunc(Poly num, Poly den);
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one()) {}
    explicit RatFunc(const Rat& c) : num_(Poly::constant(c)), den_(Poly::one()) {}

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Poly::one()); }
    static RatFunc variable() { return RatFunc(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc derivative() const;
    RatFunc pow(int n) const;                 // negative n inverts
    RatFunc inverse() const;
    Rat eval(const Rat& x) const;             // throws ZeroDenominator at poles
    RatFunc compose(const RatFunc& inner) const;

    std::string to_string(const std::string& var = "t") const;

private:
    Poly num_, den_;
};

} // namespace ellsurf

#endif
