#include "ellsurf/ratfunc.hpp"

#include "ellsurf/errors.hpp"

namespace ellsurf {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDenominator("rational function");
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
    Rat lc = den_.leading();
    if (lc != 1) {
        Rat inv = Rat(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw ZeroDenominator("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw ZeroDenominator("inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    return RatFunc(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
}

Rat RatFunc::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (sgn(d) == 0) throw ZeroDenominator("evaluation at a pole");
    return num_.eval(x) / d;
}

RatFunc RatFunc::compose(const RatFunc& inner) const {
    // num(inner)/den(inner), cleared by a common power of inner.den
    int n = std::max(num_.degree(), den_.degree());
    Poly np, dp;
    // Horner over RatFunc would be simplest; degrees are small.
    RatFunc acc_n, acc_d;
    for (int i = num_.degree(); i >= 0; --i)
        acc_n = acc_n * inner + RatFunc(num_.coeff(i));
    for (int i = den_.degree(); i >= 0; --i)
        acc_d = acc_d * inner + RatFunc(den_.coeff(i));
    (void)n; (void)np; (void)dp;
    return acc_n / acc_d;
}

std::string RatFunc::to_string(const std::string& var) const {
    if (den_ == Poly::one()) return num_.to_string(var);
    std::string n = num_.to_string(var), d = den_.to_string(var);
    return "(" + n + ")/(" + d + ")";
}

} // namespace ellsurf
