#ifndef ELLSURF_ERRORS_HPP
#define ELLSURF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ellsurf {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("zero polynomial") {}
};

struct SingularModel : Error {
    explicit SingularModel(const std::string& detail)
        : Error("singular model (discriminant vanishes): " + detail) {}
};

struct Isotrivial : Error {
    explicit Isotrivial(const std::string& detail)
        : Error("isotrivial: " + detail) {}
};

struct UnclassifiedValuations : Error {
    explicit UnclassifiedValuations(const std::string& detail)
        : Error("unclassified valuation triple: " + detail) {}
};

struct NonGenericReduction : Error {
    explicit NonGenericReduction(const std::string& detail)
        : Error("non-generic Gauss-Manin reduction: " + detail) {}
};

struct ZeroGauge : Error {
    ZeroGauge() : Error("gauge function is zero") {}
};

struct IrregularSingularity : Error {
    explicit IrregularSingularity(const std::string& detail)
        : Error("Fuchs criterion fails: " + detail) {}
};

struct NonRationalExponents : Error {
    explicit NonRationalExponents(const std::string& detail)
        : Error("local exponents are not rational: " + detail) {}
};

struct SectionNotOnCurve : Error {
    SectionNotOnCurve() : Error("section does not satisfy the Weierstrass equation") {}
};

struct ZeroDenominator : Error {
    explicit ZeroDenominator(const std::string& detail)
        : Error("zero denominator: " + detail) {}
};

struct StepUnderflow : Error {
    explicit StepUnderflow(const std::string& detail)
        : Error("continuation step underflow: " + detail) {}
};

struct ToleranceNotMet : Error {
    explicit ToleranceNotMet(const std::string& detail)
        : Error("tolerance not met: " + detail) {}
};

struct SearchExhausted : Error {
    explicit SearchExhausted(const std::string& detail)
        : Error("search bound exhausted: " + detail) {}
};

struct ParseError : Error {
    int line, column;
    ParseError(const std::string& what, int line_, int col_)
        : Error(what), line(line_), column(col_) {}
};

} // namespace ellsurf

#endif
