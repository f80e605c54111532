#ifndef ELLSURF_FAMILY_HPP
#define ELLSURF_FAMILY_HPP

#include <string>
#include <vector>

#include "ellsurf/gaussmanin.hpp"

namespace ellsurf {

// A family description parsed from the key-value text format:
//
//   name = Legendre
//   variable = l
//   a2 = -(1 + l)
//   a4 = l
//   section = (0, 1)
//
// Missing a_i default to zero; section lines may repeat.
struct FamilySpec {
    std::string name;
    std::string variable = "t";
    WeierstrassModel model{RatFunc::zero(), RatFunc::zero(), RatFunc::zero(), RatFunc::zero(),
                           RatFunc::zero()};
    std::vector<Section> sections;
};

// Exact expression parsing: integers, rationals, + - * / ^ with integer
// exponents, parentheses, the single variable. Throws ParseError with
// 1-based line and column.
RatFunc parse_ratfunc(const std::string& text, const std::string& variable);

// Parses the whole file; sections are checked against the curve equation
// exactly (SectionNotOnCurve otherwise).
FamilySpec parse_family(const std::string& text);

} // namespace ellsurf

#endif
