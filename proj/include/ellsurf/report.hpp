#ifndef ELLSURF_REPORT_HPP
#define ELLSURF_REPORT_HPP

#include <json.hpp>

#include "ellsurf/family.hpp"

namespace ellsurf {

// Machine-readable reports: one ordered JSON document per command, with a
// versioned top-level "schema" field. All exact values render as expression
// strings in the family variable and re-parse losslessly; floats carry the
// tolerance they were computed under.
using Json = nlohmann::ordered_json;

Json analyze_report(const FamilySpec& fam);
Json picard_fuchs_report(const FamilySpec& fam);
Json monodromy_report(const FamilySpec& fam, double tol);
Json idr_report(const FamilySpec& fam, long search_bound);
Json manin_report(const FamilySpec& fam);
Json compare_report(const FamilySpec& lhs, const FamilySpec& rhs);

// Human-readable rendering of any of the documents above.
std::string render_text(const Json& doc);

} // namespace ellsurf

#endif
