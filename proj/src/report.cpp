#include "ellsurf/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ellsurf/errors.hpp"
#include "ellsurf/idr.hpp"
#include "ellsurf/monodromy.hpp"

namespace ellsurf {

namespace {

const char* kSchema = "ellsurf-report/1";

Json header(const char* command, const FamilySpec& fam) {
    Json doc;
    doc["schema"] = kSchema;
    doc["command"] = command;
    doc["family"] = fam.name;
    doc["variable"] = fam.variable;
    return doc;
}

std::string fstr(const RatFunc& f, const FamilySpec& fam) { return f.to_string(fam.variable); }

Json complex_entry(const Cplx& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json invariants_block(const WeierstrassModel& m, const FamilySpec& fam) {
    SurfaceInvariants inv = surface_invariants(m);
    WeierstrassInvariants wi = invariants(m);
    Json out;
    out["c4"] = fstr(wi.c4, fam);
    out["c6"] = fstr(wi.c6, fam);
    out["delta"] = fstr(wi.delta, fam);
    out["j"] = fstr(wi.j, fam);
    out["j_degree"] = inv.j_degree;
    out["euler_number"] = inv.e;
    out["chi_O"] = inv.chiO;
    out["p_g"] = inv.p_g;
    out["q"] = inv.q;
    out["b2"] = inv.b2;
    out["h11"] = inv.h11;
    out["sum_m_minus_1"] = inv.sum_m_minus_1;
    out["rank_bound"] = inv.rank_bound;
    out["rho_at_rank_bound"] = inv.rho_given_r(inv.rank_bound);
    return out;
}

Json fiber_block(const WeierstrassModel& m, const FamilySpec& fam) {
    Json rows = Json::array();
    for (const LocalFiberData& d : fiber_table(m)) {
        Json row;
        row["place"] = d.place.to_string(fam.variable);
        row["degree"] = d.place.degree();
        row["type"] = d.type.name();
        row["components"] = d.m_s;
        row["euler"] = d.e_loc;
        row["trace"] = d.trace;
        row["v_delta"] = d.vals.vdelta;
        rows.push_back(std::move(row));
    }
    return rows;
}

// deterministic nonsingular base point for analytic continuation
Cplx pick_base(const DiffOp2& op) {
    auto pts = singular_points(op);
    const Cplx candidates[] = {{0.5, 0.0}, {2.0, 0.0}, {-1.0, 0.0}, {0.5, 0.5}, {1.0, 2.0},
                               {-2.0, 1.0}};
    for (const Cplx& c : candidates) {
        double d = 1e300;
        for (const auto& [v, z] : pts) d = std::min(d, std::abs(z - c));
        if (d > 0.05) return c;
    }
    return {0.31, 1.77};
}

} // namespace

Json analyze_report(const FamilySpec& fam) {
    validate(fam.model);
    Json doc = header("analyze", fam);
    doc["invariants"] = invariants_block(fam.model, fam);
    doc["fibers"] = fiber_block(fam.model, fam);
    return doc;
}

Json picard_fuchs_report(const FamilySpec& fam) {
    Json doc = header("picard-fuchs", fam);
    DiffOp2 op = picard_fuchs(fam.model);
    doc["p"] = fstr(op.p, fam);
    doc["q"] = fstr(op.q, fam);
    Json rows = Json::array();
    for (const Place& v : singular_support(op)) {
        SingPoint sp = classify_singularity(op, v, fam.model);
        Json row;
        row["place"] = v.to_string(fam.variable);
        row["exponents"] = {rat_to_string(sp.exponents.first), rat_to_string(sp.exponents.second)};
        row["kind"] = sp.kind == SingKind::Apparent ? "apparent" : "true-singular";
        row["logarithmic"] = sp.logarithmic;
        rows.push_back(std::move(row));
    }
    doc["singularities"] = rows;
    return doc;
}

Json monodromy_report(const FamilySpec& fam, double tol) {
    Json doc = header("monodromy", fam);
    doc["tol"] = tol;
    DiffOp2 op = picard_fuchs(fam.model);
    Cplx base = pick_base(op);
    doc["base_point"] = complex_entry(base);
    auto mats = local_monodromies(fam.model, op, base, tol);
    Json rows = Json::array();
    Mat2 prod;
    for (const auto& [v, M] : mats) {
        prod = prod * M.m;
        Json row;
        row["place"] = v.to_string(fam.variable);
        row["trace"] = complex_entry(M.m.trace());
        row["det"] = complex_entry(M.m.det());
        row["matrix"] = {complex_entry(M.m.a), complex_entry(M.m.b), complex_entry(M.m.c),
                         complex_entry(M.m.d)};
        row["error"] = M.error;
        rows.push_back(std::move(row));
    }
    doc["loops"] = rows;
    double defect = prod.dist(Mat2{});
    doc["product_identity_defect"] = defect;
    if (defect > 1e3 * tol + 1e-9)
        throw ToleranceNotMet("monodromy product defect exceeds the tolerance budget");
    return doc;
}

Json idr_report(const FamilySpec& fam, long search_bound) {
    Json doc = header("idr", fam);
    validate(fam.model);
    long expect = expected_dimension(fam.model);
    doc["expected_dimension"] = expect;
    DiffOp2 op = picard_fuchs(fam.model);
    IdrSolver solver(op);

    Json sweep = Json::array();
    long reached = -1;
    for (long n = 0;; ++n) {
        PoleDivisor D;
        for (const Place& v : solver.places()) {
            auto cap = solver.pole_cap(v);
            D.orders[v] = cap ? std::min(n, *cap) : n;
        }
        if (D.total_degree() > search_bound && n > 0) break;
        IdrQuotient q = solver.idr_quotient(D);
        sweep.push_back(Json{{"divisor", D.to_string(fam.variable)},
                             {"total_degree", D.total_degree()},
                             {"dimension", q.dimension}});
        reached = q.dimension;
        if (reached == expect) break;
    }
    doc["sweep"] = sweep;
    doc["stabilized"] = reached == expect;
    if (reached != expect)
        throw SearchExhausted("IDR dimension did not stabilize within the search bound");

    HodgeDivisors h = hodge_search(fam.model, op, search_bound);
    auto divisor_entry = [&](const PoleDivisor& D, const std::vector<RatFunc>& basis) {
        Json out;
        out["divisor"] = D.to_string(fam.variable);
        out["total_degree"] = D.total_degree();
        out["infinity_order"] = D.at(Place::infinity());
        // the same class viewed as a quadratic differential Z (dx)^2
        out["infinity_order_quadratic"] = D.at(Place::infinity()) + 4;
        Json b = Json::array();
        for (const RatFunc& f : basis) b.push_back(fstr(f, fam));
        out["basis"] = b;
        return out;
    };
    doc["hodge"] = Json{{"a0", divisor_entry(h.a0, h.a0_basis)},
                        {"a", divisor_entry(h.a, h.a_basis)}};
    return doc;
}

Json manin_report(const FamilySpec& fam) {
    Json doc = header("manin", fam);
    if (fam.sections.empty()) throw Error("family file declares no section");
    DiffOp2 op = picard_fuchs(fam.model);
    IdrSolver solver(op);
    Json rows = Json::array();
    for (const Section& s : fam.sections) {
        RatFunc Z = manin_map(fam.model, op, s);
        Json row;
        row["X"] = fstr(s.X, fam);
        row["Y"] = fstr(s.Y, fam);
        row["Z"] = fstr(Z, fam);
        bool parabolic = true;
        for (const Place& v : solver.places())
            parabolic = parabolic && is_locally_exact(op, Z, v).locally_exact;
        if (!Z.is_zero())
            for (const Place& v : support(Z))
                if (std::find(solver.places().begin(), solver.places().end(), v) ==
                    solver.places().end())
                    parabolic = parabolic && is_locally_exact(op, Z, v).locally_exact;
        row["parabolic"] = parabolic;
        row["exact"] = solver.is_exact(Z);
        rows.push_back(std::move(row));
    }
    doc["sections"] = rows;
    return doc;
}

Json compare_report(const FamilySpec& lhs, const FamilySpec& rhs) {
    Json doc = header("compare", lhs);
    doc["other_family"] = rhs.name;
    IsogenyComparison cmp = compare_isogeny_invariants(lhs.model, rhs.model);
    Json rows = Json::array();
    for (const auto& item : cmp.items)
        rows.push_back(Json{{"invariant", item.name},
                            {"lhs", item.lhs},
                            {"rhs", item.rhs},
                            {"equal", item.equal()}});
    doc["items"] = rows;
    doc["compatible"] = cmp.compatible;
    doc["verdict"] = cmp.verdict;
    doc["note"] = cmp.note;
    return doc;
}

namespace {

void render(const Json& node, const std::string& indent, std::ostream& out) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            if (value.is_object() || value.is_array()) {
                out << indent << key << ":\n";
                render(value, indent + "  ", out);
            } else {
                out << indent << key << ": " << (value.is_string() ? value.get<std::string>()
                                                                   : value.dump())
                    << "\n";
            }
        }
    } else if (node.is_array()) {
        for (const auto& value : node) {
            if (value.is_object() || value.is_array()) {
                out << indent << "-\n";
                render(value, indent + "  ", out);
            } else {
                out << indent << "- "
                    << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
        }
    }
}

} // namespace

std::string render_text(const Json& doc) {
    std::ostringstream out;
    render(doc, "", out);
    return out.str();
}

} // namespace ellsurf
