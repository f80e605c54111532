#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ellsurf/errors.hpp"
#include "ellsurf/report.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ellsurf::Error("cannot open family file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants, Picard-Fuchs operators, monodromy and inhomogeneous de Rham "
                 "cohomology of elliptic surfaces over Q(t)"};
    app.require_subcommand(1);

    std::string family_path, other_path, json_path;
    double tol = 1e-9;
    long search_bound = 24;

    auto add = [&](const char* name, const char* desc, bool two_files = false) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        cmd->add_option("family-file", family_path, "family description file")->required();
        if (two_files)
            cmd->add_option("other-family-file", other_path, "family to compare against")
                ->required();
        cmd->add_option("--tol", tol, "numeric tolerance for analytic continuation");
        cmd->add_option("--search-bound", search_bound, "total pole degree bound for searches");
        cmd->add_option("--json", json_path, "write the machine-readable report to this path");
        return cmd;
    };
    add("analyze", "fiber types and surface invariants");
    add("picard-fuchs", "the period operator and its singularities");
    add("monodromy", "local monodromy matrices by analytic continuation");
    add("idr", "inhomogeneous de Rham cohomology dimensions and Hodge divisors");
    add("manin", "Manin maps of the declared sections");
    add("compare", "necessary conditions for generic isogeny", true);

    CLI11_PARSE(app, argc, argv);
    std::string command = app.get_subcommands().front()->get_name();

    ellsurf::Json doc;
    try {
        ellsurf::FamilySpec fam = ellsurf::parse_family(slurp(family_path));
        if (command == "analyze") {
            doc = ellsurf::analyze_report(fam);
        } else if (command == "picard-fuchs") {
            ellsurf::validate(fam.model);
            doc = ellsurf::picard_fuchs_report(fam);
        } else if (command == "monodromy") {
            ellsurf::validate(fam.model);
            doc = ellsurf::monodromy_report(fam, tol);
        } else if (command == "idr") {
            doc = ellsurf::idr_report(fam, search_bound);
        } else if (command == "manin") {
            ellsurf::validate(fam.model);
            doc = ellsurf::manin_report(fam);
        } else if (command == "compare") {
            ellsurf::FamilySpec other = ellsurf::parse_family(slurp(other_path));
            ellsurf::validate(fam.model);
            ellsurf::validate(other.model);
            doc = ellsurf::compare_report(fam, other);
        }
    } catch (const ellsurf::ParseError& e) {
        std::cerr << "parse error at line " << e.line << ", column " << e.column << ": "
                  << e.what() << "\n";
        return 2;
    } catch (const ellsurf::Isotrivial& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return 2;
    } catch (const ellsurf::SingularModel& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return 2;
    } catch (const ellsurf::SectionNotOnCurve& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return 2;
    } catch (const ellsurf::ToleranceNotMet& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const ellsurf::StepUnderflow& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const ellsurf::SearchExhausted& e) {
        std::cerr << "search exhausted: " << e.what() << "\n";
        return 4;
    } catch (const ellsurf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::cout << ellsurf::render_text(doc);
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        out << doc.dump(2) << "\n";
        if (!out) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return 1;
        }
    }
    return 0;
}
