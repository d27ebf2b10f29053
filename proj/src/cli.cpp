#include "hyperwall/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace hyperwall::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

AmbientVector parse_rho(const std::string& text) {
    std::vector<Integer> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
        coords.push_back(parse_integer(item));
    }
    if (coords.size() != kAmbientRank)
        throw ValidationError("--rho: expected 23 comma-separated integers, got " + std::to_string(coords.size()));
    return AmbientVector::from(coords);
}

}  // namespace

unsigned thread_budget() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HYPERWALL_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
        } catch (const std::exception&) {
            // Unparsable values leave the default in place.
        }
    }
    return n;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wall and ample-cone computations for K3^[2]-type lattices", "hyperwall"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string input_path, targets_spec, rho_text, report_path;
    std::optional<std::string> level_cap_text;

    auto* info = app.add_subcommand("lattice-info", "Rank, signature and determinant of the ambient lattice");
    auto* walls = app.add_subcommand("walls", "Enumerate wall classes");
    walls->add_option("--input", input_path, "Input JSON file")->required();
    walls->add_option("--targets", targets_spec, "Comma-separated square:div pairs, e.g. -2:1,-2:2,-10:2");
    walls->add_option("--level-cap", level_cap_text, "Upper bound on (rho, g)");
    auto* ample = app.add_subcommand("ample", "Numerical ampleness verdict for m");
    ample->add_option("--input", input_path, "Input JSON file")->required();
    auto* nef = app.add_subcommand("nef-threshold", "Largest t with t m + (1 - t) g ample");
    nef->add_option("--input", input_path, "Input JSON file")->required();
    auto* classify = app.add_subcommand("classify", "Classify a wall class by square and divisibility");
    classify->add_option("--input", input_path, "Input JSON file")->required();
    classify->add_option("--rho", rho_text, "23 comma-separated ambient coordinates")->required();
    auto* lagr = app.add_subcommand("lagrangian", "Solve the Lagrangian-plane system");
    auto* again = app.add_subcommand("rerun", "Re-run the command recorded in a JSON report");
    again->add_option("--report", report_path, "Report JSON file")->required();
    for (auto* sub : {info, walls, ample, nef, classify, lagr, again})
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitValidation;
    }

    const unsigned threads = thread_budget();
    try {
        Json report;
        if (info->parsed()) {
            report = report_lattice_info();
        } else if (lagr->parsed()) {
            report = report_lagrangian();
        } else if (again->parsed()) {
            Json doc;
            try {
                doc = Json::parse(read_file(report_path));
            } catch (const Json::parse_error& e) {
                throw ValidationError(std::string("malformed JSON: ") + e.what());
            }
            report = rerun(doc, threads);
        } else {
            InputDocument in = parse_input_text(read_file(input_path));
            if (walls->parsed()) {
                if (!targets_spec.empty()) in.options.targets = parse_targets(targets_spec);
                if (level_cap_text) {
                    in.options.level_cap = parse_integer(*level_cap_text);
                    if (*in.options.level_cap < 0) throw ValidationError("--level-cap must be nonnegative");
                }
                report = report_walls(in, threads);
            } else if (ample->parsed()) {
                report = report_ample(in, threads);
            } else if (nef->parsed()) {
                report = report_nef_threshold(in, threads);
            } else {
                report = report_classify(in, parse_rho(rho_text));
            }
        }
        if (format == "json")
            out << report.dump(2) << "\n";
        else
            out << render_text(report);
        return kExitOk;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << "\n";
        return kExitPrecondition;
    }
}

}  // namespace hyperwall::cli
