#include "hyperwall/report.hpp"

#include "hyperwall/cohomology.hpp"

#include <set>
#include <sstream>

namespace hyperwall {

namespace {

const Integer kJsonSafe = Integer(1) << 53;

Json rational_json(const Rational& q) { return rational_string(q); }

template <typename Range>
Json integer_array(const Range& values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(integer_json(v));
    return arr;
}

std::vector<Integer> integer_list(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ValidationError(where + ": expected an array of integers");
    std::vector<Integer> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

void reject_unknown(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& item : obj.items())
        if (!allowed.contains(item.key())) throw ValidationError(where + ": unknown field '" + item.key() + "'");
}

Json targets_json(const std::vector<WallTarget>& targets) {
    Json arr = Json::array();
    for (const auto& t : targets) arr.push_back(Json::array({integer_json(t.square), integer_json(t.div)}));
    return arr;
}

PicardLattice lattice_of(const InputDocument& in) { return PicardLattice(in.picard_basis); }

Json wall_json(const PicardLattice& pic, const WallClass& w, const PicardVector& g, const std::optional<PicardVector>& m) {
    const RayType type = classify_square_div(w.square, w.div);
    Json j;
    j["picard"] = integer_array(w.rho_picard);
    j["ambient"] = integer_array(w.rho_ambient.coords);
    j["square"] = integer_json(w.square);
    j["div"] = integer_json(w.div);
    j["dual_square"] = rational_json(type.dual_square);
    j["kind"] = std::string(to_string(type.kind));
    j["pairing_g"] = integer_json(pic.pair(w.rho_picard, g));
    if (m) j["pairing_m"] = integer_json(pic.pair(w.rho_picard, *m));
    return j;
}

Json walls_json(const PicardLattice& pic, const std::vector<WallClass>& walls, const PicardVector& g,
                const std::optional<PicardVector>& m) {
    Json arr = Json::array();
    for (const auto& w : walls) arr.push_back(wall_json(pic, w, g, m));
    return arr;
}

const PicardVector& require_m(const InputDocument& in, const char* command) {
    if (!in.m) throw ValidationError(std::string(command) + ": input field 'm' is required");
    return *in.m;
}

std::string join_integers(const Json& arr) {
    std::string s;
    for (const auto& v : arr) {
        if (!s.empty()) s += ",";
        s += v.is_string() ? v.get<std::string>() : v.dump();
    }
    return s;
}

}  // namespace

Json integer_json(const Integer& z) {
    if (abs(z) <= kJsonSafe) return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

Integer integer_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
        return Integer(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        try {
            return parse_integer(j.get<std::string>());
        } catch (const ValidationError&) {
            throw ValidationError(where + ": '" + j.get<std::string>() + "' is not a decimal integer");
        }
    }
    if (j.is_number_float())
        throw ValidationError(where + ": expected an integer (write integers beyond 64 bits as decimal strings)");
    throw ValidationError(where + ": expected an integer");
}

std::vector<WallTarget> parse_targets(const std::string& spec) {
    std::vector<WallTarget> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw ValidationError("target '" + item + "' is not of the form square:div");
        WallTarget t{parse_integer(item.substr(0, colon)), parse_integer(item.substr(colon + 1))};
        if (t.div != 1 && t.div != 2) throw ValidationError("target '" + item + "': divisibility must be 1 or 2");
        if (t.square >= 0) throw ValidationError("target '" + item + "': square must be negative");
        out.push_back(t);
    }
    if (out.empty()) throw ValidationError("empty target list");
    return out;
}

InputDocument parse_input(const Json& doc) {
    if (!doc.is_object()) throw ValidationError("input: expected a JSON object");
    reject_unknown(doc, {"picard_basis", "g", "m", "options"}, "input");
    InputDocument in;

    if (!doc.contains("picard_basis")) throw ValidationError("input: missing field 'picard_basis'");
    const Json& basis = doc["picard_basis"];
    if (!basis.is_array() || basis.empty()) throw ValidationError("picard_basis: expected a non-empty array");
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const std::string where = "picard_basis[" + std::to_string(i) + "]";
        const auto coords = integer_list(basis[i], where);
        if (coords.size() != kAmbientRank)
            throw ValidationError(where + ": expected 23 coordinates, got " + std::to_string(coords.size()));
        in.picard_basis.push_back(AmbientVector::from(coords));
    }
    const std::size_t r = in.picard_basis.size();

    if (!doc.contains("g")) throw ValidationError("input: missing field 'g'");
    in.g = integer_list(doc["g"], "g");
    if (in.g.size() != r)
        throw ValidationError("g: expected " + std::to_string(r) + " Picard coordinates, got " + std::to_string(in.g.size()));
    if (doc.contains("m")) {
        in.m = integer_list(doc["m"], "m");
        if (in.m->size() != r)
            throw ValidationError("m: expected " + std::to_string(r) + " Picard coordinates, got " +
                                  std::to_string(in.m->size()));
    }
    if (doc.contains("options")) {
        const Json& opt = doc["options"];
        if (!opt.is_object()) throw ValidationError("options: expected an object");
        reject_unknown(opt, {"targets", "level_cap"}, "options");
        if (opt.contains("targets")) {
            const Json& t = opt["targets"];
            if (t.is_string()) {
                in.options.targets = parse_targets(t.get<std::string>());
            } else if (t.is_array()) {
                std::vector<WallTarget> targets;
                for (std::size_t i = 0; i < t.size(); ++i) {
                    const auto pair = integer_list(t[i], "options.targets[" + std::to_string(i) + "]");
                    if (pair.size() != 2)
                        throw ValidationError("options.targets[" + std::to_string(i) + "]: expected [square, div]");
                    targets.push_back({pair[0], pair[1]});
                }
                in.options.targets = std::move(targets);
            } else {
                throw ValidationError("options.targets: expected an array of [square, div] or a string");
            }
        }
        if (opt.contains("level_cap")) {
            in.options.level_cap = integer_from_json(opt["level_cap"], "options.level_cap");
            if (*in.options.level_cap < 0) throw ValidationError("options.level_cap: must be nonnegative");
        }
    }
    // Independence check with a readable message.
    try {
        PicardLattice check(in.picard_basis);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("picard_basis: ") + e.what());
    }
    return in;
}

InputDocument parse_input_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    return parse_input(doc);
}

Json to_json(const InputDocument& in) {
    Json j;
    Json basis = Json::array();
    for (const auto& v : in.picard_basis) basis.push_back(integer_array(v.coords));
    j["picard_basis"] = std::move(basis);
    j["g"] = integer_array(in.g);
    if (in.m) j["m"] = integer_array(*in.m);
    Json opt = Json::object();
    if (in.options.targets) opt["targets"] = targets_json(*in.options.targets);
    if (in.options.level_cap) opt["level_cap"] = integer_json(*in.options.level_cap);
    if (!opt.empty()) j["options"] = std::move(opt);
    return j;
}

Json report_lattice_info() {
    const AmbientLattice& lat = k3_2_lattice();
    const Inertia s = signature_of(lat.gram);
    Json r;
    r["command"] = "lattice-info";
    Json res;
    res["rank"] = lat.rank();
    res["signature"] = Json::array({s.positive, s.negative});
    res["determinant"] = integer_json(determinant(lat.gram));
    res["basis_labels"] = lat.basis_labels;
    r["result"] = std::move(res);
    return r;
}

Json report_walls(const InputDocument& in, unsigned threads) {
    const PicardLattice pic = lattice_of(in);
    WallQuery q;
    q.picard = &pic;
    q.g = in.g;
    q.m = in.m;
    if (in.options.targets) q.targets = *in.options.targets;
    q.level_cap = in.options.level_cap;
    q.threads = threads;
    const auto walls = enumerate_walls(q);

    Json r;
    r["command"] = "walls";
    r["input"] = to_json(in);
    Json res;
    res["targets"] = targets_json(q.targets);
    Json bounds = Json::array();
    std::set<Integer> squares;
    for (const auto& t : q.targets) squares.insert(t.square);
    for (const auto& s : squares) bounds.push_back(Json::array({integer_json(s), integer_json(max_level(q, s))}));
    res["level_bounds"] = std::move(bounds);
    res["count"] = walls.size();
    res["walls"] = walls_json(pic, walls, in.g, in.m);
    r["result"] = std::move(res);
    return r;
}

Json report_ample(const InputDocument& in, unsigned threads) {
    const PicardLattice pic = lattice_of(in);
    const PicardVector& m = require_m(in, "ample");
    const AmpleVerdict v = is_ample(pic, in.g, m, threads);

    Json r;
    r["command"] = "ample";
    r["input"] = to_json(in);
    Json res;
    res["status"] = std::string(to_string(v.status));
    // Positivity on every wall implies ampleness, and a class of negative
    // square is never ample; the remaining verdicts are predictions.
    const bool proven = v.status == AmpleStatus::ample || v.status == AmpleStatus::not_positive;
    res["basis"] = proven ? "proven" : "predicted";
    res["square"] = integer_json(pic.pair(m, m));
    res["pairing_g"] = integer_json(pic.pair(m, in.g));
    res["isotropic_flag"] = v.isotropic_flag;
    res["isotropic_primitive"] = detect_isotropic_boundary(pic, m);
    res["witnesses"] = walls_json(pic, v.witnesses, in.g, m);
    r["result"] = std::move(res);
    return r;
}

Json report_nef_threshold(const InputDocument& in, unsigned threads) {
    const PicardLattice pic = lattice_of(in);
    const PicardVector& m = require_m(in, "nef-threshold");
    const NefThreshold t = nef_threshold(pic, in.g, m, threads);

    Json r;
    r["command"] = "nef-threshold";
    r["input"] = to_json(in);
    Json res;
    res["tau"] = rational_json(t.tau);
    // tau M + (1 - tau) g scaled to a primitive integral class.
    PicardVector boundary(pic.rank());
    const Integer p = t.tau.get_num(), q = t.tau.get_den();
    for (std::size_t i = 0; i < boundary.size(); ++i) boundary[i] = p * m[i] + (q - p) * in.g[i];
    const Integer c = content(boundary);
    if (c != 0)
        for (auto& b : boundary) b /= c;
    res["boundary_class"] = integer_array(boundary);
    res["walls"] = walls_json(pic, t.walls, in.g, m);
    r["result"] = std::move(res);
    return r;
}

Json report_classify(const InputDocument& in, const AmbientVector& rho) {
    const PicardLattice pic = lattice_of(in);
    const RayType type = classify_wall(rho);

    Json r;
    r["command"] = "classify";
    r["input"] = to_json(in);
    r["rho"] = integer_array(rho.coords);
    Json res;
    res["square"] = integer_json(type.square);
    res["div"] = integer_json(type.div);
    res["kind"] = std::string(to_string(type.kind));
    res["dual_square"] = rational_json(type.dual_square);
    res["dc_values"] = type.dc_values;
    const auto coords = pic.coordinates_of(rho);
    if (coords) {
        res["picard"] = integer_array(*coords);
        res["pairing_g"] = integer_json(pic.pair(*coords, in.g));
    } else {
        res["picard"] = nullptr;
        res["pairing_g"] = nullptr;
    }
    r["result"] = std::move(res);
    return r;
}

Json report_lagrangian() {
    const LagrangianSystem sys = lagrangian_solver();
    Json r;
    r["command"] = "lagrangian";
    Json res;
    res["eliminant"] = sys.eliminant_string();
    res["coefficients"] = integer_array(sys.eliminant);
    Json roots = Json::array();
    Json sols = Json::array();
    for (const auto& s : sys.solutions) {
        roots.push_back(rational_json(s.lambda_square));
        Json j;
        j["lambda_square"] = rational_json(s.lambda_square);
        j["a"] = rational_json(s.a);
        j["b"] = rational_json(s.b);
        j["admissible"] = s.admissible;
        Json resid = Json::array();
        for (const auto& e : plane_equation_residuals(s.lambda_square, s.a, s.b)) resid.push_back(rational_json(e));
        j["residuals"] = std::move(resid);
        if (s.admissible) j["line_square"] = rational_json(s.lambda_square / 4);
        sols.push_back(std::move(j));
    }
    res["roots"] = std::move(roots);
    res["solutions"] = std::move(sols);
    r["result"] = std::move(res);
    return r;
}

Json rerun(const Json& report, unsigned threads) {
    if (!report.is_object() || !report.contains("command") || !report["command"].is_string())
        throw ValidationError("report: missing 'command'");
    const std::string cmd = report["command"].get<std::string>();
    if (cmd == "lattice-info") return report_lattice_info();
    if (cmd == "lagrangian") return report_lagrangian();
    if (!report.contains("input")) throw ValidationError("report: missing 'input'");
    const InputDocument in = parse_input(report["input"]);
    if (cmd == "walls") return report_walls(in, threads);
    if (cmd == "ample") return report_ample(in, threads);
    if (cmd == "nef-threshold") return report_nef_threshold(in, threads);
    if (cmd == "classify") {
        if (!report.contains("rho")) throw ValidationError("report: missing 'rho'");
        const auto rho = integer_list(report["rho"], "rho");
        if (rho.size() != kAmbientRank) throw ValidationError("rho: expected 23 coordinates");
        return report_classify(in, AmbientVector::from(rho));
    }
    throw ValidationError("report: unknown command '" + cmd + "'");
}

std::string render_text(const Json& report) {
    std::ostringstream os;
    const std::string cmd = report.at("command").get<std::string>();
    const Json& res = report.at("result");
    auto wall_lines = [&](const Json& walls) {
        for (const auto& w : walls) {
            os << "  rho = (" << join_integers(w["picard"]) << ")  square " << w["square"].dump() << "  div "
               << w["div"].dump() << "  (R,R) = " << w["dual_square"].get<std::string>() << "  "
               << w["kind"].get<std::string>() << "  (rho,g) = " << w["pairing_g"].dump();
            if (w.contains("pairing_m")) os << "  (rho,M) = " << w["pairing_m"].dump();
            os << "\n    ambient (" << join_integers(w["ambient"]) << ")\n";
        }
    };

    if (cmd == "lattice-info") {
        os << "lattice U^3 + (-E8)^2 + (-2)\n"
           << "rank: " << res["rank"].dump() << "\n"
           << "signature: (" << res["signature"][0].dump() << ", " << res["signature"][1].dump() << ")\n"
           << "determinant: " << res["determinant"].dump() << "\n"
           << "basis:";
        for (const auto& l : res["basis_labels"]) os << " " << l.get<std::string>();
        os << "\n";
    } else if (cmd == "walls") {
        os << "walls: " << res["count"].dump() << "\n";
        for (const auto& b : res["level_bounds"])
            os << "  square " << b[0].dump() << ": levels (rho,g) in [1, " << b[1].dump() << "]\n";
        wall_lines(res["walls"]);
    } else if (cmd == "ample") {
        os << "status: " << res["status"].get<std::string>() << " (" << res["basis"].get<std::string>() << ")\n"
           << "(M,M) = " << res["square"].dump() << ", (M,g) = " << res["pairing_g"].dump() << "\n";
        if (res["isotropic_flag"].get<bool>()) os << "isotropic boundary class: yes\n";
        if (!res["witnesses"].empty()) {
            os << "witnesses:\n";
            wall_lines(res["witnesses"]);
        }
    } else if (cmd == "nef-threshold") {
        os << "tau = " << res["tau"].get<std::string>() << "\n"
           << "boundary class: (" << join_integers(res["boundary_class"]) << ")\n";
        if (!res["walls"].empty()) {
            os << "walls at tau:\n";
            wall_lines(res["walls"]);
        }
    } else if (cmd == "classify") {
        os << "square " << res["square"].dump() << ", div " << res["div"].dump() << "\n"
           << "kind: " << res["kind"].get<std::string>() << "\n"
           << "(R,R) = " << res["dual_square"].get<std::string>() << "\n";
        if (!res["dc_values"].empty()) os << "D.C in {" << join_integers(res["dc_values"]) << "}\n";
        if (!res["picard"].is_null())
            os << "picard: (" << join_integers(res["picard"]) << "), (rho,g) = " << res["pairing_g"].dump() << "\n";
        else
            os << "not in the Picard lattice\n";
    } else if (cmd == "lagrangian") {
        os << "eliminant: " << res["eliminant"].get<std::string>() << "\n";
        for (const auto& s : res["solutions"]) {
            os << "  x = " << s["lambda_square"].get<std::string>() << "  a = " << s["a"].get<std::string>()
               << "  b = " << s["b"].get<std::string>() << "  " << (s["admissible"].get<bool>() ? "admissible" : "rejected");
            if (s.contains("line_square")) os << "  (L,L) = " << s["line_square"].get<std::string>();
            os << "\n";
        }
    } else {
        os << report.dump(2) << "\n";
    }
    return os.str();
}

}  // namespace hyperwall
