#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperwall/cohomology.hpp"
#include "hyperwall/cone.hpp"
#include "hyperwall/enumeration.hpp"
#include "hyperwall/report.hpp"

namespace py = pybind11;
using namespace hyperwall;

namespace {

py::object to_py(const Integer& z) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& q) {
    const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(q.get_num()), to_py(q.get_den()));
}

Integer integer_of(py::handle h) {
    if (!py::isinstance<py::int_>(h)) throw py::type_error("expected an int");
    return Integer(py::str(h).cast<std::string>());
}

Rational rational_of(py::handle h) {
    if (py::isinstance<py::int_>(h)) return Rational(integer_of(h));
    if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator"))
        return ratio(integer_of(h.attr("numerator")), integer_of(h.attr("denominator")));
    throw py::type_error("expected an int or fractions.Fraction");
}

std::vector<Integer> integers_of(const py::sequence& seq) {
    std::vector<Integer> out;
    out.reserve(seq.size());
    for (auto item : seq) out.push_back(integer_of(item));
    return out;
}

AmbientVector ambient_of(const py::sequence& seq) { return AmbientVector::from(integers_of(seq)); }

py::list list_of(std::span<const Integer> values) {
    py::list out;
    for (const auto& v : values) out.append(to_py(v));
    return out;
}

PicardLattice picard_of(const py::sequence& basis) {
    std::vector<AmbientVector> vs;
    for (auto row : basis) vs.push_back(ambient_of(row.cast<py::sequence>()));
    return PicardLattice(std::move(vs));
}

py::dict wall_dict(const WallClass& w) {
    py::dict d;
    d["picard"] = list_of(w.rho_picard);
    d["ambient"] = list_of(w.rho_ambient.coords);
    d["square"] = to_py(w.square);
    d["div"] = to_py(w.div);
    return d;
}

py::list walls_list(const std::vector<WallClass>& walls) {
    py::list out;
    for (const auto& w : walls) out.append(wall_dict(w));
    return out;
}

std::vector<WallTarget> targets_of(const py::object& obj) {
    if (obj.is_none()) return default_targets();
    std::vector<WallTarget> out;
    for (auto item : obj.cast<py::sequence>()) {
        auto pair = item.cast<py::sequence>();
        if (pair.size() != 2) throw ValidationError("targets must be (square, div) pairs");
        out.push_back({integer_of(pair[0]), integer_of(pair[1])});
    }
    return out;
}

WallQuery query_of(const PicardLattice& pic, const py::sequence& g, const py::object& m, const py::object& targets,
                   const py::object& level_cap, bool strict) {
    WallQuery q;
    q.picard = &pic;
    q.g = integers_of(g);
    if (!m.is_none()) q.m = integers_of(m.cast<py::sequence>());
    q.targets = targets_of(targets);
    if (!level_cap.is_none()) q.level_cap = integer_of(level_cap);
    q.strict = strict;
    return q;
}

py::object json_to_py(const Json& j) {
    const py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

Json py_to_json(const py::object& obj) {
    const py::object dumps = py::module_::import("json").attr("dumps");
    return Json::parse(dumps(obj).cast<std::string>());
}

RatMatrix matrix_of(const py::sequence& rows) {
    const std::size_t n = rows.size();
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = rows[i].cast<py::sequence>();
        if (row.size() != n) throw ValidationError("matrix must be square");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rational_of(row[j]);
    }
    return m;
}

py::tuple curve_tuple(const CurveClass& c) {
    return py::make_tuple(list_of(c.numerator.coords), to_py(c.denominator), to_py(c.square()));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact wall enumeration and ample-cone tests for K3^[2]-type lattices";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ArithmeticError);

    m.attr("AMBIENT_RANK") = kAmbientRank;

    // lattice_core
    m.def("basis_labels", [] { return k3_2_lattice().basis_labels; });
    m.def("ambient_gram", [] {
        const IntMatrix& g = k3_2_lattice().gram;
        py::list rows;
        for (std::size_t i = 0; i < g.rows(); ++i) {
            py::list row;
            for (std::size_t j = 0; j < g.cols(); ++j) row.append(to_py(g(i, j)));
            rows.append(row);
        }
        return rows;
    });
    m.def("bb_pair", [](const py::sequence& a, const py::sequence& b) { return to_py(bb_pair(ambient_of(a), ambient_of(b))); },
          py::arg("a"), py::arg("b"));
    m.def("divisibility", [](const py::sequence& v) { return to_py(divisibility(ambient_of(v))); }, py::arg("v"));
    m.def("dual_class", [](const py::sequence& rho) { return curve_tuple(dual_class(ambient_of(rho))); },
          py::arg("rho"), "Returns (numerator, denominator, square).");
    m.def("admissible_square_div",
          [](const py::int_& square, const py::int_& div) { return admissible_square_div(integer_of(square), integer_of(div)); },
          py::arg("square"), py::arg("div"));
    m.def("signature_of", [](const py::sequence& gram) {
        const Inertia s = signature_of(matrix_of(gram));
        return py::make_tuple(s.positive, s.negative, s.zero);
    }, py::arg("gram"));
    m.def("picard_gram", [](const py::sequence& basis) {
        const PicardLattice pic = picard_of(basis);
        py::list rows;
        for (std::size_t i = 0; i < pic.rank(); ++i) {
            py::list row;
            for (std::size_t j = 0; j < pic.rank(); ++j) row.append(to_py(pic.gram()(i, j)));
            rows.append(row);
        }
        return rows;
    }, py::arg("basis"));

    // enumeration
    m.def("enumerate_walls",
          [](const py::sequence& basis, const py::sequence& g, const py::object& mm, const py::object& targets,
             const py::object& level_cap, bool strict, unsigned threads) {
              const PicardLattice pic = picard_of(basis);
              WallQuery q = query_of(pic, g, mm, targets, level_cap, strict);
              q.threads = threads;
              return walls_list(enumerate_walls(q));
          },
          py::arg("basis"), py::arg("g"), py::arg("m") = py::none(), py::arg("targets") = py::none(),
          py::arg("level_cap") = py::none(), py::arg("strict") = false, py::arg("threads") = 1);
    m.def("brute_force_walls",
          [](const py::sequence& basis, const py::sequence& g, long box, const py::object& mm, const py::object& targets,
             const py::object& level_cap, bool strict) {
              const PicardLattice pic = picard_of(basis);
              return walls_list(brute_force_walls(query_of(pic, g, mm, targets, level_cap, strict), box));
          },
          py::arg("basis"), py::arg("g"), py::arg("box"), py::arg("m") = py::none(), py::arg("targets") = py::none(),
          py::arg("level_cap") = py::none(), py::arg("strict") = false);
    m.def("slice_solutions",
          [](const py::sequence& basis, const py::sequence& g, const py::int_& level, const py::int_& square) {
              const PicardLattice pic = picard_of(basis);
              py::list out;
              for (const auto& x : slice_solutions(pic, integers_of(g), integer_of(level), integer_of(square)))
                  out.append(list_of(x));
              return out;
          },
          py::arg("basis"), py::arg("g"), py::arg("level"), py::arg("square"));

    // cone_analysis
    m.def("is_ample", [](const py::sequence& basis, const py::sequence& g, const py::sequence& mm) {
        const PicardLattice pic = picard_of(basis);
        const AmpleVerdict v = is_ample(pic, integers_of(g), integers_of(mm));
        py::dict d;
        d["status"] = std::string(to_string(v.status));
        d["witnesses"] = walls_list(v.witnesses);
        d["isotropic_flag"] = v.isotropic_flag;
        return d;
    }, py::arg("basis"), py::arg("g"), py::arg("m"));
    m.def("nef_threshold", [](const py::sequence& basis, const py::sequence& g, const py::sequence& mm) {
        const PicardLattice pic = picard_of(basis);
        const NefThreshold t = nef_threshold(pic, integers_of(g), integers_of(mm));
        return py::make_tuple(to_py(t.tau), walls_list(t.walls));
    }, py::arg("basis"), py::arg("g"), py::arg("m"));
    auto ray_dict = [](const RayType& t) {
        py::dict d;
        d["kind"] = std::string(to_string(t.kind));
        d["square"] = to_py(t.square);
        d["div"] = to_py(t.div);
        d["dual_square"] = to_py(t.dual_square);
        d["dc_values"] = t.dc_values;
        return d;
    };
    m.def("classify_wall", [ray_dict](const py::sequence& rho) { return ray_dict(classify_wall(ambient_of(rho))); },
          py::arg("rho"));
    m.def("classify_square_div", [ray_dict](const py::int_& square, const py::int_& div) {
        return ray_dict(classify_square_div(integer_of(square), integer_of(div)));
    }, py::arg("square"), py::arg("div"));
    m.def("detect_isotropic_boundary", [](const py::sequence& basis, const py::sequence& mm) {
        return detect_isotropic_boundary(picard_of(basis), integers_of(mm));
    }, py::arg("basis"), py::arg("m"));

    // cohomology_ring
    m.def("quad_product", [](const py::sequence& a, const py::sequence& b, const py::sequence& c, const py::sequence& d) {
        return to_py(quad_product(ambient_of(a), ambient_of(b), ambient_of(c), ambient_of(d)));
    });
    m.def("middle_pair",
          [](const py::sequence& basis, const py::sequence& x_tensor, const py::object& x_qdual,
             const py::sequence& y_tensor, const py::object& y_qdual) {
              std::vector<AmbientVector> vs;
              for (auto row : basis) vs.push_back(ambient_of(row.cast<py::sequence>()));
              const MiddleClass x(vs, matrix_of(x_tensor), rational_of(x_qdual));
              const MiddleClass y(vs, matrix_of(y_tensor), rational_of(y_qdual));
              return to_py(middle_pair(x, y));
          },
          py::arg("basis"), py::arg("x_tensor"), py::arg("x_qdual"), py::arg("y_tensor"), py::arg("y_qdual"));
    m.def("c2_pair", [](const py::sequence& a, const py::sequence& b) { return to_py(c2_pair(ambient_of(a), ambient_of(b))); });
    m.def("fujiki_check", [](const py::sequence& a) { return fujiki_check(ambient_of(a)); });
    m.def("lagrangian_solver", [] {
        const LagrangianSystem sys = lagrangian_solver();
        py::dict d;
        d["eliminant"] = sys.eliminant_string();
        d["coefficients"] = list_of(sys.eliminant);
        py::list sols;
        for (const auto& s : sys.solutions) {
            py::dict e;
            e["lambda_square"] = to_py(s.lambda_square);
            e["a"] = to_py(s.a);
            e["b"] = to_py(s.b);
            e["admissible"] = s.admissible;
            sols.append(e);
        }
        d["solutions"] = sols;
        return d;
    });
    m.def("line_class_of_plane", [](const py::sequence& lambda) { return curve_tuple(line_class_of_plane(ambient_of(lambda))); },
          py::arg("lam"));

    // cli reports
    m.def("report", [](const std::string& command, const py::object& input, const py::object& rho) {
        if (command == "lattice-info") return json_to_py(report_lattice_info());
        if (command == "lagrangian") return json_to_py(report_lagrangian());
        const InputDocument in = parse_input(py_to_json(input));
        if (command == "walls") return json_to_py(report_walls(in));
        if (command == "ample") return json_to_py(report_ample(in));
        if (command == "nef-threshold") return json_to_py(report_nef_threshold(in));
        if (command == "classify") return json_to_py(report_classify(in, ambient_of(rho.cast<py::sequence>())));
        throw ValidationError("unknown command '" + command + "'");
    }, py::arg("command"), py::arg("input") = py::none(), py::arg("rho") = py::none());
    m.def("rerun", [](const py::object& report) { return json_to_py(rerun(py_to_json(report))); }, py::arg("report"));

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
