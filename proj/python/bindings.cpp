#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ramicalc/endo_class.hpp"
#include "ramicalc/error.hpp"
#include "ramicalc/galois.hpp"
#include "ramicalc/herbrand.hpp"
#include "ramicalc/io.hpp"
#include "ramicalc/svg_plot.hpp"

namespace py = pybind11;
using namespace ramicalc;

// Rational <-> fractions.Fraction. Python ints and "a/b" strings are also
// accepted; floats are refused so nothing inexact slips in.
namespace pybind11::detail {

template <>
struct type_caster<Rational> {
    PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool)
    {
        if (!src || PyFloat_Check(src.ptr())) {
            return false;
        }
        try {
            if (PyLong_Check(src.ptr()) && !PyBool_Check(src.ptr())) {
                value = Rational::parse(py::str(src).cast<std::string>());
                return true;
            }
            if (PyUnicode_Check(src.ptr())) {
                value = Rational::parse(src.cast<std::string>());
                return true;
            }
            static const auto fraction = py::module_::import("fractions").attr("Fraction");
            if (py::isinstance(src, fraction)) {
                value = Rational::parse(py::str(src.attr("numerator")).cast<std::string>() + "/"
                                        + py::str(src.attr("denominator")).cast<std::string>());
                return true;
            }
        } catch (const ParseError&) {
            return false;
        }
        return false;
    }

    static handle cast(const Rational& r, return_value_policy, handle)
    {
        static const auto fraction = py::module_::import("fractions").attr("Fraction");
        const py::int_ num = py::reinterpret_steal<py::int_>(
            PyLong_FromString(r.numerator().get_str().c_str(), nullptr, 10));
        const py::int_ den = py::reinterpret_steal<py::int_>(
            PyLong_FromString(r.denominator().get_str().c_str(), nullptr, 10));
        return fraction(num, den).release();
    }
};

}  // namespace pybind11::detail

namespace {

std::vector<py::tuple> breakpoint_tuples(const PLFunction& f)
{
    std::vector<py::tuple> out;
    for (const auto& b : f.breakpoints()) {
        out.push_back(py::make_tuple(py::cast(b.x), py::cast(b.y)));
    }
    return out;
}

PLFunction make_plf(const std::vector<std::pair<Rational, Rational>>& points, const Rational& terminal_slope)
{
    std::vector<Breakpoint> pts;
    for (const auto& [x, y] : points) {
        pts.push_back({x, y});
    }
    return PLFunction(std::move(pts), terminal_slope);
}

UltrametricTable make_table(const std::vector<std::string>& labels, const std::vector<std::vector<Rational>>& dist,
                            bool separating)
{
    return UltrametricTable(labels, dist, separating);
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact piecewise-linear ramification functions";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<NotInvertibleError>(m, "NotInvertibleError", base.ptr());
    py::register_exception<InconsistentDataError>(m, "InconsistentDataError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());

    py::class_<PLFunction>(m, "PLFunction")
        .def(py::init(&make_plf), py::arg("breakpoints"), py::arg("terminal_slope"))
        .def_static("identity", &PLFunction::identity, py::arg("start") = Rational(0))
        .def_property_readonly("breakpoints", &breakpoint_tuples)
        .def_property_readonly("terminal_slope", &PLFunction::terminal_slope)
        .def_property_readonly("domain_start", &PLFunction::domain_start)
        .def("slopes", &PLFunction::slopes)
        .def("slope_right", &PLFunction::slope_right)
        .def("slope_left", &PLFunction::slope_left)
        .def("__call__", &PLFunction::operator())
        .def(py::self == py::self)
        .def("__repr__", [](const PLFunction& f) {
            std::string s = "PLFunction([";
            for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
                const auto& b = f.breakpoints()[i];
                s += (i ? ", (" : "(") + b.x.str() + ", " + b.y.str() + ")";
            }
            return s + "], " + f.terminal_slope().str() + ")";
        });

    m.def("invert", &invert);
    m.def("compose", &compose, py::arg("f"), py::arg("g"));
    m.def("scale_conj", &scale_conj, py::arg("f"), py::arg("e"));
    m.def("derivative_jumps", [](const PLFunction& f) {
        std::vector<py::tuple> out;
        for (const auto& j : derivative_jumps(f)) {
            out.push_back(py::make_tuple(py::cast(j.x), py::cast(j.left_slope), py::cast(j.right_slope)));
        }
        return out;
    });
    m.def("certify", [](const PLFunction& f) {
        const auto c = certify(f);
        return py::dict(py::arg("convex") = c.convex, py::arg("strictly_increasing") = c.strictly_increasing);
    });
    m.def("agree_from", &agree_from);

    py::class_<GaloisDecomposition>(m, "GaloisDecomposition")
        .def(py::init([](std::int64_t dim, const std::vector<std::pair<std::int64_t, std::int64_t>>& comps) {
                 std::vector<Constituent> cs;
                 for (const auto& [d, s] : comps) {
                     cs.push_back({d, s});
                 }
                 return GaloisDecomposition(dim, std::move(cs));
             }),
             py::arg("dim"), py::arg("components"))
        .def_property_readonly("dim", &GaloisDecomposition::dim)
        .def_property_readonly("components", [](const GaloisDecomposition& d) {
            std::vector<std::pair<std::int64_t, std::int64_t>> out;
            for (const auto& c : d.components()) {
                out.emplace_back(c.dim, c.swan);
            }
            return out;
        })
        .def_static("from_json", [](const std::string& text) {
            return io::decomposition_from_json(nlohmann::json::parse(text));
        });
    m.def("sigma_function", &sigma_function);

    py::class_<TowerLevel>(m, "TowerLevel")
        .def(py::init([](const Rational& jump, std::int64_t d, std::int64_t ex, std::int64_t c) {
                 return TowerLevel{jump, d, ex, c};
             }),
             py::arg("jump"), py::arg("d"), py::arg("ex"), py::arg("c"))
        .def_readonly("jump", &TowerLevel::jump)
        .def_readonly("d", &TowerLevel::d)
        .def_readonly("ex", &TowerLevel::ex)
        .def_readonly("c", &TowerLevel::c);

    py::class_<EndoClassProfile>(m, "EndoClassProfile")
        .def(py::init<std::int64_t, std::int64_t, std::int64_t, std::int64_t, Rational, std::optional<Rational>,
                      std::vector<TowerLevel>>(),
             py::arg("p"), py::arg("deg"), py::arg("e"), py::arg("f"), py::arg("m"), py::arg("k0"), py::arg("tower"))
        .def_static("trivial", &EndoClassProfile::trivial)
        .def_static("from_json", [](const std::string& text) {
            return io::profile_from_json(nlohmann::json::parse(text));
        })
        .def("to_json", [](const EndoClassProfile& p) { return io::to_json(p).dump(); })
        .def_property_readonly("p", &EndoClassProfile::p)
        .def_property_readonly("deg", &EndoClassProfile::deg)
        .def_property_readonly("e", &EndoClassProfile::e)
        .def_property_readonly("f", &EndoClassProfile::f)
        .def_property_readonly("m", &EndoClassProfile::m)
        .def_property_readonly("k0", &EndoClassProfile::k0)
        .def_property_readonly("tower", &EndoClassProfile::tower)
        .def(py::self == py::self);
    m.def("structure_function", &structure_function);
    m.def("minimal_profile", &minimal_profile, py::arg("a"), py::arg("b"), py::arg("p"));
    m.def("tame_lift_structure", &tame_lift_structure, py::arg("profile"), py::arg("e"));

    py::class_<HerbrandBundle>(m, "HerbrandBundle")
        .def(py::init<EndoClassProfile, GaloisDecomposition>(), py::arg("profile"), py::arg("decomposition"))
        .def_property_readonly("phi", &HerbrandBundle::phi)
        .def_property_readonly("sigma", &HerbrandBundle::sigma)
        .def_property_readonly("psi", &HerbrandBundle::psi)
        .def_property_readonly("exceptional_set", &HerbrandBundle::exceptional_set)
        .def("silent_sigma_jumps", &HerbrandBundle::silent_sigma_jumps)
        .def("export", &io::bundle_export);
    m.def("herbrand_function", &herbrand_function, py::arg("phi"), py::arg("sigma"));
    m.def("transfer_radius", &transfer_radius, py::arg("psi"), py::arg("eps"));
    m.def("tame_lift_herbrand", &tame_lift_herbrand, py::arg("psi"), py::arg("e"));

    m.def(
        "interpolate_psi",
        [](const std::vector<std::tuple<std::int64_t, std::int64_t, Rational>>& samples, const Rational& level,
           const std::vector<Rational>& exceptional, const std::optional<PLFunction>& reference) {
            std::vector<TwistSample> ss;
            for (const auto& [e, k, v] : samples) {
                ss.push_back({e, k, v});
            }
            const auto out = interpolate_psi(ss, level, exceptional, reference);
            return py::dict(py::arg("psi") = out.psi, py::arg("issues") = out.issues,
                            py::arg("mismatched") = out.mismatched, py::arg("skipped") = out.skipped);
        },
        py::arg("samples"), py::arg("m"), py::arg("exceptional") = std::vector<Rational>{},
        py::arg("reference") = std::nullopt,
        "Samples are (e, k, value) triples; returns a dict with psi (or None) and the report.");

    m.def(
        "boundary_slopes_check",
        [](const PLFunction& psi, std::int64_t p, std::int64_t r, const Rational& level) {
            return boundary_slopes_check(psi, p, r, level).failures;
        },
        py::arg("psi"), py::arg("p"), py::arg("r"), py::arg("m"), "List of failures; empty when both slopes match.");

    m.def(
        "validate_ultrametric",
        [](const std::vector<std::string>& labels, const std::vector<std::vector<Rational>>& dist, bool separating) {
            const auto rep = validate_ultrametric(make_table(labels, dist, separating));
            std::vector<std::tuple<std::string, std::string, std::string>> tri;
            for (const auto& v : rep.triangle_violations) {
                tri.emplace_back(v.x, v.y, v.z);
            }
            return py::dict(py::arg("triangle_violations") = tri,
                            py::arg("separation_violations") = rep.separation_violations);
        },
        py::arg("labels"), py::arg("dist"), py::arg("separating") = true);

    m.def(
        "ball_transfer_check",
        [](const std::vector<std::string>& labels, const std::vector<std::vector<Rational>>& delta,
           const std::vector<std::vector<Rational>>& a, const std::map<std::string, PLFunction>& psi) {
            const auto rep = ball_transfer_check(make_table(labels, delta, true), make_table(labels, a, true), psi);
            std::vector<py::tuple> out;
            for (const auto& v : rep.violations) {
                out.push_back(py::make_tuple(v.x, v.y, py::cast(v.eps), v.strict));
            }
            return out;
        },
        py::arg("labels"), py::arg("delta"), py::arg("a"), py::arg("psi"));

    m.def("to_csv", &io::to_csv);
    m.def("from_csv", [](const std::string& text) { return io::from_csv(text); });
    m.def("plot_svg", &plot_svg);
}
