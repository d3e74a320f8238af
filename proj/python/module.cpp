// Python bindings over the main operations: series coefficients, oracles,
// identity suites and the relation finder. Exact values cross the boundary as
// strings (or lists of strings for gamma-polynomials), never floats.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eo/genfun.hpp"
#include "eo/map_enum.hpp"
#include "eo/tutte.hpp"
#include "eo/verify.hpp"

namespace py = pybind11;

namespace {

using eo::GammaPoly;
using eo::Rational;

std::vector<std::string> poly_strs(const GammaPoly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(c.str());
    return out;
}

template <class R>
py::dict series_dict(const eo::TruncSeries<R>& s, const std::string& var);

py::object coeff_obj(const Rational& c) { return py::str(c.str()); }
py::object coeff_obj(const eo::QuadExtSqrt5& c) { return py::str(c.str()); }
py::object coeff_obj(const GammaPoly& c) { return py::cast(poly_strs(c)); }

template <class R>
py::dict series_dict(const eo::TruncSeries<R>& s, const std::string& var) {
    py::dict d;
    d["var"] = var;
    d["valuation"] = s.valuation();
    d["order"] = s.order();
    py::list coeffs;
    for (int n = s.valuation(); n < s.order(); ++n) coeffs.append(coeff_obj(s.coef(n)));
    d["coeffs"] = coeffs;
    return d;
}

template <class R>
py::dict bundle_dict(const R& gamma, int order) {
    auto b = eo::build_genfun<R>(gamma, order, eo::BuildParts::Full);
    py::dict d;
    d["t(q)"] = series_dict(b.t_q, "q");
    d["R(q)"] = series_dict(b.R_q, "q");
    d["Ahat(q)"] = series_dict(b.Ahat_q, "q");
    d["S(q)"] = series_dict(b.S_q, "q");
    d["q(t)"] = series_dict(b.q_of_t(), "t");
    d["R(t)"] = series_dict(b.R_of_t(), "t");
    d["Q(t)"] = series_dict(b.Q_of_t(), "t");
    return d;
}

py::dict report_dict(const eo::CaseReport& rep) {
    py::dict d;
    d["case"] = rep.case_n;
    d["gamma"] = rep.gamma_desc;
    py::list checks;
    for (const auto& c : rep.checks) {
        py::dict cd;
        cd["identity_name"] = c.name;
        cd["pass"] = c.pass;
        cd["residual_valuation"] = c.residual_valuation;
        cd["checked_order"] = c.checked_order;
        checks.append(cd);
    }
    d["checks"] = checks;
    d["all_pass"] = rep.all_pass();
    return d;
}

}  // namespace

PYBIND11_MODULE(eo6v, m) {
    m.doc() = "exact series for weighted quartic planar Eulerian orientations";

    m.def(
        "bundle",
        [](const std::string& gamma, int order) -> py::dict {
            if (gamma == "symbolic") return bundle_dict(GammaPoly::gamma(), order);
            if (gamma == "golden-ratio")
                return bundle_dict(eo::QuadExtSqrt5::golden_ratio(), order);
            return bundle_dict(Rational::from_string(gamma), order);
        },
        py::arg("gamma"), py::arg("order"),
        "all seven series at the given weight ('symbolic', 'golden-ratio' or a rational string)");

    m.def(
        "enumerate_eo",
        [](int n, bool allow_slow) { return poly_strs(eo::count_eo_gamma(n, eo::kDefaultVertexCap, allow_slow)); },
        py::arg("n"), py::arg("allow_slow") = false,
        "orientation-weight polynomial from brute-force map enumeration");

    m.def(
        "map_count",
        [](int n, int genus, bool allow_slow) {
            return eo::gen_quartic_maps(n, genus, eo::kDefaultVertexCap, allow_slow).size();
        },
        py::arg("n"), py::arg("genus") = 0, py::arg("allow_slow") = false,
        "number of rooted 4-valent maps of the given genus");

    m.def(
        "tutte_series",
        [](int order) {
            auto slices = eo::iterate_wh(order);
            auto c = eo::c_of_t(slices);
            py::list out;
            for (int k = 0; k <= order; ++k) out.append(poly_strs(eo::omega_to_gamma(c.coef(k))));
            return out;
        },
        py::arg("order"),
        "C(t) from the loop-equation oracle, coefficient-wise rewritten in gamma");

    m.def(
        "verify_case", [](int n, int order) { return report_dict(eo::verify_case(n, order)); },
        py::arg("n"), py::arg("order"), "identity suite for a torsion level (3, 4, 5 or 6)");

    m.def(
        "find_relation",
        [](int n, int order) -> py::dict {
            py::dict d;
            py::list monomials;
            if (n == 6) {
                auto rel = eo::find_relation_case6(order);
                for (size_t i = 0; i < rel.support.size(); ++i) {
                    monomials.append(py::make_tuple(rel.support[i].first, rel.support[i].second,
                                                    rel.coeffs[i].str()));
                }
                d["certified_order"] = rel.certified_order;
            } else if (n == 5) {
                auto rel = eo::find_relation_case5(order);
                for (size_t i = 0; i < rel.support.size(); ++i) {
                    monomials.append(py::make_tuple(rel.support[i].first, rel.support[i].second,
                                                    rel.coeffs[i].str()));
                }
                d["certified_order"] = rel.certified_order;
            } else {
                throw eo::UsageError("relation cases: 5 or 6");
            }
            d["monomials"] = monomials;
            return d;
        },
        py::arg("n"), py::arg("order"), "polynomial relation P(R,S)=0 for case 5 or 6");
}
