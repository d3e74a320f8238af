// eo6v: exact generating-function toolkit for quartic planar Eulerian
// orientations (six-vertex model on random lattices).
//
// Subcommands:
//   coeffs     print exact series coefficients (symbolic or fixed weight)
//   verify     run the identity/ODE verification suites
//   enumerate  brute-force map enumeration with orientation weights
//   relation   discover the polynomial relation P(R,S) = 0
//   oracle     cross-check the loop-equation and brute-force oracles
//
// Exit codes: 0 all good, 1 verification mismatch, 2 usage error,
// 3 internal consistency failure.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "eo/genfun.hpp"
#include "eo/json_io.hpp"
#include "eo/map_enum.hpp"
#include "eo/tutte.hpp"
#include "eo/verify.hpp"

namespace {

using eo::Rational;
using nlohmann::json;

enum class GammaMode { Symbolic, Value, GoldenRatio };

struct GammaChoice {
    GammaMode mode = GammaMode::Symbolic;
    Rational value;
};

GammaChoice parse_gamma(const std::string& s) {
    GammaChoice g;
    if (s == "symbolic") {
        g.mode = GammaMode::Symbolic;
    } else if (s == "golden-ratio") {
        g.mode = GammaMode::GoldenRatio;
    } else {
        g.mode = GammaMode::Value;
        g.value = Rational::from_string(s);
        if (g.value == Rational(-2))
            throw eo::UsageError("gamma = -2 is outside the parametrization");
    }
    return g;
}

void enforce_order_cap(int order) {
    if (order < 2) throw eo::UsageError("order must be at least 2");
    if (const char* cap = std::getenv("EO_THETA_MAX_ORDER")) {
        long lim = std::strtol(cap, nullptr, 10);
        if (lim > 0 && order > lim)
            throw eo::UsageError("order " + std::to_string(order) +
                                 " exceeds EO_THETA_MAX_ORDER=" + std::to_string(lim));
    }
}

struct SeriesSelector {
    std::string canonical;
    std::string var;
    bool needs_t_side;
};

SeriesSelector parse_selector(const std::string& name) {
    if (name == "t(q)" || name == "t") return {"t(q)", "q", false};
    if (name == "R(q)") return {"R(q)", "q", false};
    if (name == "Ahat(q)" || name == "Ahat") return {"Ahat(q)", "q", false};
    if (name == "S(q)" || name == "S") return {"S(q)", "q", false};
    if (name == "q(t)") return {"q(t)", "t", true};
    if (name == "R(t)") return {"R(t)", "t", true};
    if (name == "Q(t)" || name == "Q") return {"Q(t)", "t", true};
    throw eo::UsageError("unknown series selector: " + name +
                         " (expected one of t(q), R(q), q(t), R(t), Q(t), Ahat(q), S(q))");
}

template <class R>
const eo::TruncSeries<R>& pick_series(const eo::GenFunBundle<R>& b, const std::string& name) {
    if (name == "t(q)") return b.t_q;
    if (name == "R(q)") return b.R_q;
    if (name == "Ahat(q)") return b.Ahat_q;
    if (name == "S(q)") return b.S_q;
    if (name == "q(t)") return b.q_of_t();
    if (name == "R(t)") return b.R_of_t();
    return b.Q_of_t();
}

template <class R>
int emit_coeffs(const R& gamma, const SeriesSelector& sel, int order, const std::string& fmt,
                const std::string& gamma_desc) {
    auto parts = sel.needs_t_side ? eo::BuildParts::Full : eo::BuildParts::QSideOnly;
    auto bundle = eo::build_genfun<R>(gamma, order + 2, parts);
    auto picked = pick_series(bundle, sel.canonical).truncated(order);
    // the emitted table always starts at exponent 0 (or at the pole order for
    // Laurent series), so zero rows below the valuation are explicit
    int lo = std::min(0, picked.valuation());
    std::vector<R> padded;
    for (int n = lo; n < picked.order(); ++n) padded.push_back(picked.coef(n));
    eo::TruncSeries<R> series(lo, picked.order(), std::move(padded));
    if (fmt == "json") {
        json j = eo::series_to_json(series, sel.var);
        j["schema"] = 1;
        j["series"] = sel.canonical;
        j["gamma"] = gamma_desc;
        std::cout << j.dump(2) << "\n";
    } else if (fmt == "csv") {
        std::cout << "exponent,coefficient\n";
        for (int n = std::min(0, series.valuation()); n < series.order(); ++n)
            std::cout << n << "," << series.coef(n).str() << "\n";
    } else {
        std::cout << sel.canonical << " at gamma=" << gamma_desc << ":\n";
        std::cout << "  " << series.str(sel.var) << "\n";
    }
    return 0;
}

void print_report_text(const eo::CaseReport& rep) {
    for (const auto& c : rep.checks) {
        std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  (zero through order "
                  << (c.pass ? c.checked_order : c.residual_valuation) << ")\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact series and oracles for weighted quartic planar Eulerian orientations"};
    app.require_subcommand(1);

    // ---- coeffs ----
    auto* coeffs = app.add_subcommand("coeffs", "print exact series coefficients");
    std::string co_series = "Q(t)", co_gamma = "symbolic", co_fmt = "json";
    int co_order = 8;
    coeffs->add_option("--series", co_series, "t(q), R(q), q(t), R(t), Q(t), Ahat(q), S(q)");
    coeffs->add_option("--gamma", co_gamma, "symbolic | rational | golden-ratio");
    coeffs->add_option("--order", co_order, "truncation order (>= 2)");
    coeffs->add_option("--output", co_fmt, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run identity and ODE verification");
    int ve_case = 0, ve_order = 40;
    bool ve_ode = false, ve_json = false;
    std::string ve_gamma = "symbolic";
    verify->add_option("--case", ve_case, "torsion level: 3 (gamma=1), 4 (0), 5 (golden), 6 (-1)");
    verify->add_flag("--ode", ve_ode, "only the two differential checks at --gamma");
    verify->add_option("--gamma", ve_gamma, "weight for --ode (symbolic or rational)");
    verify->add_option("--order", ve_order, "q-order");
    verify->add_flag("--json", ve_json, "machine-readable report");

    // ---- enumerate ----
    auto* enumerate = app.add_subcommand("enumerate", "brute-force rooted quartic maps");
    int en_vertices = 1, en_genus = 0;
    bool en_allow_slow = false;
    std::string en_gamma = "symbolic";
    enumerate->add_option("--vertices", en_vertices, "vertex count")->required();
    enumerate->add_option("--genus", en_genus, "surface genus (default 0)");
    enumerate->add_option("--gamma", en_gamma, "symbolic or a rational value");
    enumerate->add_flag("--allow-slow", en_allow_slow, "lift the vertex cap (slow)");

    // ---- relation ----
    auto* relation = app.add_subcommand("relation", "discover the polynomial relation P(R,S)=0");
    int re_case = 6, re_order = 44;
    bool re_json = false;
    relation->add_option("--case", re_case, "5 (golden ratio) or 6 (gamma=-1)");
    relation->add_option("--order", re_order, "q-order for the kernel computation");
    relation->add_flag("--json", re_json, "machine-readable output");

    // ---- oracle ----
    auto* oracle = app.add_subcommand("oracle", "cross-check oracles against the theta pipeline");
    int or_tutte = 0, or_enum = 0;
    bool or_allow_slow = false, or_dump = false;
    oracle->add_option("--tutte-order", or_tutte, "compare the loop-equation series to t-order K");
    oracle->add_option("--enum-vertices", or_enum, "compare brute-force counts up to n vertices");
    oracle->add_flag("--allow-slow", or_allow_slow, "lift the enumeration vertex cap");
    oracle->add_flag("--dump-slices", or_dump, "dump the loop-equation slices as JSON");

    try {
        app.parse(argc, argv);

        if (coeffs->parsed()) {
            enforce_order_cap(co_order);
            auto sel = parse_selector(co_series);
            auto g = parse_gamma(co_gamma);
            switch (g.mode) {
                case GammaMode::Symbolic:
                    return emit_coeffs<eo::GammaPoly>(eo::GammaPoly::gamma(), sel, co_order,
                                                      co_fmt, "symbolic");
                case GammaMode::GoldenRatio:
                    return emit_coeffs<eo::QuadExtSqrt5>(eo::QuadExtSqrt5::golden_ratio(), sel,
                                                         co_order, co_fmt, "golden-ratio");
                case GammaMode::Value:
                    return emit_coeffs<Rational>(g.value, sel, co_order, co_fmt, g.value.str());
            }
        }

        if (verify->parsed()) {
            enforce_order_cap(ve_order);
            std::vector<eo::CaseReport> reports;
            if (ve_ode) {
                auto g = parse_gamma(ve_gamma);
                if (g.mode == GammaMode::Symbolic)
                    reports.push_back(eo::verify_ode_symbolic(ve_order));
                else if (g.mode == GammaMode::GoldenRatio)
                    throw eo::UsageError("--ode --gamma golden-ratio: use --case 5 instead");
                else
                    reports.push_back(eo::verify_ode_at(g.value, ve_order));
            }
            if (ve_case != 0) reports.push_back(eo::verify_case(ve_case, ve_order));
            if (reports.empty())
                throw eo::UsageError("verify needs --case N and/or --ode");
            bool all = true;
            json out = json::array();
            for (const auto& rep : reports) {
                all = all && rep.all_pass();
                if (ve_json)
                    out.push_back(eo::report_to_json(rep));
                else
                    print_report_text(rep);
            }
            if (ve_json) std::cout << out.dump(2) << "\n";
            return all ? 0 : 1;
        }

        if (enumerate->parsed()) {
            if (en_allow_slow && en_vertices > eo::kDefaultVertexCap)
                std::cerr << "warning: enumerating " << en_vertices
                          << " vertices; expect a long run\n";
            auto maps = eo::gen_quartic_maps(en_vertices, en_genus, eo::kDefaultVertexCap,
                                             en_allow_slow);
            json j;
            j["schema"] = 1;
            j["n"] = en_vertices;
            j["genus"] = en_genus;
            j["map_count"] = maps.size();
            if (en_genus == 0) {
                eo::GammaPoly poly;
                for (const auto& m : maps) poly += eo::eo_polynomial(m);
                auto g = parse_gamma(en_gamma);
                if (g.mode == GammaMode::Value)
                    j["polynomial"] = poly.eval(g.value).str();
                else if (g.mode == GammaMode::GoldenRatio)
                    j["polynomial"] =
                        poly.eval_in<eo::QuadExtSqrt5>(eo::QuadExtSqrt5::golden_ratio()).str();
                else
                    j["polynomial"] = eo::to_json(poly);
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (relation->parsed()) {
            enforce_order_cap(re_order);
            json j;
            std::string text;
            if (re_case == 6) {
                auto rel = eo::find_relation_case6(re_order);
                j = eo::relation_to_json(rel);
                for (size_t i = 0; i < rel.support.size(); ++i)
                    text += (i ? " + " : "") + std::string("(") + rel.coeffs[i].str() + ")*R^" +
                            std::to_string(rel.support[i].first) + "*S^" +
                            std::to_string(rel.support[i].second);
            } else if (re_case == 5) {
                auto rel = eo::find_relation_case5(re_order);
                j = eo::relation_to_json(rel);
                for (size_t i = 0; i < rel.support.size(); ++i)
                    text += (i ? " + " : "") + std::string("(") + rel.coeffs[i].str() + ")*R^" +
                            std::to_string(rel.support[i].first) + "*S^" +
                            std::to_string(rel.support[i].second);
            } else {
                throw eo::UsageError("relation supports --case 5 or 6");
            }
            if (re_json)
                std::cout << j.dump(2) << "\n";
            else
                std::cout << text << " = 0\n";
            return 0;
        }

        if (oracle->parsed()) {
            if (or_tutte == 0 && or_enum == 0 && !or_dump)
                throw eo::UsageError("oracle needs --tutte-order and/or --enum-vertices");
            if (or_tutte > 0) enforce_order_cap(or_tutte + 2);
            if (or_enum > eo::kDefaultVertexCap && or_allow_slow)
                std::cerr << "warning: enumerating up to " << or_enum
                          << " vertices; expect a long run\n";
            bool all = true;
            json j;
            j["schema"] = 1;
            if (or_tutte > 0 || or_dump) {
                int K = or_tutte > 0 ? or_tutte : 4;
                auto slices = eo::iterate_wh(K);
                if (or_dump) {
                    json sl = json::array();
                    for (const auto& ws : slices.w) {
                        json wj = json::array();
                        for (const auto& p : ws.poly) wj.push_back(eo::to_json(p));
                        sl.push_back({{"t_order", ws.k}, {"w_by_x_power", wj}});
                    }
                    j["w_slices"] = sl;
                    json hl = json::array();
                    for (const auto& hs : slices.h) {
                        json terms = json::array();
                        for (int r = 0; r <= 2 * hs.k; ++r)
                            for (int s = 0; r + s <= 2 * hs.k; ++s)
                                if (!hs.at(r, s).is_zero())
                                    terms.push_back({{"x_power", r},
                                                     {"y_power", s},
                                                     {"poly", eo::to_json(hs.at(r, s))}});
                        hl.push_back({{"t_order", hs.k}, {"terms", terms}});
                    }
                    j["h_slices"] = hl;
                }
                if (or_tutte > 0) {
                    auto c = eo::c_of_t(slices);
                    auto bundle = eo::build_genfun<eo::GammaPoly>(eo::GammaPoly::gamma(), K + 3,
                                                                  eo::BuildParts::Full);
                    auto cmp = eo::compare_c_q(c, bundle.Q_of_t().truncated(K + 1));
                    j["tutte"] = {{"order", cmp.order},
                                  {"match", cmp.match},
                                  {"first_mismatch", cmp.first_mismatch}};
                    all = all && cmp.match;
                }
            }
            if (or_enum > 0) {
                auto bundle = eo::build_genfun<eo::GammaPoly>(eo::GammaPoly::gamma(), or_enum + 3,
                                                              eo::BuildParts::Full);
                json rows = json::array();
                for (int n = 1; n <= or_enum; ++n) {
                    auto counted = eo::count_eo_gamma(n, eo::kDefaultVertexCap, or_allow_slow);
                    bool match = counted == bundle.Q_of_t().coef(n);
                    rows.push_back({{"n", n},
                                    {"polynomial", eo::to_json(counted)},
                                    {"match", match}});
                    all = all && match;
                }
                j["enumeration"] = rows;
            }
            j["all_match"] = all;
            std::cout << j.dump(2) << "\n";
            return all ? 0 : 1;
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const eo::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const eo::Error& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
