#include "hodge/cli.hpp"

#include "hodge/closed_forms.hpp"
#include "hodge/json_io.hpp"
#include "hodge/valuation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace hodge {

namespace {

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t lo = item.find_first_not_of(" \t");
        size_t hi = item.find_last_not_of(" \t");
        if (lo == std::string::npos) continue;
        out.push_back(item.substr(lo, hi - lo + 1));
    }
    return out;
}

RationalPoint parse_point(const std::string& csv) {
    std::vector<Rational> coords;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(Rational::from_string(item));
    return RationalPoint(std::move(coords));
}

std::string ideal_text(const JetIdeal& ideal, const std::vector<std::string>& vars) {
    std::ostringstream os;
    os << "(";
    const auto strs = ideal.generator_strings(vars);
    for (size_t i = 0; i < strs.size(); ++i) {
        if (i) os << ", ";
        os << strs[i];
    }
    os << ")";
    return os.str();
}

struct CurveOptions {
    std::string equation;
    std::string vars_csv = "x,y";
    int kmax = 2;
    std::string point_csv;
    bool json = false;
    int cap = 64;
};

int run_curve(const CurveOptions& opt, std::ostream& out) {
    const std::vector<std::string> vars = split_names(opt.vars_csv);
    if (vars.size() != 2) throw std::invalid_argument("curve command needs exactly two variables");
    const Polynomial h = parse_polynomial(opt.equation, vars);
    const PlaneCurve curve = PlaneCurve::from_polynomial(h);

    std::vector<RationalPoint> points;
    if (!opt.point_csv.empty()) {
        RationalPoint p = parse_point(opt.point_csv);
        if (p.arity() != 2) throw std::invalid_argument("--point needs two coordinates");
        if (!h.evaluate(p.coords).is_zero())
            throw std::invalid_argument("the given point does not lie on the curve");
        points.push_back(std::move(p));
    } else {
        points = singular_points(curve);
    }

    Json jpoints = Json::array();
    int failures = 0;
    std::ostringstream text;
    text << "curve: " << h.render(vars) << "\n";
    if (points.empty())
        text << "no singular rational points; every Hodge ideal is the unit ideal\n";

    for (const auto& p : points) {
        const ResolutionTree tree = ResolutionTree::resolve(curve, p);
        const HodgeIdealFamily family = hodge_ideals(curve, tree, opt.kmax, opt.cap);
        const JetIdeal adj = tree.empty() ? JetIdeal::unit(p) : adjoint_ideal(tree);
        const VerificationReport report = verify_theorems(family, tree);
        failures += report.failures();

        text << "point " << p.str() << ":\n";
        text << "  multiplicity " << order_at_center(h, p) << ", " << tree.divisors().size()
             << " exceptional divisor(s), lct = " << tree.lct().str() << "\n";
        for (const auto& d : tree.divisors())
            text << "    E" << d.id << ": v = " << d.ord_curve << ", k = " << d.discrepancy
                 << ", rho = " << d.ord_center << "\n";
        text << "  I_0  = " << ideal_text(family.ideal(0), vars) << "\n";
        text << "  adj  = " << ideal_text(adj, vars) << "\n";
        for (int k = 1; k <= opt.kmax; ++k)
            text << "  I_" << k << "  = " << ideal_text(family.ideal(k), vars) << "\n";
        int passed = 0;
        for (const auto& c : report.checks) passed += c.pass ? 1 : 0;
        text << "  checks: " << passed << "/" << report.checks.size() << " passed\n";
        for (const auto& c : report.checks)
            if (!c.pass)
                text << "    FAILED " << c.name << (c.k >= 0 ? " k=" + std::to_string(c.k) : "")
                     << ": " << c.detail << "\n";

        Json jp;
        jp["point"] = json_of(p);
        jp["multiplicity"] = order_at_center(h, p);
        jp["resolution"] = json_of(tree);
        Json ideals;
        ideals["I0"] = json_of(family.ideal(0), vars);
        ideals["adj"] = json_of(adj, vars);
        Json per_k = Json::array();
        for (int k = 0; k <= opt.kmax; ++k) per_k.push_back(json_of(family.ideal(k), vars));
        ideals["I"] = std::move(per_k);
        jp["ideals"] = std::move(ideals);
        jp["verification"] = json_of(report);
        jpoints.push_back(std::move(jp));
    }

    if (opt.json) {
        Json j;
        j["command"] = "curve";
        j["equation"] = h.render(vars);
        j["vars"] = vars;
        j["kmax"] = opt.kmax;
        j["points"] = std::move(jpoints);
        j["all_checks_passed"] = (failures == 0);
        out << j.dump(2) << "\n";
    } else {
        out << text.str();
    }
    return failures == 0 ? 0 : 2;
}

struct SncOptions {
    int n = 2;
    int r = 2;
    long k = 1;
    bool json = false;
};

int run_snc(const SncOptions& opt, std::ostream& out) {
    const MonomialIdeal ideal = snc_hodge_ideal(opt.n, opt.r, opt.k);
    if (opt.json) {
        Json j;
        j["command"] = "snc";
        j["n"] = opt.n;
        j["r"] = opt.r;
        j["k"] = opt.k;
        j["generators"] = ideal.generator_strings();
        j["unit"] = ideal.is_unit();
        out << j.dump(2) << "\n";
    } else {
        out << "I_" << opt.k << " for a normal crossing of " << opt.r << " branches in dimension "
            << opt.n << ":\n  (";
        const auto strs = ideal.generator_strings();
        for (size_t i = 0; i < strs.size(); ++i) out << (i ? ", " : "") << strs[i];
        out << ")\n";
    }
    return 0;
}

struct OrdinaryOptions {
    int n = 3;
    long m = 2;
    long k = 1;
    bool json = false;
};

int run_ordinary(const OrdinaryOptions& opt, std::ostream& out) {
    const OrdinaryResult result = ordinary_hodge_ideal({opt.n, opt.m, opt.k});
    const long threshold = triviality_threshold(opt.n, opt.m);
    Json j;
    j["command"] = "ordinary";
    j["n"] = opt.n;
    j["m"] = opt.m;
    j["k"] = opt.k;
    j["triviality_threshold"] = threshold;
    std::ostringstream text;
    text << "ordinary point of multiplicity " << opt.m << " in dimension " << opt.n << ", level "
         << opt.k << ":\n";
    text << "  I_k trivial exactly for k <= " << threshold << "\n";
    if (std::holds_alternative<MonomialIdeal>(result)) {
        const auto& ideal = std::get<MonomialIdeal>(result);
        const long e = std::max(0L, (opt.k + 1) * opt.m - opt.n);
        j["kind"] = "exact";
        j["power"] = e;
        j["unit"] = ideal.is_unit();
        text << (ideal.is_unit() ? "  I_k = (1)  [exact, mk < n]\n"
                                 : "  I_k = m^" + std::to_string(e) + "  [exact, mk < n]\n");
    } else if (std::holds_alternative<OrdinarySandwich>(result)) {
        const auto& s = std::get<OrdinarySandwich>(result);
        j["kind"] = "sandwich";
        j["lower"] = {{"curve_power", s.lower_curve_power}, {"point_power", s.lower_point_power}};
        j["upper"] = {{"curve_power", s.upper_curve_power}, {"point_power", s.upper_point_power}};
        j["defect_length"] = s.defect_length.get_str();
        auto part = [](long curve_pow, long point_pow) {
            std::string t = curve_pow <= 0 ? "(h)" : "(h)*m^" + std::to_string(curve_pow);
            return t + " + m^" + std::to_string(point_pow);
        };
        text << "  " << part(s.lower_curve_power, s.lower_point_power) << "  <=  I_1  <=  "
             << part(s.upper_curve_power, s.upper_point_power) << "\n  defect length "
             << s.defect_length.get_str() << "\n";
    } else {
        j["kind"] = "no_closed_form";
        text << "  no exact closed form in this range (mk >= n and k > 1)\n";
    }
    if (opt.json)
        out << j.dump(2) << "\n";
    else
        out << text.str();
    return 0;
}

struct DiagonalOptions {
    std::vector<long> exponents;
    bool json = false;
};

int run_diagonal(const DiagonalOptions& opt, std::ostream& out) {
    const Rational bound = diagonal_triviality_bound({opt.exponents});
    long trivial_upto = -1;
    {
        // largest integer k with k <= bound
        const Rational b = bound;
        if (b >= Rational(0)) trivial_upto = static_cast<long>(b.floor().get_si());
    }
    if (opt.json) {
        Json j;
        j["command"] = "diagonal";
        j["exponents"] = opt.exponents;
        j["alpha_minus_one"] = bound.str();
        j["trivial_up_to"] = trivial_upto;
        out << j.dump(2) << "\n";
    } else {
        out << "diagonal hypersurface sum x_i^a_i, a = (";
        for (size_t i = 0; i < opt.exponents.size(); ++i) out << (i ? ", " : "") << opt.exponents[i];
        out << "):\n  alpha - 1 = " << bound.str() << "\n";
        if (trivial_upto >= 0)
            out << "  I_k trivial for k <= " << trivial_upto << "\n";
        else
            out << "  no level is guaranteed trivial\n";
    }
    return 0;
}

struct ProjectiveOptions {
    std::string file;
    int kmax = 1;
    std::optional<long> jets;
    bool json = false;
};

int run_projective(const ProjectiveOptions& opt, std::ostream& out, std::ostream& err) {
    std::ifstream in(opt.file);
    if (!in) throw std::invalid_argument("cannot open input file " + opt.file);
    Json input;
    in >> input;
    ProjectiveInput parsed = parse_projective_input(input);
    const ProjectiveHypersurface& h = parsed.hypersurface;

    Json levels = Json::array();
    std::ostringstream text;
    text << "hypersurface of degree " << h.degree << " in P^" << h.n << "\n";
    int failures = 0;
    for (int k = 0; k <= opt.kmax; ++k) {
        if (h.mode == ProjectiveHypersurface::Mode::Declared) {
            bool in_range = true;
            for (const auto& p : h.declared) in_range = in_range && (p.multiplicity * k < h.n);
            if (!in_range) {
                text << "k = " << k << ": skipped (outside the exact closed-form range mk < n)\n";
                Json lj;
                lj["k"] = k;
                lj["skipped"] = true;
                levels.push_back(std::move(lj));
                continue;
            }
        }
        const SubschemeZk zk = assemble_Zk(h, k);
        std::vector<CheckEntry> checks{check_triviality_bound(h, zk), check_degree_bound(h, zk),
                                       check_independent_conditions(h, zk)};

        text << "k = " << k << ": dim Z_k = " << zk.dimension() << ", deg Z_k = " << zk.degree()
             << "\n";
        Json jchecks = Json::array();
        for (const auto& c : checks) {
            failures += c.pass ? 0 : 1;
            text << "  " << (c.pass ? (c.vacuous ? "pass (vacuous)" : "pass") : "FAIL") << " "
                 << c.name << ": " << c.detail << "\n";
            jchecks.push_back(json_of(c));
        }
        Json lj;
        lj["k"] = k;
        lj["Zk"] = json_of(zk, parsed.vars);
        lj["checks"] = std::move(jchecks);
        levels.push_back(std::move(lj));
    }

    Json jets_json;
    if (opt.jets) {
        const CheckEntry jets = check_jet_separation(h, *opt.jets);
        failures += jets.pass ? 0 : 1;
        text << (jets.pass ? (jets.vacuous ? "pass (vacuous)" : "pass") : "FAIL") << " "
             << jets.name << ": " << jets.detail << "\n";
        jets_json = json_of(jets);
    }

    if (opt.json) {
        Json j;
        j["command"] = "projective";
        j["equation"] = h.equation.render(parsed.vars);
        j["n"] = h.n;
        j["degree"] = h.degree;
        j["mode"] = h.mode == ProjectiveHypersurface::Mode::Computed ? "computed" : "declared";
        j["levels"] = std::move(levels);
        if (opt.jets) j["jet_separation"] = std::move(jets_json);
        j["all_checks_passed"] = (failures == 0);
        out << j.dump(2) << "\n";
    } else {
        out << text.str();
    }
    (void)err;
    return failures == 0 ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Hodge ideals of plane curves, with closed forms and projective checks"};
    app.require_subcommand(1);

    CurveOptions curve_opt;
    auto* curve = app.add_subcommand("curve", "Hodge ideals of a plane curve at its singular points");
    curve->add_option("equation", curve_opt.equation, "curve equation, e.g. \"x^2 + y^3\"")->required();
    curve->add_option("--vars", curve_opt.vars_csv, "variable names (default x,y)");
    curve->add_option("--kmax", curve_opt.kmax, "compute I_0..I_kmax (default 2)")
        ->check(CLI::Range(0, 8));
    curve->add_option("--point", curve_opt.point_csv, "only this point, as \"a,b\" with rational entries");
    curve->add_flag("--json", curve_opt.json, "JSON output");
    curve->add_option("--cap", curve_opt.cap, "truncation certification cap (default 64)")
        ->check(CLI::Range(64, 100000));

    SncOptions snc_opt;
    auto* snc = app.add_subcommand("snc", "closed form for a simple normal crossing divisor");
    snc->add_option("--n", snc_opt.n, "ambient dimension")->required();
    snc->add_option("--r", snc_opt.r, "number of branches")->required();
    snc->add_option("--k", snc_opt.k, "level")->required();
    snc->add_flag("--json", snc_opt.json, "JSON output");

    OrdinaryOptions ord_opt;
    auto* ordinary = app.add_subcommand("ordinary", "closed form at an ordinary singular point");
    ordinary->add_option("--n", ord_opt.n, "ambient dimension")->required();
    ordinary->add_option("--m", ord_opt.m, "multiplicity")->required();
    ordinary->add_option("--k", ord_opt.k, "level")->required();
    ordinary->add_flag("--json", ord_opt.json, "JSON output");

    DiagonalOptions diag_opt;
    auto* diagonal = app.add_subcommand("diagonal", "triviality bound for sum x_i^a_i");
    diagonal->add_option("exponents", diag_opt.exponents, "exponents a_i >= 2")->required();
    diagonal->add_flag("--json", diag_opt.json, "JSON output");

    ProjectiveOptions proj_opt;
    auto* projective = app.add_subcommand("projective", "bounds for hypersurfaces in projective space");
    projective->add_option("file", proj_opt.file, "JSON input file")->required();
    projective->add_option("--kmax", proj_opt.kmax, "levels 0..kmax (default 1)")->check(CLI::Range(0, 8));
    long jets_value = 0;
    auto* jets_flag = projective->add_option("--jets", jets_value, "also check separation of (j-1)-jets")
                          ->check(CLI::Range(1, 64));
    projective->add_flag("--json", proj_opt.json, "JSON output");

    std::vector<const char*> argv;
    argv.push_back("hodge");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*curve) return run_curve(curve_opt, out);
        if (*snc) return run_snc(snc_opt, out);
        if (*ordinary) return run_ordinary(ord_opt, out);
        if (*diagonal) return run_diagonal(diag_opt, out);
        if (*projective) {
            if (*jets_flag) proj_opt.jets = jets_value;
            return run_projective(proj_opt, out, err);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 1;
}

}  // namespace hodge
