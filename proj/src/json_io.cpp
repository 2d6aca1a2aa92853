#include "hodge/json_io.hpp"

namespace hodge {

Json json_of(const Rational& r) { return r.str(); }

Json json_of(const RationalPoint& p) {
    Json arr = Json::array();
    for (const auto& c : p.coords) arr.push_back(c.str());
    return arr;
}

Json json_of(const JetIdeal& ideal, const std::vector<std::string>& vars) {
    Json j;
    j["center"] = json_of(ideal.center());
    j["unit"] = ideal.is_unit();
    j["primary_bound"] = ideal.primary_bound();
    j["colength"] = ideal.colength();
    j["generators"] = ideal.generator_strings(vars);
    return j;
}

Json json_of(const ResolutionTree& tree) {
    Json j;
    j["center"] = json_of(tree.center());
    j["blowups"] = tree.certificate().blowups;
    j["charts_examined"] = tree.certificate().charts_examined;
    j["lct"] = tree.lct().str();
    Json divs = Json::array();
    for (const auto& d : tree.divisors()) {
        Json dj;
        dj["id"] = d.id;
        dj["ord_curve"] = d.ord_curve;
        dj["discrepancy"] = d.discrepancy;
        dj["ord_center"] = d.ord_center;
        if (d.parent)
            dj["parent"] = *d.parent;
        else
            dj["parent"] = nullptr;
        Json steps = Json::array();
        for (const auto& s : d.chart) steps.push_back(s.str());
        dj["chart"] = steps;
        dj["axis"] = d.axis;
        divs.push_back(std::move(dj));
    }
    j["divisors"] = std::move(divs);
    return j;
}

Json json_of(const VerificationReport& report) {
    Json arr = Json::array();
    for (const auto& c : report.checks) {
        Json cj;
        cj["name"] = c.name;
        if (c.k >= 0) cj["k"] = c.k;
        cj["pass"] = c.pass;
        cj["vacuous"] = c.vacuous;
        cj["detail"] = c.detail;
        arr.push_back(std::move(cj));
    }
    Json j;
    j["checks"] = std::move(arr);
    j["all_passed"] = report.all_passed();
    return j;
}

Json json_of(const CheckEntry& entry) {
    Json j;
    j["name"] = entry.name;
    j["pass"] = entry.pass;
    j["vacuous"] = entry.vacuous;
    j["detail"] = entry.detail;
    return j;
}

Json json_of(const SubschemeZk& zk, const std::vector<std::string>& vars) {
    Json j;
    j["k"] = zk.k;
    j["dimension"] = zk.dimension();
    j["degree"] = zk.degree();
    Json pts = Json::array();
    for (const auto& p : zk.points) {
        Json pj;
        pj["point"] = json_of(p.homogeneous);
        pj["chart"] = p.chart;
        pj["multiplicity"] = p.multiplicity;
        std::vector<std::string> chart_vars;
        for (size_t i = 0; i < vars.size(); ++i)
            if (static_cast<int>(i) != p.chart) chart_vars.push_back(vars[i]);
        pj["local_ideal"] = json_of(p.local_ideal, chart_vars);
        pts.push_back(std::move(pj));
    }
    j["points"] = std::move(pts);
    return j;
}

ProjectiveInput parse_projective_input(const Json& j) {
    if (!j.contains("equation") || !j.contains("vars") || !j.contains("mode"))
        throw std::invalid_argument("projective input needs 'equation', 'vars' and 'mode'");
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    const Polynomial equation = parse_polynomial(j.at("equation").get<std::string>(), vars);

    const std::string mode_str = j.at("mode").get<std::string>();
    ProjectiveHypersurface::Mode mode;
    if (mode_str == "computed")
        mode = ProjectiveHypersurface::Mode::Computed;
    else if (mode_str == "declared")
        mode = ProjectiveHypersurface::Mode::Declared;
    else
        throw std::invalid_argument("mode must be 'computed' or 'declared'");

    std::vector<DeclaredPoint> points;
    if (j.contains("points")) {
        for (const auto& pj : j.at("points")) {
            DeclaredPoint dp;
            std::vector<Rational> coords;
            for (const auto& c : pj.at("coords")) {
                if (c.is_string())
                    coords.push_back(Rational::from_string(c.get<std::string>()));
                else
                    coords.push_back(Rational(c.get<long>()));
            }
            dp.homogeneous = RationalPoint(std::move(coords));
            dp.multiplicity = pj.at("multiplicity").get<long>();
            points.push_back(std::move(dp));
        }
    }
    return ProjectiveInput{ProjectiveHypersurface::make(equation, mode, std::move(points)), vars};
}

}  // namespace hodge
