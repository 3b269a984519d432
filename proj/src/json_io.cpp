#include "parehr/json_io.hpp"

#include "parehr/errors.hpp"

namespace parehr {

using nlohmann::json;

PolytopeInput polytope_from_json(const json& j) {
    if (!j.is_object() || !j.contains("A") || !j.contains("b0"))
        throw ParseError("polytope JSON: expected object with \"A\" and \"b0\"");
    IntMat A;
    for (const auto& row : j.at("A")) {
        IntVec r;
        for (const auto& v : row) r.push_back(v.get<std::int64_t>());
        A.push_back(std::move(r));
    }
    IntVec b0;
    for (const auto& v : j.at("b0")) b0.push_back(v.get<std::int64_t>());
    PolytopeInput in{HPolytope(std::move(A), std::move(b0)), VarTable{}};
    if (j.contains("labels")) {
        std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
        if (labels.size() != in.polytope.A.size())
            throw ParseError("polytope JSON: labels length must match the number of rows");
        in.vars.set_b_labels(std::move(labels));
    }
    return in;
}

json polytope_to_json(const HPolytope& P, const VarTable& vars) {
    json j;
    j["A"] = P.A;
    j["b0"] = P.b0;
    if (vars.has_labels()) j["labels"] = vars.b_labels();
    return j;
}

MPoly weight_from_json(const json& j, int expected_d) {
    if (!j.is_object() || !j.contains("d") || !j.contains("terms"))
        throw ParseError("weight JSON: expected object with \"d\" and \"terms\"");
    const int d = j.at("d").get<int>();
    if (expected_d >= 0 && d != expected_d)
        throw ParseError("weight JSON: weight dimension " + std::to_string(d) +
                         " does not match polytope dimension " + std::to_string(expected_d));
    MPoly w;
    for (const auto& term : j.at("terms")) {
        const Rational c = Rational::from_string(term.at("coeff").get<std::string>());
        const auto exps = term.at("exponents").get<std::vector<std::uint32_t>>();
        if (exps.size() != static_cast<std::size_t>(d))
            throw ParseError("weight JSON: exponent vector length must equal d");
        Monomial m;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0)
                m = m.times(Monomial::var(VarId::x(static_cast<std::uint32_t>(i)), exps[i]));
        w += MPoly::term(c, m);
    }
    return w;
}

json weight_to_json(const MPoly& w, int d) {
    json terms = json::array();
    for (auto it = w.terms().rbegin(); it != w.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        std::vector<std::uint32_t> exps(static_cast<std::size_t>(d), 0);
        for (const auto& [v, e] : m.powers()) {
            if (v.block != VarBlock::X || v.index >= static_cast<std::uint32_t>(d))
                throw ParseError("weight_to_json: not an X-block polynomial in dimension d");
            exps[v.index] = e;
        }
        terms.push_back({{"coeff", c.str()}, {"exponents", exps}});
    }
    return json{{"d", d}, {"terms", terms}};
}

json mpoly_to_json(const MPoly& p, const VarTable& vars) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        json mono = json::object();
        for (const auto& [v, e] : m.powers()) mono[vars.name(v)] = e;
        terms.push_back({{"coeff", c.str()}, {"monomial", mono}});
    }
    return json{{"terms", terms}};
}

MPoly mpoly_from_json(const json& j, const VarTable& vars) {
    if (!j.is_object() || !j.contains("terms"))
        throw ParseError("polynomial JSON: expected object with \"terms\"");
    MPoly p;
    for (const auto& term : j.at("terms")) {
        const Rational c = Rational::from_string(term.at("coeff").get<std::string>());
        Monomial m;
        for (const auto& [name, e] : term.at("monomial").items()) {
            auto v = vars.lookup(name);
            if (!v) throw ParseError("polynomial JSON: unknown variable '" + name + "'");
            m = m.times(Monomial::var(*v, e.get<std::uint32_t>()));
        }
        p += MPoly::term(c, m);
    }
    return p;
}

json upoly_to_json(const UPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p) coeffs.push_back(c.str());
    return coeffs;
}

json ehrhart_to_json(const EhrhartPoly& e) {
    return json{{"t_coeffs", upoly_to_json(e.coeffs)}};
}

json hstar_to_json(const HStarData& h) {
    // h*(1) = 0 means the Ehrhart degree dropped below the cap; downstream
    // consumers (root limits, dilation laws) need to know
    const Rational at_one = up_eval(h.hstar, Rational(1));
    return json{{"z_coeffs", upoly_to_json(h.hstar)},
                {"denom_exp", h.denom_exponent},
                {"hstar_at_one", at_one.str()},
                {"degree_drop", at_one.is_zero()}};
}

}  // namespace parehr
