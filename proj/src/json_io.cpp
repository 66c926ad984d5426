#include "tautring/json_io.hpp"

#include <sstream>

namespace tautring {

Json poly_to_json(const Poly& p) {
    Json j;
    j["vars"] = Json::array();
    const VarSpacePtr& s = p.space();
    for (int i = 0; i < s->size(); ++i)
        j["vars"].push_back({{"name", s->name(i)}, {"weight", s->weight(i)}});
    j["terms"] = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["coeff"] = c.str();
        term["exps"] = e;
        j["terms"].push_back(std::move(term));
    }
    return j;
}

Poly poly_from_json(const Json& j) {
    std::vector<Var> vars;
    for (const auto& v : j.at("vars"))
        vars.push_back({v.at("name").get<std::string>(), v.at("weight").get<int>()});
    VarSpacePtr space = VarSpace::create(std::move(vars));
    Poly p(space);
    for (const auto& t : j.at("terms")) {
        Exponents e = t.at("exps").get<Exponents>();
        p += Poly::monomial(space, std::move(e), Rational::parse(t.at("coeff").get<std::string>()));
    }
    return p;
}

Json ring_element_to_json(const RingElement& e) {
    Json j;
    j["c0"] = poly_to_json(e.c0());
    j["cx"] = Json::array();
    for (int i = 1; i <= e.presentation()->n(); ++i) j["cx"].push_back(poly_to_json(e.cx(i)));
    j["cnu"] = poly_to_json(e.cnu());
    return j;
}

Json kappa_to_json(const KappaExpression& k) {
    Json j;
    j["n"] = k.n;
    j["a"] = k.a;
    j["b"] = k.b;
    if (k.choice_i)
        j["choice_i"] = *k.choice_i;
    else
        j["choice_i"] = nullptr;
    j["poly"] = poly_to_json(k.value);
    return j;
}

Json relation_to_json(const RelationVector& r) {
    Json j;
    j["d"] = r.d;
    j["coeffs"] = Json::array();
    for (const auto& c : r.coeffs) {
        if (c.fits_slong_p())
            j["coeffs"].push_back(c.get_si());
        else
            j["coeffs"].push_back(c.get_str());
    }
    j["labels"] = r.labels;
    return j;
}

std::string relation_to_csv_row(const RelationVector& r) {
    std::ostringstream os;
    for (size_t i = 0; i < r.coeffs.size(); ++i) {
        if (i) os << ",";
        os << r.coeffs[i].get_str();
    }
    return os.str();
}

}  // namespace tautring
