#include "dyckfact/json_io.hpp"

namespace dyckfact {

namespace {

Json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        Rat r = Rat::parse(s);
        if (!r.is_integer()) throw parse_error("expected an integer, got '" + s + "'");
        return r.num();
    }
    throw parse_error("expected an integer");
}

} // namespace

Json to_json(const Rat& r) { return Json(r.str()); }

Json to_json(const MonicPoly& p) {
    Json roots = Json::array();
    for (const Rat& r : p.roots()) roots.push_back(to_json(r));
    return Json{{"roots", std::move(roots)}};
}

Json to_json(const SolutionPair& s) {
    return Json{{"p1", to_json(s.p1)}, {"p2", to_json(s.p2)}};
}

Json to_json(const DyckPath& d) { return Json{{"word", d.word().str()}}; }

Json to_json(const CylPath& c) {
    return Json{{"word", c.path.word().str()},
                {"base", Json::array({int_to_json(c.base.r), int_to_json(c.base.s)})}};
}

Json to_json(const FundamentalSolution& f) {
    return Json{{"word", f.path.word().str()},
                {"lambda", to_json(f.lambda)},
                {"p1", to_json(f.pair.p1)},
                {"p2", to_json(f.pair.p2)}};
}

Json to_json(const Factorization& f) {
    Json cosets = Json::array();
    for (const auto& c : f.cosets) {
        Json factors = Json::array();
        for (const auto& fl : c.factors)
            factors.push_back(Json{{"word", fl.path.word().str()}, {"lambda", to_json(fl.lambda)}});
        cosets.push_back(Json{{"representative", to_json(c.key.representative)},
                              {"factors", std::move(factors)}});
    }
    return Json{{"cosets", std::move(cosets)}};
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(Int(j.get<long>()));
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    throw parse_error("expected a rational as \"a/b\" or integer");
}

Word word_from_json(const Json& j) {
    if (!j.is_string()) throw parse_error("expected a word as a string of '1'/'2'");
    return Word(j.get<std::string>());
}

MonicPoly poly_from_json(const Json& j) {
    if (!j.is_object()) throw parse_error("expected a polynomial object");
    if (j.contains("roots")) {
        std::vector<Rat> roots;
        for (const auto& e : j.at("roots")) roots.push_back(rat_from_json(e));
        return MonicPoly::from_roots(std::move(roots));
    }
    if (j.contains("coeffs")) {
        std::vector<Rat> coeffs;
        for (const auto& e : j.at("coeffs")) coeffs.push_back(rat_from_json(e));
        return MonicPoly::from_coeffs(std::move(coeffs));
    }
    throw parse_error("polynomial object needs \"roots\" or \"coeffs\"");
}

SolutionPair pair_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p1") || !j.contains("p2"))
        throw parse_error("expected a pair object with \"p1\" and \"p2\"");
    return SolutionPair{poly_from_json(j.at("p1")), poly_from_json(j.at("p2"))};
}

CylPath cyl_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("word") || !j.contains("base") || !j.at("base").is_array() ||
        j.at("base").size() != 2)
        throw parse_error("expected a cylindrical path object with \"word\" and \"base\": [k, l]");
    DyckPath d = DyckPath::from_word(word_from_json(j.at("word")));
    Int k = int_from_json(j.at("base")[0]);
    Int l = int_from_json(j.at("base")[1]);
    if (k < 0 || k >= d.m())
        throw parse_error("base point k must lie in [0, m-1]");
    return CylPath{std::move(d), LatticeCoord{k, l}};
}

Factorization factorization_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("cosets"))
        throw parse_error("expected a factorization object with \"cosets\"");
    Factorization f;
    for (const auto& c : j.at("cosets")) {
        CosetFactors cf{CosetKey{rat_from_json(c.at("representative"))}, {}};
        for (const auto& fl : c.at("factors"))
            cf.factors.push_back(FactorLabel{DyckPath::from_word(word_from_json(fl.at("word"))),
                                             rat_from_json(fl.at("lambda"))});
        f.cosets.push_back(std::move(cf));
    }
    return f;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace dyckfact
