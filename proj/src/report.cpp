#include "cb/report.hpp"

namespace cb {

namespace {

Rational rational_field(const Json& j, const std::string& where) {
    std::string text;
    if (j.is_string())
        text = j.get<std::string>();
    else if (j.is_number_integer())
        text = std::to_string(j.get<long long>());
    else
        throw ParseError("schema", where + " must be a rational string");
    try {
        return parse_rational(text);
    } catch (const InputError& e) {
        throw ParseError("malformed-rational", where + ": " + e.what());
    }
}

PolyQ poly_field(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError("schema", where + " must be a coefficient array");
    std::vector<Rational> cs;
    for (size_t i = 0; i < j.size(); ++i)
        cs.push_back(rational_field(j[i], where + "[" + std::to_string(i) + "]"));
    return PolyQ(cs);
}

FiberDatum point_field(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("poly") || !j.contains("alpha"))
        throw ParseError("schema", where + " must carry poly and alpha");
    PolyQ minpoly = poly_field(j["poly"], where + ".poly");
    ClosedPoint P;
    try {
        P = ClosedPoint::make(minpoly);
    } catch (const InputError& e) {
        throw ParseError("reducible-point", where + ": " + e.what());
    }
    const Json& a = j["alpha"];
    if (a.is_string() || a.is_number_integer())
        return FiberDatum::with_rational(P, rational_field(a, where + ".alpha"));
    if (a.is_object() && a.contains("x")) {
        Rational d = rational_field(a.contains("d") ? a["d"] : Json("0"), where + ".alpha.d");
        if (d.get_den() != 1) throw ParseError("schema", where + ".alpha.d must be an integer");
        QuadElem z(Int(d.get_num()), rational_field(a["x"], where + ".alpha.x"),
                   a.contains("y") ? rational_field(a["y"], where + ".alpha.y") : Rational(0));
        return FiberDatum::with_quadratic(P, z);
    }
    if (a.is_object() && a.contains("poly"))
        return FiberDatum::with_polynomial(P, poly_field(a["poly"], where + ".alpha.poly"));
    if (a.is_array()) return FiberDatum::with_polynomial(P, poly_field(a, where + ".alpha"));
    throw ParseError("schema", where + ".alpha has an unknown shape");
}

}  // namespace

ConicBundleData parse_surface(const std::string& text, uint64_t seed) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError("malformed-json", e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("schema", "surface description must carry a kind");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "chatelet") {
        if (!j.contains("a") || !j.contains("c") || !j.contains("f"))
            throw ParseError("schema", "chatelet surfaces need a, c and f");
        Rational a = rational_field(j["a"], "a");
        Rational c = rational_field(j["c"], "c");
        PolyQ f = poly_field(j["f"], "f");
        try {
            return ConicBundleData::make_chatelet(a, c, f, seed);
        } catch (const InputError& e) {
            throw ParseError("degenerate-surface", e.what());
        }
    }
    if (kind == "general") {
        if (!j.contains("points") || !j["points"].is_array())
            throw ParseError("schema", "general surfaces need a points array");
        std::vector<FiberDatum> S;
        for (size_t i = 0; i < j["points"].size(); ++i)
            S.push_back(point_field(j["points"][i], "points[" + std::to_string(i) + "]"));
        try {
            return ConicBundleData::make_general(S);
        } catch (const InputError& e) {
            std::string msg = e.what();
            if (msg.find("product of norms") != std::string::npos)
                throw ParseError("norm-product-violation", msg);
            throw ParseError("degenerate-surface", msg);
        }
    }
    throw ParseError("schema", "unknown surface kind: " + kind);
}

Json poly_to_json(const PolyQ& f) {
    Json arr = Json::array();
    for (const Rational& c : f.c) arr.push_back(rational_to_string(c));
    return arr;
}

Json quad_elem_to_json(const QuadElem& z) {
    Json j = Json::object();
    j["x"] = rational_to_string(z.x);
    j["y"] = rational_to_string(z.y);
    j["d"] = z.d.get_str();
    return j;
}

Json poly_quad_to_json(const PolyQuad& g) {
    Json j = Json::object();
    j["d"] = g.d.get_str();
    Json arr = Json::array();
    for (const QuadElem& c : g.c) {
        Json e = Json::object();
        e["x"] = rational_to_string(c.x);
        e["y"] = rational_to_string(c.y);
        arr.push_back(e);
    }
    j["coeffs"] = arr;
    return j;
}

Json surface_to_json(const ConicBundleData& X) {
    Json j = Json::object();
    if (X.chatelet) {
        j["kind"] = "chatelet";
        j["a"] = rational_to_string(X.a);
        j["c"] = rational_to_string(X.input_c);
        j["f"] = poly_to_json(X.input_f);
        return j;
    }
    j["kind"] = "general";
    Json pts = Json::array();
    for (const FiberDatum& fd : X.S) {
        Json p = Json::object();
        p["poly"] = poly_to_json(fd.point.minpoly);
        switch (fd.rep) {
            case FiberDatum::Rep::rational:
                p["alpha"] = rational_to_string(fd.alpha_rational);
                break;
            case FiberDatum::Rep::quadratic:
                p["alpha"] = quad_elem_to_json(fd.alpha_quad);
                break;
            case FiberDatum::Rep::polynomial: {
                Json a = Json::object();
                a["poly"] = poly_to_json(fd.alpha_poly);
                p["alpha"] = a;
                break;
            }
        }
        pts.push_back(p);
    }
    j["points"] = pts;
    return j;
}

Json symbol_witness_to_json(const SymbolWitness& w) {
    Json j = Json::object();
    if (w.at_infinity)
        j["at_infinity"] = true;
    else
        j["t"] = rational_to_string(w.t);
    j["value"] = inv_to_string(w.value);
    return j;
}

Json eval_witness_to_json(const EvalWitness& w, const Int& d) {
    Json j = Json::object();
    if (w.at_infinity)
        j["at_infinity"] = true;
    else if (w.quadratic) {
        Json t = Json::object();
        t["x"] = rational_to_string(w.tq.x);
        t["y"] = rational_to_string(w.tq.y);
        t["d"] = d.get_str();
        j["t"] = t;
    } else
        j["t"] = rational_to_string(w.t);
    j["value"] = inv_to_string(w.value);
    return j;
}

Json adelic_to_json(const AdelicReport& r) {
    Json j = Json::object();
    j["solvable"] = r.solvable;
    if (r.extension) j["extension"] = r.d.get_str();
    Json table = Json::array();
    for (const LocalSolvability& row : r.table) {
        Json e = Json::object();
        e["place"] = row.extension ? row.w.to_string() : row.v.to_string();
        e["solvable"] = row.solvable;
        e["rule"] = row.rule;
        if (row.has_witness) e["witness"] = symbol_witness_to_json(row.witness);
        table.push_back(e);
    }
    j["table"] = table;
    return j;
}

Json local_eval_to_json(const LocalEvalReport& r) {
    Json j = Json::object();
    j["place"] = r.w.to_string();
    Json vals = Json::array();
    for (Inv v : r.value_set) vals.push_back(inv_to_string(v));
    j["value_set"] = vals;
    Json wit = Json::array();
    for (const EvalWitness& e : r.witnesses) wit.push_back(eval_witness_to_json(e, r.w.d));
    j["witnesses"] = wit;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json generator_to_json(const BrauerGeneratorL& g) {
    Json j = Json::object();
    std::string eps;
    for (int b : g.epsilon) eps += (b ? '1' : '0');
    j["epsilon"] = eps;
    if (g.has_symbol) {
        j["a"] = rational_to_string(g.a);
        j["poly"] = poly_quad_to_json(g.symbol_poly);
    }
    return j;
}

Json quotient_to_json(const BrauerQuotient& q) {
    Json j = Json::object();
    j["dimension"] = std::to_string(q.quotient_dim());
    Json gens = Json::array();
    for (const BrauerGeneratorQ& g : q.generators) {
        Json e = Json::object();
        std::string eps;
        for (int b : g.epsilon) eps += (b ? '1' : '0');
        e["epsilon"] = eps;
        if (g.has_symbol) {
            e["a"] = rational_to_string(g.a);
            e["poly"] = poly_to_json(g.symbol_poly);
        }
        gens.push_back(e);
    }
    j["generators"] = gens;
    return j;
}

Json quotient_L_to_json(const BrauerQuotientL& q) {
    Json j = Json::object();
    j["extension"] = q.d.get_str();
    j["dimension"] = std::to_string(q.quotient_dim());
    Json gens = Json::array();
    for (const BrauerGeneratorL& g : q.generators) gens.push_back(generator_to_json(g));
    j["generators"] = gens;
    return j;
}

Json restriction_to_json(const RestrictionData& rd) {
    Json j = Json::object();
    j["over_Q"] = quotient_to_json(rd.over_Q);
    j["over_L"] = quotient_L_to_json(rd.over_L);
    j["surjective"] = rd.surjective;
    j["injective"] = rd.injective;
    j["matrix"] = rd.matrix.to_string();
    return j;
}

Json bm_to_json(const BmReport& r) {
    Json j = Json::object();
    j["decision"] = bm_decision_to_string(r.decision);
    j["dimension_over_L"] = std::to_string(r.dimension_over_L);
    if (r.has_generator) j["generator"] = generator_to_json(r.generator);
    Json places = Json::array();
    for (const LocalEvalReport& rep : r.places) places.push_back(local_eval_to_json(rep));
    j["places"] = places;
    if (r.total_forced) j["total"] = inv_to_string(r.total);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json verdict_to_json(const Verdict& v) {
    Json j = Json::object();
    j["conclusion"] = conclusion_to_string(v.conclusion);
    Json cits = Json::array();
    for (const std::string& c : v.citations) cits.push_back(c);
    j["citations"] = cits;
    Json places = Json::array();
    if (v.has_bm)
        for (const LocalEvalReport& rep : v.bm.places) places.push_back(local_eval_to_json(rep));
    j["places"] = places;
    j["conditionality"] = conditionality_to_string(v.conditionality);
    if (v.has_d) j["extension"] = v.d.get_str();
    if (!v.note.empty()) j["note"] = v.note;
    if (v.has_adelic) j["adelic"] = adelic_to_json(v.adelic);
    if (v.has_bm) j["bm"] = bm_to_json(v.bm);
    return j;
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cb
