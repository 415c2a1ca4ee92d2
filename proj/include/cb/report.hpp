#pragma once

#include "cb/factor.hpp"
#include "cb/obstruction.hpp"

#include "json.hpp"

namespace cb {

using Json = nlohmann::ordered_json;

// Input/schema failure carrying a stable machine-readable code next to the
// human-readable message.
struct ParseError : InputError {
    std::string code;
    ParseError(const std::string& code_, const std::string& msg)
        : InputError(code_ + ": " + msg), code(code_) {}
};

// Surface description: {"kind":"chatelet","a":"5","c":"3/5","f":["1","0","7","0","5"]}
// or {"kind":"general","points":[{"poly":["-2","0","1"],"alpha":...}, ...]}.
// All numbers are strings; alpha is a rational string, an {"x","y","d"} object
// for a quadratic residue, or {"poly":[...]} for a polynomial representative.
ConicBundleData parse_surface(const std::string& text, uint64_t seed = 0);

Json surface_to_json(const ConicBundleData& X);
Json quad_elem_to_json(const QuadElem& z);
Json poly_to_json(const PolyQ& f);
Json poly_quad_to_json(const PolyQuad& g);
Json symbol_witness_to_json(const SymbolWitness& w);
Json eval_witness_to_json(const EvalWitness& w, const Int& d);
Json adelic_to_json(const AdelicReport& r);
Json local_eval_to_json(const LocalEvalReport& r);
Json generator_to_json(const BrauerGeneratorL& g);
Json quotient_to_json(const BrauerQuotient& q);
Json quotient_L_to_json(const BrauerQuotientL& q);
Json restriction_to_json(const RestrictionData& rd);
Json bm_to_json(const BmReport& r);
Json verdict_to_json(const Verdict& v);

// Canonical rendering used by every --json output: two-space indent and a
// trailing newline, no floats anywhere; parsing and re-rendering a report is
// byte-identical.
std::string dump_report(const Json& j);

}  // namespace cb
