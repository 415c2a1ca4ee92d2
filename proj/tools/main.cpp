#include "cb/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace cb;

namespace {

struct Options {
    bool json = false;
    int precision = 20;
    int max_depth = 40;
    uint64_t seed = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ConicBundleData load_surface(const std::string& path, const Options& opt) {
    return parse_surface(read_file(path), opt.seed);
}

std::optional<QuadDisc> parse_ext(const std::string& ext) {
    if (ext.empty()) return std::nullopt;
    return QuadDisc::make(parse_rational(ext));
}

Place parse_place(const std::string& s) {
    if (s == "real" || s == "oo") return Place::real();
    Rational r = parse_rational(s);
    if (r.get_den() != 1 || r <= 1) throw InputError("place must be a prime or 'real': " + s);
    return Place::prime(Int(r.get_num()));
}

void emit(const Options& opt, const Json& j, const std::string& human) {
    if (opt.json)
        std::cout << dump_report(j);
    else
        std::cout << human << (human.empty() || human.back() == '\n' ? "" : "\n");
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string set_to_line(const std::set<Int>& s) {
    if (s.empty()) return "(empty)";
    std::vector<std::string> parts;
    for (const Int& d : s) parts.push_back(d.get_str());
    return join(parts, " ");
}

std::string describe_adelic(const AdelicReport& r) {
    std::ostringstream out;
    out << (r.solvable ? "adelic points exist" : "no adelic points");
    if (r.extension) out << " over Q(sqrt " << r.d.get_str() << ")";
    out << "\n";
    for (const LocalSolvability& row : r.table) {
        out << "  " << (row.extension ? row.w.to_string() : row.v.to_string()) << ": "
            << (row.solvable ? "solvable" : "no local points") << "  [" << row.rule << "]";
        if (row.has_witness) {
            out << "  t = " << (row.witness.at_infinity ? std::string("infinity")
                                                        : rational_to_string(row.witness.t));
        }
        out << "\n";
    }
    return out.str();
}

std::string describe_places(const std::vector<LocalEvalReport>& places) {
    std::ostringstream out;
    for (const LocalEvalReport& rep : places) {
        out << "  " << rep.w.to_string() << ": {";
        bool first = true;
        for (Inv v : rep.value_set) {
            if (!first) out << ", ";
            out << inv_to_string(v);
            first = false;
        }
        out << "}";
        if (!rep.note.empty()) out << "  (" << rep.note << ")";
        out << "\n";
    }
    return out.str();
}

std::string describe_bm(const BmReport& r) {
    std::ostringstream out;
    out << "decision: " << bm_decision_to_string(r.decision) << "\n";
    out << "quotient dimension over L: " << r.dimension_over_L << "\n";
    if (r.has_generator && r.generator.has_symbol)
        out << "generator: (" << rational_to_string(r.generator.a) << ", "
            << r.generator.symbol_poly.to_string() << ")\n";
    out << describe_places(r.places);
    if (r.total_forced) out << "total invariant sum: " << inv_to_string(r.total) << "\n";
    if (!r.note.empty()) out << "note: " << r.note << "\n";
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"exact analysis of conic bundles over the projective line"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "machine-readable JSON output");
    app.add_option("--precision", opt.precision, "p-adic working precision");
    app.add_option("--max-depth", opt.max_depth, "disc subdivision depth bound");
    app.add_option("--seed", opt.seed, "seed for randomized factorization steps");

    std::string file, ext, place_s, a_s, b_s, c_s, disc_s;

    CLI::App* analyze = app.add_subcommand("analyze", "full solvability verdict");
    analyze->add_option("file", file)->required();
    analyze->add_option("--ext", ext, "squarefree d for L = Q(sqrt d)");

    CLI::App* brauer = app.add_subcommand("brauer", "Brauer quotient of the bundle");
    brauer->add_option("file", file)->required();
    brauer->add_option("--ext", ext);

    CLI::App* restriction = app.add_subcommand("restriction", "restriction map to Q(sqrt d)");
    restriction->add_option("file", file)->required();
    restriction->add_option("--ext", ext)->required();

    CLI::App* critical = app.add_subcommand("critical", "critical quadratic extensions");
    critical->add_option("file", file)->required();

    CLI::App* problematic = app.add_subcommand("problematic", "problematic extension set");
    problematic->add_option("file", file)->required();

    CLI::App* local = app.add_subcommand("local", "local solvability at one place");
    local->add_option("file", file)->required();
    local->add_option("--place", place_s)->required();
    local->add_option("--ext", ext);

    CLI::App* obstruction = app.add_subcommand("obstruction", "Brauer-Manin sum over Q(sqrt d)");
    obstruction->add_option("file", file)->required();
    obstruction->add_option("--ext", ext)->required();

    CLI::App* parity = app.add_subcommand("parity", "split-ramified parity of (a, c) along d");
    parity->add_option("--a", a_s)->required();
    parity->add_option("--c", c_s)->required();
    parity->add_option("--disc", disc_s)->required();

    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert symbol (a, b) at one place");
    hilbert->add_option("--a", a_s)->required();
    hilbert->add_option("--b", b_s)->required();
    hilbert->add_option("--place", place_s)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    if (analyze->parsed()) {
        ConicBundleData X = load_surface(file, opt);
        Verdict V = hasse_verdict(X, parse_ext(ext), opt.max_depth, opt.precision, opt.seed);
        std::ostringstream out;
        out << "conclusion: " << conclusion_to_string(V.conclusion) << "\n";
        out << "citations: " << join(V.citations, ", ") << "\n";
        out << "conditionality: " << conditionality_to_string(V.conditionality) << "\n";
        if (V.has_d) out << "extension: Q(sqrt " << V.d.get_str() << ")\n";
        if (!V.note.empty()) out << "note: " << V.note << "\n";
        if (V.has_adelic) out << describe_adelic(V.adelic);
        if (V.has_bm) out << describe_bm(V.bm);
        emit(opt, verdict_to_json(V), out.str());
        return 0;
    }
    if (brauer->parsed()) {
        ConicBundleData X = load_surface(file, opt);
        if (ext.empty()) {
            BrauerQuotient q = brauer_quotient(X.S);
            std::ostringstream out;
            out << "quotient dimension over Q: " << q.quotient_dim() << "\n";
            for (const BrauerGeneratorQ& g : q.generators) out << "  " << g.to_string(X.S) << "\n";
            emit(opt, quotient_to_json(q), out.str());
            return 0;
        }
        RestrictionData rd = restriction_map(X.S, *parse_ext(ext), opt.seed);
        std::ostringstream out;
        out << "quotient dimension over L: " << rd.over_L.quotient_dim() << "\n";
        for (const BrauerGeneratorL& g : rd.over_L.generators)
            out << "  " << g.to_string(rd.base_change.SL) << "\n";
        emit(opt, quotient_L_to_json(rd.over_L), out.str());
        return 0;
    }
    if (restriction->parsed()) {
        ConicBundleData X = load_surface(file, opt);
        RestrictionData rd = restriction_map(X.S, *parse_ext(ext), opt.seed);
        std::ostringstream out;
        out << "over Q: dimension " << rd.over_Q.quotient_dim() << "\n";
        out << "over L: dimension " << rd.over_L.quotient_dim() << "\n";
        out << "surjective: " << (rd.surjective ? "yes" : "no") << "\n";
        out << "injective: " << (rd.injective ? "yes" : "no") << "\n";
        emit(opt, restriction_to_json(rd), out.str());
        return 0;
    }
    if (critical->parsed()) {
        ConicBundleData X = load_surface(file, opt);
        std::set<Int> s = critical_extensions_four_fibers(X, opt.seed);
        Json j = Json::array();
        for (const Int& d : s) j.push_back(d.get_str());
        emit(opt, j, set_to_line(s));
        return 0;
    }
    if (problematic->parsed()) {
        ConicBundleData X = load_surface(file, opt);
        std::set<Int> s = problematic_set_M(X, opt.seed);
        Json j = Json::array();
        for (const Int& d : s) j.push_back(d.get_str());
        emit(opt, j, set_to_line(s));
        return 0;
    }
    if (local->parsed()) {
        ConicBundleData X = load_surface(file, opt);
        if (!X.chatelet)
            throw InputError("local solvability needs an explicit surface model");
        Place v = parse_place(place_s);
        std::optional<QuadDisc> d = parse_ext(ext);
        if (!d) {
            SolvableReport s =
                chatelet_local_solvable(X.a, X.c, X.f, v, opt.max_depth, opt.seed);
            Json j = Json::object();
            j["place"] = v.to_string();
            j["solvable"] = s.solvable;
            std::string human;
            if (s.solvable) {
                j["witness"] = symbol_witness_to_json(s.witness);
                human = "local points exist  t = " +
                        (s.witness.at_infinity ? std::string("infinity")
                                               : rational_to_string(s.witness.t));
            } else {
                human = "no local points";
            }
            emit(opt, j, human);
            return 0;
        }
        Json rows = Json::array();
        std::ostringstream out;
        AdelicReport full = adelic_solvable(X, *d, opt.max_depth, opt.seed);
        for (const PlaceOfL& w : places_of_L_above(d->d, v)) {
            for (const LocalSolvability& row : full.table)
                if (row.w == w) {
                    Json e = Json::object();
                    e["place"] = w.to_string();
                    e["solvable"] = row.solvable;
                    e["rule"] = row.rule;
                    if (row.has_witness) e["witness"] = symbol_witness_to_json(row.witness);
                    rows.push_back(e);
                    out << w.to_string() << ": "
                        << (row.solvable ? "solvable" : "no local points") << "  [" << row.rule
                        << "]\n";
                }
        }
        emit(opt, rows, out.str());
        return 0;
    }
    if (obstruction->parsed()) {
        ConicBundleData X = load_surface(file, opt);
        BmReport bm =
            bm_obstruction_quadratic(X, *parse_ext(ext), opt.max_depth, opt.precision, opt.seed);
        emit(opt, bm_to_json(bm), describe_bm(bm));
        return 0;
    }
    if (parity->parsed()) {
        Inv v = parity_criterion(parse_rational(a_s), parse_rational(c_s),
                                 QuadDisc::make(parse_rational(disc_s)));
        Json j = Json::object();
        j["parity"] = inv_to_string(v);
        emit(opt, j, inv_to_string(v));
        return 0;
    }
    if (hilbert->parsed()) {
        Inv v = hilbert_symbol(parse_rational(a_s), parse_rational(b_s), parse_place(place_s));
        Json j = Json::object();
        j["value"] = inv_to_string(v);
        emit(opt, j, inv_to_string(v));
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const LimitError& e) {
        std::cerr << "limit: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
