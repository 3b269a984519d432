// parehr: parametric weighted lattice-point counting for smooth polytopes.
//
// Subcommands: count, ehrhart, hstar, oracle, verify, signs, dilate.
// Exit codes: 0 success, 2 parse error, 3 degenerate/non-smooth geometry,
// 4 right-hand side outside the closed type cone, 5 verification mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "parehr/alcoved.hpp"
#include "parehr/errors.hpp"
#include "parehr/json_io.hpp"
#include "parehr/oracle.hpp"
#include "parehr/pipeline.hpp"

using nlohmann::json;
using namespace parehr;

namespace {

struct ProblemInput {
    HPolytope polytope{IntMat{{1}, {-1}}, IntVec{0, 0}};
    VarTable vars;
    MPoly weight;  // defaults to the constant weight 1
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == delim) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::int64_t parse_int(const std::string& s) {
    try {
        std::size_t used = 0;
        const std::int64_t v = std::stoll(s, &used);
        if (used != s.size()) throw ParseError("trailing characters in integer '" + s + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + s + "'");
    }
}

// "--alcoved d=2 b12=3,b13=5,b21=4,b23=8,b31=3,b32=0"
ProblemInput parse_alcoved(const std::vector<std::string>& tokens) {
    if (tokens.size() != 2 || tokens[0].rfind("d=", 0) != 0)
        throw ParseError("--alcoved expects: d=<dim> b12=..,b13=..,...");
    const int d = static_cast<int>(parse_int(tokens[0].substr(2)));
    AlcovedSpec spec(d, IntVec(static_cast<std::size_t>(d * (d + 1)), 0));
    const auto labels = spec.labels();
    std::vector<bool> seen(labels.size(), false);
    for (const std::string& item : split(tokens[1], ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("--alcoved: expected <label>=<int>, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        const auto it = std::find(labels.begin(), labels.end(), key);
        if (it == labels.end()) throw ParseError("--alcoved: unknown entry '" + key + "'");
        const auto idx = static_cast<std::size_t>(it - labels.begin());
        spec.b[idx] = parse_int(item.substr(eq + 1));
        seen[idx] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw ParseError("--alcoved: missing entry " + labels[i]);
    ProblemInput in{spec.polytope(), VarTable{}, MPoly(1)};
    in.vars.set_b_labels(labels);
    return in;
}

struct InputOptions {
    std::string input_file;
    std::string polytope_file;
    std::string weight_file;
    std::string weight_expr;
    std::vector<std::string> alcoved;

    void attach(CLI::App* cmd, bool with_weight = true) {
        cmd->add_option("--input", input_file,
                        "combined JSON file {\"polytope\": {...}, \"weight\": {...}}");
        cmd->add_option("--polytope", polytope_file, "polytope JSON file {\"A\":..., \"b0\":...}");
        cmd->add_option("--alcoved", alcoved,
                        "alcoved shorthand: d=<dim> b12=..,b13=..,... (canonical row order)")
            ->expected(2);
        if (with_weight) {
            cmd->add_option("--weight", weight_file, "weight JSON file {\"d\":..., \"terms\":...}");
            cmd->add_option("-w,--weight-expr", weight_expr,
                            "inline weight in x variables, e.g. \"x1*x2\" or \"-3*x1+2*x2\"");
        }
    }

    ProblemInput load() const {
        ProblemInput in;
        bool have_polytope = false;
        if (!input_file.empty()) {
            const json j = read_json_file(input_file);
            if (!j.contains("polytope")) throw ParseError("--input: missing \"polytope\"");
            auto pi = polytope_from_json(j.at("polytope"));
            in.polytope = pi.polytope;
            in.vars = pi.vars;
            in.weight = j.contains("weight")
                            ? weight_from_json(j.at("weight"), in.polytope.d())
                            : MPoly(1);
            have_polytope = true;
        }
        if (!alcoved.empty()) {
            if (have_polytope) throw ParseError("give either --input/--polytope or --alcoved, not both");
            in = parse_alcoved(alcoved);
            have_polytope = true;
        }
        if (!polytope_file.empty()) {
            if (have_polytope) throw ParseError("give either --input/--polytope or --alcoved, not both");
            auto pi = polytope_from_json(read_json_file(polytope_file));
            in.polytope = pi.polytope;
            in.vars = pi.vars;
            in.weight = MPoly(1);
            have_polytope = true;
        }
        if (!have_polytope) throw ParseError("no polytope given (use --input, --polytope or --alcoved)");
        if (!weight_file.empty())
            in.weight = weight_from_json(read_json_file(weight_file), in.polytope.d());
        if (!weight_expr.empty()) in.weight = MPoly::parse(weight_expr, VarTable{});
        WeightPoly::from_poly(in.weight);  // validates the block constraint
        return in;
    }
};

IntVec parse_b_vector(const std::string& csv, int expected_n) {
    IntVec b;
    for (const std::string& item : split(csv, ',')) b.push_back(parse_int(item));
    if (static_cast<int>(b.size()) != expected_n)
        throw ParseError("-b: expected " + std::to_string(expected_n) + " entries");
    return b;
}

// rejection sampler for integer points of the closed type cone near b0
struct ConeSampler {
    const HPolytope& P;
    const std::vector<VertexBasis>& bases;
    std::mt19937_64 rng;

    IntVec next() {
        std::uniform_int_distribution<int> scale(1, 3), bump(0, 3);
        for (int attempt = 0; attempt < 4000; ++attempt) {
            IntVec b(P.b0.size());
            const int s = scale(rng);
            for (std::size_t i = 0; i < b.size(); ++i) b[i] = s * P.b0[i] + bump(rng);
            if (in_type_cone(P, bases, b)) return b;
        }
        throw ExhaustedAttemptsError("could not sample a point of the type cone");
    }
};

json roots_to_json(const std::vector<std::complex<double>>& roots) {
    json arr = json::array();
    for (const auto& r : roots) arr.push_back({r.real(), r.imag()});
    return arr;
}

std::string format_b(const IntVec& b) {
    std::string s = "(";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(b[i]);
    }
    return s + ")";
}

int run(int argc, char** argv) {
    CLI::App app{"parametric weighted Ehrhart computations for smooth polytopes"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    bool as_json = false, pretty = false;
    std::string labels_csv;
    app.add_flag("--json", as_json, "machine-readable JSON output");
    app.add_flag("--pretty", pretty, "human-readable formulas (default)");
    app.add_option("--labels", labels_csv,
                   "comma-separated names for the b rows, e.g. b12,b13,... (overrides input labels)");

    InputOptions count_in, ehr_in, hstar_in, oracle_in, verify_in, dilate_in;
    std::string ehr_b, hstar_b, oracle_b, dilate_b;
    unsigned long hstar_r = 1;
    bool hstar_roots_flag = false;
    int verify_samples = 10;
    std::uint64_t verify_seed = 0, signs_seed = 0;
    int signs_d = 2, signs_m = 1, signs_samples = 100;
    std::int64_t signs_range = 8;
    unsigned long dilate_r = 1, dilate_scan_to = 0;

    auto* c_count = app.add_subcommand("count", "parametric weighted count as a polynomial in b");
    count_in.attach(c_count);

    auto* c_ehr = app.add_subcommand("ehrhart", "weighted Ehrhart polynomial at a concrete b");
    ehr_in.attach(c_ehr);
    c_ehr->add_option("-b,--b", ehr_b, "right-hand side, comma separated (default: b0)");
    bool ehr_symbolic = false;
    c_ehr->add_flag("--symbolic", ehr_symbolic,
                    "leave b symbolic: each t-coefficient printed as a polynomial in b");

    auto* c_hstar = app.add_subcommand("hstar", "weighted h*-polynomial (optionally of a dilate)");
    hstar_in.attach(c_hstar);
    c_hstar->add_option("-b,--b", hstar_b, "right-hand side, comma separated (default: b0)");
    c_hstar->add_option("-r,--r", hstar_r, "dilation factor (default 1)");
    c_hstar->add_flag("--roots", hstar_roots_flag, "also report complex roots");

    auto* c_oracle = app.add_subcommand("oracle", "brute-force counts and interpolated Ehrhart");
    oracle_in.attach(c_oracle);
    c_oracle->add_option("-b,--b", oracle_b, "right-hand side, comma separated (default: b0)");

    auto* c_verify = app.add_subcommand("verify", "pipeline vs brute force on random in-cone b");
    verify_in.attach(c_verify);
    c_verify->add_option("--samples", verify_samples, "number of random b vectors")->required();
    c_verify->add_option("--seed", verify_seed, "sampler seed (required)")->required();

    auto* c_signs = app.add_subcommand("signs", "sign-pattern census over random alcoved inputs");
    c_signs->add_option("--d", signs_d, "dimension (2 or 3)")->required();
    c_signs->add_option("--m", signs_m, "weight degree")->required();
    c_signs->add_option("--samples", signs_samples, "number of samples")->required();
    c_signs->add_option("--seed", signs_seed, "sampler seed (required)")->required();
    c_signs->add_option("--range", signs_range, "entry range for random alcoved b");

    auto* c_dilate = app.add_subcommand("dilate", "h* of dilates: single r or a sign-pattern scan");
    dilate_in.attach(c_dilate);
    c_dilate->add_option("-b,--b", dilate_b, "right-hand side, comma separated (default: b0)");
    c_dilate->add_option("-r,--r", dilate_r, "dilation factor");
    c_dilate->add_option("--scan-to", dilate_scan_to, "scan r = 1..N and report sign stability");

    CLI11_PARSE(app, argc, argv);

    auto emit = [&](const json& doc, const std::string& text) {
        if (as_json)
            std::cout << doc.dump(2) << "\n";
        else
            std::cout << text << "\n";
    };

    auto apply_labels = [&](ProblemInput& in) {
        if (labels_csv.empty()) return;
        auto labels = split(labels_csv, ',');
        if (labels.size() != static_cast<std::size_t>(in.polytope.n()))
            throw ParseError("--labels: expected " + std::to_string(in.polytope.n()) + " names");
        in.vars.set_b_labels(std::move(labels));
    };

    if (c_count->parsed()) {
        ProblemInput in = count_in.load();
        apply_labels(in);
        const auto pc = parametric_weighted_count(in.polytope, WeightPoly::from_poly(in.weight));
        emit(json{{"count", mpoly_to_json(pc.poly, in.vars)}}, pc.poly.str(in.vars));
        return 0;
    }

    if (c_ehr->parsed()) {
        ProblemInput in = ehr_in.load();
        apply_labels(in);
        const auto pc = parametric_weighted_count(in.polytope, WeightPoly::from_poly(in.weight));
        if (ehr_symbolic) {
            const auto sym = weighted_ehrhart_symbolic(pc);
            json arr = json::array();
            std::string text;
            for (unsigned k = 0; k <= sym.degree_cap; ++k) {
                arr.push_back(mpoly_to_json(sym.coeffs[k], in.vars));
                if (k) text += "\n";
                text += "c" + std::to_string(k) + "(b) = " + sym.coeffs[k].str(in.vars);
            }
            emit(json{{"count", mpoly_to_json(pc.poly, in.vars)},
                      {"ehrhart_symbolic", {{"t_coeffs", arr}}}},
                 text);
            return 0;
        }
        const IntVec b = ehr_b.empty() ? in.polytope.b0 : parse_b_vector(ehr_b, in.polytope.n());
        const auto e = weighted_ehrhart(pc, b);
        emit(json{{"count", mpoly_to_json(pc.poly, in.vars)}, {"ehrhart", ehrhart_to_json(e)}},
             "ehr(t) = " + up_str(e.coeffs, "t"));
        return 0;
    }

    if (c_hstar->parsed()) {
        ProblemInput in = hstar_in.load();
        apply_labels(in);
        const IntVec b = hstar_b.empty() ? in.polytope.b0 : parse_b_vector(hstar_b, in.polytope.n());
        const auto pc = parametric_weighted_count(in.polytope, WeightPoly::from_poly(in.weight));
        const auto e = weighted_ehrhart(pc, b);
        const auto h = hstar_dilated(e, hstar_r);
        json doc{{"count", mpoly_to_json(pc.poly, in.vars)},
                 {"ehrhart", ehrhart_to_json(e)},
                 {"hstar", hstar_to_json(h)},
                 {"signs", sign_pattern_str(sign_pattern(h))}};
        std::string text = "h*(z) = " + up_str(h.hstar, "z") +
                           "   signs: " + sign_pattern_str(sign_pattern(h));
        if (hstar_roots_flag) {
            const auto roots = hstar_roots(h);
            doc["roots"] = roots_to_json(roots);
            text += "\nroots:";
            for (const auto& r : roots) {
                text += " (" + std::to_string(r.real());
                if (r.imag() != 0.0) text += (r.imag() > 0 ? "+" : "") + std::to_string(r.imag()) + "i";
                text += ")";
            }
        }
        emit(doc, text);
        return 0;
    }

    if (c_oracle->parsed()) {
        ProblemInput in = oracle_in.load();
        apply_labels(in);
        const IntVec b = oracle_b.empty() ? in.polytope.b0 : parse_b_vector(oracle_b, in.polytope.n());
        const auto pts = oracle::lattice_points(in.polytope, b);
        const Rational weighted = oracle::weighted_count(in.polytope, b, in.weight);
        const auto e = oracle::ehrhart_by_interpolation(in.polytope, b,
                                                        WeightPoly::from_poly(in.weight));
        emit(json{{"lattice_count", pts.size()},
                  {"weighted", weighted.str()},
                  {"ehrhart_interp", ehrhart_to_json(e)}},
             "lattice points: " + std::to_string(pts.size()) + "\nweighted sum: " + weighted.str() +
                 "\nehr(t) by interpolation = " + up_str(e.coeffs, "t"));
        return 0;
    }

    if (c_verify->parsed()) {
        ProblemInput in = verify_in.load();
        apply_labels(in);
        const auto pc = parametric_weighted_count(in.polytope, WeightPoly::from_poly(in.weight));
        ConeSampler sampler{in.polytope, pc.bases, std::mt19937_64(verify_seed)};
        json failures = json::array();
        for (int i = 0; i < verify_samples; ++i) {
            const IntVec b = sampler.next();
            std::map<VarId, Rational> at;
            for (std::size_t k = 0; k < b.size(); ++k)
                at[VarId::b(static_cast<std::uint32_t>(k))] = Rational(b[k]);
            const Rational predicted = pc.poly.eval(at);
            const Rational actual = oracle::weighted_count(in.polytope, b, in.weight);
            if (predicted != actual) {
                failures.push_back({{"b", b}, {"pipeline", predicted.str()}, {"oracle", actual.str()}});
                std::cerr << "MISMATCH at b=" << format_b(b) << ": pipeline " << predicted.str()
                          << " vs oracle " << actual.str() << "\n";
            }
        }
        emit(json{{"samples", verify_samples}, {"failures", failures}},
             failures.empty() ? "verify: " + std::to_string(verify_samples) + " samples, all exact"
                              : "verify: MISMATCHES FOUND");
        return failures.empty() ? 0 : 5;
    }

    if (c_signs->parsed()) {
        std::mt19937_64 rng(signs_seed);
        std::uniform_int_distribution<int> coeff(-3, 3), nterms(1, 3), pick(0, signs_d - 1);
        json patterns = json::object();
        for (int sample = 0; sample < signs_samples; ++sample) {
            const AlcovedSpec spec = random_alcoved(signs_d, signs_range, rng);
            MPoly w;
            const int terms = nterms(rng);
            for (int t = 0; t < terms; ++t) {
                int c = 0;
                while (c == 0) c = coeff(rng);
                Monomial mono;
                for (int k = 0; k < signs_m; ++k) mono = mono.times(Monomial::var(VarId::x(pick(rng))));
                w += MPoly::term(Rational(c), mono);
            }
            if (w.is_zero()) continue;
            const HPolytope P = spec.polytope();
            const auto pc = parametric_weighted_count(P, WeightPoly::from_poly(w));
            const auto h = hstar_dilated(weighted_ehrhart(pc, P.b0), 1);
            const std::string pattern = sign_pattern_str(sign_pattern(h));
            if (!patterns.contains(pattern)) {
                patterns[pattern] = {{"count", 0},
                                     {"witness", {{"b", spec.b}, {"weight", weight_to_json(w, signs_d)}}}};
            }
            patterns[pattern]["count"] = patterns[pattern]["count"].get<int>() + 1;
        }
        std::string text = "sign-pattern census (d=" + std::to_string(signs_d) +
                           ", m=" + std::to_string(signs_m) + "):";
        for (const auto& [pat, info] : patterns.items())
            text += "\n  " + pat + "  x" + std::to_string(info.at("count").get<int>());
        emit(json{{"d", signs_d}, {"m", signs_m}, {"samples", signs_samples}, {"patterns", patterns}},
             text);
        return 0;
    }

    if (c_dilate->parsed()) {
        ProblemInput in = dilate_in.load();
        apply_labels(in);
        const IntVec b = dilate_b.empty() ? in.polytope.b0 : parse_b_vector(dilate_b, in.polytope.n());
        const auto pc = parametric_weighted_count(in.polytope, WeightPoly::from_poly(in.weight));
        const auto e = weighted_ehrhart(pc, b);
        if (dilate_scan_to == 0) {
            const auto h = hstar_dilated(e, dilate_r);
            emit(json{{"r", dilate_r}, {"hstar", hstar_to_json(h)},
                      {"signs", sign_pattern_str(sign_pattern(h))}},
                 "h*_{rP}(z) with r=" + std::to_string(dilate_r) + " : " + up_str(h.hstar, "z"));
            return 0;
        }
        json scan = json::array();
        unsigned long stable_from = 1;
        std::string text = "r-scan of sign patterns:";
        for (unsigned long r = 1; r <= dilate_scan_to; ++r) {
            const auto h = hstar_dilated(e, r);
            const auto signs = sign_pattern(h);
            const bool uniform =
                std::all_of(signs.begin(), signs.end(), [&](int s) { return s == signs[0] && s != 0; });
            if (!uniform) stable_from = r + 1;
            scan.push_back({{"r", r}, {"signs", sign_pattern_str(signs)}});
            if (r <= 20 || r == dilate_scan_to)
                text += "\n  r=" + std::to_string(r) + "  " + sign_pattern_str(signs);
        }
        text += "\nsigns uniform for all r >= " + std::to_string(stable_from);
        emit(json{{"scan", scan}, {"stable_from", stable_from}}, text);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const OutsideTypeConeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const NotSmoothError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DegenerateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const UnboundedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
