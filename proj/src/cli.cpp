#include "gaussdioph/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <ostream>

#include "gaussdioph/factorization.hpp"
#include "gaussdioph/families.hpp"
#include "gaussdioph/mordell.hpp"
#include "gaussdioph/oracle.hpp"

namespace gaussdioph::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json factorization_json(const CanonicalFactorization& f) {
    ordered_json j;
    j["unit_exp"] = f.unit_exp.value();
    j["one_plus_i_exp"] = f.ramified_exp;
    ordered_json factors = ordered_json::array();
    for (const auto& pf : f.odd_factors)
        factors.push_back(ordered_json::array({to_string(pf.prime), pf.exp}));
    j["factors"] = std::move(factors);
    return j;
}

std::string factorization_text(const CanonicalFactorization& f) {
    std::vector<std::string> parts;
    if (f.unit_exp.value() != 0) parts.push_back("i^" + std::to_string(f.unit_exp.value()));
    if (f.ramified_exp == 1)
        parts.push_back("(1+i)");
    else if (f.ramified_exp > 1)
        parts.push_back("(1+i)^" + std::to_string(f.ramified_exp));
    for (const auto& pf : f.odd_factors) {
        std::string p = "(" + to_string(pf.prime) + ")";
        if (pf.exp > 1) p += "^" + std::to_string(pf.exp);
        parts.push_back(std::move(p));
    }
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += " * " + parts[i];
    return out;
}

std::string triple_text(const Triple& t) {
    return to_string(t.X) + ", " + to_string(t.Y) + ", " + to_string(t.Z);
}

ordered_json triple_json(const Triple& t) {
    ordered_json j;
    j["X"] = to_string(t.X);
    j["Y"] = to_string(t.Y);
    j["Z"] = to_string(t.Z);
    return j;
}

Triple parse_triple(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3)
        throw std::invalid_argument("triple must be three comma-separated Gaussian integers");
    return {parse_gaussian(parts[0]), parse_gaussian(parts[1]), parse_gaussian(parts[2])};
}

Family family_of(const std::string& text) {
    auto f = parse_family(text);
    if (!f)
        throw std::invalid_argument("unknown family '" + text + "' (expected A|B1|B2|C+|C-|D)");
    return *f;
}

int sign_of(const std::string& text) {
    if (text == "+") return +1;
    if (text == "-") return -1;
    throw std::invalid_argument("sign must be '+' or '-'");
}

unsigned env_threads() {
    const char* v = std::getenv("GAUSS_DIOPH_THREADS");
    if (v == nullptr) return 0;
    long n = std::atol(v);
    return n > 0 ? static_cast<unsigned>(n) : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic and quadratic Diophantine machinery over Z[i]"};
    app.require_subcommand(1);

    bool json = false;
    long seed = 0;
    app.add_flag("--json", json, "emit machine-readable JSON-lines");
    app.add_option("--seed", seed, "seed for randomized property runs");

    std::string arg_value, arg_second, arg_k, arg_v, arg_family, arg_triple;
    std::string arg_p, arg_q, arg_sign = "+";
    long arg_t = 0;
    long arg_bound = 1;
    bool arg_check = false;

    auto* cmd_classify = app.add_subcommand("classify", "parity class of a Gaussian integer");
    cmd_classify->add_option("value", arg_value)->required();

    auto* cmd_factor = app.add_subcommand("factor", "canonical factorization");
    cmd_factor->add_option("value", arg_value)->required();

    auto* cmd_prime = app.add_subcommand("prime", "Gaussian primality");
    cmd_prime->add_option("value", arg_value)->required();

    auto* cmd_gcd = app.add_subcommand("gcd", "canonical and Euclidean gcd");
    cmd_gcd->add_option("lhs", arg_value)->required();
    cmd_gcd->add_option("rhs", arg_second)->required();

    auto* cmd_mordell = app.add_subcommand("mordell", "all solutions of XY = kV^2, gcd(X,Y) in U");
    cmd_mordell->add_option("--k", arg_k)->required();
    cmd_mordell->add_option("--V", arg_v)->required();

    auto* cmd_solve = app.add_subcommand("solve", "parametric solution of a family");
    cmd_solve->add_option("--family", arg_family)->required();
    cmd_solve->add_option("--t", arg_t);
    cmd_solve->add_option("--P", arg_p)->required();
    cmd_solve->add_option("--Q", arg_q)->required();
    cmd_solve->add_option("--sign", arg_sign);

    auto* cmd_verify = app.add_subcommand("verify", "check a triple against a family");
    cmd_verify->add_option("--family", arg_family)->required();
    cmd_verify->add_option("--triple", arg_triple)->required();

    auto* cmd_reduce = app.add_subcommand("reduce", "reduce a solution to canonical form");
    cmd_reduce->add_option("--family", arg_family)->required();
    cmd_reduce->add_option("--triple", arg_triple)->required();

    auto* cmd_enumerate = app.add_subcommand("enumerate", "brute-force primitive solutions");
    cmd_enumerate->add_option("--family", arg_family)->required();
    cmd_enumerate->add_option("--bound", arg_bound)->required();
    cmd_enumerate->add_flag("--check", arg_check, "run the completeness cross-check");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_classify->parsed()) {
            ParityClass c = classify(parse_gaussian(arg_value));
            if (json) {
                ordered_json j;
                j["class"] = to_string(c);
                out << j.dump() << "\n";
            } else {
                out << to_string(c) << "\n";
            }
        } else if (cmd_factor->parsed()) {
            CanonicalFactorization f = factor(parse_gaussian(arg_value));
            if (json)
                out << factorization_json(f).dump() << "\n";
            else
                out << factorization_text(f) << "\n";
        } else if (cmd_prime->parsed()) {
            bool p = is_gaussian_prime(parse_gaussian(arg_value));
            if (json) {
                ordered_json j;
                j["prime"] = p;
                out << j.dump() << "\n";
            } else {
                out << (p ? "true" : "false") << "\n";
            }
        } else if (cmd_gcd->parsed()) {
            GaussianInt a = parse_gaussian(arg_value);
            GaussianInt b = parse_gaussian(arg_second);
            CanonicalFactorization fc = gcd_canonical(a, b);
            GaussianInt e = gcd_euclidean(a, b);
            if (json) {
                ordered_json j;
                j["canonical"] = to_string(fc.reconstruct());
                j["canonical_factorization"] = factorization_json(fc);
                j["euclidean"] = to_string(e);
                out << j.dump() << "\n";
            } else {
                out << "canonical: " << to_string(fc.reconstruct()) << " = "
                    << factorization_text(fc) << "\n";
                out << "euclidean: " << to_string(e) << "\n";
            }
        } else if (cmd_mordell->parsed()) {
            MordellInstance inst{parse_gaussian(arg_k), parse_gaussian(arg_v)};
            for (const MordellSolution& s : mordell_solutions(inst)) {
                if (json) {
                    ordered_json j;
                    j["t"] = s.t.value();
                    j["k1"] = to_string(s.k1);
                    j["k2"] = to_string(s.k2);
                    j["P"] = to_string(s.P);
                    j["Q"] = to_string(s.Q);
                    j["X"] = to_string(s.X());
                    j["Y"] = to_string(s.Y());
                    out << j.dump() << "\n";
                } else {
                    out << "t=" << s.t.value() << " k1=" << to_string(s.k1)
                        << " k2=" << to_string(s.k2) << " P=" << to_string(s.P)
                        << " Q=" << to_string(s.Q) << " X=" << to_string(s.X())
                        << " Y=" << to_string(s.Y()) << "\n";
                }
            }
        } else if (cmd_solve->parsed()) {
            Family f = family_of(arg_family);
            if (arg_t < 0 || arg_t > 3) throw std::invalid_argument("--t must be in 0..3");
            FamilyParams params{UnitPower(arg_t), parse_gaussian(arg_p), parse_gaussian(arg_q),
                                sign_of(arg_sign)};
            Triple t = generate(f, params);
            if (json) {
                ordered_json j;
                j["family"] = to_string(f);
                j["t"] = params.t.value();
                j["P"] = to_string(params.P);
                j["Q"] = to_string(params.Q);
                if (f == Family::B1) j["sign"] = params.sign > 0 ? "+" : "-";
                j["X"] = to_string(t.X);
                j["Y"] = to_string(t.Y);
                j["Z"] = to_string(t.Z);
                out << j.dump() << "\n";
            } else {
                out << triple_text(t) << "\n";
            }
        } else if (cmd_verify->parsed()) {
            Family f = family_of(arg_family);
            Triple t = parse_triple(arg_triple);
            auto form = satisfied_form(f, t);
            bool profile = false;
            bool profile_known = false;
            if (form) {
                try {
                    profile = divisibility_profile(f, t);
                    profile_known = true;
                } catch (const std::domain_error&) {
                    profile_known = false;  // solution but not primitive
                }
            }
            if (json) {
                ordered_json j;
                j["solution"] = form.has_value();
                if (form) j["form"] = *form == Form::Original ? "original" : "canonical";
                if (profile_known)
                    j["profile"] = profile;
                else
                    j["profile"] = nullptr;
                out << j.dump() << "\n";
            } else {
                if (!form) {
                    out << "solution=false\n";
                } else {
                    out << "solution=true form="
                        << (*form == Form::Original ? "original" : "canonical")
                        << " profile=" << (profile_known ? (profile ? "true" : "false") : "n/a")
                        << "\n";
                }
            }
        } else if (cmd_reduce->parsed()) {
            Family f = family_of(arg_family);
            Triple t = parse_triple(arg_triple);
            auto [canon, cert] = reduce_to_canonical(f, t);
            if (json) {
                ordered_json j;
                j["canonical"] = triple_json(canon);
                ordered_json c;
                c["source_slots"] = cert.source_slot;
                c["unit_powers"] = {cert.unit_pow[0].value(), cert.unit_pow[1].value(),
                                    cert.unit_pow[2].value()};
                j["certificate"] = std::move(c);
                out << j.dump() << "\n";
            } else {
                out << "canonical: " << triple_text(canon) << "\n";
                out << "certificate: sources=[" << cert.source_slot[0] << ","
                    << cert.source_slot[1] << "," << cert.source_slot[2] << "] unit_powers=["
                    << cert.unit_pow[0].value() << "," << cert.unit_pow[1].value() << ","
                    << cert.unit_pow[2].value() << "]\n";
            }
        } else if (cmd_enumerate->parsed()) {
            Family f = family_of(arg_family);
            SearchBox box{arg_bound};
            unsigned threads = env_threads();
            for (const Triple& t : enumerate_primitive(f, box, threads)) {
                if (json)
                    out << triple_json(t).dump() << "\n";
                else
                    out << triple_text(t) << "\n";
            }
            if (arg_check) {
                CrossCheckReport r = cross_check(f, box, threads);
                if (json) {
                    ordered_json j;
                    ordered_json rep;
                    rep["family"] = to_string(r.family);
                    rep["bound"] = r.bound;
                    rep["total"] = r.total;
                    rep["matched"] = r.matched;
                    rep["profile_failures"] = r.profile_failures;
                    rep["reduce_failures"] = r.reduce_failures;
                    ordered_json un = ordered_json::array();
                    for (const Triple& t : r.unmatched) un.push_back(triple_json(t));
                    rep["unmatched"] = std::move(un);
                    rep["hard_failure"] = r.hard_failure;
                    j["report"] = std::move(rep);
                    out << j.dump() << "\n";
                } else {
                    out << "report: total=" << r.total << " matched=" << r.matched
                        << " unmatched=" << r.unmatched.size()
                        << " profile_failures=" << r.profile_failures
                        << " reduce_failures=" << r.reduce_failures
                        << " hard_failure=" << (r.hard_failure ? "true" : "false") << "\n";
                    for (const Triple& t : r.unmatched) out << "unmatched: " << triple_text(t) << "\n";
                }
                if (r.hard_failure) return 3;
            }
        }
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace gaussdioph::cli
