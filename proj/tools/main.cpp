#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "checks.hpp"
#include "seqcomb/parse.hpp"
#include "seqcomb/renorm.hpp"
#include "seqcomb/szlenk.hpp"

namespace {

using json = nlohmann::json;
using namespace seqcomb;

bool g_json = false;

void emit(const json& j, const std::string& text) {
    if (g_json)
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

std::string interval_str(const RatInterval& v) {
    if (v.exact()) return to_string(v.lo);
    return "[" + to_string(v.lo) + ", " + to_string(v.hi) + "]";
}

json interval_json(const RatInterval& v) {
    return {{"lo", to_string(v.lo)},
            {"hi", to_string(v.hi)},
            {"exact", v.exact()}};
}

// Default certification width, overridable through the environment.
Rat default_width() {
    if (const char* w = std::getenv("SEQCOMB_WIDTH")) return parse_rational(w);
    return Rat(1, 1000000000);
}

int run_check(const std::string& which, std::uint64_t seed) {
    std::vector<std::string> names;
    if (which == "all")
        names = checks::suite_names();
    else
        names.push_back(which);
    bool all_pass = true;
    json out;
    out["seed"] = seed;
    out["suites"] = json::array();
    if (!g_json) std::cout << "seed " << seed << "\n";
    for (const auto& name : names) {
        checks::SuiteResult r = checks::run_suite(name, seed);
        all_pass = all_pass && r.pass;
        if (g_json) {
            json s{{"name", r.name},
                   {"pass", r.pass},
                   {"cases", r.cases},
                   {"notes", r.notes},
                   {"failures", r.failures}};
            out["suites"].push_back(std::move(s));
        } else {
            std::cout << "suite " << r.name << ": "
                      << (r.pass ? "PASS" : "FAIL") << " (" << r.cases
                      << " cases)\n";
            for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
            for (const auto& f : r.failures)
                std::cout << "  counterexample: " << f << "\n";
        }
    }
    if (g_json) {
        out["pass"] = all_pass;
        std::cout << out.dump() << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sequence-space combinatorics toolkit"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string spec_s, fam_s, set_s, vec_s, measure_s, xi_s, gamma_s;
    std::string base_s, outer_s, eps_s, theta_s, data_path, which, suite;
    unsigned n = 1, count = 1, window = 0, budget = 64, m_par = 0, l_par = 1;
    std::string beta_s, s_par, tol_s = "1/1000000000";
    std::uint64_t seed = 0;

    auto* c_norm = app.add_subcommand("norm", "norm of a vector");
    c_norm->add_option("--spec", spec_s)->required();
    c_norm->add_option("--vec", vec_s)->required();

    auto* c_member = app.add_subcommand("member", "family membership");
    c_member->add_option("--family", fam_s)->required();
    c_member->add_option("--set", set_s)->required();

    auto* c_rank = app.add_subcommand("rank", "rank of a member");
    c_rank->add_option("--family", fam_s)->required();
    c_rank->add_option("--set", set_s)->required();

    auto* c_cb = app.add_subcommand("cb", "derivative index of a family");
    c_cb->add_option("--family", fam_s)->required();

    auto* c_maxdec =
        app.add_subcommand("maxdecomp", "maximal block decomposition");
    c_maxdec->add_option("--set", set_s)->required();
    c_maxdec->add_option("--xi", xi_s)->required();
    c_maxdec->add_option("--count", count)->required();

    auto* c_ravg = app.add_subcommand("ravg", "repeatedly averaged measure");
    c_ravg->add_option("--xi", xi_s)->required();
    c_ravg->add_option("--set", set_s)->required();
    c_ravg->add_option("--n", n)->required();

    auto* c_mmax =
        app.add_subcommand("measure-max", "maximal member mass of a measure");
    c_mmax->add_option("--family", fam_s)->required();
    c_mmax->add_option("--measure", measure_s)->required();

    auto* c_bset = app.add_subcommand(
        "bset", "simplex lower-norm membership / window probe");
    c_bset->add_option("--spec", spec_s)->required();
    c_bset->add_option("--eps", eps_s)->required();
    c_bset->add_option("--set", set_s);
    c_bset->add_option("--window", window);

    auto* c_vee = app.add_subcommand("vee", "sup over block decompositions");
    c_vee->add_option("--e", base_s)->required();
    c_vee->add_option("--x", outer_s)->required();
    c_vee->add_option("--vec", vec_s)->required();

    auto* c_wedge =
        app.add_subcommand("wedge", "inf over full block decompositions");
    c_wedge->add_option("--e", base_s)->required();
    c_wedge->add_option("--x", outer_s)->required();
    c_wedge->add_option("--vec", vec_s)->required();

    auto* c_wb = app.add_subcommand("wedge-bounds",
                                    "certified decomposition-norm sandwich");
    c_wb->add_option("--e", base_s)->required();
    c_wb->add_option("--x", outer_s)->required();
    c_wb->add_option("--vec", vec_s)->required();
    c_wb->add_option("--budget", budget);

    auto* c_sz = app.add_subcommand("szlenk", "derivation-length bounds");
    c_sz->add_option("bound", which, "lower or upper")
        ->required()
        ->check(CLI::IsMember({"lower", "upper"}));
    c_sz->add_option("--spec", spec_s)->required();
    c_sz->add_option("--eps", eps_s)->required();

    auto* c_hm = app.add_subcommand("hmember", "block-pattern membership");
    c_hm->add_option("--spec", spec_s)->required();
    c_hm->add_option("--eps", eps_s)->required();
    c_hm->add_option("--set", set_s)->required();
    c_hm->add_option("--window", window);

    auto* c_fchk =
        app.add_subcommand("factor-check", "index-growth condition");
    c_fchk->add_option("--xi", xi_s)->required();
    c_fchk->add_option("--gamma", gamma_s)->required();
    c_fchk->add_option("--data", data_path, "file of lines: n <ordinal>")
        ->required();

    auto* c_fc = app.add_subcommand("factor-const", "series constant bound");
    c_fc->add_option("--m", m_par)->required();
    c_fc->add_option("--l", l_par)->required();
    c_fc->add_option("--beta", beta_s)->required();
    c_fc->add_option("--s", s_par)->required();
    c_fc->add_option("--tol", tol_s);

    auto* c_check = app.add_subcommand("check", "run a property suite");
    c_check->add_option("suite", suite, "suite name or 'all'")->required();
    c_check->add_option("--seed", seed);

    // Let global options such as --format appear after the subcommand too.
    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    g_json = format == "json";
    try {
        if (*c_norm) {
            SeqSpaceSpec spec = parse_spec(spec_s);
            Vec x = parse_vector(vec_s);
            RatInterval v;
            if (spec.kind == SeqSpaceSpec::Kind::baernstein &&
                spec.p == PNorm::two)
                v = sqrt_enclosure(baernstein_sq_best(spec.g, x).first,
                                   default_width());
            else
                v = space_norm(spec, x);
            emit(interval_json(v), interval_str(v));
        } else if (*c_member) {
            bool v = member(parse_family(fam_s), parse_finset(set_s));
            emit({{"member", v}}, v ? "true" : "false");
        } else if (*c_rank) {
            Ordinal v = rank(parse_family(fam_s), parse_finset(set_s));
            emit({{"rank", to_string(v)}}, to_string(v));
        } else if (*c_cb) {
            Ordinal v = cb_index(parse_family(fam_s));
            emit({{"cb", to_string(v)}}, to_string(v));
        } else if (*c_maxdec) {
            auto blocks =
                max_decomposition(parse_setgen(set_s), parse_ordinal(xi_s), count);
            json arr = json::array();
            std::string text;
            for (const auto& b : blocks) {
                arr.push_back(to_string(b));
                if (!text.empty()) text += "\n";
                text += to_string(b);
            }
            emit({{"blocks", arr}}, text);
        } else if (*c_ravg) {
            ProbMeasure mu =
                repeated_average(parse_ordinal(xi_s), parse_setgen(set_s), n);
            emit({{"measure", to_string(mu)}}, to_string(mu));
        } else if (*c_mmax) {
            Rat v = measure_max(parse_family(fam_s), parse_measure(measure_s));
            emit({{"max", to_string(v)}}, to_string(v));
        } else if (*c_bset) {
            SeqSpaceSpec spec = parse_spec(spec_s);
            Rat eps = parse_rational(eps_s);
            if (!set_s.empty()) {
                bool v = bset_member(spec, eps, parse_finset(set_s));
                emit({{"member", v}}, v ? "true" : "false");
            } else if (window > 0) {
                WindowReport rep = bset_family_probe(spec, eps, window);
                json arr = json::array();
                for (const auto& e : rep.members) arr.push_back(to_string(e));
                emit({{"members", arr},
                      {"hereditary", rep.hereditary},
                      {"spreading", rep.spreading},
                      {"rank_lb", rep.rank_lb}},
                     "members " + std::to_string(rep.members.size()) +
                         "\nhereditary " +
                         (rep.hereditary ? "true" : "false") + "\nspreading " +
                         (rep.spreading ? "true" : "false") + "\nrank_lb " +
                         std::to_string(rep.rank_lb));
            } else {
                throw std::invalid_argument("bset needs --set or --window");
            }
        } else if (*c_vee) {
            RatInterval v = vee_norm(FddBlocking{parse_spec(base_s)},
                                     parse_spec(outer_s), parse_vector(vec_s));
            emit(interval_json(v), interval_str(v));
        } else if (*c_wedge) {
            RatInterval v =
                wedge_bracket(FddBlocking{parse_spec(base_s)},
                              parse_spec(outer_s), parse_vector(vec_s));
            emit(interval_json(v), interval_str(v));
        } else if (*c_wb) {
            WedgeBounds v =
                wedge_norm_bounds(FddBlocking{parse_spec(base_s)},
                                  parse_spec(outer_s), parse_vector(vec_s),
                                  budget);
            emit({{"lower", to_string(v.lower)}, {"upper", to_string(v.upper)}},
                 "[" + to_string(v.lower) + ", " + to_string(v.upper) + "]");
        } else if (*c_sz) {
            SeqSpaceSpec spec = parse_spec(spec_s);
            Rat eps = parse_rational(eps_s);
            Ordinal v = which == "lower" ? szlenk_lower(spec, eps)
                                         : szlenk_upper(spec, eps);
            emit({{which, to_string(v)}}, to_string(v));
        } else if (*c_hm) {
            SeqSpaceSpec spec = parse_spec(spec_s);
            Rat eps = parse_rational(eps_s);
            FinSet e = parse_finset(set_s);
            unsigned w = window > 0 ? window : (e.empty() ? 1 : e.back());
            FunctionalFamily k = functional_family_of(spec, eps, w);
            bool v = h_member(spec, k, eps, e);
            emit({{"member", v}}, v ? "true" : "false");
        } else if (*c_fchk) {
            std::ifstream in(data_path);
            if (!in) throw std::invalid_argument("cannot open " + data_path);
            std::vector<std::pair<unsigned, Ordinal>> data;
            std::string line;
            while (std::getline(in, line)) {
                std::istringstream ls(line);
                unsigned k;
                std::string rest;
                if (!(ls >> k)) continue;
                std::getline(ls, rest);
                data.emplace_back(k, parse_ordinal(rest));
            }
            bool v = factorization_condition(parse_ordinal(xi_s),
                                             parse_ordinal(gamma_s), data);
            emit({{"holds", v}}, v ? "true" : "false");
        } else if (*c_fc) {
            Rat v = factorization_constant(m_par, l_par, parse_rational(beta_s),
                                           parse_rational(s_par),
                                           parse_rational(tol_s));
            emit({{"bound", to_string(v)}}, to_string(v));
        } else if (*c_check) {
            return run_check(suite, seed);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
