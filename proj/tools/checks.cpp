#include "checks.hpp"

#include <bit>
#include <numeric>
#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "seqcomb/family.hpp"
#include "seqcomb/norms.hpp"
#include "seqcomb/ravg.hpp"
#include "seqcomb/renorm.hpp"
#include "seqcomb/szlenk.hpp"

namespace seqcomb::checks {

namespace {

using Rng = std::mt19937_64;

Ordinal ord(unsigned long n) { return Ordinal(Nat(n)); }

void fail(SuiteResult& r, const std::string& msg) {
    r.pass = false;
    if (r.failures.size() < 5) r.failures.push_back(msg);
}

FinSet subset_of(unsigned long mask, unsigned n) {
    FinSet e;
    for (unsigned b = 0; b < n; ++b)
        if (mask & (1ul << b)) e.push_back(b + 1);
    return e;
}

Ordinal random_ordinal(Rng& rng, int depth = 2) {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<int> coeff(1, 4);
    std::uniform_int_distribution<int> finite_exp(0, 3);
    int k = nterms(rng);
    std::vector<Ordinal> exps;
    for (int i = 0; i < k; ++i) {
        Ordinal e = depth > 0 ? random_ordinal(rng, depth - 1)
                              : ord(static_cast<unsigned long>(finite_exp(rng)));
        bool dup = false;
        for (const auto& x : exps)
            if (x == e) dup = true;
        if (!dup) exps.push_back(e);
    }
    std::sort(exps.begin(), exps.end(),
              [](const Ordinal& a, const Ordinal& b) { return b < a; });
    std::vector<OrdTerm> terms;
    for (const auto& e : exps) terms.push_back(OrdTerm{e, Nat(coeff(rng))});
    return Ordinal{std::move(terms)};
}

// Coefficients are half-integers in [-2, 2].
Vec random_halfint_vec(Rng& rng, const FinSet& support) {
    std::uniform_int_distribution<int> num(-4, 4);
    Vec x;
    bool nonzero = false;
    for (unsigned i : support) {
        int k = num(rng);
        if (k != 0) nonzero = true;
        x[i] = Rat(k, 2);
    }
    if (!nonzero && !support.empty()) x[support.front()] = Rat(1, 2);
    return x;
}

std::string vec_str(const Vec& x) {
    std::string s = "[";
    bool first = true;
    for (const auto& [i, v] : x) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(i) + ":" + to_string(v);
    }
    return s + "]";
}

// --- criterion 1: closed-form derivative indices -------------------------

SuiteResult suite_cb_closed_forms(std::uint64_t) {
    SuiteResult r{"cb-closed-forms"};
    auto expect = [&](const FamilyPtr& g, const Ordinal& want) {
        ++r.cases;
        Ordinal got = cb_index(g);
        if (got != want)
            fail(r, to_string(g) + ": index " + to_string(got) + ", expected " +
                        to_string(want));
    };
    for (unsigned n = 1; n <= 8; ++n) expect(fam_A(n), ord(n + 1));
    expect(fam_S(ord(1)), add(Ordinal::omega(), ord(1)));
    expect(fam_S(ord(2)), add(omega_pow(ord(2)), ord(1)));
    for (unsigned m = 1; m <= 5; ++m)
        expect(fam_comb(fam_A(m), fam_S(ord(1))),
               add(mul(Ordinal::omega(), ord(m)), ord(1)));
    return r;
}

// --- criterion 2: closed-form ranks against the extrapolating oracle -----

SuiteResult suite_rank_oracle(std::uint64_t) {
    SuiteResult r{"rank-oracle"};
    std::vector<FamilyPtr> fams;
    for (unsigned n = 1; n <= 8; ++n) fams.push_back(fam_A(n));
    fams.push_back(fam_S(ord(1)));
    fams.push_back(fam_S(ord(2)));
    for (unsigned m = 1; m <= 5; ++m)
        fams.push_back(fam_comb(fam_A(m), fam_S(ord(1))));
    long long confirmed = 0, inconclusive = 0;
    // Larger sets first: their shallow explorations warm the oracle's cache,
    // letting the deeper small-set calls conclude within their work budget.
    std::vector<unsigned long> masks(1ul << 12);
    std::iota(masks.begin(), masks.end(), 0ul);
    std::sort(masks.begin(), masks.end(), [](unsigned long a, unsigned long b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    for (const auto& g : fams) {
        for (unsigned long mask : masks) {
            FinSet e = subset_of(mask, 12);
            if (!member(g, e)) continue;
            ++r.cases;
            try {
                Ordinal want = rank(g, e);
                Ordinal got = rank_oracle(g, e, 16);
                if (got != want)
                    fail(r, to_string(g) + " " + to_string(e) + ": rank " +
                                to_string(want) + ", oracle " + to_string(got));
                else
                    ++confirmed;
            } catch (const std::runtime_error&) {
                // The oracle declines positions whose extension chains
                // outrun its budget; only a value disagreement counts.
                ++inconclusive;
            }
        }
    }
    r.notes.push_back(std::to_string(confirmed) + " confirmed, " +
                      std::to_string(inconclusive) +
                      " inconclusive within the oracle budget");
    if (confirmed < 1000)
        fail(r, "too few conclusive oracle evaluations");
    return r;
}

// --- criterion 3: closed-form membership against exhaustive splits -------

SuiteResult suite_membership(std::uint64_t) {
    SuiteResult r{"membership"};
    std::vector<FamilyPtr> fams{
        fam_S(ord(1)),
        fam_S(ord(2)),
        fam_A(4),
        fam_comb(fam_A(2), fam_S(ord(1))),
        fam_pre(fam_S(ord(1)), SetGen{{}, 2, 2}),
    };
    for (const auto& g : fams) {
        for (unsigned long mask = 0; mask < (1ul << 10); ++mask) {
            FinSet e = subset_of(mask, 10);
            ++r.cases;
            if (member(g, e) != member_brute(g, e))
                fail(r, to_string(g) + " disagrees on " + to_string(e));
        }
    }
    return r;
}

// --- criterion 4: norm programs against chain enumeration ----------------

// Max over subsets of the support that belong to g of the absolute mass.
Rat brute_single_block(const FamilyPtr& g, const Vec& x) {
    FinSet supp;
    std::vector<Rat> w;
    for (const auto& [i, v] : x) {
        if (v == 0) continue;
        supp.push_back(i);
        w.push_back(v < 0 ? Rat(-v) : v);
    }
    Rat best = 0;
    unsigned n = static_cast<unsigned>(supp.size());
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        FinSet f;
        Rat sum = 0;
        for (unsigned b = 0; b < n; ++b)
            if (mask & (1ul << b)) {
                f.push_back(supp[b]);
                sum += w[b];
            }
        if (member(g, f) && sum > best) best = sum;
    }
    return best;
}

// Max over ordered chains of disjoint g-sets of the summed block gains.
Rat brute_chain(const FamilyPtr& g, const Vec& x, bool squared) {
    FinSet supp;
    std::vector<Rat> w;
    for (const auto& [i, v] : x) {
        if (v == 0) continue;
        supp.push_back(i);
        w.push_back(v < 0 ? Rat(-v) : v);
    }
    Rat best = 0;
    auto gain = [&](const Rat& v) { return squared ? Rat(v * v) : v; };
    std::function<void(size_t, const FinSet&, const Rat&, const Rat&)> go =
        [&](size_t i, const FinSet& cur, const Rat& sum, const Rat& acc) {
            if (i == supp.size()) {
                Rat total = acc + (cur.empty() ? Rat(0) : gain(sum));
                if (total > best) best = total;
                return;
            }
            go(i + 1, cur, sum, acc);  // leave supp[i] uncovered
            FinSet ext = cur;
            ext.push_back(supp[i]);
            if (member(g, ext)) go(i + 1, ext, sum + w[i], acc);
            if (!cur.empty() && member(g, {supp[i]}))
                go(i + 1, {supp[i]}, w[i], acc + gain(sum));
        };
    go(0, {}, Rat(0), Rat(0));
    return best;
}

SuiteResult suite_norm_brute(std::uint64_t seed) {
    SuiteResult r{"norm-brute"};
    Rng rng(seed);
    std::vector<FamilyPtr> fams{fam_S(ord(1)), fam_A(3), fam_S(ord(2))};
    std::uniform_int_distribution<unsigned long> mask(1, (1ul << 8) - 1);
    Rat width_cap(1, 1000000000);
    for (int t = 0; t < 500; ++t) {
        FinSet supp = subset_of(mask(rng), 8);
        Vec x = random_halfint_vec(rng, supp);
        const FamilyPtr& g = fams[t % fams.size()];
        ++r.cases;
        Rat single = brute_single_block(g, x);
        if (schreier_norm(g, x) != single) {
            fail(r, "single-block norm mismatch: " + to_string(g) + " " +
                        vec_str(x));
            continue;
        }
        if (baernstein_norm(g, PNorm::inf, x).lo != single)
            fail(r, "p=inf mismatch: " + to_string(g) + " " + vec_str(x));
        Rat chain1 = brute_chain(g, x, false);
        if (baernstein_norm(g, PNorm::one, x).lo != chain1)
            fail(r, "p=1 mismatch: " + to_string(g) + " " + vec_str(x));
        Rat chain2 = brute_chain(g, x, true);
        RatInterval enc = baernstein_norm(g, PNorm::two, x);
        if (enc.hi - enc.lo > width_cap || enc.lo < 0 ||
            enc.lo * enc.lo > chain2 || chain2 > enc.hi * enc.hi)
            fail(r, "p=2 enclosure misses the enumerated value: " +
                        to_string(g) + " " + vec_str(x));
    }
    return r;
}

// --- criterion 5: unit-ball probe recovers the cardinality families ------

SuiteResult suite_ball_identification(std::uint64_t) {
    SuiteResult r{"ball-identification"};
    SeqSpaceSpec spec = SeqSpaceSpec::baernstein(fam_S(Ordinal()), PNorm::two);
    for (unsigned m = 2; m <= 4; ++m) {
        ++r.cases;
        // Lower bound of 1/sqrt(m), certified to 1e-12; keeps the size-m
        // simplex barycenter strictly inside while excluding size m+1.
        Rat eps = sqrt_enclosure(Rat(1, m), Rat(1, Nat("1000000000000"))).lo;
        WindowReport rep = bset_family_probe(spec, eps, 10);
        std::set<FinSet> got(rep.members.begin(), rep.members.end());
        std::set<FinSet> want;
        for (unsigned long mask = 1; mask < (1ul << 10); ++mask) {
            FinSet e = subset_of(mask, 10);
            if (e.size() <= m) want.insert(e);
        }
        if (got != want)
            fail(r, "m=" + std::to_string(m) + ": " +
                        std::to_string(got.size()) + " members, expected " +
                        std::to_string(want.size()));
        if (!rep.hereditary || !rep.spreading || rep.rank_lb != m)
            fail(r, "m=" + std::to_string(m) + ": window structure off");
    }
    return r;
}

// --- criterion 6: averaged measures: mass, support, transport ------------

// One past the maximal block starting at sequence position pos, or nullopt
// if the walk would leave [1, cap] or run out of fuel.
std::optional<unsigned> after_block(const Ordinal& xi, const SetGen& m,
                                    unsigned pos, unsigned cap,
                                    unsigned& fuel) {
    if (fuel == 0) return std::nullopt;
    --fuel;
    unsigned v = m.nth(pos);
    if (v > cap) return std::nullopt;
    if (xi.is_zero()) return pos + 1;
    if (classify(xi) == OrdKind::limit)
        return after_block(add(fund_seq(xi, v), ord(1)), m, pos, cap, fuel);
    Ordinal d = sub_left(xi, ord(1));
    unsigned p = pos;
    for (unsigned i = 0; i < v; ++i) {
        auto nxt = after_block(d, m, p, cap, fuel);
        if (!nxt) return std::nullopt;
        p = *nxt;
    }
    return p;
}

// Largest n such that the first n maximal blocks stay within [1, cap].
unsigned feasible_blocks(const Ordinal& xi, const SetGen& m, unsigned cap,
                         unsigned want) {
    unsigned pos = 1, n = 0, fuel = 5000;
    while (n < want) {
        auto nxt = after_block(xi, m, pos, cap, fuel);
        if (!nxt) break;
        if (m.nth(*nxt - 1) > cap) break;
        pos = *nxt;
        ++n;
    }
    return n;
}

SuiteResult suite_averages(std::uint64_t seed) {
    SuiteResult r{"averages"};
    Rng rng(seed);
    std::uniform_int_distribution<unsigned> d_start1(1, 6), d_step1(1, 3);
    std::uniform_int_distribution<unsigned> d_start2(1, 3), d_step2(1, 2);
    std::uniform_int_distribution<unsigned> d_stepw(1, 5);
    std::uniform_int_distribution<unsigned> d_gap(0, 4);
    Ordinal xis[3] = {ord(1), ord(2), Ordinal::omega()};
    int made = 0;
    while (made < 200) {
        const Ordinal& xi = xis[made % 3];
        SetGen m;
        if (xi == Ordinal::omega()) {
            m = SetGen{{}, 1, d_stepw(rng)};
        } else if (xi == ord(1)) {
            m = SetGen{{}, d_start1(rng), d_step1(rng)};
        } else {
            m = SetGen{{}, d_start2(rng), d_step2(rng)};
        }
        unsigned n_max = feasible_blocks(xi, m, 60, 3);
        if (n_max == 0) continue;
        unsigned n =
            std::uniform_int_distribution<unsigned>(1, n_max)(rng);
        ++made;
        ++r.cases;
        std::string tag = "xi=" + to_string(xi) + " m=" + to_string(m) +
                          " n=" + std::to_string(n);
        try {
            ProbMeasure mu = repeated_average(xi, m, n);
            if (mu.mass() != 1) {
                fail(r, tag + ": mass " + to_string(mu.mass()));
                continue;
            }
            if (mu.support().empty() || mu.support().back() > 60) {
                fail(r, tag + ": support escapes the window");
                continue;
            }
            if (!support_check(xi, m, n)) {
                fail(r, tag + ": support is not the n-th maximal block");
                continue;
            }
            // Transport the first few measures onto a set sharing their
            // supports as a prefix; atoms must be reproduced exactly.
            std::vector<unsigned> indices;
            for (unsigned i = 1; i <= n_max; ++i)
                if (i == n || rng() % 2) indices.push_back(i);
            FinSet covered;
            for (unsigned i : indices) {
                FinSet s = repeated_average(xi, m, i).support();
                covered.insert(covered.end(), s.begin(), s.end());
            }
            std::sort(covered.begin(), covered.end());
            SetGen n2{covered, covered.back() + 1 + d_gap(rng),
                      1 + d_gap(rng)};
            if (!permanence_check(xi, m, indices, n2))
                fail(r, tag + ": transported atoms differ");
        } catch (const std::exception& ex) {
            fail(r, tag + ": " + ex.what());
        }
    }
    return r;
}

// --- criterion 7: interval restriction contracts both renorm programs ----

SuiteResult suite_restriction_contraction(std::uint64_t seed) {
    SuiteResult r{"restriction-contraction"};
    Rng rng(seed);
    std::vector<SeqSpaceSpec> bases{
        SeqSpaceSpec::schreier(fam_S(Ordinal())),
        SeqSpaceSpec::schreier(fam_A(2)),
        SeqSpaceSpec::baernstein(fam_S(ord(1)), PNorm::one),
    };
    std::vector<SeqSpaceSpec> outers{
        SeqSpaceSpec::schreier(fam_S(ord(1))),
        SeqSpaceSpec::schreier(fam_A(3)),
        SeqSpaceSpec::mixed_geometric(fam_A(2), Rat(1, 2)),
    };
    std::uniform_int_distribution<unsigned long> mask(1, (1ul << 8) - 1);
    std::uniform_int_distribution<unsigned> coord(1, 8);
    for (int t = 0; t < 300; ++t) {
        FinSet supp = subset_of(mask(rng), 8);
        while (supp.size() > 6) supp.pop_back();
        Vec x = random_halfint_vec(rng, supp);
        unsigned a = coord(rng), b = coord(rng);
        if (a > b) std::swap(a, b);
        Vec y;
        for (const auto& [i, v] : x)
            if (a <= i && i <= b) y[i] = v;
        FddBlocking xs{bases[t % bases.size()]};
        const SeqSpaceSpec& es = outers[(t / 3) % outers.size()];
        ++r.cases;
        std::string tag = vec_str(x) + " -> [" + std::to_string(a) + "," +
                          std::to_string(b) + "]";
        if (vee_norm(xs, es, y).hi > vee_norm(xs, es, x).hi)
            fail(r, "sup program grows under restriction: " + tag);
        if (wedge_bracket(xs, es, y).hi > wedge_bracket(xs, es, x).hi)
            fail(r, "inf program grows under restriction: " + tag);
    }
    return r;
}

// --- criterion 8: block-system inequality with and without the factor ----

SuiteResult suite_block_inequality(std::uint64_t seed) {
    SuiteResult r{"block-inequality"};
    Rng rng(seed);
    std::vector<SeqSpaceSpec> outers{
        SeqSpaceSpec::schreier(fam_S(ord(1))),
        SeqSpaceSpec::mixed_geometric(fam_A(2), Rat(1, 2)),
    };
    std::vector<SeqSpaceSpec> bases{
        SeqSpaceSpec::schreier(fam_S(Ordinal())),
        SeqSpaceSpec::schreier(fam_A(2)),
    };
    std::uniform_int_distribution<unsigned> d_start(2, 3), d_step(1, 2),
        d_k(2, 3);
    std::uniform_int_distribution<int> d_num(-4, 4);
    int factor1_pass = 0;
    for (int t = 0; t < 200; ++t) {
        SetGen m{{}, d_start(rng), d_step(rng)};
        unsigned k = d_k(rng);
        FddBlocking xs{bases[t % bases.size()]};
        const SeqSpaceSpec& es = outers[t % outers.size()];
        Vec a;
        for (unsigned i = 1; i <= k; ++i) {
            int c = d_num(rng);
            if (c == 0) c = 2;
            a[i] = Rat(c, 2);
        }
        std::vector<Vec> blocks;
        bool ok = true;
        for (unsigned i = 1; i <= k && ok; ++i) {
            unsigned lo = i == 1 ? 1 : m.nth(i - 1) + 1;
            unsigned hi = m.nth(i);
            FinSet range;
            for (unsigned j = lo; j <= hi; ++j) range.push_back(j);
            FinSet sub;
            for (unsigned j : range)
                if (rng() % 2) sub.push_back(j);
            if (sub.empty()) sub.push_back(range[rng() % range.size()]);
            std::sort(sub.begin(), sub.end());
            Vec v = random_halfint_vec(rng, sub);
            Rat nrm = wedge_bracket(xs, es, v).hi;
            if (nrm == 0) {
                ok = false;
                break;
            }
            for (auto& [j, c] : v) c /= nrm;
            blocks.push_back(std::move(v));
        }
        if (!ok) {
            --t;
            continue;
        }
        ++r.cases;
        TripReport rep = trip_inequality_check(xs, es, m, a, blocks);
        if (!rep.factor2)
            fail(r, "factor-2 inequality fails: m=" + to_string(m) +
                        " a=" + vec_str(a));
        if (rep.factor1) ++factor1_pass;
    }
    r.notes.push_back("factor-1 holds on " + std::to_string(factor1_pass) +
                      "/" + std::to_string(r.cases) + " systems");
    return r;
}

// --- criterion 9: layered index bounds and the convolution split ---------

SuiteResult suite_split_consistency(std::uint64_t seed) {
    SuiteResult r{"split-consistency"};
    std::vector<FamilyPtr> bases{fam_A(2), fam_A(3), fam_S(ord(1))};
    Rat thetas[2] = {Rat(1, 2), Rat(2, 3)};
    Rat epss[4] = {Rat(1, 8), Rat(1, 4), Rat(1, 2), Rat(1)};
    for (const auto& base : bases) {
        for (const Rat& theta : thetas) {
            SeqSpaceSpec spec = SeqSpaceSpec::mixed_geometric(base, theta);
            for (const Rat& eps : epss) {
                ++r.cases;
                Ordinal lower = szlenk_lower(spec, eps);
                Ordinal upper = szlenk_upper(spec, eps);
                unsigned nstar = 0;
                for (Rat t = theta; t >= eps; t *= theta) ++nstar;
                unsigned mcut = 0;
                for (Rat t = 1; !(t < 2 * eps); t *= theta) ++mcut;
                std::string tag = "base=" + to_string(base) +
                                  " theta=" + to_string(theta) +
                                  " eps=" + to_string(eps);
                if (nstar <= mcut) {
                    if (!(lower <= upper))
                        fail(r, tag + ": lower " + to_string(lower) +
                                    " exceeds upper " + to_string(upper));
                } else {
                    r.notes.push_back(tag + ": bounds cover disjoint depths (" +
                                      to_string(lower) + " vs " +
                                      to_string(upper) + ")");
                }
            }
        }
    }
    Rng rng(seed);
    std::vector<FamilyPtr> lefts{fam_A(2), fam_A(3), fam_S(ord(1))};
    std::vector<FamilyPtr> rights{fam_A(2), fam_S(ord(1))};
    std::uniform_int_distribution<unsigned long> mask(1, (1ul << 12) - 1);
    int made = 0;
    while (made < 1000) {
        const FamilyPtr& a = lefts[made % lefts.size()];
        const FamilyPtr& b = rights[made % rights.size()];
        FinSet f = subset_of(mask(rng), 12);
        if (f.empty() || !member(fam_comb(a, b), f)) continue;
        size_t cut = rng() % f.size();
        FinSet e(f.begin(), f.begin() + cut);
        ++made;
        ++r.cases;
        try {
            if (!comb_split_check(a, b, e, f))
                fail(r, "split fails: " + to_string(a) + "[" + to_string(b) +
                            "] e=" + to_string(e) + " f=" + to_string(f));
        } catch (const std::exception& ex) {
            fail(r, std::string("split threw: ") + ex.what());
        }
    }
    return r;
}

// --- criterion 10: block-pattern windows are hereditary and spreading ----

SuiteResult suite_window_structure(std::uint64_t seed) {
    SuiteResult r{"window-structure"};
    Rng rng(seed);
    std::vector<FamilyPtr> bases{fam_A(2), fam_A(3), fam_S(ord(1))};
    Rat thetas[3] = {Rat(1, 2), Rat(2, 3), Rat(3, 4)};
    std::uniform_int_distribution<unsigned> d_num(1, 8), d_den(1, 8);
    const unsigned window = 5;
    for (int t = 0; t < 50; ++t) {
        SeqSpaceSpec spec =
            SeqSpaceSpec::mixed_geometric(bases[t % 3], thetas[(t / 3) % 3]);
        unsigned num = d_num(rng), den = d_den(rng);
        if (num > den) std::swap(num, den);
        Rat eps(num, den);
        ++r.cases;
        std::string tag = "base=" + to_string(bases[t % 3]) +
                          " theta=" + to_string(thetas[(t / 3) % 3]) +
                          " eps=" + to_string(eps);
        FunctionalFamily k = functional_family_of(spec, eps, window);
        SandwichReport rep = h_sandwich_probe(spec, k, eps, window);
        if (!rep.window.hereditary) fail(r, tag + ": window not hereditary");
        if (!rep.window.spreading) fail(r, tag + ": window not spreading");
        if (!h_member(spec, k, eps, {}))
            fail(r, tag + ": empty pattern rejected");
        if (h_member(spec, k, Rat(3, 2), {1, 3}))
            fail(r, tag + ": pattern accepted above unit pairing");
    }
    return r;
}

// --- criterion 11: the index-growth condition and its monotonicity -------

SuiteResult suite_factor_condition(std::uint64_t seed) {
    SuiteResult r{"factor-condition"};
    Ordinal w = Ordinal::omega();
    {
        ++r.cases;
        std::vector<std::pair<unsigned, Ordinal>> data{
            {1, w}, {2, pow_nat(w, 3)}, {3, pow_nat(w, 5)}};
        if (!factorization_condition(w, omega_pow(ord(2)), data))
            fail(r, "powers-of-omega example rejected");
    }
    {
        ++r.cases;
        if (factorization_condition(w, omega_pow(w), {}))
            fail(r, "gamma at the ceiling accepted");
    }
    {
        ++r.cases;
        if (!factorization_condition(ord(2), w, {}))
            fail(r, "empty data below the ceiling rejected");
        if (factorization_condition(ord(1), w, {}))
            fail(r, "empty data at the ceiling accepted");
    }
    Rng rng(seed);
    Ordinal xis[3] = {ord(2), ord(3), w};
    for (int t = 0; t < 300; ++t) {
        const Ordinal& xi = xis[t % 3];
        Ordinal ceil = omega_pow(xi);
        Ordinal g1 = random_ordinal(rng, 1);
        Ordinal g2 = random_ordinal(rng, 1);
        if (!(g1 < ceil) || !(g2 < ceil)) continue;
        if (g2 < g1) std::swap(g1, g2);
        std::vector<std::pair<unsigned, Ordinal>> data;
        for (unsigned n = 1; n <= 1 + rng() % 3; ++n)
            data.emplace_back(n, random_ordinal(rng, 1));
        ++r.cases;
        if (factorization_condition(xi, g1, data) &&
            !factorization_condition(xi, g2, data))
            fail(r, "not monotone: xi=" + to_string(xi) + " g1=" +
                        to_string(g1) + " g2=" + to_string(g2));
    }
    return r;
}

// --- criterion 12: ordinal arithmetic laws --------------------------------

SuiteResult suite_ordinal_algebra(std::uint64_t seed) {
    SuiteResult r{"ordinal-algebra"};
    Rng rng(seed);
    std::uniform_int_distribution<unsigned> d_pow(0, 3);
    for (int t = 0; t < 10000; ++t) {
        Ordinal a = random_ordinal(rng), b = random_ordinal(rng),
                c = random_ordinal(rng);
        ++r.cases;
        std::string tag = "a=" + to_string(a) + " b=" + to_string(b) +
                          " c=" + to_string(c);
        if (add(add(a, b), c) != add(a, add(b, c)))
            fail(r, "addition not associative: " + tag);
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            fail(r, "multiplication not associative: " + tag);
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
            fail(r, "left distributivity fails: " + tag);
        if (b < c && !(add(a, b) < add(a, c)))
            fail(r, "addition not strictly monotone on the right: " + tag);
        if (b <= c && !(mul(a, b) <= mul(a, c)))
            fail(r, "multiplication not monotone on the right: " + tag);
        if (b <= c && !(add(b, a) <= add(c, a)))
            fail(r, "addition not monotone on the left: " + tag);
        unsigned i = d_pow(rng), j = d_pow(rng);
        if (pow_nat(a, i + j) != mul(pow_nat(a, i), pow_nat(a, j)))
            fail(r, "power homomorphism fails: " + tag);
        if (classify(a) == OrdKind::limit) {
            Ordinal prev = fund_seq(a, 1);
            if (!(prev < a)) fail(r, "approximant not below the limit: " + tag);
            for (unsigned n = 2; n <= 4; ++n) {
                Ordinal cur = fund_seq(a, n);
                if (!(prev < cur) || !(cur < a)) {
                    fail(r, "approximants not strictly increasing: " + tag);
                    break;
                }
                prev = cur;
            }
        }
    }
    return r;
}

struct SuiteEntry {
    const char* name;
    SuiteResult (*run)(std::uint64_t);
};

const SuiteEntry kSuites[] = {
    {"cb-closed-forms", suite_cb_closed_forms},
    {"rank-oracle", suite_rank_oracle},
    {"membership", suite_membership},
    {"norm-brute", suite_norm_brute},
    {"ball-identification", suite_ball_identification},
    {"averages", suite_averages},
    {"restriction-contraction", suite_restriction_contraction},
    {"block-inequality", suite_block_inequality},
    {"split-consistency", suite_split_consistency},
    {"window-structure", suite_window_structure},
    {"factor-condition", suite_factor_condition},
    {"ordinal-algebra", suite_ordinal_algebra},
};

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& s : kSuites) names.push_back(s.name);
    return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
    for (const auto& s : kSuites)
        if (name == s.name) return s.run(seed);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace seqcomb::checks
