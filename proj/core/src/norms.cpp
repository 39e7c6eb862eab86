#include "seqcomb/norms.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "seqcomb/lp.hpp"

namespace seqcomb {

RatInterval sqrt_enclosure(const Rat& q, const Rat& tol) {
    using boost::multiprecision::cpp_int;
    if (q < 0) throw std::domain_error("sqrt of negative rational");
    if (q == 0) return {Rat(0), Rat(0)};
    cpp_int num = numerator(q), den = denominator(q);
    cpp_int rn = sqrt(num), rd = sqrt(den);
    if (rn * rn == num && rd * rd == den) {
        Rat v(rn, rd);
        return {v, v};
    }
    // floor(sqrt(q * K^2)) / K brackets the root to width 1/K <= tol.
    cpp_int k = 1;
    Rat inv_tol = 1 / tol;
    while (Rat(k) < inv_tol) k *= 10;
    cpp_int scaled = sqrt(cpp_int(num * k * k / den));
    return {Rat(scaled, k), Rat(scaled + 1, k)};
}

SeqSpaceSpec SeqSpaceSpec::schreier(FamilyPtr g) {
    SeqSpaceSpec s;
    s.kind = Kind::schreier;
    s.g = std::move(g);
    return s;
}

SeqSpaceSpec SeqSpaceSpec::baernstein(FamilyPtr g, PNorm p) {
    SeqSpaceSpec s;
    s.kind = Kind::baernstein;
    s.g = std::move(g);
    s.p = p;
    return s;
}

SeqSpaceSpec SeqSpaceSpec::mixed_layers(std::vector<MixedLayer> layers) {
    if (layers.empty() || layers[0].theta != 1)
        throw std::invalid_argument("mixed spec needs theta_0 = 1");
    for (size_t i = 1; i < layers.size(); ++i)
        if (!(layers[i].theta < layers[i - 1].theta))
            throw std::invalid_argument("mixed thetas must strictly decrease");
    SeqSpaceSpec s;
    s.kind = Kind::mixed;
    s.layers_ = std::move(layers);
    return s;
}

SeqSpaceSpec SeqSpaceSpec::mixed_geometric(FamilyPtr base, const Rat& theta) {
    if (!(theta > 0 && theta < 1))
        throw std::invalid_argument("theta must lie in (0,1)");
    SeqSpaceSpec s;
    s.kind = Kind::mixed;
    s.geometric = true;
    s.base = std::move(base);
    s.theta = theta;
    s.layers_.push_back(MixedLayer{fam_S(Ordinal{}), Rat(1)});
    return s;
}

std::optional<MixedLayer> SeqSpaceSpec::layer(unsigned n) const {
    if (kind != Kind::mixed) throw std::logic_error("not a mixed spec");
    if (!geometric) {
        if (n >= layers_.size()) return std::nullopt;
        return layers_[n];
    }
    while (layers_.size() <= n)
        layers_.push_back(MixedLayer{fam_comb(base, layers_.back().g),
                                     layers_.back().theta * theta});
    return layers_[n];
}

namespace {

struct Weighted {
    FinSet idx;            // support, ascending
    std::vector<Rat> w;    // |x_i| at each support point
};

Weighted abs_support(const Vec& x) {
    Weighted out;
    for (const auto& [i, v] : x) {
        if (v == 0) continue;
        out.idx.push_back(i);
        out.w.push_back(v < 0 ? -v : v);
    }
    return out;
}

Rat l1(const Weighted& s) {
    Rat t = 0;
    for (const auto& v : s.w) t += v;
    return t;
}

}  // namespace

Rat schreier_norm(const FamilyPtr& g, const Vec& x) {
    Weighted s = abs_support(x);
    std::vector<Rat> tail(s.idx.size() + 1, Rat(0));
    for (size_t i = s.idx.size(); i-- > 0;) tail[i] = tail[i + 1] + s.w[i];
    Rat best = 0;
    FinSet cur;
    auto dfs = [&](auto&& self, size_t i, const Rat& mass) -> void {
        if (mass > best) best = mass;
        if (i >= s.idx.size() || mass + tail[i] <= best) return;
        cur.push_back(s.idx[i]);
        if (member(g, cur)) self(self, i + 1, mass + s.w[i]);
        cur.pop_back();
        self(self, i + 1, mass);
    };
    dfs(dfs, 0, Rat(0));
    return best;
}

namespace {

// Best profile aggregate over successive g-sets inside the support,
// gain(block sum) summed across blocks; used for the p=1 and squared p=2
// Baernstein values.
struct ProfileDp {
    const FamilyPtr& g;
    const Weighted& s;
    std::function<Rat(const Rat&)> gain;
    std::vector<std::optional<Rat>> memo;

    explicit ProfileDp(const FamilyPtr& g, const Weighted& s,
                       std::function<Rat(const Rat&)> gain)
        : g(g), s(s), gain(std::move(gain)), memo(s.idx.size() + 1) {}

    Rat best(size_t i) {
        if (i >= s.idx.size()) return Rat(0);
        if (memo[i]) return *memo[i];
        Rat b = best(i + 1);  // leave s.idx[i] uncovered
        FinSet cur{s.idx[i]};
        if (member(g, cur)) grow(cur, s.w[i], i, b);
        memo[i] = b;
        return b;
    }

    void grow(FinSet& cur, const Rat& sum, size_t last, Rat& b) {
        Rat cand = gain(sum) + best(last + 1);
        if (cand > b) b = cand;
        for (size_t j = last + 1; j < s.idx.size(); ++j) {
            cur.push_back(s.idx[j]);
            if (member(g, cur)) grow(cur, sum + s.w[j], j, b);
            cur.pop_back();
        }
    }

    // One best first block at position i, if covering i beats skipping it.
    struct Choice {
        FinSet block;
        size_t next;
    };
    std::optional<Choice> pick(size_t i) {
        Rat target = best(i);
        if (target == best(i + 1)) return std::nullopt;
        std::optional<Choice> found;
        FinSet cur{s.idx[i]};
        if (member(g, cur)) pick_grow(cur, s.w[i], i, target, found);
        return found;
    }

    void pick_grow(FinSet& cur, const Rat& sum, size_t last, const Rat& target,
                   std::optional<Choice>& found) {
        if (found) return;
        if (gain(sum) + best(last + 1) == target) {
            found = Choice{cur, last + 1};
            return;
        }
        for (size_t j = last + 1; j < s.idx.size() && !found; ++j) {
            cur.push_back(s.idx[j]);
            if (member(g, cur)) pick_grow(cur, sum + s.w[j], j, target, found);
            cur.pop_back();
        }
    }
};

}  // namespace

std::pair<Rat, std::vector<FinSet>> baernstein_sq_best(const FamilyPtr& g,
                                                       const Vec& x) {
    Weighted s = abs_support(x);
    ProfileDp dp(g, s, [](const Rat& v) { return v * v; });
    Rat value = dp.best(0);
    std::vector<FinSet> blocks;
    size_t i = 0;
    while (i < s.idx.size()) {
        auto c = dp.pick(i);
        if (!c) {
            ++i;
            continue;
        }
        blocks.push_back(c->block);
        i = c->next;
    }
    return {value, blocks};
}

RatInterval baernstein_norm(const FamilyPtr& g, PNorm p, const Vec& x) {
    if (p == PNorm::inf) {
        Rat v = schreier_norm(g, x);
        return {v, v};
    }
    if (p == PNorm::one) {
        Weighted s = abs_support(x);
        ProfileDp dp(g, s, [](const Rat& v) { return v; });
        Rat v = dp.best(0);
        return {v, v};
    }
    return sqrt_enclosure(baernstein_sq_best(g, x).first, Rat(1, 1000000000));
}

Rat mixed_norm(const SeqSpaceSpec& spec, const Vec& x) {
    if (spec.kind != SeqSpaceSpec::Kind::mixed)
        throw std::invalid_argument("mixed_norm needs a mixed spec");
    Rat total = l1(abs_support(x));
    Rat best = 0;
    for (unsigned n = 0;; ++n) {
        auto ly = spec.layer(n);
        if (!ly) break;
        if (ly->theta * total <= best) break;
        Rat v = ly->theta * schreier_norm(ly->g, x);
        if (v > best) best = v;
    }
    return best;
}

RatInterval space_norm(const SeqSpaceSpec& spec, const Vec& x) {
    switch (spec.kind) {
        case SeqSpaceSpec::Kind::schreier: {
            Rat v = schreier_norm(spec.g, x);
            return {v, v};
        }
        case SeqSpaceSpec::Kind::baernstein:
            return baernstein_norm(spec.g, spec.p, x);
        case SeqSpaceSpec::Kind::mixed: {
            Rat v = mixed_norm(spec, x);
            return {v, v};
        }
    }
    return {Rat(0), Rat(0)};
}

namespace {

void collect_members(const FamilyPtr& g, const FinSet& e,
                     std::vector<FinSet>& out) {
    FinSet cur;
    auto dfs = [&](auto&& self, size_t i) -> void {
        if (!cur.empty()) out.push_back(cur);
        for (size_t j = i; j < e.size(); ++j) {
            cur.push_back(e[j]);
            if (member(g, cur)) self(self, j + 1);
            cur.pop_back();
        }
    };
    dfs(dfs, 0);
}

std::vector<FinSet> maximal_of(std::vector<FinSet> sets) {
    std::vector<FinSet> out;
    for (const auto& a : sets) {
        bool dominated = false;
        for (const auto& b : sets) {
            if (a.size() >= b.size() || a == b) continue;
            if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(a);
    }
    return out;
}

bool decomposable(const FamilyPtr& g, const FinSet& u) {
    if (u.empty()) return true;
    for (size_t len = 1; len <= u.size(); ++len) {
        FinSet head(u.begin(), u.begin() + len);
        if (!member(g, head)) break;  // hereditary: prefixes fail afterwards
        if (decomposable(g, FinSet(u.begin() + len, u.end()))) return true;
    }
    return false;
}

void collect_decomposable(const FamilyPtr& g, const FinSet& e,
                          std::vector<FinSet>& out) {
    FinSet cur;
    auto dfs = [&](auto&& self, size_t i) -> void {
        if (!cur.empty()) out.push_back(cur);
        for (size_t j = i; j < e.size(); ++j) {
            cur.push_back(e[j]);
            if (decomposable(g, cur)) self(self, j + 1);
            cur.pop_back();
        }
    };
    dfs(dfs, 0);
}

}  // namespace

std::vector<FinSet> maximal_members_within(const FamilyPtr& g,
                                           const FinSet& e) {
    std::vector<FinSet> all;
    collect_members(g, e, all);
    return maximal_of(std::move(all));
}

std::vector<ScaledSet> norm_functionals(const SeqSpaceSpec& spec,
                                        const FinSet& e) {
    std::vector<ScaledSet> out;
    switch (spec.kind) {
        case SeqSpaceSpec::Kind::schreier:
            for (auto& f : maximal_members_within(spec.g, e))
                out.push_back({Rat(1), std::move(f)});
            break;
        case SeqSpaceSpec::Kind::baernstein: {
            if (spec.p == PNorm::two)
                throw std::invalid_argument(
                    "no exact functional description for p = 2");
            if (spec.p == PNorm::inf) {
                for (auto& f : maximal_members_within(spec.g, e))
                    out.push_back({Rat(1), std::move(f)});
            } else {
                std::vector<FinSet> unions;
                collect_decomposable(spec.g, e, unions);
                for (auto& f : maximal_of(std::move(unions)))
                    out.push_back({Rat(1), std::move(f)});
            }
            break;
        }
        case SeqSpaceSpec::Kind::mixed: {
            Rat cutoff(1, static_cast<unsigned long>(e.size()));
            for (unsigned n = 0;; ++n) {
                auto ly = spec.layer(n);
                if (!ly) break;
                if (n > 0 && ly->theta <= cutoff) break;
                for (auto& f : maximal_members_within(ly->g, e))
                    out.push_back({ly->theta, std::move(f)});
            }
            break;
        }
    }
    return out;
}

Rat bset_min_norm(const SeqSpaceSpec& spec, const FinSet& e) {
    if (e.empty()) throw std::invalid_argument("needs a nonempty set");
    size_t n = e.size();
    std::vector<ScaledSet> funcs = norm_functionals(spec, e);
    std::vector<Rat> obj(n + 1, Rat(0));
    obj[n] = 1;
    std::vector<LpRow> rows;
    for (const auto& f : funcs) {
        LpRow row{std::vector<Rat>(n + 1, Rat(0)), LpRel::le, Rat(0)};
        for (unsigned v : f.support) {
            size_t i = std::lower_bound(e.begin(), e.end(), v) - e.begin();
            row.coeffs[i] = f.scale;
        }
        row.coeffs[n] = -1;
        rows.push_back(std::move(row));
    }
    LpRow sum{std::vector<Rat>(n + 1, Rat(0)), LpRel::eq, Rat(1)};
    for (size_t i = 0; i < n; ++i) sum.coeffs[i] = 1;
    rows.push_back(std::move(sum));
    LpResult res = solve_lp(obj, rows);
    if (res.status != LpStatus::optimal)
        throw std::runtime_error("simplex-norm LP did not solve");
    return res.value;
}

namespace {

// Kelley cutting planes for the p = 2 minimal simplex norm; returns a
// certified enclosure of min over the simplex on e of the p = 2 norm.
RatInterval min_norm_p2(const FamilyPtr& g, const FinSet& e, const Rat& tol) {
    size_t n = e.size();
    std::vector<Rat> a(n, Rat(1, static_cast<unsigned long>(n)));
    std::vector<std::vector<Rat>> cuts;
    Rat lo = 0;
    std::optional<Rat> hi;
    for (int iter = 0; iter < 500; ++iter) {
        Vec x;
        for (size_t i = 0; i < n; ++i) x[e[i]] = a[i];
        auto [sq, blocks] = baernstein_sq_best(g, x);
        RatInterval v = sqrt_enclosure(sq, tol / 4);
        if (!hi || v.hi < *hi) hi = v.hi;
        if (v.hi == 0) return {Rat(0), Rat(0)};
        // Linear minorant of the norm through the current point.
        std::vector<Rat> cut(n, Rat(0));
        for (const FinSet& b : blocks) {
            Rat bsum = 0;
            for (unsigned k : b) bsum += x[k];
            for (unsigned k : b) {
                size_t i = std::lower_bound(e.begin(), e.end(), k) - e.begin();
                cut[i] = bsum / v.hi;
            }
        }
        cuts.push_back(std::move(cut));
        std::vector<Rat> obj(n + 1, Rat(0));
        obj[n] = 1;
        std::vector<LpRow> rows;
        for (const auto& c : cuts) {
            LpRow row{c, LpRel::le, Rat(0)};
            row.coeffs.push_back(Rat(-1));
            rows.push_back(std::move(row));
        }
        LpRow sum{std::vector<Rat>(n + 1, Rat(0)), LpRel::eq, Rat(1)};
        for (size_t i = 0; i < n; ++i) sum.coeffs[i] = 1;
        rows.push_back(std::move(sum));
        LpResult res = solve_lp(obj, rows);
        if (res.status != LpStatus::optimal)
            throw std::runtime_error("cutting-plane LP did not solve");
        if (res.value > lo) lo = res.value;
        if (*hi - lo <= tol) return {lo, *hi};
        a.assign(res.x.begin(), res.x.begin() + n);
    }
    throw std::runtime_error("p = 2 minimization did not certify in time");
}

}  // namespace

bool bset_member(const SeqSpaceSpec& spec, const Rat& eps, const FinSet& e) {
    if (e.empty()) return true;
    if (eps <= 0) return true;
    if (spec.kind == SeqSpaceSpec::Kind::baernstein && spec.p == PNorm::two) {
        RatInterval v = min_norm_p2(spec.g, e, Rat(1, 1000000000));
        if (v.lo >= eps) return true;
        if (v.hi < eps) return false;
        return true;  // within the certification tolerance of eps
    }
    return bset_min_norm(spec, e) >= eps;
}

WindowReport analyze_window(unsigned n, const std::vector<FinSet>& members) {
    WindowReport rep;
    rep.window = n;
    rep.members = members;
    auto in = [&](const FinSet& e) {
        return e.empty() ||
               std::find(members.begin(), members.end(), e) != members.end();
    };
    rep.hereditary = true;
    rep.spreading = true;
    for (const FinSet& e : members) {
        for (size_t drop = 0; drop < e.size(); ++drop) {
            FinSet sub;
            for (size_t i = 0; i < e.size(); ++i)
                if (i != drop) sub.push_back(e[i]);
            if (!in(sub)) rep.hereditary = false;
        }
        for (size_t i = 0; i < e.size(); ++i) {
            unsigned room = i + 1 < e.size() ? e[i + 1] : n + 1;
            if (e[i] + 1 >= room) continue;
            FinSet shifted = e;
            shifted[i] += 1;
            if (!in(shifted)) rep.spreading = false;
        }
    }
    // Height of the extension forest inside the window.
    auto height = [&](auto&& self, const FinSet& e) -> unsigned {
        unsigned h = 0;
        for (unsigned k = (e.empty() ? 1 : e.back() + 1); k <= n; ++k) {
            FinSet f = e;
            f.push_back(k);
            if (in(f)) h = std::max(h, self(self, f) + 1);
        }
        return h;
    };
    rep.rank_lb = height(height, {});
    return rep;
}

WindowReport bset_family_probe(const SeqSpaceSpec& spec, const Rat& eps,
                               unsigned n) {
    std::vector<FinSet> members;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        FinSet e;
        for (unsigned b = 0; b < n; ++b)
            if (mask & (1u << b)) e.push_back(b + 1);
        if (bset_member(spec, eps, e)) members.push_back(e);
    }
    return analyze_window(n, members);
}

}  // namespace seqcomb
