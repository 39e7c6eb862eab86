#include "seqcomb/renorm.hpp"

#include <algorithm>
#include <stdexcept>

#include "seqcomb/lp.hpp"

namespace seqcomb {

namespace {

FinSet support_of(const Vec& x) {
    FinSet s;
    for (const auto& [i, v] : x)
        if (v != 0) s.push_back(i);
    return s;
}

Rat rat_abs(const Rat& v) { return v < 0 ? Rat(-v) : v; }

bool lp_describable(const SeqSpaceSpec& s) {
    return !(s.kind == SeqSpaceSpec::Kind::baernstein && s.p == PNorm::two);
}

// Chunk of the support: indices [a, b] into the support vector, the score of
// the restriction, and the profile position the score is placed at.
struct Chunk {
    size_t a, b;
    RatInterval score;
    unsigned pos;
};

// Calls f once per decomposition of the support into consecutive chunks.
// Positions follow the placement policy: rightmost admissible for sup-type
// quantities, leftmost for inf-type ones.
template <typename Score, typename Fn>
void for_each_chunking(const FinSet& s, bool rightmost, Score&& score,
                       Fn&& f) {
    size_t n = s.size();
    if (n == 0) return;
    std::vector<std::vector<std::optional<RatInterval>>> seg(
        n, std::vector<std::optional<RatInterval>>(n));
    auto seg_score = [&](size_t i, size_t j) -> const RatInterval& {
        if (!seg[i][j]) seg[i][j] = score(i, j);
        return *seg[i][j];
    };
    for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
        std::vector<Chunk> chunks;
        size_t a = 0;
        for (size_t i = 0; i < n; ++i) {
            if (i + 1 < n && !(mask & (1ul << i))) continue;
            Chunk c{a, i, seg_score(a, i), 0};
            if (rightmost)
                c.pos = i + 1 < n ? s[i + 1] - 1 : s.back() + 1;
            else
                c.pos = s[i];
            chunks.push_back(std::move(c));
            a = i + 1;
        }
        f(chunks);
    }
}

RatInterval profile_norm(const SeqSpaceSpec& es,
                         const std::vector<Chunk>& chunks) {
    Vec lo, hi;
    for (const Chunk& c : chunks) {
        if (c.score.lo != 0) lo[c.pos] = c.score.lo;
        if (c.score.hi != 0) hi[c.pos] = c.score.hi;
    }
    return {space_norm(es, lo).lo, space_norm(es, hi).hi};
}

Vec restrict_idx(const Vec& x, const FinSet& s, size_t a, size_t b) {
    Vec out;
    for (size_t i = a; i <= b; ++i) out[s[i]] = x.at(s[i]);
    return out;
}

}  // namespace

Rat dual_norm(const SeqSpaceSpec& spec, const Vec& y) {
    FinSet e;
    std::vector<Rat> w;
    for (const auto& [i, v] : y) {
        if (v == 0) continue;
        e.push_back(i);
        w.push_back(rat_abs(v));
    }
    if (e.empty()) return Rat(0);
    std::vector<ScaledSet> funcs = norm_functionals(spec, e);
    size_t n = e.size();
    std::vector<Rat> obj(n);
    for (size_t i = 0; i < n; ++i) obj[i] = -w[i];
    std::vector<LpRow> rows;
    for (const auto& f : funcs) {
        LpRow row{std::vector<Rat>(n, Rat(0)), LpRel::le, Rat(1)};
        for (unsigned v : f.support) {
            size_t i = std::lower_bound(e.begin(), e.end(), v) - e.begin();
            row.coeffs[i] = f.scale;
        }
        rows.push_back(std::move(row));
    }
    LpResult res = solve_lp(obj, rows);
    if (res.status == LpStatus::unbounded)
        throw std::domain_error("dual norm unbounded on this support");
    if (res.status != LpStatus::optimal)
        throw std::runtime_error("dual-norm LP did not solve");
    return -res.value;
}

RatInterval vee_norm(const FddBlocking& xs, const SeqSpaceSpec& es,
                     const Vec& x) {
    FinSet s = support_of(x);
    if (s.empty()) return {Rat(0), Rat(0)};
    RatInterval best{Rat(0), Rat(0)};
    for_each_chunking(
        s, /*rightmost=*/true,
        [&](size_t a, size_t b) {
            return space_norm(xs.base, restrict_idx(x, s, a, b));
        },
        [&](const std::vector<Chunk>& chunks) {
            RatInterval v = profile_norm(es, chunks);
            if (v.lo > best.lo) best.lo = v.lo;
            if (v.hi > best.hi) best.hi = v.hi;
        });
    return best;
}

RatInterval wedge_bracket(const FddBlocking& xs, const SeqSpaceSpec& es,
                          const Vec& x) {
    FinSet s = support_of(x);
    if (s.empty()) return {Rat(0), Rat(0)};
    std::optional<RatInterval> best;
    for_each_chunking(
        s, /*rightmost=*/false,
        [&](size_t a, size_t b) {
            return space_norm(xs.base, restrict_idx(x, s, a, b));
        },
        [&](const std::vector<Chunk>& chunks) {
            RatInterval v = profile_norm(es, chunks);
            if (!best) {
                best = v;
                return;
            }
            if (v.lo < best->lo) best->lo = v.lo;
            if (v.hi < best->hi) best->hi = v.hi;
        });
    return *best;
}

namespace {

// Exact inf-type quantity on the dual side: chunk scores are base dual
// norms, the outer aggregation is the dual norm of the profile.
Rat dual_wedge_bracket(const FddBlocking& xs, const SeqSpaceSpec& es,
                       const Vec& xstar) {
    FinSet s = support_of(xstar);
    if (s.empty()) return Rat(0);
    std::optional<Rat> best;
    for_each_chunking(
        s, /*rightmost=*/false,
        [&](size_t a, size_t b) {
            Rat v = dual_norm(xs.base, restrict_idx(xstar, s, a, b));
            return RatInterval{v, v};
        },
        [&](const std::vector<Chunk>& chunks) {
            Vec prof;
            for (const Chunk& c : chunks)
                if (c.score.lo != 0) prof[c.pos] = c.score.lo;
            Rat v = dual_norm(es, prof);
            if (!best || v < *best) best = v;
        });
    return *best;
}

// Upper bound on the dual-side sup quantity; the unbounded trailing
// placement is absorbed by splitting off the last chunk score (a coordinate
// functional has dual norm one at every position).
Rat dual_vee_upper(const FddBlocking& xs, const SeqSpaceSpec& es,
                   const Vec& xstar) {
    FinSet s = support_of(xstar);
    if (s.empty()) return Rat(0);
    Rat best = 0;
    for_each_chunking(
        s, /*rightmost=*/true,
        [&](size_t a, size_t b) {
            Rat v = dual_norm(xs.base, restrict_idx(xstar, s, a, b));
            return RatInterval{v, v};
        },
        [&](const std::vector<Chunk>& chunks) {
            Vec head;
            for (size_t i = 0; i + 1 < chunks.size(); ++i)
                if (chunks[i].score.lo != 0)
                    head[chunks[i].pos] = chunks[i].score.lo;
            Rat v = dual_norm(es, head) + chunks.back().score.lo;
            if (v > best) best = v;
        });
    return best;
}

Rat pairing(const Vec& x, const Vec& y) {
    Rat t = 0;
    for (const auto& [i, v] : x) {
        auto it = y.find(i);
        if (it != y.end()) t += v * it->second;
    }
    return t;
}

}  // namespace

WedgeBounds wedge_norm_bounds(const FddBlocking& xs, const SeqSpaceSpec& es,
                              const Vec& x, unsigned budget) {
    FinSet s = support_of(x);
    if (s.empty()) return {Rat(0), Rat(0)};
    size_t n = s.size();

    Rat upper = wedge_bracket(xs, es, x).hi;  // one-piece decomposition
    unsigned long tried = 0;
    for (unsigned long mask = 1;
         n > 1 && mask < (1ul << (n - 1)) && tried < std::max(budget, 1u);
         ++mask, ++tried) {
        Rat total = 0;
        size_t a = 0;
        for (size_t i = 0; i < n; ++i) {
            if (i + 1 < n && !(mask & (1ul << i))) continue;
            total += wedge_bracket(xs, es, restrict_idx(x, s, a, i)).hi;
            a = i + 1;
        }
        if (total < upper) upper = total;
    }
    Vec pos, neg;
    for (const auto& [i, v] : x) {
        if (v > 0) pos[i] = v;
        if (v < 0) neg[i] = v;
    }
    if (!pos.empty() && !neg.empty()) {
        Rat split = wedge_bracket(xs, es, pos).hi + wedge_bracket(xs, es, neg).hi;
        if (split < upper) upper = split;
    }

    // Coordinate certificates are valid against any decomposition.
    Rat lower = 0;
    for (unsigned i : s) {
        Rat v = rat_abs(x.at(i));
        if (v > lower) lower = v;
    }
    if (lp_describable(xs.base) && lp_describable(es)) {
        std::vector<Vec> cands;
        Vec full;
        for (unsigned i : s) full[i] = x.at(i) > 0 ? Rat(1) : Rat(-1);
        cands.push_back(full);
        for (const auto& f : norm_functionals(xs.base, s)) {
            Vec c;
            for (unsigned i : f.support) c[i] = x.at(i) > 0 ? Rat(1) : Rat(-1);
            cands.push_back(std::move(c));
            if (cands.size() >= budget + 1) break;
        }
        for (const auto& cand : cands) {
            Rat den = dual_vee_upper(xs, es, cand);
            if (den == 0) continue;
            Rat v = rat_abs(pairing(cand, x)) / den;
            if (v > lower) lower = v;
        }
    }
    return {lower, upper};
}

bool duality_pairing_check(const FddBlocking& xs, const SeqSpaceSpec& es,
                           const Vec& x, const Vec& xstar) {
    Rat p = rat_abs(pairing(xstar, x));
    if (p == 0) return true;
    Rat dw = dual_wedge_bracket(xs, es, xstar);
    return p <= dw * vee_norm(xs, es, x).hi;
}

namespace {

std::pair<unsigned, unsigned> block_range(const SetGen& m, unsigned i) {
    unsigned lo = i == 1 ? 1 : m.nth(i - 1) + 1;
    return {lo, m.nth(i)};
}

}  // namespace

Rat block_seminorm_ub(const SeqSpaceSpec& es, const SetGen& m, const Vec& a) {
    FinSet idx = support_of(a);
    if (idx.empty()) return Rat(0);
    unsigned w = m.nth(idx.back());
    FinSet window;
    for (unsigned j = 1; j <= w; ++j) window.push_back(j);
    Rat best = 0;
    for (const auto& f : norm_functionals(es, window)) {
        Rat total = 0;
        for (unsigned i : idx) {
            auto [lo, hi] = block_range(m, i);
            Vec part;
            for (unsigned j : f.support)
                if (lo <= j && j <= hi) part[j] = 1;
            if (part.empty()) continue;
            total += rat_abs(a.at(i)) * f.scale * dual_norm(es, part);
        }
        if (total > best) best = total;
    }
    return best;
}

Rat block_seminorm_lb(const SeqSpaceSpec& es, const SetGen& m, const Vec& a,
                      unsigned candidates) {
    FinSet idx = support_of(a);
    if (idx.empty()) return Rat(0);
    // Normalized indicator candidates per block: all prefixes of the block.
    std::vector<std::vector<Vec>> per_block;
    for (unsigned i : idx) {
        auto [lo, hi] = block_range(m, i);
        std::vector<Vec> cands;
        Vec cur;
        for (unsigned j = lo; j <= hi; ++j) {
            cur[j] = 1;
            Rat nrm = space_norm(es, cur).hi;
            if (nrm == 0) continue;
            Vec scaled;
            for (const auto& [k, v] : cur) scaled[k] = v / nrm;
            cands.push_back(std::move(scaled));
        }
        if (cands.empty()) return Rat(0);
        per_block.push_back(std::move(cands));
    }
    Rat best = 0;
    std::vector<size_t> pick(per_block.size(), 0);
    unsigned long evals = 0;
    for (;;) {
        Vec z;
        for (size_t t = 0; t < per_block.size(); ++t)
            for (const auto& [k, v] : per_block[t][pick[t]])
                z[k] = a.at(idx[t]) * v;
        Rat v = space_norm(es, z).lo;
        if (v > best) best = v;
        if (++evals >= std::max(candidates, 1u)) break;
        size_t t = 0;
        while (t < pick.size() && ++pick[t] == per_block[t].size())
            pick[t++] = 0;
        if (t == pick.size()) break;
    }
    return best;
}

TripReport trip_inequality_check(const FddBlocking& xs,
                                 const SeqSpaceSpec& es, const SetGen& m,
                                 const Vec& a,
                                 const std::vector<Vec>& blocks) {
    Vec y;
    for (size_t t = 0; t < blocks.size(); ++t) {
        auto [lo, hi] = block_range(m, static_cast<unsigned>(t + 1));
        auto it = a.find(static_cast<unsigned>(t + 1));
        Rat coeff = it == a.end() ? Rat(0) : it->second;
        for (const auto& [j, v] : blocks[t]) {
            if (v == 0) continue;
            if (j < lo || j > hi)
                throw std::invalid_argument("block leaves its index range");
            if (coeff != 0) y[j] += coeff * v;
        }
    }
    for (const auto& [i, v] : a)
        if (v != 0 && i > blocks.size())
            throw std::invalid_argument("coefficient without a block");
    Rat lhs = wedge_bracket(xs, es, y).hi;
    Rat ub = block_seminorm_ub(es, m, a);
    return {lhs <= 2 * ub, lhs <= ub};
}

}  // namespace seqcomb
