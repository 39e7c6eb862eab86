#include "seqcomb/szlenk.hpp"

#include <algorithm>
#include <stdexcept>

#include "seqcomb/renorm.hpp"

namespace seqcomb {

namespace {

Ordinal ord_nat(unsigned long n) { return Ordinal(Nat(n)); }

// cb_index values are always successors; peel the trailing unit.
Ordinal cb_minus_one(const Ordinal& cb) { return pred(cb); }

// Least g with a < w^g.
Ordinal least_pow_above(const Ordinal& a) {
    if (a.is_zero()) return Ordinal();
    return add(a.terms().front().exp, ord_nat(1));
}

void require_mixed(const SeqSpaceSpec& spec, const Rat& eps) {
    if (spec.kind != SeqSpaceSpec::Kind::mixed)
        throw std::invalid_argument("needs a mixed space");
    if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
}

}  // namespace

FunctionalFamily functional_family(std::vector<MixedLayer> layers) {
    for (size_t i = 1; i < layers.size(); ++i)
        if (!(layers[i].theta < layers[i - 1].theta))
            throw std::invalid_argument("layer weights must strictly decrease");
    return {std::move(layers)};
}

FunctionalFamily functional_family_of(const SeqSpaceSpec& spec,
                                      const Rat& eps, unsigned window) {
    if (spec.kind != SeqSpaceSpec::Kind::mixed)
        throw std::invalid_argument("needs a mixed space");
    std::vector<MixedLayer> layers;
    for (unsigned n = 0;; ++n) {
        auto ly = spec.layer(n);
        if (!ly) break;
        if (n > 0 && ly->theta * window < eps) break;
        layers.push_back(*ly);
    }
    return {std::move(layers)};
}

Ordinal szlenk_lower(const SeqSpaceSpec& spec, const Rat& eps) {
    require_mixed(spec, eps);
    Ordinal best = ord_nat(1);
    for (unsigned n = 0;; ++n) {
        auto ly = spec.layer(n);
        if (!ly) break;
        if (ly->theta < eps) {
            if (spec.geometric) break;
            continue;
        }
        Ordinal c = cb_index(ly->g);
        if (c > best) best = c;
    }
    return best;
}

Ordinal szlenk_upper(const SeqSpaceSpec& spec, const Rat& eps) {
    require_mixed(spec, eps);
    if (spec.geometric) {
        Ordinal alpha = cb_minus_one(cb_index(spec.base));
        if (alpha.is_zero())
            throw std::invalid_argument("degenerate geometric base");
        unsigned m = 0;
        Rat t = 1;
        while (!(t < 2 * eps)) {
            t *= spec.theta;
            ++m;
        }
        return add(pow_nat(alpha, m), ord_nat(1));
    }

    // Layered form: g_0 with index w^b + 1, then g_n = f_n[g_0].
    auto l0 = spec.layer(0);
    if (!l0) throw std::invalid_argument("no layers");
    Ordinal alpha0 = cb_minus_one(cb_index(l0->g));
    bool power_shaped = alpha0.is_zero() || (alpha0.terms().size() == 1 &&
                                             alpha0.terms()[0].coeff == 1);
    if (!power_shaped)
        throw std::invalid_argument("layer 0 is not a power-indexed family");
    std::string base_repr = to_string(l0->g);

    std::vector<Ordinal> cbs{cb_index(l0->g)};
    Ordinal gamma;
    for (unsigned n = 1;; ++n) {
        auto ly = spec.layer(n);
        if (!ly) break;
        if (ly->g->kind != Family::Kind::Comb ||
            to_string(ly->g->right) != base_repr)
            throw std::invalid_argument("layer is not built over layer 0");
        Ordinal fa = cb_minus_one(cb_index(ly->g->left));
        Ordinal g = least_pow_above(fa);
        if (g > gamma) gamma = g;
        cbs.push_back(cb_index(ly->g));
    }

    size_t m = cbs.size() - 1;
    Rat two_eps = 2 * eps;
    for (size_t n = 0; n < cbs.size(); ++n) {
        if (spec.layer(static_cast<unsigned>(n))->theta < two_eps) {
            m = n;
            break;
        }
    }
    Ordinal head;
    for (size_t n = 0; n <= m; ++n)
        if (cbs[n] > head) head = cbs[n];
    Ordinal split = std::max(head, add(omega_pow(gamma), ord_nat(1)));
    Ordinal generic;
    for (const Ordinal& c : cbs)
        if (c > generic) generic = c;
    return std::min(split, generic);
}

bool h_member(const SeqSpaceSpec& spec, const FunctionalFamily& k,
              const Rat& eps, const FinSet& e) {
    if (e.empty()) return !k.layers.empty();
    if (!is_valid_finset(e)) throw std::invalid_argument("invalid index set");
    if (eps > 1) return false;
    FinSet window;
    for (unsigned j = 1; j <= e.back(); ++j) window.push_back(j);
    for (const MixedLayer& ly : k.layers) {
        if (ly.theta * e.back() < eps) continue;  // dual mass cannot reach eps
        for (const FinSet& f : maximal_members_within(ly.g, window)) {
            bool ok = true;
            unsigned lo = 1;
            for (unsigned hi : e) {
                Vec part;
                for (unsigned j : f)
                    if (lo <= j && j <= hi) part[j] = 1;
                if (part.empty() ||
                    ly.theta * dual_norm(spec, part) < eps) {
                    ok = false;
                    break;
                }
                lo = hi + 1;
            }
            if (ok) return true;
        }
    }
    return false;
}

SandwichReport h_sandwich_probe(const SeqSpaceSpec& spec,
                                const FunctionalFamily& k, const Rat& eps,
                                unsigned window) {
    std::vector<FinSet> members;
    for (unsigned long mask = 1; mask < (1ul << window); ++mask) {
        FinSet e;
        for (unsigned b = 0; b < window; ++b)
            if (mask & (1ul << b)) e.push_back(b + 1);
        if (h_member(spec, k, eps, e)) members.push_back(e);
    }
    SandwichReport rep;
    rep.window = analyze_window(window, members);
    rep.lower_at_5eps = szlenk_lower(spec, 5 * eps);
    rep.upper_at_half_eps_doubled = mul(szlenk_upper(spec, eps / 2), ord_nat(2));
    return rep;
}

bool factorization_condition(
    const Ordinal& xi, const Ordinal& gamma,
    const std::vector<std::pair<unsigned, Ordinal>>& sz_values) {
    if (xi.is_zero()) throw std::invalid_argument("xi must be at least 1");
    if (!(gamma < omega_pow(xi))) return false;
    for (const auto& [n, bound] : sz_values)
        if (bound > pow_nat(gamma, n)) return false;
    return true;
}

namespace {

using boost::multiprecision::cpp_int;

Nat ipow(const Nat& b, unsigned long e) {
    Nat r = 1, base = b;
    for (unsigned long k = e; k; k >>= 1) {
        if (k & 1) r *= base;
        base *= base;
    }
    return r;
}

Nat iroot(const Nat& x, unsigned long q) {
    if (x <= 1) return x;
    Nat lo = 1, hi = Nat(1) << (msb(x) / q + 1);
    while (lo < hi) {
        Nat mid = (lo + hi + 1) / 2;
        if (ipow(mid, q) <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

Rat rpow_exact(const Rat& b, const Nat& p) {
    if (p > 1000000) throw std::invalid_argument("exponent too large");
    Rat r = 1, base = b;
    for (unsigned long k = p.convert_to<unsigned long>(); k; k >>= 1) {
        if (k & 1) r *= base;
        base *= base;
    }
    return r;
}

// Enclosure of b^e for b > 0, e >= 0 rational, denominators scaled by k.
RatInterval rpow(const Rat& b, const Rat& e, const Nat& k) {
    Rat bp = rpow_exact(b, numerator(e));
    unsigned long q = denominator(e).convert_to<unsigned long>();
    if (q == 1) return {bp, bp};
    Nat scaled = numerator(bp) * ipow(k, q) / denominator(bp);
    Nat r = iroot(scaled, q);
    return {Rat(r, k), Rat(r + 1, k)};
}

}  // namespace

Rat factorization_constant(unsigned m, unsigned l, const Rat& beta,
                           const Rat& s, const Rat& tol) {
    if (!(beta > 1) || !(s >= 1) || !(tol > 0))
        throw std::invalid_argument("need beta > 1, s >= 1, tol > 0");
    if (!(s > beta)) throw std::domain_error("series diverges unless s > beta");
    Rat inv_b = denominator(beta), inv_s = denominator(s);
    inv_b /= numerator(beta);
    inv_s /= numerator(s);
    Rat two_m = ipow(Nat(2), m);

    Nat k(1000000);
    unsigned long N = 16;
    for (int round = 0; round < 40; ++round) {
        RatInterval x = rpow(Rat(1, 2), inv_b, k);        // 2^{-1/beta}
        RatInterval rho = rpow(Rat(1, 2), inv_b - inv_s, k);  // term ratio
        if (!(x.hi < 1) || !(rho.hi < 1)) {
            k *= 1000;
            continue;
        }
        Rat up = 0, down = 0, xu_pow = 1, xl_pow = 1;
        for (unsigned long n = 1; n <= N; ++n) {
            RatInterval ln = rpow(Rat(l) * ipow(Nat(2), n), inv_s, k);
            up += two_m * (n + ln.hi) * xu_pow;
            down += two_m * (n + ln.lo) * xl_pow;
            xu_pow *= x.hi;
            xl_pow *= x.lo;
        }
        // xu_pow is now x.hi^N; geometric tails for both summands.
        Rat one_m_x = 1 - x.hi;
        Rat tail_a =
            two_m * ((N + 1) * xu_pow * one_m_x + x.hi * xu_pow) /
            (one_m_x * one_m_x);
        RatInterval lnext = rpow(Rat(l) * ipow(Nat(2), N + 1), inv_s, k);
        Rat tail_b = two_m * lnext.hi * xu_pow / (1 - rho.hi);
        if (tail_a + tail_b > tol / 4) {
            N *= 2;
            continue;
        }
        if (up - down > tol / 4) {
            k *= 1000;
            continue;
        }
        // Round up to a multiple of tol/4 so the bound stays certified but
        // prints as a short rational; total slack stays below tol.
        Rat v = up + tail_a + tail_b;
        Rat grid = tol / 4;
        Rat cells = v / grid;
        Nat q = numerator(cells) / denominator(cells);
        if (q * denominator(cells) < numerator(cells)) q += 1;
        return q * grid;
    }
    throw std::runtime_error("constant did not certify within tolerance");
}

}  // namespace seqcomb
