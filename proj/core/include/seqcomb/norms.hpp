#pragma once

#include <map>
#include <optional>

#include "seqcomb/family.hpp"
#include "seqcomb/rational.hpp"

namespace seqcomb {

// Finitely supported rational coefficient vector, indices >= 1.
using Vec = std::map<unsigned, Rat>;

enum class PNorm { one, two, inf };

// Certified enclosure lo <= value <= hi; exact when lo == hi.
struct RatInterval {
    Rat lo, hi;
    bool exact() const { return lo == hi; }
};

RatInterval sqrt_enclosure(const Rat& q, const Rat& tol);

struct MixedLayer {
    FamilyPtr g;
    Rat theta;
};

class SeqSpaceSpec {
public:
    enum class Kind { schreier, baernstein, mixed };

    static SeqSpaceSpec schreier(FamilyPtr g);
    static SeqSpaceSpec baernstein(FamilyPtr g, PNorm p);
    static SeqSpaceSpec mixed_layers(std::vector<MixedLayer> layers);
    // g_0 = S(0), g_n = base[g_{n-1}], theta_n = theta^n.
    static SeqSpaceSpec mixed_geometric(FamilyPtr base, const Rat& theta);

    Kind kind;
    FamilyPtr g;               // schreier / baernstein
    PNorm p = PNorm::one;      // baernstein
    FamilyPtr base;            // geometric mixed
    Rat theta;                 // geometric mixed
    bool geometric = false;

    // n-th mixed layer; nullopt past the end of an explicit list.
    std::optional<MixedLayer> layer(unsigned n) const;

private:
    SeqSpaceSpec() = default;
    mutable std::vector<MixedLayer> layers_;
};

Rat schreier_norm(const FamilyPtr& g, const Vec& x);
RatInterval baernstein_norm(const FamilyPtr& g, PNorm p, const Vec& x);
Rat mixed_norm(const SeqSpaceSpec& spec, const Vec& x);
RatInterval space_norm(const SeqSpaceSpec& spec, const Vec& x);

// Best profile for the squared p=2 aggregate: value and the blocks used.
std::pair<Rat, std::vector<FinSet>> baernstein_sq_best(const FamilyPtr& g,
                                                       const Vec& x);

// Window-maximal members of g contained in e (nonempty ones).
std::vector<FinSet> maximal_members_within(const FamilyPtr& g, const FinSet& e);

// Scaled indicator functionals describing the norm on nonnegative vectors
// supported in e: ||a|| = max over (scale, F) of scale * sum_{i in F} a_i.
// Defined for schreier, mixed, and baernstein p in {1, inf}.
struct ScaledSet {
    Rat scale;
    FinSet support;
};
std::vector<ScaledSet> norm_functionals(const SeqSpaceSpec& spec,
                                        const FinSet& e);

// Whether every convex combination of {e_i : i in e} has norm >= eps.
// Exact for schreier/mixed/baernstein p in {1, inf}; tolerance-certified
// (default width 1e-9) for p = 2.
bool bset_member(const SeqSpaceSpec& spec, const Rat& eps, const FinSet& e);

// Exact minimal simplex norm for the LP-expressible kinds.
Rat bset_min_norm(const SeqSpaceSpec& spec, const FinSet& e);

struct WindowReport {
    unsigned window = 0;
    std::vector<FinSet> members;  // nonempty members; empty set always in
    bool hereditary = false;
    bool spreading = false;
    unsigned rank_lb = 0;  // height of the window-truncated extension tree
};

WindowReport bset_family_probe(const SeqSpaceSpec& spec, const Rat& eps,
                               unsigned n);

// Structural checks over an explicit window family (shared with probes).
WindowReport analyze_window(unsigned n, const std::vector<FinSet>& members);

}  // namespace seqcomb
