#pragma once

#include "seqcomb/norms.hpp"

namespace seqcomb {

// K = {0} union over n of {theta_n * sum_{i in F} e*_i : F in g_n}.
struct FunctionalFamily {
    std::vector<MixedLayer> layers;
};

FunctionalFamily functional_family(std::vector<MixedLayer> layers);

// Layers of a mixed spec truncated where theta * window can no longer
// reach eps; the natural functional family of the space itself.
FunctionalFamily functional_family_of(const SeqSpaceSpec& spec,
                                      const Rat& eps, unsigned window);

// Certified ordinal bounds on the eps-derivation length of the layer
// functionals over a mixed space; never claimed exact values.
Ordinal szlenk_lower(const SeqSpaceSpec& spec, const Rat& eps);
Ordinal szlenk_upper(const SeqSpaceSpec& spec, const Rat& eps);

// Whether some layer functional pairs >= eps with a unit vector in every
// block (k_{i-1}, k_i] cut by e.
bool h_member(const SeqSpaceSpec& spec, const FunctionalFamily& k,
              const Rat& eps, const FinSet& e);

struct SandwichReport {
    WindowReport window;
    Ordinal lower_at_5eps;
    Ordinal upper_at_half_eps_doubled;
};

SandwichReport h_sandwich_probe(const SeqSpaceSpec& spec,
                                const FunctionalFamily& k, const Rat& eps,
                                unsigned window);

// gamma < w^xi and every supplied bound <= gamma^n.
bool factorization_condition(
    const Ordinal& xi, const Ordinal& gamma,
    const std::vector<std::pair<unsigned, Ordinal>>& sz_values);

// Rational upper bound, within tol, on
// sum_{n>=1} (n * 2^m + 2^m * (l * 2^n)^{1/s}) / 2^{(n-1)/beta};
// requires s > beta for convergence.
Rat factorization_constant(unsigned m, unsigned l, const Rat& beta,
                           const Rat& s, const Rat& tol);

}  // namespace seqcomb
