#pragma once

#include <random>
#include <vector>

#include "seqcomb/ordinal.hpp"

namespace testgen {

using seqcomb::Nat;
using seqcomb::Ordinal;
using seqcomb::OrdTerm;

// Random ordinal with exponent tower depth <= depth and small coefficients.
inline Ordinal random_ordinal(std::mt19937_64& rng, int depth = 2) {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<int> coeff(1, 4);
    std::uniform_int_distribution<int> finite_exp(0, 3);
    int k = nterms(rng);
    std::vector<Ordinal> exps;
    for (int i = 0; i < k; ++i) {
        Ordinal e = depth > 0 ? random_ordinal(rng, depth - 1)
                              : Ordinal{Nat(finite_exp(rng))};
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

}  // namespace testgen
