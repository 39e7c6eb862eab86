#pragma once

#include <map>

#include "seqcomb/family.hpp"
#include "seqcomb/rational.hpp"

namespace seqcomb {

// Finitely supported rational probability measure on the naturals.
struct ProbMeasure {
    std::map<unsigned, Rat> atoms;

    Rat mass() const;
    FinSet support() const;
    Rat operator()(const FinSet& e) const;
    bool operator==(const ProbMeasure& o) const { return atoms == o.atoms; }
};

// The n-th level-xi averaged measure along the infinite set m.
ProbMeasure repeated_average(const Ordinal& xi, const SetGen& m, unsigned n);

// Support equals the n-th maximal S_xi block of m.
bool support_check(const Ordinal& xi, const SetGen& m, unsigned n);

// Transporting measures whose supports tile an initial segment of n2
// reproduces them atom for atom.
bool permanence_check(const Ordinal& xi, const SetGen& m,
                      const std::vector<unsigned>& indices, const SetGen& n2);

// max of mu(E) over members E of h contained in supp(mu).
Rat measure_max(const FamilyPtr& h, const ProbMeasure& mu);

std::string to_string(const ProbMeasure& mu);

}  // namespace seqcomb
