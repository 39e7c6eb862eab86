#pragma once

#include <vector>

#include "seqcomb/rational.hpp"

namespace seqcomb {

// Exact rational linear programming, dense two-phase simplex with Bland's
// rule. Minimizes c.x subject to row constraints and x >= 0.
enum class LpRel { le, eq, ge };

struct LpRow {
    std::vector<Rat> coeffs;
    LpRel rel;
    Rat rhs;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status;
    Rat value;
    std::vector<Rat> x;
};

LpResult solve_lp(const std::vector<Rat>& objective,
                  const std::vector<LpRow>& rows);

}  // namespace seqcomb
