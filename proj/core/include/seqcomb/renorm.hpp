#pragma once

#include "seqcomb/norms.hpp"

namespace seqcomb {

// A base sequence space viewed through its basis blocks; every interval
// decomposition of the index line is admissible at evaluation time.
struct FddBlocking {
    SeqSpaceSpec base;
};

// Exact dual norm sup{sum |y_i| v_i : ||v|| <= 1} via the functional
// description of the unit ball; defined for the LP-describable kinds.
Rat dual_norm(const SeqSpaceSpec& spec, const Vec& y);

// sup over interval decompositions of the support of the outer norm of the
// block-score profile; scores sit at the rightmost admissible positions
// (one past the support for the trailing block).
RatInterval vee_norm(const FddBlocking& xs, const SeqSpaceSpec& es,
                     const Vec& x);

// inf over full interval partitions; scores sit at the leftmost admissible
// positions (the last support point of each block).
RatInterval wedge_bracket(const FddBlocking& xs, const SeqSpaceSpec& es,
                          const Vec& x);

struct WedgeBounds {
    Rat lower, upper;
};

// Certified sandwich of the decomposition norm inf{sum of bracket values}:
// upper from coordinate-aligned decompositions and sign splits within
// budget, lower from dual certificates normalized by an upper bound on the
// dual-side sup quantity.
WedgeBounds wedge_norm_bounds(const FddBlocking& xs, const SeqSpaceSpec& es,
                              const Vec& x, unsigned budget);

// |<xstar, x>| <= (dual-side bracket of xstar) * (primal sup norm of x).
bool duality_pairing_check(const FddBlocking& xs, const SeqSpaceSpec& es,
                           const Vec& x, const Vec& xstar);

// Certified lower bound on max{||sum a_i x_i|| : x_i unit vectors supported
// in (m_{i-1}, m_i]} from normalized indicator candidates.
Rat block_seminorm_lb(const SeqSpaceSpec& es, const SetGen& m, const Vec& a,
                      unsigned candidates);

// Upper bound on the same quantity via the window functionals.
Rat block_seminorm_ub(const SeqSpaceSpec& es, const SetGen& m, const Vec& a);

struct TripReport {
    bool factor2, factor1;
};

// blocks[i-1] supported in (m_{i-1}, m_i] with bracket <= 1; checks the
// bracket of sum a_i * blocks[i] against twice (and once) the block
// seminorm upper bound of a.
TripReport trip_inequality_check(const FddBlocking& xs,
                                 const SeqSpaceSpec& es, const SetGen& m,
                                 const Vec& a,
                                 const std::vector<Vec>& blocks);

}  // namespace seqcomb
