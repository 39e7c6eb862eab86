#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "seqcomb/ordinal.hpp"

namespace seqcomb {

// Strictly increasing finite sequence of naturals >= 1.
using FinSet = std::vector<unsigned>;

bool is_valid_finset(const FinSet& e);

// Infinite set: prefix followed by the arithmetic tail start, start+step, ...
// with start > max(prefix).
struct SetGen {
    FinSet prefix;
    unsigned start = 1;
    unsigned step = 1;

    unsigned nth(unsigned i) const;  // 1-based
    FinSet map(const FinSet& e) const;
    // Position of v in the sequence (1-based), if present.
    std::optional<unsigned> index_of(unsigned v) const;
};

class Family;
using FamilyPtr = std::shared_ptr<const Family>;

// Symbolic regular family: A(n), S(xi), outer[inner] convolution,
// preimage under an infinite set, or iterated Cantor-Bendixson derivative.
class Family {
public:
    enum class Kind { An, S, Comb, Pre, Drv };

    Kind kind;
    unsigned n = 0;           // An
    Ordinal xi;               // S parameter / Drv order
    FamilyPtr left, right;    // Comb outer/inner; Pre/Drv base in left
    SetGen gen;               // Pre

private:
    Family() = default;
    friend FamilyPtr fam_A(unsigned n);
    friend FamilyPtr fam_S(const Ordinal& xi);
    friend FamilyPtr fam_comb(FamilyPtr outer, FamilyPtr inner);
    friend FamilyPtr fam_pre(FamilyPtr base, SetGen gen);
    friend FamilyPtr fam_drv(FamilyPtr base, const Ordinal& eta);
};

FamilyPtr fam_A(unsigned n);
FamilyPtr fam_S(const Ordinal& xi);  // at limit xi runs a sampled nesting check
FamilyPtr fam_comb(FamilyPtr outer, FamilyPtr inner);
FamilyPtr fam_pre(FamilyPtr base, SetGen gen);
FamilyPtr fam_drv(FamilyPtr base, const Ordinal& eta);

bool member(const FamilyPtr& g, const FinSet& e);
bool member_brute(const FamilyPtr& g, const FinSet& e);
bool is_maximal(const FamilyPtr& g, const FinSet& e);
Ordinal rank(const FamilyPtr& g, const FinSet& e);
Ordinal rank_oracle(const FamilyPtr& g, const FinSet& e, unsigned cap);
Ordinal cb_index(const FamilyPtr& g);
bool is_spread(const FinSet& e, const FinSet& f);
std::vector<FinSet> max_decomposition(const SetGen& m, const Ordinal& xi,
                                      unsigned count);
bool comb_split_check(const FamilyPtr& a, const FamilyPtr& b, const FinSet& e,
                      const FinSet& f);

// e with max(e)+1 appended; (1) for empty e.
FinSet ext(const FinSet& e);

std::string to_string(const FamilyPtr& g);
std::string to_string(const FinSet& e);
std::string to_string(const SetGen& m);

}  // namespace seqcomb
