#pragma once

#include <string>

#include "seqcomb/norms.hpp"
#include "seqcomb/ravg.hpp"

namespace seqcomb {

// Textual grammars used by the command-line front end; all parsers consume
// the whole input and throw std::invalid_argument with a position on error.
Rat parse_rational(const std::string& text);
FinSet parse_finset(const std::string& text);     // [2,5,9]
SetGen parse_setgen(const std::string& text);     // gen(prefix=[..],start=..,step=..)
FamilyPtr parse_family(const std::string& text);  // A(2), S(w), comb(..), pre(..), drv(..)
Vec parse_vector(const std::string& text);        // [1:1,2:-1/2]
ProbMeasure parse_measure(const std::string& text);  // {3:1/3,...}
SeqSpaceSpec parse_spec(const std::string& text);    // schreier(..) | baernstein(..) | mixed(..)

std::string to_string(const Vec& x);
std::string to_string(const SeqSpaceSpec& spec);

}  // namespace seqcomb
