#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace seqcomb {

using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace seqcomb
