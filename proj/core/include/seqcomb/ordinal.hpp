#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace seqcomb {

using Nat = boost::multiprecision::cpp_int;

struct OrdTerm;

// Countable ordinal below epsilon_0 in Cantor normal form:
// sum of w^{exp_i} * c_i with exponents strictly decreasing, c_i >= 1.
// Empty term list is 0.
class Ordinal {
public:
    Ordinal() = default;
    explicit Ordinal(const Nat& n);
    explicit Ordinal(std::vector<OrdTerm> terms);

    static Ordinal omega();

    const std::vector<OrdTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_finite() const;
    Nat finite_value() const;  // throws if not finite

    bool operator==(const Ordinal& o) const;
    bool operator!=(const Ordinal& o) const { return !(*this == o); }
    bool operator<(const Ordinal& o) const;
    bool operator<=(const Ordinal& o) const { return !(o < *this); }
    bool operator>(const Ordinal& o) const { return o < *this; }
    bool operator>=(const Ordinal& o) const { return !(*this < o); }

private:
    std::vector<OrdTerm> terms_;
    void check_invariants() const;
};

struct OrdTerm {
    Ordinal exp;
    Nat coeff;
};

enum class OrdCmp { less, equal, greater };
enum class OrdKind { zero, successor, limit };

OrdCmp compare(const Ordinal& a, const Ordinal& b);
Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
Ordinal omega_pow(const Ordinal& a);
Ordinal pow_nat(const Ordinal& a, unsigned n);
OrdKind classify(const Ordinal& a);

// Canonical fundamental sequence for limit ordinals: peel the last CNF term
// w^e * c; for e = d+1 the n-th element is prefix + w^e*(c-1) + w^d * n,
// for limit e it is prefix + w^e*(c-1) + w^{fund_seq(e, n)}.
Ordinal fund_seq(const Ordinal& a, unsigned n);

// Left subtraction: the unique c with b + c = a; requires b <= a.
Ordinal sub_left(const Ordinal& a, const Ordinal& b);

// Predecessor of a successor ordinal (strips one unit off the finite tail).
Ordinal pred(const Ordinal& a);

std::string to_string(const Ordinal& a);
Ordinal parse_ordinal(const std::string& text);

}  // namespace seqcomb
