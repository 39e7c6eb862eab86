#include "seqcomb/ordinal.hpp"

#include <cctype>

namespace seqcomb {

Ordinal::Ordinal(const Nat& n) {
    if (n < 0) throw std::invalid_argument("ordinal from negative integer");
    if (n > 0) terms_.push_back(OrdTerm{Ordinal{}, n});
}

Ordinal::Ordinal(std::vector<OrdTerm> terms) : terms_(std::move(terms)) {
    check_invariants();
}

Ordinal Ordinal::omega() {
    return Ordinal{{OrdTerm{Ordinal(Nat(1)), 1}}};
}

void Ordinal::check_invariants() const {
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff < 1) throw std::invalid_argument("CNF coefficient < 1");
        if (i + 1 < terms_.size() && !(terms_[i + 1].exp < terms_[i].exp))
            throw std::invalid_argument("CNF exponents not strictly decreasing");
    }
}

bool Ordinal::is_finite() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero());
}

Nat Ordinal::finite_value() const {
    if (terms_.empty()) return 0;
    if (!is_finite()) throw std::domain_error("ordinal is infinite");
    return terms_[0].coeff;
}

bool Ordinal::operator==(const Ordinal& o) const {
    return compare(*this, o) == OrdCmp::equal;
}

bool Ordinal::operator<(const Ordinal& o) const {
    return compare(*this, o) == OrdCmp::less;
}

OrdCmp compare(const Ordinal& a, const Ordinal& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
        OrdCmp ce = compare(ta[i].exp, tb[i].exp);
        if (ce != OrdCmp::equal) return ce;
        if (ta[i].coeff != tb[i].coeff)
            return ta[i].coeff < tb[i].coeff ? OrdCmp::less : OrdCmp::greater;
    }
    if (ta.size() == tb.size()) return OrdCmp::equal;
    return ta.size() < tb.size() ? OrdCmp::less : OrdCmp::greater;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    const Ordinal& lead = b.terms()[0].exp;
    std::vector<OrdTerm> out;
    for (const auto& t : a.terms()) {
        if (compare(t.exp, lead) == OrdCmp::greater)
            out.push_back(t);
        else
            break;
    }
    size_t kept = out.size();
    out.insert(out.end(), b.terms().begin(), b.terms().end());
    if (kept < a.terms().size() &&
        compare(a.terms()[kept].exp, lead) == OrdCmp::equal)
        out[kept].coeff += a.terms()[kept].coeff;
    return Ordinal{std::move(out)};
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
    if (a.is_zero() || b.is_zero()) return Ordinal{};
    Ordinal acc;
    const Ordinal& alead = a.terms()[0].exp;
    for (const auto& t : b.terms()) {
        if (t.exp.is_zero()) {
            // a * c = w^{alead} * (c_1 * c) + tail of a
            std::vector<OrdTerm> part = a.terms();
            part[0].coeff *= t.coeff;
            acc = add(acc, Ordinal{std::move(part)});
        } else {
            acc = add(acc, Ordinal{{OrdTerm{add(alead, t.exp), t.coeff}}});
        }
    }
    return acc;
}

Ordinal omega_pow(const Ordinal& a) {
    return Ordinal{{OrdTerm{a, 1}}};
}

Ordinal pow_nat(const Ordinal& a, unsigned n) {
    Ordinal out{Nat(1)};
    for (unsigned i = 0; i < n; ++i) out = mul(out, a);
    return out;
}

OrdKind classify(const Ordinal& a) {
    if (a.is_zero()) return OrdKind::zero;
    return a.terms().back().exp.is_zero() ? OrdKind::successor : OrdKind::limit;
}

Ordinal fund_seq(const Ordinal& a, unsigned n) {
    if (classify(a) != OrdKind::limit)
        throw std::domain_error("fund_seq requires a limit ordinal");
    std::vector<OrdTerm> prefix = a.terms();
    OrdTerm last = prefix.back();
    prefix.pop_back();
    Ordinal head{std::move(prefix)};
    if (last.coeff > 1)
        head = add(head, Ordinal{{OrdTerm{last.exp, last.coeff - 1}}});
    if (classify(last.exp) == OrdKind::successor) {
        Ordinal d = pred(last.exp);
        if (n == 0) return head;
        return add(head, Ordinal{{OrdTerm{d, n}}});
    }
    return add(head, omega_pow(fund_seq(last.exp, n)));
}

Ordinal pred(const Ordinal& a) {
    if (classify(a) != OrdKind::successor)
        throw std::domain_error("pred requires a successor ordinal");
    std::vector<OrdTerm> t = a.terms();
    if (t.back().coeff == 1)
        t.pop_back();
    else
        t.back().coeff -= 1;
    return Ordinal{std::move(t)};
}

Ordinal sub_left(const Ordinal& a, const Ordinal& b) {
    if (compare(b, a) == OrdCmp::greater)
        throw std::domain_error("left subtraction requires b <= a");
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    size_t i = 0;
    while (i < ta.size() && i < tb.size() &&
           compare(ta[i].exp, tb[i].exp) == OrdCmp::equal &&
           ta[i].coeff == tb[i].coeff)
        ++i;
    if (i == tb.size())
        return Ordinal{std::vector<OrdTerm>(ta.begin() + i, ta.end())};
    std::vector<OrdTerm> out;
    if (compare(ta[i].exp, tb[i].exp) == OrdCmp::equal) {
        out.push_back(OrdTerm{ta[i].exp, ta[i].coeff - tb[i].coeff});
        out.insert(out.end(), ta.begin() + i + 1, ta.end());
    } else {
        out.insert(out.end(), ta.begin() + i, ta.end());
    }
    return Ordinal{std::move(out)};
}

std::string to_string(const Ordinal& a) {
    if (a.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : a.terms()) {
        if (!first) s += "+";
        first = false;
        if (t.exp.is_zero()) {
            s += t.coeff.str();
            continue;
        }
        if (t.exp == Ordinal{Nat(1)})
            s += "w";
        else
            s += "w^{" + to_string(t.exp) + "}";
        if (t.coeff != 1) s += "*" + t.coeff.str();
    }
    return s;
}

namespace {

struct OrdParser {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("ordinal parse error at position " +
                                    std::to_string(pos) + ": " + msg);
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    Nat number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        return Nat(s.substr(start, pos - start));
    }

    Ordinal sum() {
        Ordinal acc = term();
        while (eat('+')) acc = add(acc, term());
        return acc;
    }

    Ordinal term() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (s[pos] == 'w') {
            ++pos;
            Ordinal e{Nat(1)};
            if (eat('^')) {
                if (!eat('{')) fail("expected '{' after '^'");
                e = sum();
                if (!eat('}')) fail("expected '}'");
            }
            Nat c = 1;
            if (eat('*')) c = number();
            if (c < 1) fail("coefficient must be >= 1");
            return mul(omega_pow(e), Ordinal{c});
        }
        return Ordinal{number()};
    }
};

}  // namespace

Ordinal parse_ordinal(const std::string& text) {
    OrdParser p{text};
    Ordinal o = p.sum();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return o;
}

}  // namespace seqcomb
