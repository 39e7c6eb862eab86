#include "seqcomb/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace seqcomb {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument(msg + " at position " +
                                    std::to_string(i) + " in '" + s + "'");
    }
    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    char peek() {
        ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool try_eat(char c) {
        if (peek() != c) return false;
        ++i;
        return true;
    }
    void eat(char c) {
        if (!try_eat(c)) fail(std::string("expected '") + c + "'");
    }
    bool try_word(const std::string& w) {
        ws();
        if (s.compare(i, w.size(), w) != 0) return false;
        size_t end = i + w.size();
        if (end < s.size() &&
            (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_'))
            return false;
        i = end;
        return true;
    }
    unsigned number() {
        ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail("expected a number");
        unsigned long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000000ul) fail("number too large");
            ++i;
        }
        return static_cast<unsigned>(v);
    }
    Rat rational() {
        ws();
        bool neg = try_eat('-');
        Rat num = number();
        if (try_eat('/')) {
            unsigned den = number();
            if (den == 0) fail("zero denominator");
            num /= den;
        }
        return neg ? Rat(-num) : num;
    }
    // Balanced slice up to a top-level ',' or the closing ')' / ']'.
    std::string balanced() {
        ws();
        size_t start = i;
        int depth = 0;
        while (i < s.size()) {
            char c = s[i];
            if (c == '(' || c == '[' || c == '{') ++depth;
            if (c == ')' || c == ']' || c == '}') {
                if (depth == 0) break;
                --depth;
            }
            if (c == ',' && depth == 0) break;
            ++i;
        }
        if (i == start) fail("expected a value");
        return s.substr(start, i - start);
    }
    void done() {
        ws();
        if (i != s.size()) fail("trailing input");
    }
};

FinSet finset(Cursor& c) {
    FinSet out;
    c.eat('[');
    if (!c.try_eat(']')) {
        do {
            out.push_back(c.number());
        } while (c.try_eat(','));
        c.eat(']');
    }
    if (!is_valid_finset(out)) c.fail("set must be strictly increasing");
    return out;
}

SetGen setgen(Cursor& c) {
    if (!c.try_word("gen")) c.fail("expected gen(...)");
    c.eat('(');
    SetGen g;
    bool have_start = false;
    do {
        if (c.try_word("prefix")) {
            c.eat('=');
            g.prefix = finset(c);
        } else if (c.try_word("start")) {
            c.eat('=');
            g.start = c.number();
            have_start = true;
        } else if (c.try_word("step")) {
            c.eat('=');
            g.step = c.number();
        } else {
            c.fail("expected prefix=, start= or step=");
        }
    } while (c.try_eat(','));
    c.eat(')');
    if (!have_start) g.start = g.prefix.empty() ? 1 : g.prefix.back() + 1;
    if (g.step == 0) c.fail("step must be positive");
    if (!g.prefix.empty() && g.start <= g.prefix.back())
        c.fail("start must exceed the prefix");
    return g;
}

Ordinal ordinal(Cursor& c) { return parse_ordinal(c.balanced()); }

FamilyPtr family(Cursor& c) {
    if (c.try_word("A")) {
        c.eat('(');
        unsigned n = c.number();
        c.eat(')');
        return fam_A(n);
    }
    if (c.try_word("S")) {
        c.eat('(');
        Ordinal xi = ordinal(c);
        c.eat(')');
        return fam_S(xi);
    }
    if (c.try_word("comb")) {
        c.eat('(');
        FamilyPtr outer = family(c);
        c.eat(',');
        FamilyPtr inner = family(c);
        c.eat(')');
        return fam_comb(std::move(outer), std::move(inner));
    }
    if (c.try_word("pre")) {
        c.eat('(');
        FamilyPtr base = family(c);
        c.eat(',');
        SetGen g = setgen(c);
        c.eat(')');
        return fam_pre(std::move(base), std::move(g));
    }
    if (c.try_word("drv")) {
        c.eat('(');
        FamilyPtr base = family(c);
        c.eat(',');
        Ordinal eta = ordinal(c);
        c.eat(')');
        return fam_drv(std::move(base), eta);
    }
    c.fail("expected a family expression");
}

SeqSpaceSpec spec(Cursor& c) {
    if (c.try_word("schreier")) {
        c.eat('(');
        FamilyPtr g = family(c);
        c.eat(')');
        return SeqSpaceSpec::schreier(std::move(g));
    }
    if (c.try_word("baernstein")) {
        c.eat('(');
        FamilyPtr g = family(c);
        c.eat(',');
        if (!c.try_word("p")) c.fail("expected p=");
        c.eat('=');
        PNorm p;
        if (c.try_word("inf"))
            p = PNorm::inf;
        else {
            unsigned v = c.number();
            if (v == 1)
                p = PNorm::one;
            else if (v == 2)
                p = PNorm::two;
            else
                c.fail("p must be 1, 2 or inf");
        }
        c.eat(')');
        return SeqSpaceSpec::baernstein(std::move(g), p);
    }
    if (c.try_word("mixed")) {
        c.eat('(');
        if (c.try_word("base")) {
            c.eat('=');
            FamilyPtr base = family(c);
            c.eat(',');
            if (!c.try_word("theta")) c.fail("expected theta=");
            c.eat('=');
            Rat theta = c.rational();
            c.eat(')');
            return SeqSpaceSpec::mixed_geometric(std::move(base), theta);
        }
        if (!c.try_word("layers")) c.fail("expected base= or layers=");
        c.eat('=');
        c.eat('[');
        std::vector<MixedLayer> layers;
        do {
            c.eat('(');
            FamilyPtr g = family(c);
            c.eat(',');
            Rat theta = c.rational();
            c.eat(')');
            layers.push_back({std::move(g), theta});
        } while (c.try_eat(','));
        c.eat(']');
        c.eat(')');
        return SeqSpaceSpec::mixed_layers(std::move(layers));
    }
    c.fail("expected schreier(...), baernstein(...) or mixed(...)");
}

}  // namespace

Rat parse_rational(const std::string& text) {
    Cursor c{text};
    Rat v = c.rational();
    c.done();
    return v;
}

FinSet parse_finset(const std::string& text) {
    Cursor c{text};
    FinSet v = finset(c);
    c.done();
    return v;
}

SetGen parse_setgen(const std::string& text) {
    Cursor c{text};
    SetGen v = setgen(c);
    c.done();
    return v;
}

FamilyPtr parse_family(const std::string& text) {
    Cursor c{text};
    FamilyPtr v = family(c);
    c.done();
    return v;
}

Vec parse_vector(const std::string& text) {
    Cursor c{text};
    Vec out;
    c.eat('[');
    if (!c.try_eat(']')) {
        do {
            unsigned i = c.number();
            c.eat(':');
            if (out.count(i)) c.fail("duplicate index");
            out[i] = c.rational();
        } while (c.try_eat(','));
        c.eat(']');
    }
    c.done();
    return out;
}

ProbMeasure parse_measure(const std::string& text) {
    Cursor c{text};
    ProbMeasure mu;
    c.eat('{');
    if (!c.try_eat('}')) {
        do {
            unsigned i = c.number();
            c.eat(':');
            if (mu.atoms.count(i)) c.fail("duplicate atom");
            mu.atoms[i] = c.rational();
        } while (c.try_eat(','));
        c.eat('}');
    }
    c.done();
    return mu;
}

SeqSpaceSpec parse_spec(const std::string& text) {
    Cursor c{text};
    SeqSpaceSpec v = spec(c);
    c.done();
    return v;
}

std::string to_string(const Vec& x) {
    std::string out = "[";
    bool first = true;
    for (const auto& [i, v] : x) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(i) + ":" + to_string(v);
    }
    return out + "]";
}

std::string to_string(const SeqSpaceSpec& spec) {
    switch (spec.kind) {
        case SeqSpaceSpec::Kind::schreier:
            return "schreier(" + to_string(spec.g) + ")";
        case SeqSpaceSpec::Kind::baernstein: {
            std::string p = spec.p == PNorm::one ? "1"
                            : spec.p == PNorm::two ? "2"
                                                   : "inf";
            return "baernstein(" + to_string(spec.g) + ", p=" + p + ")";
        }
        case SeqSpaceSpec::Kind::mixed:
            break;
    }
    if (spec.geometric)
        return "mixed(base=" + to_string(spec.base) +
               ", theta=" + to_string(spec.theta) + ")";
    std::string out = "mixed(layers=[";
    for (unsigned n = 0;; ++n) {
        auto ly = spec.layer(n);
        if (!ly) break;
        if (n) out += ",";
        out += "(" + to_string(ly->g) + "," + to_string(ly->theta) + ")";
    }
    return out + "])";
}

}  // namespace seqcomb
