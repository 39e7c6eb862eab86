#include "seqcomb/ravg.hpp"

#include <stdexcept>

namespace seqcomb {

Rat ProbMeasure::mass() const {
    Rat m = 0;
    for (const auto& [k, w] : atoms) m += w;
    return m;
}

FinSet ProbMeasure::support() const {
    FinSet s;
    for (const auto& [k, w] : atoms)
        if (w != 0) s.push_back(k);
    return s;
}

Rat ProbMeasure::operator()(const FinSet& e) const {
    Rat m = 0;
    for (unsigned k : e) {
        auto it = atoms.find(k);
        if (it != atoms.end()) m += it->second;
    }
    return m;
}

namespace {

Ordinal one() { return Ordinal{Nat(1)}; }

// m with its first t elements removed.
SetGen drop_first(const SetGen& m, unsigned t) {
    SetGen out;
    if (t < m.prefix.size()) {
        out.prefix.assign(m.prefix.begin() + t, m.prefix.end());
        out.start = m.start;
        out.step = m.step;
    } else {
        out.start = m.start + (t - static_cast<unsigned>(m.prefix.size())) * m.step;
        out.step = m.step;
    }
    return out;
}

unsigned blocks_size(const SetGen& m, const Ordinal& xi, unsigned count) {
    unsigned total = 0;
    for (const FinSet& b : max_decomposition(m, xi, count))
        total += static_cast<unsigned>(b.size());
    return total;
}

}  // namespace

ProbMeasure repeated_average(const Ordinal& xi, const SetGen& m, unsigned n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (xi.is_zero()) return ProbMeasure{{{m.nth(n), Rat(1)}}};
    if (classify(xi) == OrdKind::limit) {
        unsigned consumed = n > 1 ? blocks_size(m, xi, n - 1) : 0;
        SetGen mn = drop_first(m, consumed);
        unsigned p = mn.nth(1);
        return repeated_average(add(fund_seq(xi, p), one()), mn, 1);
    }
    Ordinal sub = pred(xi);
    std::vector<FinSet> blocks;  // level-sub blocks, fetched lazily
    auto block_min = [&](unsigned i) {
        if (blocks.size() < i) blocks = max_decomposition(m, sub, i);
        return blocks[i - 1][0];
    };
    unsigned s_prev = 0;
    unsigned p = 0;
    for (unsigned i = 1; i <= n; ++i) {
        p = block_min(s_prev + 1);
        if (i < n) s_prev += p;
    }
    ProbMeasure out;
    for (unsigned j = s_prev + 1; j <= s_prev + p; ++j) {
        ProbMeasure part = repeated_average(sub, m, j);
        for (const auto& [k, w] : part.atoms) out.atoms[k] += w / p;
    }
    return out;
}

bool support_check(const Ordinal& xi, const SetGen& m, unsigned n) {
    ProbMeasure mu = repeated_average(xi, m, n);
    std::vector<FinSet> blocks = max_decomposition(m, xi, n);
    return mu.support() == blocks[n - 1];
}

bool permanence_check(const Ordinal& xi, const SetGen& m,
                      const std::vector<unsigned>& indices, const SetGen& n2) {
    for (size_t i = 1; i < indices.size(); ++i)
        if (indices[i] <= indices[i - 1])
            throw std::invalid_argument("indices must be strictly increasing");
    std::vector<ProbMeasure> sources;
    FinSet covered;
    for (unsigned r : indices) {
        sources.push_back(repeated_average(xi, m, r));
        FinSet s = sources.back().support();
        covered.insert(covered.end(), s.begin(), s.end());
    }
    std::sort(covered.begin(), covered.end());
    for (size_t i = 0; i < covered.size(); ++i)
        if (n2.nth(static_cast<unsigned>(i + 1)) != covered[i])
            throw std::invalid_argument(
                "covered supports are not an initial segment of the target set");
    for (size_t i = 0; i < indices.size(); ++i)
        if (!(repeated_average(xi, n2, static_cast<unsigned>(i + 1)) == sources[i]))
            return false;
    return true;
}

Rat measure_max(const FamilyPtr& h, const ProbMeasure& mu) {
    FinSet supp = mu.support();
    std::vector<Rat> tail(supp.size() + 1, Rat(0));
    for (size_t i = supp.size(); i-- > 0;)
        tail[i] = tail[i + 1] + mu.atoms.at(supp[i]);
    Rat best = 0;
    FinSet cur;
    auto dfs = [&](auto&& self, size_t i, const Rat& mass) -> void {
        if (mass > best) best = mass;
        if (i >= supp.size() || mass + tail[i] <= best) return;
        cur.push_back(supp[i]);
        if (member(h, cur)) self(self, i + 1, mass + mu.atoms.at(supp[i]));
        cur.pop_back();
        self(self, i + 1, mass);
    };
    if (member(h, {})) dfs(dfs, 0, Rat(0));
    return best;
}

std::string to_string(const ProbMeasure& mu) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, w] : mu.atoms) {
        if (w == 0) continue;
        if (!first) s += ",";
        first = false;
        s += std::to_string(k) + ":" + to_string(w);
    }
    return s + "}";
}

}  // namespace seqcomb
