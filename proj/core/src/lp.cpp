#include "seqcomb/lp.hpp"

#include <stdexcept>

namespace seqcomb {

namespace {

struct Tableau {
    size_t ncols;                        // structural + slack + artificial
    std::vector<std::vector<Rat>> rows;  // each of size ncols
    std::vector<Rat> rhs;
    std::vector<size_t> basis;

    void pivot(size_t r, size_t c) {
        Rat piv = rows[r][c];
        for (auto& v : rows[r]) v /= piv;
        rhs[r] /= piv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            Rat f = rows[i][c];
            if (f == 0) continue;
            for (size_t j = 0; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
            rhs[i] -= f * rhs[r];
        }
        basis[r] = c;
    }

    // Minimizes cost over columns < limit (artificials excluded in phase 2).
    // Returns false when unbounded.
    bool run(std::vector<Rat>& z, Rat& zval, size_t limit) {
        for (;;) {
            size_t enter = limit;
            for (size_t j = 0; j < limit; ++j)
                if (z[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == limit) return true;
            size_t leave = rows.size();
            for (size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) continue;
                if (leave == rows.size()) {
                    leave = i;
                    continue;
                }
                Rat cur = rhs[i] / rows[i][enter];
                Rat best = rhs[leave] / rows[leave][enter];
                if (cur < best || (cur == best && basis[i] < basis[leave]))
                    leave = i;
            }
            if (leave == rows.size()) return false;
            Rat zf = z[enter];
            pivot(leave, enter);
            for (size_t j = 0; j < ncols; ++j) z[j] -= zf * rows[leave][j];
            zval -= zf * rhs[leave];
        }
    }

    std::vector<Rat> reduced_costs(const std::vector<Rat>& cost, Rat& zval) const {
        std::vector<Rat> z = cost;
        z.resize(ncols, Rat(0));
        zval = 0;
        for (size_t i = 0; i < rows.size(); ++i) {
            Rat cb = basis[i] < cost.size() ? cost[basis[i]] : Rat(0);
            if (cb == 0) continue;
            for (size_t j = 0; j < ncols; ++j) z[j] -= cb * rows[i][j];
            zval -= cb * rhs[i];
        }
        return z;
    }
};

}  // namespace

LpResult solve_lp(const std::vector<Rat>& objective,
                  const std::vector<LpRow>& rows) {
    size_t n = objective.size();
    size_t m = rows.size();
    size_t nslack = 0, nart = 0;
    std::vector<LpRow> work = rows;
    for (auto& r : work) {
        if (r.coeffs.size() != n)
            throw std::invalid_argument("LP row width mismatch");
        if (r.rhs < 0) {
            for (auto& v : r.coeffs) v = -v;
            r.rhs = -r.rhs;
            if (r.rel == LpRel::le)
                r.rel = LpRel::ge;
            else if (r.rel == LpRel::ge)
                r.rel = LpRel::le;
        }
        if (r.rel != LpRel::eq) ++nslack;
        if (r.rel != LpRel::le) ++nart;
    }

    Tableau t;
    t.ncols = n + nslack + nart;
    t.rows.assign(m, std::vector<Rat>(t.ncols, Rat(0)));
    t.rhs.resize(m);
    t.basis.resize(m);
    size_t scol = n, acol = n + nslack;
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) t.rows[i][j] = work[i].coeffs[j];
        t.rhs[i] = work[i].rhs;
        if (work[i].rel == LpRel::le) {
            t.rows[i][scol] = 1;
            t.basis[i] = scol++;
        } else {
            if (work[i].rel == LpRel::ge) t.rows[i][scol++] = -1;
            t.rows[i][acol] = 1;
            t.basis[i] = acol++;
        }
    }

    if (nart > 0) {
        std::vector<Rat> phase1(t.ncols, Rat(0));
        for (size_t j = n + nslack; j < t.ncols; ++j) phase1[j] = 1;
        Rat zval;
        std::vector<Rat> z = t.reduced_costs(phase1, zval);
        if (!t.run(z, zval, t.ncols))
            throw std::runtime_error("phase 1 unbounded");
        if (-zval != 0) return {LpStatus::infeasible, Rat(0), {}};
        // Pivot lingering artificials out of the basis where possible.
        for (size_t i = 0; i < m; ++i) {
            if (t.basis[i] < n + nslack) continue;
            for (size_t j = 0; j < n + nslack; ++j)
                if (t.rows[i][j] != 0) {
                    t.pivot(i, j);
                    break;
                }
        }
    }

    Rat zval;
    std::vector<Rat> z = t.reduced_costs(objective, zval);
    // Basic artificials that could not be pivoted out sit on redundant
    // zero rows; excluding artificial columns keeps them at zero.
    if (!t.run(z, zval, n + nslack))
        return {LpStatus::unbounded, Rat(0), {}};

    LpResult res{LpStatus::optimal, -zval, std::vector<Rat>(n, Rat(0))};
    for (size_t i = 0; i < m; ++i)
        if (t.basis[i] < n) res.x[t.basis[i]] = t.rhs[i];
    return res;
}

}  // namespace seqcomb
