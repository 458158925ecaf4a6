#pragma once
// Independent reference implementations used only by tests: straight
// linear algebra over the rationals, no Groebner machinery involved.

#include "smw/polynomial.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace smw::testing {

inline void enumerate_monomials(const GeneratorSet& gs, std::vector<unsigned>& exps,
                                std::size_t next, unsigned remaining,
                                std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.push_back(Monomial(std::vector<unsigned>(exps)));
        return;
    }
    if (next >= gs.size()) return;
    unsigned w = gs[next].degree;
    for (unsigned e = 0; e * w <= remaining; ++e) {
        exps[next] = e;
        enumerate_monomials(gs, exps, next + 1, remaining - e * w, out);
    }
    exps[next] = 0;
}

/// All monomials of exactly the given weighted degree.
inline std::vector<Monomial> monomials_of_degree(const GeneratorSet& gs, unsigned degree) {
    std::vector<Monomial> out;
    std::vector<unsigned> exps(gs.size(), 0);
    enumerate_monomials(gs, exps, 0, degree, out);
    return out;
}

/// Rank of a dense rational matrix by exact Gaussian elimination.
inline std::size_t matrix_rank(std::vector<std::vector<Rational>> rows) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            Rational factor = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                rows[r][k] -= factor * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Graded dimensions of R/I computed slice by slice: the degree-D part of
/// the ideal is spanned by {m * g} over generators g and monomials m of
/// complementary degree, and the quotient dimension is the count of
/// degree-D monomials minus the rank of that span.
inline std::vector<unsigned long> brute_force_hilbert(
    const std::vector<Polynomial>& gens, const GenSetPtr& gs, unsigned maxDegree) {
    std::vector<unsigned long> dims(maxDegree + 1, 0);
    for (unsigned D = 0; D <= maxDegree; ++D) {
        std::vector<Monomial> basis = monomials_of_degree(*gs, D);
        std::map<Monomial, std::size_t> col;
        for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = i;
        std::vector<std::vector<Rational>> rows;
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            unsigned dg = *g.homogeneous_degree();
            if (dg > D) continue;
            for (const auto& m : monomials_of_degree(*gs, D - dg)) {
                std::vector<Rational> row(basis.size(), Rational(0));
                for (const auto& [mg, cg] : g.terms()) row[col.at(m * mg)] = cg;
                rows.push_back(std::move(row));
            }
        }
        dims[D] = basis.size() - matrix_rank(std::move(rows));
    }
    return dims;
}

}  // namespace smw::testing
