#pragma once

// Reference computations for the test suite. Nothing here calls into the
// library's elimination code: naive_rref is textbook Gauss-Jordan with
// division, and the Chevalley-Eilenberg route computes M(L), L^L and Z^(L)
// from the chain complex  L^3 -> L^2 -> L  instead of a free presentation.

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "schurlab/lie_algebra.hpp"

namespace oracle {

using Q = mpq_class;
using Rows = std::vector<std::vector<Q>>;

struct NaiveRref {
    Rows rows; // nonzero rows only
    std::vector<std::size_t> pivots;
};

inline NaiveRref naive_rref(Rows a, std::size_t cols) {
    NaiveRref out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        const Q lead = a[r][c];
        for (auto& x : a[r]) x /= lead;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Q f = a[i][c];
            for (std::size_t k = 0; k < cols; ++k) a[i][k] -= f * a[r][k];
        }
        out.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

inline std::size_t naive_rank(const Rows& a, std::size_t cols) { return naive_rref(a, cols).pivots.size(); }

/// Basis of {x : a x = 0}, one vector per free column.
inline Rows naive_kernel(const Rows& a, std::size_t cols) {
    const NaiveRref r = naive_rref(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    Rows basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Q> v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

// ------------------------------------------------------------------ CE route

struct ChevalleyEilenberg {
    std::size_t n = 0;
    std::size_t pairs = 0;
    std::vector<std::vector<std::size_t>> pair_index;
    Rows boundaries; // image of d3 in Lambda^2 L, one row per basis triple
    std::size_t rank_d2 = 0;
    std::size_t rank_d3 = 0;

    explicit ChevalleyEilenberg(const schurlab::LieAlgebra& algebra) : n(algebra.dim()) {
        pair_index.assign(n, std::vector<std::size_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) pair_index[i][j] = pairs++;

        Rows d2(n, std::vector<Q>(pairs));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const auto v = algebra.basis_bracket(i, j).to_dense(n);
                for (std::size_t t = 0; t < n; ++t) d2[t][pair_index[i][j]] = v[t];
            }
        rank_d2 = naive_rank(d2, pairs);

        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    std::vector<Q> row(pairs);
                    add_wedge(row, algebra.basis_bracket(i, j).to_dense(n), k);
                    add_wedge(row, algebra.basis_bracket(j, k).to_dense(n), i);
                    add_wedge(row, algebra.basis_bracket(k, i).to_dense(n), j);
                    boundaries.push_back(std::move(row));
                }
        rank_d3 = naive_rank(boundaries, pairs);
    }

    /// row += u ^ x_k
    void add_wedge(std::vector<Q>& row, const std::vector<Q>& u, std::size_t k) const {
        for (std::size_t t = 0; t < n; ++t) {
            if (u[t] == 0 || t == k) continue;
            if (t < k) row[pair_index[t][k]] += u[t];
            else row[pair_index[k][t]] -= u[t];
        }
    }

    std::size_t multiplier_dim() const { return (pairs - rank_d2) - rank_d3; }
    std::size_t exterior_square_dim() const { return pairs - rank_d3; }

    /// Z^(L) = { z : z ^ y lies in im d3 for every y }, as a kernel basis.
    Rows exterior_center() const {
        const NaiveRref b = naive_rref(boundaries, pairs);
        auto reduce = [&](std::vector<Q> v) {
            for (std::size_t r = 0; r < b.pivots.size(); ++r) {
                const Q f = v[b.pivots[r]];
                if (f == 0) continue;
                for (std::size_t c = 0; c < pairs; ++c) v[c] -= f * b.rows[r][c];
            }
            return v;
        };
        // rows indexed by (j, coordinate), columns by i
        Rows system;
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<Q>> residues;
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<Q> w(pairs);
                std::vector<Q> e(n);
                e[i] = 1;
                add_wedge(w, e, j);
                residues.push_back(reduce(std::move(w)));
            }
            for (std::size_t c = 0; c < pairs; ++c) {
                std::vector<Q> row(n);
                for (std::size_t i = 0; i < n; ++i) row[i] = residues[i][c];
                system.push_back(std::move(row));
            }
        }
        return naive_kernel(system, n);
    }
};

// ------------------------------------------------------------ random inputs

inline Q random_rational(std::mt19937_64& rng, int span = 4, int max_den = 3) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, max_den);
    Q q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Rows random_rows(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double zero_fraction = 0.3) {
    std::bernoulli_distribution zero(zero_fraction);
    Rows a(rows, std::vector<Q>(cols));
    for (auto& r : a)
        for (auto& x : r) x = zero(rng) ? Q(0) : random_rational(rng);
    return a;
}

inline Rows random_invertible(std::mt19937_64& rng, std::size_t n) {
    while (true) {
        Rows a = random_rows(rng, n, n, 0.2);
        if (naive_rank(a, n) == n) return a;
    }
}

} // namespace oracle
