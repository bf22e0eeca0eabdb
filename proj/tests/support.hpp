// Reference computations and random generators shared by the tests. The
// oracles here deliberately avoid the library's own linear algebra.
#pragma once

#include "wchow/int_linalg.hpp"
#include "wchow/polynomial.hpp"

#include <random>
#include <vector>

namespace testing_support {

using wchow::Integer;
using wchow::IntMatrix;
using wchow::Polynomial;
using wchow::Rational;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, -bound, bound);
    return m;
}

/// Gaussian elimination over Q. Returns (rank, determinant when square).
struct Elimination {
    std::size_t rank = 0;
    Rational det = 0;
};

inline Elimination eliminate(const std::vector<std::vector<Rational>>& input) {
    auto a = input;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    Elimination out;
    Rational det = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) {
            det = 0;
            continue;
        }
        if (p != r) {
            std::swap(a[p], a[r]);
            det = -det;
        }
        det *= a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
        }
        ++r;
    }
    out.rank = r;
    out.det = (rows == cols && r == rows) ? det : Rational(0);
    return out;
}

inline std::vector<std::vector<Rational>> to_rational(const IntMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
    return a;
}

inline std::size_t rank_over_q(const IntMatrix& m) { return eliminate(to_rational(m)).rank; }
inline Rational det_over_q(const IntMatrix& m) { return eliminate(to_rational(m)).det; }

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/// Invariant factors from determinantal divisors: D_k = gcd of all k x k
/// minors, d_k = D_k / D_{k-1}. Only the nonzero factors are returned.
inline std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m) {
    std::vector<Integer> factors;
    Integer prev = 1;
    const std::size_t kmax = std::min(m.rows(), m.cols());
    for (std::size_t k = 1; k <= kmax; ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(m.rows(), k, 0, cur, rs);
        subsets(m.cols(), k, 0, cur, cs);
        Integer g = 0;
        for (const auto& ri : rs) {
            for (const auto& ci : cs) {
                std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) sub[a][b] = m(ri[a], ci[b]);
                Rational d = eliminate(sub).det;
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_num().get_mpz_t());
            }
        }
        if (g == 0) break;
        factors.push_back(g / prev);
        prev = g;
    }
    return factors;
}

/// Random polynomial in the given variables: up to `terms` terms, exponents
/// at most `max_exp`, integer coefficients in [-bound, bound].
inline Polynomial random_polynomial(Rng& rng, const std::vector<std::string>& vars, int terms, int max_exp,
                                    long bound) {
    Polynomial p;
    int n = static_cast<int>(uniform(rng, 0, terms));
    for (int i = 0; i < n; ++i) {
        Polynomial t(Rational(uniform(rng, -bound, bound)));
        for (const auto& v : vars) {
            auto e = static_cast<std::uint32_t>(uniform(rng, 0, max_exp));
            if (e > 0) t *= Polynomial(wchow::Monomial::variable(v, e));
        }
        p += t;
    }
    return p;
}

inline Rational random_rational(Rng& rng, long num_bound, long den_bound) {
    long num = uniform(rng, -num_bound, num_bound);
    long den = uniform(rng, 1, den_bound);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Rational with denominator built from 2 and 3 only.
inline Rational random_base_ring_rational(Rng& rng, long num_bound) {
    long den = 1;
    for (long i = uniform(rng, 0, 2); i > 0; --i) den *= 2;
    for (long i = uniform(rng, 0, 2); i > 0; --i) den *= 3;
    Rational q(uniform(rng, -num_bound, num_bound), den);
    q.canonicalize();
    return q;
}

/// Nonzero rational with denominator built from 2 and 3 only.
inline Rational random_unit_scale(Rng& rng) {
    long num = 0;
    while (num == 0) num = uniform(rng, -7, 7);
    long den = 1;
    for (long i = uniform(rng, 0, 2); i > 0; --i) den *= 2;
    for (long i = uniform(rng, 0, 2); i > 0; --i) den *= 3;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace testing_support
