#pragma once

#include "wchow/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace wchow {

using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    /// Stacks the given vectors as rows; every vector must have length `cols`.
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntMatrix transpose() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
    /// col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    bool is_diagonal() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// x * M for a row vector x of length M.rows().
IntVector row_times(const IntVector& x, const IntMatrix& m);

/// Exact determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntMatrix& m);

/// Finitely generated abelian group Z^free_rank + Z/d1 + ... + Z/dk with
/// 2 <= d1 | d2 | ... | dk.
class AbelianGroupShape {
public:
    AbelianGroupShape() = default;
    /// Canonicalizes an arbitrary list of cyclic orders: 0 contributes a free
    /// summand, 1 is dropped, the rest are rewritten as invariant factors.
    static AbelianGroupShape from_cyclic(std::size_t free_rank, const std::vector<Integer>& orders);
    static AbelianGroupShape free_abelian(std::size_t rank) { return from_cyclic(rank, {}); }
    static AbelianGroupShape cyclic(const Integer& order) { return from_cyclic(0, {order}); }

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }
    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }

    friend AbelianGroupShape direct_sum(const AbelianGroupShape& a, const AbelianGroupShape& b);
    friend bool operator==(const AbelianGroupShape&, const AbelianGroupShape&) = default;

    /// "0", "Z", "Z^2", "Z/24", "Z + Z/24", "Z/24 + Z/24".
    std::string to_string() const;

private:
    std::size_t free_rank_ = 0;
    std::vector<Integer> torsion_;
};

struct SmithForm {
    IntMatrix left;      // U, unimodular
    IntMatrix diagonal;  // D = U * M * V
    IntMatrix right;     // V, unimodular
};

/// Smith normal form with transforms. D's nonzero diagonal entries are
/// positive and form a divisibility chain.
SmithForm smith_normal_form(const IntMatrix& m);

/// Diagonal of the Smith normal form without tracking transforms.
std::vector<Integer> smith_invariants(const IntMatrix& m);

struct HermiteForm {
    IntMatrix transform;  // T, unimodular
    IntMatrix hermite;    // H = T * M, row echelon, positive pivots, reduced above pivots
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Row-style Hermite normal form.
HermiteForm hermite_normal_form(const IntMatrix& m);

/// Z^ambient_rank modulo the span of `rows`.
AbelianGroupShape cokernel(const std::vector<IntVector>& rows, std::size_t ambient_rank);

/// Some integer x with x * M = b, or nullopt when b is outside the row lattice.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b);

/// Basis of the left kernel {x : x * M = 0}.
std::vector<IntVector> left_kernel(const IntMatrix& m);

/// True iff the row lattices of a and b (same column count) coincide.
bool same_row_lattice(const IntMatrix& a, const IntMatrix& b);

}  // namespace wchow
