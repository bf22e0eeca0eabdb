#include "wchow/int_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wchow {

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row length does not match the column count");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r != c && (*this)(r, c) != 0) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

IntVector row_times(const IntVector& x, const IntMatrix& m) {
    if (x.size() != m.rows()) throw std::invalid_argument("row vector length does not match the matrix");
    IntVector out(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (x[r] == 0) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] += x[r] * m(r, c);
    }
    return out;
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

// Floor quotient; keeps remainders in [0, |d|) for positive d.
Integer floor_div(const Integer& n, const Integer& d) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

// Nearest-integer quotient, so |n - q*d| <= |d|/2.
Integer round_div(const Integer& n, const Integer& d) {
    Integer q = floor_div(n, d);
    Integer r = n - q * d;
    if (2 * abs(r) > abs(d)) q += (d > 0) == (r > 0) ? 1 : -1;
    return q;
}

struct Pivot {
    std::size_t row;
    std::size_t col;
};

// Smallest nonzero |entry| in the trailing submatrix starting at (t, t).
std::optional<Pivot> smallest_entry(const IntMatrix& d, std::size_t t) {
    std::optional<Pivot> best;
    for (std::size_t r = t; r < d.rows(); ++r)
        for (std::size_t c = t; c < d.cols(); ++c) {
            if (d(r, c) == 0) continue;
            if (!best || cmpabs(d(r, c), d(best->row, best->col)) < 0) best = Pivot{r, c};
        }
    return best;
}

class SmithReducer {
public:
    SmithReducer(const IntMatrix& m, bool track) : d_(m), track_(track) {
        if (track_) {
            u_ = IntMatrix::identity(m.rows());
            v_ = IntMatrix::identity(m.cols());
        }
    }

    void run() {
        const std::size_t n = std::min(d_.rows(), d_.cols());
        for (std::size_t t = 0; t < n; ++t) {
            auto p = smallest_entry(d_, t);
            if (!p) break;
            move_to(*p, t);
            for (;;) {
                if (!clear_column(t)) continue;
                if (!clear_row(t)) continue;
                if (fix_divisibility(t)) break;
            }
            if (d_(t, t) < 0) {
                d_.negate_row(t);
                if (track_) u_.negate_row(t);
            }
        }
    }

    IntMatrix& diagonal() { return d_; }
    IntMatrix& left() { return u_; }
    IntMatrix& right() { return v_; }

private:
    void row_swap(std::size_t a, std::size_t b) {
        d_.swap_rows(a, b);
        if (track_) u_.swap_rows(a, b);
    }
    void col_swap(std::size_t a, std::size_t b) {
        d_.swap_cols(a, b);
        if (track_) v_.swap_cols(a, b);
    }
    void row_add(std::size_t dst, std::size_t src, const Integer& k) {
        d_.add_row_multiple(dst, src, k);
        if (track_) u_.add_row_multiple(dst, src, k);
    }
    void col_add(std::size_t dst, std::size_t src, const Integer& k) {
        d_.add_col_multiple(dst, src, k);
        if (track_) v_.add_col_multiple(dst, src, k);
    }

    void move_to(Pivot p, std::size_t t) {
        row_swap(t, p.row);
        col_swap(t, p.col);
    }

    // Reduces column t below the pivot. Returns false if a smaller remainder
    // was swapped into the pivot position and the caller must retry.
    bool clear_column(std::size_t t) {
        bool clean = true;
        for (std::size_t r = t + 1; r < d_.rows(); ++r) {
            if (d_(r, t) == 0) continue;
            row_add(r, t, -round_div(d_(r, t), d_(t, t)));
            if (d_(r, t) != 0) clean = false;
        }
        if (clean) return true;
        std::size_t best = t;
        for (std::size_t r = t + 1; r < d_.rows(); ++r)
            if (d_(r, t) != 0 && cmpabs(d_(r, t), d_(best, t)) < 0) best = r;
        row_swap(t, best);
        return false;
    }

    bool clear_row(std::size_t t) {
        bool clean = true;
        for (std::size_t c = t + 1; c < d_.cols(); ++c) {
            if (d_(t, c) == 0) continue;
            col_add(c, t, -round_div(d_(t, c), d_(t, t)));
            if (d_(t, c) != 0) clean = false;
        }
        if (clean) return true;
        std::size_t best = t;
        for (std::size_t c = t + 1; c < d_.cols(); ++c)
            if (d_(t, c) != 0 && cmpabs(d_(t, c), d_(t, best)) < 0) best = c;
        col_swap(t, best);
        return false;
    }

    // With row and column t cleared, the pivot must divide the rest of the
    // trailing block. If it does not, fold the offending row into row t.
    bool fix_divisibility(std::size_t t) {
        for (std::size_t r = t + 1; r < d_.rows(); ++r)
            for (std::size_t c = t + 1; c < d_.cols(); ++c) {
                if (!mpz_divisible_p(d_(r, c).get_mpz_t(), d_(t, t).get_mpz_t())) {
                    row_add(t, r, 1);
                    return false;
                }
            }
        return true;
    }

    IntMatrix d_;
    IntMatrix u_;
    IntMatrix v_;
    bool track_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithReducer reducer(m, true);
    reducer.run();
    return SmithForm{std::move(reducer.left()), std::move(reducer.diagonal()), std::move(reducer.right())};
}

std::vector<Integer> smith_invariants(const IntMatrix& m) {
    SmithReducer reducer(m, false);
    reducer.run();
    const IntMatrix& d = reducer.diagonal();
    std::vector<Integer> diag;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) diag.push_back(d(i, i));
    return diag;
}

// ---------------------------------------------------------------------------
// Hermite normal form

HermiteForm hermite_normal_form(const IntMatrix& m) {
    HermiteForm out;
    out.hermite = m;
    out.transform = IntMatrix::identity(m.rows());
    IntMatrix& h = out.hermite;
    IntMatrix& t = out.transform;
    auto row_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
        h.add_row_multiple(dst, src, k);
        t.add_row_multiple(dst, src, k);
    };
    auto row_swap = [&](std::size_t a, std::size_t b) {
        h.swap_rows(a, b);
        t.swap_rows(a, b);
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        // Euclid down the column until only row r is nonzero there.
        for (;;) {
            std::optional<std::size_t> best;
            for (std::size_t i = r; i < h.rows(); ++i)
                if (h(i, c) != 0 && (!best || cmpabs(h(i, c), h(*best, c)) < 0)) best = i;
            if (!best) break;
            row_swap(r, *best);
            bool done = true;
            for (std::size_t i = r + 1; i < h.rows(); ++i) {
                if (h(i, c) == 0) continue;
                row_add(i, r, -round_div(h(i, c), h(r, c)));
                if (h(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) {
            h.negate_row(r);
            t.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) row_add(i, r, -floor_div(h(i, c), h(r, c)));
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

// ---------------------------------------------------------------------------
// Abelian groups

AbelianGroupShape AbelianGroupShape::from_cyclic(std::size_t free_rank, const std::vector<Integer>& orders) {
    AbelianGroupShape g;
    g.free_rank_ = free_rank;
    std::vector<Integer> finite;
    for (const auto& o : orders) {
        if (o == 0) {
            ++g.free_rank_;
        } else if (abs(o) != 1) {
            finite.push_back(abs(o));
        }
    }
    if (finite.empty()) return g;
    IntMatrix d(finite.size(), finite.size());
    for (std::size_t i = 0; i < finite.size(); ++i) d(i, i) = finite[i];
    for (const auto& inv : smith_invariants(d)) {
        if (inv > 1) g.torsion_.push_back(inv);
    }
    return g;
}

AbelianGroupShape direct_sum(const AbelianGroupShape& a, const AbelianGroupShape& b) {
    std::vector<Integer> orders = a.torsion_;
    orders.insert(orders.end(), b.torsion_.begin(), b.torsion_.end());
    return AbelianGroupShape::from_cyclic(a.free_rank_ + b.free_rank_, orders);
}

std::string AbelianGroupShape::to_string() const {
    if (is_trivial()) return "0";
    std::string s;
    if (free_rank_ == 1) s = "Z";
    if (free_rank_ > 1) s = "Z^" + std::to_string(free_rank_);
    for (const auto& d : torsion_) {
        if (!s.empty()) s += " + ";
        s += "Z/" + d.get_str();
    }
    return s;
}

AbelianGroupShape cokernel(const std::vector<IntVector>& rows, std::size_t ambient_rank) {
    if (rows.empty()) return AbelianGroupShape::free_abelian(ambient_rank);
    auto diag = smith_invariants(IntMatrix::from_rows(rows, ambient_rank));
    std::vector<Integer> orders;
    std::size_t nonzero = 0;
    for (const auto& d : diag) {
        if (d != 0) {
            ++nonzero;
            orders.push_back(d);
        }
    }
    return AbelianGroupShape::from_cyclic(ambient_rank - nonzero, orders);
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b) {
    if (b.size() != m.cols()) throw std::invalid_argument("solve_integer: target length must equal the column count");
    HermiteForm hf = hermite_normal_form(m);
    IntVector residual = b;
    IntVector y(m.rows());
    for (std::size_t k = 0; k < hf.rank; ++k) {
        std::size_t c = hf.pivot_cols[k];
        const Integer& pivot = hf.hermite(k, c);
        if (!mpz_divisible_p(residual[c].get_mpz_t(), pivot.get_mpz_t())) return std::nullopt;
        y[k] = residual[c] / pivot;
        for (std::size_t j = 0; j < m.cols(); ++j) residual[j] -= y[k] * hf.hermite(k, j);
    }
    if (std::any_of(residual.begin(), residual.end(), [](const Integer& v) { return v != 0; })) return std::nullopt;
    return row_times(y, hf.transform);
}

std::vector<IntVector> left_kernel(const IntMatrix& m) {
    HermiteForm hf = hermite_normal_form(m);
    std::vector<IntVector> basis;
    for (std::size_t r = hf.rank; r < m.rows(); ++r) basis.push_back(hf.transform.row(r));
    return basis;
}

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("lattices live in different ambient ranks");
    for (std::size_t r = 0; r < a.rows(); ++r)
        if (!solve_integer(b, a.row(r))) return false;
    for (std::size_t r = 0; r < b.rows(); ++r)
        if (!solve_integer(a, b.row(r))) return false;
    return true;
}

}  // namespace wchow
