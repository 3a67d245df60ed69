#include "gfl/rational_matrix.hpp"

#include <stdexcept>

namespace gfl {
namespace {

/*
 * Fraction-free elimination working form.  Input rows are scaled to
 * integers (row scaling changes neither rank nor nullspace), then reduced
 * with the Bareiss recurrence
 *
 *     M[i][j] <- (M[r][c] * M[i][j] - M[i][c] * M[r][j]) / prev_pivot
 *
 * where the division is exact.  Intermediate entries stay minors of the
 * input, which keeps coefficient growth polynomial instead of the
 * exponential blowup of naive cross-multiplication.  The pivot row is the
 * one with the largest |entry| in the pivot column; on this matrix family
 * that choice is deterministic and keeps the minors small.
 */
struct Echelon {
    std::size_t rows, cols;
    std::vector<std::vector<mpz_class>> m;
    std::vector<std::size_t> pivot_cols;

    explicit Echelon(const RationalMatrix& in)
        : rows(in.rows()), cols(in.cols()), m(in.rows()) {
        for (std::size_t i = 0; i < rows; ++i) {
            mpz_class scale = 1;
            for (std::size_t j = 0; j < cols; ++j)
                mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), in(i, j).den().get_mpz_t());
            m[i].resize(cols);
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = in(i, j).num() * (scale / in(i, j).den());
        }
        reduce();
    }

    void reduce() {
        mpz_class prev = 1;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t best = r;
            mpz_class best_abs = abs(m[r][c]);
            for (std::size_t i = r + 1; i < rows; ++i) {
                mpz_class a = abs(m[i][c]);
                if (a > best_abs) { best_abs = a; best = i; }
            }
            if (best_abs == 0) continue;
            if (best != r) std::swap(m[best], m[r]);

            const mpz_class pivot = m[r][c];
            for (std::size_t i = r + 1; i < rows; ++i) {
                for (std::size_t j = c + 1; j < cols; ++j) {
                    mpz_class t = pivot * m[i][j] - m[i][c] * m[r][j];
                    mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                }
                m[i][c] = 0;
            }
            prev = pivot;
            pivot_cols.push_back(c);
            ++r;
        }
    }

    std::size_t rank() const { return pivot_cols.size(); }
};

}  // namespace

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

std::size_t rank_exact(const RationalMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0)
        throw std::invalid_argument("rank of empty matrix");
    return Echelon(m).rank();
}

std::vector<Rational> multiply(const RationalMatrix& m, const std::vector<Rational>& v) {
    if (v.size() != m.cols())
        throw std::invalid_argument("dimension mismatch in matrix-vector product");
    std::vector<Rational> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational acc;
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

std::vector<Rational> primitive_integer_vector(const std::vector<Rational>& v) {
    mpz_class den_lcm = 1;
    for (const auto& x : v)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.den().get_mpz_t());
    mpz_class content = 0;
    std::vector<mpz_class> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = v[i].num() * (den_lcm / v[i].den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (content == 0) return v;  // zero vector
    int lead = 0;
    for (const auto& z : ints) {
        if (z != 0) { lead = sgn(z); break; }
    }
    if (lead < 0) content = -content;
    std::vector<Rational> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = Rational(mpz_class(ints[i] / content), mpz_class(1));
    return out;
}

NullspaceResult nullspace_exact(const RationalMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0)
        throw std::invalid_argument("nullspace of empty matrix");

    Echelon e(m);
    const std::size_t rank = e.rank();
    const std::size_t cols = m.cols();

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    NullspaceResult result;
    result.rank = rank;

    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols);
        v[f] = Rational(1);
        // Back-substitute through the echelon rows.
        for (std::size_t ri = rank; ri-- > 0;) {
            const std::size_t pc = e.pivot_cols[ri];
            Rational acc;
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (!v[j].is_zero())
                    acc += Rational(e.m[ri][j], mpz_class(1)) * v[j];
            }
            v[pc] = -acc / Rational(e.m[ri][pc], mpz_class(1));
        }
        v = primitive_integer_vector(v);
        for (const auto& r : multiply(m, v))
            if (!r.is_zero())
                throw std::logic_error("nullspace self-check failed: M v != 0");
        result.basis.push_back(std::move(v));
    }
    return result;
}

}  // namespace gfl
