#pragma once

/* Exact rational linear algebra: arbitrary-precision rationals, dense
 * matrices, rank / kernel / minors / nullspace via fraction-free-safe
 * Gaussian elimination (every entry stays fully reduced), and rowspace
 * arithmetic (sum, intersection, membership). No floating point anywhere. */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "indgrass/errors.hpp"

namespace indgrass::ratlinalg {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/* Accepts "p", "p/q", optional leading '-'; rejects zero denominators.
 * Result is canonical (gcd 1, positive denominator). */
Rational parse_rational(const std::string& text);

/* Canonical form: "p" when the denominator is 1, else "p/q". */
std::string to_string(const Rational& value);

Int numerator(const Rational& value);
Int denominator(const Rational& value);

class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RatMatrix identity(std::size_t n);
    static RatMatrix row_vector(std::vector<Rational> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j);
    const Rational& at(std::size_t i, std::size_t j) const;

    std::vector<Rational> row(std::size_t i) const;

    bool operator==(const RatMatrix& other) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

RatMatrix transpose(const RatMatrix& m);
RatMatrix mul(const RatMatrix& a, const RatMatrix& b);

/* Stacks the rows of b under the rows of a; column counts must agree. */
RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);

/* In-place reduction to (reduced) row echelon form, returns the rank. */
std::size_t echelonize(RatMatrix& m, bool reduce = true);

std::size_t rank(RatMatrix m);
std::size_t kernel_dim(const RatMatrix& m);

Rational det(const RatMatrix& m);

/* Determinant of the square submatrix selected by row_idx x col_idx.
 * Indices must be in range and duplicate-free, and the two index sets
 * must have equal size. */
Rational minor(const RatMatrix& m, const std::vector<std::size_t>& row_idx,
               const std::vector<std::size_t>& col_idx);

/* Rows form a basis of the right kernel {x : m x = 0}. Zero kernel gives
 * a 0 x cols matrix. Basis is the canonical free-column one from RREF. */
RatMatrix nullspace(const RatMatrix& m);

/* Nonzero rows of the RREF: canonical basis of the rowspace. */
RatMatrix row_basis(const RatMatrix& m);

/* Canonical basis of rowspace(a) + rowspace(b). */
RatMatrix sum_rows(const RatMatrix& a, const RatMatrix& b);

/* Canonical basis of rowspace(a) intersect rowspace(b). */
RatMatrix intersect_rows(const RatMatrix& a, const RatMatrix& b);

/* True when every row of vectors lies in rowspace(space). */
bool rowspace_contains(const RatMatrix& space, const RatMatrix& vectors);

/* Projective equality of nonzero row vectors (proportionality). */
bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b);

} // namespace indgrass::ratlinalg
