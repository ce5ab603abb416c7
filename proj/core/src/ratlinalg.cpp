#include "indgrass/ratlinalg.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace indgrass::ratlinalg {

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw input_error("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Int(text));
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty())
            throw input_error("malformed rational literal: " + text);
        Int d(den);
        if (d == 0)
            throw input_error("zero denominator in rational literal: " + text);
        return Rational(Int(num), d);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const input_error*>(&e))
            throw;
        throw input_error("malformed rational literal: " + text);
    }
}

std::string to_string(const Rational& value) {
    return value.str();
}

Int numerator(const Rational& value) {
    return boost::multiprecision::numerator(value);
}

Int denominator(const Rational& value) {
    return boost::multiprecision::denominator(value);
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw input_error("matrix entry count does not match dimensions");
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::row_vector(std::vector<Rational> entries) {
    const std::size_t n = entries.size();
    return RatMatrix(1, n, std::move(entries));
}

Rational& RatMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_)
        throw input_error("matrix index out of range");
    return data_[i * cols_ + j];
}

const Rational& RatMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw input_error("matrix index out of range");
    return data_[i * cols_ + j];
}

std::vector<Rational> RatMatrix::row(std::size_t i) const {
    std::vector<Rational> out(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        out[j] = at(i, j);
    return out;
}

RatMatrix transpose(const RatMatrix& m) {
    RatMatrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            t.at(j, i) = m.at(i, j);
    return t;
}

RatMatrix mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows())
        throw input_error("matrix product dimension mismatch");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() == 0)
        return b;
    if (b.rows() == 0)
        return a;
    if (a.cols() != b.cols())
        throw input_error("vstack column mismatch");
    RatMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m.at(a.rows() + i, j) = b.at(i, j);
    return m;
}

std::size_t echelonize(RatMatrix& m, bool reduce) {
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows() && m.at(sel, col) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(sel, j), m.at(pivot_row, j));
        const Rational inv = Rational(1) / m.at(pivot_row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m.at(pivot_row, j) *= inv;
        const std::size_t start = reduce ? 0 : pivot_row + 1;
        for (std::size_t i = start; i < m.rows(); ++i) {
            if (i == pivot_row || m.at(i, col) == 0)
                continue;
            const Rational factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= factor * m.at(pivot_row, j);
        }
        ++pivot_row;
    }
    return pivot_row;
}

std::size_t rank(RatMatrix m) {
    return echelonize(m, false);
}

std::size_t kernel_dim(const RatMatrix& m) {
    return m.cols() - rank(m);
}

Rational det(const RatMatrix& m) {
    if (m.rows() != m.cols())
        throw input_error("determinant of non-square matrix");
    RatMatrix w = m;
    Rational result = 1;
    for (std::size_t col = 0; col < w.cols(); ++col) {
        std::size_t sel = col;
        while (sel < w.rows() && w.at(sel, col) == 0)
            ++sel;
        if (sel == w.rows())
            return Rational(0);
        if (sel != col) {
            for (std::size_t j = 0; j < w.cols(); ++j)
                std::swap(w.at(sel, j), w.at(col, j));
            result = -result;
        }
        result *= w.at(col, col);
        const Rational inv = Rational(1) / w.at(col, col);
        for (std::size_t i = col + 1; i < w.rows(); ++i) {
            if (w.at(i, col) == 0)
                continue;
            const Rational factor = w.at(i, col) * inv;
            for (std::size_t j = col; j < w.cols(); ++j)
                w.at(i, j) -= factor * w.at(col, j);
        }
    }
    return result;
}

namespace {

void check_index_set(const std::vector<std::size_t>& idx, std::size_t bound,
                     const char* which) {
    std::set<std::size_t> seen;
    for (std::size_t v : idx) {
        if (v >= bound)
            throw input_error(std::string("minor ") + which + " index out of range");
        if (!seen.insert(v).second)
            throw input_error(std::string("duplicate minor ") + which + " index");
    }
}

} // namespace

Rational minor(const RatMatrix& m, const std::vector<std::size_t>& row_idx,
               const std::vector<std::size_t>& col_idx) {
    if (row_idx.size() != col_idx.size())
        throw input_error("minor index sets must have equal size");
    check_index_set(row_idx, m.rows(), "row");
    check_index_set(col_idx, m.cols(), "column");
    RatMatrix sub(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            sub.at(i, j) = m.at(row_idx[i], col_idx[j]);
    return det(sub);
}

RatMatrix nullspace(const RatMatrix& m) {
    RatMatrix r = m;
    const std::size_t rk = echelonize(r, true);
    std::vector<std::size_t> pivot_col(rk);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t i = 0, col = 0; i < rk; ++i) {
        while (r.at(i, col) == 0)
            ++col;
        pivot_col[i] = col;
        is_pivot[col] = true;
    }
    RatMatrix basis(m.cols() - rk, m.cols());
    std::size_t out = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        basis.at(out, f) = 1;
        for (std::size_t i = 0; i < rk; ++i)
            basis.at(out, pivot_col[i]) = -r.at(i, f);
        ++out;
    }
    return basis;
}

RatMatrix row_basis(const RatMatrix& m) {
    RatMatrix r = m;
    const std::size_t rk = echelonize(r, true);
    RatMatrix basis(rk, m.cols());
    for (std::size_t i = 0; i < rk; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            basis.at(i, j) = r.at(i, j);
    return basis;
}

RatMatrix sum_rows(const RatMatrix& a, const RatMatrix& b) {
    return row_basis(vstack(a, b));
}

RatMatrix intersect_rows(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols())
        throw input_error("rowspace intersection column mismatch");
    const std::size_t n = a.cols();
    if (a.rows() == 0 || b.rows() == 0)
        return RatMatrix(0, n);
    /* x^T a = y^T b  <=>  (x, y) in the kernel of [a^T | -b^T]. */
    RatMatrix system(n, a.rows() + b.rows());
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            system.at(j, i) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i)
            system.at(j, a.rows() + i) = -b.at(i, j);
    }
    const RatMatrix coeffs = nullspace(system);
    RatMatrix vectors(coeffs.rows(), n);
    for (std::size_t k = 0; k < coeffs.rows(); ++k)
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (coeffs.at(k, i) == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                vectors.at(k, j) += coeffs.at(k, i) * a.at(i, j);
        }
    return row_basis(vectors);
}

bool rowspace_contains(const RatMatrix& space, const RatMatrix& vectors) {
    if (space.cols() != vectors.cols())
        throw input_error("rowspace membership column mismatch");
    return rank(space) == rank(vstack(space, vectors));
}

bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size())
        return false;
    bool a_zero = true, b_zero = true;
    for (const auto& v : a)
        if (v != 0) { a_zero = false; break; }
    for (const auto& v : b)
        if (v != 0) { b_zero = false; break; }
    if (a_zero || b_zero)
        return false;
    std::size_t lead = 0;
    while (a[lead] == 0 && b[lead] == 0)
        ++lead;
    if (a[lead] == 0 || b[lead] == 0)
        return false;
    const Rational scale = a[lead] / b[lead];
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != scale * b[i])
            return false;
    return true;
}

} // namespace indgrass::ratlinalg
