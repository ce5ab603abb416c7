#include "indgrass/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace indgrass::ratlinalg {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

RatPoly::RatPoly(const Rational& constant) {
    if (constant != 0)
        coeffs_.push_back(constant);
}

RatPoly RatPoly::monomial(std::size_t power, const Rational& coeff) {
    if (coeff == 0)
        return RatPoly();
    std::vector<Rational> c(power + 1);
    c[power] = coeff;
    return RatPoly(std::move(c));
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const Rational& RatPoly::coeff(std::size_t power) const {
    static const Rational zero(0);
    return power < coeffs_.size() ? coeffs_[power] : zero;
}

const Rational& RatPoly::leading() const {
    if (coeffs_.empty())
        throw invariant_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::operator-() const {
    RatPoly out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> prod(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(prod);
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rational& scale) {
    if (scale == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_)
        c *= scale;
    return *this;
}

namespace {

std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
    if (b.is_zero())
        throw input_error("polynomial division by zero");
    RatPoly q;
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(a.degree() - b.degree());
        const Rational c = a.leading() / b.leading();
        const RatPoly term = RatPoly::monomial(shift, c);
        q += term;
        a -= term * b;
    }
    return {q, a};
}

} // namespace

RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
        return a;
    return a * (Rational(1) / a.leading());
}

RatPoly divexact(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw invariant_error("inexact polynomial division");
    return q;
}

RatPoly poly_det(const std::vector<std::vector<RatPoly>>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw input_error("polynomial determinant of non-square matrix");
    if (n == 0)
        return RatPoly(Rational(1));
    if (n == 1)
        return m[0][0];
    RatPoly acc;
    std::vector<std::vector<RatPoly>> sub(n - 1, std::vector<RatPoly>(n - 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero())
            continue;
        for (std::size_t r = 0, sr = 0; r < n; ++r) {
            if (r == i)
                continue;
            for (std::size_t c = 1; c < n; ++c)
                sub[sr][c - 1] = m[r][c];
            ++sr;
        }
        RatPoly term = m[i][0] * poly_det(sub);
        if (i % 2 == 1)
            term = -term;
        acc += term;
    }
    return acc;
}

std::string to_string(const RatPoly& p, const std::string& var) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const Rational& c = p.coeff(k);
        if (c == 0)
            continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool unit = (mag == 1) && k > 0;
        if (!unit)
            out += to_string(mag);
        if (k > 0) {
            if (!unit)
                out += "*";
            out += var;
            if (k > 1)
                out += "^" + std::to_string(k);
        }
    }
    return out;
}

void make_primitive(std::vector<RatPoly>& entries) {
    RatPoly g;
    for (const auto& p : entries)
        g = gcd(g, p);
    if (g.is_zero())
        return;
    if (g.degree() > 0)
        for (auto& p : entries)
            p = divexact(p, g);
    Int num_gcd(0), den_lcm(1);
    for (const auto& p : entries)
        for (const auto& c : p.coeffs()) {
            if (c == 0)
                continue;
            num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(numerator(c)));
            den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
        }
    Rational scale(den_lcm, num_gcd);
    for (const auto& p : entries) {
        if (p.is_zero())
            continue;
        if (p.leading() * scale < 0)
            scale = -scale;
        break;
    }
    for (auto& p : entries)
        p *= scale;
}

} // namespace indgrass::ratlinalg
