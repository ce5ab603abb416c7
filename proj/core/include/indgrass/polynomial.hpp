#pragma once

/* Univariate polynomials with exact rational coefficients: arithmetic,
 * evaluation, monic gcd, exact division, and determinants of polynomial
 * matrices (cofactor expansion). Coefficients are stored by ascending
 * power with no trailing zeros; the zero polynomial has degree -1. */

#include <cstddef>
#include <string>
#include <vector>

#include "indgrass/ratlinalg.hpp"

namespace indgrass::ratlinalg {

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    RatPoly(const Rational& constant); // NOLINT: implicit by design
    RatPoly(int constant) : RatPoly(Rational(constant)) {}

    static RatPoly monomial(std::size_t power, const Rational& coeff = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    /* -1 for the zero polynomial. */
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }

    /* Coefficient of x^power; 0 beyond the degree. */
    const Rational& coeff(std::size_t power) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;

    Rational eval(const Rational& x) const;

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& rhs);
    RatPoly& operator-=(const RatPoly& rhs);
    RatPoly& operator*=(const RatPoly& rhs);
    RatPoly& operator*=(const Rational& scale);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
    friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
    friend RatPoly operator*(const Rational& s, RatPoly a) { return a *= s; }

    bool operator==(const RatPoly& other) const = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/* Monic greatest common divisor; gcd(0, 0) = 0. */
RatPoly gcd(RatPoly a, RatPoly b);

/* Quotient a / b; throws invariant_error when the division is inexact. */
RatPoly divexact(const RatPoly& a, const RatPoly& b);

RatPoly poly_det(const std::vector<std::vector<RatPoly>>& m);

/* Human-readable form like "1 - 2*t + t^2" (debug and CLI output). */
std::string to_string(const RatPoly& p, const std::string& var = "t");

/* Divides out the monic gcd of all entries, then rescales by one rational
 * so every coefficient is an integer, their overall gcd is 1, and the
 * leading coefficient of the first nonzero entry is positive. The result
 * is the canonical representative of the projective class. */
void make_primitive(std::vector<RatPoly>& entries);

} // namespace indgrass::ratlinalg
