#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "linshap/rational.hpp"

namespace linshap {

// Dense univariate polynomial over arbitrary-precision integers,
// coefficients stored lowest degree first. Canonical form: the highest
// stored coefficient is nonzero and the zero polynomial stores nothing,
// so equality is plain structural equality.
//
// The operation set is exactly what the coalition-weight recursion
// needs: addition, multiplication by x and by (1-x), exact division by
// (1-x), integer scaling, evaluation, and integration over [0,1].
// General multiplication and division are deliberately absent.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<BigInt> coeffs);
    Poly(std::initializer_list<long> coeffs);

    static Poly constant(const BigInt& c);
    static Poly monomial(const BigInt& c, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of a nonzero polynomial; the zero polynomial has no degree.
    std::size_t degree() const;
    std::span<const BigInt> coefficients() const { return coeffs_; }
    // Coefficient of x^power, zero beyond the stored range.
    const BigInt& coefficient(std::size_t power) const;

    friend bool operator==(const Poly&, const Poly&) = default;

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;

    // p(x) * x: shift every coefficient up one slot.
    Poly times_x() const;
    // p(x) * (1-x).
    Poly times_one_minus_x() const;
    // Exact inverse of times_one_minus_x via cumulated sums
    // (quotient coefficient s is lambda_0 + ... + lambda_s). Requires the
    // coefficient sum to vanish; throws NotDivisibleError otherwise.
    Poly divided_by_one_minus_x() const;
    Poly scaled(const BigInt& factor) const;

    BigInt coefficient_sum() const;
    // Integral over [0,1]: sum of coeff[s] / (s+1), reduced.
    Rational integrate_unit_interval() const;
    Rational eval(const Rational& x) const;

    // "[1,-2,1]" — lowest coefficient first, empty list for zero.
    std::string to_string() const;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace linshap
