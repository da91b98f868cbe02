#include "linshap/poly.hpp"

#include <algorithm>
#include <utility>

#include "linshap/errors.hpp"

namespace linshap {

namespace {
const BigInt kZero = 0;
}

Poly::Poly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Poly::Poly(std::initializer_list<long> coeffs) {
    coeffs_.assign(coeffs.begin(), coeffs.end());
    trim();
}

Poly Poly::constant(const BigInt& c) {
    return monomial(c, 0);
}

Poly Poly::monomial(const BigInt& c, std::size_t power) {
    if (c == 0) {
        return Poly();
    }
    std::vector<BigInt> v(power + 1);
    v[power] = c;
    return Poly(std::move(v));
}

std::size_t Poly::degree() const {
    if (is_zero()) {
        throw InvalidParameterError("the zero polynomial has no degree");
    }
    return coeffs_.size() - 1;
}

const BigInt& Poly::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : kZero;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Poly Poly::operator+(const Poly& other) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = coefficient(i) + other.coefficient(i);
    }
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& other) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = coefficient(i) - other.coefficient(i);
    }
    return Poly(std::move(out));
}

Poly Poly::times_x() const {
    if (is_zero()) {
        return Poly();
    }
    std::vector<BigInt> out(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i + 1] = coeffs_[i];
    }
    return Poly(std::move(out));
}

Poly Poly::times_one_minus_x() const {
    if (is_zero()) {
        return Poly();
    }
    // out[i] = c[i] - c[i-1]
    std::vector<BigInt> out(coeffs_.size() + 1);
    out[0] = coeffs_[0];
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out[i] = coeffs_[i] - coeffs_[i - 1];
    }
    out[coeffs_.size()] = -coeffs_.back();
    return Poly(std::move(out));
}

Poly Poly::divided_by_one_minus_x() const {
    if (is_zero()) {
        return Poly();
    }
    std::vector<BigInt> out(coeffs_.size() - 1);
    BigInt running = 0;
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
        running += coeffs_[i];
        out[i] = running;
    }
    if (running + coeffs_.back() != 0) {
        throw NotDivisibleError(
            "polynomial is not divisible by 1-x (coefficient sum is nonzero)");
    }
    return Poly(std::move(out));
}

Poly Poly::scaled(const BigInt& factor) const {
    if (factor == 0 || is_zero()) {
        return Poly();
    }
    std::vector<BigInt> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i] = coeffs_[i] * factor;
    }
    return Poly(std::move(out));
}

BigInt Poly::coefficient_sum() const {
    BigInt sum = 0;
    for (const BigInt& c : coeffs_) {
        sum += c;
    }
    return sum;
}

Rational Poly::integrate_unit_interval() const {
    Rational total = 0;
    for (std::size_t s = 0; s < coeffs_.size(); ++s) {
        if (coeffs_[s] != 0) {
            total += make_rational(coeffs_[s], BigInt(s + 1));
        }
    }
    return total;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + Rational(coeffs_[i]);
    }
    return acc;
}

std::string Poly::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += coeffs_[i].get_str();
    }
    out += ']';
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.to_string();
}

}  // namespace linshap
