#include "linshap/rational.hpp"

#include "linshap/errors.hpp"

namespace linshap {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw InvalidParameterError("rational denominator must be nonzero");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt pow3(unsigned long n) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, n);
    return r;
}

std::string fraction_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string decimal_string(const Rational& value, unsigned digits) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);

    const bool negative = sgn(value) < 0;
    BigInt num = abs(value.get_num());
    const BigInt& den = value.get_den();

    // Round |value|*10^digits half-to-even.
    BigInt quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), BigInt(num * scale).get_mpz_t(),
                den.get_mpz_t());
    const int half = cmp(rem * 2, den);
    if (half > 0 || (half == 0 && mpz_odd_p(quot.get_mpz_t()))) {
        quot += 1;
    }

    BigInt whole, frac;
    mpz_fdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), quot.get_mpz_t(),
                scale.get_mpz_t());

    std::string out;
    if (negative && quot != 0) {
        out += '-';
    }
    out += whole.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        out += '.';
        out.append(digits - f.size(), '0');
        out += f;
    }
    return out;
}

}  // namespace linshap
