#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gdc {

using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "num/den", integers and finite decimals such as "0.7".
// num/den in lowest terms; throws DomainError on a zero denominator.
Rational ratio(const BigInt& num, const BigInt& den);
Rational parse_rational(const std::string& text);

// Always "num/den", with zero as "0/1".
std::string to_string(const Rational& q);

double to_double(const Rational& q);
Rational pow(const Rational& base, unsigned exponent);

// Coefficients in increasing degree.
using Polynomial = std::vector<Rational>;

Rational evaluate(const Polynomial& poly, const Rational& x);
Polynomial multiply(const Polynomial& a, const Polynomial& b);
void trim(Polynomial& poly);

}  // namespace gdc
