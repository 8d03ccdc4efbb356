#include "gdc/rational.hpp"

#include <cstdlib>

#include "gdc/errors.hpp"

namespace gdc {

namespace {

bool all_digits(const std::string& s, std::size_t from = 0) {
  if (from >= s.size()) return false;
  for (std::size_t i = from; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

bool signed_integer(const std::string& s) {
  if (s.empty()) return false;
  return all_digits(s, (s[0] == '-' || s[0] == '+') ? 1 : 0);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!signed_integer(num) || !signed_integer(den)) {
      throw DomainError("malformed rational: " + text);
    }
    BigInt n(num[0] == '+' ? num.substr(1) : num, 10);
    BigInt d(den[0] == '+' ? den.substr(1) : den, 10);
    if (d == 0) throw DomainError("zero denominator: " + text);
    Rational q(n, d);
    q.canonicalize();
    return q;
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole = whole.substr(1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) {
      throw DomainError("malformed rational: " + text);
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational q(BigInt(whole + frac, 10), scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  if (!signed_integer(s)) throw DomainError("malformed rational: " + text);
  return Rational(BigInt(s[0] == '+' ? s.substr(1) : s, 10));
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

Rational evaluate(const Polynomial& poly, const Rational& x) {
  Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void trim(Polynomial& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

std::size_t size_cap(const std::string& name, std::size_t fallback) {
  std::string var = "GDC_CAP_" + name;
  const char* raw = std::getenv(var.c_str());
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') return fallback;
  return static_cast<std::size_t>(v);
}

void check_cap(const std::string& name, std::size_t fallback, std::size_t value) {
  std::size_t cap = size_cap(name, fallback);
  if (value > cap) {
    throw SizeLimitError(name + " = " + std::to_string(value) + " exceeds cap " +
                         std::to_string(cap));
  }
}

}  // namespace gdc
