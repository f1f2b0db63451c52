#include "quandlekit/domain.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "quandlekit/error.hpp"

namespace quandlekit {

bool is_prime(std::int64_t p)
{
  if (p < 2)
    return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

std::optional<BigInt> Integers::inverse(const BigInt &a) const
{
  if (a == 1 || a == -1)
    return a;
  return std::nullopt;
}

BigInt Integers::parse(const std::string &s) const
{
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0)
    throw Error(ErrorCode::malformed_input, "not an integer: '" + s + "'");
  return v;
}

std::optional<BigRational> Rationals::inverse(const BigRational &a) const
{
  if (sgn(a) == 0)
    return std::nullopt;
  return BigRational(1) / a;
}

BigRational Rationals::parse(const std::string &s) const
{
  BigRational v;
  if (s.empty() || v.set_str(s, 10) != 0 || v.get_den() == 0)
    throw Error(ErrorCode::malformed_input, "not a rational: '" + s + "'");
  v.canonicalize();
  return v;
}

PrimeField::PrimeField(std::int64_t p)
: p_(p)
{
  if (!is_prime(p))
    throw Error(ErrorCode::not_prime, std::to_string(p) + " is not prime");
  if (p >= (std::int64_t{1} << 31))
    throw Error(ErrorCode::not_prime, "modulus too large: " + std::to_string(p));
}

std::optional<std::int64_t> PrimeField::inverse(std::int64_t a) const
{
  a = from_int(a);
  if (a == 0)
    return std::nullopt;
  // Fermat: a^(p-2)
  std::int64_t result = 1, base = a, e = p_ - 2;
  while (e > 0) {
    if (e & 1)
      result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return result;
}

std::int64_t PrimeField::parse(const std::string &s) const
{
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used == 0 || used != s.size())
    throw Error(ErrorCode::malformed_input, "not an integer: '" + s + "'");
  return from_int(v);
}

std::optional<std::complex<double>> ComplexFloat::inverse(std::complex<double> a) const
{
  if (is_zero(a))
    return std::nullopt;
  return 1.0 / a;
}

std::string ComplexFloat::to_string(std::complex<double> a) const
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", a.real(), a.imag());
  return buf;
}

std::complex<double> ComplexFloat::parse(const std::string &s) const
{
  double re = 0, im = 0;
  char i = 0;
  if (std::sscanf(s.c_str(), "%lf%lf%c", &re, &im, &i) == 3 && i == 'i')
    return {re, im};
  std::size_t used = 0;
  try {
    re = std::stod(s, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used == 0 || used != s.size())
    throw Error(ErrorCode::malformed_input, "not a complex number: '" + s + "'");
  return re;
}

AnyDomain parse_domain(const std::string &spec)
{
  if (spec == "Z")
    return Integers{};
  if (spec == "Q")
    return Rationals{};
  if (spec == "C")
    return ComplexFloat{};
  std::string digits;
  if (spec.rfind("Zp:", 0) == 0)
    digits = spec.substr(3);
  else if (spec.size() > 1 && (spec[0] == 'F' || spec[0] == 'Z'))
    digits = spec.substr(1);
  if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos &&
      digits.size() < 12)
    return PrimeField(std::stoll(digits));
  throw Error(ErrorCode::malformed_input, "unknown domain '" + spec + "'");
}

std::string domain_label(const AnyDomain &d)
{
  if (auto *f = std::get_if<PrimeField>(&d))
    return "F" + std::to_string(f->p());
  return std::visit([](const auto &dom) { return dom.name(); }, d);
}

} // namespace quandlekit
