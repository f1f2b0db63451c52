#ifndef QUANDLEKIT_DOMAIN_HPP
#define QUANDLEKIT_DOMAIN_HPP

#include <complex>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace quandlekit {

using BigInt = mpz_class;
using BigRational = mpq_class;

bool is_prime(std::int64_t p);

/// Unbounded integers.
struct Integers {
  using value_type = BigInt;
  static constexpr bool exact = true;
  static constexpr bool is_field = false;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return BigInt(static_cast<long>(v)); }
  value_type add(const value_type &a, const value_type &b) const { return a + b; }
  value_type sub(const value_type &a, const value_type &b) const { return a - b; }
  value_type neg(const value_type &a) const { return -a; }
  value_type mul(const value_type &a, const value_type &b) const { return a * b; }
  bool is_zero(const value_type &a) const { return sgn(a) == 0; }
  bool equal(const value_type &a, const value_type &b) const { return a == b; }
  /// ±1 are the only units.
  std::optional<value_type> inverse(const value_type &a) const;
  std::int64_t characteristic() const { return 0; }
  std::string to_string(const value_type &a) const { return a.get_str(); }
  value_type parse(const std::string &s) const;
  std::string name() const { return "Z"; }
  friend bool operator==(const Integers &, const Integers &) = default;
};

/// Exact reduced fractions.
struct Rationals {
  using value_type = BigRational;
  static constexpr bool exact = true;
  static constexpr bool is_field = true;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return BigRational(BigInt(static_cast<long>(v))); }
  value_type add(const value_type &a, const value_type &b) const { return a + b; }
  value_type sub(const value_type &a, const value_type &b) const { return a - b; }
  value_type neg(const value_type &a) const { return -a; }
  value_type mul(const value_type &a, const value_type &b) const { return a * b; }
  bool is_zero(const value_type &a) const { return sgn(a) == 0; }
  bool equal(const value_type &a, const value_type &b) const { return a == b; }
  std::optional<value_type> inverse(const value_type &a) const;
  std::int64_t characteristic() const { return 0; }
  /// "num/den", or just "num" for integers.
  std::string to_string(const value_type &a) const { return a.get_str(); }
  value_type parse(const std::string &s) const;
  std::string name() const { return "Q"; }
  friend bool operator==(const Rationals &, const Rationals &) = default;
};

/// Z/pZ with values kept in [0, p). p must be prime and below 2^31.
struct PrimeField {
  using value_type = std::int64_t;
  static constexpr bool exact = true;
  static constexpr bool is_field = true;

  /// Throws Error(not_prime).
  explicit PrimeField(std::int64_t p);

  std::int64_t p() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p_; }
  value_type from_int(long long v) const { return ((v % p_) + p_) % p_; }
  value_type add(value_type a, value_type b) const { return (a + b) % p_; }
  value_type sub(value_type a, value_type b) const { return (a - b + p_) % p_; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p_; }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  std::optional<value_type> inverse(value_type a) const;
  std::int64_t characteristic() const { return p_; }
  std::string to_string(value_type a) const { return std::to_string(a); }
  value_type parse(const std::string &s) const;
  std::string name() const { return "Zp"; }
  friend bool operator==(const PrimeField &, const PrimeField &) = default;

private:
  std::int64_t p_;
};

/// Double-precision complex numbers. Values within `tol` of zero count as zero.
struct ComplexFloat {
  using value_type = std::complex<double>;
  static constexpr bool exact = false;
  static constexpr bool is_field = true;

  double tol = 1e-9;

  value_type zero() const { return 0.0; }
  value_type one() const { return 1.0; }
  value_type from_int(long long v) const { return static_cast<double>(v); }
  value_type add(value_type a, value_type b) const { return a + b; }
  value_type sub(value_type a, value_type b) const { return a - b; }
  value_type neg(value_type a) const { return -a; }
  value_type mul(value_type a, value_type b) const { return a * b; }
  bool is_zero(value_type a) const { return std::abs(a) <= tol; }
  bool equal(value_type a, value_type b) const { return std::abs(a - b) <= tol; }
  std::optional<value_type> inverse(value_type a) const;
  std::int64_t characteristic() const { return 0; }
  std::string to_string(value_type a) const;
  value_type parse(const std::string &s) const;
  std::string name() const { return "C"; }
  friend bool operator==(const ComplexFloat &, const ComplexFloat &) = default;
};

template<typename D>
concept CoefficientDomain = requires(const D d, const typename D::value_type &a, long long v,
                                     const std::string &s) {
  { d.zero() } -> std::convertible_to<typename D::value_type>;
  { d.one() } -> std::convertible_to<typename D::value_type>;
  { d.from_int(v) } -> std::convertible_to<typename D::value_type>;
  { d.add(a, a) } -> std::convertible_to<typename D::value_type>;
  { d.sub(a, a) } -> std::convertible_to<typename D::value_type>;
  { d.neg(a) } -> std::convertible_to<typename D::value_type>;
  { d.mul(a, a) } -> std::convertible_to<typename D::value_type>;
  { d.is_zero(a) } -> std::same_as<bool>;
  { d.equal(a, a) } -> std::same_as<bool>;
  { d.inverse(a) } -> std::same_as<std::optional<typename D::value_type>>;
  { d.characteristic() } -> std::same_as<std::int64_t>;
  { d.to_string(a) } -> std::same_as<std::string>;
  { d.parse(s) } -> std::convertible_to<typename D::value_type>;
  { D::exact } -> std::convertible_to<bool>;
  { D::is_field } -> std::convertible_to<bool>;
};

template<typename D>
concept ExactDomain = CoefficientDomain<D> && D::exact;

template<typename D>
concept ExactField = ExactDomain<D> && D::is_field;

/// Runtime choice of domain, for the command line and serialization.
using AnyDomain = std::variant<Integers, Rationals, PrimeField, ComplexFloat>;

/// Parses "Z", "Q", "C", "Zp:<p>" or "F<p>" (also "Z<p>" for p ≥ 2).
AnyDomain parse_domain(const std::string &spec);
std::string domain_label(const AnyDomain &d);

} // namespace quandlekit

#endif // QUANDLEKIT_DOMAIN_HPP
