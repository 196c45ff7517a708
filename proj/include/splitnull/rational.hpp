#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

namespace splitnull {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are kept
/// inline; anything larger is promoted to a GMP rational and demoted again as
/// soon as a result fits. The representation is canonical: a value that fits
/// inline is never stored in GMP form, so equality can compare fields directly.
class Rational {
 public:
  Rational() noexcept = default;

  template <std::integral I>
  Rational(I value) {  // NOLINT(google-explicit-constructor): integers embed into Q
    if constexpr (std::is_signed_v<I>) {
      if (static_cast<std::int64_t>(value) != std::numeric_limits<std::int64_t>::min()) {
        num_ = static_cast<std::int64_t>(value);
        return;
      }
      assign(mpq_class(static_cast<long>(value)));
    } else {
      if (static_cast<std::uint64_t>(value) <=
          static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        num_ = static_cast<std::int64_t>(value);
        return;
      }
      assign(mpq_class(static_cast<unsigned long>(value)));
    }
  }

  /// num/den, reduced. Throws std::domain_error when den == 0.
  Rational(std::int64_t num, std::int64_t den);

  explicit Rational(const mpq_class& q) { assign(q); }

  /// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  Rational(const Rational& other);
  Rational& operator=(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_integer() const noexcept;
  int sign() const noexcept;

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);
  Rational operator-() const;
  Rational operator+() const { return *this; }

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  void assign(const mpq_class& q);
  bool store_if_small(__int128 num, __int128 den) noexcept;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

Rational abs(const Rational& q);

}  // namespace splitnull

namespace Eigen {

template <>
struct NumTraits<splitnull::Rational> : GenericNumTraits<splitnull::Rational> {
  using Real = splitnull::Rational;
  using NonInteger = splitnull::Rational;
  using Nested = splitnull::Rational;
  using Literal = splitnull::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };

  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
