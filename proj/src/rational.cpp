#include "splitnull/rational.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace splitnull {

namespace {

static_assert(sizeof(long) == 8, "GMP interop assumes LP64");

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(__int128 num, __int128 den) noexcept {
  return den <= kMax && num <= kMax && num >= -kMax;
}

std::int64_t abs64(std::int64_t v) noexcept { return v < 0 ? -v : v; }

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (num == std::numeric_limits<std::int64_t>::min() ||
      den == std::numeric_limits<std::int64_t>::min()) {
    mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    assign(q);
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(abs64(num), den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view part) {
    if (!part.empty() && (part.front() == '-' || part.front() == '+')) part.remove_prefix(1);
    if (part.empty()) return false;
    for (char c : part)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const std::string_view whole(s);
  if (slash == std::string::npos ? !valid_int(whole)
                                 : !valid_int(whole.substr(0, slash)) ||
                                       !valid_int(whole.substr(slash + 1))) {
    throw std::invalid_argument("not a rational literal: '" + s + "'");
  }
  if (s.front() == '+') s.erase(0, 1);
  mpz_class num;
  mpz_class den = 1;
  if (slash == std::string::npos) {
    num.set_str(s, 10);
  } else {
    std::string d = s.substr(slash + 1);
    if (d.front() == '+') d.erase(0, 1);
    num.set_str(s.substr(0, slash), 10);
    den.set_str(d, 10);
  }
  if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_) {
    if (big_)
      *big_ = *other.big_;
    else
      big_ = std::make_unique<mpq_class>(*other.big_);
  } else {
    big_.reset();
  }
  return *this;
}

void Rational::assign(const mpq_class& q) {
  const mpz_srcptr n = q.get_num_mpz_t();
  const mpz_srcptr d = q.get_den_mpz_t();
  if (mpz_fits_slong_p(n) && mpz_fits_slong_p(d)) {
    const long nv = mpz_get_si(n);
    if (nv != std::numeric_limits<long>::min()) {
      num_ = nv;
      den_ = mpz_get_si(d);
      big_.reset();
      return;
    }
  }
  num_ = 0;
  den_ = 1;
  if (big_)
    *big_ = q;
  else
    big_ = std::make_unique<mpq_class>(q);
}

bool Rational::store_if_small(__int128 num, __int128 den) noexcept {
  if (!fits(num, den)) return false;
  num_ = static_cast<std::int64_t>(num);
  den_ = static_cast<std::int64_t>(den);
  big_.reset();
  return true;
}

bool Rational::is_integer() const noexcept {
  return big_ ? mpz_cmp_ui(big_->get_den_mpz_t(), 1) == 0 : den_ == 1;
}

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q;
  mpz_set_si(q.get_num_mpz_t(), num_);
  mpz_set_si(q.get_den_mpz_t(), den_);
  return q;
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      if (store_if_small(static_cast<__int128>(num_) + rhs.num_, 1)) return *this;
    } else {
      // Henrici: with g = gcd(b, d), gcd(a*(d/g) + c*(b/g), b*(d/g)) divides g.
      const std::int64_t g = std::gcd(den_, rhs.den_);
      const std::int64_t lhs_scale = rhs.den_ / g;
      const std::int64_t rhs_scale = den_ / g;
      __int128 num = static_cast<__int128>(num_) * lhs_scale +
                     static_cast<__int128>(rhs.num_) * rhs_scale;
      __int128 den = static_cast<__int128>(den_) * lhs_scale;
      if (num == 0) {
        num_ = 0;
        den_ = 1;
        return *this;
      }
      __int128 rem = num % g;
      if (rem < 0) rem = -rem;
      const std::int64_t h = std::gcd(static_cast<std::int64_t>(rem), g);
      num /= h;
      den /= h;
      if (store_if_small(num, den)) return *this;
    }
  }
  assign(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    const std::int64_t g1 = std::gcd(abs64(num_), rhs.den_);
    const std::int64_t g2 = std::gcd(abs64(rhs.num_), den_);
    const __int128 num = static_cast<__int128>(num_ / g1) * (rhs.num_ / g2);
    const __int128 den = static_cast<__int128>(den_ / g2) * (rhs.den_ / g1);
    if (store_if_small(num, den)) return *this;
  }
  assign(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!rhs.big_) {
    Rational inv;
    inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
    inv.den_ = abs64(rhs.num_);
    return *this *= inv;
  }
  assign(to_mpq() / rhs.to_mpq());
  return *this;
}

Rational Rational::operator-() const {
  Rational out;
  if (big_) {
    out.assign(-*big_);
  } else {
    out.num_ = -num_;
    out.den_ = den_;
  }
  return out;
}

bool operator==(const Rational& a, const Rational& b) noexcept {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical representation: small and big never coincide
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

}  // namespace splitnull
