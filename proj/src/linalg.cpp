#include "splitnull/linalg.hpp"

namespace splitnull {

QVector primitive_integer_vector(const QVector& v) {
  mpz_class lcm_den = 1;
  for (Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) lcm_den = lcm(lcm_den, v(i).denominator());
  }
  mpz_class gcd_num = 0;
  int first_sign = 0;
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) continue;
    const mpz_class scaled = v(i).numerator() * (lcm_den / v(i).denominator());
    gcd_num = gcd(gcd_num, scaled);
    if (first_sign == 0) first_sign = sgn(scaled);
  }
  if (first_sign == 0) return v;
  mpq_class scale(first_sign * lcm_den, gcd_num);
  scale.canonicalize();
  const Rational factor(scale);
  QVector out = v;
  for (Index i = 0; i < out.size(); ++i) out(i) *= factor;
  return out;
}

QMatrix clique_block_inverse(Index k) {
  if (k < 2) throw DomainError("I - J is singular for a clique of fewer than two vertices");
  QMatrix inv = QMatrix::Constant(k, k, -Rational(1, k - 1));
  for (Index i = 0; i < k; ++i) inv(i, i) += Rational(1);
  return inv;
}

}  // namespace splitnull
