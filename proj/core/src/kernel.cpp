#include "bergman/kernel.hpp"

#include "bergman/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace bergman {

Integer triangular_coefficient(const Integer& k, const Integer& r) {
  if (r < 0 || r > 2 * k - 2) return 0;
  if (r <= k - 1) return 1 + r;
  return 2 * k - (1 + r);
}

Integer permanent(const IntMatrix2& p) {
  return p(0, 0) * p(1, 1) + p(0, 1) * p(1, 0);
}

Integer coefficient_index(const IntMatrix2& p, const Integer& g1,
                          const Integer& g2) {
  const Integer& p00 = p(0, 0);
  const Integer& p10 = p(1, 0);
  return p00 * g1 + p10 * g2 - 2 * p00 * p10 + p00 + p10 - 1 - permanent(p) +
         abs(det(p));
}

void validate(const HartogsParams& params) {
  const auto [k1, k2] = params;
  const bool classical = k1 == 1 && k2 == 1;
  if (!classical && (k1 < 1 || k2 < 0 || k2 >= k1 || gcd_abs(k1, k2) != 1)) {
    std::ostringstream os;
    os << "Hartogs parameters require 0 <= k2 < k1 and gcd(k1, k2) = 1"
       << " (or k1 = k2 = 1), got "
       << "k1=" << k1 << " k2=" << k2;
    throw PreconditionViolated(os.str());
  }
}

KernelFormula hartogs_kernel(const HartogsParams& params) {
  validate(params);
  const std::int64_t k1 = params.k1;
  const std::int64_t k2 = params.k2;

  KernelFormula f;
  f.b = {k1, -k2, 0, 1};
  f.a = {1, k2, 0, k1};
  f.det_a = k1;

  const Integer k = k1;
  for (std::int64_t b1 = 0; b1 <= 2 * k1 - 2; ++b1) {
    const Integer d1 = triangular_coefficient(k, b1);
    if (d1 == 0) continue;
    for (std::int64_t b2 = 0; b2 <= 2 * k2; ++b2) {
      const Integer idx =
          Integer(k1) * b2 + Integer(b1) * k2 + k1 + k2 - 1 - 2 * Integer(k1) * k2;
      const Integer c = d1 * triangular_coefficient(k, idx);
      if (c != 0) f.numerator.add_term({b1, b2}, Rational(c));
    }
  }

  f.denominator.push_back(
      {LaurentPoly2::monomial(0, k2) - LaurentPoly2::monomial(k1, 0), 2});
  f.denominator.push_back(
      {LaurentPoly2::constant(1) - LaurentPoly2::monomial(0, 1), 2});
  return f;
}

bool LinearBand::contains(const Integer& g1, const Integer& g2) const {
  const Integer v = c1 * g1 + c2 * g2 + c0;
  return lo <= v && v <= hi;
}

bool SupportBounds::contains(const Integer& g1, const Integer& g2) const {
  return g1 >= 0 && g1 <= g1_max && g2 >= 0 && g2 <= g2_max &&
         parallelogram[0].contains(g1, g2) && parallelogram[1].contains(g1, g2);
}

SupportBounds support_bounds(const IntMatrix2& a) {
  const Integer d = det(a);
  if (d <= 0) {
    throw PreconditionViolated("support_bounds requires det > 0");
  }
  const Integer& a00 = a(0, 0);
  const Integer& a01 = a(0, 1);
  const Integer& a10 = a(1, 0);
  const Integer& a11 = a(1, 1);

  SupportBounds s;
  s.g1_max = 2 * a10 + 2 * a11 - 2;
  s.g2_max = 2 * a00 + 2 * a01 - 2;
  s.parallelogram[0] = {a00, a10,
                        -2 * a00 * a10 + a00 + a10 - 2 * a10 * a01 - 1, 0,
                        2 * d - 2};
  s.parallelogram[1] = {a01, a11,
                        -2 * a10 * a01 + a01 + a11 - 2 * a01 * a11 - 1, 0,
                        2 * d - 2};
  return s;
}

Exponent palindrome_partner(const SupportBounds& bounds, Exponent e) {
  return {to_int64(bounds.g1_max) - e.e1, to_int64(bounds.g2_max) - e.e2};
}

KernelFormula general_kernel(const IntMatrix2& b_in) {
  KernelFormula f;
  f.b = check_bounded(b_in);
  f.a = reduce_to_a(f.b);
  f.det_a = det(f.a);

  const IntMatrix2 ar = f.a * column_swap();
  const SupportBounds box = support_bounds(f.a);
  const std::int64_t g1_max = to_int64(box.g1_max);
  const std::int64_t g2_max = to_int64(box.g2_max);

  for (std::int64_t g1 = 0; g1 <= g1_max; ++g1) {
    for (std::int64_t g2 = 0; g2 <= g2_max; ++g2) {
      const Integer d1 =
          triangular_coefficient(f.det_a, coefficient_index(f.a, g1, g2));
      if (d1 == 0) continue;
      const Integer d2 =
          triangular_coefficient(f.det_a, coefficient_index(ar, g1, g2));
      if (d2 == 0) continue;
      f.numerator.add_term({g1, g2}, Rational(d1 * d2));
    }
  }

  // (t2^{a01} - t1^{a11}) and (t1^{a10} - t2^{a00}), in that order.
  const std::int64_t a00 = to_int64(f.a(0, 0));
  const std::int64_t a01 = to_int64(f.a(0, 1));
  const std::int64_t a10 = to_int64(f.a(1, 0));
  const std::int64_t a11 = to_int64(f.a(1, 1));
  f.denominator.push_back(
      {LaurentPoly2::monomial(0, a01) - LaurentPoly2::monomial(a11, 0), 2});
  f.denominator.push_back(
      {LaurentPoly2::monomial(a10, 0) - LaurentPoly2::monomial(0, a00), 2});
  return f;
}

namespace {

double term_magnitude(const LaurentPoly2& p, Complex t1, Complex t2) {
  double m = 0.0;
  for (const auto& [e, c] : p.terms()) {
    m += std::abs(c.convert_to<double>()) *
         std::pow(std::abs(t1), static_cast<double>(e.e1)) *
         std::pow(std::abs(t2), static_cast<double>(e.e2));
  }
  return m;
}

}  // namespace

Complex eval_kernel(const KernelFormula& f, const Point& z, const Point& w) {
  const Complex t1 = z[0] * std::conj(w[0]);
  const Complex t2 = z[1] * std::conj(w[1]);

  Complex den{1.0, 0.0};
  for (const DenominatorFactor& factor : f.denominator) {
    const Complex v = factor.base.eval(t1, t2);
    if (std::abs(v) <= 1e-14 * term_magnitude(factor.base, t1, t2)) {
      std::ostringstream os;
      os << "denominator factor " << factor.base << " vanishes at t = ("
         << t1 << ", " << t2 << ")";
      throw SingularEvaluation(os.str());
    }
    den *= ipow(v, factor.power);
  }
  const double scale = std::pow(std::numbers::pi, f.pi_exponent) /
                       f.det_a.convert_to<double>();
  return scale * f.numerator.eval(t1, t2) / den;
}

}  // namespace bergman
