#pragma once

#include "bergman/intmat.hpp"
#include "bergman/poly.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace bergman {

using Point = std::array<Complex, 2>;

/// One squared binomial in the denominator of a kernel formula.
struct DenominatorFactor {
  LaurentPoly2 base;
  int power = 2;
  friend bool operator==(const DenominatorFactor&,
                         const DenominatorFactor&) = default;
};

/// Closed-form Bergman kernel
///
///   K(z, w) = pi^{pi_exponent} / det_a * numerator(t) / prod factor(t)^power
///
/// with t_j = z_j * conj(w_j). The scale is kept exact; pi enters only at
/// evaluation time.
struct KernelFormula {
  IntMatrix2 b;  // normalized defining matrix
  IntMatrix2 a;  // column-reduced adjugate
  Integer det_a;
  int pi_exponent = -2;
  LaurentPoly2 numerator;
  std::vector<DenominatorFactor> denominator;

  friend bool operator==(const KernelFormula&, const KernelFormula&) = default;
};

/// Coefficient of x^r in ((1 - x^k)/(1 - x))^2: a triangle rising from 1 at
/// r = 0 to k at r = k - 1 and back to 1 at r = 2k - 2; zero elsewhere.
Integer triangular_coefficient(const Integer& k, const Integer& r);

/// p00*p11 + p01*p10.
Integer permanent(const IntMatrix2& p);

/// Index fed to triangular_coefficient for the monomial t1^g1 t2^g2:
///   p00*g1 + p10*g2 - 2*p00*p10 + p00 + p10 - 1 - perm(P) + |det(P)|.
Integer coefficient_index(const IntMatrix2& p, const Integer& g1,
                          const Integer& g2);

/// Domain |z1|^k1 < |z2|^k2 < 1 with gcd(k1, k2) = 1 and 0 <= k2 < k1.
/// k2 = 0 (forcing k1 = 1) stands for the disc times punctured disc.
struct HartogsParams {
  std::int64_t k1 = 1;
  std::int64_t k2 = 0;
};

/// Throws PreconditionViolated unless 0 <= k2 < k1 and gcd(k1, k2) = 1.
void validate(const HartogsParams& params);

KernelFormula hartogs_kernel(const HartogsParams& params);

/// Kernel of the bounded monomial polyhedron defined by `b` (any row order).
/// Throws SingularMatrix or UnboundedDomain.
KernelFormula general_kernel(const IntMatrix2& b);

/// lo <= c1*g1 + c2*g2 + c0 <= hi.
struct LinearBand {
  Integer c1, c2, c0, lo, hi;
  [[nodiscard]] bool contains(const Integer& g1, const Integer& g2) const;
};

/// Where the numerator of general_kernel can have support.
struct SupportBounds {
  Integer g1_max;  // 0 <= g1 <= g1_max
  Integer g2_max;  // 0 <= g2 <= g2_max
  std::array<LinearBand, 2> parallelogram;
  [[nodiscard]] bool contains(const Integer& g1, const Integer& g2) const;
};

/// Requires det(a) > 0.
SupportBounds support_bounds(const IntMatrix2& a);

/// (g1_max - g1, g2_max - g2) maps the numerator support onto itself and
/// preserves coefficients.
Exponent palindrome_partner(const SupportBounds& bounds, Exponent e);

/// Evaluates the formula at (z, w). Throws SingularEvaluation if a
/// denominator factor vanishes to within 1e-14 of its term magnitudes.
Complex eval_kernel(const KernelFormula& f, const Point& z, const Point& w);

}  // namespace bergman
