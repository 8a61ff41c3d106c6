#include "bergman/quadrature.hpp"

#include "bergman/errors.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace bergman {
namespace {

constexpr double kTol = 1e-13;
constexpr unsigned kMaxDepth = 20;
// Slices below this stall adaptive error control in subnormal arithmetic.
constexpr double kNegligible = 1e-250;

using HalfLine = boost::math::quadrature::exp_sinh<double>;

template <class F>
double integrate(HalfLine& half_line, F f, double lo, double hi) {
  if (!(lo < hi)) return 0.0;
  if (std::isinf(lo)) {
    // exp_sinh wants the infinite end on the right.
    double error = 0.0;
    double l1 = 0.0;
    std::size_t levels = 0;
    return half_line.integrate([&](double s) { return f(-s); }, -hi,
                               std::numeric_limits<double>::infinity(), kTol,
                               &error, &l1, &levels);
  }
  // The adaptive rule compares an unscaled local error against a scaled
  // tolerance, so integrate over [-1, 1] and rescale here.
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  return half * boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
                    [&](double x) { return f(mid + half * x); }, -1.0, 1.0,
                    kMaxDepth, kTol);
}

}  // namespace

double shadow_norm_quadrature(const DomainSpec& spec, Exponent alpha,
                              double depth) {
  const IntMatrix2& b = spec.b();
  const double b00 = b(0, 0).convert_to<double>();
  const double b01 = b(0, 1).convert_to<double>();
  const double b10 = b(1, 0).convert_to<double>();
  const double b11 = b(1, 1).convert_to<double>();
  const double v1 = 2.0 * static_cast<double>(alpha.e1) + 2.0;
  const double v2 = 2.0 * static_cast<double>(alpha.e2) + 2.0;
  const double bottom = -depth;
  thread_local HalfLine outer_rule;
  thread_local HalfLine inner_rule;

  // Normalized bounded B has b00, b11 > 0 and b01, b10 <= 0. For fixed u2 < 0
  // the first row bounds u1 above, the second bounds it below when b10 != 0.
  auto slice = [&](double u2) {
    const double hi = (-b01 / b00) * u2;
    double lo = b10 != 0.0 ? (b11 / -b10) * u2
                           : -std::numeric_limits<double>::infinity();
    lo = std::max(lo, bottom);
    if (!(lo < hi)) return 0.0;
    // Upper bound of the slice integral; an infinite lower end forces v1 > 0.
    const double bound =
        std::isinf(lo) ? std::exp(v1 * hi + v2 * u2) / v1
                       : std::exp(std::max(v1 * hi, v1 * lo) + v2 * u2) * (hi - lo);
    if (bound < kNegligible) return 0.0;
    const double inner =
        integrate(inner_rule, [&](double u1) { return std::exp(v1 * u1 + v2 * u2); }, lo, hi);
    return inner;
  };

  const double outer = integrate(outer_rule, slice, bottom, 0.0);
  return 4.0 * outer;
}

}  // namespace bergman
