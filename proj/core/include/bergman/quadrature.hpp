#pragma once

#include "bergman/oracle.hpp"

#include <limits>

namespace bergman {

/// Numerical counterpart of monomial_norm: (1/pi^2) * (2 pi)^2 times the
/// integral of r1^{2 a1 + 1} r2^{2 a2 + 1} over the shadow of the domain.
///
/// Integrates in logarithmic coordinates u = log r, where the shadow becomes
/// the cone {B u < 0} and the integrand exp(<2 alpha + 2, u>). `depth`
/// truncates the cone to u1, u2 >= -depth; with the default (infinite) depth
/// the result only exists when the monomial is square integrable.
double shadow_norm_quadrature(
    const DomainSpec& spec, Exponent alpha,
    double depth = std::numeric_limits<double>::infinity());

}  // namespace bergman
