#pragma once

#include "bergman/kernel.hpp"

#include <string>

namespace bergman {

/// Plain-text rendering, e.g. "t2^8 + t1*t2^4". Terms in lexicographic
/// exponent order; binomials print their positive terms first.
std::string to_text(const LaurentPoly2& p);
std::string to_latex(const LaurentPoly2& p);

/// Multi-line human readable form of K(z, w).
std::string to_text(const KernelFormula& f);

/// \frac{1}{n\pi^2}\cdot\frac{g(t_1,t_2)}{(\cdots)^2(\cdots)^2}
std::string to_latex(const KernelFormula& f);

}  // namespace bergman
