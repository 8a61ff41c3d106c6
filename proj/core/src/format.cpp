#include "bergman/format.hpp"

#include <sstream>
#include <vector>

namespace bergman {
namespace {

enum class Style { kText, kLatex };

std::string variable(int index, std::int64_t e, Style style) {
  std::ostringstream os;
  if (style == Style::kLatex) {
    os << "t_" << index;
    if (e != 1) os << "^{" << e << "}";
  } else {
    os << "t" << index;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::string magnitude(const Rational& c, Style style) {
  const Rational m = abs(c);
  if (denominator(m) == 1) return numerator(m).str();
  if (style == Style::kLatex) {
    return "\\frac{" + numerator(m).str() + "}{" + denominator(m).str() + "}";
  }
  return "(" + m.str() + ")";
}

std::string monomial(const Exponent& e, const Rational& c, Style style) {
  std::vector<std::string> parts;
  const bool unit = abs(c) == 1;
  if (!unit || (e.e1 == 0 && e.e2 == 0)) parts.push_back(magnitude(c, style));
  if (e.e1 != 0) parts.push_back(variable(1, e.e1, style));
  if (e.e2 != 0) parts.push_back(variable(2, e.e2, style));
  std::string out;
  const char* sep = style == Style::kLatex ? " " : "*";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string render(const LaurentPoly2& p, Style style) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  // Positive terms first, so (t2 - t1^4) reads the way it is usually written.
  for (const bool positive : {true, false}) {
    for (const auto& [e, c] : p.terms()) {
      if ((c > 0) != positive) continue;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      out += monomial(e, c, style);
      first = false;
    }
  }
  return out;
}

}  // namespace

std::string to_text(const LaurentPoly2& p) { return render(p, Style::kText); }
std::string to_latex(const LaurentPoly2& p) { return render(p, Style::kLatex); }

std::string to_text(const KernelFormula& f) {
  std::ostringstream os;
  os << "B = " << f.b << "\n";
  os << "A = " << f.a << "\n";
  os << "K(z,w) = 1/(" << f.det_a << "*pi^" << -f.pi_exponent
     << ") * g(t1,t2) / (";
  for (std::size_t i = 0; i < f.denominator.size(); ++i) {
    if (i > 0) os << " * ";
    os << "(" << to_text(f.denominator[i].base) << ")^"
       << f.denominator[i].power;
  }
  os << ")\n";
  os << "g(t1,t2) = " << to_text(f.numerator) << "\n";
  os << "t_j = z_j * conj(w_j)\n";
  return os.str();
}

std::string to_latex(const KernelFormula& f) {
  std::ostringstream os;
  os << "\\frac{1}{";
  if (f.det_a != 1) os << f.det_a;
  os << "\\pi^{" << -f.pi_exponent << "}}\\cdot\\frac{" << to_latex(f.numerator)
     << "}{";
  for (const DenominatorFactor& factor : f.denominator) {
    os << "\\left(" << to_latex(factor.base) << "\\right)^{" << factor.power
       << "}";
  }
  os << "}";
  return os.str();
}

}  // namespace bergman
