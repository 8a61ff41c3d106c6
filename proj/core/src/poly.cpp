#include "bergman/poly.hpp"

#include "bergman/errors.hpp"

#include <ostream>
#include <string>

namespace bergman {

LaurentPoly2 LaurentPoly2::constant(const Rational& c) {
  return monomial(0, 0, c);
}

LaurentPoly2 LaurentPoly2::monomial(std::int64_t e1, std::int64_t e2,
                                    const Rational& c) {
  LaurentPoly2 p;
  p.add_term({e1, e2}, c);
  return p;
}

void LaurentPoly2::add_term(Exponent e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LaurentPoly2::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Complex ipow(Complex x, std::int64_t n) {
  if (n == 0) return {1.0, 0.0};
  if (n < 0) {
    if (x == Complex{}) {
      throw DivisionByZero("zero raised to negative power " +
                           std::to_string(n));
    }
    x = 1.0 / x;
    n = -n;
  }
  Complex result{1.0, 0.0};
  while (n > 0) {
    if (n & 1) result *= x;
    n >>= 1;
    if (n > 0) x *= x;
  }
  return result;
}

Complex LaurentPoly2::eval(Complex t1, Complex t2) const {
  Complex sum{};
  for (const auto& [e, c] : terms_) {
    sum += c.convert_to<double>() * ipow(t1, e.e1) * ipow(t2, e.e2);
  }
  return sum;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& q) {
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& q) {
  for (const auto& [e, c] : q.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& p, const LaurentPoly2& q) {
  LaurentPoly2 r;
  for (const auto& [ep, cp] : p.terms_) {
    for (const auto& [eq, cq] : q.terms_) {
      r.add_term({ep.e1 + eq.e1, ep.e2 + eq.e2}, cp * cq);
    }
  }
  return r;
}

LaurentPoly2 pow(const LaurentPoly2& p, unsigned n) {
  LaurentPoly2 result = LaurentPoly2::constant(1);
  LaurentPoly2 base = p;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly2& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (e.e1 != 0) os << "*t1^" << e.e1;
    if (e.e2 != 0) os << "*t2^" << e.e2;
  }
  return os;
}

namespace {

void require_univariate_t1(const LaurentPoly2& p, const char* what) {
  for (const auto& [e, c] : p.terms()) {
    if (e.e2 != 0 || e.e1 < 0) {
      throw PreconditionViolated(std::string(what) +
                                 " is not a polynomial in t1 alone");
    }
  }
}

}  // namespace

UnivariateDivision divide_in_t1(const LaurentPoly2& num,
                                const LaurentPoly2& den) {
  require_univariate_t1(num, "dividend");
  require_univariate_t1(den, "divisor");
  if (den.is_zero()) throw DivisionByZero("division by the zero polynomial");

  const auto& [lead_e, lead_c] = *den.terms().rbegin();
  UnivariateDivision out;
  out.remainder = num;
  while (!out.remainder.is_zero()) {
    const auto& [re, rc] = *out.remainder.terms().rbegin();
    if (re.e1 < lead_e.e1) break;
    const LaurentPoly2 step =
        LaurentPoly2::monomial(re.e1 - lead_e.e1, 0, rc / lead_c);
    out.quotient += step;
    out.remainder -= step * den;
  }
  return out;
}

LaurentPoly2 expand_square_cyclotomic(std::int64_t k) {
  if (k < 1) {
    throw PreconditionViolated("expand_square_cyclotomic requires k >= 1");
  }
  const LaurentPoly2 num =
      LaurentPoly2::constant(1) - LaurentPoly2::monomial(k, 0);
  const LaurentPoly2 den =
      LaurentPoly2::constant(1) - LaurentPoly2::monomial(1, 0);
  const UnivariateDivision div = divide_in_t1(num, den);
  if (!div.remainder.is_zero()) {
    throw PreconditionViolated("1 - x^k is not divisible by 1 - x");
  }
  return div.quotient * div.quotient;
}

}  // namespace bergman
