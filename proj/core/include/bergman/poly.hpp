#pragma once

#include "bergman/numbers.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>

namespace bergman {

/// Exponent pair (e1, e2) of the monomial t1^e1 t2^e2. Ordered
/// lexicographically; this order drives evaluation and serialization.
struct Exponent {
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Sparse Laurent polynomial in (t1, t2) with exact rational coefficients.
/// No stored coefficient is zero, so structural equality is value equality.
class LaurentPoly2 {
 public:
  using TermMap = std::map<Exponent, Rational>;

  LaurentPoly2() = default;

  static LaurentPoly2 constant(const Rational& c);
  static LaurentPoly2 monomial(std::int64_t e1, std::int64_t e2,
                               const Rational& c = 1);

  /// Adds c * t1^e1 t2^e2, dropping the term if it cancels.
  void add_term(Exponent e, const Rational& c);

  [[nodiscard]] Rational coefficient(Exponent e) const;
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  /// Evaluates in double precision, summing terms in lexicographic
  /// exponent order. Throws DivisionByZero on a negative exponent at zero.
  [[nodiscard]] Complex eval(Complex t1, Complex t2) const;

  LaurentPoly2& operator+=(const LaurentPoly2& q);
  LaurentPoly2& operator-=(const LaurentPoly2& q);
  friend LaurentPoly2 operator+(LaurentPoly2 p, const LaurentPoly2& q) {
    return p += q;
  }
  friend LaurentPoly2 operator-(LaurentPoly2 p, const LaurentPoly2& q) {
    return p -= q;
  }
  friend LaurentPoly2 operator*(const LaurentPoly2& p, const LaurentPoly2& q);
  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly2& p);

/// p^n for n >= 0.
LaurentPoly2 pow(const LaurentPoly2& p, unsigned n);

/// Integer power by repeated squaring; negative n inverts. 0^0 = 1.
/// Throws DivisionByZero for 0 raised to a negative power.
Complex ipow(Complex x, std::int64_t n);

/// Long division of polynomials in t1 alone (all exponents (e, 0), e >= 0).
struct UnivariateDivision {
  LaurentPoly2 quotient;
  LaurentPoly2 remainder;
};
UnivariateDivision divide_in_t1(const LaurentPoly2& num,
                                const LaurentPoly2& den);

/// ((1 - x^k) / (1 - x))^2 as a polynomial in x = t1, obtained by long
/// division followed by squaring. Requires k >= 1.
LaurentPoly2 expand_square_cyclotomic(std::int64_t k);

}  // namespace bergman
