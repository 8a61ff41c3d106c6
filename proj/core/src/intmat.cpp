#include "bergman/intmat.hpp"

#include "bergman/errors.hpp"

#include <limits>
#include <ostream>
#include <sstream>
#include <utility>

namespace bergman {

std::int64_t to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw PreconditionViolated("integer " + v.str() +
                               " exceeds the 64-bit exponent range");
  }
  return v.convert_to<std::int64_t>();
}

Integer gcd_abs(const Integer& a, const Integer& b) {
  Integer x = abs(a);
  Integer y = abs(b);
  while (y != 0) {
    Integer r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
  IntMatrix2 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
    }
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix2& m) {
  return os << "[[" << m(0, 0) << ", " << m(0, 1) << "], [" << m(1, 0)
            << ", " << m(1, 1) << "]]";
}

Integer det(const IntMatrix2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

IntMatrix2 adjugate(const IntMatrix2& m) {
  return {m(1, 1), -m(0, 1), -m(1, 0), m(0, 0)};
}

IntMatrix2 normalize(const IntMatrix2& b) {
  const Integer d = det(b);
  if (d == 0) {
    std::ostringstream os;
    os << "matrix " << b << " has zero determinant";
    throw SingularMatrix(os.str());
  }
  if (d > 0) return b;
  return {b(1, 0), b(1, 1), b(0, 0), b(0, 1)};
}

IntMatrix2 check_bounded(const IntMatrix2& b) {
  IntMatrix2 n = normalize(b);
  const IntMatrix2 c = adjugate(n);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (c(i, j) < 0) {
        std::ostringstream os;
        os << "matrix " << b << " defines an unbounded domain (adjugate "
           << c << " has a negative entry)";
        throw UnboundedDomain(os.str());
      }
    }
  }
  return n;
}

ColumnReduction reduce_adjugate(const IntMatrix2& b) {
  const IntMatrix2 c = adjugate(b);
  ColumnReduction r;
  r.g1 = gcd_abs(c(0, 0), c(1, 0));
  r.g2 = gcd_abs(c(0, 1), c(1, 1));
  if (r.g1 == 0 || r.g2 == 0) {
    throw SingularMatrix("adjugate has a zero column");
  }
  r.a = {c(0, 0) / r.g1, c(0, 1) / r.g2, c(1, 0) / r.g1, c(1, 1) / r.g2};
  return r;
}

IntMatrix2 reduce_to_a(const IntMatrix2& b) { return reduce_adjugate(b).a; }

BezoutResult extended_gcd(const Integer& a, const Integer& c) {
  if (a == 0 && c == 0) {
    throw PreconditionViolated("extended_gcd(0, 0) is undefined");
  }
  // Invariant: old_r = old_s*|a| + old_t*|c| and r = s*|a| + t*|c|.
  Integer old_r = abs(a), r = abs(c);
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (a < 0) old_s = -old_s;
  if (c < 0) old_t = -old_t;
  return {old_r, old_s, old_t};
}

namespace {

// Quotient and remainder with 0 <= rem < m for m > 0.
std::pair<Integer, Integer> floor_divmod(const Integer& n, const Integer& m) {
  Integer q = n / m;
  Integer rem = n - q * m;
  if (rem < 0) {
    rem += m;
    q -= 1;
  }
  return {q, rem};
}

}  // namespace

HermiteDecomposition hermite(const IntMatrix2& a_mat) {
  const Integer& a = a_mat(0, 0);
  const Integer& b = a_mat(0, 1);
  const Integer& c = a_mat(1, 0);
  const Integer& d = a_mat(1, 1);

  const Integer det_a = det(a_mat);
  if (det_a <= 0) {
    std::ostringstream os;
    os << "hermite requires det > 0, got det" << a_mat << " = " << det_a;
    throw PreconditionViolated(os.str());
  }
  if (gcd_abs(a, c) != 1 || gcd_abs(b, d) != 1) {
    std::ostringstream os;
    os << "hermite requires primitive columns, got " << a_mat;
    throw PreconditionViolated(os.str());
  }

  const BezoutResult bz = extended_gcd(a, c);
  const Integer h1 = bz.alpha * b + bz.gamma * d;
  auto [q, h] = floor_divmod(h1, det_a);

  HermiteDecomposition out;
  out.ell1 = bz.alpha + q * c;
  out.ell2 = bz.gamma - a * q;
  out.h = std::move(h);
  out.det_a = det_a;
  out.l = {out.ell1, out.ell2, -c, a};
  out.h_matrix = {1, out.h, 0, det_a};
  return out;
}

}  // namespace bergman
