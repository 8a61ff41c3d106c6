#pragma once

#include "bergman/numbers.hpp"

#include <array>
#include <iosfwd>

namespace bergman {

/// Exact 2x2 integer matrix, row-major.
///
/// The defining matrix of a monomial polyhedron is written in the
/// literature as b_j^i (superscript = row, subscript = column), so the
/// defining inequalities are |z1|^{m(i,0)} |z2|^{m(i,1)} < 1 for i = 0, 1.
/// All accessors here use plain (row, col) with zero-based indices.
class IntMatrix2 {
 public:
  IntMatrix2() = default;
  IntMatrix2(Integer m00, Integer m01, Integer m10, Integer m11)
      : e_{std::move(m00), std::move(m01), std::move(m10), std::move(m11)} {}

  static IntMatrix2 identity() { return {1, 0, 0, 1}; }

  [[nodiscard]] const Integer& operator()(int row, int col) const {
    return e_[static_cast<std::size_t>(2 * row + col)];
  }
  Integer& operator()(int row, int col) {
    return e_[static_cast<std::size_t>(2 * row + col)];
  }

  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
  friend IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y);

 private:
  std::array<Integer, 4> e_{};
};

std::ostream& operator<<(std::ostream& os, const IntMatrix2& m);

/// The column swap [[0,1],[1,0]].
inline IntMatrix2 column_swap() { return {0, 1, 1, 0}; }

Integer det(const IntMatrix2& m);

/// [[m11, -m01], [-m10, m00]]; satisfies m * adjugate(m) = det(m) * I.
IntMatrix2 adjugate(const IntMatrix2& m);

/// Swaps the two rows when det(b) < 0. Swapping rows permutes the defining
/// inequalities, so the domain is unchanged.
/// Throws SingularMatrix when det(b) == 0.
IntMatrix2 normalize(const IntMatrix2& b);

/// Normalizes `b` and checks that the domain it defines is bounded.
///
/// For det(b) > 0 the domain is bounded iff both unit vectors lie in the
/// nonnegative cone spanned by the rows of b, i.e. iff b^{-1} = adj(b)/det(b)
/// is entrywise nonnegative.
/// Throws SingularMatrix or UnboundedDomain.
IntMatrix2 check_bounded(const IntMatrix2& b);

/// adj(b) = a * diag(g1, g2), with every column of `a` primitive.
struct ColumnReduction {
  IntMatrix2 a;
  Integer g1;
  Integer g2;
};

/// Divides each column of adj(b) by the gcd of its entries. `b` must be
/// normalized and bounded; the result has det(a) = det(b)/(g1 g2) > 0 and
/// nonnegative entries.
ColumnReduction reduce_adjugate(const IntMatrix2& b);

/// Shorthand for reduce_adjugate(b).a.
IntMatrix2 reduce_to_a(const IntMatrix2& b);

struct BezoutResult {
  Integer g;
  Integer alpha;
  Integer gamma;
};

/// g = gcd(|a|, |c|) and alpha*a + gamma*c = g.
/// Throws PreconditionViolated for (0, 0).
BezoutResult extended_gcd(const Integer& a, const Integer& c);

/// Unimodular reduction L * A = H with
///   L = [[ell1, ell2], [-c, a]],  H = [[1, h], [0, det A]],
///   det L = 1,  0 <= h < det A,  gcd(h, det A) = 1,
/// for A = [[a, b], [c, d]]. The pair (ell1, ell2) is unique.
struct HermiteDecomposition {
  IntMatrix2 l;
  IntMatrix2 h_matrix;
  Integer ell1;
  Integer ell2;
  Integer h;
  Integer det_a;
};

/// Requires det(a) > 0 and both columns of `a` primitive; throws
/// PreconditionViolated otherwise.
HermiteDecomposition hermite(const IntMatrix2& a);

}  // namespace bergman
