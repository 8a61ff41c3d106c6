#pragma once

#include "bergman/intmat.hpp"
#include "bergman/kernel.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bergman {

/// A bounded monomial polyhedron together with the matrices derived from
/// its defining matrix.
class DomainSpec {
 public:
  /// Normalizes `b`; throws SingularMatrix or UnboundedDomain.
  explicit DomainSpec(const IntMatrix2& b);

  [[nodiscard]] const IntMatrix2& b() const { return b_; }
  [[nodiscard]] const IntMatrix2& adj_b() const { return adj_b_; }
  [[nodiscard]] const Integer& det_b() const { return det_b_; }
  [[nodiscard]] const ColumnReduction& reduction() const { return reduction_; }
  [[nodiscard]] const IntMatrix2& a() const { return reduction_.a; }
  [[nodiscard]] const HermiteDecomposition& hermite() const { return hermite_; }

  /// |z1|^{b(i,0)} |z2|^{b(i,1)} for the i-th defining row, with 0^0 = 1
  /// and 0^negative = +infinity.
  [[nodiscard]] double defining_monomial(int row, double r1, double r2) const;

 private:
  IntMatrix2 b_;
  IntMatrix2 adj_b_;
  Integer det_b_;
  ColumnReduction reduction_;
  HermiteDecomposition hermite_;
};

bool membership(const DomainSpec& spec, const Point& z);

/// ||z^alpha||^2 / pi^2 = 4 det(B) / (d1 d2), d_j = <2 alpha + 2, adj(B) e_j>.
/// Throws NotSquareIntegrable if some d_j <= 0.
Rational monomial_norm(const DomainSpec& spec, Exponent alpha);

inline constexpr std::int64_t kDefaultTruncationCap = 640;

struct SeriesResult {
  Complex value;
  std::int64_t truncation = 0;
};

/// Bergman kernel as the sum of t^alpha / ||z^alpha||^2 over the square
/// integrable Laurent monomials with max(|alpha1|, |alpha2|) <= M. M starts at
/// 40 and doubles (clamped to `cap`) until the relative change drops below
/// tol / 10. Throws NoConvergence if that has not happened at M = cap.
SeriesResult series_kernel(const DomainSpec& spec, const Point& z,
                           const Point& w, double tol,
                           std::int64_t cap = kDefaultTruncationCap);

/// (p1 p2^k2, p2^k1): disc times punctured disc onto |z1|^k1 < |z2|^k2 < 1.
Point hartogs_cover(std::int64_t k1, std::int64_t k2, const Point& p);

/// j-th local inverse of hartogs_cover, using the principal k1-th root of q2.
Point hartogs_branch(std::int64_t k1, std::int64_t k2, std::int64_t j,
                     const Point& q);

/// K_H(hartogs_cover(p), q) for H = {|z1|^k1 < |z2|^k2 < 1}, from the
/// transformation law for proper maps: the product kernel summed over the k1
/// local inverses of the cover, weighted by their Jacobians.
Complex bell_sum_hartogs(std::int64_t k1, std::int64_t k2, const Point& p,
                         const Point& q);

/// K_U(p, q) obtained by pulling the Hartogs-type kernel of
/// V = {|z1|^{det A} < |z2|^h < 1} back along the monomial biholomorphism
/// x -> x^L (rows of L as exponents). K_V is evaluated by bell_sum_hartogs
/// after lifting through `branch` in [0, det A). Coordinates of p and q must
/// be nonzero.
Complex transported_kernel(const DomainSpec& spec, const Point& p,
                           const Point& q, std::int64_t branch = 0);

/// sum_j ((1 - a^k1)/(1 - a z^{j k2}))^2 ((1 - b^k1)/(1 - b z^{-j}))^2 z^{-j(1-k2)}
/// with z = exp(2 pi i / k1).
Complex hartogs_branch_sum(std::int64_t k1, std::int64_t k2, Complex a,
                           Complex b);

/// |h(z^k2 a, z^-1 b) - z^{1-k2} h(a, b)| / |h(a, b)|.
double h_symmetry_check(std::int64_t k1, std::int64_t k2, Complex a, Complex b);

struct PointPair {
  Point z;
  Point w;
};

/// Seeded sampler: moduli uniform in [0.05, 0.95), angles uniform; keeps
/// points whose defining monomials are both < 0.9. Deterministic for a seed.
/// Throws SamplingExhausted after 10^6 consecutive rejections.
std::vector<PointPair> sample_points(const DomainSpec& spec, std::size_t n,
                                     std::uint64_t seed);

enum class OracleKind { kSeries, kBell };

const char* to_string(OracleKind kind);
OracleKind oracle_kind_from_string(const std::string& s);
double default_tolerance(OracleKind kind);

struct VerificationEntry {
  Point z;
  Point w;
  Complex closed_form;
  Complex oracle;
  double rel_err = 0.0;
  std::int64_t truncation = 0;     // series only
  std::optional<std::string> error;  // e.g. "NoConvergence"
};

struct VerificationReport {
  IntMatrix2 matrix;
  OracleKind oracle_kind = OracleKind::kSeries;
  double tol = 0.0;
  std::uint64_t seed = 0;
  std::vector<VerificationEntry> entries;  // in sample order
  double max_rel_err = 0.0;
  std::int64_t truncation_used = 0;
  bool passed = false;
};

struct VerifyOptions {
  OracleKind kind = OracleKind::kSeries;
  std::size_t n_points = 20;
  std::optional<double> tol;  // defaults per oracle kind
  std::uint64_t seed = 0;
  std::int64_t trunc_cap = kDefaultTruncationCap;
};

/// Compares the closed form against the chosen oracle at seeded points.
VerificationReport verify(const DomainSpec& spec, const VerifyOptions& opts);

}  // namespace bergman
