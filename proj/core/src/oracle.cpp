#include "bergman/oracle.hpp"

#include "bergman/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace bergman {

DomainSpec::DomainSpec(const IntMatrix2& b)
    : b_(check_bounded(b)),
      adj_b_(adjugate(b_)),
      det_b_(det(b_)),
      reduction_(reduce_adjugate(b_)),
      hermite_(bergman::hermite(reduction_.a)) {}

namespace {

// r^e with 0^0 = 1 and 0^negative = +inf.
double real_power(double r, const Integer& e) {
  const double ed = e.convert_to<double>();
  if (r == 0.0) {
    if (e == 0) return 1.0;
    return e > 0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return std::pow(r, ed);
}

}  // namespace

double DomainSpec::defining_monomial(int row, double r1, double r2) const {
  return real_power(r1, b_(row, 0)) * real_power(r2, b_(row, 1));
}

bool membership(const DomainSpec& spec, const Point& z) {
  const double r1 = std::abs(z[0]);
  const double r2 = std::abs(z[1]);
  return spec.defining_monomial(0, r1, r2) < 1.0 &&
         spec.defining_monomial(1, r1, r2) < 1.0;
}

namespace {

// d_j = <2 alpha + 2, column j of adj(B)>.
std::array<Integer, 2> integrability_weights(const DomainSpec& spec,
                                             Exponent alpha) {
  const IntMatrix2& c = spec.adj_b();
  const Integer v1 = 2 * Integer(alpha.e1) + 2;
  const Integer v2 = 2 * Integer(alpha.e2) + 2;
  return {v1 * c(0, 0) + v2 * c(1, 0), v1 * c(0, 1) + v2 * c(1, 1)};
}

}  // namespace

Rational monomial_norm(const DomainSpec& spec, Exponent alpha) {
  const auto [d1, d2] = integrability_weights(spec, alpha);
  if (d1 <= 0 || d2 <= 0) {
    std::ostringstream os;
    os << "z^(" << alpha.e1 << "," << alpha.e2 << ") is not square integrable"
       << " (d = " << d1 << ", " << d2 << ")";
    throw NotSquareIntegrable(os.str());
  }
  return Rational(4 * spec.det_b(), d1 * d2);
}

namespace {

// t^n for n in [-cap, cap], split as exp(log_mag[n]) * phase[n] so that the
// huge and tiny factors of a product never overflow separately.
class PowerTable {
 public:
  PowerTable(Complex t, std::int64_t cap)
      : cap_(cap),
        zero_(t == Complex{}),
        log_mag_(static_cast<std::size_t>(2 * cap + 1)),
        phase_(static_cast<std::size_t>(2 * cap + 1)) {
    const double r = std::abs(t);
    const Complex unit = zero_ ? Complex{1.0, 0.0} : t / r;
    const double log_r = zero_ ? 0.0 : std::log(r);
    Complex up{1.0, 0.0};
    Complex down{1.0, 0.0};
    for (std::int64_t n = 0; n <= cap; ++n) {
      log_mag_[index(n)] = static_cast<double>(n) * log_r;
      log_mag_[index(-n)] = -static_cast<double>(n) * log_r;
      phase_[index(n)] = up;
      phase_[index(-n)] = down;
      up *= unit;
      down *= std::conj(unit);
    }
  }

  // False for 0^negative.
  [[nodiscard]] bool defined(std::int64_t n) const { return !zero_ || n >= 0; }
  // Log-magnitude; -inf for 0^positive.
  [[nodiscard]] double log_mag(std::int64_t n) const {
    if (zero_ && n > 0) return -std::numeric_limits<double>::infinity();
    return log_mag_[index(n)];
  }
  [[nodiscard]] Complex phase(std::int64_t n) const { return phase_[index(n)]; }

 private:
  [[nodiscard]] std::size_t index(std::int64_t n) const {
    return static_cast<std::size_t>(n + cap_);
  }

  std::int64_t cap_;
  bool zero_;
  std::vector<double> log_mag_;
  std::vector<Complex> phase_;
};

class SeriesAccumulator {
 public:
  SeriesAccumulator(const DomainSpec& spec, const Point& z, const Point& w,
                    std::int64_t cap)
      : p1_(z[0] * std::conj(w[0]), cap), p2_(z[1] * std::conj(w[1]), cap) {
    const IntMatrix2& c = spec.adj_b();
    c00_ = c(0, 0).convert_to<double>();
    c01_ = c(0, 1).convert_to<double>();
    c10_ = c(1, 0).convert_to<double>();
    c11_ = c(1, 1).convert_to<double>();
    inv_4det_ = 1.0 / (4.0 * spec.det_b().convert_to<double>());
  }

  // Adds every alpha with prev < max(|alpha1|, |alpha2|) <= m.
  void add_shell(std::int64_t prev, std::int64_t m) {
    for (std::int64_t a1 = -m; a1 <= m; ++a1) {
      if (prev >= 0 && std::abs(a1) <= prev) {
        for (std::int64_t a2 = -m; a2 < -prev; ++a2) add(a1, a2);
        for (std::int64_t a2 = prev + 1; a2 <= m; ++a2) add(a1, a2);
      } else {
        for (std::int64_t a2 = -m; a2 <= m; ++a2) add(a1, a2);
      }
    }
  }

  [[nodiscard]] Complex sum() const { return sum_ / (std::numbers::pi * std::numbers::pi); }

 private:
  void add(std::int64_t a1, std::int64_t a2) {
    const double v1 = 2.0 * static_cast<double>(a1) + 2.0;
    const double v2 = 2.0 * static_cast<double>(a2) + 2.0;
    const double d1 = v1 * c00_ + v2 * c10_;
    const double d2 = v1 * c01_ + v2 * c11_;
    if (d1 <= 0.0 || d2 <= 0.0) return;
    if (!p1_.defined(a1) || !p2_.defined(a2)) {
      throw PreconditionViolated(
          "series point lies on a coordinate axis outside the domain");
    }
    const double lm = p1_.log_mag(a1) + p2_.log_mag(a2);
    if (lm < -745.0) return;
    sum_ += (d1 * d2 * inv_4det_ * std::exp(lm)) * (p1_.phase(a1) * p2_.phase(a2));
  }

  PowerTable p1_;
  PowerTable p2_;
  double c00_ = 0, c01_ = 0, c10_ = 0, c11_ = 0;
  double inv_4det_ = 0;
  Complex sum_{};
};

}  // namespace

SeriesResult series_kernel(const DomainSpec& spec, const Point& z,
                           const Point& w, double tol, std::int64_t cap) {
  constexpr std::int64_t kStart = 40;
  if (cap < kStart) {
    throw PreconditionViolated("series truncation cap must be >= 40");
  }
  SeriesAccumulator acc(spec, z, w, cap);
  std::int64_t m = kStart;
  acc.add_shell(-1, m);
  Complex prev = acc.sum();
  while (m < cap) {
    const std::int64_t next = std::min(2 * m, cap);
    acc.add_shell(m, next);
    m = next;
    const Complex cur = acc.sum();
    if (std::abs(cur - prev) <= 0.1 * tol * std::abs(cur)) return {cur, m};
    prev = cur;
  }
  std::ostringstream os;
  os << "series did not stabilize within truncation cap " << cap;
  throw NoConvergence(os.str());
}

namespace {

Complex root_of_unity(std::int64_t j, std::int64_t k) {
  const std::int64_t r = ((j % k) + k) % k;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                             static_cast<double>(k));
}

Complex principal_root(Complex q, std::int64_t k) {
  return std::pow(q, 1.0 / static_cast<double>(k));
}

void require_cover(std::int64_t k1, std::int64_t k2) {
  validate(HartogsParams{k1, k2});
}

}  // namespace

Point hartogs_cover(std::int64_t k1, std::int64_t k2, const Point& p) {
  return {p[0] * ipow(p[1], k2), ipow(p[1], k1)};
}

Point hartogs_branch(std::int64_t k1, std::int64_t k2, std::int64_t j,
                     const Point& q) {
  if (q[1] == Complex{}) {
    throw PreconditionViolated("branch inverse needs q2 != 0");
  }
  const Complex r = principal_root(q[1], k1);
  return {q[0] * ipow(r, -k2) * root_of_unity(-j * k2, k1),
          r * root_of_unity(j, k1)};
}

Complex bell_sum_hartogs(std::int64_t k1, std::int64_t k2, const Point& p,
                         const Point& q) {
  require_cover(k1, k2);
  if (p[1] == Complex{} || q[1] == Complex{}) {
    throw PreconditionViolated("bell_sum_hartogs needs p2 != 0 and q2 != 0");
  }
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const Complex r = principal_root(q[1], k1);

  Complex sum{};
  for (std::int64_t j = 0; j < k1; ++j) {
    const Point branch = hartogs_branch(k1, k2, j, q);
    const Complex f1 = 1.0 - p[0] * std::conj(branch[0]);
    const Complex f2 = 1.0 - p[1] * std::conj(branch[1]);
    if (std::abs(f1) < 1e-14 || std::abs(f2) < 1e-14) {
      throw SingularEvaluation("product kernel denominator vanishes");
    }
    const Complex product_kernel = 1.0 / (pi2 * f1 * f1 * f2 * f2);
    // Jacobian determinant of the j-th local inverse at q.
    const Complex jac = ipow(r, 1 - k1 - k2) *
                        root_of_unity(j * (1 - k2), k1) /
                        static_cast<double>(k1);
    sum += product_kernel * std::conj(jac);
  }
  const Complex cover_jac = static_cast<double>(k1) * ipow(p[1], k1 + k2 - 1);
  return sum / cover_jac;
}

Complex transported_kernel(const DomainSpec& spec, const Point& p,
                           const Point& q, std::int64_t branch) {
  for (const Complex& c : {p[0], p[1], q[0], q[1]}) {
    if (c == Complex{}) {
      throw PreconditionViolated("transported_kernel needs nonzero coordinates");
    }
  }
  const HermiteDecomposition& hd = spec.hermite();
  const std::int64_t k1 = to_int64(hd.det_a);
  const std::int64_t k2 = to_int64(hd.h);
  if (branch < 0 || branch >= k1) {
    throw PreconditionViolated("branch index out of range");
  }
  const std::int64_t l1 = to_int64(hd.ell1);
  const std::int64_t l2 = to_int64(hd.ell2);
  const std::int64_t a00 = to_int64(spec.a()(0, 0));
  const std::int64_t a10 = to_int64(spec.a()(1, 0));

  // x -> x^L, the biholomorphism from U onto V.
  auto to_v = [&](const Point& x) -> Point {
    return {ipow(x[0], l1) * ipow(x[1], l2), ipow(x[0], -a10) * ipow(x[1], a00)};
  };
  const Point zv = to_v(p);
  const Point wv = to_v(q);
  const Point lifted = hartogs_branch(k1, k2, branch, zv);
  const Complex kv = bell_sum_hartogs(k1, k2, lifted, wv);

  const Complex t1 = p[0] * std::conj(q[0]);
  const Complex t2 = p[1] * std::conj(q[1]);
  return ipow(t1, l1 - a10 - 1) * ipow(t2, l2 + a00 - 1) * kv;
}

Complex hartogs_branch_sum(std::int64_t k1, std::int64_t k2, Complex a,
                           Complex b) {
  require_cover(k1, k2);
  const Complex na = 1.0 - ipow(a, k1);
  const Complex nb = 1.0 - ipow(b, k1);
  Complex sum{};
  for (std::int64_t j = 0; j < k1; ++j) {
    const Complex da = 1.0 - a * root_of_unity(j * k2, k1);
    const Complex db = 1.0 - b * root_of_unity(-j, k1);
    if (std::abs(da) < 1e-14 || std::abs(db) < 1e-14) {
      throw SingularEvaluation("branch sum denominator vanishes");
    }
    const Complex fa = na / da;
    const Complex fb = nb / db;
    sum += fa * fa * fb * fb * root_of_unity(-j * (1 - k2), k1);
  }
  return sum;
}

double h_symmetry_check(std::int64_t k1, std::int64_t k2, Complex a,
                        Complex b) {
  const Complex base = hartogs_branch_sum(k1, k2, a, b);
  const Complex shifted = hartogs_branch_sum(
      k1, k2, root_of_unity(k2, k1) * a, root_of_unity(-1, k1) * b);
  return std::abs(shifted - root_of_unity(1 - k2, k1) * base) / std::abs(base);
}

std::vector<PointPair> sample_points(const DomainSpec& spec, std::size_t n,
                                     std::uint64_t seed) {
  if (n == 0) throw PreconditionViolated("sample_points needs n >= 1");
  std::mt19937_64 rng(seed);
  // 53 random bits; unlike std::uniform_real_distribution this is
  // reproducible across standard libraries.
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  auto draw = [&]() -> Point {
    constexpr long kMaxRejections = 1'000'000;
    for (long tries = 0; tries <= kMaxRejections; ++tries) {
      const double r1 = 0.05 + 0.9 * uniform();
      const double r2 = 0.05 + 0.9 * uniform();
      const double th1 = 2.0 * std::numbers::pi * uniform();
      const double th2 = 2.0 * std::numbers::pi * uniform();
      if (spec.defining_monomial(0, r1, r2) < 0.9 &&
          spec.defining_monomial(1, r1, r2) < 0.9) {
        return {std::polar(r1, th1), std::polar(r2, th2)};
      }
    }
    throw SamplingExhausted("no admissible sample after 10^6 rejections");
  };

  std::vector<PointPair> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Point z = draw();
    Point w = draw();
    out.push_back({z, w});
  }
  return out;
}

const char* to_string(OracleKind kind) {
  return kind == OracleKind::kSeries ? "series" : "bell";
}

OracleKind oracle_kind_from_string(const std::string& s) {
  if (s == "series") return OracleKind::kSeries;
  if (s == "bell") return OracleKind::kBell;
  throw ParseError("unknown oracle '" + s + "'");
}

double default_tolerance(OracleKind kind) {
  return kind == OracleKind::kSeries ? 1e-6 : 1e-9;
}

VerificationReport verify(const DomainSpec& spec, const VerifyOptions& opts) {
  VerificationReport report;
  report.matrix = spec.b();
  report.oracle_kind = opts.kind;
  report.tol = opts.tol.value_or(default_tolerance(opts.kind));
  report.seed = opts.seed;

  const KernelFormula formula = general_kernel(spec.b());
  bool all_ok = true;
  for (const PointPair& pp : sample_points(spec, opts.n_points, opts.seed)) {
    VerificationEntry e;
    e.z = pp.z;
    e.w = pp.w;
    e.closed_form = eval_kernel(formula, pp.z, pp.w);
    try {
      if (opts.kind == OracleKind::kSeries) {
        const SeriesResult s =
            series_kernel(spec, pp.z, pp.w, report.tol, opts.trunc_cap);
        e.oracle = s.value;
        e.truncation = s.truncation;
        report.truncation_used = std::max(report.truncation_used, s.truncation);
      } else {
        e.oracle = transported_kernel(spec, pp.z, pp.w);
      }
      e.rel_err = std::abs(e.closed_form - e.oracle) / std::abs(e.oracle);
      if (!std::isfinite(e.rel_err)) {
        e.rel_err = std::numeric_limits<double>::infinity();
        e.error = "NonFinite";
      }
    } catch (const Error& err) {
      e.oracle = Complex{std::nan(""), std::nan("")};
      e.rel_err = std::numeric_limits<double>::infinity();
      e.error = err.kind();
    }
    if (e.error) all_ok = false;
    report.max_rel_err = std::max(report.max_rel_err, e.rel_err);
    report.entries.push_back(std::move(e));
  }
  report.passed = all_ok && report.max_rel_err <= report.tol;
  return report;
}

}  // namespace bergman
