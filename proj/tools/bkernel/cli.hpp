#pragma once

#include "bergman/intmat.hpp"
#include "bergman/kernel.hpp"
#include "bergman/oracle.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bkernel {

enum class Subcommand { kKernel, kVerify, kEval, kShadow };
enum class Format { kText, kLatex, kJson };
enum class OracleChoice { kSeries, kBell, kBoth };

// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadMatrix = 1;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitIoOrParse = 3;

struct CliConfig {
  Subcommand subcommand = Subcommand::kKernel;
  bergman::IntMatrix2 matrix = bergman::IntMatrix2::identity();
  Format format = Format::kText;
  OracleChoice oracle = OracleChoice::kBoth;
  std::size_t points = 20;
  std::optional<double> tol;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> trunc_cap;  // falls back to BKERNEL_TRUNC_CAP
  std::optional<std::string> out;
  bergman::Point z{};  // eval only
  bergman::Point w{};  // eval only
  std::size_t shadow_samples = 400;
};

/// "b11,b21;b12,b22": rows separated by ';', entries by ','. Whitespace is
/// ignored. Throws bergman::ParseError naming the offending token.
bergman::IntMatrix2 parse_matrix(const std::string& s);

/// "x1,y1;x2,y2" -> (x1 + i y1, x2 + i y2).
bergman::Point parse_point(const std::string& s);

/// One (r1, r2, constraint) row of the shadow boundary CSV.
struct ShadowSample {
  double r1;
  double r2;
  int constraint;  // 1 or 2
};

/// Samples each curve r1^{b(i,0)} r2^{b(i,1)} = 1 inside the unit square.
std::vector<ShadowSample> shadow_boundary(const bergman::DomainSpec& spec,
                                          std::size_t samples_per_curve);

/// Parses argv into a config. Returns std::nullopt and sets `exit_code`
/// when the program should stop (help requested or bad arguments).
std::optional<CliConfig> parse_args(int argc, const char* const* argv,
                                    std::ostream& out, std::ostream& err,
                                    int& exit_code);

/// Executes a parsed command, writing results to `out` (or config.out).
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace bkernel
