#include "bkernel/cli.hpp"

#include "bergman/errors.hpp"
#include "bergman/format.hpp"
#include "bergman/json_io.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace bkernel {
namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

bergman::Integer parse_integer(const std::string& raw) {
  const std::string tok = strip(raw);
  std::size_t i = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
  if (i == tok.size()) throw bergman::ParseError("bad integer token '" + raw + "'");
  for (std::size_t j = i; j < tok.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(tok[j]))) {
      throw bergman::ParseError("bad integer token '" + raw + "'");
    }
  }
  return bergman::Integer(tok[0] == '+' ? tok.substr(1) : tok);
}

double parse_real(const std::string& raw) {
  const std::string tok = strip(raw);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (tok.empty() || used != tok.size() || !std::isfinite(v)) {
    throw bergman::ParseError("bad real token '" + raw + "'");
  }
  return v;
}

template <class T, class F>
std::array<std::array<T, 2>, 2> parse_pairs(const std::string& s, F parse_one,
                                            const char* what) {
  const std::vector<std::string> rows = split(s, ';');
  if (rows.size() != 2) {
    throw bergman::ParseError(std::string(what) + " '" + s +
                              "' must have two ';'-separated parts");
  }
  std::array<std::array<T, 2>, 2> out;
  for (std::size_t i = 0; i < 2; ++i) {
    const std::vector<std::string> cols = split(rows[i], ',');
    if (cols.size() != 2) {
      throw bergman::ParseError("part '" + rows[i] + "' of " + what + " '" + s +
                                "' must have two ','-separated entries");
    }
    out[i] = {parse_one(cols[0]), parse_one(cols[1])};
  }
  return out;
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::kText;
  if (s == "latex") return Format::kLatex;
  if (s == "json") return Format::kJson;
  throw bergman::ParseError("unknown format '" + s + "'");
}

OracleChoice parse_oracle(const std::string& s) {
  if (s == "series") return OracleChoice::kSeries;
  if (s == "bell") return OracleChoice::kBell;
  if (s == "both") return OracleChoice::kBoth;
  throw bergman::ParseError("unknown oracle '" + s + "'");
}

std::int64_t truncation_cap(const CliConfig& config) {
  if (config.trunc_cap) return *config.trunc_cap;
  if (const char* env = std::getenv("BKERNEL_TRUNC_CAP")) {
    const bergman::Integer v = parse_integer(env);
    return bergman::to_int64(v);
  }
  return bergman::kDefaultTruncationCap;
}

std::string format_complex(bergman::Complex c) {
  std::ostringstream os;
  os << std::setprecision(17) << c.real() << (c.imag() < 0 ? " - " : " + ")
     << std::abs(c.imag()) << "i";
  return os.str();
}

std::string verify_summary(const bergman::VerificationReport& r) {
  std::ostringstream os;
  os << "matrix " << r.matrix << "  oracle=" << bergman::to_string(r.oracle_kind)
     << "  tol=" << r.tol << "  seed=" << r.seed << "\n";
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    const auto& e = r.entries[i];
    os << "  point " << std::setw(3) << i << "  rel_err=" << std::setw(12)
       << e.rel_err;
    if (e.truncation > 0) os << "  M=" << e.truncation;
    if (e.error) os << "  error=" << *e.error;
    os << "\n";
  }
  os << "max_rel_err=" << r.max_rel_err << "  "
     << (r.passed ? "PASSED" : "FAILED") << "\n";
  return os.str();
}

int emit_kernel(const CliConfig& config, std::ostream& out) {
  const bergman::KernelFormula f = bergman::general_kernel(config.matrix);
  switch (config.format) {
    case Format::kJson:
      out << bergman::to_json(f).dump(2) << "\n";
      break;
    case Format::kLatex:
      out << bergman::to_latex(f) << "\n";
      break;
    case Format::kText:
      out << bergman::to_text(f);
      break;
  }
  return kExitOk;
}

int emit_verify(const CliConfig& config, std::ostream& out) {
  const bergman::DomainSpec spec(config.matrix);
  std::vector<bergman::OracleKind> kinds;
  if (config.oracle != OracleChoice::kBell) kinds.push_back(bergman::OracleKind::kSeries);
  if (config.oracle != OracleChoice::kSeries) kinds.push_back(bergman::OracleKind::kBell);

  bool passed = true;
  bergman::Json reports = bergman::Json::array();
  std::string text;
  for (const bergman::OracleKind kind : kinds) {
    bergman::VerifyOptions opts;
    opts.kind = kind;
    opts.n_points = config.points;
    opts.tol = config.tol;
    opts.seed = config.seed;
    opts.trunc_cap = truncation_cap(config);
    const bergman::VerificationReport r = bergman::verify(spec, opts);
    passed = passed && r.passed;
    reports.push_back(bergman::to_json(r));
    text += verify_summary(r);
  }
  if (config.format == Format::kJson) {
    out << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  } else {
    out << text;
  }
  return passed ? kExitOk : kExitVerifyFailed;
}

int emit_eval(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const bergman::DomainSpec spec(config.matrix);
  if (!bergman::membership(spec, config.z) || !bergman::membership(spec, config.w)) {
    err << "warning: evaluation point lies outside the domain\n";
  }
  const bergman::KernelFormula f = bergman::general_kernel(config.matrix);
  const bergman::Complex v = bergman::eval_kernel(f, config.z, config.w);
  if (config.format == Format::kJson) {
    out << bergman::Json{{"value", {v.real(), v.imag()}}}.dump() << "\n";
  } else {
    out << format_complex(v) << "\n";
  }
  return kExitOk;
}

int emit_shadow(const CliConfig& config, std::ostream& out) {
  const bergman::DomainSpec spec(config.matrix);
  out << "r1,r2,constraint\n";
  out << std::setprecision(12);
  for (const ShadowSample& s : shadow_boundary(spec, config.shadow_samples)) {
    out << s.r1 << "," << s.r2 << "," << s.constraint << "\n";
  }
  return kExitOk;
}

int dispatch(const CliConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.subcommand) {
    case Subcommand::kKernel:
      return emit_kernel(config, out);
    case Subcommand::kVerify:
      return emit_verify(config, out);
    case Subcommand::kEval:
      return emit_eval(config, out, err);
    case Subcommand::kShadow:
      return emit_shadow(config, out);
  }
  return kExitIoOrParse;
}

}  // namespace

bergman::IntMatrix2 parse_matrix(const std::string& s) {
  const auto m = parse_pairs<bergman::Integer>(s, parse_integer, "matrix");
  return {m[0][0], m[0][1], m[1][0], m[1][1]};
}

bergman::Point parse_point(const std::string& s) {
  const auto p = parse_pairs<double>(s, parse_real, "point");
  return {bergman::Complex(p[0][0], p[0][1]), bergman::Complex(p[1][0], p[1][1])};
}

std::vector<ShadowSample> shadow_boundary(const bergman::DomainSpec& spec,
                                          std::size_t samples_per_curve) {
  std::vector<ShadowSample> out;
  if (samples_per_curve == 0) return out;
  const double denom =
      samples_per_curve > 1 ? static_cast<double>(samples_per_curve - 1) : 1.0;
  for (int row = 0; row < 2; ++row) {
    const double e1 = spec.b()(row, 0).convert_to<double>();
    const double e2 = spec.b()(row, 1).convert_to<double>();
    for (std::size_t i = 0; i < samples_per_curve; ++i) {
      const double s = static_cast<double>(i) / denom;
      double r1 = 0.0;
      double r2 = 0.0;
      if (e2 != 0.0) {
        // r1^e1 r2^e2 = 1  <=>  r2 = r1^(-e1/e2)
        r1 = s;
        r2 = std::pow(r1, -e1 / e2);
      } else {
        r1 = 1.0;
        r2 = s;
      }
      if (r1 >= 0.0 && r1 <= 1.0 && r2 >= 0.0 && r2 <= 1.0) {
        out.push_back({r1, r2, row + 1});
      }
    }
  }
  return out;
}

std::optional<CliConfig> parse_args(int argc, const char* const* argv,
                                    std::ostream& out, std::ostream& err,
                                    int& exit_code) {
  CLI::App app{"Closed-form Bergman kernels of bounded monomial polyhedra in C^2"};
  app.require_subcommand(1);

  std::string matrix;
  std::string format = "text";
  std::string oracle = "both";
  std::string z;
  std::string w;
  CliConfig config;
  std::int64_t cap = 0;

  auto add_matrix = [&](CLI::App* sub) {
    sub->add_option("-m,--matrix", matrix,
                    "defining matrix \"b11,b21;b12,b22\" (row-major)")
        ->required();
    sub->add_option("-o,--out", config.out, "write output to FILE");
  };

  CLI::App* kernel = app.add_subcommand("kernel", "emit the kernel formula");
  add_matrix(kernel);
  kernel->add_option("-f,--format", format, "text | latex | json");

  CLI::App* verify = app.add_subcommand("verify", "check the closed form against oracles");
  add_matrix(verify);
  verify->add_option("-f,--format", format, "text | json");
  verify->add_option("--oracle", oracle, "series | bell | both");
  verify->add_option("-n,--points", config.points, "number of sample pairs")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol", config.tol, "relative tolerance")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", config.seed, "sampler seed");
  CLI::Option* cap_opt =
      verify->add_option("--trunc-cap", cap, "series truncation cap (default 640)")
          ->check(CLI::Range(std::int64_t{40}, std::int64_t{1} << 20));

  CLI::App* eval = app.add_subcommand("eval", "evaluate K(z, w)");
  add_matrix(eval);
  eval->add_option("-f,--format", format, "text | json");
  eval->add_option("-z", z, "point \"x1,y1;x2,y2\"")->required();
  eval->add_option("-w", w, "point \"x1,y1;x2,y2\"")->required();

  CLI::App* shadow = app.add_subcommand("shadow", "emit shadow boundary samples as CSV");
  add_matrix(shadow);
  shadow->add_option("--samples", config.shadow_samples, "samples per curve")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    exit_code = code == 0 ? kExitOk : kExitIoOrParse;
    return std::nullopt;
  }

  try {
    config.matrix = parse_matrix(matrix);
    config.format = parse_format(format);
    config.oracle = parse_oracle(oracle);
    if (*cap_opt) config.trunc_cap = cap;
    if (app.got_subcommand(kernel)) {
      config.subcommand = Subcommand::kKernel;
    } else if (app.got_subcommand(verify)) {
      config.subcommand = Subcommand::kVerify;
      if (config.format == Format::kLatex) {
        throw bergman::ParseError("verify supports text and json output");
      }
    } else if (app.got_subcommand(eval)) {
      config.subcommand = Subcommand::kEval;
      config.z = parse_point(z);
      config.w = parse_point(w);
    } else {
      config.subcommand = Subcommand::kShadow;
    }
  } catch (const bergman::ParseError& e) {
    err << "ParseError: " << e.what() << "\n";
    exit_code = kExitIoOrParse;
    return std::nullopt;
  }
  return config;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (config.out) {
    file.open(*config.out);
    if (!file) {
      err << "IOError: cannot open '" << *config.out << "' for writing\n";
      return kExitIoOrParse;
    }
    sink = &file;
  }

  int code = kExitOk;
  try {
    code = dispatch(config, *sink, err);
  } catch (const bergman::SingularMatrix& e) {
    err << e.kind() << ": " << e.what() << "\n";
    return kExitBadMatrix;
  } catch (const bergman::UnboundedDomain& e) {
    err << e.kind() << ": " << e.what() << "\n";
    return kExitBadMatrix;
  } catch (const bergman::PreconditionViolated& e) {
    err << e.kind() << ": " << e.what() << "\n";
    return kExitBadMatrix;
  } catch (const bergman::Error& e) {
    err << e.kind() << ": " << e.what() << "\n";
    return kExitIoOrParse;
  }

  if (file.is_open()) {
    file.flush();
    if (!file) {
      err << "IOError: failed writing '" << *config.out << "'\n";
      return kExitIoOrParse;
    }
  }
  return code;
}

}  // namespace bkernel
