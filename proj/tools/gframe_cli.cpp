// gframe: generate, analyze and verify finite g-frames.
//
//   gframe gen <random|parseval|nearly-parseval|extremal> [--n N] [--counts k1,k2,...]
//              [--epsilon E] [--seed S] [--out FILE]
//   gframe analyze FILE [--json]
//   gframe verify FILE [--suite budgets|parseval-approx|duals|bounds|all]
//                 [--trials T] [--seed S] [--json]
//   gframe dual FILE [--magnitude M] [--seed S] [--out FILE]
//
// Exit codes: 0 success, 2 usage or input error, 3 not a frame,
// 4 verification failure, 1 anything else.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gframe/gframe.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotAFrame = 3;
constexpr int kExitVerification = 4;

struct FrameDeleter {
  void operator()(gframe_frame* f) const { gframe_frame_free(f); }
};
using FramePtr = std::unique_ptr<gframe_frame, FrameDeleter>;

struct StringDeleter {
  void operator()(char* s) const { gframe_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

class CliFailure {
 public:
  CliFailure(int exit_code, std::string message)
      : exit_code_(exit_code), message_(std::move(message)) {}
  int exit_code() const { return exit_code_; }
  const std::string& message() const { return message_; }

 private:
  int exit_code_;
  std::string message_;
};

int exit_code_for(gframe_status status) {
  switch (status) {
    case GFRAME_OK: return kExitOk;
    case GFRAME_ERR_INVALID_ARGUMENT:
    case GFRAME_ERR_DIMENSION_MISMATCH:
    case GFRAME_ERR_EPSILON_OUT_OF_RANGE:
    case GFRAME_ERR_PARSE:
    case GFRAME_ERR_IO:
      return kExitUsage;
    case GFRAME_ERR_NOT_A_FRAME:
    case GFRAME_ERR_NOT_POSITIVE_DEFINITE:
    case GFRAME_ERR_RETRY_CAP_EXCEEDED:
      return kExitNotAFrame;
    default:
      return kExitInternal;
  }
}

void check(gframe_status status) {
  if (status == GFRAME_OK) return;
  std::string message = gframe_last_error();
  if (status == GFRAME_ERR_NOT_A_FRAME && !std::isnan(gframe_last_lambda_min())) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " (lambda_min = %.17g)", gframe_last_lambda_min());
    message += buf;
  }
  throw CliFailure(exit_code_for(status), message);
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

FramePtr load(const std::string& path) {
  gframe_frame* raw = nullptr;
  check(gframe_frame_load(path.c_str(), &raw));
  return FramePtr(raw);
}

std::vector<std::size_t> counts_of(const gframe_frame* f) {
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i < gframe_frame_count(f); ++i) counts.push_back(gframe_frame_rows(f, i));
  return counts;
}

void write_frame(const gframe_frame* f, const std::string& out_path) {
  if (out_path.empty()) {
    char* raw = nullptr;
    check(gframe_frame_to_json(f, &raw));
    OwnedString json(raw);
    std::cout << json.get() << '\n';
  } else {
    check(gframe_frame_save(f, out_path.c_str()));
  }
}

struct GenOptions {
  std::string kind;
  std::size_t n = 2;
  std::vector<std::size_t> counts;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenOptions& opt) {
  if ((opt.kind == "nearly-parseval" || opt.kind == "extremal") &&
      !(opt.epsilon >= 0.0 && opt.epsilon < 1.0)) {
    throw CliFailure(kExitUsage, "epsilon must lie in [0,1)");
  }
  std::vector<std::size_t> counts = opt.counts;
  if (counts.empty()) counts = {opt.n, opt.n};

  gframe_frame* raw = nullptr;
  if (opt.kind == "random") {
    check(gframe_gen_random(opt.n, counts.data(), counts.size(), opt.seed, &raw));
  } else if (opt.kind == "parseval") {
    check(gframe_gen_parseval(opt.n, counts.data(), counts.size(), opt.seed, &raw));
  } else if (opt.kind == "nearly-parseval") {
    check(gframe_gen_nearly_parseval(opt.n, counts.data(), counts.size(), opt.epsilon, opt.seed,
                                     &raw));
  } else {
    check(gframe_gen_extremal(opt.n, opt.epsilon, &raw));
  }
  FramePtr frame(raw);

  gframe_bounds bounds{};
  check(gframe_validate(frame.get(), &bounds));
  write_frame(frame.get(), opt.out);

  // Keep stdout clean for the frame document when no --out is given.
  std::ostream& log = opt.out.empty() ? std::cerr : std::cout;
  log << "n        " << gframe_frame_dim(frame.get()) << '\n'
      << "counts   " << join(counts_of(frame.get())) << '\n'
      << "A        " << num(bounds.lower) << '\n'
      << "B        " << num(bounds.upper) << '\n'
      << "epsilon  " << num(bounds.epsilon) << '\n';
  return kExitOk;
}

int run_analyze(const std::string& path, bool as_json) {
  auto frame = load(path);
  char* raw = nullptr;
  check(gframe_analyze_json(frame.get(), &raw));
  OwnedString text(raw);
  if (as_json) {
    std::cout << text.get() << '\n';
    return kExitOk;
  }
  const auto doc = nlohmann::json::parse(text.get());
  std::cout << "n                  " << doc["n"].get<std::size_t>() << '\n'
            << "operators          " << doc["operator_count"].get<std::size_t>() << '\n'
            << "output dims        " << join(doc["output_dims"].get<std::vector<std::size_t>>())
            << '\n'
            << "A                  " << num(doc["A"].get<double>()) << '\n'
            << "B                  " << num(doc["B"].get<double>()) << '\n'
            << "epsilon            " << num(doc["epsilon"].get<double>())
            << (doc["nearly_parseval"].get<bool>() ? "" : "  (not nearly Parseval)") << '\n'
            << "sum ||L_i||_F^2    " << num(doc["frobenius_energy"].get<double>()) << '\n'
            << "Tr(S)              " << num(doc["trace_S"].get<double>()) << '\n'
            << "Parseval gap       " << num(doc["parseval_gap"].get<double>());
  if (doc.contains("parseval_gap_bound")) {
    std::cout << "  (bound " << num(doc["parseval_gap_bound"].get<double>()) << ")";
  }
  std::cout << '\n' << "canonical dual gap " << num(doc["dual_gap"].get<double>());
  if (doc.contains("dual_gap_bound")) {
    std::cout << "  (bound " << num(doc["dual_gap_bound"].get<double>()) << ")";
  }
  std::cout << '\n';
  return kExitOk;
}

struct VerifyOptions {
  std::string path;
  std::string suite = "all";
  unsigned trials = 50;
  std::uint64_t seed = 0;
  bool json = false;
};

int run_verify(const VerifyOptions& opt) {
  auto frame = load(opt.path);
  gframe_bounds bounds{};
  check(gframe_validate(frame.get(), &bounds));

  char* raw = nullptr;
  int overall = 0;
  check(gframe_verify_json(frame.get(), opt.suite.c_str(), opt.trials, opt.seed, &raw, &overall));
  OwnedString text(raw);
  if (opt.json) {
    std::cout << text.get() << '\n';
  } else {
    const auto doc = nlohmann::json::parse(text.get());
    const auto& summary = doc["frame_summary"];
    std::cout << "frame: n = " << summary["n"].get<std::size_t>()
              << ", counts = " << join(summary["counts"].get<std::vector<std::size_t>>())
              << ", A = " << num(summary["A"].get<double>())
              << ", B = " << num(summary["B"].get<double>())
              << ", epsilon = " << num(summary["epsilon"].get<double>()) << '\n';
    for (const auto& c : doc["checks"]) {
      const char* tag = c["skipped"].get<bool>() ? "SKIP" : (c["passed"].get<bool>() ? "PASS" : "FAIL");
      std::cout << '[' << tag << "] " << c["name"].get<std::string>()
                << "  lhs=" << num(c["lhs"].get<double>())
                << " rhs=" << num(c["rhs"].get<double>())
                << " residual=" << num(c["residual"].get<double>())
                << " tol=" << num(c["tolerance"].get<double>())
                << " trials=" << c["trials"].get<unsigned>();
      if (c.contains("note")) std::cout << "  " << c["note"].get<std::string>();
      std::cout << '\n';
    }
    std::cout << "overall: " << (overall ? "PASS" : "FAIL") << '\n';
  }
  return overall ? kExitOk : kExitVerification;
}

struct DualOptions {
  std::string path;
  double magnitude = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_dual(const DualOptions& opt) {
  auto frame = load(opt.path);
  gframe_frame* raw = nullptr;
  check(gframe_random_alternate_dual(frame.get(), opt.magnitude, opt.seed, &raw));
  FramePtr dual(raw);
  check(gframe_canonical_dual(frame.get(), &raw));
  FramePtr canonical(raw);

  gframe_dual_certificate cert{};
  check(gframe_verify_alternate_dual(frame.get(), dual.get(), &cert));
  double distance_sq = 0.0;
  check(gframe_frobenius_distance_sq(dual.get(), canonical.get(), &distance_sq));
  write_frame(dual.get(), opt.out);

  std::ostream& log = opt.out.empty() ? std::cerr : std::cout;
  log << "dual residual           " << num(cert.residual) << " (tolerance "
      << num(cert.tolerance) << ", " << (cert.passed ? "passed" : "FAILED") << ")\n"
      << "distance to canonical   " << num(std::sqrt(distance_sq)) << '\n';
  return cert.passed ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite g-frames: generation, analysis and identity verification"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a frame and write it as JSON");
  gen_cmd->add_option("kind", gen.kind, "random | parseval | nearly-parseval | extremal")
      ->required()
      ->check(CLI::IsMember({"random", "parseval", "nearly-parseval", "extremal"}));
  gen_cmd->add_option("--n", gen.n, "Dimension of the underlying space")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--counts", gen.counts, "Operator output dimensions, comma separated")
      ->delimiter(',');
  gen_cmd->add_option("--epsilon", gen.epsilon, "Nearly-Parseval rating in [0,1)");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("-o,--out", gen.out, "Output file (stdout when omitted)");

  std::string analyze_path;
  bool analyze_json = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report bounds, energies and canonical gaps");
  analyze_cmd->add_option("input", analyze_path, "Frame JSON file")->required();
  analyze_cmd->add_flag("--json", analyze_json, "Emit JSON");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the frame identities and bounds");
  verify_cmd->add_option("input", verify.path, "Frame JSON file")->required();
  verify_cmd->add_option("--suite", verify.suite, "budgets | parseval-approx | duals | bounds | all")
      ->check(CLI::IsMember({"budgets", "parseval-approx", "duals", "bounds", "all"}));
  verify_cmd->add_option("--trials", verify.trials, "Randomized companions per check")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify.seed, "Random seed");
  verify_cmd->add_flag("--json", verify.json, "Emit JSON");

  DualOptions dual;
  auto* dual_cmd = app.add_subcommand("dual", "Construct an alternate dual frame");
  dual_cmd->add_option("input", dual.path, "Frame JSON file")->required();
  dual_cmd->add_option("--magnitude", dual.magnitude, "Perturbation size; 0 gives the canonical dual")
      ->check(CLI::NonNegativeNumber);
  dual_cmd->add_option("--seed", dual.seed, "Random seed");
  dual_cmd->add_option("-o,--out", dual.out, "Output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen);
    if (analyze_cmd->parsed()) return run_analyze(analyze_path, analyze_json);
    if (verify_cmd->parsed()) return run_verify(verify);
    if (dual_cmd->parsed()) return run_dual(dual);
  } catch (const CliFailure& f) {
    std::cerr << "gframe: " << f.message() << '\n';
    return f.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "gframe: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
