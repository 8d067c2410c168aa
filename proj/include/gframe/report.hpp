#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gframe/frame.hpp"

namespace gframe {

enum class Suite { Budgets, ParsevalApprox, Duals, Bounds, All };

std::optional<Suite> parse_suite(std::string_view name);
const char* to_string(Suite suite) noexcept;

inline constexpr unsigned kDefaultTrials = 50;

struct FrameSummary {
  std::size_t n;
  std::vector<std::size_t> counts;
  double lower;
  double upper;
  double epsilon;
};

/// One verified identity or bound. Randomized checks aggregate their trials:
/// lhs/rhs/residual/tolerance describe the worst trial (largest
/// residual-to-tolerance ratio) and passed covers all of them.
/// Skipped checks (hypothesis not met, e.g. epsilon >= 1) do not count
/// towards the overall verdict.
struct Check {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool skipped = false;
  unsigned trials = 1;
  std::string note;
};

struct VerificationReport {
  FrameSummary frame;
  Suite suite;
  unsigned trials;
  std::uint64_t seed;
  std::vector<Check> checks;
  bool overall;

  nlohmann::ordered_json to_json() const;
};

FrameSummary summarize(const GFrame& f);

/// Runs the selected checks with `trials` seeded random companions (Parseval
/// frames, alternate duals, vectors). Throws NotAFrame before any check runs
/// when f is not a frame; failures inside a check mark that check failed.
VerificationReport verify_frame(const GFrame& f, Suite suite, unsigned trials, std::uint64_t seed);

/// Bounds, energies and the two canonical gaps. Throws NotAFrame.
nlohmann::ordered_json analyze_frame(const GFrame& f);

}  // namespace gframe
