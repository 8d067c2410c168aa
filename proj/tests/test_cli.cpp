#include "doctest.h"

#include <cmath>
#include <fstream>

#include "json.hpp"

#include "cli_runner.hpp"

using gframe::test::run_cli;
using gframe::test::ScratchDir;
using gframe::test::slurp;
using nlohmann::json;

TEST_CASE("gen") {
  ScratchDir dir("cli_gen");
  SUBCASE("extremal frame analyzes to A = B = 0.81") {
    const auto path = dir.file("e.json");
    const auto gen = run_cli("gen extremal --n 2 --epsilon 0.19 -o " + path);
    REQUIRE(gen.exit_code == 0);
    CHECK(gen.out.find("epsilon") != std::string::npos);
    const auto a = run_cli("analyze --json " + path);
    REQUIRE(a.exit_code == 0);
    const auto j = json::parse(a.out);
    CHECK(j["A"].get<double>() == doctest::Approx(0.81).epsilon(1e-12));
    CHECK(j["B"].get<double>() == doctest::Approx(0.81).epsilon(1e-12));
    CHECK(j["parseval_gap"].get<double>() == doctest::Approx(0.02).epsilon(1e-9));
  }
  SUBCASE("same seed gives identical files") {
    const auto a = dir.file("a.json"), b = dir.file("b.json");
    REQUIRE(run_cli("gen parseval --n 4 --counts 2,2,2 --seed 7 -o " + a).exit_code == 0);
    REQUIRE(run_cli("gen parseval --n 4 --counts 2,2,2 --seed 7 -o " + b).exit_code == 0);
    CHECK(slurp(a) == slurp(b));
    REQUIRE(run_cli("gen parseval --n 4 --counts 2,2,2 --seed 8 -o " + b).exit_code == 0);
    CHECK(slurp(a) != slurp(b));
  }
  SUBCASE("frame goes to stdout without -o") {
    const auto r = run_cli("gen random --n 3 --counts 2,2 --seed 1");
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["dim_h"] == 3);
    CHECK(j["operators"].size() == 2);
  }
  SUBCASE("usage errors exit 2") {
    CHECK(run_cli("gen nearly-parseval --epsilon 1.2").exit_code == 2);
    CHECK(run_cli("gen nearly-parseval --epsilon 1.2", true).out.find("epsilon must lie in [0,1)") !=
          std::string::npos);
    CHECK(run_cli("gen random --n 2 --counts 1").exit_code == 2);
    CHECK(run_cli("gen circle --n 2").exit_code == 2);
    CHECK(run_cli("gen random --n two").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("bogus").exit_code == 2);
  }
}

TEST_CASE("analyze") {
  ScratchDir dir("cli_analyze");
  SUBCASE("orthonormal basis") {
    const auto path = dir.file("basis.json");
    std::ofstream(path) << R"({"dim_h": 2, "operators": [{"rows": 1, "re": [[1, 0]]}, {"rows": 1, "re": [[0, 1]]}]})";
    const auto r = run_cli("analyze --json " + path);
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["A"] == 1.0);
    CHECK(j["B"] == 1.0);
    CHECK(j["epsilon"] == 0.0);
    CHECK(j["parseval_gap"] == 0.0);
    CHECK(j["dual_gap"] == 0.0);
    const auto text = run_cli("analyze " + path);
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("Parseval gap") != std::string::npos);
  }
  SUBCASE("rank deficient file exits 3 and names lambda_min") {
    const auto path = dir.file("deficient.json");
    std::ofstream(path) << R"({"dim_h": 2, "operators": [{"rows": 1, "re": [[1, 1]]}]})";
    CHECK(run_cli("analyze " + path).exit_code == 3);
    CHECK(run_cli("analyze " + path, true).out.find("lambda_min") != std::string::npos);
  }
  SUBCASE("parse and io errors exit 2") {
    const auto path = dir.file("broken.json");
    std::ofstream(path) << R"({"dim_h": 2, "operators": [{"rows": 1, "re": [[1]]}]})";
    CHECK(run_cli("analyze " + path).exit_code == 2);
    CHECK(run_cli("analyze " + dir.file("missing.json")).exit_code == 2);
  }
}

TEST_CASE("verify") {
  ScratchDir dir("cli_verify");
  const auto frame = dir.file("f.json");
  REQUIRE(run_cli("gen random --n 4 --counts 2,2,2 --seed 3 -o " + frame).exit_code == 0);

  SUBCASE("all suites pass on a random frame") {
    const auto r = run_cli("verify " + frame + " --trials 10 --seed 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("overall: PASS") != std::string::npos);
  }
  SUBCASE("byte-identical JSON reports") {
    const auto a = run_cli("verify " + frame + " --json --trials 8 --seed 5");
    const auto b = run_cli("verify " + frame + " --json --trials 8 --seed 5");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    const auto j = json::parse(a.out);
    bool all = true;
    for (const auto& c : j["checks"]) {
      all = all && c["passed"].get<bool>();
      CHECK(std::isfinite(c["residual"].get<double>()));
      CHECK(c["residual"].get<double>() >= 0.0);
    }
    CHECK(j["overall"].get<bool>() == all);
    CHECK(j["trials"] == 8);
    CHECK(j["seed"] == 5);
  }
  SUBCASE("bounds suite on an extremal frame reports attainment") {
    const auto e = dir.file("e.json");
    REQUIRE(run_cli("gen extremal --n 3 --epsilon 0.3 -o " + e).exit_code == 0);
    const auto r = run_cli("verify " + e + " --suite bounds --json");
    REQUIRE(r.exit_code == 0);
    for (const auto& c : json::parse(r.out)["checks"]) {
      CHECK_FALSE(c["skipped"].get<bool>());
      CHECK(std::abs(c["lhs"].get<double>() - c["rhs"].get<double>()) <= 3e-9);
    }
  }
  SUBCASE("Bessel-only family exits 3") {
    const auto path = dir.file("bessel.json");
    std::ofstream(path) << R"({"dim_h": 3, "operators": [{"rows": 2, "re": [[1, 0, 0], [0, 1, 0]]}]})";
    const auto r = run_cli("verify " + path);
    CHECK(r.exit_code == 3);
    CHECK(r.out.empty());
  }
  SUBCASE("a badly conditioned frame fails verification with exit 4") {
    // diag(1, 3e-5) times a rotation: S has condition number about 1.1e9,
    // still a frame, but roundoff pushes several identities past tolerance.
    const double c = std::cos(0.7), s = std::sin(0.7), d = 3e-5;
    const json doc = {{"dim_h", 2},
                      {"operators", {{{"rows", 2}, {"re", {{c, -s}, {d * s, d * c}}}}}}};
    const auto path = dir.file("ill.json");
    std::ofstream(path) << doc.dump();
    const auto r = run_cli("verify " + path + " --trials 3");
    CHECK(r.exit_code == 4);
    CHECK(r.out.find("overall: FAIL") != std::string::npos);
    CHECK(run_cli("analyze " + path).exit_code == 0);
  }
  SUBCASE("bad flags exit 2") {
    CHECK(run_cli("verify " + frame + " --suite everything").exit_code == 2);
    CHECK(run_cli("verify " + frame + " --trials 0").exit_code == 2);
    CHECK(run_cli("verify " + dir.file("missing.json")).exit_code == 2);
  }
}

TEST_CASE("dual") {
  ScratchDir dir("cli_dual");
  const auto frame = dir.file("f.json");
  REQUIRE(run_cli("gen random --n 3 --counts 2,2,2 --seed 4 -o " + frame).exit_code == 0);

  SUBCASE("magnitude 0 writes the canonical dual") {
    const auto out = dir.file("d0.json");
    const auto r = run_cli("dual " + frame + " --magnitude 0 -o " + out);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("distance to canonical   0\n") != std::string::npos);
    CHECK(json::parse(slurp(out))["operators"].size() == 3);
  }
  SUBCASE("magnitude 1 writes a certified dual") {
    const auto out = dir.file("d1.json");
    const auto r = run_cli("dual " + frame + " --magnitude 1 --seed 2 -o " + out);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("passed") != std::string::npos);
    const auto pos = r.out.find("dual residual");
    REQUIRE(pos != std::string::npos);
    const double residual = std::stod(r.out.substr(pos + std::string("dual residual").size()));
    CHECK(residual <= 3e-8);
  }
  SUBCASE("errors") {
    CHECK(run_cli("dual " + dir.file("missing.json") + " -o " + dir.file("x.json")).exit_code == 2);
    const auto bessel = dir.file("bessel.json");
    std::ofstream(bessel) << R"({"dim_h": 2, "operators": [{"rows": 1, "re": [[0, 1]]}]})";
    CHECK(run_cli("dual " + bessel + " -o " + dir.file("y.json")).exit_code == 3);
  }
}
