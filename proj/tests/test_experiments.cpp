#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "kaclab/error.hpp"
#include "kaclab/experiments.hpp"

using namespace kaclab;

namespace {

ErrorCode run_error(const std::string& cmd, const RunConfig& cfg) {
  try {
    run_command(cmd, cfg);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error from " << cmd);
  return ErrorCode::kIo;
}

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                           "/kaclab_test_" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("config keys and defaults") {
  RunConfig c;
  CHECK(c.get("beta") == "0.1");
  CHECK(c.get_double("beta") == 0.1);
  CHECK_FALSE(c.is_set("beta"));
  CHECK(RunConfig::canonical_key("Grid-Theta") == "grid_theta");
  c.set("grid-theta", "64");
  CHECK(c.get_int("grid_theta") == 64);
  CHECK(c.is_set("grid_theta"));
  c.set_default("grid_theta", "128");
  CHECK(c.get_int("grid_theta") == 64);
  c.set("seed", "0x10");
  CHECK(c.get_u64("seed") == 16);
  c.set("N", "64,32,128");
  CHECK(c.get_int_list("N") == std::vector<int>{64, 32, 128});
  c.set("synthetic", "true");
  CHECK(c.get_bool("synthetic"));
  try {
    c.set("colour", "blue");
    FAIL("unknown key accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kConfig);
  }
  c.set("beta", "abc");
  CHECK_THROWS_AS(c.get_double("beta"), Error);
}

TEST_CASE("config precedence: explicit over environment over file") {
  const auto path = temp_file("prec.cfg", "# comment\ndelta = 0.15\nseed = 5\n");
  ::setenv("KACLAB_DELTA", "0.3", 1);
  RunConfig c;
  c.load_file(path);
  CHECK(c.get("delta") == "0.15");
  c.apply_environment();
  CHECK(c.get("delta") == "0.3");
  CHECK(c.get("seed") == "5");
  c.set("delta", "0.2");
  CHECK(c.get("delta") == "0.2");
  ::unsetenv("KACLAB_DELTA");

  RunConfig missing;
  try {
    missing.load_file("/nonexistent/kaclab.cfg");
    FAIL("missing file accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIo);
  }
  const auto bad = temp_file("bad.cfg", "colour = blue\n");
  try {
    missing.load_file(bad);
    FAIL("unknown key in file accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kConfig);
  }
  std::remove(path.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("header echoes the effective configuration") {
  RunConfig c;
  c.set("threads", "7");
  c.set("out", "x.csv");
  c.set("delta", "0.25");
  const auto h = c.header("gamma");
  CHECK(h.rfind("# kaclab ", 0) == 0);
  CHECK(h.find("# command = gamma\n") != std::string::npos);
  CHECK(h.find("# delta = 0.25\n") != std::string::npos);
  CHECK(h.find("# beta = 0.1\n") != std::string::npos);
  CHECK(h.find("threads") == std::string::npos);
  CHECK(h.find("x.csv") == std::string::npos);
  for (std::size_t pos = 0; pos < h.size();) {
    CHECK(h[pos] == '#');
    pos = h.find('\n', pos) + 1;
  }
}

TEST_CASE("number formatting round-trips") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) {
    const auto s = format_double(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(NAN) == "nan");
  CHECK(format_double(INFINITY) == "inf");
  SweepRecord r;
  r.N = 64;
  const auto row = sweep_csv_row(r);
  const auto head = sweep_csv_header();
  auto commas = [](const std::string& s) { return std::count(s.begin(), s.end(), ','); };
  CHECK(commas(row) == commas(head));
  CHECK(row.rfind("64,", 0) == 0);
}

TEST_CASE("svg plot") {
  LogLogSeries data{{32, 64, 128}, {0.5, 0.3, 0.2}};
  LogLogSeries ref{{32, 128}, {0.5, 0.2}};
  const auto svg = loglog_svg("ratio", data, ref);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("ratio") != std::string::npos);
  CHECK(std::count(svg.begin(), svg.end(), '<') == std::count(svg.begin(), svg.end(), '>'));
  CHECK_THROWS_AS(loglog_svg("bad", LogLogSeries{{1.0}, {-1.0}}, ref), Error);
}

TEST_CASE("commands") {
  const auto& names = command_names();
  CHECK(names.size() == 7);
  RunConfig c;
  CHECK(run_error("frobnicate", c) == ErrorCode::kConfig);

  RunConfig single;
  single.set("N", "32");
  CHECK(run_error("sweep", single) == ErrorCode::kInsufficientData);

  RunConfig wide;
  wide.set("delta", "0.6");
  CHECK(run_error("density-check", wide) == ErrorCode::kConfig);

  RunConfig beta;
  beta.set("beta", "0.2");
  beta.set("N", "32");
  CHECK(run_error("gamma", beta) == ErrorCode::kDomain);

  RunConfig low;
  low.set("N", "4");
  CHECK(run_error("clt", low) == ErrorCode::kUnsupportedOrder);

  RunConfig synth;
  synth.set("synthetic", "true");
  const auto s = run_command("sweep", synth);
  CHECK(s.exit_code == 0);
  const auto pos = s.summary.find("slope = ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(s.summary.substr(pos + 8)) == doctest::Approx(-0.8).epsilon(1e-6));

  RunConfig dc;
  const auto d = run_command("density-check", dc);
  CHECK(d.exit_code == 0);
  CHECK(d.csv.find("check,value,reference,abs_error,tolerance,status\n") != std::string::npos);
  CHECK(d.csv.find("FAIL") == std::string::npos);

  RunConfig inj;
  inj.set("inject_violation", "true");
  CHECK(run_command("bounds", inj).exit_code != 0);
}
