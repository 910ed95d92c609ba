#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "diamag/cli/commands.hpp"
#include "diamag/cli/config.hpp"
#include "diamag/cli/output.hpp"
#include "diamag/cli/svg.hpp"
#include "diamag/cli/sweep.hpp"
#include "diamag/cli/verify.hpp"

using namespace diamag;
using namespace diamag::cli;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("diamag_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  return out;
}

}  // namespace

TEST(Config, OverridesAndDefaults) {
  const Settings empty = parse_config("");
  EXPECT_EQ(empty.quadrature.rel_tol, oracle::QuadratureSettings{}.rel_tol);
  EXPECT_EQ(empty.kernel.large_s_threshold, kernel::KernelSettings{}.large_s_threshold);

  const Settings s = parse_config(
      "# comment\n"
      "rel_tol=1e-10\n"
      "  abs_tol = 1e-14   # trailing\n"
      "\n"
      "max_subdivisions=500\r\n"
      "delta_widths=1e-1, 1e-2,1e-3 ,1e-4\n"
      "extrapolation_order=2\n"
      "large_s_threshold=8\n"
      "smallq_max_q=0.01\n"
      "smallq_pole_ratio=0.1\n");
  EXPECT_EQ(s.quadrature.rel_tol, 1e-10);
  EXPECT_EQ(s.quadrature.abs_tol, 1e-14);
  EXPECT_EQ(s.quadrature.max_subdivisions, 500);
  EXPECT_EQ(s.quadrature.delta_widths, (std::vector<double>{1e-1, 1e-2, 1e-3, 1e-4}));
  EXPECT_EQ(s.quadrature.extrapolation_order, 2);
  EXPECT_EQ(s.kernel.large_s_threshold, 8.0);
  EXPECT_EQ(s.kernel.smallq_max_q, 0.01);
  EXPECT_EQ(s.kernel.smallq_pole_ratio, 0.1);
}

TEST(Config, ErrorsNameKeyAndLine) {
  try {
    parse_config("rel_tol=1e-10\nunknown_key=1\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.field(), "unknown_key");
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("unknown_key"), std::string::npos);
  }
  try {
    parse_config("\n\njust text\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse_config("rel_tol=abc"), ConfigError);
  EXPECT_THROW(parse_config("max_subdivisions=1.5"), ConfigError);
  EXPECT_THROW(parse_config("=3"), ConfigError);
  // Parses, but fails the merged validation.
  EXPECT_THROW(parse_config("max_subdivisions=10"), ValidationError);
  EXPECT_THROW(load_config("/nonexistent/diamag.cfg"), ValidationError);
}

TEST(Sweep, GenerateLogAndLinear) {
  SweepSpec s{Axis::Q, 1e-6, 2.0, 200, Spacing::Log, 0.0, 1e-4, 1.0};
  const auto pts = s.generate();
  ASSERT_EQ(pts.size(), 200u);
  EXPECT_EQ(pts.front().q, 1e-6);
  EXPECT_EQ(pts.back().q, 2.0);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    EXPECT_LT(pts[i - 1].q, pts[i].q);
    EXPECT_EQ(pts[i].y, 1e-4);
    EXPECT_EQ(pts[i].x, 0.0);
  }
  SweepSpec lin{Axis::X, 0.0, 1.0, 5, Spacing::Linear, 0.0, 0.1, 0.5};
  const auto lp = lin.generate();
  EXPECT_EQ(lp[2].x, 0.5);
  EXPECT_EQ(lp[4].x, 1.0);
}

TEST(Sweep, Validation) {
  auto field_of = [](SweepSpec s) {
    try {
      s.validate();
    } catch (const ValidationError& e) {
      return e.field();
    }
    return std::string("none");
  };
  EXPECT_EQ(field_of({Axis::Q, 1.0, 1.0, 2, Spacing::Linear, 0.0, 0.1, 1.0}), "min");
  EXPECT_EQ(field_of({Axis::Q, 0.0, 1.0, 10, Spacing::Log, 0.0, 0.1, 1.0}), "min");
  EXPECT_EQ(field_of({Axis::Q, 0.1, 1.0, 1, Spacing::Log, 0.0, 0.1, 1.0}), "points");
  // q = 0 is not a valid point.
  EXPECT_EQ(field_of({Axis::Q, 0.0, 1.0, 3, Spacing::Linear, 0.0, 0.1, 1.0}), "q");
  // y = 0 with x > 0 on the damping line.
  EXPECT_EQ(field_of({Axis::X, 0.1, 0.5, 3, Spacing::Linear, 0.0, 0.0, 1.0}), "y");
  EXPECT_EQ(parse_axis("y"), Axis::Y);
  EXPECT_THROW(parse_axis("k"), ValidationError);
  EXPECT_THROW(parse_spacing("cubic"), ValidationError);
}

TEST(Output, NumberFormatting) {
  EXPECT_EQ(format_number(1.0), "1.0000000000000000e+00");
  EXPECT_EQ(format_number(-0.1), "-1.0000000000000001e-01");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(std::strtod(format_number(0.948045881200663).c_str(), nullptr), 0.948045881200663);
}

TEST(Output, RowsAndCsv) {
  const std::vector<kernel::GridPoint> pts{{0.0, 1e-3, 0.5}, {0.2, 0.1, 0.7}, {-1.0, 0.1, 0.5}};
  const auto rows = evaluate_rows(pts, {});
  std::ostringstream out;
  write_csv(out, rows);
  const auto ls = lines(out.str());
  ASSERT_EQ(ls.size(), 4u);
  EXPECT_EQ(ls[0], kCsvHeader);
  EXPECT_EQ(out.str().find('\r'), std::string::npos);
  for (std::size_t i = 1; i < ls.size(); ++i) EXPECT_EQ(split(ls[i]).size(), 11u);
  EXPECT_EQ(split(ls[1])[9], "closed-form");
  EXPECT_EQ(split(ls[3])[9], "error");
  EXPECT_EQ(split(ls[3])[3], "nan");
  // total = classic + quant to the printed digits.
  for (std::size_t i = 1; i < 3; ++i) {
    const auto f = split(ls[i]);
    const double tr = std::stod(f[3]), cr = std::stod(f[5]), qr = std::stod(f[7]);
    const double ti = std::stod(f[4]), ci = std::stod(f[6]), qi = std::stod(f[8]);
    EXPECT_LE(std::abs(tr - (cr + qr)), 1e-15 * (std::abs(cr) + std::abs(qr)));
    EXPECT_LE(std::abs(ti - (ci + qi)), 1e-15 * (std::abs(ci) + std::abs(qi)) + 1e-300);
  }
}

TEST(Output, AbsoluteUnits) {
  const std::vector<kernel::GridPoint> pts{{0.0, 1e-10, 1.0}};
  const auto ratio = evaluate_rows(pts, {});
  const auto abs = evaluate_rows(pts, {}, 1.57e8);
  EXPECT_NEAR(abs[0].total.real() / ratio[0].total.real(), -3.226734909292844e-7, 1e-18);
}

TEST(Svg, StructureAndPointCount) {
  Series a{"y = 1e-3", {1e-3, 1e-2, 1e-1, 1.0}, {0.1, 0.5, 0.9, 0.95}};
  Series b{"b & <c>", {1e-3, 1e-2, 1.0}, {0.2, std::nan(""), 0.8}};
  const std::string svg = render_svg({a, b}, {"t", "q", "chi", true});
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("width=\"960\" height=\"640\""), std::string::npos);
  EXPECT_NE(svg.find("data-points=\"4\""), std::string::npos);
  EXPECT_NE(svg.find("data-points=\"2\""), std::string::npos);
  EXPECT_NE(svg.find("b &amp; &lt;c&gt;"), std::string::npos);
  std::size_t polylines = 0;
  for (std::size_t p = svg.find("<polyline"); p != std::string::npos;
       p = svg.find("<polyline", p + 1)) {
    ++polylines;
  }
  EXPECT_EQ(polylines, 2u);
  EXPECT_NE(svg.find(">1e-3<"), std::string::npos);
}

TEST(Commands, EvalTextAndJson) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_eval({0.0, 1e-10, 1.0, false, std::nullopt}, {}, out, err), kExitOk);
  EXPECT_NE(out.str().find("chi_total   9.48045881"), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("regime      direct-closed-form"), std::string::npos);
  EXPECT_NE(out.str().find("term3"), std::string::npos);

  std::ostringstream js;
  EXPECT_EQ(cmd_eval({0.0, 1e-3, 0.5, true, std::nullopt}, {}, js, err), kExitOk);
  const auto j = nlohmann::json::parse(js.str());
  EXPECT_LE(std::abs(j["chi_total_im"].get<double>()), 1e-10);
  EXPECT_EQ(j["chi_classic_re"].get<double>(), 0.0);
  EXPECT_TRUE(j.contains("terms"));
  EXPECT_TRUE(j["terms"].contains("term2"));
  EXPECT_EQ(j["regime"], "direct-closed-form");

  std::ostringstream st;
  EXPECT_EQ(cmd_eval({0.0, 0.0, 0.5, true, std::nullopt}, {}, st, err), kExitOk);
  const auto js2 = nlohmann::json::parse(st.str());
  EXPECT_EQ(js2["method"], "pv-static");
  EXPECT_EQ(js2["chi_total_im"].get<double>(), 0.0);

  std::ostringstream bad, bad_err;
  EXPECT_EQ(cmd_eval({0.0, -1.0, 0.5, false, std::nullopt}, {}, bad, bad_err), kExitUsage);
  EXPECT_NE(bad_err.str().find("--y"), std::string::npos);

  std::ostringstream pole, pole_err;
  EXPECT_EQ(cmd_eval({0.0, 0.0, 2.0, false, std::nullopt}, {}, pole, pole_err), kExitOk);
  EXPECT_NE(pole.str().find("unavailable"), std::string::npos);
}

TEST(Commands, SweepWritesFiles) {
  const auto csv = temp_path("sweep.csv");
  const auto svg = temp_path("sweep.svg");
  SweepOptions o{{Axis::Q, 1e-6, 2.0, 50, Spacing::Log, 0.0, 1e-4, 1.0},
                 csv.string(), svg.string(), std::nullopt};
  std::ostringstream err;
  EXPECT_EQ(cmd_sweep(o, {}, err), kExitOk) << err.str();
  const auto ls = lines(slurp(csv));
  EXPECT_EQ(ls.size(), 51u);
  EXPECT_EQ(ls[0], kCsvHeader);
  EXPECT_NE(slurp(svg).find("data-points=\"50\""), std::string::npos);

  o.out = "/nonexistent-dir/x.csv";
  EXPECT_EQ(cmd_sweep(o, {}, err), kExitUsage);
  o.out = csv.string();
  o.spec.min = o.spec.max;
  EXPECT_EQ(cmd_sweep(o, {}, err), kExitUsage);
  std::filesystem::remove(csv);
  std::filesystem::remove(svg);
}

TEST(Commands, Figure1Rows) {
  const auto csv = temp_path("fig1.csv");
  std::ostringstream err;
  EXPECT_EQ(cmd_figure1({csv.string(), std::nullopt}, {}, err), kExitOk) << err.str();
  const auto ls = lines(slurp(csv));
  ASSERT_EQ(ls.size(), 1u + 4 * 400);
  // Curves in order of y, q ascending within each.
  EXPECT_EQ(std::stod(split(ls[1])[2]), 1e-6);
  EXPECT_EQ(std::stod(split(ls[1600])[2]), 1e-3);
  EXPECT_EQ(std::stod(split(ls[1])[0]), 1e-7);
  EXPECT_EQ(std::stod(split(ls[400])[0]), 2.0);
  std::filesystem::remove(csv);
}

TEST(Commands, VerifyDefaultAndUnattainable) {
  std::ostringstream out;
  EXPECT_EQ(cmd_verify(kDefaultVerifyTol, {}, out), kExitOk) << out.str();
  EXPECT_NE(out.str().find("target 4pi"), std::string::npos);
  EXPECT_EQ(out.str().find("FAIL"), std::string::npos);
  std::ostringstream strict;
  EXPECT_EQ(cmd_verify(1e-30, {}, strict), kExitNumerical);
  EXPECT_NE(strict.str().find("FAIL  closed form vs quadrature"), std::string::npos);
  std::ostringstream bad;
  EXPECT_EQ(cmd_verify(-1.0, {}, bad), kExitUsage);
}
