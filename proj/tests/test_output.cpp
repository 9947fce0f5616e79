#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "qpt/output.hpp"

namespace {

using namespace qpt;

TEST(FormatNumber, RoundTripsExactly) {
  for (double v : {0.1, 1.0 / 3.0, -0.25872864371390053, 6.02214076e23, 5e-324, 1.0 + 1e-6}) {
    EXPECT_EQ(std::strtod(format_number(v).c_str(), nullptr), v) << format_number(v);
  }
  EXPECT_EQ(format_number(0.5), "0.5");
}

TEST(FormatNumber, NonFinite) {
  EXPECT_EQ(format_number(std::numeric_limits<double>::quiet_NaN()), "nan");
  EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_number(-std::numeric_limits<double>::infinity()), "-inf");
}

TEST(SweepCsv, HeaderRowsAndEmptyDerivativeCell) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const SweepTable table{{1.0, 0.5, Observable::GapZ, 0.25, std::nullopt, {}},
                         {1.0, 0.75, Observable::AccelX, 0.125, -2.0, {}},
                         {1.0, 0.9, Observable::Mz, nan, nan, "QuadratureNonConvergence: x"}};
  std::ostringstream out;
  write_sweep_csv(out, table);
  EXPECT_EQ(out.str(),
            "gamma,lambda,name,value,dvalue_dlambda\n"
            "1,0.5,dEz,0.25,\n"
            "1,0.75,Lx,0.125,-2\n"
            "1,0.90000000000000002,m_z,nan,nan\n");
}

TEST(Json, NonFiniteBecomesNull) {
  JsonRecord r;
  r.set("a", std::numeric_limits<double>::infinity()).set("b", std::vector<double>{1.0, std::nan("")});
  const auto j = nlohmann::json::parse(r.str());
  EXPECT_TRUE(j["a"].is_null());
  EXPECT_EQ(j["b"][0], 1.0);
  EXPECT_TRUE(j["b"][1].is_null());
}

TEST(Json, EscapesAndOverwrites) {
  JsonRecord r;
  r.set("text", "a\"b\\c\n").set("n", 3).set("n", 4).set("flag", true);
  const auto j = nlohmann::json::parse(r.str());
  EXPECT_EQ(j["text"], "a\"b\\c\n");
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j.size(), 3u);
}

TEST(Json, FitRecordSchema) {
  const ScalingFit fit{Law::Log, Side::Above, -1.2700000000000001, 0.5, 1e-3, 1e-6, 1e-2, 25};
  const std::string text = fit_record(fit, "dEz", 1.0).str();
  const auto j = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"law", "target", "gamma", "side", "coefficient", "intercept", "stderr",
                                            "window_min", "window_max", "n_points", "schema_version"}));
  EXPECT_EQ(j["law"], "log");
  EXPECT_EQ(j["side"], "above");
  EXPECT_EQ(j["coefficient"].get<double>(), fit.coefficient);
  EXPECT_EQ(j["n_points"], 25);
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
}

}  // namespace
