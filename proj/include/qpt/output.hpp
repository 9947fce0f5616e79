#pragma once

// CSV and JSON emission. Numbers carry 17 significant digits so every value
// round-trips; non-finite values become `nan` in CSV and null in JSON.

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qpt/criticality.hpp"

namespace qpt {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kSweepHeader = "gamma,lambda,name,value,dvalue_dlambda";

std::string format_number(double value);

void write_sweep_csv(std::ostream& out, const SweepTable& table);

/// Flat JSON object builder; keys keep insertion order.
class JsonRecord {
 public:
  using Array = std::vector<std::vector<double>>;
  using Value = std::variant<double, long long, bool, std::string, std::vector<double>, Array>;

  JsonRecord& set(std::string key, double v) { return put(std::move(key), v); }
  JsonRecord& set(std::string key, int v) { return put(std::move(key), static_cast<long long>(v)); }
  JsonRecord& set(std::string key, bool v) { return put(std::move(key), v); }
  JsonRecord& set(std::string key, std::string v) { return put(std::move(key), std::move(v)); }
  JsonRecord& set(std::string key, const char* v) { return put(std::move(key), std::string(v)); }
  JsonRecord& set(std::string key, std::string_view v) { return put(std::move(key), std::string(v)); }
  JsonRecord& set(std::string key, std::vector<double> v) { return put(std::move(key), std::move(v)); }
  JsonRecord& set(std::string key, Array v) { return put(std::move(key), std::move(v)); }

  void write(std::ostream& out) const;
  std::string str() const;

 private:
  JsonRecord& put(std::string key, Value v);
  std::vector<std::pair<std::string, Value>> fields_;
};

/// Keys: law, target, gamma, side, coefficient, intercept, stderr,
/// window_min, window_max, n_points, schema_version.
JsonRecord fit_record(const ScalingFit& fit, std::string_view target, double gamma);

}  // namespace qpt
