#include "qpt/output.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace qpt {

namespace {

void write_string(std::ostream& out, const std::string& s) {
  out << '"';
  for (char c : s) {
    switch (c) {
      case '"': out << "\\\""; break;
      case '\\': out << "\\\\"; break;
      case '\n': out << "\\n"; break;
      case '\t': out << "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out << buf;
        } else {
          out << c;
        }
    }
  }
  out << '"';
}

void write_json_number(std::ostream& out, double v) {
  if (std::isfinite(v)) {
    out << format_number(v);
  } else {
    out << "null";
  }
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_sweep_csv(std::ostream& out, const SweepTable& table) {
  out << kSweepHeader << '\n';
  for (const auto& row : table) {
    out << format_number(row.gamma) << ',' << format_number(row.lambda) << ',' << name(row.observable) << ','
        << format_number(row.value) << ',';
    if (row.dvalue_dlambda) out << format_number(*row.dvalue_dlambda);
    out << '\n';
  }
}

JsonRecord& JsonRecord::put(std::string key, Value v) {
  for (auto& [k, existing] : fields_) {
    if (k == key) {
      existing = std::move(v);
      return *this;
    }
  }
  fields_.emplace_back(std::move(key), std::move(v));
  return *this;
}

void JsonRecord::write(std::ostream& out) const {
  out << '{';
  bool first = true;
  for (const auto& [key, value] : fields_) {
    if (!first) out << ',';
    first = false;
    write_string(out, key);
    out << ':';
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, double>) {
            write_json_number(out, v);
          } else if constexpr (std::is_same_v<T, long long>) {
            out << v;
          } else if constexpr (std::is_same_v<T, bool>) {
            out << (v ? "true" : "false");
          } else if constexpr (std::is_same_v<T, std::string>) {
            write_string(out, v);
          } else if constexpr (std::is_same_v<T, std::vector<double>>) {
            out << '[';
            for (std::size_t i = 0; i < v.size(); ++i) {
              if (i) out << ',';
              write_json_number(out, v[i]);
            }
            out << ']';
          } else {
            out << '[';
            for (std::size_t i = 0; i < v.size(); ++i) {
              if (i) out << ',';
              out << '[';
              for (std::size_t j = 0; j < v[i].size(); ++j) {
                if (j) out << ',';
                write_json_number(out, v[i][j]);
              }
              out << ']';
            }
            out << ']';
          }
        },
        value);
  }
  out << "}\n";
}

std::string JsonRecord::str() const {
  std::ostringstream out;
  write(out);
  return out.str();
}

JsonRecord fit_record(const ScalingFit& fit, std::string_view target, double gamma) {
  JsonRecord r;
  r.set("law", name(fit.law))
      .set("target", target)
      .set("gamma", gamma)
      .set("side", name(fit.side))
      .set("coefficient", fit.coefficient)
      .set("intercept", fit.intercept)
      .set("stderr", fit.std_error)
      .set("window_min", fit.window_min)
      .set("window_max", fit.window_max)
      .set("n_points", fit.n_points)
      .set("schema_version", kSchemaVersion);
  return r;
}

}  // namespace qpt
