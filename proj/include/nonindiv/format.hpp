#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>

#include <json.hpp>

namespace nonindiv {

/// %.12g, with "inf", "-inf" and "nan" spelled out. Every artifact writer
/// goes through this so identical runs give identical bytes.
inline std::string fmt_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/// JSON number token; non-finite values become strings so the line stays valid JSON.
inline std::string json_real(double v) {
  return std::isfinite(v) ? fmt_real(v) : "\"" + fmt_real(v) + "\"";
}

inline std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

/// Builds one flat JSON object with keys in insertion order.
class JsonLine {
 public:
  JsonLine& str(std::string_view key, std::string_view value) { return raw(key, json_string(value)); }
  JsonLine& real(std::string_view key, double value) { return raw(key, json_real(value)); }
  JsonLine& integer(std::string_view key, long long value) { return raw(key, std::to_string(value)); }
  JsonLine& boolean(std::string_view key, bool value) { return raw(key, value ? "true" : "false"); }
  JsonLine& raw(std::string_view key, std::string_view token) {
    body_ += body_.empty() ? "{" : ",";
    body_ += json_string(key);
    body_ += ':';
    body_ += token;
    return *this;
  }
  std::string done() const { return (body_.empty() ? std::string("{") : body_) + "}\n"; }

 private:
  std::string body_;
};

/// CSV field: quoted only when it contains a separator, quote or newline.
inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace nonindiv
