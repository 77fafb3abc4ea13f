#pragma once

// Byte-deterministic JSON and CSV emission.  Object keys are sorted at dump
// time, doubles go through one fixed format, and big integers print as raw
// decimal JSON numbers, so identical inputs give identical bytes.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rootcal/numeric.hpp"

namespace rootcal {

class JsonValue {
 public:
  enum class Kind { null, boolean, integer, real, text, array, object };

  JsonValue() = default;
  JsonValue(bool b) : kind_(Kind::boolean), bool_(b) {}
  JsonValue(int v) : kind_(Kind::integer), int_(v) {}
  JsonValue(long v) : kind_(Kind::integer), int_(v) {}
  JsonValue(long long v) : kind_(Kind::integer), int_(v) {}
  JsonValue(const Int& v) : kind_(Kind::integer), int_(v) {}
  JsonValue(double v) : kind_(Kind::real), real_(v) {}
  JsonValue(const char* s) : kind_(Kind::text), text_(s) {}
  JsonValue(std::string s) : kind_(Kind::text), text_(std::move(s)) {}

  static JsonValue array() {
    JsonValue v;
    v.kind_ = Kind::array;
    return v;
  }
  static JsonValue object() {
    JsonValue v;
    v.kind_ = Kind::object;
    return v;
  }

  Kind kind() const { return kind_; }

  JsonValue& push(JsonValue v) {
    require(Kind::array, "push");
    items_.push_back(std::move(v));
    return *this;
  }

  JsonValue& set(const std::string& key, JsonValue v) {
    require(Kind::object, "set");
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      if (keys_[i] == key) {
        items_[i] = std::move(v);
        return *this;
      }
    }
    keys_.push_back(key);
    items_.push_back(std::move(v));
    return *this;
  }

  std::string dump() const {
    std::string out;
    write(out, 0);
    out.push_back('\n');
    return out;
  }

 private:
  void require(Kind k, const char* op) const {
    if (kind_ != k) throw std::logic_error(std::string("JsonValue: ") + op + " on wrong kind");
  }

  static void write_escaped(std::string& out, const std::string& s) {
    out.push_back('"');
    for (unsigned char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        case '\b': out += "\\b"; break;
        case '\f': out += "\\f"; break;
        default:
          if (c < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out += buf;
          } else {
            out.push_back(static_cast<char>(c));
          }
      }
    }
    out.push_back('"');
  }

  static void write_real(std::string& out, double v) {
    if (!std::isfinite(v)) throw std::domain_error("JsonValue: non-finite number");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
  }

  static void indent(std::string& out, int depth) { out.append(static_cast<std::size_t>(depth) * 2, ' '); }

  void write(std::string& out, int depth) const {
    switch (kind_) {
      case Kind::null: out += "null"; return;
      case Kind::boolean: out += bool_ ? "true" : "false"; return;
      case Kind::integer: out += int_.str(); return;
      case Kind::real: write_real(out, real_); return;
      case Kind::text: write_escaped(out, text_); return;
      case Kind::array: {
        if (items_.empty()) {
          out += "[]";
          return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < items_.size(); ++i) {
          indent(out, depth + 1);
          items_[i].write(out, depth + 1);
          if (i + 1 < items_.size()) out.push_back(',');
          out.push_back('\n');
        }
        indent(out, depth);
        out.push_back(']');
        return;
      }
      case Kind::object: {
        if (keys_.empty()) {
          out += "{}";
          return;
        }
        std::vector<std::size_t> order(keys_.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return keys_[a] < keys_[b]; });
        out += "{\n";
        for (std::size_t i = 0; i < order.size(); ++i) {
          indent(out, depth + 1);
          write_escaped(out, keys_[order[i]]);
          out += ": ";
          items_[order[i]].write(out, depth + 1);
          if (i + 1 < order.size()) out.push_back(',');
          out.push_back('\n');
        }
        indent(out, depth);
        out.push_back('}');
        return;
      }
    }
  }

  Kind kind_ = Kind::null;
  bool bool_ = false;
  Int int_ = 0;
  double real_ = 0.0;
  std::string text_;
  std::vector<std::string> keys_;   // object keys, insertion order
  std::vector<JsonValue> items_;    // array items, or object values
};

// One CSV record; fields with commas, quotes, or newlines get quoted.
inline std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n\r") != std::string::npos) {
      out.push_back('"');
      for (char c : f) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
      }
      out.push_back('"');
    } else {
      out += f;
    }
  }
  out.push_back('\n');
  return out;
}

// Fixed float rendering shared by CSV output.
inline std::string format_double(double v) {
  if (!std::isfinite(v)) throw std::domain_error("format_double: non-finite number");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace rootcal
