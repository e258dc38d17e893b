#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ambit {

/// Streaming JSON writer for reports. Keys appear exactly in call order and
/// every floating-point value is rendered at 12 significant digits, so
/// identical inputs produce byte-identical documents. Non-finite numbers are
/// rejected: report payloads must be finite everywhere.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view name);
  JsonWriter& value(double v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }

  const std::string& str() const { return out_; }

 private:
  void separate();

  std::string out_;
  std::vector<bool> needs_comma_;
  bool after_key_ = false;
};

/// Render one double the way reports do (12 significant digits).
std::string format_number(double v);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

/// Content digest of the named input files: SHA-256 over their concatenated
/// bytes, in order. No files hashes the empty string, so the digest is
/// always present and stable across runs on identical bytes.
std::string digest_files(const std::vector<std::string>& paths);

}  // namespace ambit
