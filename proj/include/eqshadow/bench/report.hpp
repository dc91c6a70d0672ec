#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace eqshadow {

inline constexpr const char* kCsvSchema = "eqshadow-csv/1";
inline constexpr const char* kVersion = "0.3.0";

struct ResultRow {
  std::string experiment;
  std::string params;  // "key=value;key=value"
  double estimate = 0;
  std::optional<double> reference;
  std::optional<double> stderr_;  // standard error of the estimate, if known
  std::uint64_t samples = 0;

  std::optional<double> squared_error() const;
};

// Small builder for the params column; keys keep insertion order.
class Params {
 public:
  Params& add(const std::string& key, const std::string& value);
  Params& add(const std::string& key, double value);
  Params& add(const std::string& key, std::int64_t value);
  Params& add(const std::string& key, int value) { return add(key, static_cast<std::int64_t>(value)); }
  Params& add(const std::string& key, std::uint64_t value) { return add(key, static_cast<std::int64_t>(value)); }
  std::string str() const { return text_; }

 private:
  std::string text_;
};

// Shortest round-trip decimal form; identical on every run.
std::string format_number(double v);

std::string csv_header();
std::string csv_line(const ResultRow& r);
std::string to_csv(const std::vector<ResultRow>& rows);

struct StreamDescriptor {
  std::uint64_t group = 0;
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
};

// One rng stream per (group, index); seeds are pairwise distinct.
std::vector<StreamDescriptor> seed_partition(std::uint64_t seed, std::uint64_t groups, std::uint64_t per_group);

// <prefix>.csv and <prefix>.json; a trailing ".csv" on the path is dropped.
struct OutputPaths {
  std::string csv;
  std::string manifest;
};
OutputPaths output_paths(const std::string& out);

void write_text(const std::string& path, const std::string& text);

}  // namespace eqshadow
