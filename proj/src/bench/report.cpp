#include "eqshadow/bench/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "eqshadow/eqcore/rng.hpp"

namespace eqshadow {

std::optional<double> ResultRow::squared_error() const {
  if (!reference) return std::nullopt;
  return (estimate - *reference) * (estimate - *reference);
}

Params& Params::add(const std::string& key, const std::string& value) {
  if (!text_.empty()) text_ += ';';
  text_ += key + '=' + value;
  return *this;
}

Params& Params::add(const std::string& key, double value) { return add(key, format_number(value)); }

Params& Params::add(const std::string& key, std::int64_t value) { return add(key, std::to_string(value)); }

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_header() { return "experiment,params,estimate,reference,squared_error,stderr,samples"; }

std::string csv_line(const ResultRow& r) {
  auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  std::string params = r.params;
  if (params.find_first_of(",\"") != std::string::npos) {
    std::string q = "\"";
    for (char c : params) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    params = q + "\"";
  }
  return r.experiment + ',' + params + ',' + format_number(r.estimate) + ',' + opt(r.reference) + ',' +
         opt(r.squared_error()) + ',' + opt(r.stderr_) + ',' + std::to_string(r.samples);
}

std::string to_csv(const std::vector<ResultRow>& rows) {
  std::string out = csv_header() + '\n';
  for (const auto& r : rows) out += csv_line(r) + '\n';
  return out;
}

std::vector<StreamDescriptor> seed_partition(std::uint64_t seed, std::uint64_t groups, std::uint64_t per_group) {
  if (groups < 1 || per_group < 1) throw std::invalid_argument("groups and per_group must be positive");
  std::vector<StreamDescriptor> out;
  out.reserve(groups * per_group);
  for (std::uint64_t g = 0; g < groups; ++g)
    for (std::uint64_t i = 0; i < per_group; ++i) out.push_back({g, i, stream_seed(seed, g, i, per_group)});
  return out;
}

OutputPaths output_paths(const std::string& out) {
  std::string base = out;
  if (base.size() > 4 && base.ends_with(".csv")) base.resize(base.size() - 4);
  return {base + ".csv", base + ".json"};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace eqshadow
