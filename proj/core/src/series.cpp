// Copyright 2026 The nvaqs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nvaqs/series.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace nvaqs {
namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

double parse_double(const std::string& field, int line) {
  const std::string t = trim(field);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size()) {
    throw IoError("line " + std::to_string(line) + ": cannot parse number '" + t + "'");
  }
  return value;
}

void parse_metadata(const std::string& comment, SeriesMetadata& meta) {
  std::stringstream ss(comment);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      continue;
    }
    const std::string key = trim(item.substr(0, eq));
    const std::string value = trim(item.substr(eq + 1));
    if (key == "backend") {
      meta.backend = value;
    } else if (key == "Bz_G") {
      meta.bz_gauss = parse_double(value, 1);
    } else if (key == "group") {
      meta.group = value;
    }
  }
}

}  // namespace

void validate_time_grid(std::span<const double> times) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i])) {
      throw PreconditionError("time grid contains a non-finite value");
    }
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw PreconditionError("time grid must be strictly increasing");
    }
  }
}

void DephasingSeries::validate() const {
  if (times.size() != values.size()) {
    throw PreconditionError("series has mismatched times/values lengths");
  }
  validate_time_grid(times);
}

void DephasingSeries::validate_physical(double tolerance) const {
  validate();
  if (!times.empty() && times.front() == 0.0 && std::abs(values.front() - Complex(1.0, 0.0)) > tolerance) {
    throw PreconditionError("phi(0) deviates from 1");
  }
  for (const auto& v : values) {
    if (std::abs(v) > 1.0 + tolerance) {
      throw PreconditionError("|phi(t)| exceeds 1");
    }
  }
}

std::vector<double> uniform_time_grid(double t_max, int count) {
  if (count < 2 || !(t_max > 0.0)) {
    throw PreconditionError("time grid needs t_max > 0 and at least 2 points");
  }
  std::vector<double> times(static_cast<std::size_t>(count));
  const double dt = t_max / (count - 1);
  for (int i = 0; i < count; ++i) {
    times[static_cast<std::size_t>(i)] = dt * i;
  }
  times.back() = t_max;
  return times;
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void write_series_csv(std::ostream& out, const DephasingSeries& series) {
  series.validate();
  out << "# backend=" << series.metadata.backend << ",Bz_G=" << format_double(series.metadata.bz_gauss)
      << ",group=" << series.metadata.group << "\n";
  out << "t_us,re_phi,im_phi\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    out << format_double(series.times[i]) << ',' << format_double(series.values[i].real()) << ','
        << format_double(series.values[i].imag()) << '\n';
  }
}

void write_series_csv(const std::filesystem::path& path, const DephasingSeries& series) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  write_series_csv(out, series);
  if (!out) {
    throw IoError("failed writing " + path.string());
  }
}

DephasingSeries read_series_csv(std::istream& in) {
  DephasingSeries series;
  std::string line;
  bool header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    if (line.front() == '#') {
      parse_metadata(line.substr(1), series.metadata);
      continue;
    }
    if (!header) {
      if (line != "t_us,re_phi,im_phi") {
        throw IoError("line " + std::to_string(line_no) + ": expected header t_us,re_phi,im_phi");
      }
      header = true;
      continue;
    }
    std::stringstream ss(line);
    std::string f[3];
    for (auto& field : f) {
      if (!std::getline(ss, field, ',')) {
        throw IoError("line " + std::to_string(line_no) + ": expected 3 columns");
      }
    }
    std::string extra;
    if (std::getline(ss, extra, ',')) {
      throw IoError("line " + std::to_string(line_no) + ": expected 3 columns");
    }
    series.times.push_back(parse_double(f[0], line_no));
    series.values.emplace_back(parse_double(f[1], line_no), parse_double(f[2], line_no));
  }
  if (!header) {
    throw IoError("missing header t_us,re_phi,im_phi");
  }
  try {
    series.validate();
  } catch (const PreconditionError& e) {
    throw IoError(e.what());
  }
  return series;
}

DephasingSeries read_series_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  return read_series_csv(in);
}

}  // namespace nvaqs
