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

#include "nvaqs/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace nvaqs::spectral {
namespace {

constexpr double kImagTolerance = 1e-10;
constexpr double kGridTolerance = 1e-9;

double uniform_step(const DephasingSeries& series) {
  series.validate();
  if (series.size() < 2) {
    throw PreconditionError("spectral analysis needs at least two samples");
  }
  if (series.times.front() != 0.0) {
    throw PreconditionError("spectral analysis needs a grid starting at t = 0");
  }
  const double dt = series.times.back() / static_cast<double>(series.size() - 1);
  for (std::size_t n = 0; n < series.size(); ++n) {
    if (std::abs(series.times[n] - static_cast<double>(n) * dt) > kGridTolerance * (1.0 + dt)) {
      throw PreconditionError("spectral analysis needs a uniform time grid");
    }
  }
  return dt;
}

double parse_key(const std::string& comment, const std::string& key, double fallback) {
  const auto pos = comment.find(key + "=");
  if (pos == std::string::npos) {
    return fallback;
  }
  return std::stod(comment.substr(pos + key.size() + 1));
}

}  // namespace

std::string Window::label() const {
  if (kind == Kind::kNone) {
    return "none";
  }
  return "gaussian(" + format_double(sigma) + ")";
}

double Window::operator()(double t) const {
  if (kind == Kind::kNone) {
    return 1.0;
  }
  return std::exp(-0.5 * (t * t) / (sigma * sigma));
}

CherResult cher(const DephasingSeries& series, int num_freqs, Window window,
                double required_bandwidth) {
  const double dt = uniform_step(series);
  if (num_freqs < 2 || num_freqs % 2 != 0) {
    throw PreconditionError("num_freqs must be even and at least 2");
  }
  if (window.kind == Window::Kind::kGaussian && !(window.sigma > 0.0)) {
    throw PreconditionError("gaussian window needs sigma > 0");
  }
  const double nyquist = kPi / dt;
  if (!(nyquist > required_bandwidth)) {
    throw PreconditionError("time step too coarse: Nyquist " + format_double(nyquist) +
                            " rad/us does not exceed " + format_double(required_bandwidth));
  }

  const std::size_t n_times = series.size();
  // Two-sided samples c_n * phi(t_n), n = -(N-1)..N-1, stored for n >= 0.
  std::vector<Complex> positive(n_times);
  for (std::size_t n = 0; n < n_times; ++n) {
    const double weight = (n + 1 == n_times) ? 0.5 : 1.0;
    positive[n] = weight * window(series.times[n]) * series.values[n];
  }
  positive[0] = Complex(positive[0].real(), 0.0);

  CherResult result;
  result.dt = dt;
  result.num_times = static_cast<int>(n_times);
  result.window = window;
  result.source = series.metadata;
  result.d_omega = kTwoPi / (static_cast<double>(num_freqs) * dt);
  result.omegas.resize(num_freqs);
  result.weights.resize(num_freqs);
  const double scale = dt / kTwoPi;
  for (int m = 0; m < num_freqs; ++m) {
    const double omega = static_cast<double>(m - num_freqs / 2) * result.d_omega;
    Complex sum = positive[0];
    for (std::size_t n = 1; n < n_times; ++n) {
      const Complex rot = std::polar(1.0, omega * series.times[n]);
      sum += positive[n] * rot + std::conj(positive[n]) * std::conj(rot);
    }
    sum *= scale;
    result.omegas[m] = omega;
    result.weights[m] = sum.real();
    result.max_imag_residue = std::max(result.max_imag_residue, std::abs(sum.imag()));
  }
  if (result.max_imag_residue > kImagTolerance) {
    throw BackendError("CHER imaginary residue " + format_double(result.max_imag_residue) +
                       " exceeds tolerance");
  }
  result.negativity = negativity(result);
  return result;
}

double negativity(const CherResult& result) {
  double sum = 0.0;
  for (double w : result.weights) {
    if (w < 0.0) {
      sum -= w;
    }
  }
  return sum * result.d_omega;
}

double total_weight(const CherResult& result) {
  double sum = 0.0;
  for (double w : result.weights) {
    sum += w;
  }
  return sum * result.d_omega;
}

DephasingSeries reconstruct_series(const CherResult& result) {
  if (result.num_times < 2 || result.omegas.empty()) {
    throw PreconditionError("result does not describe a source grid");
  }
  DephasingSeries series;
  series.metadata = result.source;
  series.metadata.backend = "cher-inverse";
  for (int n = 0; n < result.num_times; ++n) {
    const double t = static_cast<double>(n) * result.dt;
    Complex sum(0.0, 0.0);
    for (std::size_t m = 0; m < result.omegas.size(); ++m) {
      sum += result.weights[m] * std::polar(1.0, -result.omegas[m] * t);
    }
    sum *= result.d_omega;
    if (n + 1 == result.num_times) {
      sum *= 2.0;
    }
    series.times.push_back(t);
    series.values.push_back(sum);
  }
  return series;
}

std::vector<std::size_t> local_maxima(const CherResult& result, double fraction) {
  std::vector<std::size_t> peaks;
  const auto& w = result.weights;
  if (w.size() < 3) {
    return peaks;
  }
  const double threshold = fraction * *std::max_element(w.begin(), w.end());
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    if (w[i] > w[i - 1] && w[i] > w[i + 1] && w[i] > threshold) {
      peaks.push_back(i);
    }
  }
  return peaks;
}

void write_cher_csv(std::ostream& out, const CherResult& result) {
  out << "# backend=" << result.source.backend << ",Bz_G=" << format_double(result.source.bz_gauss)
      << ",group=" << result.source.group << ",window=" << result.window.label()
      << ",num_freqs=" << result.omegas.size() << ",dt_us=" << format_double(result.dt)
      << ",num_times=" << result.num_times << '\n';
  out << "omega_rad_per_us,weight\n";
  for (std::size_t m = 0; m < result.omegas.size(); ++m) {
    out << format_double(result.omegas[m]) << ',' << format_double(result.weights[m]) << '\n';
  }
  out << "# negativity=" << format_double(result.negativity) << '\n';
}

void write_cher_csv(const std::filesystem::path& path, const CherResult& result) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  write_cher_csv(out, result);
  if (!out) {
    throw IoError("failed writing " + path.string());
  }
}

CherResult read_cher_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  CherResult result;
  std::string line;
  bool header = false;
  bool footer = false;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) {
        continue;
      }
      if (line.rfind("# negativity=", 0) == 0) {
        result.negativity = std::stod(line.substr(13));
        footer = true;
      } else if (line[0] == '#') {
        result.source.bz_gauss = parse_key(line, "Bz_G", 0.0);
        result.dt = parse_key(line, "dt_us", 0.0);
        result.num_times = static_cast<int>(parse_key(line, "num_times", 0.0));
      } else if (!header) {
        if (line != "omega_rad_per_us,weight") {
          throw IoError("expected header omega_rad_per_us,weight");
        }
        header = true;
      } else {
        std::istringstream row(line);
        std::string a, b;
        if (!std::getline(row, a, ',') || !std::getline(row, b)) {
          throw IoError("expected 2 columns: " + line);
        }
        result.omegas.push_back(std::stod(a));
        result.weights.push_back(std::stod(b));
      }
    }
  } catch (const std::logic_error& e) {
    throw IoError(path.string() + ": malformed CHER file (" + e.what() + ")");
  }
  if (!header || !footer) {
    throw IoError(path.string() + ": missing header or negativity footer");
  }
  if (result.omegas.size() >= 2) {
    result.d_omega = result.omegas[1] - result.omegas[0];
  }
  return result;
}

}  // namespace nvaqs::spectral
