// Copyright 2026 planarsim Contributors
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

#include "psc/calibration.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace psc {

namespace {

std::string strip(const std::string &s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return "";
  }
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string &field, size_t line_no,
                    const char *what) {
  std::string t = strip(field);
  double value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    throw CalibrationError("line " + std::to_string(line_no) +
                           ": malformed " + what + " '" + field + "'");
  }
  return value;
}

void moments(const std::vector<double> &v, double &min_v, double &max_v,
             double &mean_v, double &cv) {
  min_v = *std::min_element(v.begin(), v.end());
  max_v = *std::max_element(v.begin(), v.end());
  double sum = 0;
  for (double x : v) {
    sum += x;
  }
  mean_v = sum / static_cast<double>(v.size());
  double ss = 0;
  for (double x : v) {
    ss += (x - mean_v) * (x - mean_v);
  }
  cv = std::sqrt(ss / static_cast<double>(v.size())) / mean_v;
}

}  // namespace

std::vector<QubitSpec> Calibration::specs() const {
  std::vector<QubitSpec> out;
  out.reserve(rows.size());
  for (const auto &row : rows) {
    out.push_back(QubitSpec{row.qubit_id, row.t1_us, row.t2_us});
  }
  return out;
}

CalibrationSummary Calibration::summary() const {
  CalibrationSummary s;
  s.n = rows.size();
  if (rows.empty()) {
    return s;
  }
  std::vector<double> t1, t2;
  for (const auto &row : rows) {
    t1.push_back(row.t1_us);
    t2.push_back(row.t2_raw_us);
    s.n_clamped += row.clamped ? 1 : 0;
  }
  moments(t1, s.min_t1, s.max_t1, s.mean_t1, s.cv_t1);
  moments(t2, s.min_t2, s.max_t2, s.mean_t2, s.cv_t2);
  return s;
}

Calibration parse_calibration(std::istream &input,
                              std::vector<std::string> *diagnostics) {
  Calibration calibration;
  std::unordered_set<int> seen_ids;
  std::string line;
  size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(input, line)) {
    ++line_no;
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') {
      continue;
    }
    if (!header_seen) {
      header_seen = true;
      // Require the canonical header so column mixups fail loudly.
      std::string h = t;
      h.erase(std::remove_if(h.begin(), h.end(),
                             [](unsigned char c) { return c == ' '; }),
              h.end());
      if (h != "qubit_id,t1_us,t2_us") {
        throw CalibrationError("line " + std::to_string(line_no) +
                               ": expected header 'qubit_id,t1_us,t2_us'");
      }
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(t);
    std::string field;
    while (std::getline(ss, field, ',')) {
      fields.push_back(field);
    }
    if (fields.size() != 3) {
      throw CalibrationError("line " + std::to_string(line_no) +
                             ": expected 3 comma-separated fields, got " +
                             std::to_string(fields.size()));
    }
    CalibrationRow row;
    row.id_text = strip(fields[0]);
    row.t1_text = strip(fields[1]);
    row.t2_text = strip(fields[2]);
    double id_value = parse_number(fields[0], line_no, "qubit_id");
    if (id_value != static_cast<int>(id_value)) {
      throw CalibrationError("line " + std::to_string(line_no) +
                             ": qubit_id must be an integer");
    }
    row.qubit_id = static_cast<int>(id_value);
    row.t1_us = parse_number(fields[1], line_no, "t1_us");
    row.t2_raw_us = parse_number(fields[2], line_no, "t2_us");
    if (!(row.t1_us > 0) || !(row.t2_raw_us > 0)) {
      throw CalibrationError("line " + std::to_string(line_no) +
                             ": nonpositive relaxation/dephasing time");
    }
    if (!seen_ids.insert(row.qubit_id).second) {
      throw CalibrationError("line " + std::to_string(line_no) +
                             ": duplicate qubit_id " +
                             std::to_string(row.qubit_id));
    }
    row.t2_us = clamp_ramsey(row.t1_us, row.t2_raw_us, &row.clamped);
    if (row.clamped && diagnostics != nullptr) {
      diagnostics->push_back(
          "qubit " + std::to_string(row.qubit_id) + ": T2 = " +
          format_double(row.t2_raw_us) + " us exceeds the Ramsey limit 2*T1; "
          "clamped to " + format_double(row.t2_us) + " us");
    }
    calibration.rows.push_back(row);
  }
  if (!header_seen) {
    throw CalibrationError("empty calibration file");
  }
  return calibration;
}

Calibration load_calibration(const std::string &path,
                             std::vector<std::string> *diagnostics) {
  std::ifstream file(path);
  if (!file) {
    throw CalibrationError("cannot open calibration file '" + path + "'");
  }
  return parse_calibration(file, diagnostics);
}

void write_calibration(std::ostream &out, const Calibration &calibration) {
  out << "qubit_id,t1_us,t2_us\n";
  for (const auto &row : calibration.rows) {
    out << row.id_text << ',' << row.t1_text << ',' << row.t2_text << '\n';
  }
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace psc
