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

#ifndef PSC_CALIBRATION_HPP
#define PSC_CALIBRATION_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "psc/noise.hpp"

namespace psc {

/// Malformed calibration data; the message carries the line number.
class CalibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CalibrationRow {
  int qubit_id = 0;
  double t1_us = 0;
  double t2_raw_us = 0;  // as read, before Ramsey clamping
  double t2_us = 0;      // min(t2_raw, 2*t1)
  bool clamped = false;
  // Fields exactly as read (trimmed), so re-emission is lossless.
  std::string id_text, t1_text, t2_text;
};

struct CalibrationSummary {
  size_t n = 0;
  double min_t1 = 0, max_t1 = 0, mean_t1 = 0;
  double min_t2 = 0, max_t2 = 0, mean_t2 = 0;  // pre-clamp values
  double cv_t1 = 0, cv_t2 = 0;
  size_t n_clamped = 0;
};

/// A parsed calibration table. Rows keep both the raw and the clamped T2 so
/// the table can be re-emitted losslessly while simulations always see
/// Ramsey-compliant specs.
struct Calibration {
  std::vector<CalibrationRow> rows;

  std::vector<QubitSpec> specs() const;
  CalibrationSummary summary() const;
};

/// Parses the CSV format
///
///   qubit_id,t1_us,t2_us
///   0,74.3,101.4
///
/// (UTF-8, dot decimal, '#'-prefixed comment lines ignored). Ramsey
/// violations are clamped, with one diagnostic line per affected qubit
/// appended to `diagnostics` when non-null. Throws CalibrationError on a
/// malformed row, a duplicate id, or a nonpositive time.
Calibration parse_calibration(std::istream &input,
                              std::vector<std::string> *diagnostics = nullptr);

Calibration load_calibration(const std::string &path,
                             std::vector<std::string> *diagnostics = nullptr);

/// Re-emits the table (raw T2 column, shortest round-trip number format).
void write_calibration(std::ostream &out, const Calibration &calibration);

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double value);

}  // namespace psc

#endif
