// Copyright 2026 the opuc-lab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace opuc::io {

/// Shortest round-trip decimal form; locale-independent.
std::string format_double(double v);

/// CSV document with the versioned schema comment line; all numeric cells
/// go through format_double so reruns are byte-identical.
class CsvWriter {
 public:
  CsvWriter(std::string schema, std::vector<std::string> columns);

  void add_row(const std::vector<std::string>& cells);
  std::string str() const;

 private:
  std::string schema_;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

/// Minimal log-log polyline plot with a fitted line overlay.
std::string svg_loglog_plot(const std::string& title, const std::vector<double>& x,
                            const std::vector<double>& y, double fit_slope,
                            double fit_intercept);

/// Writes content to path, creating parent directories.
void write_file(const std::string& path, const std::string& content);

}  // namespace opuc::io
