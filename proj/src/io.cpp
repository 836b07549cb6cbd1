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

#include "opuc/io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace opuc::io {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::string schema, std::vector<std::string> columns)
    : schema_(std::move(schema)), columns_(std::move(columns)) {}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_.size())
    throw std::invalid_argument("CsvWriter: cell count differs from column count");
  rows_.push_back(cells);
}

std::string CsvWriter::str() const {
  std::ostringstream out;
  out << "# opuc-lab v1 schema=" << schema_ << "\n";
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out << ",";
    out << columns_[i];
  }
  out << "\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      out << row[i];
    }
    out << "\n";
  }
  return out.str();
}

std::string svg_loglog_plot(const std::string& title, const std::vector<double>& x,
                            const std::vector<double>& y, double fit_slope,
                            double fit_intercept) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("svg_loglog_plot: need matched points");
  const double width = 640, height = 480, margin = 60;

  std::vector<double> lx(x.size()), ly(y.size());
  double x_min = 1e300, x_max = -1e300, y_min = 1e300, y_max = -1e300;
  for (std::size_t i = 0; i < x.size(); ++i) {
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
    x_min = std::min(x_min, lx[i]);
    x_max = std::max(x_max, lx[i]);
    y_min = std::min(y_min, ly[i]);
    y_max = std::max(y_max, ly[i]);
  }
  if (y_max - y_min < 1e-9) {
    y_min -= 0.5;
    y_max += 0.5;
  }
  auto px = [&](double v) {
    return margin + (width - 2 * margin) * (v - x_min) / (x_max - x_min);
  };
  auto py = [&](double v) {
    return height - margin - (height - 2 * margin) * (v - y_min) / (y_max - y_min);
  };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
    << height << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
    << title << "</text>\n";
  s << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
    << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
    << height - margin << "\" stroke=\"black\"/>\n";

  s << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < lx.size(); ++i)
    s << format_double(px(lx[i])) << "," << format_double(py(ly[i])) << " ";
  s << "\"/>\n";
  for (std::size_t i = 0; i < lx.size(); ++i)
    s << "<circle cx=\"" << format_double(px(lx[i])) << "\" cy=\"" << format_double(py(ly[i]))
      << "\" r=\"3\" fill=\"steelblue\"/>\n";

  const double f0 = fit_intercept + fit_slope * x_min;
  const double f1 = fit_intercept + fit_slope * x_max;
  s << "<line x1=\"" << format_double(px(x_min)) << "\" y1=\"" << format_double(py(f0))
    << "\" x2=\"" << format_double(px(x_max)) << "\" y2=\"" << format_double(py(f1))
    << "\" stroke=\"crimson\" stroke-dasharray=\"6,4\"/>\n";
  s << "<text x=\"" << width - margin << "\" y=\"" << margin
    << "\" text-anchor=\"end\" font-size=\"12\">slope " << format_double(fit_slope)
    << "</text>\n";
  s << "</svg>\n";
  return s.str();
}

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("write_file: cannot open " + path);
  out << content;
}

}  // namespace opuc::io
