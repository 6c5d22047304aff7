#include "core/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "core/errors.hpp"

namespace qle {

namespace {

double parse_field(std::string_view field, const std::string& origin, std::size_t line_no) {
  std::size_t b = field.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    fail(errc::io, "csv: empty field at " + origin + ":" + std::to_string(line_no));
  }
  std::size_t e = field.find_last_not_of(" \t\r");
  field = field.substr(b, e - b + 1);
  double value = 0.0;
  auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    fail(errc::io, "csv: non-numeric field '" + std::string(field) + "' at " + origin + ":" +
                       std::to_string(line_no));
  }
  return value;
}

}  // namespace

Eigen::MatrixXd parse_csv_matrix(const std::string& text, const std::string& origin) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line(text.data() + pos, (nl == std::string::npos ? text.size() : nl) - pos);
    pos = (nl == std::string::npos) ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) {
      if (pos >= text.size()) break;  // trailing newline
      fail(errc::io, "csv: blank line at " + origin + ":" + std::to_string(line_no));
    }
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      std::string_view field = line.substr(start, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - start);
      row.push_back(parse_field(field, origin, line_no));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      fail(errc::io, "csv: ragged row at " + origin + ":" + std::to_string(line_no) + " (" +
                         std::to_string(row.size()) + " fields, expected " +
                         std::to_string(rows.front().size()) + ")");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(errc::io, "csv: no data in " + origin);
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.front().size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

Eigen::MatrixXd read_csv_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io, "csv: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv_matrix(buf.str(), path);
}

std::string format_csv_matrix(const Eigen::MatrixXd& m) {
  std::string out;
  out.reserve(static_cast<std::size_t>(m.size()) * 12);
  char field[64];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!std::isfinite(m(i, j))) {
        fail(errc::invalid_argument, "csv: refusing to write non-finite value");
      }
      std::snprintf(field, sizeof(field), "%.17g", m(i, j));
      if (j) out += ',';
      out += field;
    }
    out += '\n';
  }
  return out;
}

void write_csv_matrix(const std::string& path, const Eigen::MatrixXd& m) {
  std::string body = format_csv_matrix(m);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(errc::io, "csv: cannot write '" + path + "'");
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!out) fail(errc::io, "csv: write failed for '" + path + "'");
}

}  // namespace qle
