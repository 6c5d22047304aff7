#pragma once

#include <Eigen/Core>
#include <string>

namespace qle {

// Numeric CSV: one row per line, comma separated, '.' decimal point, no
// header, LF line endings. Values are written with 17 significant digits so
// a write/read round trip reproduces doubles exactly.

Eigen::MatrixXd read_csv_matrix(const std::string& path);
Eigen::MatrixXd parse_csv_matrix(const std::string& text, const std::string& origin);

void write_csv_matrix(const std::string& path, const Eigen::MatrixXd& m);
std::string format_csv_matrix(const Eigen::MatrixXd& m);

}  // namespace qle
