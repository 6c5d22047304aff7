#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>

namespace qle {

// m sample points in n-dimensional ambient space. All entries finite,
// m >= 2, n >= 1 (enforced at construction).
struct PointCloud {
  Eigen::MatrixXd points;  // m x n, one sample per row

  Eigen::Index sample_count() const { return points.rows(); }
  Eigen::Index ambient_dim() const { return points.cols(); }

  static PointCloud create(Eigen::MatrixXd pts);
};

enum class DatasetKind { ring, swiss_roll, two_moons };

DatasetKind dataset_kind_from_name(const std::string& name);
const char* dataset_kind_name(DatasetKind kind);

// Deterministic in (kind, m, noise, seed). With noise 0 the ring places
// point k at angle 2*pi*k/m on the unit circle; swiss-roll points are 3-D,
// two-moons points are 2-D.
PointCloud generate_synthetic(DatasetKind kind, std::int64_t m, double noise, std::uint64_t seed);

PointCloud load_points(const std::string& path);
void save_points(const PointCloud& pc, const std::string& path);

}  // namespace qle
