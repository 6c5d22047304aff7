#include "core/dataset.hpp"

#include <cmath>

#include "core/csv.hpp"
#include "core/errors.hpp"
#include "core/random.hpp"

namespace qle {

namespace {

constexpr double kPi = 3.14159265358979323846;

void add_noise(Eigen::MatrixXd& pts, double noise, Rng& rng) {
  if (noise == 0.0) return;
  for (Eigen::Index i = 0; i < pts.rows(); ++i)
    for (Eigen::Index j = 0; j < pts.cols(); ++j) pts(i, j) += noise * rng.gaussian();
}

Eigen::MatrixXd make_ring(std::int64_t m, double noise, Rng& rng) {
  Eigen::MatrixXd pts(m, 2);
  for (std::int64_t k = 0; k < m; ++k) {
    double angle = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(m);
    pts(k, 0) = std::cos(angle);
    pts(k, 1) = std::sin(angle);
  }
  add_noise(pts, noise, rng);
  return pts;
}

Eigen::MatrixXd make_swiss_roll(std::int64_t m, double noise, Rng& rng) {
  Eigen::MatrixXd pts(m, 3);
  for (std::int64_t k = 0; k < m; ++k) {
    double t = 1.5 * kPi * (1.0 + 2.0 * rng.uniform());
    double height = 21.0 * rng.uniform();
    pts(k, 0) = t * std::cos(t);
    pts(k, 1) = height;
    pts(k, 2) = t * std::sin(t);
  }
  add_noise(pts, noise, rng);
  return pts;
}

Eigen::MatrixXd make_two_moons(std::int64_t m, double noise, Rng& rng) {
  std::int64_t outer = m - m / 2;
  std::int64_t inner = m / 2;
  Eigen::MatrixXd pts(m, 2);
  for (std::int64_t k = 0; k < outer; ++k) {
    double angle = outer > 1 ? kPi * static_cast<double>(k) / static_cast<double>(outer - 1) : 0.0;
    pts(k, 0) = std::cos(angle);
    pts(k, 1) = std::sin(angle);
  }
  for (std::int64_t k = 0; k < inner; ++k) {
    double angle = inner > 1 ? kPi * static_cast<double>(k) / static_cast<double>(inner - 1) : 0.0;
    pts(outer + k, 0) = 1.0 - std::cos(angle);
    pts(outer + k, 1) = 0.5 - std::sin(angle);
  }
  add_noise(pts, noise, rng);
  return pts;
}

}  // namespace

PointCloud PointCloud::create(Eigen::MatrixXd pts) {
  if (pts.rows() < 2) fail(errc::invalid_argument, "dataset: need at least 2 samples");
  if (pts.cols() < 1) fail(errc::invalid_argument, "dataset: need at least 1 feature column");
  if (!pts.allFinite()) fail(errc::invalid_argument, "dataset: non-finite entry in point cloud");
  return PointCloud{std::move(pts)};
}

DatasetKind dataset_kind_from_name(const std::string& name) {
  if (name == "ring") return DatasetKind::ring;
  if (name == "swiss-roll") return DatasetKind::swiss_roll;
  if (name == "two-moons") return DatasetKind::two_moons;
  fail(errc::invalid_argument,
       "dataset: unknown kind '" + name + "' (expected ring, swiss-roll or two-moons)");
}

const char* dataset_kind_name(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::ring: return "ring";
    case DatasetKind::swiss_roll: return "swiss-roll";
    case DatasetKind::two_moons: return "two-moons";
  }
  return "?";
}

PointCloud generate_synthetic(DatasetKind kind, std::int64_t m, double noise, std::uint64_t seed) {
  if (m < 2) fail(errc::invalid_argument, "dataset: sample count must be >= 2");
  if (!(noise >= 0.0)) fail(errc::invalid_argument, "dataset: noise must be >= 0");
  Rng rng(seed);
  switch (kind) {
    case DatasetKind::ring: return PointCloud::create(make_ring(m, noise, rng));
    case DatasetKind::swiss_roll: return PointCloud::create(make_swiss_roll(m, noise, rng));
    case DatasetKind::two_moons: return PointCloud::create(make_two_moons(m, noise, rng));
  }
  fail(errc::invalid_argument, "dataset: unknown kind");
}

PointCloud load_points(const std::string& path) { return PointCloud::create(read_csv_matrix(path)); }

void save_points(const PointCloud& pc, const std::string& path) {
  write_csv_matrix(path, pc.points);
}

}  // namespace qle
