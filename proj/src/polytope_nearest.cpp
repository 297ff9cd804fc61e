#include "banachproj/polytope_nearest.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace banachproj {

HullNearest euclidean_nearest_in_hull(const std::vector<Point>& vertices,
                                      const Point& x) {
  if (vertices.empty())
    throw std::invalid_argument("euclidean_nearest_in_hull: no vertices");
  const Eigen::Index n = static_cast<Eigen::Index>(x.size());
  const Eigen::Index m = static_cast<Eigen::Index>(vertices.size());

  Eigen::MatrixXd P(n, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    if (vertices[j].size() != x.size())
      throw DimensionMismatch("euclidean_nearest_in_hull: vertex dimension");
    for (Eigen::Index i = 0; i < n; ++i) P(i, j) = vertices[j][i] - x[i];
  }
  const Eigen::VectorXd sq = P.colwise().squaredNorm();
  const double scale = std::max(sq.maxCoeff(), 1e-300);

  std::vector<Eigen::Index> corral;
  std::vector<double> lam;
  Eigen::Index j0 = 0;
  sq.minCoeff(&j0);
  corral.push_back(j0);
  lam.push_back(1.0);
  Eigen::VectorXd y = P.col(j0);

  auto combine = [&]() {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
    for (std::size_t k = 0; k < corral.size(); ++k) out += lam[k] * P.col(corral[k]);
    return out;
  };

  constexpr double kEps = 1e-13;
  const int max_major = static_cast<int>(std::max<Eigen::Index>(1000, 50 * m));
  for (int major = 0; major < max_major; ++major) {
    const double yy = y.squaredNorm();
    if (yy <= 1e-28 * scale) break;
    Eigen::Index j = 0;
    const Eigen::VectorXd dots = P.transpose() * y;
    dots.minCoeff(&j);
    if (yy - dots(j) <= 1e-12 * scale) break;
    if (std::find(corral.begin(), corral.end(), j) != corral.end()) break;
    corral.push_back(j);
    lam.push_back(0.0);

    for (int minor = 0; minor <= m + 5; ++minor) {
      const Eigen::Index k = static_cast<Eigen::Index>(corral.size());
      Eigen::MatrixXd B = Eigen::MatrixXd::Zero(k + 1, k + 1);
      for (Eigen::Index a = 0; a < k; ++a) {
        for (Eigen::Index b = 0; b < k; ++b)
          B(a, b) = P.col(corral[a]).dot(P.col(corral[b]));
        B(a, k) = 1.0;
        B(k, a) = 1.0;
      }
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
      rhs(k) = 1.0;
      Eigen::FullPivLU<Eigen::MatrixXd> lu(B);
      if (lu.rank() < k + 1) {
        // Affinely dependent corral: drop the newest point and stop.
        corral.pop_back();
        lam.pop_back();
        y = combine();
        major = max_major;
        break;
      }
      const Eigen::VectorXd mu = lu.solve(rhs).head(k);
      if ((mu.array() > kEps).all()) {
        for (Eigen::Index a = 0; a < k; ++a) lam[a] = mu(a);
        y = combine();
        break;
      }
      double theta = 1.0;
      for (Eigen::Index a = 0; a < k; ++a) {
        if (mu(a) <= kEps) {
          const double denom = lam[a] - mu(a);
          if (denom > 0.0) theta = std::min(theta, lam[a] / denom);
        }
      }
      for (Eigen::Index a = 0; a < k; ++a)
        lam[a] = (1.0 - theta) * lam[a] + theta * mu(a);
      std::vector<Eigen::Index> keep_idx;
      std::vector<double> keep_lam;
      for (Eigen::Index a = 0; a < k; ++a) {
        if (lam[a] > kEps) {
          keep_idx.push_back(corral[a]);
          keep_lam.push_back(lam[a]);
        }
      }
      if (keep_idx.empty()) {
        keep_idx.push_back(corral.back());
        keep_lam.push_back(1.0);
      }
      double total = 0.0;
      for (double l : keep_lam) total += l;
      for (double& l : keep_lam) l /= total;
      corral = std::move(keep_idx);
      lam = std::move(keep_lam);
      y = combine();
    }
  }

  HullNearest out;
  out.weights.assign(static_cast<std::size_t>(m), 0.0);
  double total = 0.0;
  for (double l : lam) total += l;
  for (std::size_t k = 0; k < corral.size(); ++k)
    out.weights[static_cast<std::size_t>(corral[k])] = lam[k] / total;
  out.point = Point::zeros(x.size());
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    if (out.weights[j] == 0.0) continue;
    for (std::size_t i = 0; i < x.size(); ++i)
      out.point[i] += out.weights[j] * vertices[j][i];
  }
  out.distance = lp_norm((out.point - x).view(), 2.0);
  return out;
}

}  // namespace banachproj
