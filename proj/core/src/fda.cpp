#include "ftrend/fda.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <utility>

#include "ftrend/errors.hpp"

namespace ftrend {

namespace {

void check_points(const Eigen::VectorXd& points) {
  if (points.size() < 2)
    throw ArgumentError("grid needs at least 2 points");
  for (int i = 1; i < points.size(); ++i) {
    if (!(points[i] > points[i - 1]))
      throw ArgumentError("grid points must be strictly increasing");
  }
}

}  // namespace

Grid make_grid(Eigen::VectorXd points) {
  check_points(points);
  const int H = static_cast<int>(points.size());
  Eigen::VectorXd weights(H);
  const double dx = points[1] - points[0];
  bool uniform = true;
  for (int i = 1; i < H; ++i) {
    if (std::abs((points[i] - points[i - 1]) - dx) > 1e-9 * std::abs(dx)) {
      uniform = false;
      break;
    }
  }
  if (uniform) {
    weights.setConstant(dx);
  } else {
    weights[0] = 0.5 * (points[1] - points[0]);
    for (int i = 1; i < H - 1; ++i)
      weights[i] = 0.5 * (points[i + 1] - points[i - 1]);
    weights[H - 1] = 0.5 * (points[H - 1] - points[H - 2]);
  }
  return Grid{std::move(points), std::move(weights)};
}

Grid make_grid(Eigen::VectorXd points, Eigen::VectorXd weights) {
  check_points(points);
  if (weights.size() != points.size())
    throw DimensionError("weights length does not match points");
  if ((weights.array() <= 0).any())
    throw ArgumentError("quadrature weights must be positive");
  return Grid{std::move(points), std::move(weights)};
}

Grid uniform_grid(int H, double x0, double dx) {
  if (H < 2) throw ArgumentError("grid needs at least 2 points");
  if (dx <= 0) throw ArgumentError("grid spacing must be positive");
  Eigen::VectorXd points =
      Eigen::VectorXd::LinSpaced(H, x0, x0 + dx * (H - 1));
  Eigen::VectorXd weights = Eigen::VectorXd::Constant(H, dx);
  return Grid{std::move(points), std::move(weights)};
}

bool same_grid(const Grid& a, const Grid& b) {
  return a.points.size() == b.points.size() && a.points == b.points &&
         a.weights == b.weights;
}

FunctionalDataset make_dataset(Grid grid, Eigen::MatrixXd values) {
  if (values.cols() != grid.size())
    throw DimensionError("curve length does not match grid size");
  if (values.rows() < 2)
    throw ArgumentError("need at least 2 curves");
  if (!values.allFinite())
    throw ArgumentError("curve values must be finite");
  return FunctionalDataset{std::move(grid), std::move(values)};
}

double inner_product(const Eigen::VectorXd& f, const Eigen::VectorXd& g,
                     const Grid& grid) {
  if (f.size() != grid.size() || g.size() != grid.size())
    throw DimensionError("inner_product: vector length does not match grid");
  return (grid.weights.array() * f.array() * g.array()).sum();
}

CoefficientMatrix project(const FunctionalDataset& data,
                          const BasisSystem& basis) {
  if (!same_grid(data.grid, basis.grid))
    throw DimensionError("project: data grid differs from basis grid");
  Eigen::MatrixXd scores =
      data.values * data.grid.weights.asDiagonal() * basis.eval.transpose();
  return CoefficientMatrix{std::move(scores)};
}

FunctionalDataset reconstruct(const CoefficientMatrix& coef,
                              const BasisSystem& basis) {
  if (coef.cols() != basis.count())
    throw DimensionError("reconstruct: score columns do not match basis count");
  return FunctionalDataset{basis.grid, coef.scores * basis.eval};
}

BasisSystem fpca(const FunctionalDataset& data, int L,
                 const FpcaOptions& opts) {
  const int n = data.curve_count();
  const int H = data.grid.size();
  if (L < 1) throw ArgumentError("fpca: L must be >= 1");
  if (L > std::min(n, H))
    throw ArgumentError("fpca: L exceeds min(curve count, grid size)");

  Eigen::MatrixXd curves = data.values;
  if (opts.centered) {
    Eigen::RowVectorXd mean = curves.colwise().mean();
    curves.rowwise() -= mean;
  }

  // Weighted data matrix A = Y diag(sqrt(w)) / sqrt(n); the right singular
  // vectors of A are the eigenvectors of the discretized second-moment
  // operator in the sqrt(w)-scaled coordinates.
  Eigen::VectorXd sqrt_w = data.grid.weights.array().sqrt();
  Eigen::MatrixXd weighted =
      curves * sqrt_w.asDiagonal() / std::sqrt(static_cast<double>(n));
  Eigen::BDCSVD<Eigen::MatrixXd> svd(weighted,
                                     Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();

  double total = sigma.array().square().sum();
  double rank_tol = sigma.size() > 0
                        ? sigma[0] * std::max(n, H) *
                              std::numeric_limits<double>::epsilon()
                        : 0.0;
  int rank = 0;
  for (int j = 0; j < sigma.size(); ++j)
    if (sigma[j] > rank_tol) ++rank;

  int kept = L;
  if (rank < L) {
    if (!opts.reduce_on_deficient_rank)
      throw ArgumentError("fpca: requested " + std::to_string(L) +
                          " components but data rank is " +
                          std::to_string(rank));
    kept = rank;
  }
  if (kept == 0) throw NumericalError("fpca: data has rank 0");

  Eigen::MatrixXd eval(kept, H);
  Eigen::VectorXd proportions(kept);
  for (int j = 0; j < kept; ++j) {
    // back to quadrature-orthonormal coordinates
    Eigen::VectorXd phi = svd.matrixV().col(j).array() / sqrt_w.array();
    int argmax = 0;
    phi.array().abs().maxCoeff(&argmax);
    if (phi[argmax] < 0) phi = -phi;
    eval.row(j) = phi.transpose();
    proportions[j] = total > 0 ? sigma[j] * sigma[j] / total : 0.0;
  }
  return BasisSystem{data.grid, std::move(eval), std::move(proportions)};
}

double orthonormality_defect(const BasisSystem& basis) {
  Eigen::MatrixXd gram = basis.eval * basis.grid.weights.asDiagonal() *
                         basis.eval.transpose();
  gram -= Eigen::MatrixXd::Identity(basis.count(), basis.count());
  return gram.array().abs().maxCoeff();
}

}  // namespace ftrend
