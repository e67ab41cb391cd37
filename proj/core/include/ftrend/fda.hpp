#pragma once

#include <Eigen/Dense>
#include <optional>

namespace ftrend {

/// Evaluation grid shared by all curves: strictly increasing points plus
/// positive quadrature weights, so that sum_i w_i f_i g_i approximates the
/// L2 inner product.
struct Grid {
  Eigen::VectorXd points;
  Eigen::VectorXd weights;

  int size() const { return static_cast<int>(points.size()); }
};

/// Rectangle-rule weights: the common spacing on uniform grids, midpoint cell
/// widths (half cells at the ends) otherwise.
Grid make_grid(Eigen::VectorXd points);
Grid make_grid(Eigen::VectorXd points, Eigen::VectorXd weights);
Grid uniform_grid(int H, double x0 = 1.0, double dx = 1.0);

bool same_grid(const Grid& a, const Grid& b);

/// Discretized curves on a common grid; one row per curve.
struct FunctionalDataset {
  Grid grid;
  Eigen::MatrixXd values;  // rows x H

  int curve_count() const { return static_cast<int>(values.rows()); }
};

FunctionalDataset make_dataset(Grid grid, Eigen::MatrixXd values);

/// L basis functions evaluated on the grid (one per row), quadrature
/// orthonormal. variance_proportions is present when the basis came out of
/// fpca(); it is nonincreasing and sums to <= 1.
struct BasisSystem {
  Grid grid;
  Eigen::MatrixXd eval;  // L x H
  std::optional<Eigen::VectorXd> variance_proportions;

  int count() const { return static_cast<int>(eval.rows()); }
};

/// Basis scores, one row per curve, one column per basis function.
struct CoefficientMatrix {
  Eigen::MatrixXd scores;  // rows x L

  int rows() const { return static_cast<int>(scores.rows()); }
  int cols() const { return static_cast<int>(scores.cols()); }
};

/// Quadrature inner product sum_i w_i f_i g_i.
double inner_product(const Eigen::VectorXd& f, const Eigen::VectorXd& g,
                     const Grid& grid);

/// scores[t,l] = <curve t, basis l>.
CoefficientMatrix project(const FunctionalDataset& data,
                          const BasisSystem& basis);

/// values[t,i] = sum_l scores[t,l] * eval[l,i].
FunctionalDataset reconstruct(const CoefficientMatrix& coef,
                              const BasisSystem& basis);

struct FpcaOptions {
  bool centered = false;  // default: uncentered second-moment operator
  bool reduce_on_deficient_rank = false;
};

/// Top-L eigenfunctions of the empirical second-moment operator of the
/// curves, quadrature-orthonormal, eigenvalue shares in
/// variance_proportions. Signs are fixed so each eigenfunction's
/// largest-magnitude entry is positive.
BasisSystem fpca(const FunctionalDataset& data, int L,
                 const FpcaOptions& opts = {});

/// Largest deviation of sum_i w_i phi_l phi_l' from the identity; tests use
/// this to check the orthonormality invariant.
double orthonormality_defect(const BasisSystem& basis);

}  // namespace ftrend
