#pragma once

#include <ostream>
#include <span>
#include <vector>

#include "vrel/graph.hpp"

namespace vrel {

inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kMultiplicityTolerance = 1e-8;

// Dense row-major square matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}

  int dim() const { return n_; }
  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * n_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * n_ + c]; }

 private:
  int n_ = 0;
  std::vector<double> data_;
};

DenseMatrix laplacian(const SimpleGraph& g);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  DenseMatrix eigenvectors;         // column k pairs with eigenvalues[k]

  std::vector<double> column(int k) const;
};

// Cyclic Jacobi, rotations in row-major upper-triangle order, until the
// off-diagonal Frobenius norm is <= tol. Throws kNotSymmetric / kNoConvergence.
EigenDecomposition symmetric_eigen(const DenseMatrix& m, double tol = kJacobiTolerance);
// Same iteration without accumulating eigenvectors.
std::vector<double> symmetric_eigenvalues(const DenseMatrix& m, double tol = kJacobiTolerance);

double algebraic_connectivity(const SimpleGraph& g);

struct SpectralData {
  std::vector<double> eigenvalues;
  EigenDecomposition decomposition;
  double alpha = 0.0;
  std::vector<std::vector<double>> fiedler_basis;
};

SpectralData spectral_data(const SimpleGraph& g, double mult_tol = kMultiplicityTolerance);

std::vector<std::vector<double>> fiedler_basis(const SimpleGraph& g, double mult_tol = kMultiplicityTolerance);

// Maximum |v_i - v_j| over all unit vectors v of the Fiedler eigenspace; for a
// simple alpha this is |v_i - v_j| of the Fiedler vector.
double fiedler_distance(const SpectralData& sd, int i, int j);
double fiedler_distance(const SimpleGraph& g, int i, int j);

// One eigenvalue per line, full precision.
void write_spectrum_csv(std::ostream& out, std::span<const double> eigenvalues);

}  // namespace vrel
