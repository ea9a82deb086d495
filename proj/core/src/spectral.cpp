#include "vrel/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <string>

#include "vrel/error.hpp"

namespace vrel {
namespace {

void check_symmetric(const DenseMatrix& m) {
  const int n = m.dim();
  if (n > kMaxVertices) throw Error(Errc::kParameterRange, "eigensolver supports n <= 64");
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c) {
      if (std::abs(m(r, c) - m(c, r)) > 1e-12) {
        throw Error(Errc::kNotSymmetric,
                    "entry (" + std::to_string(r) + "," + std::to_string(c) + ") differs from its transpose");
      }
    }
  }
}

double off_diagonal_norm(const DenseMatrix& a) {
  double sum = 0.0;
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = r + 1; c < a.dim(); ++c) sum += a(r, c) * a(r, c);
  }
  return std::sqrt(2.0 * sum);
}

// Diagonalizes `a` in place; accumulates rotations into `v` when non-null.
void jacobi(DenseMatrix& a, DenseMatrix* v, double tol) {
  const int n = a.dim();
  for (int sweep = 0;; ++sweep) {
    if (off_diagonal_norm(a) <= tol) return;
    if (sweep == kJacobiMaxSweeps) {
      throw Error(Errc::kNoConvergence, "Jacobi did not converge in " + std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Past the first sweeps, entries below the diagonal's rounding floor
        // are zeroed rather than rotated.
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
        if (v != nullptr) {
          for (int k = 0; k < n; ++k) {
            const double vkp = (*v)(k, p);
            const double vkq = (*v)(k, q);
            (*v)(k, p) = c * vkp - s * vkq;
            (*v)(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }
}

std::vector<int> ascending_order(const DenseMatrix& a) {
  std::vector<int> order(a.dim());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) < a(y, y); });
  return order;
}

void require_connected(const SimpleGraph& g) {
  if (!is_connected(g)) throw Error(Errc::kDisconnected, "Fiedler vectors need a connected graph");
}

}  // namespace

DenseMatrix laplacian(const SimpleGraph& g) {
  const int n = g.order();
  DenseMatrix l(n);
  for (int i = 0; i < n; ++i) {
    l(i, i) = g.degree(i);
    for_each_vertex(g.row(i), [&](int j) { l(i, j) = -1.0; });
  }
  return l;
}

std::vector<double> EigenDecomposition::column(int k) const {
  std::vector<double> out(eigenvectors.dim());
  for (int r = 0; r < eigenvectors.dim(); ++r) out[r] = eigenvectors(r, k);
  return out;
}

EigenDecomposition symmetric_eigen(const DenseMatrix& m, double tol) {
  check_symmetric(m);
  const int n = m.dim();
  DenseMatrix a = m;
  DenseMatrix v(n);
  for (int i = 0; i < n; ++i) v(i, i) = 1.0;
  jacobi(a, &v, tol);

  const auto order = ascending_order(a);
  EigenDecomposition out{std::vector<double>(n), DenseMatrix(n)};
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]);
    for (int r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> symmetric_eigenvalues(const DenseMatrix& m, double tol) {
  check_symmetric(m);
  DenseMatrix a = m;
  jacobi(a, nullptr, tol);
  std::vector<double> out(a.dim());
  for (int k = 0; k < a.dim(); ++k) out[k] = a(k, k);
  std::sort(out.begin(), out.end());
  return out;
}

double algebraic_connectivity(const SimpleGraph& g) {
  if (g.order() < 2) throw Error(Errc::kParameterRange, "algebraic connectivity needs n >= 2");
  return std::max(0.0, symmetric_eigenvalues(laplacian(g))[1]);
}

SpectralData spectral_data(const SimpleGraph& g, double mult_tol) {
  require_connected(g);
  if (g.order() < 2) throw Error(Errc::kParameterRange, "Fiedler vectors need n >= 2");
  SpectralData sd;
  sd.decomposition = symmetric_eigen(laplacian(g));
  sd.eigenvalues = sd.decomposition.eigenvalues;
  sd.alpha = sd.eigenvalues[1];

  // Modified Gram-Schmidt over the eigenvectors of the alpha eigenspace.
  for (int k = 1; k < g.order(); ++k) {
    if (std::abs(sd.eigenvalues[k] - sd.alpha) > mult_tol) break;
    auto vec = sd.decomposition.column(k);
    for (const auto& b : sd.fiedler_basis) {
      const double dot = std::inner_product(vec.begin(), vec.end(), b.begin(), 0.0);
      for (std::size_t r = 0; r < vec.size(); ++r) vec[r] -= dot * b[r];
    }
    const double norm = std::sqrt(std::inner_product(vec.begin(), vec.end(), vec.begin(), 0.0));
    for (auto& x : vec) x /= norm;
    sd.fiedler_basis.push_back(std::move(vec));
  }
  return sd;
}

std::vector<std::vector<double>> fiedler_basis(const SimpleGraph& g, double mult_tol) {
  return spectral_data(g, mult_tol).fiedler_basis;
}

double fiedler_distance(const SpectralData& sd, int i, int j) {
  // max over unit vectors v in the eigenspace of |v_i - v_j| is the norm of the
  // projection of e_i - e_j, which does not depend on the basis.
  double sq = 0.0;
  for (const auto& b : sd.fiedler_basis) sq += (b[i] - b[j]) * (b[i] - b[j]);
  return std::sqrt(sq);
}

double fiedler_distance(const SimpleGraph& g, int i, int j) {
  if (i < 0 || j < 0 || i >= g.order() || j >= g.order()) {
    throw Error(Errc::kOutOfRange, "vertex index outside the graph");
  }
  return fiedler_distance(spectral_data(g), i, j);
}

void write_spectrum_csv(std::ostream& out, std::span<const double> eigenvalues) {
  out << "eigenvalue\n" << std::setprecision(17);
  for (double x : eigenvalues) out << x << '\n';
}

}  // namespace vrel
