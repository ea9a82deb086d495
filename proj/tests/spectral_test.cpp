#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "support.hpp"
#include "vrel/error.hpp"
#include "vrel/spectral.hpp"

namespace vrel {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Laplacian, Examples) {
  const DenseMatrix p2 = laplacian(testing::path_graph(2));
  EXPECT_EQ(p2(0, 0), 1.0);
  EXPECT_EQ(p2(0, 1), -1.0);
  EXPECT_EQ(p2(1, 0), -1.0);
  EXPECT_EQ(p2(1, 1), 1.0);
  const DenseMatrix k3 = laplacian(testing::complete_graph(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(k3(i, j), i == j ? 2.0 : -1.0);
  }
  const DenseMatrix c5 = laplacian(testing::cycle_graph(5));
  for (int i = 0; i < 5; ++i) {
    double row = 0;
    for (int j = 0; j < 5; ++j) {
      row += c5(i, j);
      const int gap = std::abs(i - j);
      EXPECT_EQ(c5(i, j), i == j ? 2.0 : (gap == 1 || gap == 4) ? -1.0 : 0.0);
    }
    EXPECT_EQ(row, 0.0);
  }
}

TEST(SymmetricEigen, SmallSpectra) {
  const auto p2 = symmetric_eigen(laplacian(testing::path_graph(2))).eigenvalues;
  EXPECT_NEAR(p2[0], 0.0, 1e-12);
  EXPECT_NEAR(p2[1], 2.0, 1e-12);
  const auto k3 = symmetric_eigen(laplacian(testing::complete_graph(3))).eigenvalues;
  EXPECT_NEAR(k3[0], 0.0, 1e-12);
  EXPECT_NEAR(k3[1], 3.0, 1e-12);
  EXPECT_NEAR(k3[2], 3.0, 1e-12);
  const auto p3 = symmetric_eigen(laplacian(testing::path_graph(3))).eigenvalues;
  EXPECT_NEAR(p3[0], 0.0, 1e-12);
  EXPECT_NEAR(p3[1], 1.0, 1e-12);
  EXPECT_NEAR(p3[2], 3.0, 1e-12);
}

// Closed-form spectra: cycle 2 - 2cos(2 pi k / n), path 2 - 2cos(pi k / n),
// star {0, 1 (k-1 times), k + 1}.
TEST(SymmetricEigen, ClosedFormFamilies) {
  for (int n = 3; n <= 20; ++n) {
    std::vector<double> cyc, pth;
    for (int k = 0; k < n; ++k) {
      cyc.push_back(2 - 2 * std::cos(2 * kPi * k / n));
      pth.push_back(2 - 2 * std::cos(kPi * k / n));
    }
    std::sort(cyc.begin(), cyc.end());
    std::sort(pth.begin(), pth.end());
    const auto c = symmetric_eigenvalues(laplacian(testing::cycle_graph(n)));
    const auto p = symmetric_eigenvalues(laplacian(testing::path_graph(n)));
    const auto s = symmetric_eigenvalues(laplacian(testing::star_graph(n - 1)));
    for (int k = 0; k < n; ++k) {
      EXPECT_NEAR(c[k], cyc[k], 1e-9);
      EXPECT_NEAR(p[k], pth[k], 1e-9);
      EXPECT_NEAR(s[k], k == 0 ? 0.0 : k == n - 1 ? n : 1.0, 1e-9);
    }
  }
}

TEST(SymmetricEigen, ReconstructionAndOrthonormality) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 19;
    const SimpleGraph g = testing::random_connected(rng, n, 0.3);
    const DenseMatrix l = laplacian(g);
    const EigenDecomposition ed = symmetric_eigen(l);
    EXPECT_TRUE(std::is_sorted(ed.eigenvalues.begin(), ed.eigenvalues.end()));
    double err = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double rec = 0, dot = 0;
        for (int k = 0; k < n; ++k) {
          rec += ed.eigenvectors(i, k) * ed.eigenvalues[k] * ed.eigenvectors(j, k);
          dot += ed.eigenvectors(k, i) * ed.eigenvectors(k, j);
        }
        err += (l(i, j) - rec) * (l(i, j) - rec);
        EXPECT_NEAR(dot, i == j ? 1.0 : 0.0, 1e-9);
      }
    }
    EXPECT_LE(std::sqrt(err), 1e-7 * n);
    const auto values_only = symmetric_eigenvalues(l);
    for (int k = 0; k < n; ++k) EXPECT_NEAR(values_only[k], ed.eigenvalues[k], 1e-10);
    EXPECT_EQ(symmetric_eigen(l).eigenvalues, ed.eigenvalues);
  }
}

TEST(SymmetricEigen, RejectsAsymmetric) {
  DenseMatrix m(2);
  m(0, 1) = 1.0;
  try {
    symmetric_eigen(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotSymmetric);
  }
}

TEST(AlgebraicConnectivity, Examples) {
  EXPECT_NEAR(algebraic_connectivity(testing::complete_graph(3)), 3.0, 1e-12);
  EXPECT_NEAR(algebraic_connectivity(testing::path_graph(3)), 1.0, 1e-12);
  EXPECT_NEAR(algebraic_connectivity(testing::cycle_graph(5)), 2 - 2 * std::cos(2 * kPi / 5), 1e-12);
  EXPECT_NEAR(algebraic_connectivity(build_graph(4, {{0, 1}, {2, 3}})), 0.0, 1e-12);
  EXPECT_THROW(algebraic_connectivity(build_graph(1, {})), Error);
}

// Holds on non-complete graphs; K_n has alpha = n against kappa = n - 1.
TEST(AlgebraicConnectivity, BoundedByVertexConnectivity) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int k = 0; k < 300; ++k) {
    const SimpleGraph g = testing::random_connected(rng, 2 + k % 12, 0.05 * (k % 10));
    if (g.is_complete()) continue;
    ++checked;
    EXPECT_LE(algebraic_connectivity(g), vertex_connectivity(g) + 1e-9);
  }
  EXPECT_GT(checked, 200);
  for (int n = 2; n <= 6; ++n) {
    EXPECT_NEAR(algebraic_connectivity(testing::complete_graph(n)), n, 1e-9);
    EXPECT_EQ(vertex_connectivity(testing::complete_graph(n)), n - 1);
  }
}

TEST(FiedlerBasis, Multiplicities) {
  const auto p3 = fiedler_basis(testing::path_graph(3));
  ASSERT_EQ(p3.size(), 1U);
  EXPECT_NEAR(std::abs(p3[0][0]), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(p3[0][1], 0.0, 1e-12);
  EXPECT_NEAR(p3[0][0], -p3[0][2], 1e-12);
  EXPECT_EQ(fiedler_basis(testing::cycle_graph(5)).size(), 2U);
  EXPECT_EQ(fiedler_basis(testing::complete_graph(3)).size(), 2U);
  EXPECT_EQ(fiedler_basis(testing::petersen_graph()).size(), 5U);
  EXPECT_THROW(fiedler_basis(build_graph(4, {{0, 1}, {2, 3}})), Error);
}

TEST(FiedlerBasis, UnitResidualAndOrthogonal) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const SimpleGraph g = testing::random_connected(rng, 3 + trial % 15, 0.25);
    const SpectralData sd = spectral_data(g);
    const DenseMatrix l = laplacian(g);
    const int n = g.order();
    EXPECT_NEAR(sd.eigenvalues[0], 0.0, 1e-9);
    for (std::size_t a = 0; a < sd.fiedler_basis.size(); ++a) {
      const auto& v = sd.fiedler_basis[a];
      double norm = 0, residual = 0;
      for (int i = 0; i < n; ++i) {
        norm += v[i] * v[i];
        double lv = 0;
        for (int j = 0; j < n; ++j) lv += l(i, j) * v[j];
        residual += (lv - sd.alpha * v[i]) * (lv - sd.alpha * v[i]);
      }
      EXPECT_NEAR(norm, 1.0, 1e-9);
      EXPECT_LE(std::sqrt(residual), 1e-8);
      for (std::size_t b = 0; b < a; ++b) {
        double dot = 0;
        for (int i = 0; i < n; ++i) dot += v[i] * sd.fiedler_basis[b][i];
        EXPECT_NEAR(dot, 0.0, 1e-9);
      }
    }
  }
}

TEST(FiedlerDistance, Examples) {
  EXPECT_NEAR(fiedler_distance(testing::path_graph(3), 0, 2), std::sqrt(2.0), 1e-12);
  EXPECT_EQ(fiedler_distance(testing::path_graph(3), 1, 1), 0.0);
  const SimpleGraph c5 = testing::cycle_graph(5);
  const double chord = fiedler_distance(c5, 0, 2);
  for (const auto& e : c5.non_edges()) EXPECT_NEAR(fiedler_distance(c5, e.i, e.j), chord, 1e-9);
  EXPECT_THROW(fiedler_distance(c5, 0, 5), Error);
}

// For a repeated alpha the distance is the largest |v_i - v_j| over unit
// eigenspace vectors, so it dominates every basis vector and is bounded by
// sqrt(2).
TEST(FiedlerDistance, DominatesBasisVectors) {
  for (const SimpleGraph& g : {testing::cycle_graph(6), testing::petersen_graph(), testing::complete_graph(5)}) {
    const SpectralData sd = spectral_data(g);
    for (int i = 0; i < g.order(); ++i) {
      for (int j = 0; j < g.order(); ++j) {
        const double d = fiedler_distance(sd, i, j);
        for (const auto& v : sd.fiedler_basis) EXPECT_GE(d + 1e-12, std::abs(v[i] - v[j]));
        EXPECT_LE(d, std::sqrt(2.0) + 1e-9);
      }
    }
  }
}

TEST(SpectrumCsv, OneValuePerLine) {
  std::ostringstream out;
  const std::vector<double> values{0.0, 1.0, 3.0};
  write_spectrum_csv(out, values);
  EXPECT_EQ(out.str(), "eigenvalue\n0\n1\n3\n");
}

}  // namespace
}  // namespace vrel
