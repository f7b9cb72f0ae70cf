#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qlap/graph.hpp"

namespace qlap {

/// Dense symmetric matrix, row-major.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t n = 0) : n_(n), data_(n * n, 0.0) {}

  std::size_t n() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  // Writes both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, double value) {
    data_[i * n_ + j] = value;
    data_[j * n_ + i] = value;
  }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  double trace() const;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

// Normalized Laplacian: 1 on the diagonal, -1/sqrt(d_i d_j) for i ~ j.
SymmetricMatrix build_laplacian(const Graph& g);

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr std::size_t kDefaultSweepLimit = 100;

struct SpectralResult {
  std::vector<double> eigenvalues;  // ascending
  // eigenvectors[k] is the unit eigenvector of eigenvalues[k].
  std::vector<std::vector<double>> eigenvectors;
  double residual = 0.0;  // max_k ||L v_k - lambda_k v_k||_2
  double off_diagonal = 0.0;
  std::size_t sweeps = 0;
  double tol = kDefaultTolerance;

  bool operator==(const SpectralResult&) const = default;
};

// Cyclic Jacobi; stops once the off-diagonal Frobenius mass drops below tol.
SpectralResult eigen_decompose(const SymmetricMatrix& matrix, double tol = kDefaultTolerance,
                               std::size_t sweep_limit = kDefaultSweepLimit);

double lambda1(const SpectralResult& s);

// True when lambda1 is within 10*tol of zero, which contradicts connectivity.
bool lambda1_suspect(const SpectralResult& s);

// n * sum_{i~j} (f_i - f_j)^2 / (s * sum_{i,j} (f_i - f_j)^2), both sums over
// ordered pairs. Its minimum over non-constant f is lambda1.
double harmonic_quotient(const Graph& g, std::span<const double> f);

}  // namespace qlap
