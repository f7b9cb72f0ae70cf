#include "qlap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qlap/error.hpp"

namespace qlap {

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += data_[i * n_ + i];
  return t;
}

SymmetricMatrix build_laplacian(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<double> root_degree(n);
  for (Vertex i = 0; i < n; ++i) {
    const auto d = g.neighbors(i).size();
    if (d == 0) throw IsolatedVertexError("vertex " + std::to_string(i) + " is isolated");
    root_degree[i] = std::sqrt(static_cast<double>(d));
  }
  SymmetricMatrix L(n);
  for (std::size_t i = 0; i < n; ++i) L.set(i, i, 1.0);
  for (const auto& [i, j] : g.edges()) {
    L.set(i, j, -1.0 / (root_degree[i] * root_degree[j]));
  }
  return L;
}

namespace {

double off_diagonal_mass(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) sum += a[i * n + j] * a[i * n + j];
    }
  }
  return std::sqrt(sum);
}

}  // namespace

SpectralResult eigen_decompose(const SymmetricMatrix& matrix, double tol,
                               std::size_t sweep_limit) {
  if (!(tol > 0.0)) throw Error("eigen_decompose: tol must be positive");
  const std::size_t n = matrix.n();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(matrix.row(i).begin(), matrix.row(i).end(), a.begin() + i * n);
  }
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  SpectralResult result;
  result.tol = tol;
  double off = off_diagonal_mass(a, n);
  std::size_t sweep = 0;
  while (off >= tol) {
    if (sweep == sweep_limit) {
      throw ConvergenceError("Jacobi sweep limit " + std::to_string(sweep_limit) +
                                 " reached with off-diagonal mass " + std::to_string(off),
                             off);
    }
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        // Rotation angle from the stable tangent formula.
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t r = 0; r < n; ++r) {
          const double arp = a[r * n + p];
          const double arq = a[r * n + q];
          a[r * n + p] = c * arp - s * arq;
          a[r * n + q] = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double apr = a[p * n + r];
          const double aqr = a[q * n + r];
          a[p * n + r] = c * apr - s * aqr;
          a[q * n + r] = s * apr + c * aqr;
        }
        a[p * n + q] = a[q * n + p] = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          const double vrp = v[r * n + p];
          const double vrq = v[r * n + q];
          v[r * n + p] = c * vrp - s * vrq;
          v[r * n + q] = s * vrp + c * vrq;
        }
      }
    }
    off = off_diagonal_mass(a, n);
  }
  result.sweeps = sweep;
  result.off_diagonal = off;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x * n + x] < a[y * n + y]; });
  for (std::size_t k : order) {
    result.eigenvalues.push_back(a[k * n + k]);
    std::vector<double> column(n);
    for (std::size_t r = 0; r < n; ++r) column[r] = v[r * n + k];
    result.eigenvectors.push_back(std::move(column));
  }

  for (std::size_t k = 0; k < n; ++k) {
    const auto& x = result.eigenvectors[k];
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double lx = 0.0;
      const auto row = matrix.row(i);
      for (std::size_t j = 0; j < n; ++j) lx += row[j] * x[j];
      const double d = lx - result.eigenvalues[k] * x[i];
      norm2 += d * d;
    }
    result.residual = std::max(result.residual, std::sqrt(norm2));
  }
  return result;
}

double lambda1(const SpectralResult& s) {
  if (s.eigenvalues.size() < 2) throw Error("lambda1 needs at least two vertices");
  return s.eigenvalues[1];
}

bool lambda1_suspect(const SpectralResult& s) { return lambda1(s) < 10.0 * s.tol; }

double harmonic_quotient(const Graph& g, std::span<const double> f) {
  const std::size_t n = g.n();
  if (f.size() != n) throw LengthMismatch("harmonic_quotient: vector length != n");
  const auto s = regular_degree(g);
  if (!s || *s == 0) throw NotRegularError("harmonic_quotient needs a regular graph");
  if (!is_connected(g)) throw DisconnectedError("graph is disconnected");

  double adjacent = 0.0;
  double all_pairs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d = f[i] - f[j];
      all_pairs += d * d;
      if (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) adjacent += d * d;
    }
  }
  if (all_pairs == 0.0) throw ConstantVectorError("harmonic_quotient: f is constant");
  return static_cast<double>(n) * adjacent / (static_cast<double>(*s) * all_pairs);
}

}  // namespace qlap
