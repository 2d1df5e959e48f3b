#include "polardim/svd.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "polardim/error.hpp"
#include "polardim/rng.hpp"

namespace polardim {

namespace {

// y = A x over the CSR pattern (all stored values are 1).
void apply(const SparseAdjacency& a, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
  const auto n = static_cast<NodeIndex>(a.n_nodes());
  for (NodeIndex u = 0; u < n; ++u) {
    double acc = 0.0;
    for (NodeIndex v : a.neighbors(u)) acc += x[v];
    y[u] = acc;
  }
}

// y = A^T x.
void apply_transpose(const SparseAdjacency& a, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
  y.setZero();
  const auto n = static_cast<NodeIndex>(a.n_nodes());
  for (NodeIndex u = 0; u < n; ++u) {
    const double xu = x[u];
    if (xu == 0.0) continue;
    for (NodeIndex v : a.neighbors(u)) y[v] += xu;
  }
}

// Two passes of classical Gram-Schmidt against the first `cols` columns
// of basis ("twice is enough" full reorthogonalisation).
void reorthogonalize(const Eigen::MatrixXd& basis, std::size_t cols, Eigen::VectorXd& w) {
  if (cols == 0) return;
  const auto b = basis.leftCols(static_cast<Eigen::Index>(cols));
  for (int pass = 0; pass < 2; ++pass) {
    w.noalias() -= b * (b.transpose() * w);
  }
}

Eigen::VectorXd random_unit_vector(std::mt19937_64& rng, Eigen::Index n) {
  Eigen::VectorXd v(n);
  // Box-Muller instead of std::normal_distribution: the latter is
  // implementation-defined, and the start vector must be reproducible
  // across standard libraries.
  for (Eigen::Index i = 0; i < n; i += 2) {
    const double r = std::sqrt(-2.0 * std::log1p(-uniform01(rng)));
    const double t = 2.0 * M_PI * uniform01(rng);
    v[i] = r * std::cos(t);
    if (i + 1 < n) v[i + 1] = r * std::sin(t);
  }
  v.normalize();
  return v;
}

// Fresh unit vector orthogonal to the first `cols` columns of basis.
// Callers guarantee cols < n, so a new direction always exists.
Eigen::VectorXd random_orthonormal(std::mt19937_64& rng, const Eigen::MatrixXd& basis,
                                   std::size_t cols) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Eigen::VectorXd v = random_unit_vector(rng, basis.rows());
    reorthogonalize(basis, cols, v);
    const double norm = v.norm();
    if (norm > 1e-6) return v / norm;
  }
  throw NumericalError("failed to draw a restart vector orthogonal to the Krylov basis");
}

struct GklOutput {
  std::vector<double> values;  // length min(k, n), descending, zero-padded
  Eigen::MatrixXd left;        // n x K when vectors requested
  Eigen::MatrixXd right;
  bool converged = false;
};

GklOutput golub_kahan(const SparseAdjacency& a, std::size_t k, const SvdOptions& opt,
                      bool want_vectors) {
  if (k == 0) throw ParameterError("number of singular values k must be at least 1");
  const std::size_t n = a.n_nodes();
  const std::size_t K = std::min(k, n);
  const auto ni = static_cast<Eigen::Index>(n);

  GklOutput out;
  if (a.entry_count() == 0) {
    // Zero matrix: all singular values are exactly zero and any
    // orthonormal set works for the factors.
    out.values.assign(K, 0.0);
    out.converged = true;
    if (want_vectors) {
      out.left = Eigen::MatrixXd::Identity(ni, static_cast<Eigen::Index>(K));
      out.right = Eigen::MatrixXd::Identity(ni, static_cast<Eigen::Index>(K));
    }
    return out;
  }

  const std::size_t cap =
      opt.max_subspace == 0 ? n : std::min(n, std::max(opt.max_subspace, K));
  std::size_t checkpoint = std::min(cap, std::max(2 * K + 16, std::size_t{32}));

  std::mt19937_64 rng(opt.seed);
  // One spare column: iteration i writes U.col(i) and V.col(i+1).
  Eigen::MatrixXd U(ni, static_cast<Eigen::Index>(checkpoint + 1));
  Eigen::MatrixXd V(ni, static_cast<Eigen::Index>(checkpoint + 1));
  std::vector<double> alpha(cap, 0.0), beta(cap, 0.0);
  Eigen::VectorXd w(ni), g(ni);

  V.col(0) = random_unit_vector(rng, ni);

  Eigen::BDCSVD<Eigen::MatrixXd> bsvd;
  double scale = 0.0;  // running max of the recurrence coefficients ~ sigma_1
  std::size_t m = 0;
  bool converged = false;

  for (std::size_t i = 0; i < cap; ++i) {
    apply(a, V.col(i), w);
    if (i > 0) w.noalias() -= beta[i - 1] * U.col(static_cast<Eigen::Index>(i - 1));
    reorthogonalize(U, i, w);
    alpha[i] = w.norm();
    const double breakdown = scale * 64.0 * std::numeric_limits<double>::epsilon();
    if (alpha[i] > breakdown) {
      U.col(static_cast<Eigen::Index>(i)) = w / alpha[i];
    } else {
      // A maps v_i into the span of the computed left basis: deflate and
      // continue in the orthogonal complement.
      alpha[i] = 0.0;
      U.col(static_cast<Eigen::Index>(i)) = random_orthonormal(rng, U, i);
    }
    scale = std::max(scale, alpha[i]);

    apply_transpose(a, U.col(static_cast<Eigen::Index>(i)), g);
    g.noalias() -= alpha[i] * V.col(static_cast<Eigen::Index>(i));
    reorthogonalize(V, i + 1, g);
    beta[i] = g.norm();
    scale = std::max(scale, beta[i]);
    m = i + 1;

    if (m == checkpoint || m == cap) {
      // B is upper bidiagonal: alpha on the diagonal, beta above it;
      // beta[m-1] couples the factorisation to the next Krylov vector
      // and bounds every Ritz residual.
      const auto mi = static_cast<Eigen::Index>(m);
      Eigen::MatrixXd B = Eigen::MatrixXd::Zero(mi, mi);
      for (std::size_t j = 0; j < m; ++j) {
        B(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = alpha[j];
        if (j + 1 < m) B(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j + 1)) = beta[j];
      }
      unsigned flags = Eigen::ComputeThinU | (want_vectors ? Eigen::ComputeThinV : 0u);
      bsvd.compute(B, flags);

      const auto& s = bsvd.singularValues();
      const double s_max = s(0);
      bool all_small = true;
      const std::size_t checked = std::min(K, m);
      for (std::size_t j = 0; j < checked && all_small; ++j) {
        const double residual = beta[m - 1] * std::abs(bsvd.matrixU()(mi - 1, static_cast<Eigen::Index>(j)));
        all_small = residual <= opt.tolerance * s_max;
      }
      converged = all_small || s_max == 0.0 || m == n;
      if (converged || m == cap) break;
      checkpoint = std::min(cap, (m * 8) / 5);
      U.conservativeResize(Eigen::NoChange, static_cast<Eigen::Index>(checkpoint + 1));
      V.conservativeResize(Eigen::NoChange, static_cast<Eigen::Index>(checkpoint + 1));
    }

    const double breakdown_v = scale * 64.0 * std::numeric_limits<double>::epsilon();
    if (beta[i] > breakdown_v) {
      V.col(static_cast<Eigen::Index>(i + 1)) = g / beta[i];
    } else {
      beta[i] = 0.0;
      V.col(static_cast<Eigen::Index>(i + 1)) = random_orthonormal(rng, V, i + 1);
    }
  }

  const auto& s = bsvd.singularValues();
  out.values.assign(K, 0.0);
  const std::size_t have = std::min(K, m);
  for (std::size_t j = 0; j < have; ++j) out.values[j] = s(static_cast<Eigen::Index>(j));
  out.converged = converged;
  if (want_vectors) {
    const auto Ki = static_cast<Eigen::Index>(K);
    const auto mi = static_cast<Eigen::Index>(m);
    out.left.noalias() = U.leftCols(mi) * bsvd.matrixU().leftCols(Ki);
    out.right.noalias() = V.leftCols(mi) * bsvd.matrixV().leftCols(Ki);
  }
  return out;
}

}  // namespace

SingularSpectrum truncated_svd(const SparseAdjacency& a, std::size_t k,
                               const SvdOptions& options) {
  GklOutput got = golub_kahan(a, k, options, /*want_vectors=*/false);
  SingularSpectrum spectrum;
  spectrum.values = std::move(got.values);
  spectrum.k_requested = k;
  spectrum.n_nodes = a.n_nodes();
  spectrum.converged = got.converged;
  return spectrum;
}

SvdFactors svd_factors(const SparseAdjacency& a, std::size_t k, const SvdOptions& options) {
  GklOutput got = golub_kahan(a, k, options, /*want_vectors=*/true);
  SvdFactors f;
  f.left = std::move(got.left);
  f.values = std::move(got.values);
  f.right = std::move(got.right);
  f.converged = got.converged;
  return f;
}

}  // namespace polardim
