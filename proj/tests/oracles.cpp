#include "oracles.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "qgestalt/similarity.hpp"

namespace oracles {

Matrix to_plain(const Eigen::MatrixXd& m) {
  Matrix out(m.rows(), std::vector<double>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = b.front().size();
  Matrix out(n, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = a[i][p];
      for (std::size_t j = 0; j < m; ++j) out[i][j] += aip * b[p][j];
    }
  }
  return out;
}

SymmetricEigen jacobi_eigen(Matrix a, int max_sweeps) {
  const std::size_t n = a.size();
  Matrix v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    }
    if (off < 1e-30) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t i = 0; i < n; ++i) {
          const double aip = a[i][p];
          const double aiq = a[i][q];
          a[i][p] = c * aip - s * aiq;
          a[i][q] = s * aip + c * aiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const double apj = a[p][j];
          const double aqj = a[q][j];
          a[p][j] = c * apj - s * aqj;
          a[q][j] = s * apj + c * aqj;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vip = v[i][p];
          const double viq = v[i][q];
          v[i][p] = c * vip - s * viq;
          v[i][q] = s * vip + c * viq;
        }
      }
    }
  }

  SymmetricEigen result;
  result.values.resize(n);
  result.vectors.assign(n, std::vector<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    result.values[k] = a[k][k];
    for (std::size_t i = 0; i < n; ++i) result.vectors[k][i] = v[i][k];
  }
  // Insertion sort ascending, vectors in lockstep.
  for (std::size_t i = 1; i < n; ++i) {
    double value = result.values[i];
    std::vector<double> vec = result.vectors[i];
    std::size_t j = i;
    while (j > 0 && result.values[j - 1] > value) {
      result.values[j] = result.values[j - 1];
      result.vectors[j] = result.vectors[j - 1];
      --j;
    }
    result.values[j] = value;
    result.vectors[j] = std::move(vec);
  }
  return result;
}

double min_eigenvalue(const Eigen::MatrixXd& symmetric) {
  return jacobi_eigen(to_plain(symmetric)).values.front();
}

Matrix psd_sqrt(const Eigen::MatrixXd& symmetric) {
  const std::size_t n = static_cast<std::size_t>(symmetric.rows());
  const SymmetricEigen eig = jacobi_eigen(to_plain(symmetric));
  Matrix out(n, std::vector<double>(n, 0.0));
  for (std::size_t k = 0; k < n; ++k) {
    double lambda = eig.values[k];
    if (lambda < -1e-10) {
      throw std::runtime_error("psd_sqrt oracle: eigenvalue " + std::to_string(lambda));
    }
    lambda = std::sqrt(std::max(lambda, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out[i][j] += lambda * eig.vectors[k][i] * eig.vectors[k][j];
      }
    }
  }
  return out;
}

double fidelity(const Eigen::MatrixXd& rho, const Eigen::MatrixXd& sigma) {
  const Matrix root = psd_sqrt(rho);
  const Matrix inner = matmul(matmul(root, to_plain(sigma)), root);
  const SymmetricEigen eig = jacobi_eigen(inner);
  // Eigenvalues at noise level below the spectral ceiling are true zeros;
  // square-rooting them would inflate the trace by sqrt(eps) apiece.
  const double ceiling = std::max(eig.values.back(), 0.0);
  const double cutoff = 1e-13 * ceiling;
  double trace_root = 0.0;
  for (double lambda : eig.values) {
    if (lambda > cutoff) trace_root += std::sqrt(lambda);
  }
  return trace_root * trace_root;
}

// The similarity relation: threshold met within the library-wide 1e-12
// boundary slack (part of the relation's definition, restated here).
static bool similar(double fidelity_value, double r) {
  return r <= fidelity_value + 1e-12;
}

qgestalt::ClassLabel classify_literal(const qgestalt::DensityOperator& sigma,
                                      const qgestalt::DensityOperator& rho_positive,
                                      const qgestalt::DensityOperator& rho_negative,
                                      double r_star) {
  const bool similar_positive = similar(qgestalt::fidelity(sigma, rho_positive), r_star);
  const bool similar_negative = similar(qgestalt::fidelity(sigma, rho_negative), r_star);
  if (similar_positive && !similar_negative) return qgestalt::ClassLabel::positive;
  if (similar_negative && !similar_positive) return qgestalt::ClassLabel::negative;
  return qgestalt::ClassLabel::indeterminate;
}

qgestalt::ClassLabel classify_theme_literal(const qgestalt::music::MusicalIdeaState& idea,
                                            const qgestalt::music::MusicalCentroids& c,
                                            qgestalt::music::SimilarityMode mode,
                                            double r_star) {
  using qgestalt::music::SimilarityMode;
  const auto side = [&](const qgestalt::DensityOperator& mel,
                        const qgestalt::DensityOperator& rhy) {
    const bool m = similar(qgestalt::fidelity(qgestalt::projector(idea.melodic), mel), r_star);
    const bool r = similar(qgestalt::fidelity(qgestalt::projector(idea.rhythmic), rhy), r_star);
    switch (mode) {
      case SimilarityMode::melodic: return m;
      case SimilarityMode::rhythmic: return r;
      case SimilarityMode::strong: return m && r;
      case SimilarityMode::weak: return m || r;
    }
    throw std::runtime_error("unreachable mode");
  };
  const bool similar_positive = side(c.melodic_positive(), c.rhythmic_positive());
  const bool similar_negative = side(c.melodic_negative(), c.rhythmic_negative());
  if (similar_positive && !similar_negative) return qgestalt::ClassLabel::positive;
  if (similar_negative && !similar_positive) return qgestalt::ClassLabel::negative;
  return qgestalt::ClassLabel::indeterminate;
}

std::vector<double> mean_oracle(const std::vector<qgestalt::FeatureVector>& points) {
  const std::size_t d = static_cast<std::size_t>(points.front().dimension());
  std::vector<double> mean(d, 0.0);
  for (std::size_t k = 0; k < d; ++k) {
    long double sum = 0.0L;
    for (const auto& p : points) sum += p[static_cast<Eigen::Index>(k)];
    mean[k] = static_cast<double>(sum / static_cast<long double>(points.size()));
  }
  return mean;
}

}  // namespace oracles
