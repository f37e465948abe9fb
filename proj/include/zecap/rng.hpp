#pragma once

#include "zecap/linalg.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

namespace zecap {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Derives the seed for an independent stream (e.g. a search restart) from the
/// master seed. Restart results must not depend on execution order, so each
/// stream is keyed by its index alone.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t state = master ^ (0xD1B54A32D192ED03ULL * (stream + 1));
  return detail::splitmix64(state);
}

/// Self-contained generator. The standard library's distributions are
/// implementation-defined, which would break byte-identical reports, so the
/// uniform and normal transforms are spelled out here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return detail::splitmix64(state_); }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  /// Complex standard normal with E|z|^2 = 1.
  Complex normal_complex() {
    const double re = normal();
    const double im = normal();
    return Complex(re, im) / std::sqrt(2.0);
  }

  Vec gaussian_vector(Index d) {
    Vec v(d);
    for (Index i = 0; i < d; ++i) {
      v(i) = normal_complex();
    }
    return v;
  }

  Vec unit_vector(Index d) {
    Vec v = gaussian_vector(d);
    double n = v.norm();
    while (n < 1e-12) {
      v = gaussian_vector(d);
      n = v.norm();
    }
    return v / n;
  }

  Mat gaussian_matrix(Index rows, Index cols) {
    Mat m(rows, cols);
    for (Index j = 0; j < cols; ++j) {
      for (Index i = 0; i < rows; ++i) {
        m(i, j) = normal_complex();
      }
    }
    return m;
  }

  /// Haar-distributed unitary: QR of a Ginibre matrix with the R-diagonal
  /// phases folded back in.
  Mat random_unitary(Index d) {
    const Mat g = gaussian_matrix(d, d);
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < d; ++j) {
      const Complex rjj = r(j, j);
      const double a = std::abs(rjj);
      q.col(j) *= (a > 1e-300) ? rjj / a : Complex(1.0);
    }
    return q;
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace zecap
