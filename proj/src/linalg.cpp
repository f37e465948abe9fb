#include "zecap/linalg.hpp"

#include <Eigen/SVD>

#include <algorithm>

namespace zecap {

void Tolerances::check() const {
  if (!(orth > 0.0) || !(rank > 0.0) || !(converge > 0.0)) {
    throw ParameterError("tolerances must be strictly positive");
  }
  if (converge > orth) {
    throw ParameterError("tol_converge must not exceed tol_orth");
  }
}

Complex hs_inner(const Mat& m, const Mat& n) {
  if (m.rows() != n.rows() || m.cols() != n.cols()) {
    throw DimensionError("hs_inner: shape mismatch");
  }
  return (m.adjoint() * n).trace();
}

double hs_norm(const Mat& m) { return m.norm(); }

Vec vectorize(const Mat& m) {
  return Eigen::Map<const Vec>(m.data(), m.size());
}

Mat unvectorize(const Vec& v, Index rows, Index cols) {
  if (v.size() != rows * cols) {
    throw DimensionError("unvectorize: length does not match shape");
  }
  return Eigen::Map<const Mat>(v.data(), rows, cols);
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Mat identity(Index d) { return Mat::Identity(d, d); }

const std::array<Mat, 4>& paulis() {
  static const std::array<Mat, 4> ops = [] {
    std::array<Mat, 4> p;
    p[0] = Mat::Identity(2, 2);
    p[1] = Mat{{Complex(0), Complex(1)}, {Complex(1), Complex(0)}};
    p[2] = Mat{{Complex(0), Complex(0, -1)}, {Complex(0, 1), Complex(0)}};
    p[3] = Mat{{Complex(1), Complex(0)}, {Complex(0), Complex(-1)}};
    return p;
  }();
  return ops;
}

OperatorSubspace OperatorSubspace::zero(Index rows, Index cols) {
  return OperatorSubspace{rows, cols, {}};
}

OperatorSubspace OperatorSubspace::full(Index rows, Index cols) {
  OperatorSubspace s{rows, cols, {}};
  s.basis.reserve(static_cast<std::size_t>(rows * cols));
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      Mat unit = Mat::Zero(rows, cols);
      unit(i, j) = 1.0;
      s.basis.push_back(std::move(unit));
    }
  }
  return s;
}

OperatorSubspace orthonormalize_span(std::span<const Mat> mats, const Tolerances& tol) {
  if (mats.empty()) {
    return OperatorSubspace::zero(0, 0);
  }
  return orthonormalize_span(mats, mats[0].rows(), mats[0].cols(), tol);
}

OperatorSubspace orthonormalize_span(std::span<const Mat> mats, Index rows, Index cols,
                                     const Tolerances& tol) {
  tol.check();
  for (const Mat& m : mats) {
    if (m.rows() != rows || m.cols() != cols) {
      throw DimensionError("orthonormalize_span: shapes differ");
    }
    if (!m.allFinite()) {
      throw ParameterError("orthonormalize_span: non-finite entry");
    }
  }
  OperatorSubspace out{rows, cols, {}};
  if (mats.empty() || rows * cols == 0) {
    return out;
  }

  Mat stacked(rows * cols, static_cast<Index>(mats.size()));
  for (Index k = 0; k < stacked.cols(); ++k) {
    stacked.col(k) = vectorize(mats[static_cast<std::size_t>(k)]);
  }
  Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) {
    return out;
  }
  Index r = 0;
  while (r < sv.size() && sv(r) > tol.rank * sv(0)) {
    ++r;
  }
  out.basis.reserve(static_cast<std::size_t>(r));
  for (Index k = 0; k < r; ++k) {
    out.basis.push_back(unvectorize(svd.matrixU().col(k), rows, cols));
  }
  return out;
}

OperatorSubspace complement(const OperatorSubspace& s) {
  const Index n = s.ambient_dimension();
  if (s.dimension() == 0) {
    return OperatorSubspace::full(s.rows, s.cols);
  }
  Mat stacked(n, s.dimension());
  for (Index k = 0; k < s.dimension(); ++k) {
    stacked.col(k) = vectorize(s.basis[static_cast<std::size_t>(k)]);
  }
  Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeFullU);
  OperatorSubspace out{s.rows, s.cols, {}};
  out.basis.reserve(static_cast<std::size_t>(n - s.dimension()));
  for (Index k = s.dimension(); k < n; ++k) {
    out.basis.push_back(unvectorize(svd.matrixU().col(k), s.rows, s.cols));
  }
  return out;
}

Projection project(const OperatorSubspace& s, const Mat& m) {
  if (m.rows() != s.rows || m.cols() != s.cols) {
    throw DimensionError("project: shape mismatch");
  }
  Mat proj = Mat::Zero(s.rows, s.cols);
  for (const Mat& b : s.basis) {
    proj += hs_inner(b, m) * b;
  }
  const double residual = (m - proj).norm();
  return Projection{std::move(proj), residual};
}

bool contains(const OperatorSubspace& s, const Mat& m, const Tolerances& tol) {
  const Projection p = project(s, m);
  return p.residual <= tol.orth * std::max(1.0, m.norm());
}

bool orthogonal_to(const OperatorSubspace& s, const Mat& m, const Tolerances& tol) {
  const Projection p = project(s, m);
  return p.projection.norm() <= tol.orth * m.norm();
}

Mat subspace_projector(const OperatorSubspace& s) {
  const Index n = s.ambient_dimension();
  Mat p = Mat::Zero(n, n);
  for (const Mat& b : s.basis) {
    const Vec v = vectorize(b);
    p += v * v.adjoint();
  }
  return p;
}

double projector_distance(const OperatorSubspace& a, const OperatorSubspace& b) {
  if (a.rows != b.rows || a.cols != b.cols) {
    throw DimensionError("projector_distance: ambient shapes differ");
  }
  return (subspace_projector(a) - subspace_projector(b)).norm();
}

void canonicalize_phase(Vec& v) {
  for (Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > 1e-12) {
      v *= std::conj(v(i)) / a;
      return;
    }
  }
}

}  // namespace zecap
