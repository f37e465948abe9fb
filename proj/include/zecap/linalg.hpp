#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace zecap {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Index = Eigen::Index;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Numerical cutoffs shared by every operation in the library.
///   orth     — residual cutoff for orthogonality/membership decisions
///   rank     — relative singular-value cutoff (sigma_i <= rank * sigma_max is noise)
///   converge — stall detector for iterative searches
struct Tolerances {
  double orth = 1e-9;
  double rank = 1e-10;
  double converge = 1e-10;

  void check() const;
};

/// Hilbert-Schmidt inner product Tr(M† N). Conjugate-symmetric.
Complex hs_inner(const Mat& m, const Mat& n);

/// Frobenius norm, i.e. sqrt(hs_inner(M, M)).
double hs_norm(const Mat& m);

/// Column-stacked vectorization and its inverse.
Vec vectorize(const Mat& m);
Mat unvectorize(const Vec& v, Index rows, Index cols);

/// Kronecker product, row index ordering (i_a * b.rows() + i_b).
Mat kron(const Mat& a, const Mat& b);

Mat identity(Index d);

/// {I, X, Y, Z} on C^2.
const std::array<Mat, 4>& paulis();

/// A subspace of rows x cols complex matrices, stored as an HS-orthonormal basis.
struct OperatorSubspace {
  Index rows = 0;
  Index cols = 0;
  std::vector<Mat> basis;

  Index dimension() const { return static_cast<Index>(basis.size()); }
  Index ambient_dimension() const { return rows * cols; }

  static OperatorSubspace zero(Index rows, Index cols);
  /// The whole matrix space, with matrix units as the basis.
  static OperatorSubspace full(Index rows, Index cols);
};

/// HS-orthonormal basis of span(mats). Dimension is the numerical rank of the
/// stacked vectorizations under the relative cutoff tol.rank. An empty input
/// yields the zero-dimensional subspace.
OperatorSubspace orthonormalize_span(std::span<const Mat> mats, const Tolerances& tol = {});
OperatorSubspace orthonormalize_span(std::span<const Mat> mats, Index rows, Index cols,
                                     const Tolerances& tol = {});

/// Orthogonal complement within the ambient rows x cols matrix space.
OperatorSubspace complement(const OperatorSubspace& s);

struct Projection {
  Mat projection;
  double residual;  // ||M - projection||_HS
};

/// Orthogonal projection of M onto the subspace.
Projection project(const OperatorSubspace& s, const Mat& m);

/// Membership: residual small relative to max(1, ||M||).
bool contains(const OperatorSubspace& s, const Mat& m, const Tolerances& tol = {});

/// Orthogonality: ||P_S(M)|| <= tol.orth * ||M||.
bool orthogonal_to(const OperatorSubspace& s, const Mat& m, const Tolerances& tol = {});

/// The projector sum_k vec(B_k) vec(B_k)† acting on vectorized matrices.
Mat subspace_projector(const OperatorSubspace& s);

/// Frobenius distance between subspace projectors. The canonical equality test:
/// bases are non-unique, projectors are not.
double projector_distance(const OperatorSubspace& a, const OperatorSubspace& b);

/// Fixes the global phase so the first nonzero component is real positive.
void canonicalize_phase(Vec& v);

}  // namespace zecap
