#include "zecap/rankone.hpp"

#include "zecap/rng.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace zecap {

void SearchOptions::check() const {
  if (restarts <= 0 || max_iter <= 0) {
    throw ParameterError("search options: restarts and max_iter must be positive");
  }
  tol.check();
}

const char* to_string(RankOneStatus s) {
  switch (s) {
    case RankOneStatus::FoundWitness:
      return "FoundWitness";
    case RankOneStatus::ProvenAbsent:
      return "ProvenAbsent";
    case RankOneStatus::ProvenPresentNoWitness:
      return "ProvenPresentNoWitness";
    case RankOneStatus::NotFoundHeuristic:
      return "NotFoundHeuristic";
  }
  return "?";
}

DimensionCriterion dimension_criterion(Index rows, Index cols, Index dim_sub) {
  if (dim_sub < 0 || dim_sub > rows * cols) {
    throw ParameterError("dimension_criterion: dim_sub out of range");
  }
  return dim_sub > (rows - 1) * (cols - 1) ? DimensionCriterion::GuaranteedPresent
                                           : DimensionCriterion::Inconclusive;
}

namespace {

double witness_residual(const OperatorSubspace& u, const Vec& v, const Vec& w) {
  return project(u, v * w.adjoint()).residual;
}

struct SearchAttempt {
  Vec v, w;
  double residual = std::numeric_limits<double>::infinity();
};

// One restart of the alternating minimization of ||(I - P_U)(v w†)||^2 over
// unit v, w. Fixing one side the objective is a Hermitian form on the other;
// the update is its extremal eigenvector (Eigen orders eigenvalues ascending,
// so degenerate optima resolve deterministically to a fixed column). Progress
// is measured on the exact residual: the eigenvalue route 1 - f cancels
// catastrophically near convergence.
SearchAttempt alternate_once(const OperatorSubspace& u, Vec v, Vec w, const SearchOptions& opts) {
  const auto& basis = u.basis;
  double res_prev = std::numeric_limits<double>::infinity();
  double res = witness_residual(u, v, w);
  int flat = 0;
  for (int it = 0; it < opts.max_iter; ++it) {
    Mat mv = Mat::Zero(u.rows, u.rows);
    for (const Mat& b : basis) {
      const Vec bw = b * w;
      mv += bw * bw.adjoint();
    }
    Eigen::SelfAdjointEigenSolver<Mat> esv(mv);
    v = esv.eigenvectors().col(u.rows - 1);

    Mat mw = Mat::Zero(u.cols, u.cols);
    for (const Mat& b : basis) {
      const Vec bv = b.adjoint() * v;
      mw += bv * bv.adjoint();
    }
    Eigen::SelfAdjointEigenSolver<Mat> esw(mw);
    w = esw.eigenvectors().col(u.cols - 1);

    res = witness_residual(u, v, w);
    if (res <= 0.01 * opts.tol.orth) {
      break;  // well past every acceptance threshold
    }
    // Flat sweeps come in runs near degenerate optima; only a sustained run
    // counts as a stall.
    flat = (res_prev - res <= opts.tol.converge * std::max(res, 1e-12)) ? flat + 1 : 0;
    if (flat >= 8) {
      break;
    }
    res_prev = res;
  }
  return SearchAttempt{v, w, res};
}

SearchAttempt multi_start_search(const OperatorSubspace& u, const SearchOptions& opts) {
  SearchAttempt best;
  for (int r = 0; r < opts.restarts; ++r) {
    Rng rng(mix_seed(opts.seed, static_cast<std::uint64_t>(r)));
    Vec v0, w0;
    if (r == 0) {
      // Leading singular pair of a random combination of the basis.
      Mat combo = Mat::Zero(u.rows, u.cols);
      for (const Mat& b : u.basis) {
        combo += rng.normal_complex() * b;
      }
      Eigen::JacobiSVD<Mat> svd(combo, Eigen::ComputeThinU | Eigen::ComputeThinV);
      v0 = svd.matrixU().col(0);
      w0 = svd.matrixV().col(0);
    } else {
      v0 = rng.unit_vector(u.rows);
      w0 = rng.unit_vector(u.cols);
    }
    SearchAttempt attempt = alternate_once(u, std::move(v0), std::move(w0), opts);
    if (attempt.residual < best.residual) {
      best = std::move(attempt);
    }
    if (best.residual <= 0.01 * opts.tol.orth) {
      break;  // decisively converged; later restarts cannot change the status
    }
  }
  return best;
}

RankOneVerdict found(const OperatorSubspace& u, Vec v, Vec w, const std::string& rule) {
  canonicalize_phase(v);
  canonicalize_phase(w);
  const double res = witness_residual(u, v, w);
  RankOneVerdict out;
  out.status = RankOneStatus::FoundWitness;
  out.witness = std::make_pair(std::move(v), std::move(w));
  out.residual = res;
  out.proof_rule = rule;
  return out;
}

}  // namespace

RankOneVerdict find_rank_one(const OperatorSubspace& u, const SearchOptions& opts) {
  opts.check();
  const Tolerances& tol = opts.tol;

  if (u.dimension() == 0) {
    return RankOneVerdict{RankOneStatus::ProvenAbsent, std::nullopt, std::nullopt,
                          "empty-subspace"};
  }

  // A rank-one basis element is a witness outright.
  for (const Mat& b : u.basis) {
    Eigen::JacobiSVD<Mat> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv.size() == 1 || sv(1) <= tol.rank * sv(0)) {
      return found(u, svd.matrixU().col(0), svd.matrixV().col(0), "basis-rank-one");
    }
  }
  // For a one-dimensional subspace the basis check is exact in both directions.
  if (u.dimension() == 1) {
    return RankOneVerdict{RankOneStatus::ProvenAbsent, std::nullopt, std::nullopt,
                          "single-generator-rank"};
  }

  // 2x2, dim >= 2: det(t B0 + B1) is a quadratic with a projective root, which
  // pins a rank-one combination in closed form.
  if (u.rows == 2 && u.cols == 2) {
    const Mat& b0 = u.basis[0];
    const Mat& b1 = u.basis[1];
    const Complex det0 = b0.determinant();
    const Complex det1 = b1.determinant();
    const Complex cross = (b0 + b1).determinant() - det0 - det1;
    Mat combo;
    if (std::abs(det0) <= 1e-14) {
      combo = b0;
    } else {
      const Complex disc = std::sqrt(cross * cross - 4.0 * det0 * det1);
      const Complex t = (-cross + disc) / (2.0 * det0);
      combo = t * b0 + b1;
    }
    Eigen::JacobiSVD<Mat> svd(combo, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return found(u, svd.matrixU().col(0), svd.matrixV().col(0), "det-2x2");
  }

  const SearchAttempt best = multi_start_search(u, opts);
  if (best.residual <= tol.orth) {
    return found(u, best.v, best.w, "alternating-search");
  }

  RankOneVerdict out;
  out.residual = best.residual;
  if (dimension_criterion(u.rows, u.cols, u.dimension()) ==
      DimensionCriterion::GuaranteedPresent) {
    out.status = RankOneStatus::ProvenPresentNoWitness;
    out.proof_rule = "dimension-bound";
  } else {
    out.status = RankOneStatus::NotFoundHeuristic;
  }
  return out;
}

}  // namespace zecap
