#pragma once

#include "zecap/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace zecap {

/// Knobs for the multi-start alternating searches. Restarts are independent
/// streams keyed by mix_seed(seed, restart); results merge by minimal residual
/// with ties broken by the lowest restart index, so the outcome does not
/// depend on execution order.
struct SearchOptions {
  int restarts = 64;
  int max_iter = 500;
  std::uint64_t seed = 0x5EED;
  Tolerances tol{};

  void check() const;
};

enum class RankOneStatus {
  FoundWitness,            // v w† in U within tol.orth, witness attached
  ProvenAbsent,            // U provably has no rank-one element
  ProvenPresentNoWitness,  // existence proven (dimension bound) but search failed
  NotFoundHeuristic        // search exhausted; absence NOT established
};

const char* to_string(RankOneStatus s);

struct RankOneVerdict {
  RankOneStatus status = RankOneStatus::NotFoundHeuristic;
  /// (v, w) with v in the row space, w in the column space, both unit norm.
  std::optional<std::pair<Vec, Vec>> witness;
  std::optional<double> residual;  // ||(I - P_U)(v w†)|| for the best attempt
  std::optional<std::string> proof_rule;
};

enum class DimensionCriterion { GuaranteedPresent, Inconclusive };

/// A subspace W of rows x cols matrices with dim(W) > (rows-1)(cols-1) must
/// contain a rank-one operator (its complement is too small to avoid all
/// product vectors).
DimensionCriterion dimension_criterion(Index rows, Index cols, Index dim_sub);

/// Decides whether U contains a rank-one operator. Pipeline, first conclusive
/// rule wins: empty subspace; a rank-one basis element (exact both ways when
/// dim(U) = 1); the exact 2x2 determinant root; multi-start alternating
/// minimization of ||(I - P_U)(v w†)||^2; the dimension bound as a
/// witness-free existence proof. A NotFoundHeuristic outcome means "unknown",
/// never "absent".
RankOneVerdict find_rank_one(const OperatorSubspace& u, const SearchOptions& opts = {});

}  // namespace zecap
