#pragma once

#include "zecap/graph.hpp"
#include "zecap/rankone.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zecap {

/// Unit vectors whose pairwise outer products are HS-orthogonal to a graph;
/// a witness that alpha >= vectors.size().
struct CodewordSet {
  Index dim = 0;
  std::vector<Vec> vectors;
  double residual = 0.0;  // max orthogonality violation over pairs

  Index size() const { return static_cast<Index>(vectors.size()); }
};

struct CodewordCheck {
  bool ok = false;
  double residual = 0.0;
  std::optional<std::pair<Index, Index>> violation;  // first offending pair
};

/// ok iff ||P_S(|psi_s><psi_t|)|| <= tol.orth for all s != t and every vector
/// is unit norm. Since I is in S, a passing set is automatically orthonormal.
CodewordCheck verify_codewords(const NoncommutativeGraph& s, const CodewordSet& cs,
                               const Tolerances& tol = {});

/// Pair-count bound: the m(m-1) operators |psi_s><psi_t| (s != t) of a valid
/// codeword set are orthonormal inside S-perp, so m(m-1) <= dim(S-perp); the
/// ambient dimension caps m as well.
int alpha_upper_bound(const NoncommutativeGraph& s);

struct LowerSearchResult {
  std::optional<CodewordSet> found;
  double best_residual = 0.0;  // best objective over restarts when not found
};

/// Multi-start cyclic eigenvector search for target_m codewords. Failure is
/// reported with the best residual and never claims impossibility.
LowerSearchResult alpha_lower_search(const NoncommutativeGraph& s, int target_m,
                                     const SearchOptions& opts = {});

/// All Kronecker products psi_i ⊗ phi_j; a witness on the tensor graph.
CodewordSet product_codewords(const CodewordSet& a, const CodewordSet& b);

/// Given codewords on span{I,Z,X} ⊗ T (ambient 2n), writes each vector as
/// |0>|v_i> + |1>|w_i> and keeps the nonzero first component (v_i, else w_i),
/// normalized. The result is a same-size codeword set for T itself. Throws if
/// the input set does not verify against span{I,Z,X} ⊗ T.
CodewordSet compress_qubit_codewords(const NoncommutativeGraph& t, const CodewordSet& cs,
                                     const Tolerances& tol = {});

struct AlphaResult {
  int lower = 1;
  int upper = 0;
  std::optional<int> exact;
  std::vector<std::string> method;  // rules applied, in order
  std::optional<CodewordSet> witness;
  /// For block graphs: the A-side and B-side vectors of the split witness.
  std::optional<std::pair<CodewordSet, CodewordSet>> split_witness;
};

/// Independence number of a block graph via its split characterization: alpha
/// is the maximum size of {v_i in A} ∪ {w_s in B} with the v's a codeword set
/// for blockA, the w's one for blockB, and every cross product |v><w|
/// orthogonal to the off block. Shortcut rules: no rank-one in off-perp gives
/// max(alpha_A, alpha_B) exactly; an empty off block gives alpha_A + alpha_B.
AlphaResult block_alpha(const BlockGraph& bg, const SearchOptions& opts = {});

enum class AlphaDispatch {
  Full,    // all structure rules, then bound/search
  Generic  // pair-count bound, complement rank-one test, and search only
};

/// Computes alpha with exactness tracking. Rules in order: full algebra; qubit
/// classification; diagonal algebra; the alpha = 1 tests (pair bound, rank-one
/// in the complement); block decomposition; downward search from the upper
/// bound. `exact` is set only when a theorem rule fires or the witnessed lower
/// bound meets a proven upper bound -- never from search failure.
AlphaResult alpha_exact(const NoncommutativeGraph& s, const SearchOptions& opts = {},
                        AlphaDispatch dispatch = AlphaDispatch::Full);

}  // namespace zecap
