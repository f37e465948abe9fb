#pragma once

#include "zecap/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zecap {

/// An operator subspace S <= L(C^dim) with S† = S and I in S. The confusability
/// object of a channel: two input states are confusable iff their outer product
/// fails to be HS-orthogonal to S.
struct NoncommutativeGraph {
  Index dim = 0;
  OperatorSubspace subspace;

  Index subspace_dimension() const { return subspace.dimension(); }
};

struct GraphCheck {
  bool ok = false;
  std::vector<std::string> defects;
};

/// Checks †-closure and identity membership of a square operator subspace.
GraphCheck is_ncgraph(const OperatorSubspace& s, const Tolerances& tol = {});

/// Orthonormalizes the span and validates the graph axioms.
NoncommutativeGraph make_graph(std::span<const Mat> span_mats, const Tolerances& tol = {});

/// Graph of unchecked, already-orthonormal basis (internal fast path).
NoncommutativeGraph graph_from_subspace(OperatorSubspace s);

/// S ⊗ T: span of all Kronecker products of basis pairs. Subspace dimensions
/// multiply.
NoncommutativeGraph tensor_graphs(const NoncommutativeGraph& s, const NoncommutativeGraph& t,
                                  const Tolerances& tol = {});

/// Sigma = blockA + blockB + off + off† on A ⊕ B, where blockA and blockB are
/// graphs on the diagonal blocks and off is a subspace of dimA x dimB matrices
/// (operators mapping B into A).
struct BlockGraph {
  Index dimA = 0;
  Index dimB = 0;
  NoncommutativeGraph blockA;
  NoncommutativeGraph blockB;
  OperatorSubspace off;
};

/// Embeds the three parts (plus the adjoint of the off block) into L(A ⊕ B).
/// The assembled dimension is dim(blockA) + dim(blockB) + 2 dim(off).
NoncommutativeGraph assemble_block(const BlockGraph& bg, const Tolerances& tol = {});

/// Splits a graph on C^d along C^dimA ⊕ C^(d-dimA). Succeeds iff the graph is
/// closed under block projection, i.e. the four block spans reassemble to the
/// original subspace projector. Returns nullopt otherwise.
std::optional<BlockGraph> decompose_block(const NoncommutativeGraph& s, Index dimA,
                                          const Tolerances& tol = {});

struct DiagonalDetection {
  bool found = false;
  /// When found, conjugation B -> W† B W makes every basis element diagonal;
  /// the columns of W are the shared eigenbasis.
  Mat unitary;
};

/// Detects whether S is a maximal commutative *-algebra, i.e. unitarily
/// equivalent to span{|t><t| : t = 0..d-1}. Requires dim(S) == d, a commuting
/// basis, and a verified simultaneous diagonalization.
DiagonalDetection detect_diagonal_algebra(const NoncommutativeGraph& s, const Tolerances& tol = {});

enum class QubitClass { Identity, Diagonal, ThreeDim, Full };

const char* to_string(QubitClass c);

struct QubitClassification {
  QubitClass cls;
  int alpha;          // 2, 2, 1, 1
  double c0_oneshot;  // log2(alpha): 1, 1, 0, 0
};

/// Every graph on C^2 is unitarily equivalent to one of C·I, span{I,Z},
/// span{I,Z,X}, or L(C^2); the class is determined by the subspace dimension
/// alone.
QubitClassification classify_qubit_graph(const NoncommutativeGraph& s, const Tolerances& tol = {});

NoncommutativeGraph canonical_qubit_graph(QubitClass cls, const Tolerances& tol = {});

/// Conjugated graph span{U B U† : B in S}.
NoncommutativeGraph conjugate_graph(const NoncommutativeGraph& s, const Mat& u,
                                    const Tolerances& tol = {});

}  // namespace zecap
