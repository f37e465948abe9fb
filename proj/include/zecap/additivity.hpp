#pragma once

#include "zecap/graph.hpp"
#include "zecap/independence.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zecap {

enum class AdditivityVerdict { AdditiveBoth, AdditiveOneShot, Unknown };

enum class AdditivityRule {
  FullAlgebra,
  DiagonalAlgebra,
  QubitNontrivial,
  BlockRankOneCorollary,
  BlockSumRule,
  BlockFullOffDiag,
  DirectComputation,
  None
};

const char* to_string(AdditivityVerdict v);
const char* to_string(AdditivityRule r);

/// One checkable piece of evidence. `kind` and `target` identify what to
/// recompute during an audit; `value`/`detail` record the expected outcome.
struct Premise {
  std::string kind;    // e.g. "full-algebra", "alpha", "rank-one-in-off-perp"
  std::string target;  // "left", "right", "left.blockA", ...
  std::string detail;
  std::optional<double> value;
};

/// A machine-checkable additivity verdict. AdditiveBoth is only issued by
/// rules whose theorems cover the asymptotic capacity as well (full algebra,
/// diagonal algebra, nontrivial qubit graphs, the C·I⊗C·I computation).
struct AdditivityCertificate {
  AdditivityVerdict verdict = AdditivityVerdict::Unknown;
  AdditivityRule rule = AdditivityRule::None;
  std::vector<Premise> premises;
  bool universal = false;           // holds for ANY partner graph
  std::string fired_target;         // which operand the rule fired on
  std::optional<Index> block_dim_a; // split used by the block rules
  std::optional<int> alpha_left, alpha_right;
  std::optional<double> c0_oneshot_sum, c0_sum;
};

struct AnyGraph {};
inline constexpr AnyGraph any_graph{};

/// Applies the sufficient conditions, first to the left operand and then to
/// the right: full algebra, diagonal algebra, nontrivial qubit graph (each
/// universal), then the block-graph rules for the specific partner, then the
/// C·I⊗C·I direct computation. Unknown means no rule applied -- never that
/// additivity fails.
AdditivityCertificate check_additivity(const NoncommutativeGraph& left,
                                       const NoncommutativeGraph& right,
                                       const SearchOptions& opts = {});
AdditivityCertificate check_additivity(const NoncommutativeGraph& left, AnyGraph,
                                       const SearchOptions& opts = {});

/// Recomputes every premise of a certificate against the inputs. Returns false
/// if any piece of evidence fails to reproduce.
bool audit_certificate(const AdditivityCertificate& cert, const NoncommutativeGraph& left,
                       const NoncommutativeGraph* right, const SearchOptions& opts = {});

struct ProbeReport {
  int product_lower = 0;
  int tensor_lower = 0;
  int tensor_upper = 0;
  bool consistent = false;
  std::optional<int> certified_alpha;
  double max_residual = 0.0;
};

/// Numerical multiplicativity diagnostic: product codewords vs direct search
/// on the tensor graph vs the pair-count bound. Certificates are the proof
/// objects; this is a cross-check only.
ProbeReport numeric_multiplicativity_probe(const NoncommutativeGraph& s,
                                           const NoncommutativeGraph& t,
                                           const SearchOptions& opts = {},
                                           Index max_tensor_dim = 16);

}  // namespace zecap
