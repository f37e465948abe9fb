#pragma once

#include "zecap/graph.hpp"
#include "zecap/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zecap {

/// A channel L(C^dim_in) -> L(C^dim_out) given by Kraus operators E_i
/// (each dim_out x dim_in) with sum E_i† E_i = I.
struct KrausChannel {
  Index dim_in = 0;
  Index dim_out = 0;
  std::vector<Mat> kraus;
};

struct ChannelValidation {
  bool ok = false;
  double defect_norm = 0.0;  // ||sum E†E - I||_HS
  Mat completeness;          // sum E†E
};

/// Trace-preservation check: ok iff ||sum E_i† E_i - I|| <= tol.orth.
ChannelValidation validate_channel(const KrausChannel& ch, const Tolerances& tol = {});

/// The noncommutative graph span{E_j† E_k} on the input space. Completeness of
/// the channel guarantees †-closure and identity membership.
NoncommutativeGraph graph_of_channel(const KrausChannel& ch, const Tolerances& tol = {},
                                     bool require_valid = true);

// ---- Built-in channel constructions ----------------------------------------

/// Weyl dephasing channel on C^d: rho -> (1/d) sum_k Z_k rho Z_k† with
/// Z_k = sum_j w^{jk} |j><j|. The 1/d mixture weight is folded into the Kraus
/// normalization 1/sqrt(d). Graph: the diagonal algebra.
KrausChannel weyl_channel(Index d);

/// Equal mixture of a dephasing and a bit-flip qubit channel, with the branch
/// recorded in a flag qubit. Graph: span{I, Z, X}.
KrausChannel dephasing_bitflip();

/// Qubit depolarizing channel rho -> (1-p) rho + p I/2, 0 < p <= 4/3.
/// Graph: all of L(C^2).
KrausChannel depolarizing(double p);

/// Channel on C^2 ⊕ C^2 whose graph is (C·I)_AA + L(B) + L(B,A) + L(A,B).
/// The raw variant keeps the natural coefficient choice, which fails trace
/// preservation (sum E†E = diag(2,2,1,1)); the default rescales the two
/// A-branch operators by 1/sqrt(2), which fixes completeness and leaves the
/// graph unchanged.
KrausChannel c2c2_sum_channel();
KrausChannel c2c2_sum_channel_raw();

/// Channel on C^4 ⊕ C^2 (into C^8) whose graph is
/// L(C^4)_AA + span{I,X,Z}_BB + U + U† with dim(U) = 4. Block-domain Kraus
/// operators are zero-padded to the full 6-dimensional domain.
KrausChannel c4c2_sum_channel();

/// Lookup by name: weyl (param d), dephasing-bitflip, depolarizing (param p),
/// c2c2-sum, c2c2-sum-raw, c4c2-sum.
KrausChannel zoo(const std::string& name, std::optional<double> param = std::nullopt);

std::vector<std::string> zoo_names();

}  // namespace zecap
