#include "zecap/additivity.hpp"

#include <cmath>

namespace zecap {

const char* to_string(AdditivityVerdict v) {
  switch (v) {
    case AdditivityVerdict::AdditiveBoth:
      return "AdditiveBoth";
    case AdditivityVerdict::AdditiveOneShot:
      return "AdditiveOneShot";
    case AdditivityVerdict::Unknown:
      return "Unknown";
  }
  return "?";
}

const char* to_string(AdditivityRule r) {
  switch (r) {
    case AdditivityRule::FullAlgebra:
      return "FullAlgebra";
    case AdditivityRule::DiagonalAlgebra:
      return "DiagonalAlgebra";
    case AdditivityRule::QubitNontrivial:
      return "QubitNontrivial";
    case AdditivityRule::BlockSumRule:
      return "BlockSumRule";
    case AdditivityRule::BlockFullOffDiag:
      return "BlockFullOffDiag";
    case AdditivityRule::BlockRankOneCorollary:
      return "BlockRankOneCorollary";
    case AdditivityRule::DirectComputation:
      return "DirectComputation";
    case AdditivityRule::None:
      return "None";
  }
  return "?";
}

namespace {

bool is_full_algebra(const NoncommutativeGraph& g) {
  return g.subspace.dimension() == g.dim * g.dim;
}

bool is_scalar_multiples_of_identity(const NoncommutativeGraph& g) {
  return g.subspace.dimension() == 1 && g.dim == 2;
}

bool rank_one_in_off_perp(const BlockGraph& bg, const SearchOptions& opts, std::string* how) {
  if (dimension_criterion(bg.off.rows, bg.off.cols,
                          bg.off.rows * bg.off.cols - bg.off.dimension()) ==
      DimensionCriterion::GuaranteedPresent) {
    *how = "dimension-bound";
    return true;
  }
  const RankOneVerdict v = find_rank_one(complement(bg.off), opts);
  if (v.status == RankOneStatus::FoundWitness) {
    *how = "witness";
    return true;
  }
  if (v.status == RankOneStatus::ProvenPresentNoWitness) {
    *how = v.proof_rule.value_or("proven");
    return true;
  }
  return false;
}

struct Operand {
  const NoncommutativeGraph* graph;
  std::string name;  // "left" or "right"
};

struct Partner {
  const NoncommutativeGraph* graph;  // nullptr = any
  std::string name;
};

AdditivityCertificate try_rules_on(const Operand& op, const Partner& partner,
                                   const SearchOptions& opts);

AdditivityCertificate check_impl(const NoncommutativeGraph& left, const NoncommutativeGraph* right,
                                 const SearchOptions& opts) {
  opts.check();
  AdditivityCertificate cert =
      try_rules_on({&left, "left"}, {right, "right"}, opts);
  if (cert.verdict == AdditivityVerdict::Unknown && right != nullptr) {
    cert = try_rules_on({right, "right"}, {&left, "left"}, opts);
  }
  // C·I_2 ⊗ C·I_2: no qubit rule covers two noiseless channels, but the joint
  // graph is C·I_4 with alpha 4 = 2 * 2 directly.
  if (cert.verdict == AdditivityVerdict::Unknown && right != nullptr &&
      is_scalar_multiples_of_identity(left) && is_scalar_multiples_of_identity(*right)) {
    cert.verdict = AdditivityVerdict::AdditiveBoth;
    cert.rule = AdditivityRule::DirectComputation;
    cert.fired_target = "both";
    cert.premises.push_back(
        {"scalar-identity", "left", "subspace is C·I_2", 1.0});
    cert.premises.push_back(
        {"scalar-identity", "right", "subspace is C·I_2", 1.0});
  }
  if (cert.verdict != AdditivityVerdict::Unknown && right != nullptr) {
    const AlphaResult al = alpha_exact(left, opts);
    const AlphaResult ar = alpha_exact(*right, opts);
    if (al.exact) {
      cert.alpha_left = *al.exact;
    }
    if (ar.exact) {
      cert.alpha_right = *ar.exact;
    }
    if (al.exact && ar.exact) {
      cert.c0_oneshot_sum = std::log2(double(*al.exact)) + std::log2(double(*ar.exact));
      if (cert.verdict == AdditivityVerdict::AdditiveBoth) {
        cert.c0_sum = cert.c0_oneshot_sum;
      }
    }
  }
  return cert;
}

// The block rules need multiplicativity of each diagonal part with the
// partner, which is itself established by a certificate.
bool part_premises(const NoncommutativeGraph& part, const std::string& target,
                   const Partner& partner, const SearchOptions& opts,
                   std::vector<Premise>* premises, bool* universal) {
  AdditivityCertificate sub;
  if (partner.graph == nullptr) {
    sub = check_impl(part, nullptr, opts);
  } else {
    sub = check_impl(part, partner.graph, opts);
  }
  if (sub.verdict == AdditivityVerdict::Unknown) {
    return false;
  }
  *universal = *universal && sub.universal;
  premises->push_back({"sub-certificate", target, to_string(sub.rule), std::nullopt});
  return true;
}

AdditivityCertificate try_rules_on(const Operand& op, const Partner& partner,
                                   const SearchOptions& opts) {
  const NoncommutativeGraph& g = *op.graph;
  AdditivityCertificate cert;
  cert.fired_target = op.name;

  if (is_full_algebra(g)) {
    cert.verdict = AdditivityVerdict::AdditiveBoth;
    cert.rule = AdditivityRule::FullAlgebra;
    cert.universal = true;
    cert.premises.push_back({"full-algebra", op.name,
                             "subspace dimension equals dim^2",
                             double(g.subspace.dimension())});
    return cert;
  }

  if (detect_diagonal_algebra(g, opts.tol).found) {
    cert.verdict = AdditivityVerdict::AdditiveBoth;
    cert.rule = AdditivityRule::DiagonalAlgebra;
    cert.universal = true;
    cert.premises.push_back({"diagonal-algebra", op.name,
                             "unitarily equivalent to the diagonal algebra",
                             double(g.dim)});
    return cert;
  }

  if (g.dim == 2 && g.subspace.dimension() >= 2) {
    cert.verdict = AdditivityVerdict::AdditiveBoth;
    cert.rule = AdditivityRule::QubitNontrivial;
    cert.universal = true;
    cert.premises.push_back({"qubit-nontrivial", op.name,
                             std::string("qubit graph of class ") +
                                 to_string(classify_qubit_graph(g, opts.tol).cls),
                             double(g.subspace.dimension())});
    return cert;
  }

  // Block rules, tried on every valid split. The rank-one corollary comes
  // first: when it applies it subsumes the sum rule and carries the most
  // reusable premises.
  for (Index dim_a = 1; dim_a < g.dim; ++dim_a) {
    const auto bg = decompose_block(g, dim_a, opts.tol);
    if (!bg) {
      continue;
    }
    const AlphaResult ra = alpha_exact(bg->blockA, opts);
    const AlphaResult rb = alpha_exact(bg->blockB, opts);

    // Both parts alpha = 1 and a rank-one operator in off-perp: alpha(Sigma)
    // splits as 1 + 1 and the sum rule applies.
    if (ra.exact == 1 && rb.exact == 1) {
      std::string how;
      if (rank_one_in_off_perp(*bg, opts, &how)) {
        AdditivityCertificate c;
        c.fired_target = op.name;
        c.block_dim_a = dim_a;
        c.universal = true;
        c.premises.push_back({"alpha", op.name + ".blockA", "alpha = 1", 1.0});
        c.premises.push_back({"alpha", op.name + ".blockB", "alpha = 1", 1.0});
        c.premises.push_back({"rank-one-in-off-perp", op.name + ".off", how, std::nullopt});
        bool ok = part_premises(bg->blockA, op.name + ".blockA", partner, opts, &c.premises,
                                &c.universal) &&
                  part_premises(bg->blockB, op.name + ".blockB", partner, opts, &c.premises,
                                &c.universal);
        if (ok) {
          c.verdict = AdditivityVerdict::AdditiveOneShot;
          c.rule = AdditivityRule::BlockRankOneCorollary;
          return c;
        }
      }
    }

    // alpha(Sigma) = alpha(blockA) + alpha(blockB), all three established.
    if (ra.exact && rb.exact) {
      const AlphaResult rs = block_alpha(*bg, opts);
      if (rs.exact && *rs.exact == *ra.exact + *rb.exact) {
        AdditivityCertificate c;
        c.fired_target = op.name;
        c.block_dim_a = dim_a;
        c.universal = true;
        c.premises.push_back({"alpha", op.name + ".blockA", "exact", double(*ra.exact)});
        c.premises.push_back({"alpha", op.name + ".blockB", "exact", double(*rb.exact)});
        c.premises.push_back({"block-alpha-sum", op.name,
                              "alpha(Sigma) = alpha(blockA) + alpha(blockB)",
                              double(*rs.exact)});
        bool ok = part_premises(bg->blockA, op.name + ".blockA", partner, opts, &c.premises,
                                &c.universal) &&
                  part_premises(bg->blockB, op.name + ".blockB", partner, opts, &c.premises,
                                &c.universal);
        if (ok) {
          c.verdict = AdditivityVerdict::AdditiveOneShot;
          c.rule = AdditivityRule::BlockSumRule;
          return c;
        }
      }
    }

    // Full off block and a partner with alpha = 1.
    if (bg->off.dimension() == bg->dimA * bg->dimB && partner.graph != nullptr) {
      const AlphaResult rp = alpha_exact(*partner.graph, opts);
      if (rp.exact == 1) {
        AdditivityCertificate c;
        c.fired_target = op.name;
        c.block_dim_a = dim_a;
        c.universal = false;
        c.premises.push_back({"off-block-full", op.name + ".off", "off block is all of L(B,A)",
                              double(bg->off.dimension())});
        c.premises.push_back({"alpha", partner.name, "alpha = 1", 1.0});
        bool ok = part_premises(bg->blockA, op.name + ".blockA", partner, opts, &c.premises,
                                &c.universal) &&
                  part_premises(bg->blockB, op.name + ".blockB", partner, opts, &c.premises,
                                &c.universal);
        if (ok) {
          c.verdict = AdditivityVerdict::AdditiveOneShot;
          c.rule = AdditivityRule::BlockFullOffDiag;
          return c;
        }
      }
    }
  }

  return cert;  // Unknown
}

}  // namespace

AdditivityCertificate check_additivity(const NoncommutativeGraph& left,
                                       const NoncommutativeGraph& right,
                                       const SearchOptions& opts) {
  return check_impl(left, &right, opts);
}

AdditivityCertificate check_additivity(const NoncommutativeGraph& left, AnyGraph,
                                       const SearchOptions& opts) {
  return check_impl(left, nullptr, opts);
}

namespace {

const NoncommutativeGraph* pick_operand(const std::string& name, const NoncommutativeGraph& left,
                                        const NoncommutativeGraph* right) {
  if (name == "left") {
    return &left;
  }
  if (name == "right") {
    return right;
  }
  return nullptr;
}

}  // namespace

bool audit_certificate(const AdditivityCertificate& cert, const NoncommutativeGraph& left,
                       const NoncommutativeGraph* right, const SearchOptions& opts) {
  switch (cert.verdict) {
    case AdditivityVerdict::Unknown:
      return cert.rule == AdditivityRule::None;
    case AdditivityVerdict::AdditiveBoth:
    case AdditivityVerdict::AdditiveOneShot:
      break;
  }
  if (cert.rule == AdditivityRule::DirectComputation) {
    return right != nullptr && is_scalar_multiples_of_identity(left) &&
           is_scalar_multiples_of_identity(*right);
  }
  const NoncommutativeGraph* fired = pick_operand(cert.fired_target, left, right);
  if (fired == nullptr) {
    return false;
  }
  const NoncommutativeGraph* partner = (cert.fired_target == "left") ? right : &left;
  switch (cert.rule) {
    case AdditivityRule::FullAlgebra:
      return is_full_algebra(*fired);
    case AdditivityRule::DiagonalAlgebra:
      return detect_diagonal_algebra(*fired, opts.tol).found;
    case AdditivityRule::QubitNontrivial:
      return fired->dim == 2 && fired->subspace.dimension() >= 2;
    case AdditivityRule::BlockRankOneCorollary:
    case AdditivityRule::BlockSumRule:
    case AdditivityRule::BlockFullOffDiag: {
      if (!cert.block_dim_a) {
        return false;
      }
      const auto bg = decompose_block(*fired, *cert.block_dim_a, opts.tol);
      if (!bg) {
        return false;
      }
      const AlphaResult ra = alpha_exact(bg->blockA, opts);
      const AlphaResult rb = alpha_exact(bg->blockB, opts);
      auto parts_multiplicative = [&] {
        AdditivityCertificate ca = partner ? check_impl(bg->blockA, partner, opts)
                                           : check_impl(bg->blockA, nullptr, opts);
        AdditivityCertificate cb = partner ? check_impl(bg->blockB, partner, opts)
                                           : check_impl(bg->blockB, nullptr, opts);
        return ca.verdict != AdditivityVerdict::Unknown &&
               cb.verdict != AdditivityVerdict::Unknown;
      };
      if (cert.rule == AdditivityRule::BlockRankOneCorollary) {
        std::string how;
        return ra.exact == 1 && rb.exact == 1 && rank_one_in_off_perp(*bg, opts, &how) &&
               parts_multiplicative();
      }
      if (cert.rule == AdditivityRule::BlockSumRule) {
        const AlphaResult rs = block_alpha(*bg, opts);
        return ra.exact && rb.exact && rs.exact && *rs.exact == *ra.exact + *rb.exact &&
               parts_multiplicative();
      }
      // BlockFullOffDiag
      if (partner == nullptr || bg->off.dimension() != bg->dimA * bg->dimB) {
        return false;
      }
      return alpha_exact(*partner, opts).exact == 1 && parts_multiplicative();
    }
    default:
      return false;
  }
}

ProbeReport numeric_multiplicativity_probe(const NoncommutativeGraph& s,
                                           const NoncommutativeGraph& t,
                                           const SearchOptions& opts, Index max_tensor_dim) {
  opts.check();
  if (s.dim * t.dim > max_tensor_dim) {
    throw ParameterError("numeric_multiplicativity_probe: tensor ambient dimension exceeds cap");
  }
  const NoncommutativeGraph tensor = tensor_graphs(s, t, opts.tol);
  const AlphaResult as = alpha_exact(s, opts);
  const AlphaResult at = alpha_exact(t, opts);

  ProbeReport report;
  report.tensor_upper = alpha_upper_bound(tensor);

  CodewordSet prod = product_codewords(*as.witness, *at.witness);
  const CodewordCheck prod_check = verify_codewords(tensor, prod, opts.tol);
  report.max_residual = prod_check.residual;
  report.product_lower = prod_check.ok ? static_cast<int>(prod.size()) : 1;

  report.tensor_lower = 1;
  for (int m = report.tensor_upper; m >= 2; --m) {
    const LowerSearchResult found = alpha_lower_search(tensor, m, opts);
    if (found.found) {
      report.tensor_lower = m;
      report.max_residual = std::max(report.max_residual, found.found->residual);
      break;
    }
  }

  const AdditivityCertificate cert = check_additivity(s, t, opts);
  if (cert.verdict != AdditivityVerdict::Unknown && as.exact && at.exact) {
    report.certified_alpha = *as.exact * *at.exact;
  }
  report.consistent = report.product_lower <= report.tensor_lower &&
                      report.tensor_lower <= report.tensor_upper &&
                      (!report.certified_alpha || report.tensor_lower == *report.certified_alpha);
  return report;
}

}  // namespace zecap
