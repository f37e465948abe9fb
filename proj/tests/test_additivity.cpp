#include "zecap/additivity.hpp"
#include "zecap/channel.hpp"
#include "zecap/rng.hpp"

#include "doctest.h"

#include <algorithm>

using namespace zecap;

namespace {

bool has_sub_certificate(const AdditivityCertificate& c, const std::string& rule) {
  return std::any_of(c.premises.begin(), c.premises.end(), [&](const Premise& p) {
    return p.kind == "sub-certificate" && p.detail == rule;
  });
}

}  // namespace

TEST_CASE("universal rules fire on the reference graphs") {
  SUBCASE("full algebra, any partner") {
    const AdditivityCertificate c =
        check_additivity(graph_of_channel(depolarizing(1.0)), any_graph);
    CHECK(c.verdict == AdditivityVerdict::AdditiveBoth);
    CHECK(c.rule == AdditivityRule::FullAlgebra);
    CHECK(c.universal);
  }
  SUBCASE("diagonal algebra, any partner (weyl)") {
    for (Index d = 2; d <= 4; ++d) {
      const AdditivityCertificate c =
          check_additivity(graph_of_channel(weyl_channel(d)), any_graph);
      CHECK(c.verdict == AdditivityVerdict::AdditiveBoth);
      CHECK(c.rule == AdditivityRule::DiagonalAlgebra);
      CHECK(c.universal);
    }
  }
  SUBCASE("nontrivial qubit graph, any partner") {
    const AdditivityCertificate c =
        check_additivity(canonical_qubit_graph(QubitClass::ThreeDim), any_graph);
    CHECK(c.verdict == AdditivityVerdict::AdditiveBoth);
    CHECK(c.rule == AdditivityRule::QubitNontrivial);
  }
  SUBCASE("C·I_2 alone stays unknown against any") {
    const AdditivityCertificate c =
        check_additivity(canonical_qubit_graph(QubitClass::Identity), any_graph);
    CHECK(c.verdict == AdditivityVerdict::Unknown);
  }
}

TEST_CASE("specific-pair certificates on the reference channels") {
  const NoncommutativeGraph dep = graph_of_channel(depolarizing(1.0));
  SUBCASE("dephasing-bitflip with depolarizing") {
    const NoncommutativeGraph g = graph_of_channel(dephasing_bitflip());
    const AdditivityCertificate c = check_additivity(g, dep);
    CHECK(c.verdict == AdditivityVerdict::AdditiveBoth);
    CHECK(c.rule == AdditivityRule::QubitNontrivial);
    CHECK(c.alpha_left == 1);
    CHECK(c.alpha_right == 1);
    CHECK(*c.c0_oneshot_sum == doctest::Approx(0.0));
    CHECK(*c.c0_sum == doctest::Approx(0.0));
  }
  SUBCASE("c2c2 sigma with depolarizing: block rule with full off-diagonal") {
    const NoncommutativeGraph sigma = graph_of_channel(c2c2_sum_channel());
    const AdditivityCertificate c = check_additivity(sigma, dep);
    CHECK(c.verdict == AdditivityVerdict::AdditiveOneShot);
    CHECK(c.rule == AdditivityRule::BlockFullOffDiag);
    CHECK_FALSE(c.universal);
    CHECK(c.alpha_left == 2);
    CHECK(c.alpha_right == 1);
    CHECK(*c.c0_oneshot_sum == doctest::Approx(1.0));
    CHECK_FALSE(c.c0_sum.has_value());  // one-shot rule does not cover C0
  }
  SUBCASE("c4c2 sigma against any: rank-one corollary") {
    const NoncommutativeGraph sigma = graph_of_channel(c4c2_sum_channel());
    const AdditivityCertificate c = check_additivity(sigma, any_graph);
    CHECK(c.verdict == AdditivityVerdict::AdditiveOneShot);
    CHECK(c.rule == AdditivityRule::BlockRankOneCorollary);
    CHECK(c.universal);
    CHECK(has_sub_certificate(c, "FullAlgebra"));
    CHECK(has_sub_certificate(c, "QubitNontrivial"));
  }
  SUBCASE("two noiseless qubit graphs: direct computation") {
    const NoncommutativeGraph ci = canonical_qubit_graph(QubitClass::Identity);
    const AdditivityCertificate c = check_additivity(ci, ci);
    CHECK(c.verdict == AdditivityVerdict::AdditiveBoth);
    CHECK(c.rule == AdditivityRule::DirectComputation);
    CHECK(*c.c0_oneshot_sum == doctest::Approx(2.0));
  }
}

TEST_CASE("block rules on zero off-block direct sums") {
  SUBCASE("parts with different alphas certify through the sum rule") {
    BlockGraph bg;
    bg.dimA = 2;
    bg.dimB = 2;
    bg.blockA = canonical_qubit_graph(QubitClass::Diagonal);   // alpha 2
    bg.blockB = canonical_qubit_graph(QubitClass::ThreeDim);   // alpha 1
    bg.off = OperatorSubspace::zero(2, 2);
    const NoncommutativeGraph sigma = assemble_block(bg);
    const AdditivityCertificate c = check_additivity(sigma, any_graph);
    CHECK(c.verdict == AdditivityVerdict::AdditiveOneShot);
    CHECK(c.rule == AdditivityRule::BlockSumRule);
    CHECK(c.universal);
  }
  SUBCASE("parts with alpha 1 each certify through the rank-one corollary") {
    // With a zero off-block the complement is everything, so the corollary's
    // rank-one premise holds trivially and it outranks the sum rule.
    BlockGraph bg;
    bg.dimA = 2;
    bg.dimB = 2;
    bg.blockA = canonical_qubit_graph(QubitClass::ThreeDim);
    bg.blockB = canonical_qubit_graph(QubitClass::Full);
    bg.off = OperatorSubspace::zero(2, 2);
    const NoncommutativeGraph sigma = assemble_block(bg);
    const AdditivityCertificate c = check_additivity(sigma, any_graph);
    CHECK(c.verdict == AdditivityVerdict::AdditiveOneShot);
    CHECK(c.rule == AdditivityRule::BlockRankOneCorollary);
    CHECK(c.universal);
  }
}

TEST_CASE("no false Unknown on the four reference channels") {
  const std::vector<NoncommutativeGraph> graphs = {
      graph_of_channel(weyl_channel(3)),
      graph_of_channel(dephasing_bitflip()),
      graph_of_channel(c2c2_sum_channel()),
      graph_of_channel(c4c2_sum_channel()),
  };
  const NoncommutativeGraph dep = graph_of_channel(depolarizing(1.0));
  for (const NoncommutativeGraph& g : graphs) {
    CHECK(check_additivity(g, dep).verdict != AdditivityVerdict::Unknown);
  }
}

TEST_CASE("certificates audit cleanly") {
  const NoncommutativeGraph dep = graph_of_channel(depolarizing(1.0));
  const NoncommutativeGraph w3 = graph_of_channel(weyl_channel(3));
  const NoncommutativeGraph izx = graph_of_channel(dephasing_bitflip());
  const NoncommutativeGraph sigma3 = graph_of_channel(c2c2_sum_channel());
  const NoncommutativeGraph sigma4 = graph_of_channel(c4c2_sum_channel());

  const std::vector<std::pair<const NoncommutativeGraph*, const NoncommutativeGraph*>> pairs = {
      {&w3, &dep}, {&izx, &dep}, {&sigma3, &dep}, {&izx, &w3}, {&sigma4, &dep}};
  for (const auto& [left, right] : pairs) {
    const AdditivityCertificate c = check_additivity(*left, *right);
    CHECK(audit_certificate(c, *left, right));
  }
  const AdditivityCertificate any_cert = check_additivity(sigma4, any_graph);
  CHECK(audit_certificate(any_cert, sigma4, nullptr));

  // A tampered certificate must fail its audit.
  AdditivityCertificate tampered = check_additivity(w3, dep);
  tampered.rule = AdditivityRule::FullAlgebra;
  CHECK_FALSE(audit_certificate(tampered, w3, &dep));
}

TEST_CASE("verdict symmetry on structurally symmetric pairs") {
  const NoncommutativeGraph dep = graph_of_channel(depolarizing(1.0));
  const NoncommutativeGraph w2 = graph_of_channel(weyl_channel(2));
  const NoncommutativeGraph w3 = graph_of_channel(weyl_channel(3));
  const NoncommutativeGraph izx = graph_of_channel(dephasing_bitflip());
  const NoncommutativeGraph ci = canonical_qubit_graph(QubitClass::Identity);

  const std::vector<std::pair<const NoncommutativeGraph*, const NoncommutativeGraph*>> pairs = {
      {&dep, &izx}, {&w2, &w3}, {&izx, &w3}, {&ci, &ci}, {&dep, &dep}};
  for (const auto& [a, b] : pairs) {
    CHECK(check_additivity(*a, *b).verdict == check_additivity(*b, *a).verdict);
  }
}

TEST_CASE("operand order is documented for mixed-strength pairs") {
  // The rules scan the left operand first: a block-decomposable left with a
  // full-algebra right yields the one-shot block certificate, while the
  // swapped order certifies through the right operand's full algebra.
  const NoncommutativeGraph sigma = graph_of_channel(c2c2_sum_channel());
  const NoncommutativeGraph dep = graph_of_channel(depolarizing(1.0));
  const AdditivityCertificate left_first = check_additivity(sigma, dep);
  CHECK(left_first.rule == AdditivityRule::BlockFullOffDiag);
  CHECK(left_first.verdict == AdditivityVerdict::AdditiveOneShot);
  const AdditivityCertificate right_first = check_additivity(dep, sigma);
  CHECK(right_first.rule == AdditivityRule::FullAlgebra);
  CHECK(right_first.verdict == AdditivityVerdict::AdditiveBoth);
  // Both certificates audit; they certify the same pair at different strength.
  CHECK(audit_certificate(left_first, sigma, &dep));
  CHECK(audit_certificate(right_first, dep, &sigma));
}

TEST_CASE("multiplicativity probes") {
  const NoncommutativeGraph iz = canonical_qubit_graph(QubitClass::Diagonal);
  const NoncommutativeGraph izx = canonical_qubit_graph(QubitClass::ThreeDim);

  SUBCASE("span{I,Z} squared is multiplicative at 4") {
    const ProbeReport r = numeric_multiplicativity_probe(iz, iz);
    CHECK(r.product_lower == 4);
    CHECK(r.tensor_lower == 4);
    CHECK(r.tensor_upper == 4);
    CHECK(r.certified_alpha == 4);
    CHECK(r.consistent);
  }
  SUBCASE("span{I,Z,X} squared pins alpha 1") {
    const ProbeReport r = numeric_multiplicativity_probe(izx, izx);
    CHECK(r.product_lower == 1);
    CHECK(r.tensor_lower == 1);
    CHECK(r.certified_alpha == 1);
    CHECK(r.consistent);
  }
  SUBCASE("weyl(2) x weyl(3) reaches 6 by search") {
    const ProbeReport r = numeric_multiplicativity_probe(graph_of_channel(weyl_channel(2)),
                                                         graph_of_channel(weyl_channel(3)));
    CHECK(r.tensor_lower == 6);
    CHECK(r.certified_alpha == 6);
    CHECK(r.consistent);
    CHECK(r.max_residual <= 1e-9);
  }
  SUBCASE("size cap is enforced") {
    const NoncommutativeGraph w3 = graph_of_channel(weyl_channel(3));
    CHECK_THROWS_AS(numeric_multiplicativity_probe(tensor_graphs(w3, w3), w3), ParameterError);
  }
}

TEST_CASE("probe consistency whenever a certificate asserts additivity") {
  const std::vector<NoncommutativeGraph> graphs = {
      canonical_qubit_graph(QubitClass::Diagonal),
      canonical_qubit_graph(QubitClass::ThreeDim),
      graph_of_channel(depolarizing(1.0)),
      graph_of_channel(weyl_channel(2)),
  };
  for (const NoncommutativeGraph& a : graphs) {
    for (const NoncommutativeGraph& b : graphs) {
      if (a.dim * b.dim > 16) {
        continue;
      }
      const AdditivityCertificate c = check_additivity(a, b);
      if (c.verdict == AdditivityVerdict::Unknown) {
        continue;
      }
      CHECK(numeric_multiplicativity_probe(a, b).consistent);
    }
  }
}
