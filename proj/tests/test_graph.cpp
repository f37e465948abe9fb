#include "zecap/channel.hpp"
#include "zecap/graph.hpp"
#include "zecap/rng.hpp"

#include "doctest.h"

#include <algorithm>

using namespace zecap;

namespace {

Mat ketbra(Index d, Index i, Index j) {
  Mat m = Mat::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

}  // namespace

TEST_CASE("is_ncgraph accepts and rejects the canonical cases") {
  const auto& p = paulis();
  CHECK(is_ncgraph(orthonormalize_span(std::vector<Mat>{p[0], p[3]})).ok);

  const GraphCheck no_identity = is_ncgraph(orthonormalize_span(std::vector<Mat>{p[3], p[1]}));
  CHECK_FALSE(no_identity.ok);
  REQUIRE(no_identity.defects.size() == 1);
  CHECK(no_identity.defects[0].find("identity") != std::string::npos);

  const GraphCheck not_closed =
      is_ncgraph(orthonormalize_span(std::vector<Mat>{p[0], ketbra(2, 0, 1)}));
  CHECK_FALSE(not_closed.ok);
  CHECK(!not_closed.defects.empty());
  CHECK(not_closed.defects[0].find("adjoint") != std::string::npos);

  CHECK_THROWS_AS(is_ncgraph(OperatorSubspace::full(2, 3)), DimensionError);
}

TEST_CASE("tensor_graphs multiplies dimensions") {
  const auto& p = paulis();
  const NoncommutativeGraph ci = make_graph(std::vector<Mat>{p[0]});
  const NoncommutativeGraph iz = make_graph(std::vector<Mat>{p[0], p[3]});

  SUBCASE("C·I ⊗ C·I = C·I on C^4") {
    const NoncommutativeGraph t = tensor_graphs(ci, ci);
    CHECK(t.dim == 4);
    CHECK(t.subspace.dimension() == 1);
    CHECK(projector_distance(t.subspace, orthonormalize_span(std::vector<Mat>{identity(4)})) <
          1e-10);
  }
  SUBCASE("span{I,Z} ⊗ span{I,Z} contains Z⊗Z") {
    const NoncommutativeGraph t = tensor_graphs(iz, iz);
    CHECK(t.subspace.dimension() == 4);
    CHECK(contains(t.subspace, kron(p[3], p[3])));
  }
  SUBCASE("graph(dephasing-bitflip) ⊗ graph(depolarizing) has dimension 12") {
    const NoncommutativeGraph a = graph_of_channel(dephasing_bitflip());
    const NoncommutativeGraph b = graph_of_channel(depolarizing(1.0));
    const NoncommutativeGraph t = tensor_graphs(a, b);
    CHECK(t.dim == 4);
    CHECK(t.subspace.dimension() == 12);
    // Oracle: Kronecker products of orthonormal bases stay orthonormal, so the
    // 3 x 4 products are already independent.
    std::vector<Mat> prods;
    for (const Mat& x : a.subspace.basis) {
      for (const Mat& y : b.subspace.basis) {
        prods.push_back(kron(x, y));
      }
    }
    for (std::size_t i = 0; i < prods.size(); ++i) {
      for (std::size_t j = 0; j < prods.size(); ++j) {
        CHECK(std::abs(hs_inner(prods[i], prods[j]) - (i == j ? 1.0 : 0.0)) < 1e-10);
      }
    }
  }
}

TEST_CASE("tensor dimension multiplicativity on random graphs") {
  Rng rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const Mat g1 = rng.gaussian_matrix(2, 2);
    const Mat g2 = rng.gaussian_matrix(3, 3);
    const NoncommutativeGraph a = make_graph(std::vector<Mat>{identity(2), g1 + g1.adjoint()});
    const NoncommutativeGraph b = make_graph(std::vector<Mat>{identity(3), g2 + g2.adjoint()});
    const NoncommutativeGraph t = tensor_graphs(a, b);
    CHECK(t.subspace.dimension() == a.subspace.dimension() * b.subspace.dimension());
  }
}

TEST_CASE("assemble_block dimensions for the paper-style block graphs") {
  const auto& p = paulis();
  SUBCASE("C·I + L(B) + full off-block has dimension 13") {
    BlockGraph bg;
    bg.dimA = 2;
    bg.dimB = 2;
    bg.blockA = make_graph(std::vector<Mat>{p[0]});
    bg.blockB = make_graph(std::vector<Mat>{p[0], p[1], p[2], p[3]});
    bg.off = OperatorSubspace::full(2, 2);
    const NoncommutativeGraph sigma = assemble_block(bg);
    CHECK(sigma.dim == 4);
    CHECK(sigma.subspace.dimension() == 13);  // 1 + 4 + 2*4
    CHECK(is_ncgraph(sigma.subspace).ok);
  }
  SUBCASE("L(C^4) + span{I,X,Z} + 4-dim off-block has dimension 27") {
    Mat e0 = Mat::Zero(2, 1), e1 = Mat::Zero(2, 1);
    e0(0, 0) = 1.0;
    e1(1, 0) = 1.0;
    BlockGraph bg;
    bg.dimA = 4;
    bg.dimB = 2;
    bg.blockA = graph_from_subspace(OperatorSubspace::full(4, 4));
    bg.blockB = make_graph(std::vector<Mat>{p[0], p[1], p[3]});
    bg.off = orthonormalize_span(
        std::vector<Mat>{kron(p[0], e0), kron(p[3], e0), kron(p[0], e1), kron(p[1], e1)});
    const NoncommutativeGraph sigma = assemble_block(bg);
    CHECK(sigma.dim == 6);
    CHECK(sigma.subspace.dimension() == 27);  // 16 + 3 + 2*4
    CHECK(is_ncgraph(sigma.subspace).ok);
  }
}

TEST_CASE("decompose_block round-trips the assembled graph") {
  Rng rng(43);
  const auto& p = paulis();
  BlockGraph bg;
  bg.dimA = 2;
  bg.dimB = 3;
  bg.blockA = make_graph(std::vector<Mat>{p[0], p[3]});
  const Mat h = rng.gaussian_matrix(3, 3);
  bg.blockB = make_graph(std::vector<Mat>{identity(3), h + h.adjoint()});
  bg.off = orthonormalize_span(std::vector<Mat>{rng.gaussian_matrix(2, 3)});

  const NoncommutativeGraph sigma = assemble_block(bg);
  const auto back = decompose_block(sigma, 2);
  REQUIRE(back.has_value());
  CHECK(projector_distance(back->blockA.subspace, bg.blockA.subspace) < 1e-9);
  CHECK(projector_distance(back->blockB.subspace, bg.blockB.subspace) < 1e-9);
  CHECK(projector_distance(back->off, bg.off) < 1e-9);
  CHECK(projector_distance(assemble_block(*back).subspace, sigma.subspace) < 1e-8);
}

TEST_CASE("decompose_block rejects graphs that are not block closed") {
  const auto& p = paulis();
  // span{I, X} on C^2: the X off-diagonal leaks into the off blocks, and the
  // resulting block reassembly is strictly larger.
  const NoncommutativeGraph g = make_graph(std::vector<Mat>{p[0], p[1]});
  CHECK_FALSE(decompose_block(g, 1).has_value());
  CHECK_THROWS_AS(decompose_block(g, 0), ParameterError);
  CHECK_THROWS_AS(decompose_block(g, 2), ParameterError);
}

TEST_CASE("decompose_block recovers the c2c2 channel parts") {
  const NoncommutativeGraph sigma = graph_of_channel(c2c2_sum_channel());
  const auto bg = decompose_block(sigma, 2);
  REQUIRE(bg.has_value());
  CHECK(bg->blockA.subspace.dimension() == 1);
  CHECK(bg->blockB.subspace.dimension() == 4);
  CHECK(bg->off.dimension() == 4);
}

TEST_CASE("diagonal algebra detection") {
  SUBCASE("weyl(4) graph is found with a verifying unitary") {
    const NoncommutativeGraph g = graph_of_channel(weyl_channel(4));
    const DiagonalDetection det = detect_diagonal_algebra(g);
    REQUIRE(det.found);
    // Conjugating by W must land exactly on the span of diagonal units.
    for (const Mat& b : g.subspace.basis) {
      Mat rotated = det.unitary.adjoint() * b * det.unitary;
      rotated.diagonal().setZero();
      CHECK(rotated.norm() < 1e-9);
    }
  }
  SUBCASE("span{I,Z} is already diagonal") {
    const auto& p = paulis();
    CHECK(detect_diagonal_algebra(make_graph(std::vector<Mat>{p[0], p[3]})).found);
  }
  SUBCASE("span{I,Z,X} is rejected by dimension") {
    const auto& p = paulis();
    CHECK_FALSE(detect_diagonal_algebra(make_graph(std::vector<Mat>{p[0], p[3], p[1]})).found);
  }
  SUBCASE("a conjugated diagonal algebra is still found") {
    Rng rng(47);
    const NoncommutativeGraph g = graph_of_channel(weyl_channel(3));
    const NoncommutativeGraph rotated = conjugate_graph(g, rng.random_unitary(3));
    CHECK(detect_diagonal_algebra(rotated).found);
  }
  SUBCASE("a non-commuting full-dimension subspace is rejected") {
    // span{I, X, |0><0|, Y-ish} has dim 4 = d^2, never commutes.
    const NoncommutativeGraph g = graph_of_channel(depolarizing(1.0));
    CHECK_FALSE(detect_diagonal_algebra(g).found);
  }
}

TEST_CASE("qubit classification by dimension") {
  const auto& p = paulis();
  const QubitClassification c1 = classify_qubit_graph(canonical_qubit_graph(QubitClass::Identity));
  CHECK(c1.cls == QubitClass::Identity);
  CHECK(c1.alpha == 2);
  CHECK(c1.c0_oneshot == doctest::Approx(1.0));

  // span{I, (X+Z)/sqrt(2)} is a rotated span{I,Z}.
  const Mat h = (p[1] + p[3]) / std::sqrt(2.0);
  const QubitClassification c2 = classify_qubit_graph(make_graph(std::vector<Mat>{p[0], h}));
  CHECK(c2.cls == QubitClass::Diagonal);
  CHECK(c2.alpha == 2);

  // span{I, X, Y} is a rotated span{I, Z, X}.
  const QubitClassification c3 =
      classify_qubit_graph(make_graph(std::vector<Mat>{p[0], p[1], p[2]}));
  CHECK(c3.cls == QubitClass::ThreeDim);
  CHECK(c3.alpha == 1);
  CHECK(c3.c0_oneshot == doctest::Approx(0.0));

  const QubitClassification c4 = classify_qubit_graph(graph_of_channel(depolarizing(0.5)));
  CHECK(c4.cls == QubitClass::Full);
  CHECK(c4.alpha == 1);

  CHECK_THROWS_AS(classify_qubit_graph(make_graph(std::vector<Mat>{identity(3)})),
                  DimensionError);
}

TEST_CASE("qubit classification is invariant under random conjugation") {
  Rng rng(53);
  for (QubitClass cls :
       {QubitClass::Identity, QubitClass::Diagonal, QubitClass::ThreeDim, QubitClass::Full}) {
    const NoncommutativeGraph canonical = canonical_qubit_graph(cls);
    const QubitClassification base = classify_qubit_graph(canonical);
    for (int trial = 0; trial < 10; ++trial) {
      const NoncommutativeGraph g = conjugate_graph(canonical, rng.random_unitary(2));
      const QubitClassification got = classify_qubit_graph(g);
      CHECK(got.cls == base.cls);
      CHECK(got.alpha == base.alpha);
    }
  }
}
