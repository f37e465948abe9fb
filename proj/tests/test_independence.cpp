#include "zecap/channel.hpp"
#include "zecap/independence.hpp"
#include "zecap/rng.hpp"

#include "doctest.h"

#include <algorithm>

using namespace zecap;

namespace {

Vec basis_vec(Index d, Index i) {
  Vec v = Vec::Zero(d);
  v(i) = 1.0;
  return v;
}

CodewordSet computational_basis(Index d, Index count) {
  CodewordSet cs{d, {}, 0.0};
  for (Index i = 0; i < count; ++i) {
    cs.vectors.push_back(basis_vec(d, i));
  }
  return cs;
}

bool method_contains(const AlphaResult& r, const std::string& needle) {
  return std::any_of(r.method.begin(), r.method.end(), [&](const std::string& m) {
    return m.find(needle) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("verify_codewords on the canonical examples") {
  const auto& p = paulis();
  const NoncommutativeGraph iz = make_graph(std::vector<Mat>{p[0], p[3]});
  const NoncommutativeGraph izx = make_graph(std::vector<Mat>{p[0], p[3], p[1]});

  CHECK(verify_codewords(iz, computational_basis(2, 2)).ok);

  const CodewordCheck bad = verify_codewords(izx, computational_basis(2, 2));
  CHECK_FALSE(bad.ok);  // <0|X|1> = 1
  REQUIRE(bad.violation.has_value());
  CHECK(bad.violation->first == 0);
  CHECK(bad.violation->second == 1);
  CHECK(bad.residual == doctest::Approx(1.0 / std::sqrt(2.0)));

  const NoncommutativeGraph diag3 = graph_of_channel(weyl_channel(3));
  CHECK(verify_codewords(diag3, computational_basis(3, 3)).ok);
}

TEST_CASE("codewords passing verification are orthonormal") {
  // Forced by I in S: Tr(|psi_t><psi_s| I) = <psi_s|psi_t>.
  Rng rng(81);
  const NoncommutativeGraph diag3 = graph_of_channel(weyl_channel(3));
  const LowerSearchResult r = alpha_lower_search(diag3, 3);
  REQUIRE(r.found.has_value());
  for (Index i = 0; i < 3; ++i) {
    for (Index j = i + 1; j < 3; ++j) {
      CHECK(std::abs(r.found->vectors[i].dot(r.found->vectors[j])) < 1e-9);
    }
  }
}

TEST_CASE("alpha_upper_bound values") {
  const auto& p = paulis();
  CHECK(alpha_upper_bound(graph_of_channel(depolarizing(1.0))) == 1);  // L(C^2)
  CHECK(alpha_upper_bound(make_graph(std::vector<Mat>{p[0], p[3], p[1]})) == 1);  // dim S-perp = 1
  for (Index d = 2; d <= 5; ++d) {
    CHECK(alpha_upper_bound(make_graph(std::vector<Mat>{identity(d)})) == d);
  }
}

TEST_CASE("alpha_lower_search finds diagonal-algebra codewords") {
  const NoncommutativeGraph diag3 = graph_of_channel(weyl_channel(3));
  const LowerSearchResult r = alpha_lower_search(diag3, 3);
  REQUIRE(r.found.has_value());
  CHECK(r.found->size() == 3);
  CHECK(r.found->residual <= 1e-9);
  CHECK(verify_codewords(diag3, *r.found).ok);
}

TEST_CASE("alpha_lower_search fails honestly when the bound forbids the target") {
  const auto& p = paulis();
  const NoncommutativeGraph izx = make_graph(std::vector<Mat>{p[0], p[3], p[1]});
  SearchOptions opts;
  opts.restarts = 8;
  const LowerSearchResult r = alpha_lower_search(izx, 2, opts);
  CHECK_FALSE(r.found.has_value());
  CHECK(r.best_residual > 0.0);
  CHECK(alpha_upper_bound(izx) == 1);  // the bound, not the search, proves impossibility
}

TEST_CASE("product codewords verify on the tensor graph") {
  const auto& p = paulis();
  const NoncommutativeGraph iz = make_graph(std::vector<Mat>{p[0], p[3]});
  const NoncommutativeGraph tensor = tensor_graphs(iz, iz);
  const CodewordSet prod = product_codewords(computational_basis(2, 2), computational_basis(2, 2));
  CHECK(prod.size() == 4);
  CHECK(prod.dim == 4);
  CHECK(verify_codewords(tensor, prod).ok);

  const NoncommutativeGraph w3 = graph_of_channel(weyl_channel(3));
  const CodewordSet nine = product_codewords(computational_basis(3, 3), computational_basis(3, 3));
  CHECK(verify_codewords(tensor_graphs(w3, w3), nine).ok);

  const CodewordSet single = product_codewords(computational_basis(2, 2), computational_basis(3, 1));
  CHECK(single.size() == 2);
}

TEST_CASE("compress_qubit_codewords recovers product structure") {
  const auto& p = paulis();
  const NoncommutativeGraph izx = canonical_qubit_graph(QubitClass::ThreeDim);
  const NoncommutativeGraph t = graph_of_channel(weyl_channel(3));

  // |+> ⊗ phi_i: the v and w parts are proportional, so compression recovers phi_i.
  Vec plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CodewordSet cs{6, {}, 0.0};
  for (Index i = 0; i < 3; ++i) {
    cs.vectors.push_back(product_codewords(CodewordSet{2, {plus}, 0.0},
                                           CodewordSet{3, {basis_vec(3, i)}, 0.0})
                             .vectors[0]);
  }
  const CodewordSet compressed = compress_qubit_codewords(t, cs);
  CHECK(compressed.size() == 3);
  CHECK(compressed.residual <= 1e-10);
  for (Index i = 0; i < 3; ++i) {
    CHECK((compressed.vectors[i] - basis_vec(3, i)).norm() < 1e-10);
  }

  SUBCASE("a single codeword compresses to a single codeword") {
    CodewordSet one{6, {cs.vectors[0]}, 0.0};
    const CodewordSet out = compress_qubit_codewords(t, one);
    CHECK(out.size() == 1);
    CHECK(std::abs(out.vectors[0].norm() - 1.0) < 1e-12);
  }
  SUBCASE("precondition violations are rejected") {
    CodewordSet wrong{6, {basis_vec(6, 0), (basis_vec(6, 0) + basis_vec(6, 3)) / std::sqrt(2.0)},
                      0.0};
    CHECK_THROWS_AS(compress_qubit_codewords(t, wrong), ParameterError);
    CHECK_THROWS_AS(compress_qubit_codewords(t, computational_basis(4, 1)), DimensionError);
  }
  (void)izx;
}

TEST_CASE("compression property on random graphs over C^3") {
  Rng rng(87);
  const NoncommutativeGraph izx = canonical_qubit_graph(QubitClass::ThreeDim);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Mat> span_mats = {identity(3)};
    for (int k = 0; k < trial % 3; ++k) {
      const Mat g = rng.gaussian_matrix(3, 3);
      span_mats.push_back(g + g.adjoint());
    }
    const NoncommutativeGraph t = make_graph(span_mats);
    const AlphaResult at = alpha_exact(t);
    const NoncommutativeGraph big = tensor_graphs(izx, t);
    const LowerSearchResult found = alpha_lower_search(big, at.lower);
    REQUIRE(found.found.has_value());
    const CodewordSet compressed = compress_qubit_codewords(t, *found.found);
    CHECK(compressed.size() == found.found->size());
    CHECK(compressed.residual <= 1e-8);
  }
}

TEST_CASE("block_alpha shortcuts") {
  const auto& p = paulis();
  SUBCASE("full off block: max rule (c2c2 channel)") {
    const NoncommutativeGraph sigma = graph_of_channel(c2c2_sum_channel());
    const auto bg = decompose_block(sigma, 2);
    REQUIRE(bg.has_value());
    const AlphaResult r = block_alpha(*bg);
    CHECK(r.exact == 2);
    CHECK(method_contains(r, "off-perp-rank-one-absent"));
    REQUIRE(r.witness.has_value());
    CHECK(verify_codewords(sigma, *r.witness).ok);
  }
  SUBCASE("zero off block: sum rule") {
    BlockGraph bg;
    bg.dimA = 2;
    bg.dimB = 3;
    bg.blockA = make_graph(std::vector<Mat>{p[0], p[3]});
    bg.blockB = graph_of_channel(weyl_channel(3));
    bg.off = OperatorSubspace::zero(2, 3);
    const AlphaResult r = block_alpha(bg);
    CHECK(r.exact == 5);
    CHECK(method_contains(r, "sum-rule"));
    REQUIRE(r.witness.has_value());
    CHECK(verify_codewords(assemble_block(bg), *r.witness).ok);
    REQUIRE(r.split_witness.has_value());
    CHECK(r.split_witness->first.size() == 2);
    CHECK(r.split_witness->second.size() == 3);
  }
  SUBCASE("c4c2 block graph: split search reaches 2 = 1 + 1") {
    const NoncommutativeGraph sigma = graph_of_channel(c4c2_sum_channel());
    const auto bg = decompose_block(sigma, 4);
    REQUIRE(bg.has_value());
    const AlphaResult r = block_alpha(*bg);
    CHECK(r.exact == 2);
    REQUIRE(r.split_witness.has_value());
    CHECK(r.split_witness->first.size() == 1);
    CHECK(r.split_witness->second.size() == 1);
    REQUIRE(r.witness.has_value());
    CHECK(verify_codewords(sigma, *r.witness).ok);
  }
}

TEST_CASE("alpha_exact on the reference graphs") {
  const auto& p = paulis();
  SUBCASE("four canonical qubit graphs") {
    CHECK(alpha_exact(canonical_qubit_graph(QubitClass::Identity)).exact == 2);
    CHECK(alpha_exact(canonical_qubit_graph(QubitClass::Diagonal)).exact == 2);
    CHECK(alpha_exact(canonical_qubit_graph(QubitClass::ThreeDim)).exact == 1);
    CHECK(alpha_exact(canonical_qubit_graph(QubitClass::Full)).exact == 1);
  }
  SUBCASE("weyl(4): diagonal algebra value") {
    const AlphaResult r = alpha_exact(graph_of_channel(weyl_channel(4)));
    CHECK(r.exact == 4);
    CHECK(method_contains(r, "diagonal-algebra"));
    REQUIRE(r.witness.has_value());
    CHECK(verify_codewords(graph_of_channel(weyl_channel(4)), *r.witness).ok);
  }
  SUBCASE("c4c2 sigma graph") {
    const AlphaResult r = alpha_exact(graph_of_channel(c4c2_sum_channel()));
    CHECK(r.exact == 2);
  }
  SUBCASE("c2c2 sigma graph") {
    const AlphaResult r = alpha_exact(graph_of_channel(c2c2_sum_channel()));
    CHECK(r.exact == 2);
  }
  SUBCASE("full algebra") {
    const AlphaResult r = alpha_exact(graph_of_channel(depolarizing(0.7)));
    CHECK(r.exact == 1);
    CHECK(method_contains(r, "full-algebra"));
  }
}

TEST_CASE("alpha lower bounds are always witnessed and exact is never heuristic") {
  Rng rng(91);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Mat> span_mats = {identity(3)};
    for (int k = 0; k < 1 + trial % 3; ++k) {
      const Mat g = rng.gaussian_matrix(3, 3);
      span_mats.push_back(g + g.adjoint());
    }
    const NoncommutativeGraph t = make_graph(span_mats);
    const AlphaResult r = alpha_exact(t);
    CHECK(r.lower <= r.upper);
    REQUIRE(r.witness.has_value());
    CHECK(static_cast<int>(r.witness->size()) == r.lower);
    CHECK(verify_codewords(t, *r.witness).ok);
    if (r.exact) {
      CHECK((r.lower == r.upper || !r.method.empty()));
    }
  }
}

TEST_CASE("monotonicity under graph inclusion") {
  // Nested: C·I ⊂ span{I,Z} ⊂ span{I,Z,X} ⊂ L(C^2).
  const std::vector<NoncommutativeGraph> qubit_chain = {
      canonical_qubit_graph(QubitClass::Identity), canonical_qubit_graph(QubitClass::Diagonal),
      canonical_qubit_graph(QubitClass::ThreeDim), canonical_qubit_graph(QubitClass::Full)};
  // Nested: C·I_3 ⊂ diagonal algebra ⊂ L(C^3).
  const std::vector<NoncommutativeGraph> qutrit_chain = {
      make_graph(std::vector<Mat>{identity(3)}),
      graph_of_channel(weyl_channel(3)),
      graph_from_subspace(OperatorSubspace::full(3, 3)),
  };
  for (const auto& chain : {qubit_chain, qutrit_chain}) {
    int prev = 100;
    for (const NoncommutativeGraph& g : chain) {
      const AlphaResult r = alpha_exact(g);
      REQUIRE(r.exact.has_value());
      CHECK(*r.exact <= prev);
      prev = *r.exact;
    }
  }
}

TEST_CASE("supermultiplicativity via product codewords") {
  const NoncommutativeGraph w2 = graph_of_channel(weyl_channel(2));
  const NoncommutativeGraph w3 = graph_of_channel(weyl_channel(3));
  const AlphaResult a = alpha_exact(w2);
  const AlphaResult b = alpha_exact(w3);
  const CodewordSet prod = product_codewords(*a.witness, *b.witness);
  CHECK(verify_codewords(tensor_graphs(w2, w3), prod).ok);
  CHECK(static_cast<int>(prod.size()) == a.lower * b.lower);
}

TEST_CASE("generic dispatch agrees with classification on random qubit graphs") {
  Rng rng(93);
  for (QubitClass cls :
       {QubitClass::Identity, QubitClass::Diagonal, QubitClass::ThreeDim, QubitClass::Full}) {
    const NoncommutativeGraph canonical = canonical_qubit_graph(cls);
    for (int trial = 0; trial < 10; ++trial) {
      const NoncommutativeGraph g = conjugate_graph(canonical, rng.random_unitary(2));
      const AlphaResult generic = alpha_exact(g, SearchOptions{}, AlphaDispatch::Generic);
      REQUIRE(generic.exact.has_value());
      CHECK(*generic.exact == classify_qubit_graph(g).alpha);
    }
  }
}

TEST_CASE("search result witnesses are canonically phased") {
  const NoncommutativeGraph diag3 = graph_of_channel(weyl_channel(3));
  const LowerSearchResult r = alpha_lower_search(diag3, 3);
  REQUIRE(r.found.has_value());
  for (const Vec& v : r.found->vectors) {
    Index first = 0;
    while (first < v.size() && std::abs(v(first)) <= 1e-12) {
      ++first;
    }
    REQUIRE(first < v.size());
    CHECK(v(first).imag() == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(v(first).real() > 0.0);
  }
}
