#include "zecap/additivity.hpp"
#include "zecap/channel.hpp"
#include "zecap/demo.hpp"
#include "zecap/graph.hpp"
#include "zecap/independence.hpp"
#include "zecap/io.hpp"
#include "zecap/rankone.hpp"
#include "zecap/rng.hpp"
#include "zecap/version.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace zecap;

namespace {

OperatorSubspace subspace_from_mats(const std::vector<Mat>& mats, const Tolerances& tol) {
  return orthonormalize_span(mats, tol);
}

NoncommutativeGraph graph_from_mats(const std::vector<Mat>& mats, const Tolerances& tol) {
  return make_graph(mats, tol);
}

KrausChannel make_channel(Index dim_in, Index dim_out, const std::vector<Mat>& kraus) {
  return KrausChannel{dim_in, dim_out, kraus};
}

py::object json_to_py(const Json& j) {
  const py::module json = py::module::import("json");
  return json.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_zecap, m) {
  m.doc() = "noncommutative graphs, independence numbers, and additivity certificates";
  m.attr("__version__") = kVersion;

  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Tolerances>(m, "Tolerances")
      .def(py::init<>())
      .def(py::init([](double orth, double rank, double converge) {
             Tolerances t{orth, rank, converge};
             t.check();
             return t;
           }),
           py::arg("orth") = 1e-9, py::arg("rank") = 1e-10, py::arg("converge") = 1e-10)
      .def_readwrite("orth", &Tolerances::orth)
      .def_readwrite("rank", &Tolerances::rank)
      .def_readwrite("converge", &Tolerances::converge);

  py::class_<SearchOptions>(m, "SearchOptions")
      .def(py::init<>())
      .def(py::init([](int restarts, int max_iter, std::uint64_t seed, const Tolerances& tol) {
             SearchOptions o{restarts, max_iter, seed, tol};
             o.check();
             return o;
           }),
           py::arg("restarts") = 64, py::arg("max_iter") = 500, py::arg("seed") = 0x5EED,
           py::arg("tol") = Tolerances{})
      .def_readwrite("restarts", &SearchOptions::restarts)
      .def_readwrite("max_iter", &SearchOptions::max_iter)
      .def_readwrite("seed", &SearchOptions::seed)
      .def_readwrite("tol", &SearchOptions::tol);

  py::class_<OperatorSubspace>(m, "OperatorSubspace")
      .def(py::init(&subspace_from_mats), py::arg("matrices"), py::arg("tol") = Tolerances{})
      .def_readonly("rows", &OperatorSubspace::rows)
      .def_readonly("cols", &OperatorSubspace::cols)
      .def_readonly("basis", &OperatorSubspace::basis)
      .def_property_readonly("dimension", &OperatorSubspace::dimension);

  py::class_<NoncommutativeGraph>(m, "NoncommutativeGraph")
      .def(py::init(&graph_from_mats), py::arg("span"), py::arg("tol") = Tolerances{})
      .def_readonly("dim", &NoncommutativeGraph::dim)
      .def_readonly("subspace", &NoncommutativeGraph::subspace)
      .def_property_readonly("subspace_dimension", &NoncommutativeGraph::subspace_dimension);

  py::class_<BlockGraph>(m, "BlockGraph")
      .def_readonly("dimA", &BlockGraph::dimA)
      .def_readonly("dimB", &BlockGraph::dimB)
      .def_readonly("blockA", &BlockGraph::blockA)
      .def_readonly("blockB", &BlockGraph::blockB)
      .def_readonly("off", &BlockGraph::off);

  py::class_<KrausChannel>(m, "KrausChannel")
      .def(py::init(&make_channel), py::arg("dim_in"), py::arg("dim_out"), py::arg("kraus"))
      .def_readonly("dim_in", &KrausChannel::dim_in)
      .def_readonly("dim_out", &KrausChannel::dim_out)
      .def_readonly("kraus", &KrausChannel::kraus);

  py::class_<ChannelValidation>(m, "ChannelValidation")
      .def_readonly("ok", &ChannelValidation::ok)
      .def_readonly("defect_norm", &ChannelValidation::defect_norm)
      .def_readonly("completeness", &ChannelValidation::completeness);

  py::class_<CodewordSet>(m, "CodewordSet")
      .def(py::init([](Index dim, const std::vector<Vec>& vectors) {
             return CodewordSet{dim, vectors, 0.0};
           }),
           py::arg("dim"), py::arg("vectors"))
      .def_readonly("dim", &CodewordSet::dim)
      .def_readonly("vectors", &CodewordSet::vectors)
      .def_readonly("residual", &CodewordSet::residual)
      .def("__len__", [](const CodewordSet& cs) { return cs.vectors.size(); });

  py::enum_<QubitClass>(m, "QubitClass")
      .value("Identity", QubitClass::Identity)
      .value("Diagonal", QubitClass::Diagonal)
      .value("ThreeDim", QubitClass::ThreeDim)
      .value("Full", QubitClass::Full);

  py::class_<QubitClassification>(m, "QubitClassification")
      .def_readonly("cls", &QubitClassification::cls)
      .def_readonly("alpha", &QubitClassification::alpha)
      .def_readonly("c0_oneshot", &QubitClassification::c0_oneshot);

  py::class_<DiagonalDetection>(m, "DiagonalDetection")
      .def_readonly("found", &DiagonalDetection::found)
      .def_readonly("unitary", &DiagonalDetection::unitary);

  py::enum_<RankOneStatus>(m, "RankOneStatus")
      .value("FoundWitness", RankOneStatus::FoundWitness)
      .value("ProvenAbsent", RankOneStatus::ProvenAbsent)
      .value("ProvenPresentNoWitness", RankOneStatus::ProvenPresentNoWitness)
      .value("NotFoundHeuristic", RankOneStatus::NotFoundHeuristic);

  py::class_<RankOneVerdict>(m, "RankOneVerdict")
      .def_readonly("status", &RankOneVerdict::status)
      .def_readonly("witness", &RankOneVerdict::witness)
      .def_readonly("residual", &RankOneVerdict::residual)
      .def_readonly("proof_rule", &RankOneVerdict::proof_rule);

  py::class_<AlphaResult>(m, "AlphaResult")
      .def_readonly("lower", &AlphaResult::lower)
      .def_readonly("upper", &AlphaResult::upper)
      .def_readonly("exact", &AlphaResult::exact)
      .def_readonly("method", &AlphaResult::method)
      .def_readonly("witness", &AlphaResult::witness)
      .def_readonly("split_witness", &AlphaResult::split_witness);

  py::enum_<AdditivityVerdict>(m, "AdditivityVerdict")
      .value("AdditiveBoth", AdditivityVerdict::AdditiveBoth)
      .value("AdditiveOneShot", AdditivityVerdict::AdditiveOneShot)
      .value("Unknown", AdditivityVerdict::Unknown);

  py::class_<AdditivityCertificate>(m, "AdditivityCertificate")
      .def_readonly("verdict", &AdditivityCertificate::verdict)
      .def_property_readonly(
          "rule", [](const AdditivityCertificate& c) { return std::string(to_string(c.rule)); })
      .def_readonly("universal", &AdditivityCertificate::universal)
      .def_readonly("alpha_left", &AdditivityCertificate::alpha_left)
      .def_readonly("alpha_right", &AdditivityCertificate::alpha_right)
      .def_readonly("c0_oneshot_sum", &AdditivityCertificate::c0_oneshot_sum)
      .def_readonly("c0_sum", &AdditivityCertificate::c0_sum)
      .def("to_dict",
           [](const AdditivityCertificate& c) { return json_to_py(certificate_to_json(c)); });

  py::class_<ProbeReport>(m, "ProbeReport")
      .def_readonly("product_lower", &ProbeReport::product_lower)
      .def_readonly("tensor_lower", &ProbeReport::tensor_lower)
      .def_readonly("tensor_upper", &ProbeReport::tensor_upper)
      .def_readonly("consistent", &ProbeReport::consistent)
      .def_readonly("certified_alpha", &ProbeReport::certified_alpha)
      .def_readonly("max_residual", &ProbeReport::max_residual);

  // channels
  m.def("validate_channel", &validate_channel, py::arg("channel"), py::arg("tol") = Tolerances{});
  m.def("graph_of_channel", &graph_of_channel, py::arg("channel"), py::arg("tol") = Tolerances{},
        py::arg("require_valid") = true);
  m.def("zoo", &zoo, py::arg("name"), py::arg("param") = std::nullopt);
  m.def("zoo_names", &zoo_names);
  m.def("weyl_channel", &weyl_channel, py::arg("d"));
  m.def("dephasing_bitflip", &dephasing_bitflip);
  m.def("depolarizing", &depolarizing, py::arg("p"));
  m.def("c2c2_sum_channel", &c2c2_sum_channel);
  m.def("c2c2_sum_channel_raw", &c2c2_sum_channel_raw);
  m.def("c4c2_sum_channel", &c4c2_sum_channel);

  // graphs
  m.def(
      "is_ncgraph",
      [](const OperatorSubspace& s, const Tolerances& tol) {
        const GraphCheck c = is_ncgraph(s, tol);
        return py::make_tuple(c.ok, c.defects);
      },
      py::arg("subspace"), py::arg("tol") = Tolerances{});
  m.def("tensor_graphs", &tensor_graphs, py::arg("s"), py::arg("t"),
        py::arg("tol") = Tolerances{});
  m.def("assemble_block", &assemble_block, py::arg("block"), py::arg("tol") = Tolerances{});
  m.def(
      "make_block",
      [](const NoncommutativeGraph& a, const NoncommutativeGraph& b, const OperatorSubspace& off) {
        return BlockGraph{a.dim, b.dim, a, b, off};
      },
      py::arg("blockA"), py::arg("blockB"), py::arg("off"));
  m.def("decompose_block", &decompose_block, py::arg("graph"), py::arg("dimA"),
        py::arg("tol") = Tolerances{});
  m.def("detect_diagonal_algebra", &detect_diagonal_algebra, py::arg("graph"),
        py::arg("tol") = Tolerances{});
  m.def("classify_qubit_graph", &classify_qubit_graph, py::arg("graph"),
        py::arg("tol") = Tolerances{});
  m.def("canonical_qubit_graph", &canonical_qubit_graph, py::arg("cls"),
        py::arg("tol") = Tolerances{});
  m.def("conjugate_graph", &conjugate_graph, py::arg("graph"), py::arg("unitary"),
        py::arg("tol") = Tolerances{});

  // linear algebra
  m.def("hs_inner", &hs_inner, py::arg("m"), py::arg("n"));
  m.def("complement", &complement, py::arg("subspace"));
  m.def(
      "project",
      [](const OperatorSubspace& s, const Mat& mat) {
        const Projection p = project(s, mat);
        return py::make_tuple(p.projection, p.residual);
      },
      py::arg("subspace"), py::arg("matrix"));
  m.def("projector_distance", &projector_distance, py::arg("a"), py::arg("b"));

  // rank-one detection
  m.def("find_rank_one", &find_rank_one, py::arg("subspace"), py::arg("opts") = SearchOptions{});
  m.def(
      "dimension_criterion",
      [](Index rows, Index cols, Index dim_sub) {
        return dimension_criterion(rows, cols, dim_sub) == DimensionCriterion::GuaranteedPresent;
      },
      py::arg("rows"), py::arg("cols"), py::arg("dim_sub"),
      "True when a subspace of that dimension must contain a rank-one operator");

  // independence numbers
  m.def(
      "verify_codewords",
      [](const NoncommutativeGraph& g, const CodewordSet& cs, const Tolerances& tol) {
        const CodewordCheck c = verify_codewords(g, cs, tol);
        return py::make_tuple(c.ok, c.residual, c.violation);
      },
      py::arg("graph"), py::arg("codewords"), py::arg("tol") = Tolerances{});
  m.def("alpha_upper_bound", &alpha_upper_bound, py::arg("graph"));
  m.def(
      "alpha_lower_search",
      [](const NoncommutativeGraph& g, int m, const SearchOptions& opts) {
        const LowerSearchResult r = alpha_lower_search(g, m, opts);
        return py::make_tuple(r.found, r.best_residual);
      },
      py::arg("graph"), py::arg("target_m"), py::arg("opts") = SearchOptions{});
  m.def("product_codewords", &product_codewords, py::arg("a"), py::arg("b"));
  m.def("compress_qubit_codewords", &compress_qubit_codewords, py::arg("t"), py::arg("codewords"),
        py::arg("tol") = Tolerances{});
  m.def("block_alpha", &block_alpha, py::arg("block"), py::arg("opts") = SearchOptions{});
  m.def(
      "alpha_exact",
      [](const NoncommutativeGraph& g, const SearchOptions& opts, bool generic) {
        return alpha_exact(g, opts, generic ? AlphaDispatch::Generic : AlphaDispatch::Full);
      },
      py::arg("graph"), py::arg("opts") = SearchOptions{}, py::arg("generic") = false);

  // additivity
  m.def(
      "check_additivity",
      [](const NoncommutativeGraph& left, const std::optional<NoncommutativeGraph>& right,
         const SearchOptions& opts) {
        return right ? check_additivity(left, *right, opts)
                     : check_additivity(left, any_graph, opts);
      },
      py::arg("left"), py::arg("right") = std::nullopt, py::arg("opts") = SearchOptions{},
      "Additivity certificate; right=None certifies against any partner");
  m.def(
      "audit_certificate",
      [](const AdditivityCertificate& cert, const NoncommutativeGraph& left,
         const std::optional<NoncommutativeGraph>& right, const SearchOptions& opts) {
        return audit_certificate(cert, left, right ? &*right : nullptr, opts);
      },
      py::arg("certificate"), py::arg("left"), py::arg("right") = std::nullopt,
      py::arg("opts") = SearchOptions{});
  m.def("numeric_multiplicativity_probe", &numeric_multiplicativity_probe, py::arg("s"),
        py::arg("t"), py::arg("opts") = SearchOptions{}, py::arg("max_tensor_dim") = 16);

  // demo + io
  m.def(
      "run_demo",
      [](const SearchOptions& opts) {
        const DemoReport r = run_regression_demo(opts);
        return json_to_py(demo_report_to_json(r, opts));
      },
      py::arg("opts") = SearchOptions{});
  m.def(
      "parse_input_json",
      [](const std::string& text, const Tolerances& tol) {
        return parse_input(Json::parse(text), tol);
      },
      py::arg("text"), py::arg("tol") = Tolerances{});
  m.def("channel_to_json", [](const KrausChannel& ch) { return channel_to_json(ch).dump(2); });
  m.def("graph_to_json", [](const NoncommutativeGraph& g) { return graph_to_json(g).dump(2); });
}
