#include "zecap/io.hpp"

#include "zecap/version.hpp"

#include <fstream>

namespace zecap {

namespace {

Complex entry_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("complex entry must be a two-element array [re, im]");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json entry_to_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

}  // namespace

Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      row.push_back(entry_to_json(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("matrix must be a non-empty array of rows");
  }
  const Index rows = static_cast<Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) {
    throw ParseError("matrix row must be a non-empty array");
  }
  const Index cols = static_cast<Index>(j[0].size());
  Mat m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<Index>(j[r].size()) != cols) {
      throw ParseError("matrix rows have inconsistent lengths");
    }
    for (Index c = 0; c < cols; ++c) {
      m(r, c) = entry_from_json(j[r][c]);
    }
  }
  if (!m.allFinite()) {
    throw ParseError("matrix has a non-finite entry");
  }
  return m;
}

Json vector_to_json(const Vec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) {
    out.push_back(entry_to_json(v(i)));
  }
  return out;
}

Vec vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("vector must be a non-empty array of [re, im] entries");
  }
  Vec v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) {
    v(i) = entry_from_json(j[i]);
  }
  return v;
}

Json channel_to_json(const KrausChannel& ch) {
  Json out;
  out["dim_in"] = ch.dim_in;
  out["dim_out"] = ch.dim_out;
  Json ops = Json::array();
  for (const Mat& e : ch.kraus) {
    ops.push_back(matrix_to_json(e));
  }
  out["kraus"] = std::move(ops);
  return out;
}

KrausChannel channel_from_json(const Json& j) {
  KrausChannel ch;
  try {
    ch.dim_in = j.at("dim_in").get<Index>();
    ch.dim_out = j.at("dim_out").get<Index>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("channel: ") + e.what());
  }
  if (ch.dim_in <= 0 || ch.dim_out <= 0) {
    throw ParseError("channel: dimensions must be positive");
  }
  if (!j.contains("kraus") || !j.at("kraus").is_array() || j.at("kraus").empty()) {
    throw ParseError("channel: 'kraus' must be a non-empty array");
  }
  for (const Json& op : j.at("kraus")) {
    Mat e = matrix_from_json(op);
    if (e.rows() != ch.dim_out || e.cols() != ch.dim_in) {
      throw ParseError("channel: Kraus operator shape does not match dim_out x dim_in");
    }
    ch.kraus.push_back(std::move(e));
  }
  return ch;
}

Json graph_to_json(const NoncommutativeGraph& g) {
  Json out;
  out["dim"] = g.dim;
  Json basis = Json::array();
  for (const Mat& b : g.subspace.basis) {
    basis.push_back(matrix_to_json(b));
  }
  out["basis"] = std::move(basis);
  return out;
}

NoncommutativeGraph graph_from_json(const Json& j, const Tolerances& tol) {
  Index dim = 0;
  try {
    dim = j.at("dim").get<Index>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("graph: ") + e.what());
  }
  if (dim <= 0) {
    throw ParseError("graph: dim must be positive");
  }
  if (!j.contains("basis") || !j.at("basis").is_array() || j.at("basis").empty()) {
    throw ParseError("graph: 'basis' must be a non-empty array");
  }
  std::vector<Mat> mats;
  for (const Json& b : j.at("basis")) {
    Mat m = matrix_from_json(b);
    if (m.rows() != dim || m.cols() != dim) {
      throw ParseError("graph: basis element is not dim x dim");
    }
    mats.push_back(std::move(m));
  }
  OperatorSubspace s = orthonormalize_span(mats, dim, dim, tol);
  const GraphCheck check = is_ncgraph(s, tol);
  if (!check.ok) {
    std::string msg = "graph: invariant violated:";
    for (const auto& d : check.defects) {
      msg += " " + d + ";";
    }
    throw ParseError(msg);
  }
  return NoncommutativeGraph{dim, std::move(s)};
}

Json block_to_json(const BlockGraph& bg) {
  Json out;
  out["dimA"] = bg.dimA;
  out["dimB"] = bg.dimB;
  Json s = Json::array(), t = Json::array(), u = Json::array();
  for (const Mat& m : bg.blockA.subspace.basis) {
    s.push_back(matrix_to_json(m));
  }
  for (const Mat& m : bg.blockB.subspace.basis) {
    t.push_back(matrix_to_json(m));
  }
  for (const Mat& m : bg.off.basis) {
    u.push_back(matrix_to_json(m));
  }
  out["S"] = std::move(s);
  out["T"] = std::move(t);
  out["U"] = std::move(u);
  return out;
}

BlockGraph block_from_json(const Json& j, const Tolerances& tol) {
  BlockGraph bg;
  try {
    bg.dimA = j.at("dimA").get<Index>();
    bg.dimB = j.at("dimB").get<Index>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("block: ") + e.what());
  }
  if (bg.dimA <= 0 || bg.dimB <= 0) {
    throw ParseError("block: dimensions must be positive");
  }
  auto load = [&](const char* key, Index rows, Index cols) {
    std::vector<Mat> mats;
    if (!j.contains(key) || !j.at(key).is_array()) {
      throw ParseError(std::string("block: '") + key + "' must be an array");
    }
    for (const Json& b : j.at(key)) {
      Mat m = matrix_from_json(b);
      if (m.rows() != rows || m.cols() != cols) {
        throw ParseError(std::string("block: '") + key + "' element has wrong shape");
      }
      mats.push_back(std::move(m));
    }
    return mats;
  };
  const std::vector<Mat> s = load("S", bg.dimA, bg.dimA);
  const std::vector<Mat> t = load("T", bg.dimB, bg.dimB);
  const std::vector<Mat> u = load("U", bg.dimA, bg.dimB);
  if (s.empty() || t.empty()) {
    throw ParseError("block: 'S' and 'T' must be non-empty");
  }
  try {
    bg.blockA = make_graph(s, tol);
    bg.blockB = make_graph(t, tol);
  } catch (const ParameterError& e) {
    throw ParseError(std::string("block: invariant violated: ") + e.what());
  }
  bg.off = orthonormalize_span(u, bg.dimA, bg.dimB, tol);
  return bg;
}

Json codewords_to_json(const CodewordSet& cs) {
  Json out;
  out["dim"] = cs.dim;
  Json vectors = Json::array();
  for (const Vec& v : cs.vectors) {
    vectors.push_back(vector_to_json(v));
  }
  out["vectors"] = std::move(vectors);
  return out;
}

CodewordSet codewords_from_json(const Json& j) {
  CodewordSet cs;
  try {
    cs.dim = j.at("dim").get<Index>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("codewords: ") + e.what());
  }
  if (!j.contains("vectors") || !j.at("vectors").is_array()) {
    throw ParseError("codewords: 'vectors' must be an array");
  }
  for (const Json& v : j.at("vectors")) {
    Vec vec = vector_from_json(v);
    if (vec.size() != cs.dim) {
      throw ParseError("codewords: vector length does not match dim");
    }
    cs.vectors.push_back(std::move(vec));
  }
  return cs;
}

ParsedInput parse_input(const Json& j, const Tolerances& tol) {
  if (!j.is_object()) {
    throw ParseError("input document must be a JSON object");
  }
  if (j.contains("kraus")) {
    return channel_from_json(j);
  }
  if (j.contains("basis")) {
    return graph_from_json(j, tol);
  }
  if (j.contains("S") && j.contains("T") && j.contains("U")) {
    return block_from_json(j, tol);
  }
  throw ParseError("unrecognized document: expected 'kraus', 'basis', or 'S'/'T'/'U' keys");
}

ParsedInput parse_input_file(const std::string& path, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open file: " + path);
  }
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return parse_input(j, tol);
}

Json tolerances_to_json(const Tolerances& tol) {
  Json out;
  out["orth"] = tol.orth;
  out["rank"] = tol.rank;
  out["converge"] = tol.converge;
  return out;
}

Json alpha_result_to_json(const AlphaResult& r) {
  Json out;
  out["lower"] = r.lower;
  out["upper"] = r.upper;
  if (r.exact) {
    out["exact"] = *r.exact;
    out["c0_oneshot"] = std::log2(static_cast<double>(*r.exact));
  }
  out["method"] = r.method;
  if (r.witness) {
    Json w = codewords_to_json(*r.witness);
    w["residual"] = r.witness->residual;
    out["witness"] = std::move(w);
  }
  if (r.split_witness) {
    out["split_witness"] = Json{{"A", codewords_to_json(r.split_witness->first)},
                                {"B", codewords_to_json(r.split_witness->second)}};
  }
  return out;
}

Json rank_one_to_json(const RankOneVerdict& v) {
  Json out;
  out["status"] = to_string(v.status);
  if (v.proof_rule) {
    out["proof_rule"] = *v.proof_rule;
  }
  if (v.residual) {
    out["residual"] = *v.residual;
  }
  if (v.witness) {
    out["witness"] = Json{{"v", vector_to_json(v.witness->first)},
                          {"w", vector_to_json(v.witness->second)}};
  }
  return out;
}

Json certificate_to_json(const AdditivityCertificate& c) {
  Json out;
  out["verdict"] = to_string(c.verdict);
  out["rule"] = to_string(c.rule);
  out["scope"] = c.universal ? "any" : "specific";
  if (!c.fired_target.empty() && c.rule != AdditivityRule::None) {
    out["fired_on"] = c.fired_target;
  }
  if (c.block_dim_a) {
    out["block_dim_a"] = *c.block_dim_a;
  }
  Json premises = Json::array();
  for (const Premise& p : c.premises) {
    Json pj;
    pj["kind"] = p.kind;
    pj["target"] = p.target;
    pj["detail"] = p.detail;
    if (p.value) {
      pj["value"] = *p.value;
    }
    premises.push_back(std::move(pj));
  }
  out["premises"] = std::move(premises);
  if (c.alpha_left) {
    out["alpha_left"] = *c.alpha_left;
  }
  if (c.alpha_right) {
    out["alpha_right"] = *c.alpha_right;
  }
  if (c.c0_oneshot_sum) {
    out["c0_oneshot_sum"] = *c.c0_oneshot_sum;
  }
  if (c.c0_sum) {
    out["c0_sum"] = *c.c0_sum;
  }
  return out;
}

Json probe_to_json(const ProbeReport& p) {
  Json out;
  out["product_lower"] = p.product_lower;
  out["tensor_lower"] = p.tensor_lower;
  out["tensor_upper"] = p.tensor_upper;
  if (p.certified_alpha) {
    out["certified_alpha"] = *p.certified_alpha;
  }
  out["consistent"] = p.consistent;
  out["max_residual"] = p.max_residual;
  return out;
}

Json report_envelope(const std::string& command, const SearchOptions& opts, Json result) {
  Json out;
  out["tool"] = "zecap";
  out["version"] = kVersion;
  out["command"] = command;
  out["seed"] = opts.seed;
  out["restarts"] = opts.restarts;
  out["max_iter"] = opts.max_iter;
  out["tolerances"] = tolerances_to_json(opts.tol);
  out["result"] = std::move(result);
  return out;
}

}  // namespace zecap
