#pragma once

#include "zecap/additivity.hpp"
#include "zecap/channel.hpp"
#include "zecap/graph.hpp"
#include "zecap/independence.hpp"
#include "zecap/rankone.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <variant>

namespace zecap {

// Key order is part of the output contract (reports must be byte-stable).
using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Complex matrices are row-major arrays of rows, entries as [re, im].
Json matrix_to_json(const Mat& m);
Mat matrix_from_json(const Json& j);

Json vector_to_json(const Vec& v);
Vec vector_from_json(const Json& j);

// File formats:
//   channel   {"dim_in": n, "dim_out": n, "kraus": [matrix...]}
//   graph     {"dim": n, "basis": [matrix...]}
//   block     {"dimA": n, "dimB": n, "S": [matrix...], "T": [matrix...], "U": [matrix...]}
//   codewords {"dim": n, "vectors": [vector...]}
Json channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const Json& j);

Json graph_to_json(const NoncommutativeGraph& g);
NoncommutativeGraph graph_from_json(const Json& j, const Tolerances& tol = {});

Json block_to_json(const BlockGraph& bg);
BlockGraph block_from_json(const Json& j, const Tolerances& tol = {});

Json codewords_to_json(const CodewordSet& cs);
CodewordSet codewords_from_json(const Json& j);

using ParsedInput = std::variant<KrausChannel, NoncommutativeGraph, BlockGraph>;

/// Auto-detects the document type by its top-level keys and validates the
/// invariants of the parsed value.
ParsedInput parse_input(const Json& j, const Tolerances& tol = {});
ParsedInput parse_input_file(const std::string& path, const Tolerances& tol = {});

// Result serialization for reports.
Json tolerances_to_json(const Tolerances& tol);
Json alpha_result_to_json(const AlphaResult& r);
Json rank_one_to_json(const RankOneVerdict& v);
Json certificate_to_json(const AdditivityCertificate& c);
Json probe_to_json(const ProbeReport& p);

/// Report envelope: every CLI report embeds the tool version, the seed, and
/// the tolerances in effect.
Json report_envelope(const std::string& command, const SearchOptions& opts, Json result);

}  // namespace zecap
