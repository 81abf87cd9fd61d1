#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "rectlay/feasibility.hpp"
#include "rectlay/graph.hpp"
#include "rectlay/layout.hpp"
#include "rectlay/oracle.hpp"

namespace rectlay {

using Json = nlohmann::ordered_json;

// Graph file: {"n", "edges", "root"?, "annotations"?}.
struct GraphDoc {
  Graph graph;
  std::optional<int> root;
  Json annotations;  // null when absent
};

Json to_json(const GraphDoc& d);
// Throws FormatError on malformed documents, PreconditionViolation on
// loops, duplicate edges or ids out of range.
GraphDoc graph_doc_from_json(const Json& j);

// Layout file: {"mode", "rects": [{"id" | "gap": true, "x", "y", "w", "h"}]}.
Json to_json(const Layout& l);
Layout layout_from_json(const Json& j);

Json to_json(const FeasibilityVerdict& v);
Json to_json(const ValidationReport& r);
Json to_json(const OracleResult& r);

// Throws FormatError when the file cannot be read or parsed.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string dump(const Json& j);

}  // namespace rectlay
