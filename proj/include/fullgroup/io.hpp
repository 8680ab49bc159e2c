#pragma once

#include "fullgroup/element.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace fullgroup {

using Json = nlohmann::json;

/// Reads and parses a JSON file; throws ParseError.
Json read_json_file(const std::filesystem::path& path);

/// Graph schema: {"vertices": [...], "edges": [{"id","src","dst"}], "matrix"?: [[...]]}.
/// The result is validated.
GraphPtr graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);
GraphPtr load_graph(const std::filesystem::path& path);

/// {"anchor": "a", "edges": ["e", "f"]}; the anchor may be omitted for nonempty words.
Word word_from_json(const Graph& g, const Json& j);
Json word_to_json(const Graph& g, const Word& w);

/// {"words": [word, ...]}, canonicalized on load.
ClopenSet clopen_from_json(const GraphPtr& g, const Json& j);
Json clopen_to_json(const ClopenSet& s);
/// The literal "X" or a clopen-set file.
ClopenSet load_clopen(const GraphPtr& g, const std::string& arg);

/// {"preperiod": word, "cycle": word}.
Point point_from_json(const Graph& g, const Json& j);
Json point_to_json(const Graph& g, const Point& x);

struct ElementFile {
  std::filesystem::path graph_path;
  GraphPtr graph;
  FullGroupElement element;
};

/// {"graph": path, "ambient": clopen | "X", "pieces": [{"range": word, "domain": word}]}.
/// The graph path is resolved against the element file's directory.
ElementFile load_element(const std::filesystem::path& path);
ElementFile element_from_json(const Json& j, const std::filesystem::path& base_dir);
Json element_to_json(const FullGroupElement& a, const std::string& graph_ref);
Json table_to_json(const PrefixBijection& t);

}  // namespace fullgroup
