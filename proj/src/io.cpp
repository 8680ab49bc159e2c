#include "fullgroup/io.hpp"

#include "fullgroup/error.hpp"

#include <fstream>
#include <memory>

namespace fullgroup {

namespace {

template <typename F>
auto guarded(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, what + ": " + e.what());
  }
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, path.string() + ": " + e.what());
  }
}

GraphPtr graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<EdgeSpec> edges;
    for (const auto& e : j.at("edges"))
      edges.push_back({e.at("id").get<std::string>(), e.at("src").get<std::string>(),
                       e.at("dst").get<std::string>()});
    auto g = std::make_shared<const Graph>(Graph(std::move(vertices), edges));
    std::optional<IntMatrix> declared;
    if (j.contains("matrix")) {
      const auto rows = j.at("matrix").get<std::vector<std::vector<long long>>>();
      IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw Error(Errc::ParseError, "ragged matrix");
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
      }
      declared = m;
    }
    validate_graph(*g, declared);
    return GraphPtr(g);
  });
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = Json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(g.vertex_name(v));
  j["edges"] = Json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    j["edges"].push_back({{"id", g.edge_name(e)},
                          {"src", g.vertex_name(g.source(e))},
                          {"dst", g.vertex_name(g.target(e))}});
  return j;
}

GraphPtr load_graph(const std::filesystem::path& path) { return graph_from_json(read_json_file(path)); }

Word word_from_json(const Graph& g, const Json& j) {
  return guarded("word", [&] {
    std::vector<EdgeId> edges;
    for (const auto& name : j.value("edges", Json::array())) {
      auto e = g.find_edge(name.get<std::string>());
      if (!e) throw Error(Errc::InvalidWord, "unknown edge '" + name.get<std::string>() + "'");
      edges.push_back(*e);
    }
    VertexId anchor;
    if (j.contains("anchor")) {
      auto v = g.find_vertex(j.at("anchor").get<std::string>());
      if (!v) throw Error(Errc::InvalidWord, "unknown vertex '" + j.at("anchor").get<std::string>() + "'");
      anchor = *v;
    } else if (!edges.empty()) {
      anchor = g.source(edges.front());
    } else {
      throw Error(Errc::InvalidWord, "empty word without anchor");
    }
    return make_word(g, anchor, std::move(edges));
  });
}

Json word_to_json(const Graph& g, const Word& w) {
  Json edges = Json::array();
  for (EdgeId e : w.edges) edges.push_back(g.edge_name(e));
  return {{"anchor", g.vertex_name(w.anchor)}, {"edges", edges}};
}

ClopenSet clopen_from_json(const GraphPtr& g, const Json& j) {
  return guarded("clopen set", [&] {
    if (j.is_string() && j.get<std::string>() == "X") return ClopenSet::whole(g);
    std::vector<Word> words;
    for (const auto& w : j.at("words")) words.push_back(word_from_json(*g, w));
    return ClopenSet(g, std::move(words));
  });
}

Json clopen_to_json(const ClopenSet& s) {
  Json words = Json::array();
  for (const auto& w : s.words()) words.push_back(word_to_json(s.graph(), w));
  return {{"words", words}};
}

ClopenSet load_clopen(const GraphPtr& g, const std::string& arg) {
  if (arg == "X") return ClopenSet::whole(g);
  return clopen_from_json(g, read_json_file(arg));
}

Point point_from_json(const Graph& g, const Json& j) {
  return guarded("point", [&] {
    Word cycle = word_from_json(g, j.at("cycle"));
    Word pre = j.contains("preperiod") ? word_from_json(g, j.at("preperiod")) : empty_word(cycle.anchor);
    return make_point(g, std::move(pre), std::move(cycle));
  });
}

Json point_to_json(const Graph& g, const Point& x) {
  return {{"preperiod", word_to_json(g, x.preperiod)}, {"cycle", word_to_json(g, x.cycle)}};
}

ElementFile element_from_json(const Json& j, const std::filesystem::path& base_dir) {
  return guarded("element", [&] {
    ElementFile f;
    f.graph_path = j.at("graph").get<std::string>();
    if (f.graph_path.is_relative()) f.graph_path = base_dir / f.graph_path;
    f.graph = load_graph(f.graph_path);
    const ClopenSet ambient =
        j.contains("ambient") ? clopen_from_json(f.graph, j.at("ambient")) : ClopenSet::whole(f.graph);
    std::vector<Piece> pieces;
    for (const auto& p : j.at("pieces"))
      pieces.push_back({word_from_json(*f.graph, p.at("range")), word_from_json(*f.graph, p.at("domain"))});
    f.element = FullGroupElement(PrefixBijection(f.graph, std::move(pieces)), ambient);
    return f;
  });
}

ElementFile load_element(const std::filesystem::path& path) {
  return element_from_json(read_json_file(path), path.parent_path());
}

Json table_to_json(const PrefixBijection& t) {
  Json pieces = Json::array();
  for (const auto& p : t.pieces())
    pieces.push_back({{"range", word_to_json(t.graph(), p.range)},
                      {"domain", word_to_json(t.graph(), p.domain)}});
  return pieces;
}

Json element_to_json(const FullGroupElement& a, const std::string& graph_ref) {
  return {{"graph", graph_ref}, {"ambient", clopen_to_json(a.ambient())}, {"pieces", table_to_json(a.table())}};
}

}  // namespace fullgroup
