#include <fstream>
#include <sstream>

#include "lrank/error.hpp"
#include "lrank/graph.hpp"

namespace lrank {

Graph read_gr(std::istream& in) {
  std::string line;
  int n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  bool have_labels = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line[0] == 'c') {
      std::string c, tag;
      ls >> c >> tag;
      if (tag == "label" && n >= 0) {
        int v;
        ls >> v;
        std::string text;
        std::getline(ls >> std::ws, text);
        if (v < 1 || v > n) throw Error(ErrorCode::ParseError, "label for bad vertex, line " + std::to_string(lineno));
        if (!have_labels) labels.assign(n, "");
        have_labels = true;
        labels[v - 1] = text;
      }
      continue;
    }
    if (line[0] == 'p') {
      std::string p, tw;
      if (!(ls >> p >> tw >> n >> m) || tw != "tw" || n < 0 || m < 0)
        throw Error(ErrorCode::ParseError, "bad header, line " + std::to_string(lineno));
      continue;
    }
    if (n < 0) throw Error(ErrorCode::ParseError, "edge before header, line " + std::to_string(lineno));
    int u, v;
    if (!(ls >> u >> v)) throw Error(ErrorCode::ParseError, "bad edge line " + std::to_string(lineno));
    if (u < 1 || v < 1 || u > n || v > n)
      throw Error(ErrorCode::ParseError, "vertex out of range, line " + std::to_string(lineno));
    edges.emplace_back(u - 1, v - 1);
  }
  if (n < 0) throw Error(ErrorCode::ParseError, "missing p tw header");
  if (static_cast<long long>(edges.size()) != m)
    throw Error(ErrorCode::ParseError, "header announces " + std::to_string(m) + " edges, found " +
                                           std::to_string(edges.size()));
  Graph g(n, edges);
  if (have_labels) g.set_labels(std::move(labels));
  return g;
}

void write_gr(std::ostream& out, const Graph& g) {
  out << "p tw " << g.n() << ' ' << g.edge_count() << '\n';
  const auto& labels = g.labels();
  for (std::size_t v = 0; v < labels.size(); ++v)
    if (!labels[v].empty()) out << "c label " << v + 1 << ' ' << labels[v] << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

Graph read_gr_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_gr(in);
}

void write_gr_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  write_gr(out, g);
}

}  // namespace lrank
