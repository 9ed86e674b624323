#include <fstream>
#include <sstream>

#include "lrank/decomposition.hpp"
#include "lrank/error.hpp"

namespace lrank {

TreeDecomposition read_td(std::istream& in, int root_bag, int* n_out) {
  std::string line;
  int nbags = -1, maxbag = -1, n = -1;
  std::vector<std::vector<int>> bags;
  std::vector<char> have;
  std::vector<Edge> tree;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    auto fail = [&](const std::string& what) {
      throw Error(ErrorCode::ParseError, what + ", line " + std::to_string(lineno));
    };
    if (line[0] == 's') {
      std::string s, td;
      if (!(ls >> s >> td >> nbags >> maxbag >> n) || td != "td" || nbags < 0 || n < 0)
        fail("bad header");
      bags.assign(nbags, {});
      have.assign(nbags, 0);
      continue;
    }
    if (nbags < 0) fail("content before header");
    if (line[0] == 'b') {
      std::string b;
      int id;
      if (!(ls >> b >> id) || id < 1 || id > nbags) fail("bad bag id");
      if (have[id - 1]) fail("bag listed twice");
      have[id - 1] = 1;
      int v;
      while (ls >> v) {
        if (v < 1 || v > n) fail("bag vertex out of range");
        bags[id - 1].push_back(v - 1);
      }
      if (static_cast<int>(bags[id - 1].size()) > maxbag) fail("bag larger than announced");
      continue;
    }
    int x, y;
    if (!(ls >> x >> y) || x < 1 || y < 1 || x > nbags || y > nbags) fail("bad tree edge");
    tree.emplace_back(x - 1, y - 1);
  }
  if (nbags < 0) throw Error(ErrorCode::ParseError, "missing s td header");
  for (int i = 0; i < nbags; ++i)
    if (!have[i]) throw Error(ErrorCode::ParseError, "bag " + std::to_string(i + 1) + " missing");
  if (n_out) *n_out = n;
  if (nbags == 0) return TreeDecomposition({}, {}, 0);
  return TreeDecomposition(std::move(bags), tree, root_bag - 1);
}

void write_td(std::ostream& out, const TreeDecomposition& d, int n) {
  int maxbag = 0;
  for (const auto& b : d.bags()) maxbag = std::max(maxbag, static_cast<int>(b.size()));
  out << "s td " << d.size() << ' ' << maxbag << ' ' << n << '\n';
  for (int x = 0; x < d.size(); ++x) {
    out << "b " << x + 1;
    for (int v : d.bag(x)) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [x, y] : d.tree_edges()) out << x + 1 << ' ' << y + 1 << '\n';
}

TreeDecomposition read_td_file(const std::string& path, int root_bag, int* n_out) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_td(in, root_bag, n_out);
}

void write_td_file(const std::string& path, const TreeDecomposition& d, int n) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  write_td(out, d, n);
}

}  // namespace lrank
