#include "lrank/certificate.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "lrank/error.hpp"

namespace lrank {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidCertificate, what); }

}  // namespace

void validate_certificate(const ProductCertificate& cert, const Graph& target) {
  const int nh = cert.host.n();
  if (cert.clique_size < 1 || cert.path_length < 1) invalid("clique size and path length must be >= 1");
  if (static_cast<int>(cert.embedding.size()) != target.n())
    invalid("embedding has " + std::to_string(cert.embedding.size()) + " entries for " +
            std::to_string(target.n()) + " target vertices");
  std::set<std::array<int, 3>> seen;
  for (int v = 0; v < target.n(); ++v) {
    const auto& e = cert.embedding[v];
    if (e[0] < 0 || e[0] >= nh || e[1] < 0 || e[1] >= cert.clique_size || e[2] < 0 || e[2] >= cert.path_length)
      invalid("vertex " + std::to_string(v + 1) + " maps outside the product");
    if (!seen.insert(e).second) invalid("vertex " + std::to_string(v + 1) + " shares its image");
  }
  for (auto [u, v] : target.edges()) {
    const auto& a = cert.embedding[u];
    const auto& b = cert.embedding[v];
    bool ok = (a[0] == b[0] || cert.host.has_edge(a[0], b[0])) && std::abs(a[2] - b[2]) <= 1;
    if (!ok) invalid("edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) + " is not a product edge");
  }
  if (cert.apex && (*cert.apex < 0 || *cert.apex >= nh)) invalid("apex out of range");
  std::vector<int> rest;
  for (int v = 0; v < nh; ++v)
    if (!cert.apex || v != *cert.apex) rest.push_back(v);
  for (const auto& bag : cert.decomposition.bags())
    for (int v : bag)
      if (v < 0 || v >= nh || (cert.apex && v == *cert.apex)) invalid("bag holds vertex " + std::to_string(v + 1));
  auto sub = induced_subgraph(cert.host, rest);
  std::vector<int> local(nh, -1);
  for (std::size_t i = 0; i < rest.size(); ++i) local[rest[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> bags;
  for (const auto& bag : cert.decomposition.bags()) {
    std::vector<int> b;
    for (int v : bag) b.push_back(local[v]);
    bags.push_back(std::move(b));
  }
  std::vector<int> parent(cert.decomposition.size());
  for (int x = 0; x < cert.decomposition.size(); ++x) parent[x] = cert.decomposition.parent(x);
  if (!rest.empty() && cert.decomposition.size() == 0) invalid("empty decomposition");
  if (cert.decomposition.size() > 0) {
    auto d = TreeDecomposition::from_parents(std::move(bags), std::move(parent));
    if (!validate_decomposition(sub.graph, d).is_valid) invalid("decomposition does not fit host minus apex");
  }
}

CertificateResult rank_certificate(const ProductCertificate& cert, const Graph& target, int ell) {
  validate_certificate(cert, target);
  const int nh = cert.host.n();
  std::vector<int> rest;
  for (int v = 0; v < nh; ++v)
    if (!cert.apex || v != *cert.apex) rest.push_back(v);
  auto sub = induced_subgraph(cert.host, rest);
  std::vector<int> local(nh, -1);
  for (std::size_t i = 0; i < rest.size(); ++i) local[rest[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> bags;
  std::vector<int> parent;
  for (int x = 0; x < cert.decomposition.size(); ++x) {
    std::vector<int> b;
    for (int v : cert.decomposition.bag(x)) b.push_back(local[v]);
    bags.push_back(std::move(b));
    parent.push_back(cert.decomposition.parent(x));
  }
  CertificateResult out;
  std::vector<int> rho(nh, 1);
  if (!rest.empty()) {
    auto d = TreeDecomposition::from_parents(std::move(bags), std::move(parent));
    out.host = rank_simple_ttree(sub.graph, d, ell);
    // Relabelling keeps a ranking valid and shrinks the product's palette.
    auto packed = compress_colors(out.host.ranking);
    for (std::size_t i = 0; i < rest.size(); ++i) rho[rest[i]] = packed.colors[i];
  }
  int host_max = 0;
  for (int v = 0; v < nh; ++v)
    if (!cert.apex || v != *cert.apex) host_max = std::max(host_max, rho[v]);
  if (cert.apex) rho[*cert.apex] = host_max + 1;
  out.host_ranking = Ranking(rho, ell);
  out.psi = distance_colour_clique_path(cert.clique_size, cert.path_length, ell);
  std::vector<int> phi(target.n());
  for (int v = 0; v < target.n(); ++v) {
    const auto& e = cert.embedding[v];
    phi[v] = out.psi.count * rho[e[0]] - (out.psi.values[e[1] * cert.path_length + e[2]] - 1);
  }
  out.ranking = Ranking(std::move(phi), ell);
  if (auto bad = verify_ranking(target, out.ranking)) {
    std::string s = "witness path";
    for (int u : bad->witness_path) s += " " + std::to_string(u);
    throw Error(ErrorCode::VerificationFailed, s);
  }
  return out;
}

ProductCertificate product_certificate(const Graph& host, const TreeDecomposition& d, int m, int len,
                                       std::optional<int> apex) {
  ProductCertificate c;
  c.host = host;
  c.decomposition = d;
  c.clique_size = m;
  c.path_length = len;
  c.apex = apex;
  for (int x = 0; x < host.n(); ++x)
    for (int a = 0; a < m; ++a)
      for (int i = 0; i < len; ++i) c.embedding.push_back({x, a, i});
  return c;
}

ProductCertificate read_certificate(std::istream& in) {
  ProductCertificate c;
  std::string line;
  std::ostringstream gr, td;
  int target_n = -1;
  enum { Head, Gr, Td, Map } part = Head;
  std::vector<std::array<int, 4>> maps;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::ParseError, "certificate line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "cert") {
      if (part != Head) fail("second cert line");
      if (!(ls >> target_n >> c.clique_size >> c.path_length)) fail("bad cert line");
      std::string kw;
      if (ls >> kw) {
        int a = 0;
        if (kw != "apex" || !(ls >> a)) fail("expected 'apex <v>'");
        c.apex = a - 1;
      }
      part = Gr;
      continue;
    }
    if (part == Head) {
      if (tok == "c") continue;
      fail("expected cert line");
    }
    if (tok == "s") part = Td;
    if (tok == "map") {
      std::array<int, 4> m{};
      if (!(ls >> m[0] >> m[1] >> m[2] >> m[3])) fail("bad map line");
      maps.push_back(m);
      part = Map;
      continue;
    }
    if (part == Gr) gr << line << '\n';
    else if (part == Td) td << line << '\n';
    else if (tok != "c") fail("unexpected line after map section");
  }
  if (target_n < 0) throw Error(ErrorCode::ParseError, "certificate: missing cert line");
  std::istringstream grs(gr.str()), tds(td.str());
  c.host = read_gr(grs);
  int n_td = 0;
  c.decomposition = read_td(tds, 1, &n_td);
  c.embedding.assign(target_n, {-1, -1, -1});
  std::vector<char> have(target_n, 0);
  for (const auto& m : maps) {
    if (m[0] < 1 || m[0] > target_n) throw Error(ErrorCode::ParseError, "map vertex out of range");
    if (have[m[0] - 1]) throw Error(ErrorCode::ParseError, "vertex mapped twice");
    have[m[0] - 1] = 1;
    c.embedding[m[0] - 1] = {m[1] - 1, m[2] - 1, m[3] - 1};
  }
  for (int v = 0; v < target_n; ++v)
    if (!have[v]) throw Error(ErrorCode::ParseError, "target vertex " + std::to_string(v + 1) + " unmapped");
  return c;
}

void write_certificate(std::ostream& out, const ProductCertificate& c) {
  out << "cert " << c.embedding.size() << ' ' << c.clique_size << ' ' << c.path_length;
  if (c.apex) out << " apex " << *c.apex + 1;
  out << '\n';
  write_gr(out, c.host);
  write_td(out, c.decomposition, c.host.n());
  for (std::size_t v = 0; v < c.embedding.size(); ++v) {
    const auto& e = c.embedding[v];
    out << "map " << v + 1 << ' ' << e[0] + 1 << ' ' << e[1] + 1 << ' ' << e[2] + 1 << '\n';
  }
}

ProductCertificate read_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_certificate(in);
}

void write_certificate_file(const std::string& path, const ProductCertificate& c) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  write_certificate(out, c);
}

}  // namespace lrank
