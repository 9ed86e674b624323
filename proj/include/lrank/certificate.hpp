#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lrank/colorers.hpp"

namespace lrank {

// Target vertex v sits at (host vertex, clique index, path index) of H x K_m x P.
struct ProductCertificate {
  Graph host;
  TreeDecomposition decomposition;  // of host - apex, in host ids; the apex is in no bag
  int clique_size = 1;
  int path_length = 1;
  std::optional<int> apex;
  std::vector<std::array<int, 3>> embedding;
};

// Throws InvalidCertificate naming the first problem found.
void validate_certificate(const ProductCertificate& cert, const Graph& target);

struct CertificateResult {
  Ranking ranking;       // of the target
  Ranking host_ranking;  // rho on H, apex included
  DistanceColouring psi;
  SimpleTTreeResult host;
};

CertificateResult rank_certificate(const ProductCertificate& cert, const Graph& target, int ell);

// Text format, all ids 1-indexed:
//   cert <target n> <m> <path length> [apex <v>]
//   the host in .gr syntax, then its decomposition in .td syntax (root bag 1)
//   map <target v> <host v> <clique index> <path index>   (one per target vertex)
ProductCertificate read_certificate(std::istream& in);
void write_certificate(std::ostream& out, const ProductCertificate& cert);
ProductCertificate read_certificate_file(const std::string& path);
void write_certificate_file(const std::string& path, const ProductCertificate& cert);

// Identity certificate for the full product H x K_m x P_len.
ProductCertificate product_certificate(const Graph& host, const TreeDecomposition& d, int m, int len,
                                       std::optional<int> apex = std::nullopt);

}  // namespace lrank
