#include "qcycle/cube.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace qcycle {

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw invalid_parameter("dimension must be in 1.." +
                            std::to_string(kMaxDim) + ", got " +
                            std::to_string(dim));
  }
}

bool covering_pair(uint32_t lo, uint32_t hi) {
  return (lo & hi) == lo && std::popcount(lo ^ hi) == 1;
}

}  // namespace

std::vector<int> Vertex::elements() const {
  std::vector<int> out;
  out.reserve(layer());
  for (int e = 1; e <= dim; ++e) {
    if ((bits >> (e - 1)) & 1u) out.push_back(e);
  }
  return out;
}

std::string Vertex::str() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

Vertex Vertex::from_elements(int dim, const std::vector<int>& elements) {
  check_dim(dim);
  Vertex v{0, dim};
  for (int e : elements) {
    if (e < 1 || e > dim) {
      throw invalid_parameter("vertex element " + std::to_string(e) +
                              " outside 1.." + std::to_string(dim));
    }
    const uint32_t bit = 1u << (e - 1);
    if (v.bits & bit) {
      throw invalid_parameter("repeated vertex element " + std::to_string(e));
    }
    v.bits |= bit;
  }
  return v;
}

CubeEdge::CubeEdge(Vertex u, Vertex v) {
  if (u.dim != v.dim) {
    throw invalid_parameter("edge endpoints have different dimensions: " +
                            std::to_string(u.dim) + " vs " +
                            std::to_string(v.dim));
  }
  if (u.layer() > v.layer()) std::swap(u, v);
  if (!covering_pair(u.bits, v.bits)) {
    throw invalid_parameter("not a covering pair: " + u.str() + "-" + v.str());
  }
  lo = u;
  hi = v;
}

std::string CubeEdge::str() const { return lo.str() + "-" + hi.str(); }

Subgraph::Subgraph(int dim, std::vector<EdgeBits> edges) : dim_(dim) {
  check_dim(dim);
  const uint32_t full = (dim == 32) ? ~0u : ((1u << dim) - 1u);
  for (const EdgeBits& e : edges) {
    if ((e.lo | e.hi) & ~full) {
      throw invalid_parameter("edge endpoint outside Q_" +
                              std::to_string(dim));
    }
    if (!covering_pair(e.lo, e.hi)) {
      throw invalid_parameter(
          "not a covering pair: " +
          CubeEdge{Vertex{e.lo & e.hi, dim}, Vertex{e.lo | e.hi, dim}}.str());
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

Subgraph::Subgraph(int dim, const std::vector<CubeEdge>& edges)
    : Subgraph(dim, [&] {
        std::vector<EdgeBits> raw;
        raw.reserve(edges.size());
        for (const CubeEdge& e : edges) {
          if (e.lo.dim != dim) {
            throw invalid_parameter("edge dimension mismatch with subgraph");
          }
          raw.push_back({e.lo.bits, e.hi.bits});
        }
        return raw;
      }()) {}

Subgraph::Subgraph(int dim, std::vector<EdgeBits> edges, already_canonical)
    : dim_(dim), edges_(std::move(edges)) {}

CubeEdge Subgraph::edge_at(std::size_t i) const {
  const EdgeBits& e = edges_.at(i);
  return CubeEdge{Vertex{e.lo, dim_}, Vertex{e.hi, dim_}};
}

bool Subgraph::has_edge(EdgeBits e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<uint32_t> Subgraph::vertex_masks() const {
  std::vector<uint32_t> out;
  out.reserve(edges_.size() * 2);
  for (const EdgeBits& e : edges_) {
    out.push_back(e.lo);
    out.push_back(e.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vertex> Subgraph::vertices() const {
  std::vector<Vertex> out;
  for (uint32_t m : vertex_masks()) out.push_back(Vertex{m, dim_});
  return out;
}

Subgraph build_qn(int n) {
  check_dim(n);
  std::vector<EdgeBits> edges;
  edges.reserve(static_cast<std::size_t>(n) << (n - 1));
  const uint32_t count = 1u << n;
  for (uint32_t v = 0; v < count; ++v) {
    for (int b = 0; b < n; ++b) {
      const uint32_t bit = 1u << b;
      if (!(v & bit)) edges.push_back({v, v | bit});
    }
  }
  // (lo, hi) is already ascending: lo runs ascending and hi = lo | bit
  // ascends with the bit index.
  return Subgraph(n, std::move(edges), Subgraph::already_canonical{});
}

std::vector<Vertex> layer_vertices(int n, int k) {
  check_dim(n);
  if (k < 0 || k > n) {
    throw invalid_parameter("layer " + std::to_string(k) + " outside 0.." +
                            std::to_string(n));
  }
  std::vector<Vertex> out;
  const uint32_t count = 1u << n;
  for (uint32_t m = 0; m < count; ++m) {
    if (std::popcount(m) == k) out.push_back(Vertex{m, n});
  }
  return out;
}

bool are_adjacent(const Vertex& u, const Vertex& v) {
  if (u.dim != v.dim) {
    throw invalid_parameter("adjacency query across dimensions " +
                            std::to_string(u.dim) + " and " +
                            std::to_string(v.dim));
  }
  // Differing in exactly one bit means the poorer set is covered by the
  // richer one; popcount 0 (u == v) is not an edge.
  return std::popcount(u.bits ^ v.bits) == 1;
}

void write_edge_list(const Subgraph& g, std::ostream& out) {
  out << "dim=" << g.dim() << "\n";
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    out << g.edge_at(i).str() << "\n";
  }
}

std::string to_edge_list(const Subgraph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

namespace {

Vertex parse_brace_set(const std::string& token, int dim) {
  if (token.size() < 2 || token.front() != '{' || token.back() != '}') {
    throw invalid_parameter("malformed vertex token: " + token);
  }
  std::vector<int> elems;
  std::string body = token.substr(1, token.size() - 2);
  std::stringstream ss(body);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) elems.push_back(std::stoi(part));
  }
  return Vertex::from_elements(dim, elems);
}

}  // namespace

Subgraph parse_edge_list(std::istream& in) {
  std::string line;
  int dim = -1;
  std::vector<EdgeBits> edges;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("dim=", 0) == 0) {
      dim = std::stoi(line.substr(4));
      continue;
    }
    if (dim < 0) throw invalid_parameter("edge list missing dim= header");
    const auto dash = line.find("}-{");
    if (dash == std::string::npos) {
      throw invalid_parameter("malformed edge line: " + line);
    }
    const Vertex a = parse_brace_set(line.substr(0, dash + 1), dim);
    const Vertex b = parse_brace_set(line.substr(dash + 2), dim);
    const CubeEdge e(a, b);
    edges.push_back({e.lo.bits, e.hi.bits});
  }
  if (dim < 0) throw invalid_parameter("edge list missing dim= header");
  return Subgraph(dim, std::move(edges));
}

Subgraph parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

}  // namespace qcycle
