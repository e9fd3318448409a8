#include "imkit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "imkit/errors.hpp"

namespace imkit {

Graph Graph::from_arcs(VertexId n, std::vector<Arc> arcs,
                       std::vector<std::uint64_t> original_ids) {
  Graph g;
  g.n_ = n;
  for (const Arc& a : arcs) {
    if (a.src >= n || a.dst >= n)
      throw ValidationError("arc endpoint out of range");
    if (a.src == a.dst) throw ValidationError("self-loop arc");
    if (!(a.prob >= 0.0 && a.prob <= 1.0))
      throw ValidationError("arc probability outside [0,1]");
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  for (std::size_t i = 1; i < arcs.size(); ++i) {
    if (arcs[i - 1].src == arcs[i].src && arcs[i - 1].dst == arcs[i].dst)
      throw ValidationError("duplicate arc");
  }
  g.arcs_ = std::move(arcs);

  g.out_offsets_.assign(n + 1, 0);
  for (const Arc& a : g.arcs_) ++g.out_offsets_[a.src + 1];
  for (VertexId v = 0; v < n; ++v) g.out_offsets_[v + 1] += g.out_offsets_[v];

  g.in_arc_ids_.resize(g.arcs_.size());
  for (std::uint32_t i = 0; i < g.arcs_.size(); ++i) g.in_arc_ids_[i] = i;
  std::sort(g.in_arc_ids_.begin(), g.in_arc_ids_.end(),
            [&g](std::uint32_t a, std::uint32_t b) {
              const Arc& x = g.arcs_[a];
              const Arc& y = g.arcs_[b];
              return x.dst != y.dst ? x.dst < y.dst : x.src < y.src;
            });
  g.in_offsets_.assign(n + 1, 0);
  for (const Arc& a : g.arcs_) ++g.in_offsets_[a.dst + 1];
  for (VertexId v = 0; v < n; ++v) g.in_offsets_[v + 1] += g.in_offsets_[v];

  if (original_ids.empty()) {
    g.original_ids_.resize(n);
    for (VertexId v = 0; v < n; ++v) g.original_ids_[v] = v;
  } else {
    if (original_ids.size() != n)
      throw ValidationError("original id map size mismatch");
    g.original_ids_ = std::move(original_ids);
  }
  g.id_map_.reserve(n);
  for (VertexId v = 0; v < n; ++v) g.id_map_.emplace(g.original_ids_[v], v);
  return g;
}

std::span<const Arc> Graph::out_arcs(VertexId v) const {
  check_vertex(v);
  return {arcs_.data() + out_offsets_[v],
          arcs_.data() + out_offsets_[v + 1]};
}

std::span<const std::uint32_t> Graph::in_arc_ids(VertexId v) const {
  check_vertex(v);
  return {in_arc_ids_.data() + in_offsets_[v],
          in_arc_ids_.data() + in_offsets_[v + 1]};
}

std::vector<std::pair<VertexId, double>> Graph::in_neighbors(VertexId v) const {
  std::vector<std::pair<VertexId, double>> result;
  for (std::uint32_t id : in_arc_ids(v))
    result.emplace_back(arcs_[id].src, arcs_[id].prob);
  return result;
}

std::size_t Graph::out_degree(VertexId v) const {
  check_vertex(v);
  return out_offsets_[v + 1] - out_offsets_[v];
}

std::optional<VertexId> Graph::compact_id(std::uint64_t original) const {
  auto it = id_map_.find(original);
  if (it == id_map_.end()) return std::nullopt;
  return it->second;
}

void Graph::check_vertex(VertexId v) const {
  if (v >= n_)
    throw ValidationError("vertex id " + std::to_string(v) +
                          " out of range (n=" + std::to_string(n_) + ")");
}

namespace {

struct RawEdge {
  std::uint64_t src;
  std::uint64_t dst;
  double prob;
};

double parse_prob(const std::string& tok, std::size_t line_no) {
  std::size_t pos = 0;
  double p;
  try {
    p = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": non-numeric probability '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError("line " + std::to_string(line_no) +
                     ": non-numeric probability '" + tok + "'");
  if (!(p >= 0.0 && p <= 1.0))
    throw ValidationError("line " + std::to_string(line_no) +
                          ": probability " + tok + " outside [0,1]");
  return p;
}

std::uint64_t parse_id(const std::string& tok, std::size_t line_no) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line_no) +
                     ": non-numeric vertex id '" + tok + "'");
  return v;
}

}  // namespace

Graph load_edge_list(std::istream& source, const LoadOptions& opts,
                     LoadStats* stats) {
  if (opts.uniform_prob &&
      !(*opts.uniform_prob > 0.0 && *opts.uniform_prob <= 1.0))
    throw ValidationError("uniform_prob must lie in (0,1]");

  std::vector<RawEdge> edges;
  std::string line;
  std::size_t line_no = 0;
  LoadStats local;
  while (std::getline(source, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == opts.comment_prefix) continue;
    ++local.lines_read;

    std::istringstream ls(line);
    std::string s_tok, d_tok, p_tok;
    ls >> s_tok >> d_tok;
    if (d_tok.empty())
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'src dst [prob]'");
    RawEdge e;
    e.src = parse_id(s_tok, line_no);
    e.dst = parse_id(d_tok, line_no);
    if (ls >> p_tok) {
      e.prob = opts.uniform_prob ? *opts.uniform_prob
                                 : parse_prob(p_tok, line_no);
    } else if (opts.uniform_prob) {
      e.prob = *opts.uniform_prob;
    } else {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": no probability column and no uniform_prob");
    }
    edges.push_back(e);
    if (opts.undirected) edges.push_back({e.dst, e.src, e.prob});
  }

  // Compact sparse original ids to dense 0..n-1, ascending.
  std::set<std::uint64_t> ids;
  for (const RawEdge& e : edges) {
    ids.insert(e.src);
    ids.insert(e.dst);
  }
  std::vector<std::uint64_t> original_ids(ids.begin(), ids.end());
  std::unordered_map<std::uint64_t, VertexId> to_compact;
  to_compact.reserve(original_ids.size());
  for (VertexId v = 0; v < original_ids.size(); ++v)
    to_compact.emplace(original_ids[v], v);

  // Drop self-loops, dedupe keep-first in input order.
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const RawEdge& e : edges) {
    VertexId s = to_compact.at(e.src);
    VertexId d = to_compact.at(e.dst);
    if (s == d) {
      ++local.self_loops_dropped;
      continue;
    }
    if (!seen.emplace(s, d).second) {
      ++local.duplicates_dropped;
      continue;
    }
    arcs.push_back({s, d, e.prob});
  }
  if (stats) *stats = local;
  const VertexId n = static_cast<VertexId>(original_ids.size());
  return Graph::from_arcs(n, std::move(arcs), std::move(original_ids));
}

Graph load_edge_list_file(const std::string& path, const LoadOptions& opts,
                          LoadStats* stats) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return load_edge_list(in, opts, stats);
}

void serialize_graph(const Graph& g, std::ostream& out) {
  out << "# n=" << g.num_vertices() << " arcs=" << g.num_arcs() << "\n";
  char buf[64];
  for (const Arc& a : g.arcs()) {
    std::snprintf(buf, sizeof(buf), "%.17g", a.prob);
    out << g.original_id(a.src) << ' ' << g.original_id(a.dst) << ' ' << buf
        << "\n";
  }
}

}  // namespace imkit
