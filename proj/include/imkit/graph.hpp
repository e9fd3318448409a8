#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace imkit {

using VertexId = std::uint32_t;

struct Arc {
  VertexId src = 0;
  VertexId dst = 0;
  double prob = 0.0;
};

struct LoadOptions {
  bool undirected = false;
  std::optional<double> uniform_prob;  // overrides any per-line probability
  char comment_prefix = '#';
};

struct LoadStats {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
  std::size_t lines_read = 0;
};

// Immutable directed graph with per-arc propagation probability.
// Vertex ids are compacted to 0..n-1 (ascending original id); the original
// ids are kept for reporting. Arcs are stored sorted by (src, dst), so the
// out-adjacency of a vertex is one contiguous span. A second index holds
// arc ids sorted by (dst, src) for in-neighbor iteration.
class Graph {
 public:
  Graph() = default;

  // arcs must use compact ids < n. Self-loops and duplicate (src,dst)
  // pairs are rejected here; the loader handles dropping them.
  static Graph from_arcs(VertexId n, std::vector<Arc> arcs,
                         std::vector<std::uint64_t> original_ids = {});

  VertexId num_vertices() const { return n_; }
  std::size_t num_arcs() const { return arcs_.size(); }

  std::span<const Arc> arcs() const { return arcs_; }
  const Arc& arc(std::uint32_t arc_id) const { return arcs_[arc_id]; }

  // Out-arcs of v, ascending dst.
  std::span<const Arc> out_arcs(VertexId v) const;

  // Arc ids with dst = v, ascending src.
  std::span<const std::uint32_t> in_arc_ids(VertexId v) const;

  // (src, prob) pairs of the arcs entering v, ascending src.
  std::vector<std::pair<VertexId, double>> in_neighbors(VertexId v) const;

  std::size_t out_degree(VertexId v) const;

  const std::vector<std::uint64_t>& original_ids() const {
    return original_ids_;
  }
  std::uint64_t original_id(VertexId v) const { return original_ids_[v]; }
  std::optional<VertexId> compact_id(std::uint64_t original) const;

  void check_vertex(VertexId v) const;  // throws ValidationError if v >= n

 private:
  VertexId n_ = 0;
  std::vector<Arc> arcs_;                   // sorted by (src, dst)
  std::vector<std::uint32_t> out_offsets_;  // size n+1
  std::vector<std::uint32_t> in_arc_ids_;   // arc ids sorted by (dst, src)
  std::vector<std::uint32_t> in_offsets_;   // size n+1
  std::vector<std::uint64_t> original_ids_;
  std::unordered_map<std::uint64_t, VertexId> id_map_;
};

// Parses whitespace-separated lines "src dst [prob]". Lines starting with
// opts.comment_prefix are skipped. Original ids are compacted; with
// opts.undirected each edge yields two arcs. Self-loops are dropped and
// duplicate (src,dst) pairs deduplicated keep-first, both counted in stats.
Graph load_edge_list(std::istream& source, const LoadOptions& opts,
                     LoadStats* stats = nullptr);

Graph load_edge_list_file(const std::string& path, const LoadOptions& opts,
                          LoadStats* stats = nullptr);

// Text fixture format: "# n=<n> arcs=<m>" header followed by one
// "src dst prob" line per arc in original ids. load_edge_list reads it back.
void serialize_graph(const Graph& g, std::ostream& out);

}  // namespace imkit
