#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace impactzeta {

enum class BasinKind { Unramified, Ramified, Split };

std::string_view basin_name(BasinKind k);
BasinKind parse_basin(std::string_view s);

class BuildingSpec {
 public:
  BuildingSpec(BasinKind kind, unsigned m);

  // m = 1 line (unramified or ramified basin only); used by tests.
  static BuildingSpec line(BasinKind kind);

  BasinKind kind() const { return kind_; }
  unsigned m() const { return m_; }

  // Number of admissible letters at word position 0 and at later positions.
  unsigned first_letters() const;
  unsigned later_letters() const { return m_; }

  bool operator==(const BuildingSpec& o) const { return kind_ == o.kind_ && m_ == o.m_; }

 private:
  BuildingSpec(BasinKind kind, unsigned m, bool) : kind_(kind), m_(m) {}
  BasinKind kind_;
  unsigned m_;
};

// Anchor encoding: Unramified 0 = O0; Ramified 0 = O0, -1 = piO0; Split j = Õ_j.
struct VertexAddr {
  int anchor = 0;
  std::vector<std::uint32_t> word;

  std::size_t height() const { return word.size(); }
  bool operator==(const VertexAddr& o) const { return anchor == o.anchor && word == o.word; }
  bool operator<(const VertexAddr& o) const {
    if (word.size() != o.word.size()) return word.size() < o.word.size();
    if (anchor != o.anchor) return anchor < o.anchor;
    return word < o.word;
  }
};

struct VertexAddrHash {
  std::size_t operator()(const VertexAddr& v) const noexcept;
};

std::string vertex_to_string(BasinKind kind, const VertexAddr& v);
VertexAddr parse_vertex(BasinKind kind, std::string_view s);

VertexAddr way_out_vertex(const BuildingSpec& spec, unsigned n);

// Closed-form tree distance from the two addresses.
unsigned address_distance(const VertexAddr& u, const VertexAddr& v);

bool is_valid_address(const BuildingSpec& spec, const VertexAddr& v);

// All neighbours of v in the infinite building (split: every Õ_j exists).
std::vector<VertexAddr> neighbors(const BuildingSpec& spec, const VertexAddr& v);

class TruncatedTree {
 public:
  static constexpr int kComplete = 1 << 30;

  const BuildingSpec& spec() const { return spec_; }
  unsigned radius() const { return radius_; }
  unsigned halfwidth() const { return halfwidth_; }

  std::size_t size() const { return vertices_.size(); }
  const std::vector<VertexAddr>& vertices() const { return vertices_; }
  const VertexAddr& vertex(std::size_t i) const { return vertices_[i]; }
  const std::vector<std::uint32_t>& adjacent(std::size_t i) const { return adj_[i]; }

  // Smallest height of a neighbour omitted by the truncation, or kComplete.
  int missing_min_height(std::size_t i) const { return missing_[i]; }

  bool contains(const VertexAddr& v) const { return index_.count(v) != 0; }
  std::size_t index_of(const VertexAddr& v) const;

  unsigned height(const VertexAddr& v) const;
  unsigned distance(const VertexAddr& u, const VertexAddr& v) const;
  unsigned bfs_distance(const VertexAddr& u, const VertexAddr& v) const;
  // Graph distances from vertex index `from`; -1 for unreachable (never in a tree).
  std::vector<int> bfs_from(std::size_t from) const;

  std::vector<VertexAddr> layer_members(unsigned n) const;
  std::map<unsigned, std::size_t> layer_sizes() const;

  std::string to_dot() const;

 private:
  friend TruncatedTree build_truncated(const BuildingSpec&, unsigned, unsigned);
  TruncatedTree(const BuildingSpec& spec, unsigned r, unsigned hw)
      : spec_(spec), radius_(r), halfwidth_(hw) {}

  BuildingSpec spec_;
  unsigned radius_;
  unsigned halfwidth_;
  std::vector<VertexAddr> vertices_;
  std::unordered_map<VertexAddr, std::size_t, VertexAddrHash> index_;
  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<int> missing_;
};

// Vertex cap, read from IMPACTZETA_MAX_VERTICES (default 4,000,000).
std::size_t max_tree_vertices();

TruncatedTree build_truncated(const BuildingSpec& spec, unsigned radius,
                              unsigned apartment_halfwidth = 0);

}  // namespace impactzeta
