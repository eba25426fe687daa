#include "impactzeta/building.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <sstream>

#include "impactzeta/error.hpp"

namespace impactzeta {

std::string_view basin_name(BasinKind k) {
  switch (k) {
    case BasinKind::Unramified: return "unramified";
    case BasinKind::Ramified: return "ramified";
    case BasinKind::Split: return "split";
  }
  return "?";
}

BasinKind parse_basin(std::string_view s) {
  if (s == "unramified") return BasinKind::Unramified;
  if (s == "ramified") return BasinKind::Ramified;
  if (s == "split") return BasinKind::Split;
  throw Error(Errc::InvalidArgument, "unknown basin '" + std::string(s) + "'");
}

BuildingSpec::BuildingSpec(BasinKind kind, unsigned m) : kind_(kind), m_(m) {
  if (m < 2) throw Error(Errc::InvalidArgument, "branching parameter m must be at least 2");
}

BuildingSpec BuildingSpec::line(BasinKind kind) {
  if (kind == BasinKind::Split)
    throw Error(Errc::InvalidArgument, "the m = 1 line has no split basin");
  return BuildingSpec(kind, 1, true);
}

unsigned BuildingSpec::first_letters() const {
  switch (kind_) {
    case BasinKind::Unramified: return m_ + 1;
    case BasinKind::Ramified: return m_;
    case BasinKind::Split: return m_ - 1;
  }
  return 0;
}

std::size_t VertexAddrHash::operator()(const VertexAddr& v) const noexcept {
  std::size_t h = std::hash<int>()(v.anchor) * 0x9e3779b97f4a7c15ull;
  for (auto c : v.word) h = (h ^ c) * 0x100000001b3ull + 0x9e37;
  return h;
}

std::string vertex_to_string(BasinKind kind, const VertexAddr& v) {
  std::ostringstream os;
  switch (kind) {
    case BasinKind::Unramified: os << "O0"; break;
    case BasinKind::Ramified: os << (v.anchor == 0 ? "O0" : "piO0"); break;
    case BasinKind::Split: os << 'A' << v.anchor; break;
  }
  for (std::size_t i = 0; i < v.word.size(); ++i) os << (i == 0 ? '/' : '.') << v.word[i];
  return os.str();
}

VertexAddr parse_vertex(BasinKind kind, std::string_view s) {
  auto bad = [&] { return Error(Errc::InvalidArgument, "bad vertex address '" + std::string(s) + "'"); };
  VertexAddr v;
  auto slash = s.find('/');
  std::string_view head = s.substr(0, slash);
  if (kind == BasinKind::Split) {
    if (head.size() < 2 || head[0] != 'A') throw bad();
    auto r = std::from_chars(head.data() + 1, head.data() + head.size(), v.anchor);
    if (r.ec != std::errc() || r.ptr != head.data() + head.size()) throw bad();
  } else if (head == "O0") {
    v.anchor = 0;
  } else if (head == "piO0" && kind == BasinKind::Ramified) {
    v.anchor = -1;
  } else {
    throw bad();
  }
  if (slash == std::string_view::npos) return v;
  std::string_view rest = s.substr(slash + 1);
  while (!rest.empty()) {
    auto dot = rest.find('.');
    std::string_view tok = rest.substr(0, dot);
    std::uint32_t c = 0;
    auto r = std::from_chars(tok.data(), tok.data() + tok.size(), c);
    if (tok.empty() || r.ec != std::errc() || r.ptr != tok.data() + tok.size()) throw bad();
    v.word.push_back(c);
    if (dot == std::string_view::npos) break;
    rest = rest.substr(dot + 1);
    if (rest.empty()) throw bad();
  }
  return v;
}

VertexAddr way_out_vertex(const BuildingSpec&, unsigned n) {
  return VertexAddr{0, std::vector<std::uint32_t>(n, 0)};
}

unsigned address_distance(const VertexAddr& u, const VertexAddr& v) {
  const unsigned lu = static_cast<unsigned>(u.word.size());
  const unsigned lv = static_cast<unsigned>(v.word.size());
  if (u.anchor != v.anchor) return lu + lv + static_cast<unsigned>(std::abs(u.anchor - v.anchor));
  unsigned common = 0;
  while (common < lu && common < lv && u.word[common] == v.word[common]) ++common;
  return lu + lv - 2 * common;
}

bool is_valid_address(const BuildingSpec& spec, const VertexAddr& v) {
  switch (spec.kind()) {
    case BasinKind::Unramified:
      if (v.anchor != 0) return false;
      break;
    case BasinKind::Ramified:
      if (v.anchor != 0 && v.anchor != -1) return false;
      break;
    case BasinKind::Split: break;
  }
  for (std::size_t i = 0; i < v.word.size(); ++i) {
    unsigned limit = i == 0 ? spec.first_letters() : spec.later_letters();
    if (v.word[i] >= limit) return false;
  }
  return true;
}

std::vector<VertexAddr> neighbors(const BuildingSpec& spec, const VertexAddr& v) {
  std::vector<VertexAddr> out;
  if (!v.word.empty()) {
    VertexAddr parent = v;
    parent.word.pop_back();
    out.push_back(std::move(parent));
  } else if (spec.kind() == BasinKind::Ramified) {
    out.push_back(VertexAddr{v.anchor == 0 ? -1 : 0, {}});
  } else if (spec.kind() == BasinKind::Split) {
    out.push_back(VertexAddr{v.anchor - 1, {}});
    out.push_back(VertexAddr{v.anchor + 1, {}});
  }
  unsigned letters = v.word.empty() ? spec.first_letters() : spec.later_letters();
  for (std::uint32_t c = 0; c < letters; ++c) {
    VertexAddr child = v;
    child.word.push_back(c);
    out.push_back(std::move(child));
  }
  return out;
}

std::size_t TruncatedTree::index_of(const VertexAddr& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw Error(Errc::UnknownVertex, vertex_to_string(spec_.kind(), v));
  return it->second;
}

unsigned TruncatedTree::height(const VertexAddr& v) const {
  index_of(v);
  return static_cast<unsigned>(v.word.size());
}

unsigned TruncatedTree::distance(const VertexAddr& u, const VertexAddr& v) const {
  index_of(u);
  index_of(v);
  return address_distance(u, v);
}

std::vector<int> TruncatedTree::bfs_from(std::size_t from) const {
  std::vector<int> dist(vertices_.size(), -1);
  std::deque<std::uint32_t> queue;
  dist[from] = 0;
  queue.push_back(static_cast<std::uint32_t>(from));
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (auto y : adj_[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

unsigned TruncatedTree::bfs_distance(const VertexAddr& u, const VertexAddr& v) const {
  auto d = bfs_from(index_of(u));
  return static_cast<unsigned>(d[index_of(v)]);
}

std::vector<VertexAddr> TruncatedTree::layer_members(unsigned n) const {
  if (n > radius_)
    throw Error(Errc::RadiusTooSmall,
                "layer " + std::to_string(n) + " beyond radius " + std::to_string(radius_));
  std::vector<VertexAddr> out;
  for (const auto& v : vertices_)
    if (v.word.size() == n) out.push_back(v);
  return out;
}

std::map<unsigned, std::size_t> TruncatedTree::layer_sizes() const {
  std::map<unsigned, std::size_t> out;
  for (unsigned h = 0; h <= radius_; ++h) out[h] = 0;
  for (const auto& v : vertices_) ++out[static_cast<unsigned>(v.word.size())];
  return out;
}

std::string TruncatedTree::to_dot() const {
  std::ostringstream os;
  os << "graph building {\n";
  os << "  // basin=" << basin_name(spec_.kind()) << " m=" << spec_.m() << " radius=" << radius_;
  if (spec_.kind() == BasinKind::Split) os << " halfwidth=" << halfwidth_;
  os << "\n";
  for (const auto& v : vertices_) {
    os << "  \"" << vertex_to_string(spec_.kind(), v) << "\" [label=\"" << v.word.size() << "\"";
    if (v.word.empty()) os << ", shape=box";
    os << "];\n";
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (auto j : adj_[i])
      if (i < j)
        os << "  \"" << vertex_to_string(spec_.kind(), vertices_[i]) << "\" -- \""
           << vertex_to_string(spec_.kind(), vertices_[j]) << "\";\n";
  os << "}\n";
  return os.str();
}

std::size_t max_tree_vertices() {
  if (const char* env = std::getenv("IMPACTZETA_MAX_VERTICES")) {
    std::size_t v = 0;
    std::string_view s(env);
    auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec == std::errc() && r.ptr == s.data() + s.size() && v > 0) return v;
  }
  return 4'000'000;
}

TruncatedTree build_truncated(const BuildingSpec& spec, unsigned radius,
                              unsigned apartment_halfwidth) {
  std::vector<int> anchors;
  switch (spec.kind()) {
    case BasinKind::Unramified: anchors = {0}; break;
    case BasinKind::Ramified: anchors = {-1, 0}; break;
    case BasinKind::Split:
      if (apartment_halfwidth < radius)
        throw Error(Errc::InvalidArgument, "split truncation needs halfwidth >= radius");
      for (int j = -static_cast<int>(apartment_halfwidth); j <= static_cast<int>(apartment_halfwidth); ++j)
        anchors.push_back(j);
      break;
  }

  const std::size_t cap = max_tree_vertices();
  {
    // Size check before allocating anything.
    long double per_anchor = 1, level = spec.first_letters();
    for (unsigned h = 1; h <= radius; ++h) {
      per_anchor += level;
      level *= spec.later_letters();
    }
    if (per_anchor * anchors.size() > static_cast<long double>(cap))
      throw Error(Errc::LimitExceeded, "truncated tree exceeds " + std::to_string(cap) + " vertices");
  }

  TruncatedTree t(spec, radius, spec.kind() == BasinKind::Split ? apartment_halfwidth : 0);
  for (int a : anchors) t.vertices_.push_back(VertexAddr{a, {}});
  std::size_t begin = 0;
  for (unsigned h = 1; h <= radius; ++h) {
    std::size_t end = t.vertices_.size();
    for (std::size_t i = begin; i < end; ++i) {
      unsigned letters = h == 1 ? spec.first_letters() : spec.later_letters();
      for (std::uint32_t c = 0; c < letters; ++c) {
        VertexAddr child = t.vertices_[i];
        child.word.push_back(c);
        t.vertices_.push_back(std::move(child));
      }
    }
    begin = end;
  }

  t.index_.reserve(t.vertices_.size());
  for (std::size_t i = 0; i < t.vertices_.size(); ++i) t.index_.emplace(t.vertices_[i], i);
  t.adj_.resize(t.vertices_.size());
  t.missing_.assign(t.vertices_.size(), TruncatedTree::kComplete);
  for (std::size_t i = 0; i < t.vertices_.size(); ++i) {
    for (auto& nb : neighbors(spec, t.vertices_[i])) {
      auto it = t.index_.find(nb);
      if (it != t.index_.end()) {
        t.adj_[i].push_back(static_cast<std::uint32_t>(it->second));
      } else {
        t.missing_[i] = std::min<int>(t.missing_[i], static_cast<int>(nb.word.size()));
      }
    }
  }
  return t;
}

}  // namespace impactzeta
