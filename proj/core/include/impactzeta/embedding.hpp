#pragma once

#include <optional>
#include <vector>

#include "impactzeta/building.hpp"
#include "impactzeta/lattice.hpp"

namespace impactzeta::padic {

// Building with m = p and the basin matching the case.
BuildingSpec building_spec(const CaseInstance& inst);

// A vertex together with a lattice basis whose class is that vertex.
// Frames are arranged so that the parent of span(c1, c2) is span(c2, p c1).
struct Frame {
  Vec2 c1;
  Vec2 c2;
  Basis basis() const { return Basis{c1, c2}; }
};

Frame anchor_frame(const CaseInstance& inst, int anchor);
// Frames of the children of a vertex, indexed by address letter.
std::vector<Frame> child_frames(const CaseInstance& inst, const Frame& f, bool at_anchor);

Frame vertex_frame(const CaseInstance& inst, const VertexAddr& v);
LatticeHNF vertex_lattice(const CaseInstance& inst, const VertexAddr& v);

// Address of the class of `basis`. Split anchors are searched in [-halfwidth, halfwidth];
// throws OutsideTruncation if the class lies beyond that window or above max_height.
VertexAddr locate_vertex(const CaseInstance& inst, const Basis& basis, unsigned halfwidth,
                         std::optional<unsigned> max_height = std::nullopt);

}  // namespace impactzeta::padic
