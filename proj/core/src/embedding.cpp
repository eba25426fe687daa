#include "impactzeta/embedding.hpp"

#include <limits>

#include "impactzeta/error.hpp"

namespace impactzeta::padic {

namespace {

mpz_class ppow(unsigned p, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

Vec2 scaled(const Vec2& v, const mpz_class& s) { return Vec2{v[0] * s, v[1] * s}; }

Vec2 plus(const Vec2& a, const Vec2& b) { return Vec2{a[0] + b[0], a[1] + b[1]}; }

}  // namespace

BuildingSpec building_spec(const CaseInstance& inst) {
  return BuildingSpec(orders::basin_of(inst.tag()), inst.p());
}

Frame anchor_frame(const CaseInstance& inst, int anchor) {
  const unsigned p = inst.p();
  switch (inst.tag()) {
    case CaseTag::Unramified:
      if (anchor != 0) break;
      return Frame{Vec2{1, 0}, Vec2{0, 1}};
    case CaseTag::Ramified:
      if (anchor == 0) return Frame{Vec2{1, 0}, Vec2{0, 1}};
      // pi O_0 = Delta O_0
      if (anchor == -1) return Frame{Vec2{0, 1}, elem_times(inst, Vec2{0, 1}, Vec2{0, 1})};
      break;
    case CaseTag::Split: {
      // g = (1, p^j) in components (scaled by p^{-j} for j < 0), in (1, Delta) coordinates.
      mpz_class c1, c2;
      if (anchor >= 0) {
        c1 = 1;
        c2 = ppow(p, static_cast<unsigned>(anchor));
      } else {
        c1 = ppow(p, static_cast<unsigned>(-anchor));
        c2 = 1;
      }
      mpz_class y;
      mpz_divexact_ui(y.get_mpz_t(), mpz_class(c2 - c1).get_mpz_t(), p - 1);
      Vec2 g{c1 - y, y};
      return Frame{g, elem_times(inst, Vec2{0, 1}, g)};
    }
  }
  throw Error(Errc::UnknownVertex, "no basin anchor " + std::to_string(anchor));
}

std::vector<Frame> child_frames(const CaseInstance& inst, const Frame& f, bool at_anchor) {
  const unsigned p = inst.p();
  const mpz_class pp = p;
  const Vec2 pc1 = scaled(f.c1, pp);
  auto n_t = [&](unsigned t) { return Frame{plus(scaled(f.c1, t), f.c2), pc1}; };
  std::vector<Frame> out;
  out.push_back(Frame{f.c1, scaled(f.c2, pp)});  // N_inf
  if (!at_anchor) {
    for (unsigned t = 1; t < p; ++t) out.push_back(n_t(t));
    return out;
  }
  // At a basin vertex the remaining neighbours N_t are those off the basin.
  unsigned last = p;
  if (inst.tag() == CaseTag::Split) last = p - 1;
  for (unsigned t = 1; t < last; ++t) out.push_back(n_t(t));
  if (inst.tag() == CaseTag::Unramified) out.push_back(n_t(0));
  return out;
}

Frame vertex_frame(const CaseInstance& inst, const VertexAddr& v) {
  Frame f = anchor_frame(inst, v.anchor);
  for (std::size_t i = 0; i < v.word.size(); ++i) {
    auto kids = child_frames(inst, f, i == 0);
    if (v.word[i] >= kids.size())
      throw Error(Errc::UnknownVertex, "letter " + std::to_string(v.word[i]) + " out of range");
    f = kids[v.word[i]];
  }
  return f;
}

LatticeHNF vertex_lattice(const CaseInstance& inst, const VertexAddr& v) {
  return hnf_from_basis(inst.p(), vertex_frame(inst, v).basis());
}

VertexAddr locate_vertex(const CaseInstance& inst, const Basis& basis, unsigned halfwidth,
                         std::optional<unsigned> max_height) {
  const unsigned p = inst.p();
  std::vector<int> anchors;
  switch (inst.tag()) {
    case CaseTag::Unramified: anchors = {0}; break;
    case CaseTag::Ramified: anchors = {0, -1}; break;
    case CaseTag::Split:
      for (int j = -static_cast<int>(halfwidth) - 1; j <= static_cast<int>(halfwidth) + 1; ++j)
        anchors.push_back(j);
      break;
  }
  int best = 0;
  unsigned h = std::numeric_limits<unsigned>::max();
  for (int a : anchors) {
    unsigned d = lattice_distance(p, anchor_frame(inst, a).basis(), basis);
    if (d < h) {
      h = d;
      best = a;
    }
  }
  if (inst.tag() == CaseTag::Split && std::abs(best) > static_cast<int>(halfwidth))
    throw Error(Errc::OutsideTruncation, "lattice class projects outside the apartment window");
  if (max_height && h > *max_height)
    throw Error(Errc::OutsideTruncation, "lattice class has height " + std::to_string(h));

  VertexAddr v{best, {}};
  Frame f = anchor_frame(inst, best);
  for (unsigned level = 1; level <= h; ++level) {
    auto kids = child_frames(inst, f, level == 1);
    bool found = false;
    for (std::uint32_t i = 0; i < kids.size(); ++i) {
      if (lattice_distance(p, kids[i].basis(), basis) == h - level) {
        v.word.push_back(i);
        f = kids[i];
        found = true;
        break;
      }
    }
    if (!found) throw Error(Errc::UnknownVertex, "descent lost the geodesic");
  }
  return v;
}

}  // namespace impactzeta::padic
