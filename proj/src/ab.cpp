#include "aptile/ab.hpp"

#include <optional>
#include <stdexcept>

namespace aptile {

namespace {

OctaCoord C(int64_t a, int64_t b, int64_t c, int64_t d) { return {a, b, c, d}; }
const OctaCoord kO{};

int dir_index(const OctaCoord& d) {
  for (int k = 0; k < 8; ++k)
    if (d == octa_dir(k)) return k;
  return -1;
}

// sqrt(2) * D_k = D_{k-1} + D_{k+1}
OctaCoord sqrt2_dir(int k) { return octa_dir(k - 1) + octa_dir(k + 1); }

ProtoDef make_tri(bool left, bool hyp_sign) {
  ProtoDef p;
  OctaCoord a1 = octa_dir(0);
  p.verts = {kO, a1, a1 + octa_dir(left ? 2 : 6)};
  p.edges = {{0, +1}, {0, +1}, {1, static_cast<int8_t>(hyp_sign ? +1 : -1)}};
  p.corner_angle = {1, 2, 1};
  return p;
}

ProtoDef make_rhomb(bool flip) {
  ProtoDef p;
  p.verts = {kO, octa_dir(0), octa_dir(0) + octa_dir(1), octa_dir(1)};
  // arrows run between obtuse and acute corners (both obtuse corners play
  // the same role); `flip` reverses all of them
  if (!flip)
    p.edges = {{0, -1}, {0, +1}, {0, -1}, {0, +1}};  // out of W1 and W3
  else
    p.edges = {{0, +1}, {0, -1}, {0, +1}, {0, -1}};
  p.corner_angle = {1, 3, 1, 3};
  return p;
}

// Absolute arrow vector (unit direction) of edge i of a placed tile.
OctaCoord edge_arrow_vec(const SystemDef& def, const PlacedTile& t, size_t i) {
  auto vs = placed_verts(def, t);
  const EdgeDecor& d = def.protos[t.kind].edges[i];
  OctaCoord v = vs[(i + 1) % vs.size()] - vs[i];
  return d.sign > 0 ? v : -v;
}

// Decorated triangle through hypotenuse ends x,y with right angle at apex,
// whose hypotenuse arrow points toward `toward` (one of x, y).
std::optional<PlacedTile> identify_tri(const OctaCoord& x, const OctaCoord& y,
                                       const OctaCoord& apex, const OctaCoord& toward,
                                       bool hyp_sign) {
  std::optional<PlacedTile> found;
  for (const OctaCoord& q : {x, y}) {
    const OctaCoord& other = (q == x) ? y : x;
    int r = dir_index(apex - q);
    if (r < 0) continue;
    for (uint8_t kind : {uint8_t(AbTriL), uint8_t(AbTriR)}) {
      int off = (kind == AbTriL) ? 2 : 6;
      if (q + octa_dir(r) + octa_dir(r + off) != other) continue;
      // hyp arrow head: sign + means arrow v2 -> v0 (anchor)
      const OctaCoord& head = hyp_sign ? q : other;
      if (head == toward) {
        if (found) return std::nullopt;  // ambiguous, should not happen
        found = PlacedTile{kind, static_cast<uint8_t>(r), q};
      }
    }
  }
  return found;
}

// Rhombus given as a ccw cycle with acute corners at indices 0 and 2;
// two decorated representations (anchored at either acute corner).
std::optional<PlacedTile> rh_rep(const std::array<OctaCoord, 4>& cyc, bool at2) {
  const OctaCoord& a = at2 ? cyc[2] : cyc[0];
  const OctaCoord& w1 = at2 ? cyc[3] : cyc[1];
  const OctaCoord& w3 = at2 ? cyc[1] : cyc[3];
  int r = dir_index(w1 - a);
  if (r < 0) return std::nullopt;
  if (w3 - a != octa_dir(r + 1)) return std::nullopt;
  return PlacedTile{AbRhomb, static_cast<uint8_t>(r), a};
}

struct TriSpec {
  OctaCoord x, y, apex;
  int pedge;
};
struct RhSpec {
  std::array<OctaCoord, 4> cyc;
  int pedge;  // -1: interior
  OctaCoord sa, sb;
};

struct ChildBuild {
  std::vector<TriSpec> tris;
  std::vector<RhSpec> rhs;
};

// Geometric dissection data in the frame of the inflated rot-0 parent,
// read off the cut-and-project fixed tiling (faces of M cap octagon inside
// the alpha-image of a placed prototile).
ChildBuild tl_children_geom() {
  ChildBuild b;
  b.tris = {
      {C(1, 0, 0, 0), C(1, 1, 0, -1), C(1, 1, 0, 0), 0},
      {C(1, 1, 1, 0), C(0, 1, 0, 0), C(1, 1, 0, 0), 2},
      {C(1, 1, 1, -1), C(1, 2, 1, 0), C(1, 1, 1, 0), 1},
  };
  b.rhs = {
      {{C(1, 1, 0, 0), C(0, 1, 0, 0), C(0, 0, 0, 0), C(1, 0, 0, 0)}, 2,
       C(0, 1, 0, 0), C(0, 0, 0, 0)},
      {{C(1, 1, 0, -1), C(1, 1, 1, -1), C(1, 1, 1, 0), C(1, 1, 0, 0)}, 1,
       C(1, 1, 0, -1), C(1, 1, 1, -1)},
  };
  return b;
}

ChildBuild rh_children_geom() {
  ChildBuild b;
  b.tris = {
      {C(2, 1, 1, -1), C(1, 1, 0, -1), C(1, 1, 1, -1), 1},
      {C(1, 2, 1, -1), C(1, 1, 1, 0), C(1, 1, 1, -1), 2},
      {C(1, 1, 0, -1), C(1, 0, 0, 0), C(1, 1, 0, 0), 0},
      {C(0, 1, 0, 0), C(1, 1, 1, 0), C(1, 1, 0, 0), 3},
  };
  b.rhs = {
      {{C(2, 2, 1, -1), C(1, 2, 1, -1), C(1, 1, 1, -1), C(2, 1, 1, -1)}, 2,
       C(2, 2, 1, -1), C(1, 2, 1, -1)},
      {{C(1, 1, 1, 0), C(1, 1, 0, 0), C(1, 1, 0, -1), C(1, 1, 1, -1)}, -1, kO, kO},
      {{C(1, 1, 0, 0), C(0, 1, 0, 0), C(0, 0, 0, 0), C(1, 0, 0, 0)}, 3,
       C(0, 1, 0, 0), C(0, 0, 0, 0)},
  };
  return b;
}

// Reflect a dissection through the parent's own mirror symmetry; gives the
// other admissible dissection of the same parent.
ChildBuild mirror_dissection(const ChildBuild& in, bool rhomb) {
  // triangle parent: reflect across the bisector through the right angle:
  //   v -> alpha (a1+a3) + (-u3, -u2, -u1, u4); parent edges 0 <-> 1
  // rhombus parent: reflect across the short diagonal (W1-W3):
  //   v -> (W1 + W3) + (-u2, -u1, u4, u3); parent edges 0<->1, 2<->3
  OctaCoord t = rhomb ? C(2, 2, 1, -1) : octa_mul_alpha(C(1, 0, 1, 0));
  auto m = [&](const OctaCoord& v) -> OctaCoord {
    if (rhomb) return t + OctaCoord{-v[1], -v[0], v[3], v[2]};
    return t + OctaCoord{-v[2], -v[1], -v[0], v[3]};
  };
  auto pe = [&](int e) {
    if (e < 0) return e;
    if (rhomb) return e ^ 1;            // 0<->1, 2<->3
    return e == 2 ? 2 : (e ^ 1);        // 0<->1, hyp fixed
  };
  ChildBuild out;
  for (const TriSpec& ts : in.tris)
    out.tris.push_back({m(ts.x), m(ts.y), m(ts.apex), pe(ts.pedge)});
  for (const RhSpec& rs : in.rhs) {
    RhSpec r;
    r.cyc = {m(rs.cyc[0]), m(rs.cyc[3]), m(rs.cyc[2]), m(rs.cyc[1])};
    r.pedge = pe(rs.pedge);
    r.sa = m(rs.sa);
    r.sb = m(rs.sb);
    out.rhs.push_back(r);
  }
  return out;
}

// Arrow vector on parent edge `pedge` of kind `pkind` (rot 0).
OctaCoord parent_arrow(const SystemDef& def, uint8_t pkind, int pedge) {
  PlacedTile par{pkind, 0, kO};
  return edge_arrow_vec(def, par, pedge);
}

// Direction index of a unit or sqrt2-length module vector.
int arrow_dir_index(const OctaCoord& v) {
  for (int k = 0; k < 8; ++k)
    if (v == octa_dir(k) || v == sqrt2_dir(k)) return k;
  return -1;
}

std::optional<std::vector<ChildPlacement>> build_children(const SystemDef& def,
                                                          uint8_t pkind,
                                                          const ChildBuild& geom,
                                                          const AbBits& bits) {
  std::vector<ChildPlacement> out;
  for (const TriSpec& ts : geom.tris) {
    int pdir = arrow_dir_index(parent_arrow(def, pkind, ts.pedge));
    if (pdir < 0) return std::nullopt;
    // head end of the hypotenuse segment along the parent arrow
    int k = -1;
    for (int d = 0; d < 8; ++d)
      if (ts.y - ts.x == sqrt2_dir(d)) k = d;
    if (k < 0) return std::nullopt;
    OctaCoord head, tail;
    if (pdir == k) {
      head = ts.y;
      tail = ts.x;
    } else if (pdir == (k + 4) % 8) {
      head = ts.x;
      tail = ts.y;
    } else {
      return std::nullopt;
    }
    bool red_edge = def.protos[pkind].edges[ts.pedge].cls == 1;
    bool against = red_edge ? bits.mid_against : bits.red_against;
    OctaCoord toward = against ? tail : head;
    auto t = identify_tri(ts.x, ts.y, ts.apex, toward, bits.hyp_sign);
    if (!t) return std::nullopt;
    out.push_back({t->kind, t->rot, t->anchor});
  }
  for (const RhSpec& rs : geom.rhs) {
    if (rs.pedge < 0) {
      auto t = rh_rep(rs.cyc, bits.rmid_flip);
      if (!t) return std::nullopt;
      out.push_back({t->kind, t->rot, t->anchor});
      continue;
    }
    int pdir = arrow_dir_index(parent_arrow(def, pkind, rs.pedge));
    if (pdir < 0) return std::nullopt;
    OctaCoord want = octa_dir(bits.blue_against ? pdir + 4 : pdir);
    std::optional<PlacedTile> chosen;
    for (bool at2 : {false, true}) {
      auto t = rh_rep(rs.cyc, at2);
      if (!t || chosen) continue;
      auto vs = placed_verts(def, *t);
      for (size_t e = 0; e < 4; ++e) {
        const OctaCoord& p = vs[e];
        const OctaCoord& q = vs[(e + 1) % 4];
        if ((p == rs.sa && q == rs.sb) || (p == rs.sb && q == rs.sa)) {
          if (edge_arrow_vec(def, *t, e) == want) chosen = *t;
        }
      }
    }
    if (!chosen) return std::nullopt;
    out.push_back({chosen->kind, chosen->rot, chosen->anchor});
  }
  return out;
}

OctaCoord mirror_c(const OctaCoord& v) { return {v[0], -v[3], -v[2], -v[1]}; }

std::optional<PlacedTile> mirror_placed(const SystemDef& def, const PlacedTile& t,
                                        const AbBits&) {
  if (t.kind != AbRhomb) {
    return PlacedTile{t.kind == AbTriL ? uint8_t(AbTriR) : uint8_t(AbTriL),
                      static_cast<uint8_t>((8 - t.rot) % 8), mirror_c(t.anchor)};
  }
  // the arrowed rhombus is 180-degree symmetric, so either acute-corner
  // representation of the mirrored shape carries the same decoration
  auto vs = placed_verts(def, t);
  std::array<OctaCoord, 4> cyc = {mirror_c(vs[0]), mirror_c(vs[3]), mirror_c(vs[2]),
                                  mirror_c(vs[1])};
  if (auto r = rh_rep(cyc, false)) return r;
  return rh_rep(cyc, true);
}

bool validate_ab(const SystemDef& def) {
  Patch sq;
  sq.system = TileSystem::AB;
  sq.tiles = {{AbTriL, 0, kO}, {AbTriR, 2, kO}};
  Patch rh;
  rh.system = TileSystem::AB;
  rh.tiles = {{AbRhomb, 0, kO}};
  try {
    for (Patch* seed : {&sq, &rh}) {
      Patch p = *seed;
      for (int i = 0; i < 3; ++i) {
        p = inflate_patch(def, p);
        if (!verify_matching(def, p, MatchMode::EdgesOnly).ok) return false;
      }
    }
  } catch (const std::logic_error&) {
    return false;
  }
  return true;
}


// Classify every child corner vertex of every rule slot: inherited parent
// corner, new point on a parent edge (with its ordinal along the edge
// arrow), or new interior point.  This table drives the corner-mark
// transport.
std::vector<std::vector<std::vector<MarkProvenance>>> build_provenance(
    const SystemDef& def) {
  std::vector<std::vector<std::vector<MarkProvenance>>> prov(def.protos.size());
  for (size_t k = 0; k < def.protos.size(); ++k) {
    const ProtoDef& pp = def.protos[k];
    size_t nv = pp.verts.size();
    std::vector<OctaCoord> pc;
    for (const OctaCoord& v : pp.verts) pc.push_back(octa_mul_alpha(v));

    auto cross2 = [](const Vec2Q& a, const Vec2Q& b) {
      return a.x2 * b.y2 - b.x2 * a.y2;
    };
    auto dot2 = [](const Vec2Q& a, const Vec2Q& b) {
      return a.x2 * b.x2 + a.y2 * b.y2;
    };
    // strictly interior point of segment [A, B]?
    auto on_edge = [&](const OctaCoord& v, const OctaCoord& A, const OctaCoord& B) {
      Vec2Q w = phys2(v - A), u = phys2(B - A);
      if (!cross2(w, u).is_zero()) return false;
      return qsign(dot2(w, u)) > 0 && qsign(dot2(phys2(v - B), u)) < 0;
    };

    // collect child corner vertices and pre-classify the shared points
    std::vector<OctaCoord> interior;
    std::vector<std::vector<OctaCoord>> junctions(nv);  // per edge, along arrow
    for (const auto& ch : def.children[k]) {
      for (const OctaCoord& v :
           placed_verts(def, PlacedTile{ch.kind, ch.drot, ch.offset})) {
        bool handled = false;
        for (size_t i = 0; i < nv && !handled; ++i)
          if (v == pc[i]) handled = true;
        for (size_t e = 0; e < nv && !handled; ++e)
          if (on_edge(v, pc[e], pc[(e + 1) % nv])) {
            auto& js = junctions[e];
            if (std::find(js.begin(), js.end(), v) == js.end()) js.push_back(v);
            handled = true;
          }
        if (!handled &&
            std::find(interior.begin(), interior.end(), v) == interior.end())
          interior.push_back(v);
      }
    }
    for (size_t e = 0; e < nv; ++e) {
      // order junctions along the edge arrow
      bool along = pp.edges[e].sign > 0;
      OctaCoord A = pc[e], B = pc[(e + 1) % nv];
      std::sort(junctions[e].begin(), junctions[e].end(),
                [&](const OctaCoord& x, const OctaCoord& y) {
                  Vec2Q u = phys2(B - A);
                  QuadInt dx = u.x2 * phys2(x - A).x2 + u.y2 * phys2(x - A).y2;
                  QuadInt dy = u.x2 * phys2(y - A).x2 + u.y2 * phys2(y - A).y2;
                  return along ? qsign(dx - dy) < 0 : qsign(dx - dy) > 0;
                });
    }
    std::sort(interior.begin(), interior.end());

    prov[k].resize(def.children[k].size());
    for (size_t s = 0; s < def.children[k].size(); ++s) {
      const auto& ch = def.children[k][s];
      auto vs = placed_verts(def, PlacedTile{ch.kind, ch.drot, ch.offset});
      for (const OctaCoord& v : vs) {
        MarkProvenance mp;
        bool found = false;
        for (size_t i = 0; i < nv && !found; ++i)
          if (v == pc[i]) {
            mp = {MarkProvenance::ParentCorner, static_cast<uint8_t>(i), 0};
            found = true;
          }
        for (size_t e = 0; e < nv && !found; ++e) {
          for (size_t j = 0; j < junctions[e].size(); ++j)
            if (v == junctions[e][j]) {
              mp = {MarkProvenance::EdgePoint, static_cast<uint8_t>(e),
                    static_cast<uint8_t>(j)};
              found = true;
            }
        }
        if (!found) {
          auto it = std::find(interior.begin(), interior.end(), v);
          if (it == interior.end())
            throw std::logic_error("mark provenance: unclassified child vertex");
          mp = {MarkProvenance::Interior,
                static_cast<uint8_t>(it - interior.begin()), 0};
        }
        prov[k][s].push_back(mp);
      }
    }
  }
  return prov;
}

}  // namespace

std::optional<SystemDef> build_ab_tables(const AbBits& bits) {
  SystemDef def;
  def.system = TileSystem::AB;
  def.rot_mod = 8;
  def.protos = {make_tri(true, bits.hyp_sign), make_tri(false, bits.hyp_sign),
                make_rhomb(bits.rh_flip)};
  def.rot = octa_rot;
  def.scale = octa_mul_alpha;
  def.xd = phys_xd;
  def.yd = phys_yd;

  ChildBuild tl_geom = tl_children_geom();
  if (bits.tl_mirror) tl_geom = mirror_dissection(tl_geom, false);
  ChildBuild rh_geom = rh_children_geom();
  if (bits.rh_mirror) rh_geom = mirror_dissection(rh_geom, true);
  auto tl = build_children(def, AbTriL, tl_geom, bits);
  if (!tl) return std::nullopt;
  auto rh = build_children(def, AbRhomb, rh_geom, bits);
  if (!rh) return std::nullopt;
  std::vector<ChildPlacement> tr;
  for (const ChildPlacement& c : *tl) {
    auto m = mirror_placed(def, PlacedTile{c.kind, c.drot, c.offset}, bits);
    if (!m) return std::nullopt;
    tr.push_back({m->kind, m->rot, m->anchor});
  }
  def.children = {*tl, tr, *rh};

  MarkTransport mt;
  mt.prov = build_provenance(def);
  mt.g_blue = 0;
  mt.g_red = {0, 4};
  mt.g_int.resize(3);
  for (int k = 0; k < 3; ++k) {
    size_t n_int = 0;
    for (const auto& slot : mt.prov[k])
      for (const MarkProvenance& mp : slot)
        if (mp.type == MarkProvenance::Interior) n_int = std::max<size_t>(n_int, mp.a + 1);
    mt.g_int[k].assign(n_int, 0);
  }
  def.mark_rule = std::move(mt);
  return def;
}

AbBits derive_ab_bits() {
  for (int mask = 0; mask < 256; ++mask) {
    AbBits b{bool(mask & 1),  bool(mask & 2),  bool(mask & 4),  bool(mask & 8),
             bool(mask & 16), bool(mask & 32), bool(mask & 64), bool(mask & 128)};
    auto def = build_ab_tables(b);
    if (def && validate_ab(*def)) return b;
  }
  throw std::logic_error("no consistent AB decoration variant found");
}

AbBits ab_frozen_bits() {
  // derived once by derive_ab_bits(); the regeneration test keeps it honest
  return AbBits{false, true, true, true, false, false, false, false};
}

const SystemDef& ab_system() {
  static const SystemDef def = [] {
    auto d = build_ab_tables(ab_frozen_bits());
    if (!d || !validate_ab(*d))
      throw std::logic_error("frozen AB tables failed validation");
    return *d;
  }();
  return def;
}

Patch ab_inflate(Patch p, int n) {
  const SystemDef& def = ab_system();
  for (int i = 0; i < n; ++i) p = inflate_patch(def, p);
  return p;
}

Patch ab_square_seed() {
  // the unit square of the cut-and-project fixed tiling closest to the
  // origin; the cut runs along the x axis from (1,0) to (alpha,0).
  // Corner marks encode the house orientations at the four seed vertices
  // (0 at the cut tail, 1 at the cut head, 2 and 3 at the apexes).
  Patch p;
  p.system = TileSystem::AB;
  PlacedTile tl{AbTriL, 3, C(1, 1, 0, -1)};
  PlacedTile tr{AbTriR, 5, C(1, 1, 0, -1)};
  tl.marks = {5, 7, 6, -1};  // A0 = cut tail, A1 = inner apex, A2 = cut head
  tr.marks = {3, 6, 4, -1};
  p.tiles = {tl, tr};
  return p;
}

Patch ab_star_seed() {
  // the eightfold rhombus star at the origin (a patch of the fixed tiling;
  // the arrowed rhombus is 180-degree symmetric, so the star is consistent)
  Patch p;
  p.system = TileSystem::AB;
  for (int k = 0; k < 8; ++k) {
    PlacedTile t{AbRhomb, static_cast<uint8_t>(k), kO};
    t.marks = {static_cast<int8_t>((8 - k) % 8), 0, 0, 1};
    p.tiles.push_back(t);
  }
  return p;
}

Patch ab_all_squares(int n) {
  // translated copies of the marked seed square; edge arrows match
  // everywhere, the corner marks cannot
  Patch seed = ab_square_seed();
  Patch p;
  p.system = TileSystem::AB;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      OctaCoord base{0, i, 0, -j};  // i * a2 + j * D7
      for (PlacedTile t : seed.tiles) {
        t.anchor = t.anchor + base;
        p.tiles.push_back(t);
      }
    }
  return p;
}

}  // namespace aptile
