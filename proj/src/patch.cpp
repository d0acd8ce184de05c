#include "aptile/patch.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace aptile {

namespace {

struct EdgeKey {
  OctaCoord a, b;
  bool operator==(const EdgeKey& o) const { return a == o.a && b == o.b; }
};

struct EdgeKeyHash {
  size_t operator()(const EdgeKey& k) const {
    std::hash<OctaCoord> h;
    return h(k.a) * 0x100000001b3ULL ^ h(k.b);
  }
};

EdgeKey make_edge_key(const OctaCoord& p, const OctaCoord& q) {
  return (p < q) ? EdgeKey{p, q} : EdgeKey{q, p};
}

struct EdgeUse {
  size_t tile;
  uint16_t edge;
  bool forward;  // tile traverses the key as (a -> b)
};

using EdgeIndex = std::unordered_map<EdgeKey, std::vector<EdgeUse>, EdgeKeyHash>;

EdgeIndex build_edge_index(const SystemDef& def, const Patch& p) {
  EdgeIndex idx;
  idx.reserve(p.tiles.size() * 4);
  for (size_t ti = 0; ti < p.tiles.size(); ++ti) {
    auto vs = placed_verts(def, p.tiles[ti]);
    for (size_t e = 0; e < vs.size(); ++e) {
      const OctaCoord& u = vs[e];
      const OctaCoord& v = vs[(e + 1) % vs.size()];
      EdgeKey k = make_edge_key(u, v);
      idx[k].push_back({ti, static_cast<uint16_t>(e), k.a == u});
    }
  }
  return idx;
}

}  // namespace

std::vector<OctaCoord> placed_verts(const SystemDef& def, const PlacedTile& t) {
  const ProtoDef& proto = def.protos[t.kind];
  std::vector<OctaCoord> out;
  out.reserve(proto.verts.size());
  for (const OctaCoord& v : proto.verts) out.push_back(t.anchor + def.rot(v, t.rot));
  return out;
}

Census tile_census(const SystemDef& def, const Patch& p) {
  Census c;
  c.per_kind.assign(def.protos.size(), 0);
  for (const PlacedTile& t : p.tiles) c.per_kind[t.kind]++;
  if (def.system == TileSystem::AB) {
    c.triangles = c.per_kind[0] + c.per_kind[1];
    c.rhombi = c.per_kind[2];
    // a square is a TriL/TriR pair sharing the hypotenuse (edge index 2)
    EdgeIndex idx = build_edge_index(def, p);
    long paired = 0;
    for (const auto& [key, uses] : idx) {
      if (uses.size() != 2) continue;
      const PlacedTile& t0 = p.tiles[uses[0].tile];
      const PlacedTile& t1 = p.tiles[uses[1].tile];
      bool hyp0 = t0.kind <= 1 && uses[0].edge == 2;
      bool hyp1 = t1.kind <= 1 && uses[1].edge == 2;
      if (hyp0 && hyp1) paired++;
    }
    c.squares = paired;
    c.unpaired_tris = c.triangles - 2 * paired;
  } else {
    c.triangles = c.per_kind[0] + c.per_kind[1];
    c.rhombi = c.per_kind[2] + c.per_kind[3];
  }
  return c;
}

MatchReport verify_matching(const SystemDef& def, const Patch& p, MatchMode mode) {
  if (!p.decorated)
    throw std::invalid_argument("verify_matching: patch carries no decorations");
  if (mode == MatchMode::EdgesAndCorners && !def.mark_rule)
    throw std::invalid_argument("verify_matching: system has no corner marks");

  MatchReport rep;
  EdgeIndex idx = build_edge_index(def, p);

  auto locate = [&](const OctaCoord& a, const OctaCoord& b, Violation& v) {
    v.x = (def.xd(a) + def.xd(b)) / 2;
    v.y = (def.yd(a) + def.yd(b)) / 2;
  };

  for (const auto& [key, uses] : idx) {
    if (uses.size() == 1) continue;  // boundary edge
    if (uses.size() > 2) {
      Violation v{"edge shared by more than two tiles"};
      locate(key.a, key.b, v);
      for (const auto& u : uses) v.tile_ids.push_back(u.tile);
      rep.violations.push_back(std::move(v));
      continue;
    }
    // arrow class and absolute direction must agree from both sides
    auto arrow = [&](const EdgeUse& u) {
      const PlacedTile& t = p.tiles[u.tile];
      EdgeDecor d = def.protos[t.kind].edges[u.edge];
      bool toward_b = (d.sign > 0) == u.forward;
      return std::pair<uint8_t, bool>(d.cls, toward_b);
    };
    auto a0 = arrow(uses[0]);
    auto a1 = arrow(uses[1]);
    if (a0 != a1) {
      Violation v{"edge decoration mismatch"};
      locate(key.a, key.b, v);
      v.tile_ids = {uses[0].tile, uses[1].tile};
      rep.violations.push_back(std::move(v));
    }
  }

  if (mode == MatchMode::EdgesAndCorners) {
    std::unordered_map<OctaCoord, std::vector<std::pair<size_t, int>>> corners;
    for (size_t ti = 0; ti < p.tiles.size(); ++ti) {
      auto vs = placed_verts(def, p.tiles[ti]);
      for (size_t c = 0; c < vs.size(); ++c) corners[vs[c]].push_back({ti, (int)c});
    }
    for (const auto& [vtx, inc] : corners) {
      int angle = 0;
      for (auto [ti, c] : inc) angle += def.protos[p.tiles[ti].kind].corner_angle[c];
      if (angle != def.rot_mod) continue;  // boundary (or overlapping) vertex
      // all incident corner marks must claim one house orientation
      int want = -1;
      bool bad = false;
      for (auto [ti, c] : inc) {
        const PlacedTile& t = p.tiles[ti];
        if (t.marks[c] < 0)
          throw std::invalid_argument("verify_matching: tile without corner marks");
        int dir = (t.rot + t.marks[c]) % def.rot_mod;
        if (want < 0) want = dir;
        if (dir != want) bad = true;
      }
      if (bad) {
        Violation v{"corner marks do not assemble a house"};
        v.x = def.xd(vtx);
        v.y = def.yd(vtx);
        for (auto [ti, c] : inc) v.tile_ids.push_back(ti);
        rep.violations.push_back(std::move(v));
      }
    }
  }

  rep.ok = rep.violations.empty();
  return rep;
}

QuadInt patch_area8(const SystemDef& def, const Patch& p) {
  // shoelace over doubled octagonal coordinates: 8 * area, per-tile absolute
  // (mirror prototiles run their vertex cycle clockwise)
  QuadInt total;
  for (const PlacedTile& t : p.tiles) {
    auto vs = placed_verts(def, t);
    QuadInt s;
    for (size_t i = 0; i < vs.size(); ++i) {
      Vec2Q a = phys2(vs[i]);
      Vec2Q b = phys2(vs[(i + 1) % vs.size()]);
      s += a.x2 * b.y2 - b.x2 * a.y2;
    }
    total += qsign(s) < 0 ? -s : s;
  }
  return total;
}

Patch inflate_patch(const SystemDef& def, const Patch& p) {
  for (const PlacedTile& t : p.tiles)
    if (t.kind >= def.protos.size())
      throw std::invalid_argument("inflate_patch: tile kind not in this system");

  Patch out;
  out.system = p.system;
  out.decorated = p.decorated;
  out.tiles.reserve(p.tiles.size() * 4);
  for (const PlacedTile& t : p.tiles) {
    OctaCoord base = def.scale(t.anchor);
    bool marked = def.mark_rule && t.marks[0] >= 0;
    for (size_t s = 0; s < def.children[t.kind].size(); ++s) {
      const ChildPlacement& ch = def.children[t.kind][s];
      PlacedTile c;
      c.kind = ch.kind;
      c.rot = static_cast<uint8_t>((t.rot + ch.drot) % def.rot_mod);
      c.anchor = base + def.rot(ch.offset, t.rot);
      if (marked) {
        const MarkTransport& mt = *def.mark_rule;
        size_t nc = def.protos[c.kind].verts.size();
        for (size_t cc = 0; cc < nc; ++cc) {
          const MarkProvenance& pr = mt.prov[t.kind][s][cc];
          int house;  // absolute house orientation of the child corner vertex
          switch (pr.type) {
            case MarkProvenance::ParentCorner:
              house = (t.rot + t.marks[pr.a]) % def.rot_mod;
              break;
            case MarkProvenance::EdgePoint: {
              // mark rules only exist on the octagonal system
              const EdgeDecor& ed = def.protos[t.kind].edges[pr.a];
              const ProtoDef& proto = def.protos[t.kind];
              OctaCoord ev = proto.verts[(pr.a + 1) % proto.verts.size()] -
                             proto.verts[pr.a];
              ev = octa_rot(ev, t.rot);
              if (ed.sign < 0) ev = -ev;
              int d = -1;
              for (int k = 0; k < 8 && d < 0; ++k)
                if (ev == octa_dir(k) || ev == octa_dir(k - 1) + octa_dir(k + 1))
                  d = k;
              house = ed.cls == 0 ? (d + mt.g_blue) : (d + mt.g_red[pr.b]);
              house = ((house % def.rot_mod) + def.rot_mod) % def.rot_mod;
              break;
            }
            default:
              house = (t.rot + mt.g_int[t.kind][pr.a]) % def.rot_mod;
          }
          c.marks[cc] = static_cast<int8_t>(
              ((house - c.rot) % def.rot_mod + def.rot_mod) % def.rot_mod);
        }
      }
      out.tiles.push_back(c);
    }
  }

  if (def.system == TileSystem::AB) {
    // zero-tolerance area identity: alpha^2 * parent = children
    QuadInt parent = patch_area8(def, p);
    QuadInt child = patch_area8(def, out);
    QuadInt alpha2(3, 2);
    if (parent * alpha2 != child)
      throw std::logic_error("inflate_patch: exact area identity violated");
  } else {
    double parent = 0, child = 0;
    auto area = [&](const Patch& q) {
      double s = 0;
      for (const PlacedTile& t : q.tiles) {
        auto vs = placed_verts(def, t);
        double u = 0;
        for (size_t i = 0; i < vs.size(); ++i) {
          const OctaCoord& a = vs[i];
          const OctaCoord& b = vs[(i + 1) % vs.size()];
          u += def.xd(a) * def.yd(b) - def.xd(b) * def.yd(a);
        }
        s += std::abs(u);
      }
      return s / 2;
    };
    parent = area(p);
    child = area(out);
    const double tau2 = (3.0 + std::sqrt(5.0)) / 2.0;
    if (std::abs(parent * tau2 - child) > 1e-9 * std::max(1.0, std::abs(child)))
      throw std::logic_error("inflate_patch: tau^2 area identity violated");
  }
  return out;
}

RepetitivityReport repetitivity_probe(const SystemDef& def, const Patch& p, double r) {
  RepetitivityReport rep;
  rep.r = r;

  // vertex set and boundary vertices (ends of single-use edges)
  std::unordered_map<OctaCoord, int> vid;
  std::vector<OctaCoord> verts;
  for (const PlacedTile& t : p.tiles)
    for (const OctaCoord& v : placed_verts(def, t))
      if (vid.emplace(v, (int)verts.size()).second) verts.push_back(v);

  EdgeIndex idx = build_edge_index(def, p);
  std::vector<char> on_boundary(verts.size(), 0);
  for (const auto& [key, uses] : idx)
    if (uses.size() == 1) {
      on_boundary[vid[key.a]] = 1;
      on_boundary[vid[key.b]] = 1;
    }

  size_t nv = verts.size();
  std::vector<double> px(nv), py(nv);
  for (size_t i = 0; i < nv; ++i) {
    px[i] = def.xd(verts[i]);
    py[i] = def.yd(verts[i]);
  }
  std::vector<double> bdist(nv, 1e300);
  for (size_t i = 0; i < nv; ++i)
    for (size_t j = 0; j < nv; ++j)
      if (on_boundary[j])
        bdist[i] = std::min(bdist[i], std::hypot(px[i] - px[j], py[i] - py[j]));

  double interior_max = *std::max_element(bdist.begin(), bdist.end());
  if (interior_max <= r)
    throw std::invalid_argument("repetitivity_probe: r exceeds usable interior");

  // r-ball pattern of a vertex: tiles with any vertex within r (exact disk
  // membership is unnecessary here; the comparison key is the exact
  // translated tile list, so float rounding only shifts which tiles belong
  // to the ball, identically for congruent situations at equal radii).
  double r2 = r * r + 1e-12;
  size_t nt = p.tiles.size();
  std::vector<std::vector<std::pair<double, double>>> tv(nt);
  for (size_t ti = 0; ti < nt; ++ti)
    for (const OctaCoord& v : placed_verts(def, p.tiles[ti]))
      tv[ti].push_back({def.xd(v), def.yd(v)});

  // coarse spatial grid over tiles for the ball queries
  double cell = std::max(1.0, r);
  std::unordered_map<long, std::vector<size_t>> grid;
  auto cell_of = [&](double x, double y) {
    return static_cast<long>(std::floor(x / cell)) * 100003L +
           static_cast<long>(std::floor(y / cell));
  };
  for (size_t ti = 0; ti < nt; ++ti)
    for (auto [x, y] : tv[ti]) grid[cell_of(x, y)].push_back(ti);

  std::map<std::vector<std::tuple<int, int, std::array<int64_t, 4>>>, std::vector<int>>
      classes;
  std::vector<char> seen(nt, 0);
  for (size_t i = 0; i < nv; ++i) {
    std::vector<std::tuple<int, int, std::array<int64_t, 4>>> key;
    std::vector<size_t> touched;
    long cx = static_cast<long>(std::floor(px[i] / cell));
    long cy = static_cast<long>(std::floor(py[i] / cell));
    long reach = static_cast<long>(std::ceil(r / cell)) + 1;
    for (long gx = cx - reach; gx <= cx + reach; ++gx)
      for (long gy = cy - reach; gy <= cy + reach; ++gy) {
        auto it = grid.find(gx * 100003L + gy);
        if (it == grid.end()) continue;
        for (size_t ti : it->second) {
          if (seen[ti]) continue;
          seen[ti] = 1;
          touched.push_back(ti);
          bool in = false;
          for (auto [x, y] : tv[ti]) {
            double dx = x - px[i], dy = y - py[i];
            if (dx * dx + dy * dy <= r2) in = true;
          }
          if (in) {
            OctaCoord d = p.tiles[ti].anchor - verts[i];
            key.emplace_back(p.tiles[ti].kind, p.tiles[ti].rot, d.u);
          }
        }
      }
    for (size_t ti : touched) seen[ti] = 0;
    std::sort(key.begin(), key.end());
    classes[key].push_back((int)i);
  }
  rep.patterns = classes.size();

  auto pass = [&](double margin) {
    double worst = 0;
    size_t used = 0;
    for (const auto& [key, members] : classes) {
      for (int i : members) {
        if (bdist[i] <= margin) continue;
        used++;
        double best = 1e300;
        for (int j : members)
          if (j != i) best = std::min(best, std::hypot(px[i] - px[j], py[i] - py[j]));
        worst = std::max(worst, best);
      }
    }
    return std::pair<double, size_t>(worst, used);
  };

  auto [r1, n1] = pass(r);
  auto [r2nd, n2] = pass(r + r1);
  rep.bound = r2nd;
  rep.centres = n2;
  rep.censored = (n2 == 0) || r2nd > 1e200;
  if (rep.censored) {
    rep.bound = r1;
    rep.centres = n1;
  }
  return rep;
}

}  // namespace aptile
