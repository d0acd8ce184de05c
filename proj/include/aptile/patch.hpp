#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "aptile/octa.hpp"

namespace aptile {

enum class TileSystem : uint8_t { AB, Penrose };

// AB kinds: 0 = TriL (ccw half-square), 1 = TriR (mirror), 2 = Rhomb.
// Penrose kinds: 0 = HalfFatL, 1 = HalfFatR, 2 = HalfSkinnyL, 3 = HalfSkinnyR.
//
// marks: per-corner house directions relative to the tile frame (AB only,
// -1 when absent).  They carry hierarchical information and are transported
// by the inflation, not reconstructible from the local geometry.
struct PlacedTile {
  uint8_t kind = 0;
  uint8_t rot = 0;        // mod 8 (AB) or mod 10 (Penrose)
  OctaCoord anchor;       // module coordinates (octagonal or pentagonal)
  std::array<int8_t, 4> marks{-1, -1, -1, -1};

  bool operator==(const PlacedTile& o) const {
    return kind == o.kind && rot == o.rot && anchor == o.anchor && marks == o.marks;
  }
};

struct Patch {
  TileSystem system = TileSystem::AB;
  bool decorated = true;
  std::vector<PlacedTile> tiles;
};

// Edge decoration: arrow class plus direction along the vertex cycle.
struct EdgeDecor {
  uint8_t cls = 0;
  int8_t sign = 1;  // +1: arrow from v_i to v_{i+1}; -1: reverse
};

struct ProtoDef {
  std::vector<OctaCoord> verts;   // rot 0, anchor 0
  std::vector<EdgeDecor> edges;   // one per edge (v_i, v_{i+1})
  std::vector<int> corner_angle;  // interior angle in units of 360/rot_mod
};

struct ChildPlacement {
  uint8_t kind;
  uint8_t drot;
  OctaCoord offset;  // in the inflated rot-0 parent frame
};

// Where a child corner vertex comes from within its inflated parent; this
// drives the corner-mark transport.
struct MarkProvenance {
  enum Type : uint8_t { ParentCorner, EdgePoint, Interior } type;
  uint8_t a = 0;  // parent corner / edge / interior point index
  uint8_t b = 0;  // junction ordinal along the edge arrow
};

struct MarkTransport {
  // prov[kind][slot][child corner]
  std::vector<std::vector<std::vector<MarkProvenance>>> prov;
  int g_blue = 0;                       // house offset at unit-edge junctions
  std::array<int, 2> g_red{0, 0};       // dito for the two hypotenuse junctions
  std::vector<std::vector<int>> g_int;  // per kind, per interior point
};

// Substitution system: prototiles, decorations, child tables and the exact
// module actions (rotation and inflation scaling).
struct SystemDef {
  TileSystem system;
  int rot_mod;
  std::vector<ProtoDef> protos;
  std::vector<std::vector<ChildPlacement>> children;
  std::optional<MarkTransport> mark_rule;
  OctaCoord (*rot)(const OctaCoord&, int);
  OctaCoord (*scale)(const OctaCoord&);
  // physical embedding (doubles; exact identity is the module coordinate)
  double (*xd)(const OctaCoord&);
  double (*yd)(const OctaCoord&);
};

std::vector<OctaCoord> placed_verts(const SystemDef& def, const PlacedTile& t);

struct Census {
  std::vector<long> per_kind;
  long triangles = 0;      // AB: TriL + TriR
  long rhombi = 0;         // AB rhombi / Penrose: skinny halves
  long squares = 0;        // AB: hypotenuse-paired triangle pairs
  long unpaired_tris = 0;  // AB triangles without a hypotenuse partner
};

Census tile_census(const SystemDef& def, const Patch& p);

enum class MatchMode { EdgesOnly, EdgesAndCorners };

struct Violation {
  std::string what;
  double x = 0, y = 0;           // location of the offending edge/corner
  std::vector<size_t> tile_ids;  // tiles involved
};

struct MatchReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// Checks arrow agreement on every interior edge; with EdgesAndCorners also
// checks that the corner marks of every fully surrounded vertex agree on a
// single house orientation.  Throws if the patch is undecorated or the
// system has no corner marks in corner mode.
MatchReport verify_matching(const SystemDef& def, const Patch& p, MatchMode mode);

// Substitute every tile by its children; exact area conservation is checked
// (scale^2 * parent area = child area, zero tolerance on the AB module).
Patch inflate_patch(const SystemDef& def, const Patch& p);

// Empirical repetitivity bound: for every translation class of r-ball vertex
// patterns, the largest distance from a pattern centre to its nearest
// recurrence.  Censoring is avoided by restricting to centres farther than
// the first-pass bound from the patch boundary.
struct RepetitivityReport {
  double r = 0;
  double bound = 0;           // max over centres of nearest-recurrence distance
  size_t patterns = 0;        // distinct pattern classes seen
  size_t centres = 0;         // eligible centres
  bool censored = false;      // no eligible interior centres remained
};

RepetitivityReport repetitivity_probe(const SystemDef& def, const Patch& p, double r);

// Exact signed area of the whole patch, times 8, on the octagonal module.
QuadInt patch_area8(const SystemDef& def, const Patch& p);

}  // namespace aptile
