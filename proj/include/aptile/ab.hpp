#pragma once

#include "aptile/patch.hpp"

namespace aptile {

// Prototile ids of the octagonal (Ammann-Beenker) system.
enum AbKind : uint8_t { AbTriL = 0, AbTriR = 1, AbRhomb = 2 };

// Convention bits pinning the decorated substitution tables.  The values
// are locked by the derivation test: matching must pass on inflated
// patches and the exact area identity must hold; exactly one variant
// (up to global mirror) survives.
struct AbBits {
  bool hyp_sign;      // prototile hypotenuse arrow along the vertex cycle
  bool rh_flip;       // rhombus edge arrows obtuse->acute instead of reverse
  bool red_against;   // child hypotenuse arrows oppose the parent edge arrow
  bool mid_against;   // dito for the middle segment of a parent hypotenuse
  bool blue_against;  // child unit-edge arrows oppose the parent edge arrow
  bool rmid_flip;     // orientation of the interior child rhombus
  bool tl_mirror;     // mirrored dissection of the triangle parent
  bool rh_mirror;     // mirrored dissection of the rhombus parent
  bool operator==(const AbBits&) const = default;
};

// Decorated substitution system (children, arrows, corner houses).
const SystemDef& ab_system();

// Re-derives the convention bits by exhaustive search; equals the frozen
// constant used by ab_system().  Exposed for the regeneration test.
AbBits derive_ab_bits();
AbBits ab_frozen_bits();

// Builds the tables for one convention variant; empty when the variant
// cannot be realized.  House marks are left empty here.
std::optional<SystemDef> build_ab_tables(const AbBits& bits);

// Canonical seeds (placed inside the cut-and-project fixed tiling, so the
// star images of every inflation stay inside the octagonal window).
Patch ab_square_seed();
Patch ab_star_seed();

// n x n block of translated unit squares: periodic, edge-arrows legal,
// corner marks illegal.
Patch ab_all_squares(int n);

// n-fold inflation of a seed.
Patch ab_inflate(Patch p, int n);

}  // namespace aptile
