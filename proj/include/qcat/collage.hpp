#ifndef QCAT_COLLAGE_HPP
#define QCAT_COLLAGE_HPP

#include <string>
#include <vector>

#include "qcat/category.hpp"
#include "qcat/module.hpp"

namespace qcat {

enum class Side { Left, Right };

/// The collage of M : D -|-> E. Left objects come from E, right objects from
/// D. Homs from left to right are M, homs from right to left are bottom.
struct Collage {
  VCategory category;
  std::vector<Side> partition;
};

/// Label prefixes that keep the two blocks apart.
inline constexpr const char* kLeftPrefix = "L:";
inline constexpr const char* kRightPrefix = "R:";

/// Block category [[E, M], [bottom, D]] with E first. Throws InputError
/// listing the action violations if M is not a valid module.
Collage collage(const VModule& m);

/// Recovers the generating module from a collage. Left and right blocks
/// become E and D (prefixes stripped) and the left-to-right block becomes
/// the matrix. Throws InputError if the partition is malformed.
VModule restrict(const Collage& c);

/// Category on E plus a new object `label`, with hom(P, *) = M(P),
/// hom(*, Q) = N(Q) and hom(*, *) = unit. For M : I -|-> E, N : E -|-> I.
///
/// Requires the counit M(P) (x) N(Q) <= E(P, Q) and, for the loop through an
/// existing object, N(P) (x) M(P) <= unit. Throws InputError otherwise.
VCategory adjoin_point(const VModule& m, const VModule& n, const std::string& label = "*");

}  // namespace qcat

#endif
