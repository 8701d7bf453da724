#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pentile/core_map.hpp"

namespace pentile {

// Labeling-independent fingerprint. Each entry of the underlying BFS record
// is stored as two big-endian bytes.
struct CanonicalCode {
    std::vector<std::uint8_t> bytes;

    std::string hex() const;
    static CanonicalCode from_hex(std::string_view text);

    auto operator<=>(const CanonicalCode&) const = default;
};

enum class Orientation { Direct, Mirrored };

// BFS code of the map seen from `root`. Mirrored walks rotations clockwise.
CanonicalCode code_at(const SphericalMap& map, Dart root, Orientation orientation);

// Minimum of code_at over every root dart, and over both orientations when
// include_reflections is set.
CanonicalCode canonical_code(const SphericalMap& map, bool include_reflections = true);

// Minimum over an explicit set of (root, orientation) pairs.
struct RootChoice {
    Dart root;
    Orientation orientation;
};
CanonicalCode min_code_over(const SphericalMap& map, std::span<const RootChoice> roots);

bool isomorphic(const SphericalMap& a, const SphericalMap& b, bool include_reflections = true);

// Independent check: fixes one dart of `a` and tries every image in `b`,
// propagating the assignment along sigma and alpha.
bool isomorphic_by_matching(const SphericalMap& a, const SphericalMap& b,
                            bool include_reflections = true);

// Dart numbering induced by the BFS from (root, orientation): dart d becomes perm[d].
std::vector<Dart> bfs_numbering(const SphericalMap& map, Dart root, Orientation orientation);

// Relabels darts so that the map reads in its minimal orientation-preserving
// BFS order. Two maps related by an orientation-preserving isomorphism yield
// identical permutation tables.
SphericalMap canonical_relabel(const SphericalMap& map);

}  // namespace pentile
