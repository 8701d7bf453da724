#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include "pentile/core_map.hpp"
#include "pentile/disk_map.hpp"

namespace pentile {

// Earth map family: meridian length and number of timezones.
struct FamilyTag {
    int distance = 0;
    int timezones = 0;
    auto operator<=>(const FamilyTag&) const = default;
};

enum class GeneratorErrorKind { DistanceOutOfRange, TooFewTimezones, InvalidFace, UnknownFixture };

class GeneratorError : public std::invalid_argument {
public:
    GeneratorError(GeneratorErrorKind kind, const std::string& detail);
    GeneratorErrorKind kind() const noexcept { return kind_; }

private:
    GeneratorErrorKind kind_;
};

std::string to_string(GeneratorErrorKind kind);

SphericalMap dodecahedron();

// Pole degree is t for d = 5 (t >= 4) and 3t for d <= 4 (t >= 2).
SphericalMap earth_map(int distance, int timezones);
int earth_map_face_count(int distance, int timezones);

// The distance-2 tiling assembled from timezones delimited by the length-3
// pole-to-pole path instead of the meridian.
SphericalMap earth_map_via_meridian_3prime(int timezones);

// Eighteen tiles, three degree-4 vertices at mutual distance 3.
SphericalMap three_v4_example();

// Deletes tile_a from a and tile_b from b and glues the two boundaries.
// rotation in [0, 5) shifts the seam along tile_b; reflect glues the mirror of b.
SphericalMap connected_sum(const SphericalMap& a, Face tile_a, const SphericalMap& b, Face tile_b,
                           int rotation, bool reflect);

enum class DiskKind { Octagon, Nonagon, DodecaMinusTile, SinglePentagon };

DiskKind parse_disk_kind(const std::string& name);
std::string to_string(DiskKind kind);
DiskMap disk_fixture(DiskKind kind);

}  // namespace pentile
