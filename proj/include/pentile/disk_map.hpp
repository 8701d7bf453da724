#pragma once

#include <vector>

#include "pentile/core_map.hpp"
#include "pentile/iso.hpp"

namespace pentile {

// A filling of an m-gon: a spherical map together with the face playing the
// role of the disk's complement.
class DiskMap {
public:
    // Throws MapError(InvalidFace) when `outer` is not a face of `map`.
    DiskMap(SphericalMap map, Face outer);

    const SphericalMap& map() const noexcept { return map_; }
    Face outer() const noexcept { return outer_; }
    int boundary_length() const;
    int interior_face_count() const noexcept { return map_.face_count() - 1; }
    // Darts of the outer face in phi order.
    std::vector<Dart> boundary_darts() const;
    bool on_boundary(Vertex v) const;
    std::vector<Vertex> interior_vertices() const;
    std::vector<Vertex> boundary_vertices() const;

private:
    SphericalMap map_;
    Face outer_;
    std::vector<char> boundary_;  // per vertex index
};

// Interior faces are simple pentagons, the outer face is a simple cycle,
// interior vertices have degree >= 3 and boundary vertices degree >= 2.
// Rules: "face-length-5", "face-simple", "boundary-simple",
// "vertex-degree-3", "boundary-degree-2".
ValidationReport validate_disk(const DiskMap& disk);

// Canonical code up to homeomorphisms fixing the outer face (rotations and
// reflections of the boundary).
CanonicalCode canonical_code(const DiskMap& disk, bool include_reflections = true);
bool isomorphic(const DiskMap& a, const DiskMap& b, bool include_reflections = true);

}  // namespace pentile
