#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pentile/core_map.hpp"
#include "pentile/disk_map.hpp"

namespace pentile {

// In-memory form of a map file. outer_face_dart marks a disk filling.
struct MapFile {
    SphericalMap map;
    std::optional<Dart> outer_face_dart;
    std::map<std::string, std::string> metadata;

    bool is_disk() const noexcept { return outer_face_dart.has_value(); }
    DiskMap disk() const;
};

MapFile make_file(SphericalMap map, std::map<std::string, std::string> metadata = {});
MapFile make_file(const DiskMap& disk, std::map<std::string, std::string> metadata = {});

// Relabels into the minimal BFS numbering; for disks the root is taken on the
// outer face so that equal disks give identical files.
MapFile canonicalized(const MapFile& file);

// {"version": 1, "vertices": [[dart, ...], ...], "pairing": [...],
//  "metadata": {...}, "outer_face_dart": d}
std::string write_json(const MapFile& file, bool pretty = true);
// Throws MapError(MalformedInput) on bad syntax or schema, and the usual
// MapError kinds when the permutations do not form a genus-0 map.
MapFile read_json(std::string_view text);

inline constexpr std::string_view kPlanarCodeHeader = ">>pentile_planar_code le<<";

// Per map: uint16 vertex count, then for each vertex the entries
// alpha(d) + 1 for its darts in counterclockwise order followed by 0. Darts
// are numbered consecutively in listing order. All values little-endian.
std::string write_planar_code(std::span<const SphericalMap> maps, bool with_header = true);
std::vector<SphericalMap> read_planar_code(std::string_view bytes);

// Undirected multigraph dump: one node per vertex, one edge statement per edge.
std::string write_dot(const SphericalMap& map, std::string_view name = "tiling");

// Dispatches on the planar-code header; otherwise parses JSON. A planar-code
// stream must hold exactly one map here.
MapFile read_map_file(std::string_view contents);

}  // namespace pentile
