#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pentile/core_map.hpp"
#include "pentile/disk_map.hpp"

namespace pentile {

enum class FaceKind : std::uint8_t { Tile, Hole, Outer };

// One step of a tile boundary inside a hole, between two positions of the
// hole walk. chord_edges == 0 follows the hole edge from `from` to from + 1;
// otherwise a path of chord_edges new edges crosses the hole.
struct Segment {
    int from = 0;
    int to = 0;
    int chord_edges = 0;
};

// A tile to be placed in the hole containing `start`. Positions index the
// hole walk beginning at `start`; position m (the walk length) is `start`
// again. The first segment is always the hole edge 0 -> 1.
struct TileSpec {
    Dart start = -1;
    std::vector<Segment> segments;
};

// A map under construction: every face is a finished tile, an unfilled hole,
// or the fixed outer face of a disk. Darts come in pairs, alpha(d) = d ^ 1.
class PartialTiling {
public:
    // One tile surrounded by a single hole of length 5.
    static PartialTiling pentagon();
    // An m-cycle whose face through dart 0 is the outer face; the other side
    // is a hole.
    static PartialTiling polygon(int m);

    int dart_count() const noexcept { return static_cast<int>(sigma_.size()); }
    int vertex_count() const noexcept { return static_cast<int>(degree_.size()); }
    int tile_count() const noexcept { return tiles_; }
    int hole_dart_count() const noexcept { return hole_darts_; }
    bool complete() const noexcept { return hole_darts_ == 0; }

    Dart sigma(Dart d) const { return sigma_[d]; }
    Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
    static Dart alpha(Dart d) { return d ^ 1; }
    Dart phi(Dart d) const { return sigma_[d ^ 1]; }

    FaceKind kind(Dart d) const { return kind_[d]; }
    int vertex(Dart d) const { return vertex_[d]; }
    int degree(int v) const { return degree_[v]; }
    bool on_outer(int v) const { return outer_[v] != 0; }
    int hole_corners(int v) const { return hole_corners_[v]; }
    // Sum over vertices of max(0, degree - 3).
    int excess() const noexcept { return excess_; }
    // Outer-face vertices of degree > 3.
    int high_boundary() const noexcept { return high_boundary_; }

    // Darts of the face through d in phi order, starting at d.
    std::vector<Dart> walk(Dart d) const;
    // One representative dart per hole, in increasing dart order.
    std::vector<Dart> holes() const;

    // Applies the tile; throws std::logic_error if it does not close into a
    // pentagon.
    void place_tile(const TileSpec& spec);

    SphericalMap to_map() const;
    // Only for states built from polygon().
    DiskMap to_disk() const;

private:
    void insert_before(Dart pos, Dart d);
    int new_vertex(bool outer);
    Dart new_edge(int tail, int head);
    void bump_degree(int v);

    std::vector<Dart> sigma_;
    std::vector<Dart> sigma_inv_;
    std::vector<int> vertex_;
    std::vector<FaceKind> kind_;
    std::vector<int> degree_;
    std::vector<int> hole_corners_;
    std::vector<std::uint8_t> outer_;
    int tiles_ = 0;
    int hole_darts_ = 0;
    int excess_ = 0;
    int high_boundary_ = 0;
    bool has_outer_ = false;
};

struct ClosureContradiction {
    std::string reason;
};
struct ClosureUndetermined {};

using ClosureResult = std::variant<PartialTiling, ClosureContradiction, ClosureUndetermined>;

// `seed` is a run of consecutive darts along one hole whose inner vertices
// receive no further edges inside that hole. The tile on the hole side must
// contain the whole run; returns the state with that tile placed when it is
// the entire hole, a contradiction when no pentagon can contain the run, and
// Undetermined otherwise. Throws std::invalid_argument if `seed` is not such a run.
ClosureResult forced_tile_closure(const PartialTiling& partial, std::span<const Dart> seed);

}  // namespace pentile
