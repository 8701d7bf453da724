#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pentile {

using Dart = std::int32_t;

// A vertex, identified by the smallest dart id in its sigma-orbit.
struct Vertex {
    Dart id = -1;
    auto operator<=>(const Vertex&) const = default;
};

// An edge, identified by the smaller of its two darts.
struct Edge {
    Dart id = -1;
    auto operator<=>(const Edge&) const = default;
};

// A face, identified by the smallest dart id in its phi-orbit.
struct Face {
    Dart id = -1;
    auto operator<=>(const Face&) const = default;
};

enum class MapErrorKind {
    NonInvolutivePairing,
    DuplicateDart,
    DartOutOfRange,
    Disconnected,
    NonZeroGenus,
    VertexOutOfRange,
    InvalidFace,
    NotPentagonal,
    MalformedInput,
};

std::string to_string(MapErrorKind kind);

class MapError : public std::runtime_error {
public:
    MapError(MapErrorKind kind, const std::string& detail);
    MapErrorKind kind() const noexcept { return kind_; }

private:
    MapErrorKind kind_;
};

// Oriented combinatorial map of genus 0.
//
// sigma(d) is the next dart counterclockwise around the vertex of d, alpha(d)
// is the opposite dart of the same edge, and phi(d) = sigma(alpha(d)) walks a
// face. With this convention a face is traversed with the face on the right.
// Instances are immutable once built; every accessor is O(1).
class SphericalMap {
public:
        static SphericalMap from_permutations(std::vector<Dart> sigma, std::vector<Dart> alpha);

    int dart_count() const noexcept { return static_cast<int>(sigma_.size()); }
    int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
    int edge_count() const noexcept { return dart_count() / 2; }
    int face_count() const noexcept { return static_cast<int>(faces_.size()); }

    Dart sigma(Dart d) const { return sigma_[d]; }
    Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
    Dart alpha(Dart d) const { return alpha_[d]; }
    Dart phi(Dart d) const { return sigma_[alpha_[d]]; }

    Vertex vertex_of(Dart d) const { return Vertex{vertex_rep_[d]}; }
    Edge edge_of(Dart d) const { return Edge{std::min(d, alpha_[d])}; }
    Face face_of(Dart d) const { return Face{face_rep_[d]}; }

    // Dense ordinal of a vertex in [0, V), ordered by vertex id.
    int vertex_index(Vertex v) const;
    int vertex_index_of(Dart d) const { return vertex_index_[d]; }
    int face_index(Face f) const;
    int face_index_of(Dart d) const { return face_index_[d]; }
    // Position of d in the sigma cycle of its vertex, counted from the vertex id dart.
    int rotation_index(Dart d) const { return rotation_index_[d]; }

    bool is_vertex(Vertex v) const;
    bool is_face(Face f) const;

    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    const std::vector<Face>& face_ids() const noexcept { return faces_; }

    int degree(Vertex v) const;
    int degree_of(Dart d) const { return degree_[vertex_index_[d]]; }
    // Darts leaving v in counterclockwise order, starting at the vertex id dart.
    std::vector<Dart> darts_around(Vertex v) const;
        std::vector<Dart> face_darts(Face f) const;

    const std::vector<Dart>& sigma_table() const noexcept { return sigma_; }
    const std::vector<Dart>& alpha_table() const noexcept { return alpha_; }

    bool operator==(const SphericalMap& other) const {
        return sigma_ == other.sigma_ && alpha_ == other.alpha_;
    }

private:
    SphericalMap() = default;

    std::vector<Dart> sigma_;
    std::vector<Dart> sigma_inv_;
    std::vector<Dart> alpha_;
    std::vector<Dart> vertex_rep_;
    std::vector<Dart> face_rep_;
    std::vector<int> vertex_index_;
    std::vector<int> face_index_;
    std::vector<int> rotation_index_;
    std::vector<int> degree_;
    std::vector<Vertex> vertices_;
    std::vector<Face> faces_;
};

// Builds a map from per-vertex counterclockwise dart lists and the edge pairing.
SphericalMap build_from_rotations(const std::vector<std::vector<Dart>>& neighbor_lists,
                                  const std::vector<Dart>& pairing);

// Builds a map of a simple graph given counterclockwise neighbor vertex lists.
// Vertex i's darts are numbered consecutively in list order.
SphericalMap build_from_adjacency(const std::vector<std::vector<int>>& neighbors_ccw);

// One corner of a face listing: the face passes through `vertex` and then
// along the edge labelled `edge_tag` to the next corner's vertex. Tags only
// need to differ between parallel edges.
struct FaceCorner {
    int vertex = 0;
    int edge_tag = 0;
};

// Builds a map from face boundary cycles given as vertex labels. Faces are
// oriented automatically (their listed direction is irrelevant); darts are
// numbered in face order after orientation, face by face.
SphericalMap build_from_faces(const std::vector<std::vector<FaceCorner>>& faces);
SphericalMap build_from_faces(const std::vector<std::vector<int>>& faces);

SphericalMap mirror(const SphericalMap& map);

// Relabels darts: dart d of `map` becomes dart perm[d].
SphericalMap relabel(const SphericalMap& map, std::span<const Dart> perm);

std::vector<std::vector<Dart>> faces(const SphericalMap& map);

struct DegreeHistogram {
    std::map<int, int> counts;

    int count(int degree) const {
        auto it = counts.find(degree);
        return it == counts.end() ? 0 : it->second;
    }
    long long degree_sum() const;
    bool operator==(const DegreeHistogram&) const = default;
};

DegreeHistogram degree_histogram(const SphericalMap& map);

struct Violation {
    std::string rule;  // "face-length-5", "face-simple", "vertex-degree-3"
    Dart witness = -1;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool is_valid() const noexcept { return violations.empty(); }
};

// Checks the pentagonal tiling conditions: every face is a simple closed
// path of five edges and every vertex has degree at least three.
ValidationReport validate_pentagonal(const SphericalMap& map);

// v3 = 20 + sum_{i>=4} (3i - 10) v_i and F = 12 + 2 sum_{i>=4} (i - 3) v_i.
bool check_counting_identities(const SphericalMap& map);
bool check_counting_identities(const DegreeHistogram& histogram, int face_count);

// Shortest edge-path length between two vertices. Throws VertexOutOfRange.
int graph_distance(const SphericalMap& map, Vertex u, Vertex v);

// BFS distances from `source` indexed by vertex_index.
std::vector<int> distances_from(const SphericalMap& map, Vertex source);

std::vector<Vertex> high_degree_vertices(const SphericalMap& map);

}  // namespace pentile
