#include "pentile/partial_tiling.hpp"

#include <algorithm>
#include <stdexcept>

namespace pentile {

PartialTiling PartialTiling::pentagon() {
    PartialTiling p;
    const int m = 5;
    for (int i = 0; i < m; ++i) p.new_vertex(false);
    for (int i = 0; i < m; ++i) p.new_edge(i, (i + 1) % m);
    for (int i = 0; i < m; ++i) {
        const Dart in = 2 * i + 1;              // v_{i+1} -> v_i
        const Dart out = 2 * ((i + 1) % m);     // v_{i+1} -> v_{i+2}
        p.sigma_[in] = out;
        p.sigma_[out] = in;
        p.sigma_inv_[out] = in;
        p.sigma_inv_[in] = out;
        p.kind_[2 * i] = FaceKind::Tile;
        p.kind_[2 * i + 1] = FaceKind::Hole;
    }
    for (int v = 0; v < m; ++v) {
        p.degree_[v] = 2;
        p.hole_corners_[v] = 1;
    }
    p.hole_darts_ = m;
    p.tiles_ = 1;
    return p;
}

PartialTiling PartialTiling::polygon(int m) {
    if (m < 2) throw std::invalid_argument("a polygon needs at least two sides");
    PartialTiling p;
    for (int i = 0; i < m; ++i) p.new_vertex(true);
    for (int i = 0; i < m; ++i) p.new_edge(i, (i + 1) % m);
    for (int i = 0; i < m; ++i) {
        const Dart in = 2 * i + 1;
        const Dart out = 2 * ((i + 1) % m);
        p.sigma_[in] = out;
        p.sigma_[out] = in;
        p.sigma_inv_[out] = in;
        p.sigma_inv_[in] = out;
        p.kind_[2 * i] = FaceKind::Outer;
        p.kind_[2 * i + 1] = FaceKind::Hole;
    }
    for (int v = 0; v < m; ++v) {
        p.degree_[v] = 2;
        p.hole_corners_[v] = 1;
    }
    p.hole_darts_ = m;
    p.has_outer_ = true;
    return p;
}

int PartialTiling::new_vertex(bool outer) {
    degree_.push_back(0);
    hole_corners_.push_back(0);
    outer_.push_back(outer ? 1 : 0);
    return vertex_count() - 1;
}

Dart PartialTiling::new_edge(int tail, int head) {
    const Dart d = dart_count();
    for (const auto& [dart, v] : {std::pair{d, tail}, std::pair{d + 1, head}}) {
        sigma_.push_back(dart);
        sigma_inv_.push_back(dart);
        vertex_.push_back(v);
        kind_.push_back(FaceKind::Tile);
    }
    return d;
}

void PartialTiling::bump_degree(int v) {
    const int deg = ++degree_[v];
    if (deg > 3) ++excess_;
    if (deg == 4 && outer_[v]) ++high_boundary_;
}

void PartialTiling::insert_before(Dart pos, Dart d) {
    const Dart p = sigma_inv_[pos];
    sigma_[p] = d;
    sigma_inv_[d] = p;
    sigma_[d] = pos;
    sigma_inv_[pos] = d;
    bump_degree(vertex_[d]);
}

std::vector<Dart> PartialTiling::walk(Dart d) const {
    std::vector<Dart> out;
    Dart x = d;
    do {
        out.push_back(x);
        x = phi(x);
    } while (x != d);
    return out;
}

std::vector<Dart> PartialTiling::holes() const {
    std::vector<Dart> reps;
    std::vector<char> seen(dart_count(), 0);
    for (Dart d = 0; d < dart_count(); ++d) {
        if (kind_[d] != FaceKind::Hole || seen[d]) continue;
        reps.push_back(d);
        Dart x = d;
        do {
            seen[x] = 1;
            x = phi(x);
        } while (x != d);
    }
    return reps;
}

void PartialTiling::place_tile(const TileSpec& spec) {
    if (spec.start < 0 || spec.start >= dart_count() || kind_[spec.start] != FaceKind::Hole) {
        throw std::logic_error("tile must start on a hole dart");
    }
    const auto w = walk(spec.start);
    const int m = static_cast<int>(w.size());
    auto h = [&](int x) { return w[x % m]; };

    for (const Segment& seg : spec.segments) {
        if (seg.chord_edges == 0) continue;
        int prev = vertex_[h(seg.from)];
        Dart prev_t = -1;
        for (int j = 0; j < seg.chord_edges; ++j) {
            const bool last = j + 1 == seg.chord_edges;
            const int head = last ? vertex_[h(seg.to)] : new_vertex(false);
            const Dart t = new_edge(prev, head);
            const Dart u = t ^ 1;
            kind_[u] = FaceKind::Hole;
            ++hole_darts_;
            ++hole_corners_[head];
            if (j == 0) {
                insert_before(h(seg.from), t);
            } else {
                const Dart back = prev_t ^ 1;
                sigma_[back] = t;
                sigma_[t] = back;
                sigma_inv_[t] = back;
                sigma_inv_[back] = t;
                bump_degree(prev);
                bump_degree(prev);
            }
            if (last) insert_before(h(seg.to), u);
            prev = head;
            prev_t = t;
        }
    }

    int length = 0;
    Dart x = spec.start;
    do {
        if (kind_[x] == FaceKind::Hole) {
            kind_[x] = FaceKind::Tile;
            --hole_darts_;
            --hole_corners_[vertex_[x]];
        } else if (kind_[x] != FaceKind::Tile) {
            throw std::logic_error("tile boundary runs into the outer face");
        }
        ++length;
        x = phi(x);
    } while (x != spec.start && length <= 5);
    if (length != 5 || x != spec.start) throw std::logic_error("placed tile is not a pentagon");
    ++tiles_;
}

SphericalMap PartialTiling::to_map() const {
    std::vector<Dart> alpha(dart_count());
    for (Dart d = 0; d < dart_count(); ++d) alpha[d] = d ^ 1;
    return SphericalMap::from_permutations(sigma_, std::move(alpha));
}

DiskMap PartialTiling::to_disk() const {
    if (!has_outer_) throw std::logic_error("state has no outer face");
    auto m = to_map();
    const Face outer = m.face_of(0);
    return DiskMap(std::move(m), outer);
}

ClosureResult forced_tile_closure(const PartialTiling& partial, std::span<const Dart> seed) {
    if (seed.empty()) throw std::invalid_argument("empty seed path");
    for (std::size_t i = 0; i < seed.size(); ++i) {
        const Dart d = seed[i];
        if (d < 0 || d >= partial.dart_count() || partial.kind(d) != FaceKind::Hole) {
            throw std::invalid_argument("seed dart " + std::to_string(d) + " is not on a hole");
        }
        if (i + 1 < seed.size() && partial.phi(d) != seed[i + 1]) {
            throw std::invalid_argument("seed darts are not consecutive along the hole");
        }
    }
    const auto hole = partial.walk(seed.front());
    const int m = static_cast<int>(hole.size());
    const int k = static_cast<int>(seed.size());
    if (k > m) throw std::invalid_argument("seed path wraps around its hole");
    if (k > 5) return ClosureContradiction{std::to_string(k) + " edges cannot lie on one pentagon"};

    std::vector<int> verts;
    for (const Dart d : seed) verts.push_back(partial.vertex(d));
    const bool whole = k == m;
    if (!whole) verts.push_back(partial.vertex(PartialTiling::alpha(seed.back())));
    auto sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    const bool simple = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

    if (whole) {
        if (k != 5) return ClosureContradiction{"closed path of " + std::to_string(k) + " edges"};
        if (!simple) return ClosureContradiction{"closed path of 5 edges is not simple"};
        TileSpec spec{seed.front(), {}};
        for (int i = 0; i < 5; ++i) spec.segments.push_back({i, i + 1, 0});
        PartialTiling next = partial;
        next.place_tile(spec);
        return next;
    }
    if (!simple) return ClosureContradiction{"path revisits a vertex"};
    if (k == 5) return ClosureContradiction{"five edges that do not close up"};
    return ClosureUndetermined{};
}

}  // namespace pentile
