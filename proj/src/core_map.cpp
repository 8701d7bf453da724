#include "pentile/core_map.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>

namespace pentile {

std::string to_string(MapErrorKind kind) {
    switch (kind) {
        case MapErrorKind::NonInvolutivePairing: return "NonInvolutivePairing";
        case MapErrorKind::DuplicateDart: return "DuplicateDart";
        case MapErrorKind::DartOutOfRange: return "DartOutOfRange";
        case MapErrorKind::Disconnected: return "Disconnected";
        case MapErrorKind::NonZeroGenus: return "NonZeroGenus";
        case MapErrorKind::VertexOutOfRange: return "VertexOutOfRange";
        case MapErrorKind::InvalidFace: return "InvalidFace";
        case MapErrorKind::NotPentagonal: return "NotPentagonal";
        case MapErrorKind::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

MapError::MapError(MapErrorKind kind, const std::string& detail)
    : std::runtime_error(to_string(kind) + ": " + detail), kind_(kind) {}

namespace {

// Labels every orbit of `perm` with its minimal element. Returns the number of orbits.
int label_orbits(const std::vector<Dart>& perm, std::vector<Dart>& rep) {
    const int n = static_cast<int>(perm.size());
    rep.assign(n, -1);
    int orbits = 0;
    for (Dart d = 0; d < n; ++d) {
        if (rep[d] != -1) continue;
        ++orbits;
        Dart x = d;
        do {
            rep[x] = d;
            x = perm[x];
        } while (x != d);
    }
    return orbits;
}

void check_permutation(const std::vector<Dart>& perm, const char* name) {
    const int n = static_cast<int>(perm.size());
    std::vector<char> seen(n, 0);
    for (Dart d = 0; d < n; ++d) {
        const Dart x = perm[d];
        if (x < 0 || x >= n) {
            throw MapError(MapErrorKind::DartOutOfRange,
                           std::string(name) + "(" + std::to_string(d) + ") = " + std::to_string(x));
        }
        if (seen[x]) {
            throw MapError(MapErrorKind::DuplicateDart,
                           std::string(name) + " hits dart " + std::to_string(x) + " twice");
        }
        seen[x] = 1;
    }
}

}  // namespace

SphericalMap SphericalMap::from_permutations(std::vector<Dart> sigma, std::vector<Dart> alpha) {
    const int n = static_cast<int>(sigma.size());
    if (n == 0) throw MapError(MapErrorKind::MalformedInput, "map has no darts");
    if (static_cast<int>(alpha.size()) != n) {
        throw MapError(MapErrorKind::MalformedInput, "sigma and alpha differ in size");
    }
    check_permutation(sigma, "sigma");
    for (Dart d = 0; d < n; ++d) {
        const Dart a = alpha[d];
        if (a < 0 || a >= n) {
            throw MapError(MapErrorKind::DartOutOfRange,
                           "pairing(" + std::to_string(d) + ") = " + std::to_string(a));
        }
        if (a == d || alpha[a] != d) {
            throw MapError(MapErrorKind::NonInvolutivePairing,
                           "pairing is not a fixed-point-free involution at dart " + std::to_string(d));
        }
    }

    // Connectivity under <sigma, alpha>.
    {
        std::vector<char> seen(n, 0);
        std::vector<Dart> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            const Dart d = stack.back();
            stack.pop_back();
            for (const Dart x : {sigma[d], alpha[d]}) {
                if (!seen[x]) {
                    seen[x] = 1;
                    ++reached;
                    stack.push_back(x);
                }
            }
        }
        if (reached != n) {
            throw MapError(MapErrorKind::Disconnected,
                           std::to_string(reached) + " of " + std::to_string(n) + " darts reachable");
        }
    }

    SphericalMap m;
    m.sigma_ = std::move(sigma);
    m.alpha_ = std::move(alpha);
    m.sigma_inv_.assign(n, 0);
    for (Dart d = 0; d < n; ++d) m.sigma_inv_[m.sigma_[d]] = d;

    std::vector<Dart> phi(n);
    for (Dart d = 0; d < n; ++d) phi[d] = m.sigma_[m.alpha_[d]];

    const int v = label_orbits(m.sigma_, m.vertex_rep_);
    const int f = label_orbits(phi, m.face_rep_);
    const int e = n / 2;
    if (v - e + f != 2) {
        throw MapError(MapErrorKind::NonZeroGenus,
                       "V - E + F = " + std::to_string(v) + " - " + std::to_string(e) + " + " +
                           std::to_string(f) + " = " + std::to_string(v - e + f));
    }

    m.vertex_index_.assign(n, -1);
    m.face_index_.assign(n, -1);
    m.rotation_index_.assign(n, -1);
    for (Dart d = 0; d < n; ++d) {
        if (m.vertex_rep_[d] == d) {
            const int idx = static_cast<int>(m.vertices_.size());
            m.vertices_.push_back(Vertex{d});
            int pos = 0;
            Dart x = d;
            do {
                m.vertex_index_[x] = idx;
                m.rotation_index_[x] = pos++;
                x = m.sigma_[x];
            } while (x != d);
            m.degree_.push_back(pos);
        }
        if (m.face_rep_[d] == d) {
            const int idx = static_cast<int>(m.faces_.size());
            m.faces_.push_back(Face{d});
            Dart x = d;
            do {
                m.face_index_[x] = idx;
                x = phi[x];
            } while (x != d);
        }
    }
    return m;
}

int SphericalMap::vertex_index(Vertex v) const {
    if (!is_vertex(v)) {
        throw MapError(MapErrorKind::VertexOutOfRange, "no vertex with id " + std::to_string(v.id));
    }
    return vertex_index_[v.id];
}

int SphericalMap::face_index(Face f) const {
    if (!is_face(f)) throw MapError(MapErrorKind::InvalidFace, "no face with id " + std::to_string(f.id));
    return face_index_[f.id];
}

bool SphericalMap::is_vertex(Vertex v) const {
    return v.id >= 0 && v.id < dart_count() && vertex_rep_[v.id] == v.id;
}

bool SphericalMap::is_face(Face f) const {
    return f.id >= 0 && f.id < dart_count() && face_rep_[f.id] == f.id;
}

int SphericalMap::degree(Vertex v) const { return degree_[vertex_index(v)]; }

std::vector<Dart> SphericalMap::darts_around(Vertex v) const {
    vertex_index(v);
    std::vector<Dart> out;
    Dart x = v.id;
    do {
        out.push_back(x);
        x = sigma_[x];
    } while (x != v.id);
    return out;
}

std::vector<Dart> SphericalMap::face_darts(Face f) const {
    face_index(f);
    std::vector<Dart> out;
    Dart x = f.id;
    do {
        out.push_back(x);
        x = phi(x);
    } while (x != f.id);
    return out;
}

SphericalMap build_from_rotations(const std::vector<std::vector<Dart>>& neighbor_lists,
                                  const std::vector<Dart>& pairing) {
    const int n = static_cast<int>(pairing.size());
    std::vector<Dart> sigma(n, -1);
    int placed = 0;
    for (const auto& list : neighbor_lists) {
        if (list.empty()) {
            throw MapError(MapErrorKind::Disconnected, "vertex without darts");
        }
        for (std::size_t i = 0; i < list.size(); ++i) {
            const Dart d = list[i];
            if (d < 0 || d >= n) {
                throw MapError(MapErrorKind::DartOutOfRange, "dart " + std::to_string(d) +
                                                                 " outside pairing of size " +
                                                                 std::to_string(n));
            }
            if (sigma[d] != -1) {
                throw MapError(MapErrorKind::DuplicateDart, "dart " + std::to_string(d) + " listed twice");
            }
            sigma[d] = list[(i + 1) % list.size()];
            ++placed;
        }
    }
    if (placed != n) {
        throw MapError(MapErrorKind::DartOutOfRange,
                       std::to_string(n - placed) + " paired darts missing from the rotations");
    }
    return SphericalMap::from_permutations(std::move(sigma), pairing);
}

SphericalMap build_from_adjacency(const std::vector<std::vector<int>>& neighbors_ccw) {
    const int nv = static_cast<int>(neighbors_ccw.size());
    std::vector<std::vector<Dart>> rotations(nv);
    std::map<std::pair<int, int>, Dart> dart_of;
    Dart next = 0;
    for (int v = 0; v < nv; ++v) {
        for (const int w : neighbors_ccw[v]) {
            if (w < 0 || w >= nv || w == v) {
                throw MapError(MapErrorKind::MalformedInput, "bad neighbor " + std::to_string(w));
            }
            if (!dart_of.emplace(std::pair{v, w}, next).second) {
                throw MapError(MapErrorKind::DuplicateDart,
                               "edge " + std::to_string(v) + "-" + std::to_string(w) + " listed twice");
            }
            rotations[v].push_back(next++);
        }
    }
    std::vector<Dart> pairing(next, -1);
    for (const auto& [key, d] : dart_of) {
        auto it = dart_of.find({key.second, key.first});
        if (it == dart_of.end()) {
            throw MapError(MapErrorKind::NonInvolutivePairing,
                           "edge " + std::to_string(key.first) + "-" + std::to_string(key.second) +
                               " has no reverse");
        }
        pairing[d] = it->second;
    }
    return build_from_rotations(rotations, pairing);
}

SphericalMap build_from_faces(const std::vector<std::vector<int>>& faces) {
    std::vector<std::vector<FaceCorner>> corners;
    corners.reserve(faces.size());
    for (const auto& f : faces) {
        auto& c = corners.emplace_back();
        for (const int v : f) c.push_back(FaceCorner{v, 0});
    }
    return build_from_faces(corners);
}

SphericalMap build_from_faces(const std::vector<std::vector<FaceCorner>>& input) {
    using Key = std::tuple<int, int, int>;
    struct Side {
        int face;
        int pos;
    };
    auto faces = input;
    const int nf = static_cast<int>(faces.size());
    auto head = [&](int f, int i) { return faces[f][(i + 1) % faces[f].size()].vertex; };
    auto key_of = [&](int f, int i) {
        const int u = faces[f][i].vertex;
        const int w = head(f, i);
        return Key{std::min(u, w), std::max(u, w), faces[f][i].edge_tag};
    };

    std::map<Key, std::vector<Side>> sides;
    for (int f = 0; f < nf; ++f) {
        if (faces[f].size() < 1) throw MapError(MapErrorKind::MalformedInput, "empty face");
        for (int i = 0; i < static_cast<int>(faces[f].size()); ++i) {
            if (faces[f][i].vertex == head(f, i)) {
                throw MapError(MapErrorKind::MalformedInput, "loop edges are not supported here");
            }
            sides[key_of(f, i)].push_back(Side{f, i});
        }
    }
    for (const auto& [key, list] : sides) {
        if (list.size() != 2) {
            throw MapError(MapErrorKind::NonInvolutivePairing,
                           "edge " + std::to_string(std::get<0>(key)) + "-" +
                               std::to_string(std::get<1>(key)) + " bounds " +
                               std::to_string(list.size()) + " face sides");
        }
    }

    auto reverse_face = [&](int f) {
        auto& c = faces[f];
        const int k = static_cast<int>(c.size());
        std::vector<FaceCorner> r(k);
        // Corner i of the reversed face starts at old vertex (i+1) and runs
        // back along old edge i.
        for (int i = 0; i < k; ++i) {
            r[k - 1 - i] = FaceCorner{c[(i + 1) % k].vertex, c[i].edge_tag};
        }
        c = std::move(r);
    };

    // Propagate a consistent orientation: a shared edge is traversed in
    // opposite directions by its two faces.
    std::vector<int> oriented(nf, 0);
    for (int start = 0; start < nf; ++start) {
        if (oriented[start]) continue;
        if (start != 0) throw MapError(MapErrorKind::Disconnected, "face list is not connected");
        oriented[start] = 1;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int f = queue.front();
            queue.pop_front();
            for (int i = 0; i < static_cast<int>(faces[f].size()); ++i) {
                const auto pair = sides[key_of(f, i)];
                for (const Side& s : pair) {
                    if (s.face == f && s.pos == i) continue;
                    const bool same_dir = faces[s.face][s.pos].vertex == faces[f][i].vertex;
                    if (!oriented[s.face]) {
                        if (same_dir) {
                            reverse_face(s.face);
                            // Positions in the side table are stale after reversal.
                            sides.clear();
                            for (int g = 0; g < nf; ++g) {
                                for (int j = 0; j < static_cast<int>(faces[g].size()); ++j) {
                                    sides[key_of(g, j)].push_back(Side{g, j});
                                }
                            }
                        }
                        oriented[s.face] = 1;
                        queue.push_back(s.face);
                    } else if (same_dir) {
                        throw MapError(MapErrorKind::NonZeroGenus, "face list is not orientable");
                    }
                }
            }
        }
    }

    std::vector<int> offset(nf + 1, 0);
    for (int f = 0; f < nf; ++f) offset[f + 1] = offset[f] + static_cast<int>(faces[f].size());
    const int n = offset[nf];
    std::vector<Dart> alpha(n, -1), phi(n, -1);
    for (int f = 0; f < nf; ++f) {
        const int k = static_cast<int>(faces[f].size());
        for (int i = 0; i < k; ++i) phi[offset[f] + i] = offset[f] + (i + 1) % k;
    }
    for (const auto& [key, list] : sides) {
        const Dart a = offset[list[0].face] + list[0].pos;
        const Dart b = offset[list[1].face] + list[1].pos;
        alpha[a] = b;
        alpha[b] = a;
    }
    std::vector<Dart> sigma(n);
    for (Dart d = 0; d < n; ++d) sigma[d] = phi[alpha[d]];

    auto map = SphericalMap::from_permutations(std::move(sigma), std::move(alpha));

    std::set<int> labels;
    for (const auto& f : faces)
        for (const auto& c : f) labels.insert(c.vertex);
    if (static_cast<int>(labels.size()) != map.vertex_count()) {
        throw MapError(MapErrorKind::MalformedInput,
                       "faces around some vertex do not close into a single disk (" +
                           std::to_string(labels.size()) + " labels, " +
                           std::to_string(map.vertex_count()) + " vertices)");
    }
    return map;
}

SphericalMap mirror(const SphericalMap& map) {
    const int n = map.dart_count();
    std::vector<Dart> sigma(n);
    for (Dart d = 0; d < n; ++d) sigma[d] = map.sigma_inv(d);
    return SphericalMap::from_permutations(std::move(sigma), map.alpha_table());
}

SphericalMap relabel(const SphericalMap& map, std::span<const Dart> perm) {
    const int n = map.dart_count();
    if (static_cast<int>(perm.size()) != n) {
        throw MapError(MapErrorKind::MalformedInput, "relabeling has the wrong size");
    }
    std::vector<Dart> sigma(n, -1), alpha(n, -1);
    for (Dart d = 0; d < n; ++d) {
        if (perm[d] < 0 || perm[d] >= n || sigma[perm[d]] != -1) {
            throw MapError(MapErrorKind::DuplicateDart, "relabeling is not a permutation");
        }
        sigma[perm[d]] = perm[map.sigma(d)];
        alpha[perm[d]] = perm[map.alpha(d)];
    }
    return SphericalMap::from_permutations(std::move(sigma), std::move(alpha));
}

std::vector<std::vector<Dart>> faces(const SphericalMap& map) {
    std::vector<std::vector<Dart>> out;
    out.reserve(map.face_count());
    for (const Face f : map.face_ids()) out.push_back(map.face_darts(f));
    return out;
}

long long DegreeHistogram::degree_sum() const {
    long long s = 0;
    for (const auto& [deg, cnt] : counts) s += static_cast<long long>(deg) * cnt;
    return s;
}

DegreeHistogram degree_histogram(const SphericalMap& map) {
    DegreeHistogram h;
    for (const Vertex v : map.vertices()) ++h.counts[map.degree(v)];
    return h;
}

ValidationReport validate_pentagonal(const SphericalMap& map) {
    ValidationReport report;
    for (const Face f : map.face_ids()) {
        const auto darts = map.face_darts(f);
        if (darts.size() != 5) {
            report.violations.push_back({"face-length-5", f.id});
            continue;
        }
        std::set<Dart> verts, edges;
        for (const Dart d : darts) {
            verts.insert(map.vertex_of(d).id);
            edges.insert(map.edge_of(d).id);
        }
        if (verts.size() != 5 || edges.size() != 5) report.violations.push_back({"face-simple", f.id});
    }
    for (const Vertex v : map.vertices()) {
        if (map.degree(v) < 3) report.violations.push_back({"vertex-degree-3", v.id});
    }
    return report;
}

bool check_counting_identities(const DegreeHistogram& h, int face_count) {
    long long v3_rhs = 20;
    long long f_rhs = 12;
    for (const auto& [deg, cnt] : h.counts) {
        if (deg < 4) continue;
        v3_rhs += static_cast<long long>(3 * deg - 10) * cnt;
        f_rhs += 2LL * (deg - 3) * cnt;
    }
    return h.count(3) == v3_rhs && face_count == f_rhs;
}

bool check_counting_identities(const SphericalMap& map) {
    return check_counting_identities(degree_histogram(map), map.face_count());
}

std::vector<int> distances_from(const SphericalMap& map, Vertex source) {
    const int src = map.vertex_index(source);
    std::vector<int> dist(map.vertex_count(), -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    const auto& verts = map.vertices();
    while (!queue.empty()) {
        const int vi = queue.front();
        queue.pop_front();
        const Dart start = verts[vi].id;
        Dart d = start;
        do {
            const int wi = map.vertex_index_of(map.alpha(d));
            if (dist[wi] < 0) {
                dist[wi] = dist[vi] + 1;
                queue.push_back(wi);
            }
            d = map.sigma(d);
        } while (d != start);
    }
    return dist;
}

int graph_distance(const SphericalMap& map, Vertex u, Vertex v) {
    const int target = map.vertex_index(v);
    return distances_from(map, u)[target];
}

std::vector<Vertex> high_degree_vertices(const SphericalMap& map) {
    std::vector<Vertex> out;
    for (const Vertex v : map.vertices()) {
        if (map.degree(v) > 3) out.push_back(v);
    }
    return out;
}

}  // namespace pentile
