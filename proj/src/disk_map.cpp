#include "pentile/disk_map.hpp"

#include <set>

namespace pentile {

DiskMap::DiskMap(SphericalMap map, Face outer) : map_(std::move(map)), outer_(outer) {
    map_.face_index(outer_);
    boundary_.assign(map_.vertex_count(), 0);
    for (const Dart d : map_.face_darts(outer_)) boundary_[map_.vertex_index_of(d)] = 1;
}

int DiskMap::boundary_length() const { return static_cast<int>(map_.face_darts(outer_).size()); }

std::vector<Dart> DiskMap::boundary_darts() const { return map_.face_darts(outer_); }

bool DiskMap::on_boundary(Vertex v) const { return boundary_[map_.vertex_index(v)] != 0; }

std::vector<Vertex> DiskMap::interior_vertices() const {
    std::vector<Vertex> out;
    for (const Vertex v : map_.vertices())
        if (!on_boundary(v)) out.push_back(v);
    return out;
}

std::vector<Vertex> DiskMap::boundary_vertices() const {
    std::vector<Vertex> out;
    for (const Vertex v : map_.vertices())
        if (on_boundary(v)) out.push_back(v);
    return out;
}

ValidationReport validate_disk(const DiskMap& disk) {
    const auto& m = disk.map();
    ValidationReport report;
    for (const Face f : m.face_ids()) {
        const auto darts = m.face_darts(f);
        std::set<Dart> verts, edges;
        for (const Dart d : darts) {
            verts.insert(m.vertex_of(d).id);
            edges.insert(m.edge_of(d).id);
        }
        const bool simple = verts.size() == darts.size() && edges.size() == darts.size();
        if (f == disk.outer()) {
            if (!simple) report.violations.push_back({"boundary-simple", f.id});
            continue;
        }
        if (darts.size() != 5) {
            report.violations.push_back({"face-length-5", f.id});
        } else if (!simple) {
            report.violations.push_back({"face-simple", f.id});
        }
    }
    for (const Vertex v : m.vertices()) {
        const int deg = m.degree(v);
        if (disk.on_boundary(v)) {
            if (deg < 2) report.violations.push_back({"boundary-degree-2", v.id});
        } else if (deg < 3) {
            report.violations.push_back({"vertex-degree-3", v.id});
        }
    }
    return report;
}

CanonicalCode canonical_code(const DiskMap& disk, bool include_reflections) {
    const auto& m = disk.map();
    std::vector<RootChoice> roots;
    for (const Dart d : disk.boundary_darts()) {
        roots.push_back({d, Orientation::Direct});
        // In the mirror image the outer face is walked by the opposite darts.
        if (include_reflections) roots.push_back({m.alpha(d), Orientation::Mirrored});
    }
    return min_code_over(m, roots);
}

bool isomorphic(const DiskMap& a, const DiskMap& b, bool include_reflections) {
    return a.map().dart_count() == b.map().dart_count() &&
           canonical_code(a, include_reflections) == canonical_code(b, include_reflections);
}

}  // namespace pentile
