#include "pentile/analysis.hpp"

#include <algorithm>

namespace pentile {

namespace {

std::string corpus_universe(const Corpus& c) {
    return "all tilings with F <= " + std::to_string(c.max_faces) + (c.complete ? "" : " (partial)");
}

void require_complete(const Corpus& c) {
    if (!c.complete) throw std::invalid_argument("theorem checks need a complete corpus");
}

bool is_earth_map(const SphericalMap& m, int distance) {
    const int f = m.face_count();
    const int per = distance == 5 ? 4 : 12;
    const int min_t = distance == 5 ? 4 : 2;
    if (f % per != 0 || f / per < min_t) return false;
    return canonical_code(m) == canonical_code(earth_map(distance, f / per));
}

}  // namespace

Corpus sphere_corpus(int max_faces, int workers, Budget budget) {
    SphereOptions o;
    o.max_faces = max_faces;
    o.workers = workers;
    o.budget = budget;
    Corpus c{max_faces, true, {}};
    const auto report = enumerate_sphere(o, [&](const SphericalMap& m) { c.maps.push_back(m); });
    c.complete = report.complete;
    return c;
}

Classification classify_two_pole(const SphericalMap& map) {
    if (!validate_pentagonal(map).is_valid()) {
        throw MapError(MapErrorKind::NotPentagonal, "classification needs a valid tiling");
    }
    const auto poles = high_degree_vertices(map);
    if (poles.size() != 2) return NotEarthMap{static_cast<int>(poles.size())};

    const int d = graph_distance(map, poles[0], poles[1]);
    const int f = map.face_count();
    const std::string where = " (F=" + std::to_string(f) + ", d=" + std::to_string(d) + ")";
    if (map.degree(poles[0]) != map.degree(poles[1])) {
        throw ClassificationFailed("pole degrees differ" + where);
    }
    if (d < 1 || d > 5) throw ClassificationFailed("pole distance out of range" + where);
    const int per = d == 5 ? 4 : 12;
    if (f % per != 0) throw ClassificationFailed("face count does not fit the family" + where);
    const FamilyTag tag{d, f / per};
    SphericalMap reference = [&] {
        try {
            return earth_map(tag.distance, tag.timezones);
        } catch (const GeneratorError& e) {
            throw ClassificationFailed(std::string("no such family member: ") + e.what() + where);
        }
    }();
    if (canonical_code(map) != canonical_code(reference)) {
        throw ClassificationFailed("two-pole tiling matches no earth map" + where);
    }
    return tag;
}

std::string to_string(const Classification& c) {
    if (const auto* tag = std::get_if<FamilyTag>(&c)) {
        return "earth_map(" + std::to_string(tag->distance) + ", " + std::to_string(tag->timezones) + ")";
    }
    return "NotEarthMap (" + std::to_string(std::get<NotEarthMap>(c).high_degree_count) +
           " high-degree vertices)";
}

TheoremVerdict check_one_high_degree(const Corpus& corpus) {
    require_complete(corpus);
    TheoremVerdict v{"one_high_degree", corpus_universe(corpus), {}, {}, 0, 0};
    for (const auto& m : corpus.maps) {
        ++v.examined;
        if (high_degree_vertices(m).size() == 1) {
            v.counterexamples.push_back(canonical_code(m));
        } else {
            ++v.vacuous;
        }
    }
    return v;
}

TheoremVerdict check_distance5(const Corpus& corpus) {
    require_complete(corpus);
    TheoremVerdict v{"distance5", corpus_universe(corpus), {}, {}, 0, 0};
    for (const auto& m : corpus.maps) {
        ++v.examined;
        bool triggered = false;
        for (const Vertex h : high_degree_vertices(m)) {
            const auto dist = distances_from(m, h);
            bool quiet = true;
            for (const Vertex u : m.vertices()) {
                if (u == h) continue;
                const int du = dist[m.vertex_index(u)];
                if (du >= 0 && du <= 4 && m.degree(u) != 3) {
                    quiet = false;
                    break;
                }
            }
            if (quiet) {
                triggered = true;
                break;
            }
        }
        if (!triggered) {
            ++v.vacuous;
        } else if (is_earth_map(m, 5)) {
            v.witnesses.push_back(canonical_code(m));
        } else {
            v.counterexamples.push_back(canonical_code(m));
        }
    }
    return v;
}

TheoremVerdict check_distance4(const Corpus& corpus) {
    require_complete(corpus);
    TheoremVerdict v{"distance4", corpus_universe(corpus), {}, {}, 0, 0};
    for (const auto& m : corpus.maps) {
        ++v.examined;
        const auto high = high_degree_vertices(m);
        bool far = high.size() >= 2;
        for (std::size_t i = 0; far && i < high.size(); ++i) {
            const auto dist = distances_from(m, high[i]);
            for (std::size_t j = i + 1; j < high.size(); ++j) {
                if (dist[m.vertex_index(high[j])] < 4) {
                    far = false;
                    break;
                }
            }
        }
        if (!far) {
            ++v.vacuous;
        } else if (is_earth_map(m, 5) || is_earth_map(m, 4)) {
            v.witnesses.push_back(canonical_code(m));
        } else {
            v.counterexamples.push_back(canonical_code(m));
        }
    }
    return v;
}

DiskCorpus disk_corpus(int max_m, DiskConstraints constraints, int workers, Budget budget) {
    DiskCorpus out{constraints, true, {}};
    for (int m = 2; m <= max_m; ++m) {
        DiskOptions o;
        o.constraints = constraints;
        o.constraints.m = m;
        o.workers = workers;
        o.budget = budget;
        auto& bucket = out.by_boundary[m];
        const auto r = enumerate_disk(o, [&](const DiskMap& d) { bucket.push_back(d); });
        out.complete = out.complete && r.complete;
    }
    return out;
}

TheoremVerdict check_lemma_cycle(const DiskCorpus& disks) {
    if (!disks.complete) throw std::invalid_argument("lemma check needs a complete disk corpus");
    if (disks.constraints.max_faces < 15) throw std::invalid_argument("lemma check needs max_faces >= 15");
    for (int m = 2; m <= 7; ++m) {
        if (!disks.by_boundary.contains(m)) {
            throw std::invalid_argument("lemma check needs fillings for every m <= 7");
        }
    }
    const CanonicalCode one = canonical_code(disk_fixture(DiskKind::SinglePentagon));
    const CanonicalCode eleven = canonical_code(disk_fixture(DiskKind::DodecaMinusTile));
    TheoremVerdict v{"lemma_cycle",
                     "disk fillings with m <= 7, at most " +
                         std::to_string(disks.constraints.max_high_degree_boundary) +
                         " high-degree boundary vertex, interior degree exactly 3, at most " +
                         std::to_string(disks.constraints.max_faces) + " tiles",
                     {}, {}, 0, 0};
    for (const auto& [m, fillings] : disks.by_boundary) {
        for (const auto& d : fillings) {
            ++v.examined;
            if (m > 7) {
                ++v.vacuous;
                continue;
            }
            const auto code = canonical_code(d);
            if (m == 5 && (code == one || code == eleven)) {
                v.witnesses.push_back(code);
            } else {
                v.counterexamples.push_back(code);
            }
        }
    }
    return v;
}

}  // namespace pentile
