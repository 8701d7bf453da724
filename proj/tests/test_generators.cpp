#include <gtest/gtest.h>

#include <algorithm>

#include "pentile/generators.hpp"
#include "pentile/iso.hpp"

using namespace pentile;

namespace {

std::pair<Vertex, Vertex> poles(const SphericalMap& m) {
    const auto hv = high_degree_vertices(m);
    EXPECT_EQ(hv.size(), 2u);
    return {hv.at(0), hv.at(1)};
}

}  // namespace

TEST(Dodecahedron, Basics) {
    const auto m = dodecahedron();
    EXPECT_TRUE(validate_pentagonal(m).is_valid());
    EXPECT_EQ(degree_histogram(m).counts, (std::map<int, int>{{3, 20}}));
    EXPECT_EQ(canonical_code(m), canonical_code(mirror(m)));
}

TEST(EarthMap, PostconditionsForAllFamilies) {
    for (int d = 1; d <= 5; ++d) {
        for (int t = (d == 5 ? 4 : 2); t <= 7; ++t) {
            SCOPED_TRACE("d=" + std::to_string(d) + " t=" + std::to_string(t));
            const auto m = earth_map(d, t);
            EXPECT_TRUE(validate_pentagonal(m).is_valid());
            EXPECT_TRUE(check_counting_identities(m));
            EXPECT_EQ(m.face_count(), d == 5 ? 4 * t : 12 * t);
            const auto [n, s] = poles(m);
            EXPECT_EQ(m.degree(n), m.degree(s));
            EXPECT_EQ(m.degree(n), d == 5 ? t : 3 * t);
            EXPECT_EQ(graph_distance(m, n, s), d);
        }
    }
}

TEST(EarthMap, Examples) {
    const auto m54 = earth_map(5, 4);
    EXPECT_EQ(m54.face_count(), 16);
    const auto m42 = earth_map(4, 2);
    const auto h = degree_histogram(m42);
    EXPECT_EQ(h.count(6), 2);
    EXPECT_EQ(h.count(3), 36);
    EXPECT_EQ(m42.face_count(), 24);
}

TEST(EarthMap, Errors) {
    auto kind = [](int d, int t) {
        try {
            earth_map(d, t);
        } catch (const GeneratorError& e) {
            return e.kind();
        }
        return GeneratorErrorKind::UnknownFixture;
    };
    EXPECT_EQ(kind(0, 4), GeneratorErrorKind::DistanceOutOfRange);
    EXPECT_EQ(kind(6, 4), GeneratorErrorKind::DistanceOutOfRange);
    EXPECT_EQ(kind(5, 3), GeneratorErrorKind::TooFewTimezones);
    EXPECT_EQ(kind(2, 1), GeneratorErrorKind::TooFewTimezones);
}

TEST(EarthMap, FamiliesAreDistinct) {
    std::vector<CanonicalCode> codes;
    for (int d = 1; d <= 4; ++d) codes.push_back(canonical_code(earth_map(d, 2)));
    for (std::size_t i = 0; i < codes.size(); ++i)
        for (std::size_t j = i + 1; j < codes.size(); ++j) EXPECT_NE(codes[i], codes[j]);
    // Equal face counts across families: F = 48 for d <= 4, t = 4 and d = 5, t = 12.
    std::vector<CanonicalCode> f48{canonical_code(earth_map(5, 12))};
    for (int d = 1; d <= 4; ++d) f48.push_back(canonical_code(earth_map(d, 4)));
    for (std::size_t i = 0; i < f48.size(); ++i)
        for (std::size_t j = i + 1; j < f48.size(); ++j) EXPECT_NE(f48[i], f48[j]);
}

TEST(EarthMap, TimezoneRotationIsASymmetry) {
    for (int d = 1; d <= 5; ++d) {
        const int t = d == 5 ? 5 : 3;
        const auto m = earth_map(d, t);
        const int per_block = m.dart_count() / t;
        // Darts are numbered face by face and each timezone contributes the
        // same faces in the same order, so shifting by one block is the rotation.
        EXPECT_EQ(code_at(m, 0, Orientation::Direct), code_at(m, per_block, Orientation::Direct))
            << "d=" << d;
    }
}

TEST(EarthMap, ThreePrimeConstructionIsTheDistanceTwoFamily) {
    for (int t = 2; t <= 6; ++t) {
        const auto a = earth_map(2, t);
        const auto b = earth_map_via_meridian_3prime(t);
        EXPECT_TRUE(isomorphic(a, b)) << t;
        EXPECT_TRUE(isomorphic_by_matching(a, b)) << t;
    }
}

TEST(ThreeV4, FigureProperties) {
    const auto m = three_v4_example();
    EXPECT_TRUE(validate_pentagonal(m).is_valid());
    EXPECT_EQ(m.face_count(), 18);
    const auto hv = high_degree_vertices(m);
    ASSERT_EQ(hv.size(), 3u);
    for (const Vertex v : hv) EXPECT_EQ(m.degree(v), 4);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) EXPECT_EQ(graph_distance(m, hv[i], hv[j]), 3);
    EXPECT_TRUE(check_counting_identities(m));
    EXPECT_EQ(degree_histogram(m).count(3), 26);
}

TEST(ConnectedSum, TwoDodecahedra) {
    const auto d = dodecahedron();
    const Face f = d.face_ids().front();
    for (const bool reflect : {false, true}) {
        for (int r = 0; r < 5; ++r) {
            const auto m = connected_sum(d, f, d, d.face_ids().back(), r, reflect);
            EXPECT_TRUE(validate_pentagonal(m).is_valid());
            EXPECT_EQ(m.face_count(), 22);
            const auto hv = high_degree_vertices(m);
            ASSERT_EQ(hv.size(), 5u);
            int min_d = 100, max_d = 0;
            for (std::size_t i = 0; i < hv.size(); ++i) {
                EXPECT_EQ(m.degree(hv[i]), 4);
                for (std::size_t j = i + 1; j < hv.size(); ++j) {
                    const int dist = graph_distance(m, hv[i], hv[j]);
                    min_d = std::min(min_d, dist);
                    max_d = std::max(max_d, dist);
                }
            }
            EXPECT_EQ(min_d, 1);
            EXPECT_LE(max_d, 2);
            EXPECT_EQ(degree_histogram(m).count(3), 30);
        }
    }
}

TEST(ConnectedSum, DegreesAddAtTheSeam) {
    const auto a = earth_map(5, 4);
    const auto b = dodecahedron();
    // A tile of a touching the pole.
    const auto [n, s] = poles(a);
    const Face fa = a.face_of(n.id);
    const auto m = connected_sum(a, fa, b, b.face_ids().front(), 2, false);
    EXPECT_TRUE(validate_pentagonal(m).is_valid());
    EXPECT_EQ(m.face_count(), a.face_count() + b.face_count() - 2);
    EXPECT_TRUE(check_counting_identities(m));
    EXPECT_EQ(degree_histogram(m).count(5), 1);
    EXPECT_EQ(degree_histogram(m).count(4), 5);
}

TEST(ConnectedSum, InvalidFace) {
    const auto d = dodecahedron();
    const Face not_a_face{d.dart_count() + 3};
    try {
        connected_sum(d, not_a_face, d, d.face_ids().front(), 0, false);
        FAIL();
    } catch (const GeneratorError& e) {
        EXPECT_EQ(e.kind(), GeneratorErrorKind::InvalidFace);
    }
}

TEST(DiskFixture, Shapes) {
    const auto oct = disk_fixture(DiskKind::Octagon);
    EXPECT_EQ(oct.interior_face_count(), 2);
    EXPECT_EQ(oct.boundary_length(), 8);
    const auto non = disk_fixture(DiskKind::Nonagon);
    EXPECT_EQ(non.interior_face_count(), 3);
    EXPECT_EQ(non.boundary_length(), 9);
    const auto one = disk_fixture(DiskKind::SinglePentagon);
    EXPECT_EQ(one.interior_face_count(), 1);
    EXPECT_EQ(one.boundary_length(), 5);
    EXPECT_TRUE(one.interior_vertices().empty());
    const auto comp = disk_fixture(DiskKind::DodecaMinusTile);
    EXPECT_EQ(comp.interior_face_count(), 11);
    EXPECT_EQ(comp.boundary_length(), 5);
    for (const Vertex v : comp.interior_vertices()) EXPECT_EQ(comp.map().degree(v), 3);
    for (const auto kind : {DiskKind::Octagon, DiskKind::Nonagon, DiskKind::SinglePentagon,
                            DiskKind::DodecaMinusTile}) {
        EXPECT_TRUE(validate_disk(disk_fixture(kind)).is_valid()) << to_string(kind);
        EXPECT_EQ(parse_disk_kind(to_string(kind)), kind);
    }
}
