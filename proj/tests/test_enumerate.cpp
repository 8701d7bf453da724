#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "pentile/enumerate.hpp"
#include "pentile/generators.hpp"
#include "pentile/partial_tiling.hpp"

using namespace pentile;

namespace {

std::vector<SphericalMap> corpus(int max_faces) {
    std::vector<SphericalMap> out;
    enumerate_sphere(max_faces, [&](const SphericalMap& m) { out.push_back(m); });
    return out;
}

bool contains(const EnumerationReport& r, const CanonicalCode& c) {
    return std::find(r.codes.begin(), r.codes.end(), c) != r.codes.end();
}

DiskOptions lemma_disk(int m) {
    DiskOptions o;
    o.constraints = DiskConstraints{m, 1, true, 15};
    o.budget = {};
    return o;
}

}  // namespace

TEST(Enumerate, SmallCensus) {
    const auto r12 = enumerate_sphere(12);
    EXPECT_EQ(r12.counts, (std::map<int, long long>{{12, 1}}));
    const auto r14 = enumerate_sphere(14);
    EXPECT_EQ(r14.counts, (std::map<int, long long>{{12, 1}, {14, 0}}));
    EXPECT_TRUE(r14.complete);

    const auto maps = corpus(16);
    ASSERT_EQ(maps.size(), 2u);
    EXPECT_TRUE(isomorphic(maps[0], dodecahedron()));
    EXPECT_TRUE(isomorphic(maps[1], earth_map(5, 4)));
    EXPECT_TRUE(isomorphic_by_matching(maps[1], earth_map(5, 4)));
}

TEST(Enumerate, NaiveOracleAgreesUpTo16) {
    const auto naive = enumerate_sphere_naive(16, {}, Budget{});
    const auto pruned = enumerate_sphere(16);
    EXPECT_EQ(naive.counts, pruned.counts);
    EXPECT_TRUE(naive.complete);
    std::set<CanonicalCode> a(naive.codes.begin(), naive.codes.end());
    std::set<CanonicalCode> b(pruned.codes.begin(), pruned.codes.end());
    EXPECT_EQ(a, b);
    EXPECT_THROW(enumerate_sphere_naive(18), std::invalid_argument);
}

TEST(Enumerate, ForcedClosureOnlyChangesRuntime) {
    SphereOptions on;
    on.max_faces = 18;
    on.budget = {};
    SphereOptions off = on;
    off.forced_closure = false;
    const auto a = enumerate_sphere(on);
    const auto b = enumerate_sphere(off);
    EXPECT_EQ(a.counts, b.counts);
    EXPECT_EQ(std::set<CanonicalCode>(a.codes.begin(), a.codes.end()),
              std::set<CanonicalCode>(b.codes.begin(), b.codes.end()));
}

TEST(Enumerate, DeterministicAndWorkerIndependent) {
    SphereOptions o;
    o.max_faces = 20;
    o.budget = {};
    const auto a = enumerate_sphere(o);
    const auto b = enumerate_sphere(o);
    EXPECT_EQ(a.codes, b.codes);
    EXPECT_EQ(a.counts, b.counts);
    o.workers = 3;
    const auto c = enumerate_sphere(o);
    EXPECT_EQ(a.counts, c.counts);
    EXPECT_EQ(std::set<CanonicalCode>(a.codes.begin(), a.codes.end()),
              std::set<CanonicalCode>(c.codes.begin(), c.codes.end()));
}

TEST(Enumerate, OutputsAreValidDistinctAndEven) {
    std::set<CanonicalCode> seen;
    const auto r = enumerate_sphere(20, [&](const SphericalMap& m) {
        EXPECT_TRUE(validate_pentagonal(m).is_valid());
        EXPECT_TRUE(check_counting_identities(m));
        EXPECT_EQ(m.face_count() % 2, 0);
        EXPECT_NE(high_degree_vertices(m).size(), 1u);
        EXPECT_TRUE(seen.insert(canonical_code(m)).second);
    });
    for (const auto& [f, c] : r.counts) {
        if (f % 2) EXPECT_EQ(c, 0);
    }
    EXPECT_EQ(seen.size(), r.codes.size());
}

TEST(Enumerate, GeneratorOutputsAreInTheCorpus) {
    const auto r = enumerate_sphere(18);
    EXPECT_TRUE(contains(r, canonical_code(dodecahedron())));
    EXPECT_TRUE(contains(r, canonical_code(earth_map(5, 4))));
    EXPECT_TRUE(contains(r, canonical_code(three_v4_example())));
    EXPECT_GE(r.count(18), 1);
}

// Artifact-derived constants, cross-checked against the gluing oracle offline.
TEST(Enumerate, DerivedCensusConstants) {
    const auto r = enumerate_sphere(20);
    EXPECT_EQ(r.count(18), 1);
    EXPECT_EQ(r.count(20), 6);
    EXPECT_TRUE(contains(r, canonical_code(earth_map(5, 5))));
    const auto d = dodecahedron();
    EXPECT_FALSE(contains(r, canonical_code(connected_sum(d, Face{0}, d, Face{0}, 0, false))));
}

TEST(Enumerate, BudgetExceededIsFlagged) {
    SphereOptions o;
    o.max_faces = 22;
    o.budget.max_nodes = 1000;
    try {
        enumerate_sphere(o);
        FAIL() << "expected BudgetExceeded";
    } catch (const BudgetExceeded& e) {
        EXPECT_FALSE(e.partial().complete);
        EXPECT_EQ(e.partial().max_faces, 22);
    }
}

TEST(Enumerate, Preconditions) {
    EXPECT_THROW(enumerate_sphere(10), std::invalid_argument);
    EXPECT_THROW(enumerate_disk(DiskConstraints{1, 1, true, 5}), std::invalid_argument);
    EXPECT_THROW(enumerate_disk(DiskConstraints{5, 1, true, 0}), std::invalid_argument);
}

TEST(ForcedClosure, TriangleIsContradiction) {
    const auto p = PartialTiling::polygon(3);
    const auto hole = p.walk(p.holes().front());
    const auto r = forced_tile_closure(p, hole);
    EXPECT_TRUE(std::holds_alternative<ClosureContradiction>(r));
}

TEST(ForcedClosure, FiveCycleBecomesOneTile) {
    const auto p = PartialTiling::polygon(5);
    const auto hole = p.walk(p.holes().front());
    const auto r = forced_tile_closure(p, hole);
    ASSERT_TRUE(std::holds_alternative<PartialTiling>(r));
    const auto& next = std::get<PartialTiling>(r);
    EXPECT_TRUE(next.complete());
    EXPECT_EQ(next.tile_count(), 1);
    EXPECT_TRUE(isomorphic(next.to_disk(), disk_fixture(DiskKind::SinglePentagon)));
}

TEST(ForcedClosure, SixEdgeRunIsContradiction) {
    const auto p = PartialTiling::polygon(8);
    auto hole = p.walk(p.holes().front());
    hole.resize(6);
    EXPECT_TRUE(std::holds_alternative<ClosureContradiction>(forced_tile_closure(p, hole)));
    hole.resize(3);
    EXPECT_TRUE(std::holds_alternative<ClosureUndetermined>(forced_tile_closure(p, hole)));
    hole.resize(0);
    EXPECT_THROW(forced_tile_closure(p, hole), std::invalid_argument);
}

TEST(ForcedClosure, RejectsNonConsecutiveSeed) {
    const auto p = PartialTiling::polygon(6);
    const auto hole = p.walk(p.holes().front());
    const std::vector<Dart> bad{hole[0], hole[2]};
    EXPECT_THROW(forced_tile_closure(p, bad), std::invalid_argument);
}

TEST(EnumerateDisk, PentagonExceptions) {
    std::vector<DiskMap> found;
    const auto r = enumerate_disk(lemma_disk(5), [&](const DiskMap& d) { found.push_back(d); });
    EXPECT_EQ(r.counts, (std::map<int, long long>{{1, 1}, {11, 1}}));
    ASSERT_EQ(found.size(), 2u);
    std::set<CanonicalCode> got{canonical_code(found[0]), canonical_code(found[1])};
    std::set<CanonicalCode> want{canonical_code(disk_fixture(DiskKind::SinglePentagon)),
                                 canonical_code(disk_fixture(DiskKind::DodecaMinusTile))};
    EXPECT_EQ(got, want);
    for (const auto& d : found) EXPECT_TRUE(validate_disk(d).is_valid());
}

TEST(EnumerateDisk, SmallPolygonsHaveNoFilling) {
    for (int m : {2, 3, 4, 6}) EXPECT_TRUE(enumerate_disk(lemma_disk(m)).codes.empty()) << m;
}

TEST(EnumerateDisk, OctagonAndNonagonFixturesAppear) {
    const auto r8 = enumerate_disk(lemma_disk(8));
    EXPECT_GE(r8.codes.size(), 1u);
    EXPECT_TRUE(contains(r8, canonical_code(disk_fixture(DiskKind::Octagon))));
    const auto r9 = enumerate_disk(lemma_disk(9));
    EXPECT_TRUE(contains(r9, canonical_code(disk_fixture(DiskKind::Nonagon))));
}

TEST(EnumerateDisk, ForcedClosureOnlyChangesRuntime) {
    for (int m = 5; m <= 8; ++m) {
        auto on = lemma_disk(m);
        auto off = on;
        off.forced_closure = false;
        on.constraints.max_faces = off.constraints.max_faces = 13;
        EXPECT_EQ(enumerate_disk(on).counts, enumerate_disk(off).counts) << m;
    }
}
