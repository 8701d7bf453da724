#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pentile/core_map.hpp"
#include "pentile/disk_map.hpp"
#include "pentile/iso.hpp"

namespace pentile {

// Zero means unlimited.
struct Budget {
    std::uint64_t max_nodes = 0;
    double max_seconds = 0;

    // max_seconds from PENTILE_BUDGET_SECS when set.
    static Budget from_env();
};

struct EnumerationReport {
    int max_faces = 0;
    // Tile count -> number of pairwise non-isomorphic results.
    std::map<int, long long> counts;
    std::map<int, double> seconds;
    // Canonical codes in emission order.
    std::vector<CanonicalCode> codes;
    std::uint64_t nodes = 0;
    // False when a budget ran out; counts are then lower bounds only.
    bool complete = true;

    long long count(int faces) const {
        auto it = counts.find(faces);
        return it == counts.end() ? 0 : it->second;
    }
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(EnumerationReport partial);
    const EnumerationReport& partial() const noexcept { return partial_; }

private:
    EnumerationReport partial_;
};

struct SphereOptions {
    int max_faces = 12;
    int workers = 1;
    // Close tiles forced by runs of saturated vertices. Turning this off must
    // only change the running time.
    bool forced_closure = true;
    Budget budget = Budget::from_env();
};

using SphereSink = std::function<void(const SphericalMap&)>;

EnumerationReport enumerate_sphere(const SphereOptions& options, const SphereSink& sink = {});
EnumerationReport enumerate_sphere(int max_faces, const SphereSink& sink = {});

struct DiskConstraints {
    int m = 5;
    int max_high_degree_boundary = 1;
    bool interior_degree_exactly_3 = true;
    int max_faces = 15;
};

struct DiskOptions {
    DiskConstraints constraints;
    int workers = 1;
    bool forced_closure = true;
    Budget budget = Budget::from_env();
};

using DiskSink = std::function<void(const DiskMap&)>;

// Counts are keyed by the number of tiles inside the boundary.
EnumerationReport enumerate_disk(const DiskOptions& options, const DiskSink& sink = {});
EnumerationReport enumerate_disk(const DiskConstraints& constraints, const DiskSink& sink = {});

// Glues pentagons one edge pair at a time and deduplicates finished maps by
// canonical code. Slow; limited to max_faces <= 16.
EnumerationReport enumerate_sphere_naive(int max_faces, const SphereSink& sink = {},
                                         Budget budget = Budget::from_env());

}  // namespace pentile
