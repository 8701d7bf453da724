#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pentile/core_map.hpp"
#include "pentile/disk_map.hpp"
#include "pentile/enumerate.hpp"
#include "pentile/generators.hpp"
#include "pentile/iso.hpp"

namespace pentile {

struct TheoremVerdict {
    std::string theorem_id;
    std::string universe;
    std::vector<CanonicalCode> counterexamples;
    // Members whose hypothesis fired and whose conclusion held.
    std::vector<CanonicalCode> witnesses;
    // Members the hypothesis did not apply to.
    int vacuous = 0;
    int examined = 0;

    bool holds() const noexcept { return counterexamples.empty(); }
};

struct Corpus {
    int max_faces = 0;
    bool complete = true;
    std::vector<SphericalMap> maps;
};

// Throws BudgetExceeded like enumerate_sphere.
Corpus sphere_corpus(int max_faces, int workers = 1, Budget budget = Budget::from_env());

struct NotEarthMap {
    int high_degree_count = 0;
};

using Classification = std::variant<FamilyTag, NotEarthMap>;

class ClassificationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Throws MapError(NotPentagonal) for an invalid tiling.
Classification classify_two_pole(const SphericalMap& map);

std::string to_string(const Classification& c);

TheoremVerdict check_one_high_degree(const Corpus& corpus);
TheoremVerdict check_distance5(const Corpus& corpus);
TheoremVerdict check_distance4(const Corpus& corpus);

// Disk fillings grouped by boundary length, all under the same constraints.
struct DiskCorpus {
    DiskConstraints constraints;
    bool complete = true;
    std::map<int, std::vector<DiskMap>> by_boundary;
};

// Enumerates m = 2..max_m with the given constraints (constraints.m ignored).
DiskCorpus disk_corpus(int max_m, DiskConstraints constraints, int workers = 1,
                       Budget budget = Budget::from_env());

// Needs every m in [2, 7] present and max_faces >= 15; throws invalid_argument otherwise.
TheoremVerdict check_lemma_cycle(const DiskCorpus& disks);

}  // namespace pentile
