#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <set>
#include <thread>
#include <variant>

#include "pentile/enumerate.hpp"
#include "pentile/partial_tiling.hpp"

namespace pentile {

Budget Budget::from_env() {
    Budget b;
    if (const char* env = std::getenv("PENTILE_BUDGET_SECS")) {
        char* end = nullptr;
        const double secs = std::strtod(env, &end);
        if (end != env && secs > 0) b.max_seconds = secs;
    }
    return b;
}

BudgetExceeded::BudgetExceeded(EnumerationReport partial)
    : std::runtime_error("enumeration budget exhausted; counts are incomplete"),
      partial_(std::move(partial)) {}

namespace {

struct Rules {
    bool disk = false;
    int target = 0;  // sphere: exact tile count; disk: maximum
    int budget = 0;  // sphere: allowed degree excess
    int max_high = 0;
    bool exactly3 = false;
    bool forced = true;
};

struct Found {
    int faces;
    SphericalMap map;
    CanonicalCode code;
    std::optional<Face> outer;
};

struct OutOfBudget {};

int tiles_needed(int hole_length) {
    if (hole_length == 5) return 1;
    // A tile glued into a region adds at most three boundary edges.
    return std::max(2, hole_length / 3);
}

class Search {
public:
    Search(const Rules& rules, const Budget& budget, std::atomic<std::uint64_t>& nodes,
           std::atomic<bool>& stop)
        : rules_(rules), budget_(budget), nodes_(nodes), stop_(stop),
          start_(std::chrono::steady_clock::now()) {}

    void dfs(const PartialTiling& s, std::vector<Found>& out) {
        tick();
        if (s.complete()) {
            leaf(s, out);
            return;
        }
        for (const auto& child : children(s)) dfs(child, out);
    }

    std::vector<PartialTiling> children(const PartialTiling& s) const {
        const auto reps = s.holes();
        int need = s.tile_count();
        for (const Dart h : reps) need += tiles_needed(static_cast<int>(s.walk(h).size()));
        if (need > rules_.target) return {};

        Dart h0 = reps.front();
        if (rules_.forced) {
            std::optional<std::vector<PartialTiling>> forced;
            h0 = pick_forced(s, reps, forced);
            if (forced) return std::move(*forced);
        }

        std::vector<PartialTiling> out;
        for (const auto& spec : candidates(s, h0)) {
            PartialTiling next = s;
            next.place_tile(spec);
            if (consistent(next, spec.start)) out.push_back(std::move(next));
        }
        return out;
    }

    void tick() {
        const auto n = ++nodes_;
        if (stop_.load(std::memory_order_relaxed)) throw OutOfBudget{};
        if (budget_.max_nodes && n > budget_.max_nodes) {
            stop_ = true;
            throw OutOfBudget{};
        }
        if (budget_.max_seconds > 0 && (n & 255) == 0) {
            const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
            if (el.count() > budget_.max_seconds) {
                stop_ = true;
                throw OutOfBudget{};
            }
        }
    }

private:
    bool saturated(const PartialTiling& s, int v) const {
        const int deg = s.degree(v);
        if (!rules_.disk) return deg >= 3 && s.excess() >= rules_.budget;
        if (s.on_outer(v)) return deg == 3 && s.high_boundary() >= rules_.max_high;
        return rules_.exactly3 && deg >= 3;
    }

    // Chooses the hole dart to branch on: the start of the longest run whose
    // inner vertices are saturated. Sets `forced` when the state is already
    // decided (a contradiction, or a hole that must be one tile).
    Dart pick_forced(const PartialTiling& s, const std::vector<Dart>& reps,
                     std::optional<std::vector<PartialTiling>>& forced) const {
        Dart best = reps.front();
        std::tuple<int, int, Dart> best_key{1, 1 << 30, best};
        for (const Dart rep : reps) {
            const auto w = s.walk(rep);
            const int len = static_cast<int>(w.size());
            std::vector<char> sat(len);
            bool all = true;
            for (int i = 0; i < len; ++i) {
                sat[i] = saturated(s, s.vertex(w[i]));
                all = all && sat[i];
            }
            if (all) {
                auto r = forced_tile_closure(s, w);
                forced.emplace();
                if (auto* next = std::get_if<PartialTiling>(&r)) {
                    if (consistent(*next, rep)) forced->push_back(std::move(*next));
                }
                return rep;
            }
            for (int a = 0; a < len; ++a) {
                if (sat[a]) continue;
                int run = 1;
                while (sat[(a + run) % len]) ++run;
                if (run >= 2) {
                    std::vector<Dart> seed;
                    for (int i = 0; i < run && i < 6; ++i) seed.push_back(w[(a + i) % len]);
                    if (std::holds_alternative<ClosureContradiction>(forced_tile_closure(s, seed))) {
                        forced.emplace();
                        return rep;
                    }
                }
                const std::tuple<int, int, Dart> key{-run, len, w[a]};
                if (key < best_key) {
                    best_key = key;
                    best = w[a];
                }
            }
        }
        return best;
    }

    struct Add {
        int v;
        int n;
    };

    bool caps_allow(const PartialTiling& s, const std::vector<Add>& adds) const {
        if (!rules_.disk) {
            int extra = 0;
            for (const Add& a : adds) {
                const int deg = s.degree(a.v);
                extra += std::max(0, deg + a.n - 3) - std::max(0, deg - 3);
            }
            return s.excess() + extra <= rules_.budget;
        }
        int high = s.high_boundary();
        for (const Add& a : adds) {
            const int deg = s.degree(a.v);
            if (s.on_outer(a.v)) {
                if (deg <= 3 && deg + a.n > 3) ++high;
            } else if (rules_.exactly3 && deg + a.n > 3) {
                return false;
            }
        }
        return high <= rules_.max_high;
    }

    std::vector<TileSpec> candidates(const PartialTiling& s, Dart h0) const {
        std::vector<TileSpec> out;
        const auto w = s.walk(h0);
        const int m = static_cast<int>(w.size());
        auto pv = [&](int x) { return s.vertex(w[x % m]); };
        if (pv(0) == pv(1)) return out;

        std::vector<int> visited{pv(0), pv(1)};
        std::vector<Add> adds;
        TileSpec spec{h0, {{0, 1, 0}}};
        auto seen = [&](int v) { return std::find(visited.begin(), visited.end(), v) != visited.end(); };
        auto add = [&](int v) {
            for (Add& a : adds)
                if (a.v == v) return ++a.n, void();
            adds.push_back({v, 1});
        };
        auto remove = [&](int v) {
            for (auto it = adds.begin(); it != adds.end(); ++it)
                if (it->v == v && --it->n == 0) return adds.erase(it), void();
        };

        auto go = [&](auto&& self, int x, int e) -> void {
            if (x == m) {
                if (e == 5) out.push_back(spec);
                return;
            }
            if (e >= 5) return;
            if (x + 1 == m || !seen(pv(x + 1))) {
                spec.segments.push_back({x, x + 1, 0});
                if (x + 1 < m) visited.push_back(pv(x + 1));
                self(self, x + 1, e + 1);
                if (x + 1 < m) visited.pop_back();
                spec.segments.pop_back();
            }
            for (int c = 1; e + c <= 5; ++c) {
                for (int y = x + 1; y <= m; ++y) {
                    if (y == m ? e + c != 5 : e + c >= 5) continue;
                    if (y < m && seen(pv(y))) continue;
                    add(pv(x));
                    add(pv(y));
                    if (!rules_.forced || caps_allow(s, adds)) {
                        spec.segments.push_back({x, y, c});
                        if (y < m) visited.push_back(pv(y));
                        self(self, y, e + c);
                        if (y < m) visited.pop_back();
                        spec.segments.pop_back();
                    }
                    remove(pv(y));
                    remove(pv(x));
                }
            }
        };
        go(go, 1, 1);
        return out;
    }

    bool consistent(const PartialTiling& s, Dart tile_dart) const {
        if (!rules_.disk && s.excess() > rules_.budget) return false;
        if (rules_.disk && s.high_boundary() > rules_.max_high) return false;
        Dart d = tile_dart;
        do {
            const int v = s.vertex(d);
            const int deg = s.degree(v);
            if (rules_.disk && !s.on_outer(v) && rules_.exactly3 && deg > 3) return false;
            if (s.hole_corners(v) == 0) {
                const int min_deg = rules_.disk && s.on_outer(v) ? 2 : 3;
                if (deg < min_deg) return false;
            }
            d = s.phi(d);
        } while (d != tile_dart);
        return true;
    }

    void leaf(const PartialTiling& s, std::vector<Found>& out) const {
        if (!rules_.disk) {
            if (s.tile_count() != rules_.target) return;
            auto map = s.to_map();
            if (!validate_pentagonal(map).is_valid()) throw std::logic_error("search produced an invalid tiling");
            auto code = code_at(map, 0, Orientation::Direct);
            if (code != canonical_code(map)) return;
            out.push_back({s.tile_count(), std::move(map), std::move(code), std::nullopt});
            return;
        }
        auto disk = s.to_disk();
        if (!validate_disk(disk).is_valid()) return;
        auto code = code_at(disk.map(), 0, Orientation::Direct);
        if (code != canonical_code(disk)) return;
        const Face outer = disk.outer();
        out.push_back({s.tile_count(), disk.map(), std::move(code), outer});
    }

    Rules rules_;
    Budget budget_;
    std::atomic<std::uint64_t>& nodes_;
    std::atomic<bool>& stop_;
    std::chrono::steady_clock::time_point start_;
};

struct RunResult {
    std::vector<Found> found;
    bool complete = true;
};

RunResult run_search(const Rules& rules, const PartialTiling& root, int workers, const Budget& budget,
                     std::atomic<std::uint64_t>& nodes) {
    std::atomic<bool> stop{false};
    Search search(rules, budget, nodes, stop);
    RunResult result;

    // Split the tree into units independently of the worker count, so that
    // emission order does not depend on it.
    std::vector<PartialTiling> frontier{root};
    try {
        for (int level = 0; level < 4 && frontier.size() < 64; ++level) {
            std::vector<PartialTiling> next;
            bool grew = false;
            for (const auto& s : frontier) {
                if (s.complete()) {
                    next.push_back(s);
                    continue;
                }
                search.tick();
                for (auto& c : search.children(s)) next.push_back(std::move(c));
                grew = true;
            }
            frontier = std::move(next);
            if (!grew) break;
        }
    } catch (const OutOfBudget&) {
        result.complete = false;
        return result;
    }

    std::vector<std::vector<Found>> per_unit(frontier.size());
    std::vector<char> finished(frontier.size(), 0);
    std::atomic<std::size_t> next_unit{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        Search local(rules, budget, nodes, stop);
        for (;;) {
            const std::size_t i = next_unit++;
            if (i >= frontier.size()) return;
            try {
                local.dfs(frontier[i], per_unit[i]);
                finished[i] = 1;
            } catch (const OutOfBudget&) {
                return;
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                stop = true;
                return;
            }
        }
    };
    const int k = std::max(1, workers);
    if (k == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < k; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        if (!finished[i]) result.complete = false;
        for (auto& f : per_unit[i]) result.found.push_back(std::move(f));
    }
    return result;
}

}  // namespace

EnumerationReport enumerate_sphere(const SphereOptions& options, const SphereSink& sink) {
    if (options.max_faces < 12) throw std::invalid_argument("max_faces must be at least 12");
    EnumerationReport report;
    report.max_faces = options.max_faces;
    std::atomic<std::uint64_t> nodes{0};
    std::set<CanonicalCode> seen;
    for (int f = 12; f <= options.max_faces; f += 2) {
        Rules rules;
        rules.target = f;
        rules.budget = (f - 12) / 2;
        rules.forced = options.forced_closure;
        const auto t0 = std::chrono::steady_clock::now();
        auto result = run_search(rules, PartialTiling::pentagon(), options.workers, options.budget, nodes);
        for (auto& found : result.found) {
            if (!seen.insert(found.code).second) throw std::logic_error("isomorph emitted twice");
            report.codes.push_back(found.code);
            if (sink) sink(found.map);
        }
        report.counts[f] = static_cast<long long>(result.found.size());
        report.seconds[f] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report.nodes = nodes;
        if (!result.complete) {
            report.complete = false;
            throw BudgetExceeded(report);
        }
    }
    report.nodes = nodes;
    return report;
}

EnumerationReport enumerate_sphere(int max_faces, const SphereSink& sink) {
    SphereOptions options;
    options.max_faces = max_faces;
    return enumerate_sphere(options, sink);
}

EnumerationReport enumerate_disk(const DiskOptions& options, const DiskSink& sink) {
    const auto& c = options.constraints;
    if (c.m < 2 || c.max_faces < 1) throw std::invalid_argument("need m >= 2 and max_faces >= 1");
    Rules rules;
    rules.disk = true;
    rules.target = c.max_faces;
    rules.max_high = c.max_high_degree_boundary;
    rules.exactly3 = c.interior_degree_exactly_3;
    rules.forced = options.forced_closure;

    EnumerationReport report;
    report.max_faces = c.max_faces;
    std::atomic<std::uint64_t> nodes{0};
    const auto t0 = std::chrono::steady_clock::now();
    auto result = run_search(rules, PartialTiling::polygon(c.m), options.workers, options.budget, nodes);
    std::set<CanonicalCode> seen;
    for (auto& found : result.found) {
        if (!seen.insert(found.code).second) throw std::logic_error("isomorph emitted twice");
        ++report.counts[found.faces];
        report.codes.push_back(found.code);
        if (sink) sink(DiskMap(found.map, *found.outer));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& [f, n] : report.counts) report.seconds[f] = secs;
    report.nodes = nodes;
    if (!result.complete) {
        report.complete = false;
        throw BudgetExceeded(report);
    }
    return report;
}

EnumerationReport enumerate_disk(const DiskConstraints& constraints, const DiskSink& sink) {
    DiskOptions options;
    options.constraints = constraints;
    return enumerate_disk(options, sink);
}

}  // namespace pentile
