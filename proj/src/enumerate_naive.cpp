#include <algorithm>
#include <set>

#include "pentile/enumerate.hpp"

namespace pentile {

namespace {

// Pentagons with fixed face permutation phi(5t + i) = 5t + (i + 1) % 5,
// glued edge by edge.
class Gluer {
public:
    Gluer(int max_faces, const Budget& budget, const SphereSink& sink, EnumerationReport& report)
        : max_faces_(max_faces), budget_(budget), sink_(sink), report_(report),
          start_(std::chrono::steady_clock::now()) {}

    void run() {
        add_tile();
        dfs();
    }

private:
    static Dart phi(Dart d) { return 5 * (d / 5) + (d % 5 + 1) % 5; }
    static Dart phi_inv(Dart d) { return 5 * (d / 5) + (d % 5 + 4) % 5; }

    void add_tile() {
        alpha_.insert(alpha_.end(), 5, -1);
        ++tiles_;
    }
    void drop_tile() {
        alpha_.resize(alpha_.size() - 5);
        --tiles_;
    }
    void pair(Dart a, Dart b) {
        alpha_[a] = b;
        alpha_[b] = a;
    }
    void unpair(Dart a, Dart b) {
        alpha_[a] = -1;
        alpha_[b] = -1;
    }

    // Next unpaired dart along the boundary after the unpaired dart d.
    Dart boundary_next(Dart d) const {
        Dart x = phi(d);
        while (alpha_[x] >= 0) x = phi(alpha_[x]);
        return x;
    }

    // Darts around the vertex at the tail of x; `closed` tells whether the
    // rotation is complete.
    std::vector<Dart> around(Dart x, bool& closed) const {
        std::vector<Dart> out{x};
        closed = false;
        Dart y = x;
        while (alpha_[y] >= 0) {
            y = phi(alpha_[y]);
            if (y == x) {
                closed = true;
                return out;
            }
            out.push_back(y);
        }
        y = x;
        for (;;) {
            const Dart p = phi_inv(y);
            if (alpha_[p] < 0) break;
            y = alpha_[p];
            out.push_back(y);
        }
        return out;
    }

    bool vertex_ok(Dart x) const {
        bool closed = false;
        auto darts = around(x, closed);
        if (closed && darts.size() < 3) return false;
        for (auto& d : darts) d /= 5;
        std::sort(darts.begin(), darts.end());
        return std::adjacent_find(darts.begin(), darts.end()) == darts.end();
    }

    bool degree_room() const {
        const int n = static_cast<int>(alpha_.size());
        std::vector<char> seen(n, 0);
        int excess = 0;
        for (Dart d = 0; d < n; ++d) {
            if (seen[d]) continue;
            bool closed = false;
            const auto darts = around(d, closed);
            for (const Dart x : darts) seen[x] = 1;
            excess += std::max(0, static_cast<int>(darts.size()) - 3);
        }
        return 12 + 2 * excess <= max_faces_;
    }

    void tick() {
        ++report_.nodes;
        if (budget_.max_nodes && report_.nodes > budget_.max_nodes) throw BudgetExceeded(report_);
        if (budget_.max_seconds > 0 && (report_.nodes & 1023) == 0) {
            const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
            if (el.count() > budget_.max_seconds) throw BudgetExceeded(report_);
        }
    }

    bool glue_ok(Dart a, Dart b) const {
        return a / 5 != b / 5 && vertex_ok(a) && vertex_ok(b) && degree_room();
    }

    void dfs() {
        tick();
        const auto it = std::find(alpha_.begin(), alpha_.end(), -1);
        if (it == alpha_.end()) {
            finish();
            return;
        }
        const Dart d = static_cast<Dart>(it - alpha_.begin());
        for (Dart e = boundary_next(d); e != d; e = boundary_next(e)) {
            pair(d, e);
            if (glue_ok(d, e)) dfs();
            unpair(d, e);
        }
        if (tiles_ < max_faces_) {
            add_tile();
            const Dart e = 5 * (tiles_ - 1);
            pair(d, e);
            if (glue_ok(d, e)) dfs();
            unpair(d, e);
            drop_tile();
        }
    }

    void finish() {
        const int n = static_cast<int>(alpha_.size());
        std::vector<Dart> sigma(n);
        for (Dart d = 0; d < n; ++d) sigma[d] = phi(alpha_[d]);
        const auto map = SphericalMap::from_permutations(std::move(sigma), alpha_);
        if (!validate_pentagonal(map).is_valid()) return;
        auto code = canonical_code(map);
        if (!seen_.insert(code).second) return;
        ++report_.counts[map.face_count()];
        report_.codes.push_back(std::move(code));
        if (sink_) sink_(map);
    }

    int max_faces_;
    Budget budget_;
    const SphereSink& sink_;
    EnumerationReport& report_;
    std::chrono::steady_clock::time_point start_;
    std::vector<Dart> alpha_;
    int tiles_ = 0;
    std::set<CanonicalCode> seen_;
};

}  // namespace

EnumerationReport enumerate_sphere_naive(int max_faces, const SphereSink& sink, Budget budget) {
    if (max_faces < 12) throw std::invalid_argument("max_faces must be at least 12");
    if (max_faces > 16) throw std::invalid_argument("the gluing oracle is limited to max_faces <= 16");
    EnumerationReport report;
    report.max_faces = max_faces;
    for (int f = 12; f <= max_faces; f += 2) report.counts[f] = 0;
    const auto t0 = std::chrono::steady_clock::now();
    Gluer(max_faces, budget, sink, report).run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (auto& [f, n] : report.counts) report.seconds[f] = secs;
    return report;
}

}  // namespace pentile
