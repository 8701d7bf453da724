#include "pentile/generators.hpp"

#include <map>
#include <utility>

namespace pentile {

std::string to_string(GeneratorErrorKind kind) {
    switch (kind) {
        case GeneratorErrorKind::DistanceOutOfRange: return "DistanceOutOfRange";
        case GeneratorErrorKind::TooFewTimezones: return "TooFewTimezones";
        case GeneratorErrorKind::InvalidFace: return "InvalidFace";
        case GeneratorErrorKind::UnknownFixture: return "UnknownFixture";
    }
    return "Unknown";
}

GeneratorError::GeneratorError(GeneratorErrorKind kind, const std::string& detail)
    : std::invalid_argument(to_string(kind) + ": " + detail), kind_(kind) {}

namespace {

// Interns vertex names; angles and block numbers are reduced modulo the period.
class Labels {
public:
    explicit Labels(int period = 1) : period_(period) {}

    int operator()(const std::string& name, int coord = 0) {
        const int c = ((coord % period_) + period_) % period_;
        auto [it, inserted] = ids_.try_emplace({name, c}, static_cast<int>(ids_.size()));
        return it->second;
    }

private:
    int period_;
    std::map<std::pair<std::string, int>, int> ids_;
};

using Corners = std::vector<FaceCorner>;

Corners face(std::initializer_list<int> vs) {
    Corners c;
    for (const int v : vs) c.push_back({v, 0});
    return c;
}

SphericalMap checked(SphericalMap m, const char* what) {
    const auto report = validate_pentagonal(m);
    if (!report.is_valid()) {
        throw MapError(MapErrorKind::NotPentagonal,
                       std::string(what) + " violates " + report.violations.front().rule);
    }
    return m;
}

SphericalMap earth5(int t) {
    // Timezone width 30; x sits on the block border.
    Labels v(30 * t);
    std::vector<Corners> fs;
    const int N = v("N"), S = v("S");
    for (int k = 0; k < t; ++k) {
        const int o = 30 * k;
        const int x0 = v("x", o), x1 = v("x", o + 30);
        const int ym = v("y", o - 8), yp = v("y", o + 8), ymn = v("y", o + 22);
        const int zm = v("z", o - 8), zp = v("z", o + 8), zmn = v("z", o + 22);
        const int w = v("w", o), wn = v("w", o + 30);
        fs.push_back(face({N, x0, ym, yp, x1}));
        fs.push_back(face({ym, yp, zp, w, zm}));
        fs.push_back(face({x1, yp, zp, zmn, ymn}));
        fs.push_back(face({zp, zmn, wn, S, w}));
    }
    return build_from_faces(fs);
}

SphericalMap earth4(int t) {
    Labels v(60 * t);
    std::vector<Corners> fs;
    const int N = v("N"), S = v("S");
    for (int k = 0; k < t; ++k) {
        const int o = 60 * k;
        auto a = [&](int deg) { return v("a", o + deg); };
        auto b = [&](int deg) { return v("b", o + deg); };
        auto c = [&](int deg) { return v("c", o + deg); };
        const int p = v("p", o + 10), q = v("q", o + 30), s = v("s", o + 20);
        for (int j = 0; j < 3; ++j) {
            fs.push_back(face({N, a(20 * j), b(20 * j + 5), b(20 * j + 15), a(20 * j + 20)}));
            fs.push_back(face({a(20 * j), b(20 * j - 5), c(20 * j - 5), c(20 * j + 5), b(20 * j + 5)}));
        }
        fs.push_back(face({b(5), b(15), c(15), p, c(5)}));
        fs.push_back(face({b(25), b(35), c(35), q, c(25)}));
        fs.push_back(face({b(45), b(55), c(55), S, c(45)}));
        fs.push_back(face({c(15), p, s, q, c(25)}));
        fs.push_back(face({S, c(45), c(35), q, s}));
        fs.push_back(face({S, s, p, c(5), c(-5)}));
    }
    return build_from_faces(fs);
}

SphericalMap earth3(int t) {
    Labels v(60 * t);
    std::vector<Corners> fs;
    const int N = v("N"), S = v("S");
    for (int k = 0; k < t; ++k) {
        const int o = 60 * k;
        auto a = [&](int deg) { return v("a", o + deg); };
        auto b = [&](int deg) { return v("b", o + deg); };
        auto c = [&](int deg) { return v("c", o + deg); };
        const int d = v("d", o), f = v("f", o), g = v("g", o), h = v("h", o), e = v("e", o);
        fs.push_back(face({N, a(-20), b(-15), b(-5), a(0)}));
        fs.push_back(face({N, a(0), b(5), b(15), a(20)}));
        fs.push_back(face({N, a(20), b(25), b(35), a(40)}));
        fs.push_back(face({a(0), b(-5), c(-5), c(5), b(5)}));
        fs.push_back(face({a(20), b(15), c(15), c(25), b(25)}));
        fs.push_back(face({b(5), b(15), c(15), d, c(5)}));
        fs.push_back(face({c(-5), c(5), d, f, g}));
        fs.push_back(face({c(15), c(25), h, f, d}));
        fs.push_back(face({b(25), b(35), e, h, c(25)}));
        fs.push_back(face({g, f, h, e, S}));
        fs.push_back(face({b(-15), b(-5), c(-5), g, S}));
        fs.push_back(face({a(40), b(35), e, S, b(45)}));
    }
    return build_from_faces(fs);
}

// One distance-2 timezone, bounded either by the N-M-S meridians or by the
// N-L-Lo-S paths.
std::vector<Corners> earth2_block(Labels& v, int k, bool by_3prime) {
    const int N = v("N"), S = v("S");
    auto x = [&](const char* name, int block) { return v(name, block); };
    std::vector<Corners> fs;
    const int M = x("M", k), Mn = x("M", k + 1);
    const int P1 = x("P1", k), P2 = x("P2", k), Q = x("Q", k), R1 = x("R1", k), R2 = x("R2", k);
    const int T1 = x("T1", k), T2 = x("T2", k), U1 = x("U1", k), U2 = x("U2", k);
    const int W1 = x("W1", k), W2 = x("W2", k), W3 = x("W3", k);
    const int Z = x("Z", k), X = x("X", k), Y = x("Y", k);
    const int L = x("L", k), Lo = x("Lo", k);
    if (by_3prime) {
        // Start from the path N-L(k-1)-Lo(k-1)-S and develop to the right.
        const int Lp = x("L", k - 1), Lop = x("Lo", k - 1);
        fs.push_back(face({N, Lp, Lop, S, M}));
    }
    fs.push_back(face({N, M, P1, P2, Q}));
    fs.push_back(face({N, Q, R1, R2, L}));
    fs.push_back(face({P2, T1, T2, R1, Q}));
    fs.push_back(face({M, P1, W1, Z, S}));
    fs.push_back(face({P1, P2, T1, U1, W1}));
    fs.push_back(face({T1, T2, U2, W2, U1}));
    fs.push_back(face({R1, R2, W3, U2, T2}));
    fs.push_back(face({W1, U1, W2, X, Z}));
    fs.push_back(face({W2, U2, W3, Y, X}));
    fs.push_back(face({Z, X, Y, Lo, S}));
    fs.push_back(face({R2, L, Lo, Y, W3}));
    if (!by_3prime) fs.push_back(face({N, L, Lo, S, Mn}));
    return fs;
}

SphericalMap earth2(int t, bool by_3prime) {
    Labels v(t);
    std::vector<Corners> fs;
    for (int k = 0; k < t; ++k) {
        auto block = earth2_block(v, k, by_3prime);
        fs.insert(fs.end(), block.begin(), block.end());
    }
    return build_from_faces(fs);
}

SphericalMap earth1(int t) {
    Labels v(t);
    std::vector<Corners> fs;
    const int N = v("N"), S = v("S");
    for (int k = 0; k < t; ++k) {
        auto x = [&](const char* name) { return v(name, k); };
        const int Am = x("A-"), Ap = x("A+"), Bm = x("B-"), Bp = x("B+"), Cm = x("C-"), Cp = x("C+");
        const int D = x("D"), Em = x("E-"), Ep = x("E+"), Gm = x("G-"), Gp = x("G+");
        const int Hm = x("H-"), Hp = x("H+"), I = x("I"), Jm = x("J-"), Jp = x("J+");
        const int Km = x("K-"), Kp = x("K+");
        fs.push_back(face({N, Am, Bm, Bp, Ap}));
        fs.push_back(face({Bm, Cm, D, Cp, Bp}));
        fs.push_back(face({Ap, Bp, Cp, Ep, Gp}));
        fs.push_back(face({Am, Bm, Cm, Em, Gm}));
        fs.push_back(face({Cp, D, I, Hp, Ep}));
        fs.push_back(face({Cm, D, I, Hm, Em}));
        fs.push_back(face({Hp, I, Hm, Jm, Jp}));
        fs.push_back(face({Ep, Hp, Jp, Kp, Gp}));
        fs.push_back(face({Em, Hm, Jm, Km, Gm}));
        fs.push_back(face({Jp, Jm, Km, S, Kp}));
        // The closing S-N edge of each face is a meridian; meridian k lies
        // between timezones k-1 and k.
        fs.push_back({{N, 0}, {Ap, 0}, {Gp, 0}, {Kp, 0}, {S, 1 + (k + 1) % t}});
        fs.push_back({{N, 0}, {Am, 0}, {Gm, 0}, {Km, 0}, {S, 1 + k}});
    }
    return build_from_faces(fs);
}

}  // namespace

SphericalMap dodecahedron() {
    std::vector<Corners> fs;
    auto A = [](int i) { return (i % 5 + 5) % 5; };
    auto B = [](int i) { return 5 + (i % 5 + 5) % 5; };
    auto C = [](int i) { return 10 + (i % 5 + 5) % 5; };
    auto D = [](int i) { return 15 + (i % 5 + 5) % 5; };
    fs.push_back(face({A(0), A(1), A(2), A(3), A(4)}));
    for (int i = 0; i < 5; ++i) {
        fs.push_back(face({A(i), A(i + 1), B(i + 1), C(i), B(i)}));
        fs.push_back(face({C(i), B(i + 1), C(i + 1), D(i + 1), D(i)}));
    }
    fs.push_back(face({D(0), D(1), D(2), D(3), D(4)}));
    return checked(build_from_faces(fs), "dodecahedron");
}

int earth_map_face_count(int distance, int timezones) {
    return distance == 5 ? 4 * timezones : 12 * timezones;
}

SphericalMap earth_map(int distance, int timezones) {
    if (distance < 1 || distance > 5) {
        throw GeneratorError(GeneratorErrorKind::DistanceOutOfRange,
                             "distance " + std::to_string(distance) + " not in [1, 5]");
    }
    const int min_t = distance == 5 ? 4 : 2;
    if (timezones < min_t) {
        throw GeneratorError(GeneratorErrorKind::TooFewTimezones,
                             "distance " + std::to_string(distance) + " needs at least " +
                                 std::to_string(min_t) + " timezones");
    }
    switch (distance) {
        case 1: return checked(earth1(timezones), "earth map");
        case 2: return checked(earth2(timezones, false), "earth map");
        case 3: return checked(earth3(timezones), "earth map");
        case 4: return checked(earth4(timezones), "earth map");
        default: return checked(earth5(timezones), "earth map");
    }
}

SphericalMap earth_map_via_meridian_3prime(int timezones) {
    if (timezones < 2) {
        throw GeneratorError(GeneratorErrorKind::TooFewTimezones, "needs at least 2 timezones");
    }
    return checked(earth2(timezones, true), "earth map");
}

SphericalMap three_v4_example() {
    Labels v;
    auto q = [&](const char* name, int sx, int sy) {
        return v(std::string(name) + (sx > 0 ? "+" : "-") + (sy > 0 ? "+" : "-"));
    };
    const int Om = v("Omega");
    std::vector<Corners> fs;
    // Four faces around the outer vertex where the rays meet.
    for (const int sy : {1, -1}) fs.push_back(face({Om, q("K", 1, sy), q("T", 1, sy), q("T", -1, sy), q("K", -1, sy)}));
    for (const int sx : {1, -1}) fs.push_back(face({Om, q("K", sx, 1), q("S", sx, 1), q("S", sx, -1), q("K", sx, -1)}));
    for (const int sx : {1, -1})
        for (const int sy : {1, -1})
            fs.push_back(face({q("T", sx, sy), q("K", sx, sy), q("S", sx, sy), q("B", sx, sy), q("A", sx, sy)}));
    const int Cp = v("C+"), Cm = v("C-"), Dp = v("D+"), Dm = v("D-");
    const int Zp = v("Z+"), Zm = v("Z-"), Yp = v("Y+"), Ym = v("Y-");
    fs.push_back(face({q("T", -1, 1), q("T", 1, 1), q("A", 1, 1), Cp, q("A", -1, 1)}));
    fs.push_back(face({q("T", -1, -1), q("T", 1, -1), q("A", 1, -1), Cm, q("A", -1, -1)}));
    fs.push_back(face({q("S", 1, 1), q("S", 1, -1), q("B", 1, -1), Dp, q("B", 1, 1)}));
    fs.push_back(face({q("S", -1, 1), q("S", -1, -1), q("B", -1, -1), Dm, q("B", -1, 1)}));
    fs.push_back(face({q("A", 1, 1), q("B", 1, 1), Dp, Yp, Zp}));
    fs.push_back(face({Dp, q("B", 1, -1), q("A", 1, -1), Cm, Yp}));
    fs.push_back(face({q("A", -1, -1), q("B", -1, -1), Dm, Ym, Zm}));
    fs.push_back(face({Dm, q("B", -1, 1), q("A", -1, 1), Cp, Ym}));
    fs.push_back(face({Cp, q("A", 1, 1), Zp, Zm, Ym}));
    fs.push_back(face({Cm, q("A", -1, -1), Zm, Zp, Yp}));
    return checked(build_from_faces(fs), "three_v4_example");
}

SphericalMap connected_sum(const SphericalMap& a, Face tile_a, const SphericalMap& b_in, Face tile_b,
                           int rotation, bool reflect) {
    auto seam = [](const SphericalMap& m, Face f, const char* which) {
        if (!m.is_face(f)) {
            throw GeneratorError(GeneratorErrorKind::InvalidFace,
                                 std::string(which) + " is not a face id: " + std::to_string(f.id));
        }
        auto darts = m.face_darts(f);
        if (darts.size() != 5) {
            throw GeneratorError(GeneratorErrorKind::InvalidFace,
                                 std::string(which) + " is not a pentagon");
        }
        return darts;
    };
    if (rotation < 0 || rotation >= 5) {
        throw GeneratorError(GeneratorErrorKind::InvalidFace, "rotation must lie in [0, 5)");
    }
    const auto x = seam(a, tile_a, "tile_a");
    seam(b_in, tile_b, "tile_b");
    const SphericalMap b = reflect ? mirror(b_in) : b_in;
    const auto y = b.face_darts(b.face_of(reflect ? b_in.alpha(tile_b.id) : tile_b.id));

    const int na = a.dart_count(), nb = b.dart_count();
    std::vector<char> drop_a(na, 0), drop_b(nb, 0);
    std::map<Dart, int> x_index, y_index;
    for (int i = 0; i < 5; ++i) {
        drop_a[x[i]] = 1;
        drop_b[y[i]] = 1;
        x_index[x[i]] = i;
        y_index[y[i]] = i;
    }
    std::vector<Dart> new_a(na, -1), new_b(nb, -1);
    Dart next = 0;
    for (Dart d = 0; d < na; ++d)
        if (!drop_a[d]) new_a[d] = next++;
    for (Dart d = 0; d < nb; ++d)
        if (!drop_b[d]) new_b[d] = next++;

    auto mod5 = [](int i) { return ((i % 5) + 5) % 5; };
    const int c = rotation;
    std::vector<Dart> sigma(next), alpha(next);
    for (Dart d = 0; d < na; ++d) {
        if (drop_a[d]) continue;
        const Dart s = a.sigma(d);
        if (auto it = x_index.find(s); it != x_index.end()) {
            // d is alpha(x_{i-1}); continue into b just after y_{c-i}.
            sigma[new_a[d]] = new_b[b.sigma(y[mod5(c - it->second)])];
        } else {
            sigma[new_a[d]] = new_a[s];
        }
        const Dart o = a.alpha(d);
        if (auto it = x_index.find(o); it != x_index.end()) {
            alpha[new_a[d]] = new_b[b.alpha(y[mod5(c - it->second - 1)])];
        } else {
            alpha[new_a[d]] = new_a[o];
        }
    }
    for (Dart d = 0; d < nb; ++d) {
        if (drop_b[d]) continue;
        const Dart s = b.sigma(d);
        if (auto it = y_index.find(s); it != y_index.end()) {
            sigma[new_b[d]] = new_a[a.sigma(x[mod5(c - it->second)])];
        } else {
            sigma[new_b[d]] = new_b[s];
        }
        const Dart o = b.alpha(d);
        if (auto it = y_index.find(o); it != y_index.end()) {
            alpha[new_b[d]] = new_a[a.alpha(x[mod5(c - it->second - 1)])];
        } else {
            alpha[new_b[d]] = new_b[o];
        }
    }
    return checked(SphericalMap::from_permutations(std::move(sigma), std::move(alpha)), "connected sum");
}

DiskKind parse_disk_kind(const std::string& name) {
    if (name == "8gon") return DiskKind::Octagon;
    if (name == "9gon") return DiskKind::Nonagon;
    if (name == "dodeca_minus_tile") return DiskKind::DodecaMinusTile;
    if (name == "single_pentagon") return DiskKind::SinglePentagon;
    throw GeneratorError(GeneratorErrorKind::UnknownFixture, "unknown disk fixture '" + name + "'");
}

std::string to_string(DiskKind kind) {
    switch (kind) {
        case DiskKind::Octagon: return "8gon";
        case DiskKind::Nonagon: return "9gon";
        case DiskKind::DodecaMinusTile: return "dodeca_minus_tile";
        case DiskKind::SinglePentagon: return "single_pentagon";
    }
    return "unknown";
}

namespace {

DiskMap disk_with_outer_length(SphericalMap m, int outer_length) {
    for (const Face f : m.face_ids()) {
        if (static_cast<int>(m.face_darts(f).size()) == outer_length) {
            DiskMap disk(std::move(m), f);
            if (!validate_disk(disk).is_valid()) {
                throw MapError(MapErrorKind::NotPentagonal, "disk fixture fails validation");
            }
            return disk;
        }
    }
    throw MapError(MapErrorKind::InvalidFace, "fixture has no face of the boundary length");
}

}  // namespace

DiskMap disk_fixture(DiskKind kind) {
    switch (kind) {
        case DiskKind::Octagon:
            return disk_with_outer_length(
                build_from_faces(std::vector<std::vector<int>>{
                    {0, 1, 2, 3, 4}, {4, 5, 6, 7, 0}, {0, 1, 2, 3, 4, 5, 6, 7}}),
                8);
        case DiskKind::Nonagon: {
            // Centre 0, spokes 1..3, boundary pairs p_i = 4 + 2i, q_i = 5 + 2i.
            std::vector<std::vector<int>> fs;
            std::vector<int> outer;
            for (int i = 0; i < 3; ++i) {
                const int a0 = 1 + i, a1 = 1 + (i + 1) % 3, p = 4 + 2 * i, q = 5 + 2 * i;
                fs.push_back({0, a0, p, q, a1});
                outer.insert(outer.end(), {a0, p, q});
            }
            fs.push_back(outer);
            return disk_with_outer_length(build_from_faces(fs), 9);
        }
        case DiskKind::DodecaMinusTile: {
            auto m = dodecahedron();
            const Face f = m.face_ids().front();
            DiskMap disk(std::move(m), f);
            return disk;
        }
        case DiskKind::SinglePentagon:
            return disk_with_outer_length(
                build_from_faces(std::vector<std::vector<int>>{{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}}), 5);
    }
    throw GeneratorError(GeneratorErrorKind::UnknownFixture, "unknown disk fixture");
}

}  // namespace pentile
