#include "pentile/iso.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace pentile {

std::string CanonicalCode::hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (const auto b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

CanonicalCode CanonicalCode::from_hex(std::string_view text) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("bad hex digit in canonical code");
    };
    if (text.size() % 2 != 0) throw std::invalid_argument("odd-length canonical code");
    CanonicalCode code;
    code.bytes.reserve(text.size() / 2);
    for (std::size_t i = 0; i < text.size(); i += 2) {
        code.bytes.push_back(static_cast<std::uint8_t>(nibble(text[i]) * 16 + nibble(text[i + 1])));
    }
    return code;
}

namespace {

using Word = std::uint16_t;

struct Scratch {
    std::vector<int> number;      // BFS number per vertex index, -1 if unseen
    std::vector<Dart> entry;      // entry dart per BFS number
    std::vector<Word> words;
};

// Writes the BFS code for (root, orientation) into s.words. When `best` is
// given, stops as soon as the code is known to exceed it and returns false.
bool bfs_code(const SphericalMap& m, Dart root, Orientation o, const std::vector<Word>* best,
              Scratch& s) {
    const int nv = m.vertex_count();
    s.number.assign(nv, -1);
    s.entry.clear();
    s.words.clear();
    bool deciding = best != nullptr;
    std::size_t pos = 0;
    auto put = [&](int value) {
        const Word w = static_cast<Word>(value);
        if (deciding) {
            const Word b = (*best)[pos];
            if (w > b) return false;
            if (w < b) deciding = false;
        }
        s.words.push_back(w);
        ++pos;
        return true;
    };

    const bool direct = o == Orientation::Direct;
    s.number[m.vertex_index_of(root)] = 0;
    s.entry.push_back(root);
    for (std::size_t k = 0; k < s.entry.size(); ++k) {
        const Dart e = s.entry[k];
        const int deg = m.degree_of(e);
        if (!put(deg)) return false;
        Dart d = e;
        for (int j = 0; j < deg; ++j) {
            const Dart a = m.alpha(d);
            const int wi = m.vertex_index_of(a);
            if (s.number[wi] < 0) {
                s.number[wi] = static_cast<int>(s.entry.size());
                s.entry.push_back(a);
            }
            const Dart we = s.entry[s.number[wi]];
            const int wdeg = m.degree_of(a);
            const int rel = direct ? (m.rotation_index(a) - m.rotation_index(we) + wdeg) % wdeg
                                   : (m.rotation_index(we) - m.rotation_index(a) + wdeg) % wdeg;
            if (!put(s.number[wi]) || !put(rel)) return false;
            d = direct ? m.sigma(d) : m.sigma_inv(d);
        }
    }
    return true;
}

CanonicalCode to_code(const std::vector<Word>& words) {
    CanonicalCode c;
    c.bytes.reserve(words.size() * 2);
    for (const Word w : words) {
        c.bytes.push_back(static_cast<std::uint8_t>(w >> 8));
        c.bytes.push_back(static_cast<std::uint8_t>(w & 0xff));
    }
    return c;
}

void check_size(const SphericalMap& m) {
    if (m.dart_count() > 0xffff) throw std::length_error("map too large for a canonical code");
}

std::vector<Word> minimize(const SphericalMap& m, std::span<const RootChoice> roots) {
    check_size(m);
    Scratch s;
    std::vector<Word> best;
    bool have = false;
    for (const auto& rc : roots) {
        if (bfs_code(m, rc.root, rc.orientation, have ? &best : nullptr, s)) {
            if (!have || s.words < best) best = s.words;
            have = true;
        }
    }
    return best;
}

std::vector<RootChoice> all_roots(const SphericalMap& m, bool include_reflections) {
    std::vector<RootChoice> roots;
    roots.reserve(m.dart_count() * 2);
    for (Dart d = 0; d < m.dart_count(); ++d) {
        roots.push_back({d, Orientation::Direct});
        if (include_reflections) roots.push_back({d, Orientation::Mirrored});
    }
    return roots;
}

}  // namespace

CanonicalCode code_at(const SphericalMap& map, Dart root, Orientation orientation) {
    check_size(map);
    Scratch s;
    bfs_code(map, root, orientation, nullptr, s);
    return to_code(s.words);
}

CanonicalCode min_code_over(const SphericalMap& map, std::span<const RootChoice> roots) {
    if (roots.empty()) throw std::invalid_argument("no roots to minimize over");
    return to_code(minimize(map, roots));
}

CanonicalCode canonical_code(const SphericalMap& map, bool include_reflections) {
    const auto roots = all_roots(map, include_reflections);
    return to_code(minimize(map, roots));
}

bool isomorphic(const SphericalMap& a, const SphericalMap& b, bool include_reflections) {
    if (a.dart_count() != b.dart_count() || a.vertex_count() != b.vertex_count() ||
        a.face_count() != b.face_count()) {
        return false;
    }
    // Fix one root in a; b is minimized over all roots only if needed.
    const auto target = code_at(a, 0, Orientation::Direct);
    Scratch s;
    for (Dart d = 0; d < b.dart_count(); ++d) {
        for (const auto o : {Orientation::Direct, Orientation::Mirrored}) {
            if (o == Orientation::Mirrored && !include_reflections) continue;
            bfs_code(b, d, o, nullptr, s);
            if (to_code(s.words) == target) return true;
        }
    }
    return false;
}

bool isomorphic_by_matching(const SphericalMap& a, const SphericalMap& b, bool include_reflections) {
    const int n = a.dart_count();
    if (n != b.dart_count()) return false;
    std::vector<Dart> image(n), stack;
    std::vector<char> used(n);
    for (const bool mirrored : {false, true}) {
        if (mirrored && !include_reflections) break;
        for (Dart b0 = 0; b0 < n; ++b0) {
            std::fill(image.begin(), image.end(), -1);
            std::fill(used.begin(), used.end(), 0);
            image[0] = b0;
            used[b0] = 1;
            stack.assign(1, 0);
            bool ok = true;
            while (ok && !stack.empty()) {
                const Dart x = stack.back();
                stack.pop_back();
                const Dart fx = image[x];
                const std::pair<Dart, Dart> steps[] = {
                    {a.sigma(x), mirrored ? b.sigma_inv(fx) : b.sigma(fx)},
                    {a.alpha(x), b.alpha(fx)},
                };
                for (const auto& [ax, bx] : steps) {
                    if (image[ax] < 0) {
                        if (used[bx]) {
                            ok = false;
                            break;
                        }
                        image[ax] = bx;
                        used[bx] = 1;
                        stack.push_back(ax);
                    } else if (image[ax] != bx) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) return true;
        }
    }
    return false;
}

std::vector<Dart> bfs_numbering(const SphericalMap& map, Dart root, Orientation orientation) {
    Scratch s;
    bfs_code(map, root, orientation, nullptr, s);
    std::vector<Dart> perm(map.dart_count(), -1);
    Dart next = 0;
    for (const Dart e : s.entry) {
        Dart d = e;
        do {
            perm[d] = next++;
            d = orientation == Orientation::Direct ? map.sigma(d) : map.sigma_inv(d);
        } while (d != e);
    }
    return perm;
}

SphericalMap canonical_relabel(const SphericalMap& map) {
    check_size(map);
    Scratch s;
    std::vector<Word> best;
    Dart best_root = 0;
    for (Dart d = 0; d < map.dart_count(); ++d) {
        if (bfs_code(map, d, Orientation::Direct, d == 0 ? nullptr : &best, s) &&
            (d == 0 || s.words < best)) {
            best = s.words;
            best_root = d;
        }
    }
    const auto perm = bfs_numbering(map, best_root, Orientation::Direct);
    return relabel(map, perm);
}

}  // namespace pentile
