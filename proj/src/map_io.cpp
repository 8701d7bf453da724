#include "pentile/map_io.hpp"

#include <json.hpp>

#include "pentile/iso.hpp"

namespace pentile {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw MapError(MapErrorKind::MalformedInput, what);
}

void put16(std::string& out, int v) {
    if (v < 0 || v > 0xFFFF) throw std::length_error("map too large for 16-bit planar code");
    out.push_back(static_cast<char>(v & 0xFF));
    out.push_back(static_cast<char>((v >> 8) & 0xFF));
}

class Reader16 {
public:
    explicit Reader16(std::string_view bytes) : bytes_(bytes) {}
    bool done() const { return pos_ >= bytes_.size(); }
    // Skips a header, so that concatenated streams read as one.
    void skip_header() {
        if (bytes_.substr(pos_).starts_with(kPlanarCodeHeader)) pos_ += kPlanarCodeHeader.size();
    }
    int next() {
        if (pos_ + 2 > bytes_.size()) malformed("truncated planar code");
        const auto lo = static_cast<unsigned char>(bytes_[pos_]);
        const auto hi = static_cast<unsigned char>(bytes_[pos_ + 1]);
        pos_ += 2;
        return lo | (hi << 8);
    }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

DiskMap MapFile::disk() const {
    if (!outer_face_dart) throw std::logic_error("not a disk file");
    return DiskMap(map, map.face_of(*outer_face_dart));
}

MapFile make_file(SphericalMap map, std::map<std::string, std::string> metadata) {
    return MapFile{std::move(map), std::nullopt, std::move(metadata)};
}

MapFile make_file(const DiskMap& disk, std::map<std::string, std::string> metadata) {
    return MapFile{disk.map(), disk.outer().id, std::move(metadata)};
}

MapFile canonicalized(const MapFile& file) {
    if (!file.is_disk()) return MapFile{canonical_relabel(file.map), std::nullopt, file.metadata};
    const auto& m = file.map;
    Dart best_root = -1;
    CanonicalCode best;
    for (const Dart d : m.face_darts(m.face_of(*file.outer_face_dart))) {
        auto c = code_at(m, d, Orientation::Direct);
        if (best_root < 0 || c < best) {
            best = std::move(c);
            best_root = d;
        }
    }
    const auto perm = bfs_numbering(m, best_root, Orientation::Direct);
    auto relabeled = relabel(m, perm);
    const Dart outer = relabeled.face_of(perm[*file.outer_face_dart]).id;
    return MapFile{std::move(relabeled), outer, file.metadata};
}

std::string write_json(const MapFile& file, bool pretty) {
    const auto& m = file.map;
    json vertices = json::array();
    for (const Vertex v : m.vertices()) vertices.push_back(m.darts_around(v));
    json j;
    j["version"] = 1;
    j["vertices"] = std::move(vertices);
    j["pairing"] = m.alpha_table();
    j["metadata"] = file.metadata;
    if (file.outer_face_dart) j["outer_face_dart"] = *file.outer_face_dart;
    return j.dump(pretty ? 2 : -1) + "\n";
}

MapFile read_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) malformed("map file must be a JSON object");
    if (!j.contains("version") || j["version"] != 1) malformed("unsupported or missing version");
    std::vector<std::vector<Dart>> vertices;
    std::vector<Dart> pairing;
    std::map<std::string, std::string> metadata;
    try {
        vertices = j.at("vertices").get<std::vector<std::vector<Dart>>>();
        pairing = j.at("pairing").get<std::vector<Dart>>();
        if (j.contains("metadata")) {
            for (const auto& [k, v] : j["metadata"].items()) {
                metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
            }
        }
    } catch (const json::exception& e) {
        malformed(std::string("bad map file schema: ") + e.what());
    }
    auto map = build_from_rotations(vertices, pairing);
    MapFile file{std::move(map), std::nullopt, std::move(metadata)};
    if (j.contains("outer_face_dart")) {
        if (!j["outer_face_dart"].is_number_integer()) malformed("outer_face_dart must be an integer");
        const Dart d = j["outer_face_dart"].get<Dart>();
        if (d < 0 || d >= file.map.dart_count()) malformed("outer_face_dart out of range");
        file.outer_face_dart = d;
    }
    return file;
}

std::string write_planar_code(std::span<const SphericalMap> maps, bool with_header) {
    std::string out;
    if (with_header) out += kPlanarCodeHeader;
    for (const auto& m : maps) {
        std::vector<Dart> pos(m.dart_count());
        Dart next = 0;
        for (const Vertex v : m.vertices())
            for (const Dart d : m.darts_around(v)) pos[d] = next++;
        put16(out, m.vertex_count());
        for (const Vertex v : m.vertices()) {
            for (const Dart d : m.darts_around(v)) put16(out, pos[m.alpha(d)] + 1);
            put16(out, 0);
        }
    }
    return out;
}

std::vector<SphericalMap> read_planar_code(std::string_view bytes) {
    Reader16 in(bytes);
    std::vector<SphericalMap> maps;
    for (in.skip_header(); !in.done(); in.skip_header()) {
        const int n = in.next();
        if (n == 0) malformed("planar code map without vertices");
        std::vector<std::vector<Dart>> rotations(n);
        std::vector<Dart> pairing;
        for (int v = 0; v < n; ++v) {
            for (int e = in.next(); e != 0; e = in.next()) {
                rotations[v].push_back(static_cast<Dart>(pairing.size()));
                pairing.push_back(e - 1);
            }
        }
        maps.push_back(build_from_rotations(rotations, pairing));
    }
    return maps;
}

std::string write_dot(const SphericalMap& map, std::string_view name) {
    std::string out = "graph " + std::string(name) + " {\n";
    for (int i = 0; i < map.vertex_count(); ++i) out += "  v" + std::to_string(i) + ";\n";
    for (Dart d = 0; d < map.dart_count(); ++d) {
        if (d > map.alpha(d)) continue;
        out += "  v" + std::to_string(map.vertex_index_of(d)) + " -- v" +
               std::to_string(map.vertex_index_of(map.alpha(d))) + ";\n";
    }
    out += "}\n";
    return out;
}

MapFile read_map_file(std::string_view contents) {
    if (contents.starts_with(kPlanarCodeHeader)) {
        auto maps = read_planar_code(contents);
        if (maps.size() != 1) malformed("expected exactly one map in the planar code stream");
        return make_file(std::move(maps.front()));
    }
    return read_json(contents);
}

}  // namespace pentile
