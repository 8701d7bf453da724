#include "pentile/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>

#include "pentile/analysis.hpp"
#include "pentile/enumerate.hpp"
#include "pentile/generators.hpp"
#include "pentile/iso.hpp"
#include "pentile/map_io.hpp"

namespace pentile::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Context {
public:
    Context(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

    std::string slurp(const std::string& path) {
        if (path == "-") {
            if (stdin_used_) throw UsageError("standard input can only be read once");
            stdin_used_ = true;
            return {std::istreambuf_iterator<char>(in_), {}};
        }
        std::ifstream f(path, std::ios::binary);
        if (!f) throw UsageError("cannot open '" + path + "'");
        return {std::istreambuf_iterator<char>(f), {}};
    }

    MapFile load(const std::string& path) { return read_map_file(slurp(path)); }

    // Writes to `path`, or to stdout when it is empty or "-".
    void emit(const std::string& path, const std::string& bytes) {
        if (path.empty() || path == "-") {
            out_ << bytes;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw UsageError("cannot write '" + path + "'");
        f << bytes;
    }

private:
    std::istream& in_;
    std::ostream& out_;
    bool stdin_used_ = false;
};

std::string render(const MapFile& file, const std::string& format, bool raw) {
    const MapFile f = raw ? file : canonicalized(file);
    if (format == "json") return write_json(f);
    if (format == "dot") return write_dot(f.map);
    if (f.is_disk()) throw UsageError("planar code cannot carry a disk's outer face; use json");
    return write_planar_code(std::span<const SphericalMap>(&f.map, 1));
}

json violations_json(const ValidationReport& r) {
    json v = json::array();
    for (const auto& x : r.violations) v.push_back({{"rule", x.rule}, {"witness", x.witness}});
    return v;
}

json counts_json(const EnumerationReport& r) {
    json c = json::object();
    for (const auto& [f, n] : r.counts) c[std::to_string(f)] = n;
    return c;
}

json verdict_json(const TheoremVerdict& v) {
    json ce = json::array(), wi = json::array();
    for (const auto& c : v.counterexamples) ce.push_back(c.hex());
    for (const auto& c : v.witnesses) wi.push_back(c.hex());
    return {{"theorem", v.theorem_id}, {"universe", v.universe},   {"holds", v.holds()},
            {"examined", v.examined},  {"vacuous", v.vacuous},     {"witnesses", wi},
            {"counterexamples", ce}};
}

json classification_json(const Classification& c) {
    if (const auto* tag = std::get_if<FamilyTag>(&c)) {
        return {{"earth_map", true}, {"distance", tag->distance}, {"timezones", tag->timezones}};
    }
    return {{"earth_map", false}, {"high_degree_vertices", std::get<NotEarthMap>(c).high_degree_count}};
}

void print_table(std::ostream& os, const EnumerationReport& r, const char* key) {
    os << key << "\tcount\n";
    for (const auto& [f, n] : r.counts) os << f << "\t" << n << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Context ctx(in, out);
    CLI::App app{"Combinatorial pentagonal tilings of the sphere: generation, enumeration, checks.",
                 "pentile"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable JSON on stdout");

    // generate
    auto* gen = app.add_subcommand("generate", "Write one of the built-in tilings");
    std::string gen_what, gen_fixture, gen_out, gen_format = "json";
    int gen_d = 5, gen_t = 4;
    bool gen_raw = false, gen_3prime = false;
    gen->add_option("what", gen_what, "dodecahedron | earthmap | three-v4 | disk")
        ->required()
        ->check(CLI::IsMember({"dodecahedron", "earthmap", "three-v4", "disk"}));
    gen->add_option("fixture", gen_fixture, "Disk fixture: 8gon, 9gon, dodeca_minus_tile, single_pentagon");
    gen->add_option("-d,--distance", gen_d, "Earth map pole distance (1..5)");
    gen->add_option("-t,--timezones", gen_t, "Earth map timezone count");
    gen->add_flag("--meridian-3prime", gen_3prime, "Build the distance-2 family from the length-3 path");
    gen->add_option("-o,--output", gen_out, "Output file (default stdout)");
    gen->add_option("-f,--format", gen_format, "json | planarcode | dot")
        ->check(CLI::IsMember({"json", "planarcode", "dot"}));
    gen->add_flag("--raw", gen_raw, "Keep generator dart numbering");

    // verify
    auto* ver = app.add_subcommand("verify", "Validate a map file, or run the theorem checks");
    std::string ver_file;
    bool ver_theorems = false, ver_lemma = false;
    int ver_max_faces = 16, ver_workers = 1;
    ver->add_option("file", ver_file, "Map file, '-' for stdin");
    ver->add_flag("--theorems", ver_theorems, "Check the classification claims on an enumerated corpus");
    ver->add_flag("--lemma", ver_lemma, "With --theorems: also check the disk-filling lemma (m <= 7)");
    ver->add_option("--max-faces", ver_max_faces, "Corpus face bound for --theorems")
        ->check(CLI::Range(12, 40));
    ver->add_option("--workers", ver_workers, "Worker threads")->check(CLI::PositiveNumber);

    // enumerate
    auto* en = app.add_subcommand("enumerate", "Enumerate tilings up to isomorphism");
    int en_max = 12, en_workers = 1, en_boundary = 5, en_high = 1;
    bool en_naive = false, en_disk = false, en_any_interior = false, en_no_forced = false;
    double en_secs = -1;
    std::uint64_t en_nodes = 0;
    std::string en_out, en_format = "planarcode";
    en->add_option("--max-faces", en_max, "Largest face count (tiles inside the boundary with --disk)")
        ->required();
    en->add_flag("--naive", en_naive, "Use the slow gluing oracle (max-faces <= 16)");
    en->add_option("--workers", en_workers, "Worker threads; counts do not depend on it")
        ->check(CLI::PositiveNumber);
    en->add_flag("--no-forced-closure", en_no_forced, "Disable forced-tile pruning");
    en->add_flag("--disk", en_disk, "Enumerate fillings of an m-gon instead of spheres");
    en->add_option("--boundary", en_boundary, "Boundary length m for --disk")->check(CLI::Range(2, 64));
    en->add_option("--max-high-boundary", en_high, "Boundary vertices allowed degree > 3");
    en->add_flag("--any-interior-degree", en_any_interior, "Allow interior vertices of degree > 3");
    en->add_option("--max-seconds", en_secs, "Wall-clock budget (overrides PENTILE_BUDGET_SECS)");
    en->add_option("--max-nodes", en_nodes, "Search node budget");
    en->add_option("-o,--output", en_out, "Stream results to this file");
    en->add_option("-f,--format", en_format, "planarcode | jsonl | codes")
        ->check(CLI::IsMember({"planarcode", "jsonl", "codes"}));

    // isom
    auto* iso = app.add_subcommand("isom", "Exit 0 iff the two maps are isomorphic");
    std::string iso_a, iso_b;
    bool iso_chiral = false;
    iso->add_option("a", iso_a, "First map file")->required();
    iso->add_option("b", iso_b, "Second map file")->required();
    iso->add_flag("--chiral", iso_chiral, "Do not identify mirror images");

    // classify
    auto* cls = app.add_subcommand("classify", "Identify the earth map family of a two-pole tiling");
    std::string cls_file;
    cls->add_option("file", cls_file, "Map file")->required();

    // connected-sum
    auto* cs = app.add_subcommand("connected-sum", "Glue two tilings along a removed tile each");
    std::string cs_a, cs_b, cs_out;
    int cs_ta = 0, cs_tb = 0, cs_rot = 0;
    bool cs_reflect = false, cs_raw = false;
    cs->add_option("a", cs_a, "First map file")->required();
    cs->add_option("b", cs_b, "Second map file")->required();
    cs->add_option("--tile-a", cs_ta, "Face index in A (0-based, in face-id order)")->required();
    cs->add_option("--tile-b", cs_tb, "Face index in B")->required();
    cs->add_option("--rotation", cs_rot, "Seam rotation 0..4")->check(CLI::Range(0, 4));
    cs->add_flag("--reflect", cs_reflect, "Glue the mirror image of B");
    cs->add_option("-o,--output", cs_out, "Output file (default stdout)");
    cs->add_flag("--raw", cs_raw, "Skip canonical relabeling");

    // stats
    auto* st = app.add_subcommand("stats", "Counts, degree histogram and high-degree distances");
    std::string st_file;
    st->add_option("file", st_file, "Map file")->required();

    // export
    auto* ex = app.add_subcommand("export", "Convert a map file");
    std::string ex_file, ex_format = "json", ex_out;
    bool ex_raw = false;
    ex->add_option("file", ex_file, "Map file")->required();
    ex->add_option("-f,--format", ex_format, "json | planarcode | dot")
        ->check(CLI::IsMember({"json", "planarcode", "dot"}));
    ex->add_option("-o,--output", ex_out, "Output file (default stdout)");
    ex->add_flag("--raw", ex_raw, "Keep dart numbering as read");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (gen->parsed()) {
            std::map<std::string, std::string> meta{{"generator", gen_what}};
            MapFile file = make_file(dodecahedron());
            if (gen_what == "dodecahedron") {
                file = make_file(dodecahedron(), meta);
            } else if (gen_what == "earthmap") {
                meta["distance"] = std::to_string(gen_d);
                meta["timezones"] = std::to_string(gen_t);
                if (gen_3prime) {
                    if (gen_d != 2) throw UsageError("--meridian-3prime builds the distance-2 family only");
                    meta["construction"] = "meridian-3prime";
                    file = make_file(earth_map_via_meridian_3prime(gen_t), meta);
                } else {
                    file = make_file(earth_map(gen_d, gen_t), meta);
                }
            } else if (gen_what == "three-v4") {
                file = make_file(three_v4_example(), meta);
            } else {
                if (gen_fixture.empty()) throw UsageError("generate disk needs a fixture name");
                meta["fixture"] = gen_fixture;
                file = make_file(disk_fixture(parse_disk_kind(gen_fixture)), meta);
            }
            ctx.emit(gen_out, render(file, gen_format, gen_raw));
            return kOk;
        }

        if (ver->parsed()) {
            if (ver_theorems) {
                const auto corpus = sphere_corpus(ver_max_faces, ver_workers);
                std::vector<TheoremVerdict> verdicts{check_one_high_degree(corpus), check_distance5(corpus),
                                                     check_distance4(corpus)};
                TheoremVerdict five{"five_families", "two-pole tilings with F <= " +
                                                         std::to_string(ver_max_faces), {}, {}, 0, 0};
                for (const auto& m : corpus.maps) {
                    ++five.examined;
                    try {
                        if (std::holds_alternative<FamilyTag>(classify_two_pole(m))) {
                            five.witnesses.push_back(canonical_code(m));
                        } else {
                            ++five.vacuous;
                        }
                    } catch (const ClassificationFailed&) {
                        five.counterexamples.push_back(canonical_code(m));
                    }
                }
                verdicts.push_back(five);
                if (ver_lemma) {
                    const auto disks = disk_corpus(8, DiskConstraints{5, 1, true, 15}, ver_workers);
                    verdicts.push_back(check_lemma_cycle(disks));
                }
                bool all = true;
                json arr = json::array();
                for (const auto& v : verdicts) {
                    all = all && v.holds();
                    arr.push_back(verdict_json(v));
                }
                if (as_json) {
                    out << json{{"verdicts", arr}, {"all_hold", all}}.dump(2) << "\n";
                } else {
                    for (const auto& v : verdicts) {
                        out << (v.holds() ? "HOLDS  " : "FAILS  ") << v.theorem_id << "  [" << v.universe
                            << "]  examined " << v.examined << ", witnesses " << v.witnesses.size()
                            << ", vacuous " << v.vacuous << "\n";
                        for (const auto& c : v.counterexamples) out << "  counterexample " << c.hex() << "\n";
                    }
                }
                return all ? kOk : kInvalid;
            }
            if (ver_file.empty()) throw UsageError("verify needs a FILE or --theorems");
            const auto file = ctx.load(ver_file);
            const auto report = file.is_disk() ? validate_disk(file.disk()) : validate_pentagonal(file.map);
            const bool ids = file.is_disk() || check_counting_identities(file.map);
            const bool ok = report.is_valid() && ids;
            if (as_json) {
                out << json{{"valid", ok},
                            {"disk", file.is_disk()},
                            {"violations", violations_json(report)},
                            {"identities", ids},
                            {"vertices", file.map.vertex_count()},
                            {"edges", file.map.edge_count()},
                            {"faces", file.map.face_count()}}
                           .dump(2)
                    << "\n";
            } else {
                out << (ok ? "valid" : "invalid") << (file.is_disk() ? " disk" : " tiling") << ": V="
                    << file.map.vertex_count() << " E=" << file.map.edge_count()
                    << " F=" << file.map.face_count() << "\n";
                for (const auto& v : report.violations) {
                    out << "  violation " << v.rule << " at dart " << v.witness << "\n";
                }
                if (!ids) out << "  counting identities fail\n";
            }
            return ok ? kOk : kInvalid;
        }

        if (en->parsed()) {
            Budget budget = Budget::from_env();
            if (en_secs >= 0) budget.max_seconds = en_secs;
            budget.max_nodes = en_nodes;
            if (en_disk && en_naive) throw UsageError("--naive enumerates spheres only");
            if (en_disk && en_format == "planarcode" && !en_out.empty()) {
                throw UsageError("disk fillings stream as jsonl or codes");
            }
            std::ofstream stream;
            if (!en_out.empty()) {
                stream.open(en_out, std::ios::binary);
                if (!stream) throw UsageError("cannot write '" + en_out + "'");
                if (en_format == "planarcode") stream << kPlanarCodeHeader;
            }
            auto put = [&](const MapFile& f) {
                if (!stream.is_open()) return;
                if (en_format == "codes") {
                    stream << (f.is_disk() ? canonical_code(f.disk()) : canonical_code(f.map)).hex() << "\n";
                } else if (en_format == "jsonl") {
                    stream << write_json(canonicalized(f), false);
                } else {
                    const auto c = canonical_relabel(f.map);
                    stream << write_planar_code(std::span<const SphericalMap>(&c, 1), false);
                }
            };
            const char* key = en_disk ? "tiles" : "faces";
            auto report_out = [&](const EnumerationReport& r) {
                if (as_json) {
                    out << json{{"kind", en_disk ? "disk" : "sphere"},
                                {"max_faces", r.max_faces},
                                {"counts", counts_json(r)},
                                {"complete", r.complete},
                                {"nodes", r.nodes}}
                               .dump(2)
                        << "\n";
                } else {
                    print_table(out, r, key);
                }
            };
            try {
                EnumerationReport r;
                if (en_disk) {
                    DiskOptions o;
                    o.constraints = {en_boundary, en_high, !en_any_interior, en_max};
                    o.workers = en_workers;
                    o.forced_closure = !en_no_forced;
                    o.budget = budget;
                    r = enumerate_disk(o, [&](const DiskMap& d) { put(make_file(d)); });
                } else if (en_naive) {
                    r = enumerate_sphere_naive(en_max, [&](const SphericalMap& m) { put(make_file(m)); },
                                               budget);
                } else {
                    SphereOptions o;
                    o.max_faces = en_max;
                    o.workers = en_workers;
                    o.forced_closure = !en_no_forced;
                    o.budget = budget;
                    r = enumerate_sphere(o, [&](const SphericalMap& m) { put(make_file(m)); });
                }
                report_out(r);
                return kOk;
            } catch (const BudgetExceeded& e) {
                report_out(e.partial());
                err << "budget exceeded: counts above are incomplete\n";
                return kBudget;
            }
        }

        if (iso->parsed()) {
            const auto a = ctx.load(iso_a);
            const auto b = ctx.load(iso_b);
            const bool refl = !iso_chiral;
            bool same = false;
            CanonicalCode ca, cb;
            if (a.is_disk() && b.is_disk()) {
                ca = canonical_code(a.disk(), refl);
                cb = canonical_code(b.disk(), refl);
            } else {
                ca = canonical_code(a.map, refl);
                cb = canonical_code(b.map, refl);
            }
            same = a.is_disk() == b.is_disk() && ca == cb;
            if (as_json) {
                out << json{{"isomorphic", same}, {"chiral", iso_chiral}, {"code_a", ca.hex()},
                            {"code_b", cb.hex()}}
                           .dump(2)
                    << "\n";
            } else {
                out << (same ? "isomorphic" : "not isomorphic") << "\n";
            }
            return same ? kOk : kInvalid;
        }

        if (cls->parsed()) {
            const auto file = ctx.load(cls_file);
            try {
                const auto c = classify_two_pole(file.map);
                if (as_json) {
                    out << classification_json(c).dump(2) << "\n";
                } else {
                    out << to_string(c) << "\n";
                }
                return kOk;
            } catch (const ClassificationFailed& e) {
                if (as_json) out << json{{"error", "ClassificationFailed"}, {"detail", e.what()}}.dump(2) << "\n";
                err << "classification failed: " << e.what() << "\n";
                return kInvalid;
            }
        }

        if (cs->parsed()) {
            const auto a = ctx.load(cs_a);
            const auto b = ctx.load(cs_b);
            auto face_at = [](const SphericalMap& m, int i) {
                if (i < 0 || i >= m.face_count()) throw UsageError("tile index out of range");
                return m.face_ids()[i];
            };
            const auto sum = connected_sum(a.map, face_at(a.map, cs_ta), b.map, face_at(b.map, cs_tb),
                                           cs_rot, cs_reflect);
            const std::map<std::string, std::string> meta{
                {"generator", "connected_sum"},
                {"tile_a", std::to_string(cs_ta)},
                {"tile_b", std::to_string(cs_tb)},
                {"rotation", std::to_string(cs_rot)},
                {"reflect", cs_reflect ? "true" : "false"}};
            ctx.emit(cs_out, render(make_file(sum, meta), "json", cs_raw));
            return kOk;
        }

        if (st->parsed()) {
            const auto file = ctx.load(st_file);
            const auto& m = file.map;
            const auto hist = degree_histogram(m);
            const auto high = high_degree_vertices(m);
            std::vector<std::vector<int>> dist;
            for (const Vertex h : high) {
                const auto d = distances_from(m, h);
                std::vector<int> row;
                for (const Vertex g : high) row.push_back(d[m.vertex_index(g)]);
                dist.push_back(row);
            }
            if (as_json) {
                json h = json::object();
                for (const auto& [deg, n] : hist.counts) h[std::to_string(deg)] = n;
                json hv = json::array();
                for (const Vertex v : high) hv.push_back({{"index", m.vertex_index(v)}, {"degree", m.degree(v)}});
                out << json{{"vertices", m.vertex_count()}, {"edges", m.edge_count()},
                            {"faces", m.face_count()},      {"degree_histogram", h},
                            {"identities", check_counting_identities(m)},
                            {"high_degree_vertices", hv},   {"high_degree_distances", dist}}
                           .dump(2)
                    << "\n";
            } else {
                out << "V=" << m.vertex_count() << " E=" << m.edge_count() << " F=" << m.face_count() << "\n";
                for (const auto& [deg, n] : hist.counts) out << "degree " << deg << ": " << n << "\n";
                out << "identities " << (check_counting_identities(m) ? "hold" : "fail") << "\n";
                out << "high-degree vertices:";
                for (const Vertex v : high) out << " v" << m.vertex_index(v) << "(" << m.degree(v) << ")";
                out << "\n";
                for (const auto& row : dist) {
                    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
                    out << "\n";
                }
            }
            return kOk;
        }

        if (ex->parsed()) {
            ctx.emit(ex_out, render(ctx.load(ex_file), ex_format, ex_raw));
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const MapError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kUsage;
}

}  // namespace pentile::cli
