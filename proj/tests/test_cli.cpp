#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "pentile/cli.hpp"
#include "pentile/generators.hpp"
#include "pentile/map_io.hpp"

using namespace pentile;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = {}) {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(std::filesystem::temp_directory_path() / ("pentile_cli_" + std::to_string(::getpid()))) {
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST(Cli, GenerateThenVerify) {
    const auto g = run({"generate", "earthmap", "--distance", "5", "--timezones", "4"});
    ASSERT_EQ(g.code, 0) << g.err;
    const auto v = run({"verify", "-"}, g.out);
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("valid tiling"), std::string::npos);
    const auto j = json::parse(run({"--json", "verify", "-"}, g.out).out);
    EXPECT_TRUE(j["valid"]);
    EXPECT_EQ(j["faces"], 16);
}

TEST(Cli, GeneratedFileIsCanonicalUnlessRaw) {
    const auto canon = run({"generate", "three-v4"});
    const auto file = read_json(canon.out);
    EXPECT_EQ(file.map, canonical_relabel(three_v4_example()));
    EXPECT_EQ(file.metadata.at("generator"), "three-v4");
    const auto raw = run({"generate", "three-v4", "--raw"});
    EXPECT_EQ(read_json(raw.out).map, three_v4_example());
    EXPECT_EQ(run({"generate", "three-v4"}).out, canon.out);
}

TEST(Cli, VerifyRejectsInvalid) {
    const std::string wheel = write_json(make_file(
        build_from_adjacency({{1, 2, 3, 4}, {0, 4, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 1}})));
    const auto r = run({"verify", "-"}, wheel);
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("face-length-5"), std::string::npos);
    EXPECT_EQ(run({"verify", "-"}, "{not json").code, 1);
    EXPECT_EQ(run({"verify", "/nonexistent/file.json"}).code, 2);
    EXPECT_EQ(run({"verify"}).code, 2);
}

TEST(Cli, EnumerateTable) {
    const auto r = run({"enumerate", "--max-faces", "14"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "faces\tcount\n12\t1\n14\t0\n");
    const auto j = json::parse(run({"--json", "enumerate", "--max-faces", "16", "--workers", "2"}).out);
    EXPECT_EQ(j["counts"], (json{{"12", 1}, {"14", 0}, {"16", 1}}));
    EXPECT_TRUE(j["complete"]);
    const auto naive = json::parse(run({"--json", "enumerate", "--max-faces", "14", "--naive"}).out);
    EXPECT_EQ(naive["counts"], (json{{"12", 1}, {"14", 0}}));
}

TEST(Cli, EnumerateStreamsAndBudget) {
    TempDir tmp;
    const auto pc = tmp.file("all.pc");
    ASSERT_EQ(run({"enumerate", "--max-faces", "18", "-o", pc}).code, 0);
    std::ifstream f(pc, std::ios::binary);
    const std::string bytes{std::istreambuf_iterator<char>(f), {}};
    const auto maps = read_planar_code(bytes);
    ASSERT_EQ(maps.size(), 3u);
    EXPECT_TRUE(isomorphic(maps[0], dodecahedron()));
    EXPECT_TRUE(isomorphic(maps[2], three_v4_example()));

    const auto codes = tmp.file("disk.txt");
    const auto d = run({"enumerate", "--disk", "--boundary", "5", "--max-faces", "15", "-f", "codes", "-o", codes});
    EXPECT_EQ(d.code, 0);
    EXPECT_EQ(d.out, "tiles\tcount\n1\t1\n11\t1\n");

    const auto b = run({"enumerate", "--max-faces", "22", "--max-nodes", "500"});
    EXPECT_EQ(b.code, 3);
    EXPECT_NE(b.err.find("budget"), std::string::npos);
}

TEST(Cli, Isom) {
    TempDir tmp;
    const auto a = tmp.file("a.json"), b = tmp.file("b.json"), c = tmp.file("c.json");
    ASSERT_EQ(run({"generate", "earthmap", "-d", "2", "-t", "3", "-o", a}).code, 0);
    ASSERT_EQ(run({"generate", "earthmap", "-d", "3", "-t", "3", "-o", b}).code, 0);
    ASSERT_EQ(run({"generate", "earthmap", "-d", "2", "-t", "3", "--meridian-3prime", "--raw", "-o", c}).code, 0);
    EXPECT_EQ(run({"isom", a, b}).code, 1);
    EXPECT_EQ(run({"isom", a, c}).code, 0);
    EXPECT_EQ(run({"isom", a, a, "--chiral"}).code, 0);
}

TEST(Cli, ClassifyAndStats) {
    const auto em = run({"generate", "earthmap", "-d", "4", "-t", "2"}).out;
    EXPECT_EQ(run({"classify", "-"}, em).out, "earth_map(4, 2)\n");
    const auto dd = run({"generate", "dodecahedron"}).out;
    const auto c = run({"classify", "-"}, dd);
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.out, "NotEarthMap (0 high-degree vertices)\n");
    const auto j = json::parse(run({"--json", "stats", "-"}, run({"generate", "three-v4"}).out).out);
    EXPECT_EQ(j["faces"], 18);
    EXPECT_EQ(j["degree_histogram"]["4"], 3);
    EXPECT_EQ(j["high_degree_distances"], (json{{0, 3, 3}, {3, 0, 3}, {3, 3, 0}}));
    EXPECT_TRUE(j["identities"]);
}

TEST(Cli, ConnectedSum) {
    TempDir tmp;
    const auto d = tmp.file("d.json");
    ASSERT_EQ(run({"generate", "dodecahedron", "-o", d}).code, 0);
    const auto r = run({"connected-sum", d, d, "--tile-a", "0", "--tile-b", "3", "--rotation", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto m = read_json(r.out).map;
    EXPECT_EQ(m.face_count(), 22);
    EXPECT_EQ(degree_histogram(m).count(4), 5);
    EXPECT_EQ(run({"connected-sum", d, d, "--tile-a", "12", "--tile-b", "0"}).code, 2);
    EXPECT_EQ(run({"connected-sum", d, d, "--tile-a", "0", "--tile-b", "0", "--rotation", "7"}).code, 2);
}

TEST(Cli, ExportFormats) {
    const auto g = run({"generate", "three-v4"}).out;
    const auto dot = run({"export", "-", "--format", "dot"}, g).out;
    EXPECT_TRUE(dot.starts_with("graph "));
    const auto pc = run({"export", "-", "--format", "planarcode"}, g).out;
    EXPECT_EQ(read_planar_code(pc).front(), read_json(g).map);
    EXPECT_EQ(run({"export", "-", "--format", "json"}, g).out, g);
    const auto disk = run({"generate", "disk", "8gon"}).out;
    EXPECT_EQ(run({"export", "-", "--format", "planarcode"}, disk).code, 2);
    EXPECT_TRUE(read_json(run({"export", "-"}, disk).out).is_disk());
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"generate", "earthmap", "-d", "9"}).code, 2);
    EXPECT_EQ(run({"generate", "earthmap", "-d", "5", "-t", "2"}).code, 2);
    EXPECT_EQ(run({"generate", "disk", "7gon"}).code, 2);
    EXPECT_EQ(run({"enumerate"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--max-faces", "10"}).code, 2);
    const auto help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    for (const char* sub : {"generate", "verify", "enumerate", "isom", "classify", "connected-sum", "stats", "export"}) {
        EXPECT_NE(help.out.find(sub), std::string::npos) << sub;
    }
}

TEST(Cli, TheoremVerdicts) {
    const auto r = run({"--json", "verify", "--theorems", "--max-faces", "16"});
    EXPECT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_TRUE(j["all_hold"]);
    EXPECT_EQ(j["verdicts"].size(), 4u);
}
