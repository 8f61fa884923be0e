/*
   Copyright 2026 The ztilde authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "ztilde/io.hpp"
#include "ztilde/testkit.hpp"

using namespace zt;

namespace {

int expect_parse_line(const char* what, auto&& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        CHECK_MESSAGE(e.line() > 0, what << ": diagnostic lost its line number: " << e.what());
        return e.line();
    }
    FAIL_CHECK(what << ": expected a parse error");
    return 0;
}

struct TempDir {
    std::filesystem::path dir;
    TempDir() {
        dir = std::filesystem::temp_directory_path() /
              ("ztilde_io_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
    }
    ~TempDir() { std::filesystem::remove_all(dir); }
    std::string file(const std::string& name) const { return (dir / name).string(); }
};

} // namespace

TEST_CASE("complex text round trip") {
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        Rng rng(seed);
        std::array<int, 4> sizes;
        for (auto& s : sizes) s = rng.range(0, 4);
        if (sizes == std::array<int, 4>{0, 0, 0, 0}) sizes[1] = 1;
        std::pair<TwistedComplex, Propagator> cg;
        try {
            cg = random_acyclic_complex(seed, sizes, 2);
        } catch (const ValidationError&) {
            continue; // sizes admit no acyclic complex
        }
        std::string text = complex_text(cg.first);
        TwistedComplex back = parse_complex(text);
        CHECK(back == cg.first);
        CHECK(complex_text(back) == text);
    }

    // duplicate names parse fine; rejecting them is the validator's job
    CHECK(!validate_complex(parse_complex("generators[0]: a, a\ngenerators[1]:\n"
                                          "generators[2]:\ngenerators[3]:\n"))
               .ok);
    expect_parse_line("bad entry count", [] {
        parse_complex("generators[0]: a\ngenerators[1]: b\n"
                      "generators[2]:\ngenerators[3]:\n"
                      "boundary[1]:\n1, t\n");
    });
    expect_parse_line("garbage", [] { parse_complex("nonsense: 1\n"); });
}

TEST_CASE("endomorphism text round trip") {
    for (uint64_t seed = 41; seed <= 70; ++seed) {
        auto [c, gp] = random_acyclic_complex(seed, {2, 3, 3, 2}, 1);
        Rng rng(seed + 1000);
        for (int degree : {-1, 0, 1, 2}) {
            Endo e = random_endo(rng, c, degree);
            std::string text = endo_text(e, c);
            Endo back = parse_endo(text, c);
            CHECK(back == e);
            CHECK(endo_text(back, c) == text);
        }
        // the transported propagator round-trips too
        CHECK(parse_endo(endo_text(gp, c), c) == gp);
    }

    auto [c, gp] = random_acyclic_complex(71, {1, 2, 2, 1}, 1);
    expect_parse_line("missing degree", [&] { parse_endo("g[0]:\n1\n", c); });
    expect_parse_line("wrong generators", [&] {
        parse_endo("degree: 1\ngenerators[0]: wrong\ngenerators[1]: x1, x2\n"
                   "generators[2]: y1, y2\ngenerators[3]: z\n",
                   c);
    });
    // a degree-1 endo of a different complex has mismatched shapes
    auto [c2, gp2] = random_acyclic_complex(72, {2, 3, 3, 2}, 1);
    CHECK_THROWS_AS(parse_endo(endo_text(gp2, c2), c), ParseError);
}

TEST_CASE("binding lines round trip and validate slots") {
    SlotBindings broadcast;
    broadcast.complex_paths = {"c.cx"};
    broadcast.propagator_paths = {"g.en"};
    CHECK(parse_bindings(bindings_text(broadcast), "") == broadcast);

    SlotBindings numbered;
    for (int i = 1; i <= 3; ++i) {
        numbered.complex_paths.push_back("c" + std::to_string(i) + ".cx");
        numbered.propagator_paths.push_back("g" + std::to_string(i) + ".en");
    }
    CHECK(parse_bindings(bindings_text(numbered), "") == numbered);

    // paths from a file are joined against its directory
    SlotBindings joined = parse_bindings("slot *: complex=c.cx propagator=sub/g.en\n", "/base");
    CHECK(joined.complex_paths == std::vector<std::string>{"/base/c.cx"});
    CHECK(joined.propagator_paths == std::vector<std::string>{"/base/sub/g.en"});
    SlotBindings abs = parse_bindings("slot *: complex=/a/c.cx propagator=g.en\n", "/base");
    CHECK(abs.complex_paths == std::vector<std::string>{"/a/c.cx"});

    expect_parse_line("missing slot", [] {
        parse_bindings("slot 1: complex=a propagator=b\nslot 3: complex=a propagator=b\n", "");
    });
    expect_parse_line("duplicate slot", [] {
        parse_bindings("slot 1: complex=a propagator=b\nslot 1: complex=a propagator=b\n", "");
    });
    expect_parse_line("no propagator", [] { parse_bindings("slot *: complex=a\n", ""); });
}

TEST_CASE("count table text round trip") {
    Rng rng(73);
    for (int it = 0; it < 40; ++it) {
        CountTableFile f;
        int k = rng.range(1, 2);
        f.table.k = k;
        if (rng.chance(1, 2)) {
            for (int e = 0; e < 3 * k; ++e) f.table.pattern += rng.chance(1, 2) ? '+' : '-';
        }
        int n = rng.range(1, 3);
        for (int i = 0; i < n; ++i)
            f.table.entries.push_back(
                {random_cgraph(rng, k), random_multiweight(rng, 3 * k, 2, 3)});
        if (rng.chance(1, 2)) {
            f.bindings.complex_paths = {"c.cx"};
            f.bindings.propagator_paths = {"g.en"};
        }
        std::string text = count_table_text(f);
        CountTableFile back = parse_count_table(text, "");
        CHECK(back == f);
        CHECK(count_table_text(back) == text);
    }

    expect_parse_line("no k", [] { parse_count_table("count {\n}: 1\n", ""); });
    expect_parse_line("bad pattern", [] { parse_count_table("k: 1\npattern: ++\n", ""); });
    expect_parse_line("unclosed block", [] {
        parse_count_table("k: 1\ncount {\nk: 1\n", "");
    });
    expect_parse_line("weight var out of range", [] {
        CGraph g;
        g.k = 1;
        for (int e = 0; e < 3; ++e) {
            CEdge ed;
            ed.tail = {0, e};
            ed.head = {1, e};
            g.edges.push_back(ed);
        }
        parse_count_table("k: 1\ncount {\n" + graph_text(g) + "}: t4\n", "");
    });
}

TEST_CASE("anomaly text round trip") {
    Rng rng(74);
    for (int it = 0; it < 30; ++it) {
        AnomalyData a;
        int k = rng.range(1, 2);
        ColoredDiagram sk = skeleton_diagram(random_cgraph(rng, k));
        a.z_anom = normalize_diagram(sk, random_rational(rng, 3, 2));
        a.sign_w = rng.range(-2, 2);
        if (rng.chance(1, 2)) {
            a.mu = normalize_diagram(random_diagram(rng, 2 * k, 1, 0), random_rational(rng, 3, 2));
            a.mu_defaulted = false;
        }
        std::string text = anomaly_text(a);
        AnomalyData back = parse_anomaly(text);
        CHECK(back == a);
        CHECK(anomaly_text(back) == text);
    }

    expect_parse_line("no z block", [] { parse_anomaly("sign_W: 1\n"); });
    expect_parse_line("no sign", [] { parse_anomaly("z_anomaly:\n0\n"); });
    expect_parse_line("empty block", [] { parse_anomaly("z_anomaly:\nsign_W: 1\n"); });
}

TEST_CASE("color files: per-edge lines or one weight") {
    Rng rng(75);
    for (int it = 0; it < 30; ++it) {
        int ne = 3 * rng.range(1, 2);
        ColorSpec cs;
        if (rng.chance(1, 2)) {
            for (int e = 0; e < ne; ++e) cs.colors.push_back(random_ratfn(rng, 2, 1));
        } else {
            cs.is_weight = true;
            cs.weight = random_multiweight(rng, ne, 2, 3);
        }
        std::string text = colors_text(cs);
        ColorSpec back = parse_colors(text, ne);
        CHECK(back == cs);
        CHECK(colors_text(back) == text);
    }

    expect_parse_line("missing edge", [] { parse_colors("color 1: t\ncolor 3: t\n", 3); });
    expect_parse_line("duplicate edge", [] { parse_colors("color 1: t\ncolor 1: t\n", 3); });
    expect_parse_line("trailing line", [] { parse_colors("weight: t1\ncolor 1: t\n", 3); });
    CHECK_THROWS_AS(parse_colors("weight: t1\n", 0), ValidationError);
}

TEST_CASE("diagram sum files may carry a metadata header") {
    Rng rng(76);
    DiagramSum s = normalize_diagram(random_diagram(rng, 2, 2, 1));
    std::string body = s.str();
    CHECK(parse_diagram_sum_file(body) == s);
    CHECK(parse_diagram_sum_file("k: 1\nseed: whatever\n---\n" + body) == s);
    CHECK_THROWS_AS(parse_diagram_sum_file("k: 1\n---\nnot a sum\n"), ParseError);
}

TEST_CASE("graph list blocks") {
    Rng rng(77);
    for (int it = 0; it < 20; ++it) {
        std::vector<CGraph> gs;
        int n = rng.range(1, 4);
        for (int i = 0; i < n; ++i) gs.push_back(random_cgraph(rng, rng.range(1, 2)));
        std::vector<ParsedGraph> back = parse_graph_list(graph_list_text(gs));
        REQUIRE(back.size() == gs.size());
        for (size_t i = 0; i < gs.size(); ++i) {
            CHECK(back[i].graph == gs[i]);
            CHECK(back[i].colors.empty());
        }
    }
    expect_parse_line("empty list", [] { parse_graph_list(""); });
    expect_parse_line("no k line", [] { parse_graph_list("vertex 1: 1t 2t 3t\n"); });
}

TEST_CASE("file io, digests and path helpers") {
    TempDir td;
    const std::string path = td.file("roundtrip.txt");
    write_file(path, "contents\n");
    CHECK(read_file(path) == "contents\n");
    CHECK_THROWS_AS(read_file(td.file("missing.txt")), IoError);
    CHECK_THROWS_AS(write_file(td.file("no/such/dir/x.txt"), "y"), IoError);

    // FNV-1a 64-bit reference vectors
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("foobar") == "85944171f73967e8");

    CHECK(join_path("", "x.txt") == "x.txt");
    CHECK(join_path(".", "x.txt") == "x.txt");
    CHECK(join_path("/base", "x.txt") == "/base/x.txt");
    CHECK(join_path("/base", "/abs/x.txt") == "/abs/x.txt");
    CHECK_THROWS_AS(join_path("/base", ""), IoError);
    CHECK(dir_of("/a/b/c.txt") == "/a/b");
    CHECK(dir_of("c.txt") == "");
}

TEST_CASE("run reports are ordered key/value lines") {
    RunReport rep;
    rep.add("command", "check");
    rep.add("input", "c.cx fnv1a=0123456789abcdef");
    rep.add("valid", "1");
    CHECK(rep.str() ==
          "command: check\n"
          "input: c.cx fnv1a=0123456789abcdef\n"
          "valid: 1\n");
}

TEST_CASE("slot loading resolves bindings to parsed objects") {
    TempDir td;
    auto [c, gp] = random_acyclic_complex(78, {2, 3, 3, 2}, 1);
    auto [c2, gp2] = random_acyclic_complex(79, {1, 2, 2, 1}, 1);
    write_file(td.file("c.cx"), complex_text(c));
    write_file(td.file("g.en"), endo_text(gp, c));
    write_file(td.file("c2.cx"), complex_text(c2));
    write_file(td.file("g2.en"), endo_text(gp2, c2));

    SlotBindings broadcast;
    broadcast.complex_paths = {td.file("c.cx")};
    broadcast.propagator_paths = {td.file("g.en")};
    LoadedSlots ls = load_slots(broadcast);
    REQUIRE(ls.complexes.size() == 1);
    REQUIRE(ls.propagators.size() == 1);
    CHECK(ls.complexes[0] == c);
    CHECK(ls.propagators[0] == gp);

    SlotBindings numbered;
    numbered.complex_paths = {td.file("c.cx"), td.file("c2.cx"), td.file("c.cx")};
    numbered.propagator_paths = {td.file("g.en"), td.file("g2.en"), td.file("g.en")};
    LoadedSlots ln = load_slots(numbered);
    REQUIRE(ln.complexes.size() == 3);
    CHECK(ln.complexes[1] == c2);
    CHECK(ln.propagators[2] == gp);

    // a propagator parsed against the wrong complex is reported with its path
    SlotBindings crossed;
    crossed.complex_paths = {td.file("c.cx")};
    crossed.propagator_paths = {td.file("g2.en")};
    try {
        load_slots(crossed);
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("g2.en") != std::string::npos);
    }
}
