/*
 * Copyright 2026 The omegacoalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace omegacoalg;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string spec(const std::string& name) { return std::string(OMEGACOALG_SPEC_DIR) + "/" + name; }

// Writes `text` to a fresh file under the temp directory.
std::string scratch(const std::string& name, const std::string& text) {
    const fs::path dir = fs::temp_directory_path() / "omegacoalg-cli-tests";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
}

const std::vector<std::string> kShipped = {"fig1.json",           "stream.json",
                                           "conat.json",          "parity.json",
                                           "cycle_constant.json", "cycle_modified.json"};

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("approx renders text and json") {
        auto r = run({"approx", "--spec", spec("fig1.json"), "--state", "t", "--depth", "2"});
        CHECK(r.code == 0);
        CHECK(r.out == "b(a, b(·,·))\n");

        r = run({"approx", "--spec", spec("fig1.json"), "--state", "t", "--depth", "0"});
        CHECK(r.out == "·\n");

        r = run({"--spec", spec("fig1.json"), "--depth", "1", "--format", "json", "approx", "--state", "t"});
        CHECK(r.code == 0);
        const auto j = io::json::parse(r.out);
        CHECK(j["tree"] == io::json::parse(R"({"label": "b", "children": [null, null]})"));
        CHECK(j["depth"] == 1);
        CHECK_FALSE(j.contains("sort"));

        r = run({"approx", "--spec", spec("parity.json"), "--state", "q", "--depth", "2", "--format", "json"});
        CHECK(io::json::parse(r.out)["sort"] == "o");
    }

    TEST_CASE("approx exit codes") {
        CHECK(run({"approx", "--spec", spec("fig1.json"), "--state", "nope"}).code == 3);
        CHECK(run({"approx", "--spec", spec("missing.json"), "--state", "t"}).code == 2);
        CHECK(run({"approx", "--spec", spec("fig1.json")}).code == 2);
        CHECK(run({"approx", "--state", "t"}).code == 2);
        CHECK(run({"approx", "--spec", spec("fig1.json"), "--state", "t", "--format", "xml"}).code == 2);
        CHECK(run({"frobnicate"}).code == 2);
        CHECK(run({}).code == 2);
        CHECK(run({"--help"}).code == 0);
    }

    TEST_CASE("invalid specs name the offending key") {
        const auto path = scratch("arity.json", R"({
          "schema_version": "1",
          "signature": {"labels": ["a", "b"], "arity": {"a": 0, "b": 2}},
          "coalgebra": {"states": ["t"], "gamma": {"t": {"label": "b", "children": ["t"]}}}
        })");
        for (const auto& cmd : {"check", "minimize", "bisim"}) {
            const auto r = run({cmd, "--spec", path});
            CHECK(r.code == 2);
            CHECK(r.err.find("/coalgebra/gamma/t/children") != std::string::npos);
        }
        CHECK(run({"approx", "--spec", scratch("broken.json", "{not json"), "--state", "t"}).code == 2);
    }

    TEST_CASE("bisim verdicts") {
        auto r = run({"bisim", "--spec", spec("cycle_constant.json"), "--left", "s0", "--right", "s1"});
        CHECK(r.code == 0);
        CHECK(r.out == "bisimilar\n");

        r = run({"bisim", "--spec", spec("cycle_modified.json"), "--left", "s0", "--right", "s1"});
        CHECK(r.code == 1);
        CHECK(r.out == "distinguishable at depth 2\n");

        r = run({"bisim", "--spec", spec("cycle_modified.json"), "--left", "s0", "--right", "s1",
                 "--algorithm", "bounded", "--depth", "3"});
        CHECK(r.code == 1);
        CHECK(r.out == "distinguishable at depth 2\n");

        r = run({"bisim", "--spec", spec("cycle_modified.json"), "--left", "s0", "--right", "s1",
                 "--algorithm", "bounded", "--depth", "1"});
        CHECK(r.code == 0);

        CHECK(run({"bisim", "--spec", spec("cycle_modified.json"), "--left", "s0", "--right", "s1",
                   "--algorithm", "bounded"})
                  .code == 2);
        CHECK(run({"bisim", "--spec", spec("cycle_modified.json"), "--left", "s0", "--right", "zz"}).code == 3);
        CHECK(run({"bisim", "--spec", spec("cycle_modified.json"), "--left", "s0"}).code == 2);
    }

    TEST_CASE("bisim reports sort mismatches") {
        const auto r = run({"bisim", "--spec", spec("parity.json"), "--left", "p", "--right", "q"});
        CHECK(r.code == 2);
        CHECK(r.err.find("SortMismatch") != std::string::npos);
        CHECK(run({"bisim", "--spec", spec("parity.json"), "--left", "p", "--right", "p"}).code == 0);
    }

    TEST_CASE("bisim prints the partition") {
        auto r = run({"bisim", "--spec", spec("cycle_constant.json")});
        CHECK(r.code == 0);
        CHECK(io::json::parse(r.out) == io::json::parse(R"({"blocks": [["s0", "s1", "s2"]]})"));

        r = run({"bisim", "--spec", spec("cycle_modified.json")});
        CHECK(io::json::parse(r.out) == io::json::parse(R"({"blocks": [["s0"], ["s1"], ["s2"]]})"));
    }

    TEST_CASE("bisim across two specs") {
        const auto ring = scratch("ring.json", R"({
          "schema_version": "1",
          "signature": {"labels": ["x", "y"], "arity": {"x": 1, "y": 1}},
          "coalgebra": {"states": ["a", "b"],
                        "gamma": {"a": {"label": "x", "children": ["b"]},
                                  "b": {"label": "x", "children": ["a"]}}}
        })");
        auto r = run({"bisim", "--spec", spec("cycle_constant.json"), "--other", ring, "--left", "s2",
                      "--right", "b"});
        CHECK(r.code == 0);
        r = run({"bisim", "--spec", spec("cycle_modified.json"), "--other", ring, "--left", "s2",
                 "--right", "b"});
        CHECK(r.code == 1);
        CHECK(r.out == "distinguishable at depth 1\n");
        CHECK(run({"bisim", "--spec", spec("fig1.json"), "--other", ring}).code == 2);
    }

    TEST_CASE("partition and bounded agree on every shipped spec") {
        for (const auto& name : kShipped) {
            const auto doc = io::load_spec_file(spec(name));
            const auto depth = std::to_string(2 * doc.states().size());
            for (const auto& s : doc.states()) {
                for (const auto& t : doc.states()) {
                    const auto p = run({"bisim", "--spec", spec(name), "--left", s, "--right", t});
                    const auto b = run({"bisim", "--spec", spec(name), "--left", s, "--right", t,
                                        "--algorithm", "bounded", "--depth", depth});
                    CHECK(p.code == b.code);
                    CHECK(p.out == b.out);
                }
            }
        }
    }

    TEST_CASE("minimize") {
        auto r = run({"minimize", "--spec", spec("cycle_constant.json")});
        CHECK(r.code == 0);
        const auto once = io::parse_spec(io::json::parse(r.out));
        CHECK(once.states().size() == 1);

        const auto path = scratch("min.json", r.out);
        CHECK(run({"minimize", "--spec", path}).out == r.out);
        CHECK(run({"check", "--spec", path}).code == 0);
        CHECK(run({"approx", "--spec", path, "--state", "s0"}).code == 0);
        CHECK(run({"bisim", "--spec", path}).code == 0);

        for (const auto& name : {"fig1.json", "cycle_modified.json", "stream.json"}) {
            const auto before = io::load_spec_file(spec(name));
            const auto after = io::parse_spec(io::json::parse(run({"minimize", "--spec", spec(name)}).out));
            CHECK(after.states().size() == before.states().size());
        }
    }

    TEST_CASE("check passes on every shipped spec") {
        for (const auto& name : kShipped) {
            for (const auto& depth : {"30", "0"}) {
                const auto r = run({"check", "--spec", spec(name), "--depth", depth});
                CHECK_MESSAGE(r.code == 0, name << " depth " << depth << "\n" << r.out);
                CHECK(r.out.find("FAIL") == std::string::npos);
                CHECK(r.out.find("PASS") != std::string::npos);
            }
        }
        const auto j = io::json::parse(run({"check", "--spec", spec("parity.json"), "--format", "json"}).out);
        CHECK(j["ok"] == true);
        CHECK(j["depth"] == 30);
    }

    TEST_CASE("demo") {
        auto r = run({"demo", "fig1"});
        CHECK(r.code == 0);
        CHECK(r.out == "t: b(a, b(a, b(·,·)))\nu: a\n");
        for (const auto& name : {"stream", "conat", "fig1", "parity"}) {
            r = run({"demo", name, "--format", "json"});
            CHECK(r.code == 0);
            const auto doc = io::parse_spec(io::json::parse(r.out));
            CHECK(io::to_json(doc) == io::json::parse(r.out));
        }
        CHECK(run({"demo", "nothing"}).code == 2);
    }

    TEST_CASE("shipped specs are the demo documents") {
        for (const auto& name : {"stream", "conat", "fig1", "parity"}) {
            const auto shipped = io::to_json(io::load_spec_file(spec(std::string(name) + ".json")));
            CHECK(shipped == io::to_json(cli::demo_spec(name)));
        }
    }

    TEST_CASE("output is deterministic") {
        const std::vector<std::vector<std::string>> commands = {
            {"approx", "--spec", spec("conat.json"), "--state", "inf", "--depth", "7", "--format", "json"},
            {"bisim", "--spec", spec("conat.json")},
            {"minimize", "--spec", spec("stream.json")},
            {"check", "--spec", spec("fig1.json"), "--depth", "12"},
            {"demo", "parity", "--format", "json"},
        };
        for (const auto& c : commands) {
            const auto a = run(c);
            const auto b = run(c);
            CHECK(a.code == b.code);
            CHECK(a.out == b.out);
        }
    }
}
