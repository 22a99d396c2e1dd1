// Copyright 2026 The roommates Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fixtures.hh"

#include <roommates/cli.hh>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <sstream>

using namespace roommates;
using namespace fixtures;
using nlohmann::json;

namespace
{
    struct Result
    {
        int code;
        std::string out, err;
    };

    auto call(const std::vector<std::string> & args) -> Result
    {
        std::ostringstream out, err;
        int code = run(args, out, err);
        return { code, out.str(), err.str() };
    }

    auto temp(const std::string & name) -> std::string
    {
        auto dir = std::filesystem::temp_directory_path() / "roommates-cli-test";
        std::filesystem::create_directories(dir);
        return (dir / name).string();
    }
}

TEST_CASE("count with every method")
{
    auto r = call({ "count", data_path("twelve.sr"), "--method", "all" });
    CHECK(r.code == exit_code::ok);
    CHECK(r.out == "downsets 5\nmaxis 5\nbrute 5\n");

    auto one = call({ "count", data_path("twelve.sr") });
    CHECK(one.out == "5\n");

    auto j = json::parse(call({ "--json", "count", data_path("twelve.sr") }).out);
    CHECK(j["count"] == "5");
    CHECK(j["method"] == "downsets");
    CHECK(j["rotations"] == 7);
    CHECK(j["dual_pairs"] == 3);
    CHECK(j["singletons"] == 1);

    auto all = json::parse(call({ "--json", "count", data_path("twelve.sr"), "--method", "all" }).out);
    CHECK(all["agree"] == true);
    CHECK(all["results"].size() == 3);
}

TEST_CASE("an unsolvable instance")
{
    auto r = call({ "solve", data_path("unsolvable4.sr") });
    CHECK(r.code == exit_code::negative);
    CHECK(r.out == "no stable assignment\n");

    auto j = call({ "--json", "solve", data_path("unsolvable4.sr") });
    CHECK(j.code == exit_code::negative);
    CHECK(json::parse(j.out)["error"]["type"] == "NoStableMatching");

    auto c = call({ "count", data_path("unsolvable4.sr"), "--method", "all" });
    CHECK(c.code == exit_code::ok);
    CHECK(c.out == "downsets 0\nmaxis 0\nbrute 0\n");
}

TEST_CASE("solve and enumerate")
{
    auto s = call({ "solve", data_path("twelve.sr") });
    CHECK(s.code == exit_code::ok);
    CHECK(s.out.rfind("stable assignment: ", 0) == 0);

    auto e = json::parse(call({ "--json", "enumerate", data_path("twelve.sr") }).out);
    auto o = json::parse(call({ "--json", "oracle", data_path("twelve.sr") }).out);
    CHECK(e["count"] == "5");
    CHECK(e["matchings"].size() == 5);
    CHECK(e["matchings"] == o["matchings"]);
}

TEST_CASE("rotations")
{
    auto j = json::parse(call({ "--json", "rotations", data_path("twelve.sr") }).out);
    CHECK(j["rotations"].size() == 7);
    CHECK(j["hasse"].size() == 7);
    CHECK(j["graph_edges"].size() == 5);

    auto dot = call({ "rotations", data_path("twelve.sr"), "--dot", "hasse" });
    CHECK(dot.code == exit_code::ok);
    CHECK(dot.out.rfind("digraph", 0) == 0);
}

TEST_CASE("usage and file errors")
{
    CHECK(call({ }).code == exit_code::error);
    CHECK(call({ "bogus" }).code == exit_code::error);
    CHECK(call({ "count", data_path("twelve.sr"), "--method", "guess" }).code == exit_code::error);
    auto missing = call({ "count", temp("does-not-exist.sr") });
    CHECK(missing.code == exit_code::error);
    CHECK(missing.err.find("cannot open") != std::string::npos);
}

TEST_CASE("one attribute")
{
    auto r = call({ "oneattr", "ABBA" });
    CHECK(r.code == exit_code::ok);
    CHECK(r.out == "ABBA: 2 stable assignments\n1-3 2-4\n1-4 2-3\n");

    auto j = json::parse(call({ "--json", "oneattr", "ABAB" }).out);
    CHECK(j["count"] == 1);
    CHECK(j["assignments"] == json::parse("[[[1,3],[2,4]]]"));
    CHECK(j["steps"][0]["rule"] == "B4");

    CHECK(call({ "oneattr", "ABC" }).code == exit_code::error);
}

TEST_CASE("reduce, prefs and count agree with verify")
{
    for (std::string kind : { "is4attr", "is3euclid" }) {
        CAPTURE(kind);
        auto geom = temp(kind + ".json"), sr = temp(kind + ".sr"), direct = temp(kind + "-direct.sr");
        auto r = call({ "reduce", kind, data_path("paw.graph"), "-o", geom, "--sr", direct });
        REQUIRE(r.code == exit_code::ok);
        REQUIRE(call({ "prefs", geom, "-o", sr }).code == exit_code::ok);
        CHECK(read_file(sr) == read_file(direct));
        CHECK(call({ "count", sr }).out == "7\n");
    }

    auto v = call({ "verify", data_path("paw.graph") });
    CHECK(v.code == exit_code::ok);
    CHECK(v.out.find("count 7") != std::string::npos);
    CHECK(v.out.find("FAIL") == std::string::npos);

    auto e = json::parse(call({ "--json", "verify", data_path("paw.graph"), "--route", "euclid3" }).out);
    CHECK(e["passed"] == true);
}

TEST_CASE("reduce writes to standard output")
{
    auto r = call({ "reduce", "is4attr", data_path("paw.graph"), "-o", "-" });
    REQUIRE(r.code == exit_code::ok);
    auto j = json::parse(r.out);
    CHECK(j["people"].size() == 32);
}
