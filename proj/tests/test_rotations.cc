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

#include <roommates/rotations.hh>

#include <doctest.h>

#include <cstdlib>

using namespace roommates;
using namespace fixtures;

namespace
{
    struct Named
    {
        Rotation r1 = rotation({ { 3, 9, 8 }, { 6, 8, 4 }, { 11, 4, 10 }, { 8, 10, 3 }, { 5, 3, 9 } });
        Rotation r2 = rotation({ { 4, 12, 10 }, { 11, 10, 12 } });
        Rotation r3 = rotation({ { 1, 7, 6 }, { 2, 6, 9 }, { 5, 9, 7 } });
        Rotation r4 = rotation({ { 6, 4, 1 }, { 10, 1, 4 } });
        Rotation r2d = r2.dual(), r3d = r3.dual(), r4d = r4.dual();
    };

    auto idx(const RotationPoset & p, const Rotation & r) -> int
    {
        int i = p.index_of(r);
        REQUIRE(i >= 0);
        return i;
    }
}

TEST_CASE("rotation poset of the 12-person example")
{
    auto poset = discover_rotations(twelve());
    REQUIRE(poset.has_value());
    Named n;
    CHECK(poset->size() == 7);
    CHECK(poset->num_singletons() == 1);
    CHECK(poset->num_dual_pairs() == 3);
    CHECK(poset->is_singleton(idx(*poset, n.r1)));
    CHECK(poset->dual[idx(*poset, n.r2)] == idx(*poset, n.r2d));
    CHECK(poset->dual[idx(*poset, n.r3)] == idx(*poset, n.r3d));
    CHECK(poset->dual[idx(*poset, n.r4)] == idx(*poset, n.r4d));

    std::set<std::pair<int, int>> expected{
        { idx(*poset, n.r1), idx(*poset, n.r2) },
        { idx(*poset, n.r1), idx(*poset, n.r3) },
        { idx(*poset, n.r1), idx(*poset, n.r4) },
        { idx(*poset, n.r2), idx(*poset, n.r4d) },
        { idx(*poset, n.r3), idx(*poset, n.r4d) },
        { idx(*poset, n.r4), idx(*poset, n.r2d) },
        { idx(*poset, n.r4), idx(*poset, n.r3d) },
    };
    auto hasse = poset->hasse_edges();
    CHECK(std::set<std::pair<int, int>>(hasse.begin(), hasse.end()) == expected);
    CHECK(poset->conflicts().empty());

    auto g = rotation_graph(*poset);
    CHECK(g.vertices.size() == 6);
    auto e = [&] (const Rotation & a, const Rotation & b) {
        int x = idx(*poset, a), y = idx(*poset, b);
        return std::make_pair(std::min(x, y), std::max(x, y));
    };
    std::set<std::pair<int, int>> expected_edges{
        e(n.r2, n.r2d), e(n.r3, n.r3d), e(n.r4, n.r4d), e(n.r4d, n.r2d), e(n.r4d, n.r3d) };
    CHECK(g.edges == expected_edges);

    CHECK(poset->names[idx(*poset, n.r1)] == "R1");
    CHECK(poset->names[idx(*poset, n.r4d)].back() == 'd');
}

TEST_CASE("two people have no rotations")
{
    auto poset = discover_rotations(parse_instance("2\n2\n1\n"));
    REQUIRE(poset.has_value());
    CHECK(poset->size() == 0);
    CHECK(attribution_consistency_check(parse_instance("2\n2\n1\n"), 1).consistent);
}

TEST_CASE("unsolvable instance has no poset")
{
    CHECK(! discover_rotations(unsolvable4()).has_value());
}

TEST_CASE("exploration budget is enforced")
{
    ExplorationOptions tiny;
    tiny.budget = 2;
    CHECK_THROWS_AS(discover_rotations(twelve(), tiny), ExplorationBudgetExceeded);

    setenv("SR_EXPLORATION_BUDGET", "3", 1);
    CHECK(exploration_budget_from_env() == 3);
    CHECK_THROWS_AS(discover_rotations(twelve()), ExplorationBudgetExceeded);
    unsetenv("SR_EXPLORATION_BUDGET");
    CHECK(exploration_budget_from_env() == 1000000);
}

TEST_CASE("attribution is consistent on the 12-person example")
{
    auto report = attribution_consistency_check(twelve(), 5);
    CHECK(report.consistent);
    CHECK(report.runs == 10);
    CHECK(report.pairs_checked > 0);
}

namespace
{
    auto check_structure(const RotationPoset & p) -> void
    {
        int k = p.size();
        for (int i = 0 ; i < k ; ++i) {
            CHECK(p.precedes(i, i));
            if (! p.is_singleton(i)) {
                CHECK(p.dual[p.dual[i]] == i);
                CHECK(p.dual[i] != i);
                CHECK(p.rotations[p.dual[i]] == p.rotations[i].dual());
            }
            for (int j = 0 ; j < k ; ++j) {
                if (p.precedes(i, j) && p.is_singleton(j))
                    CHECK(p.is_singleton(i));
                if (! p.is_singleton(i) && ! p.is_singleton(j))
                    CHECK(p.pi(i, j) == p.pi(p.dual[j], p.dual[i]));
                for (int l = 0 ; l < k ; ++l)
                    if (p.precedes(i, j) && p.precedes(j, l))
                        CHECK(p.precedes(i, l));
            }
        }
    }
}

TEST_CASE("poset invariants and order independence on random instances")
{
    std::mt19937_64 rng(29);
    int solvable = 0;
    for (int trial = 0 ; trial < 150 ; ++trial) {
        int n = 2 * std::uniform_int_distribution<int>(3, 6)(rng);
        auto inst = random_instance(n, rng);
        auto p = discover_rotations(inst);
        if (! p)
            continue;
        ++solvable;
        check_structure(*p);

        for (std::uint64_t seed : { 3u, 5u }) {
            ExplorationOptions o;
            o.child_order_seed = seed;
            auto q = discover_rotations(inst, o);
            REQUIRE(q.has_value());
            CHECK(q->rotations == p->rotations);
            CHECK(q->dual == p->dual);
            CHECK(q->below == p->below);
        }

        auto g = rotation_graph(*p);
        for (int a : g.vertices)
            for (int b : g.vertices) {
                bool existential = false;
                for (int r = 0 ; r < p->size() && ! existential ; ++r)
                    if (! p->is_singleton(r) && p->precedes(r, a) && p->precedes(p->dual[r], b))
                        existential = true;
                if (a != b)
                    CHECK(g.adjacent(a, b) == existential);
            }

        CHECK(attribution_consistency_check(inst, trial).consistent);
    }
    CHECK(solvable > 40);
}

TEST_CASE("dot output names")
{
    auto p = *discover_rotations(twelve());
    auto dot = hasse_dot(p);
    CHECK(dot.find("digraph hasse") == 0);
    CHECK(dot.find("R1 -> ") != std::string::npos);
    auto gdot = rotation_graph_dot(p, rotation_graph(p));
    CHECK(gdot.find("graph gofi") == 0);
    CHECK(gdot.find("R2 -- R2d") != std::string::npos);
}
