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

#include <roommates/counting.hh>
#include <roommates/reductions.hh>
#include <roommates/rotations.hh>

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace roommates;

namespace
{
    /* Calls f on every pair of permutations of [n]. */
    template <typename F>
    auto all_cycles(int n, F f) -> void
    {
        std::vector<int> r(n);
        std::iota(r.begin(), r.end(), 1);
        do {
            std::vector<int> s(n);
            std::iota(s.begin(), s.end(), 1);
            do
                f(bis_cycles(r, s));
            while (std::next_permutation(s.begin(), s.end()));
        } while (std::next_permutation(r.begin(), r.end()));
    }
}

TEST_CASE("bis cycles")
{
    auto bc = bis_cycles({ 2, 3, 1 }, { 1, 3, 2 });
    CHECK(bc.n == 3);
    CHECK(bc.rho_cycles() == std::vector<std::vector<int>>{ { 1, 2, 3 } });
    CHECK(bc.sigma_cycles() == std::vector<std::vector<int>>{ { 1 }, { 2, 3 } });
    CHECK(bc.rho_inverse(1) == 3);
    CHECK(bc.sigma_inverse(2) == 3);

    CHECK_THROWS_AS(bis_cycles({ 1, 1 }, { 1, 2 }), Error);
    CHECK_THROWS_AS(bis_cycles({ 1, 2 }, { 1 }), Error);
    CHECK_THROWS_AS(bis_cycles({ }, { }), Error);
    CHECK_THROWS_AS(bis_cycles({ 1, 3 }, { 1, 2 }), Error);
}

TEST_CASE("lexicographic labelling of a bipartite graph")
{
    /* Left 1 sees right 1, 2; left 2 sees right 2. Labels: (1,1)=1 (1,2)=2 (2,2)=3. */
    auto bc = bis_cycles_lexicographic(BipartiteGraph{ 2, 2, { { 0, 0 }, { 0, 1 }, { 1, 1 } } });
    CHECK(bc.n == 3);
    CHECK(bc.rho_cycles() == std::vector<std::vector<int>>{ { 1, 2 }, { 3 } });
    CHECK(bc.sigma_cycles() == std::vector<std::vector<int>>{ { 1 }, { 2, 3 } });
    CHECK_THROWS_AS(bis_cycles_lexicographic(BipartiteGraph{ 2, 2, { } }), EmptyConstruction);
}

TEST_CASE("people and sides")
{
    auto bc = bis_cycles({ 1, 2 }, { 2, 1 });
    CHECK(bis_person(bc, BisRole::A, 1) == 0);
    CHECK(bis_person(bc, BisRole::C, 2) == 5);
    CHECK(bis_person(bc, BisRole::a, 1) == 6);
    CHECK(bis_person(bc, BisRole::c, 2) == 11);
    for (Person p = 0 ; p < 12 ; ++p)
        CHECK(bis_is_man(bc, p) == (p < 6));
}

TEST_CASE("initial lists stay on the other side")
{
    all_cycles(3, [](const BisCycles & bc) {
        auto lists = bis_initial_lists(bc);
        REQUIRE(int(lists.size()) == 6 * bc.n);
        for (Person p = 0 ; p < 6 * bc.n ; ++p) {
            CHECK(lists[p].head.size() + lists[p].tail.size() > 0);
            for (auto & part : { lists[p].head, lists[p].tail })
                for (Person q : part)
                    CHECK(bis_is_man(bc, p) != bis_is_man(bc, q));
        }
    });
}

TEST_CASE("one cycle of length one")
{
    auto bc = bis_cycles({ 1 }, { 1 });
    auto ai = build_bis_3attr(bc);
    auto ei = build_bis_2euclid(bc);
    CHECK(ai.size() == 6);
    CHECK(ai.k == 3);
    CHECK(ei.size() == 6);
    CHECK(ei.k == 2);
    CHECK(check_bis_sign_lemma(bc, ai) == "");
    CHECK(check_bis_observations(bc, ei) == "");
    CHECK(check_bis_prefixes(bc, ai) == "");
    CHECK(check_bis_prefixes(bc, ei) == "");
    /* No person has a tie anywhere in its list. */
    CHECK_NOTHROW(attribute_prefs(ai));
    CHECK_NOTHROW(euclidean_prefs(ei));
}

TEST_CASE("sign lemma, observations and prefixes for n up to 3")
{
    int inputs = 0;
    for (int n = 1 ; n <= 3 ; ++n)
        all_cycles(n, [&](const BisCycles & bc) {
            CAPTURE(bc.rho);
            CAPTURE(bc.sigma);
            auto ai = build_bis_3attr(bc);
            auto ei = build_bis_2euclid(bc);
            CHECK(check_bis_sign_lemma(bc, ai) == "");
            CHECK(check_bis_observations(bc, ei) == "");
            CHECK(check_bis_prefixes(bc, ai) == "");
            CHECK(check_bis_prefixes(bc, ei) == "");
            ++inputs;
        });
    CHECK(inputs == 1 + 4 + 36);
}

TEST_CASE("stable assignments of the built instances pair men with women")
{
    for (int n = 1 ; n <= 2 ; ++n)
        all_cycles(n, [&](const BisCycles & bc) {
            CAPTURE(bc.rho);
            CAPTURE(bc.sigma);
            mpz_class counts[2];
            for (int w = 0 ; w < 2 ; ++w) {
                auto g = w == 0 ? build_bis_3attr(bc) : build_bis_2euclid(bc);
                auto poset = discover_rotations(derive_prefs(g, Ties::ByIndex));
                REQUIRE(poset);
                auto ms = enumerate_stable_matchings(*poset);
                counts[w] = count_via_downsets(*poset).value;
                CHECK(mpz_class(long(ms.size())) == counts[w]);
                for (auto & m : ms)
                    for (auto [a, b] : m.pairs())
                        CHECK(bis_is_man(bc, a) != bis_is_man(bc, b));
            }
            CHECK(counts[0] == counts[1]);
        });
}
