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

#include <roommates/geometry.hh>
#include <roommates/geometry_json.hh>
#include <roommates/reductions.hh>

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace roommates;

namespace
{
    auto person(const std::string & name, std::vector<Component> pos, std::vector<Component> pref) -> GeoPerson
    {
        return { name, std::move(pos), std::move(pref) };
    }

    auto one_based(const Instance & inst, Person p) -> std::vector<int>
    {
        std::vector<int> v;
        for (Person q : inst.list(p))
            v.push_back(q + 1);
        return v;
    }

    auto random_rational(std::mt19937_64 & rng) -> mpq_class
    {
        std::uniform_int_distribution<int> num(-999, 999), den(1, 64);
        return rational(num(rng), den(rng));
    }

    /* Rational positions, preferences on circles of rational radius. */
    auto random_attribute(int n, std::mt19937_64 & rng) -> AttributeInstance
    {
        AttributeInstance ai;
        ai.model = Model::Attribute;
        ai.k = 3;
        std::uniform_int_distribution<int> turns(1, 359);
        for (int i = 0 ; i < n ; ++i)
            ai.people.push_back(person("X" + std::to_string(i + 1),
                        { scalar(random_rational(rng)), scalar(random_rational(rng)), scalar(random_rational(rng)) },
                        { circle(rational(turns(rng), 360), RPoly(rational(turns(rng), 7))), scalar(random_rational(rng)) }));
        return ai;
    }

    auto random_euclidean(int n, int k, std::mt19937_64 & rng) -> EuclideanInstance
    {
        EuclideanInstance ei;
        ei.model = Model::Euclidean;
        ei.k = k;
        for (int i = 0 ; i < n ; ++i) {
            GeoPerson p{ "X" + std::to_string(i + 1) };
            for (int d = 0 ; d < k ; ++d) {
                p.position.push_back(scalar(random_rational(rng)));
                p.preference.push_back(scalar(random_rational(rng)));
            }
            ei.people.push_back(p);
        }
        return ei;
    }

    auto paw() -> CycleStructure
    {
        return cycle_structure(double_cover(InputGraph{ 4, { { 0, 1 }, { 1, 2 }, { 1, 3 }, { 2, 3 } } }));
    }
}

TEST_CASE("one-dimensional attribute order")
{
    AttributeInstance ai;
    ai.k = 2;
    ai.people = {
        person("a", { scalar(mpq_class(1)), scalar(mpq_class(0)) }, { scalar(mpq_class(0)), scalar(mpq_class(1)) }),
        person("b", { scalar(mpq_class(2)), scalar(mpq_class(3)) }, { scalar(mpq_class(1)), scalar(mpq_class(0)) }),
        person("c", { scalar(mpq_class(5)), scalar(mpq_class(1)) }, { scalar(mpq_class(-1)), scalar(mpq_class(0)) }),
        person("d", { scalar(mpq_class(4)), scalar(mpq_class(-2)) }, { scalar(mpq_class(0)), scalar(mpq_class(-1)) }),
    };
    auto inst = attribute_prefs(ai);
    CHECK(one_based(inst, 0) == std::vector<int>{ 2, 3, 4 });
    CHECK(one_based(inst, 1) == std::vector<int>{ 3, 4, 1 });
    CHECK(one_based(inst, 2) == std::vector<int>{ 1, 2, 4 });
    CHECK(one_based(inst, 3) == std::vector<int>{ 1, 3, 2 });
}

TEST_CASE("one-dimensional euclidean order")
{
    EuclideanInstance ei;
    ei.model = Model::Euclidean;
    ei.k = 1;
    ei.people = {
        person("p", { scalar(mpq_class(10)) }, { scalar(mpq_class(0)) }),
        person("x", { scalar(mpq_class(1)) }, { scalar(mpq_class(1)) }),
        person("y", { scalar(mpq_class(2)) }, { scalar(mpq_class(1)) }),
        person("z", { scalar(mpq_class(3)) }, { scalar(mpq_class(1)) }),
    };
    auto inst = euclidean_prefs(ei);
    CHECK(one_based(inst, 0) == std::vector<int>{ 2, 3, 4 });
}

TEST_CASE("ties are detected")
{
    EuclideanInstance ei;
    ei.model = Model::Euclidean;
    ei.k = 1;
    ei.people = {
        person("p", { scalar(mpq_class(0)) }, { scalar(mpq_class(0)) }),
        person("x", { scalar(mpq_class(-1)) }, { scalar(mpq_class(0)) }),
        person("y", { scalar(mpq_class(1)) }, { scalar(mpq_class(0)) }),
        person("z", { scalar(mpq_class(5)) }, { scalar(mpq_class(0)) }),
    };
    CHECK_THROWS_AS(euclidean_prefs(ei), TieDetected);
    try {
        euclidean_prefs(ei);
    }
    catch (const TieDetected & e) {
        CHECK(e.person == 0);
        CHECK(std::min(e.y, e.z) == 1);
        CHECK(std::max(e.y, e.z) == 2);
    }

    SUBCASE("index tie-break")
    {
        auto inst = derive_prefs(ei, Ties::ByIndex);
        CHECK(one_based(inst, 0) == std::vector<int>{ 2, 3, 4 });
    }

    SUBCASE("a strict prefix ahead of the tie is certified")
    {
        ei.people[3].position = { scalar(rational(1, 2)) };
        CHECK(strict_prefix(ei, 0, 1) == std::vector<Person>{ 3 });
        CHECK_THROWS_AS(strict_prefix(ei, 0, 2), TieDetected);
    }
}

TEST_CASE("dimension mismatch is an error")
{
    AttributeInstance ai;
    ai.k = 2;
    ai.people = {
        person("a", { scalar(mpq_class(1)), scalar(mpq_class(0)) }, { scalar(mpq_class(0)) }),
        person("b", { scalar(mpq_class(2)), scalar(mpq_class(3)) }, { scalar(mpq_class(1)), scalar(mpq_class(0)) }),
    };
    CHECK_THROWS_AS(attribute_prefs(ai), Error);
}

TEST_CASE("exact lists agree with 512-bit evaluation")
{
    std::mt19937_64 rng(11);
    for (int trial = 0 ; trial < 10 ; ++trial) {
        auto ai = random_attribute(8, rng);
        auto inst = attribute_prefs(ai);
        for (Person x = 0 ; x < ai.size() ; ++x) {
            auto s = scores(ai, x);
            std::vector<Person> naive;
            for (Person y = 0 ; y < ai.size() ; ++y)
                if (y != x)
                    naive.push_back(y);
            std::sort(naive.begin(), naive.end(), [&] (Person a, Person b) {
                return evaluate_naive(s[a].coefficient(0), 512) > evaluate_naive(s[b].coefficient(0), 512);
            });
            CHECK(naive == inst.list(x));
        }
    }
}

TEST_CASE("scaling a preference vector keeps the list")
{
    std::mt19937_64 rng(12);
    for (int trial = 0 ; trial < 10 ; ++trial) {
        auto ai = random_attribute(8, rng);
        auto before = attribute_prefs(ai);
        std::uniform_int_distribution<int> num(1, 50), den(1, 9);
        mpq_class f = rational(num(rng), den(rng));
        auto & pref = ai.people[trial % ai.size()].preference;
        auto & c = std::get<CirclePoint>(pref[0]);
        c.radius = c.radius * RPoly(f);
        pref[1] = RPoly(std::get<RPoly>(pref[1]) * RPoly(f));
        CHECK(attribute_prefs(ai) == before);
    }
}

TEST_CASE("translating every point keeps euclidean lists")
{
    std::mt19937_64 rng(13);
    for (int trial = 0 ; trial < 10 ; ++trial) {
        auto ei = random_euclidean(10, 3, rng);
        auto before = euclidean_prefs(ei);
        std::vector<mpq_class> off{ random_rational(rng), random_rational(rng), random_rational(rng) };
        for (auto & p : ei.people)
            for (int d = 0 ; d < 3 ; ++d) {
                std::get<RPoly>(p.position[d]) += RPoly(off[d]);
                std::get<RPoly>(p.preference[d]) += RPoly(off[d]);
            }
        CHECK(euclidean_prefs(ei) == before);
    }
}

TEST_CASE("json round trip")
{
    std::mt19937_64 rng(14);
    auto ai = random_attribute(6, rng);
    auto text = geometric_to_json(ai);
    auto back = geometric_from_json(text);
    CHECK(back.size() == ai.size());
    CHECK(back.k == ai.k);
    CHECK(geometric_to_json(back) == text);
    CHECK(attribute_prefs(back) == attribute_prefs(ai));

    SUBCASE("symbolic radius and cosine sums")
    {
        auto ei = build_3euclid(paw());
        auto t = geometric_to_json(ei);
        auto e2 = geometric_from_json(t);
        CHECK(geometric_to_json(e2) == t);
        CHECK(euclidean_prefs(e2) == euclidean_prefs(ei));

        auto p4 = build_4attr(paw());
        auto t4 = geometric_to_json(p4);
        CHECK(geometric_to_json(geometric_from_json(t4)) == t4);
    }

    SUBCASE("approximations are ignored on input")
    {
        auto approx = geometric_to_json(ai, true);
        CHECK(approx != text);
        CHECK(geometric_to_json(geometric_from_json(approx)) == text);
    }
}

TEST_CASE("plain json numbers need the float switch")
{
    std::string text = R"({"model":"euclidean","k":1,"people":[
        {"name":"x","position":[0.5],"preference":[0]},
        {"name":"y","position":[2],"preference":[1]}]})";
    CHECK_THROWS_AS(geometric_from_json(text), MalformedFile);
    auto ei = geometric_from_json(text, true);
    CHECK(ei.size() == 2);
    CHECK(euclidean_prefs(ei).list(0) == std::vector<Person>{ 1 });
}

TEST_CASE("malformed json is rejected")
{
    CHECK_THROWS_AS(geometric_from_json("{"), MalformedFile);
    CHECK_THROWS_AS(geometric_from_json(R"({"model":"other","k":1,"people":[]})"), MalformedFile);
}

TEST_CASE("perturbation leaves a strict instance alone")
{
    std::mt19937_64 rng(15);
    auto ai = random_attribute(6, rng);
    auto r = perturb_for_strictness(ai, PerturbationPlan{ { 0, 1, 2 }, { 0, 1 } });
    CHECK_FALSE(r.changed);
    CHECK(geometric_to_json(r.instance) == geometric_to_json(ai));
}

TEST_CASE("perturbation of the paw instance")
{
    auto cs = paw();
    auto raw = build_4attr_unperturbed(cs);
    CHECK_THROWS_AS(attribute_prefs(raw), TieDetected);

    PerturbationResult info;
    auto ai = build_4attr(cs, &info);
    CHECK(info.changed);
    CHECK(info.delta0 > 0);
    CHECK(info.delta0 < info.gap);
    auto inst = attribute_prefs(ai);
    auto prefixes = expected_prefixes(cs);
    for (Person p = 0 ; p < inst.size() ; ++p) {
        auto & want = prefixes[p];
        REQUIRE(inst.list(p).size() >= want.size());
        CHECK(std::equal(want.begin(), want.end(), inst.list(p).begin()));
    }
}

TEST_CASE("perturbation keeps every strict comparison")
{
    std::mt19937_64 rng(16);
    int done = 0;
    for (int trial = 0 ; done < 10 && trial < 200 ; ++trial) {
        /* Random connected graphs on 3 or 4 vertices: a random spanning tree plus extras. */
        int n = 3 + int(rng() % 2);
        InputGraph g{ n, { } };
        for (int v = 1 ; v < n ; ++v) {
            int u = int(rng() % v);
            g.edges.insert({ u, v });
        }
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (rng() % 3 == 0)
                    g.edges.insert({ u, v });
        auto cs = cycle_structure(double_cover(g));
        auto raw = build_4attr_unperturbed(cs);
        auto moved = build_4attr(cs);
        for (Person x = 0 ; x < raw.size() ; ++x) {
            auto before = scores(raw, x), after = scores(moved, x);
            for (Person a = 0 ; a < raw.size() ; ++a)
                for (Person b = 0 ; b < raw.size() ; ++b) {
                    if (a == x || b == x || a == b)
                        continue;
                    int s = certified_sign(before[a] - before[b]).sign;
                    if (s != 0)
                        CHECK(certified_sign(after[a] - after[b]).sign == s);
                    else
                        CHECK(certified_sign(after[a] - after[b]).sign != 0);
                }
        }
        ++done;
    }
    CHECK(done == 10);
}

TEST_CASE("unperturbed reduction comparisons need no interval arithmetic")
{
    auto cs = paw();
    auto raw = build_4attr_unperturbed(cs);
    long count = 0;
    for (Person x = 0 ; x < raw.size() ; ++x) {
        auto s = scores(raw, x);
        for (Person a = 0 ; a < raw.size() ; ++a)
            for (Person b = a + 1 ; b < raw.size() ; ++b)
                if (a != x && b != x) {
                    CHECK(certified_sign(s[a] - s[b]).certificate != Certificate::Interval);
                    ++count;
                }
    }
    CHECK(count > 0);

    ComparisonStats stats;
    euclidean_prefs(build_3euclid(cs), &stats);
    CHECK(stats.count(Certificate::Interval) == 0);
    CHECK(stats.total() > 0);
}
