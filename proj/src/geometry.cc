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

#include <algorithm>
#include <numeric>

namespace roommates
{
    auto GeometricInstance::index_of(const std::string & name) const -> int
    {
        for (int i = 0 ; i < size() ; ++i)
            if (people[i].name == name)
                return i;
        return -1;
    }

    auto scalar(const mpq_class & q) -> Component
    {
        return RPoly(q);
    }

    auto scalar(const ExactReal & x) -> Component
    {
        return RPoly(x);
    }

    auto circle(const mpq_class & turns, const RPoly & radius) -> Component
    {
        return CirclePoint{ turns, radius };
    }

    auto dimension(const std::vector<Component> & v) -> int
    {
        int d = 0;
        for (auto & c : v)
            d += std::holds_alternative<CirclePoint>(c) ? 2 : 1;
        return d;
    }

    auto expand(const std::vector<Component> & v) -> std::vector<RPoly>
    {
        std::vector<RPoly> result;
        for (auto & c : v) {
            if (auto s = std::get_if<RPoly>(&c))
                result.push_back(*s);
            else {
                auto & p = std::get<CirclePoint>(c);
                result.push_back(p.radius * RPoly(ExactReal::cos_turns(p.turns)));
                result.push_back(p.radius * RPoly(ExactReal::sin_turns(p.turns)));
            }
        }
        return result;
    }

    auto dot(const std::vector<RPoly> & a, const std::vector<RPoly> & b) -> RPoly
    {
        if (a.size() != b.size())
            throw Error("dimension mismatch in dot product");
        RPoly sum;
        for (std::size_t i = 0 ; i < a.size() ; ++i)
            sum += a[i] * b[i];
        return sum;
    }

    auto squared_distance(const std::vector<RPoly> & a, const std::vector<RPoly> & b) -> RPoly
    {
        if (a.size() != b.size())
            throw Error("dimension mismatch in distance");
        RPoly sum;
        for (std::size_t i = 0 ; i < a.size() ; ++i) {
            RPoly d = a[i] - b[i];
            sum += d * d;
        }
        return sum;
    }

    auto scores(const GeometricInstance & gi, Person x, const std::optional<mpq_class> & concrete_r) -> std::vector<RPoly>
    {
        auto pref = expand(gi.people[x].preference);
        if (int(pref.size()) != gi.k)
            throw Error(gi.people[x].name + " has a preference of dimension " + std::to_string(pref.size())
                    + ", expected " + std::to_string(gi.k));
        std::vector<RPoly> result(gi.size());
        for (Person y = 0 ; y < gi.size() ; ++y) {
            if (y == x)
                continue;
            auto pos = expand(gi.people[y].position);
            if (int(pos.size()) != gi.k)
                throw Error(gi.people[y].name + " has a position of dimension " + std::to_string(pos.size())
                        + ", expected " + std::to_string(gi.k));
            result[y] = gi.model == Model::Attribute ? dot(pref, pos) : squared_distance(pref, pos);
            if (concrete_r)
                result[y] = RPoly(result[y].at(*concrete_r));
        }
        return result;
    }

    namespace
    {
        auto derive(const GeometricInstance & gi, ComparisonStats * stats, const std::optional<mpq_class> & concrete_r,
                Ties ties = Ties::Reject) -> Instance
        {
            int n = gi.size();
            /* Attribute lists descend by dot product, euclidean lists ascend by distance. */
            int better = gi.model == Model::Attribute ? 1 : -1;
            std::vector<std::vector<Person>> lists(n);
            for (Person x = 0 ; x < n ; ++x) {
                auto s = scores(gi, x, concrete_r);
                auto & l = lists[x];
                for (Person y = 0 ; y < n ; ++y)
                    if (y != x)
                        l.push_back(y);
                std::sort(l.begin(), l.end(), [&] (Person a, Person b) {
                    if (a == b)
                        return false;
                    auto sign = certified_sign(s[a] - s[b]);
                    if (stats)
                        ++stats->by_certificate[int(sign.certificate)];
                    if (sign.sign == 0) {
                        if (ties == Ties::ByIndex)
                            return a < b;
                        throw TieDetected(x, a, b, gi.people[x].name + " is indifferent between "
                                + gi.people[a].name + " and " + gi.people[b].name);
                    }
                    return sign.sign == better;
                });
            }
            return Instance(std::move(lists));
        }
    }

    auto attribute_prefs(const AttributeInstance & ai, ComparisonStats * stats) -> Instance
    {
        if (ai.model != Model::Attribute)
            throw Error("attribute_prefs needs an attribute-model instance");
        return derive(ai, stats, std::nullopt);
    }

    auto euclidean_prefs(const EuclideanInstance & ei, ComparisonStats * stats, const std::optional<mpq_class> & concrete_r) -> Instance
    {
        if (ei.model != Model::Euclidean)
            throw Error("euclidean_prefs needs a euclidean-model instance");
        return derive(ei, stats, concrete_r);
    }

    auto derive_prefs(const GeometricInstance & gi, ComparisonStats * stats) -> Instance
    {
        return gi.model == Model::Attribute ? attribute_prefs(gi, stats) : euclidean_prefs(gi, stats);
    }

    auto derive_prefs(const GeometricInstance & gi, Ties ties) -> Instance
    {
        return derive(gi, nullptr, std::nullopt, ties);
    }

    auto strict_prefix(const GeometricInstance & gi, Person x, int length) -> std::vector<Person>
    {
        int better = gi.model == Model::Attribute ? 1 : -1;
        auto s = scores(gi, x);
        std::vector<Person> l;
        for (Person y = 0 ; y < gi.size() ; ++y)
            if (y != x)
                l.push_back(y);
        length = std::min(length, int(l.size()));
        /* Ties compare equal here, so a sorted list has every tied group contiguous. */
        std::stable_sort(l.begin(), l.end(), [&] (Person a, Person b) {
            return a != b && certified_sign(s[a] - s[b]).sign == better;
        });
        for (int i = 0 ; i < length && i + 1 < int(l.size()) ; ++i)
            if (certified_sign(s[l[i]] - s[l[i + 1]]).sign == 0)
                throw TieDetected(x, l[i], l[i + 1], gi.people[x].name + " is indifferent between "
                        + gi.people[l[i]].name + " and " + gi.people[l[i + 1]].name);
        l.resize(length);
        return l;
    }

    namespace
    {
        auto component_at(std::vector<Component> & v, int dim) -> RPoly &
        {
            int d = 0;
            for (auto & c : v) {
                if (auto s = std::get_if<RPoly>(&c)) {
                    if (d == dim)
                        return *s;
                    ++d;
                }
                else {
                    if (dim == d || dim == d + 1) {
                        /* Moving a point off its circle: store it as plain coordinates. */
                        auto & p = std::get<CirclePoint>(c);
                        RPoly x = p.radius * RPoly(ExactReal::cos_turns(p.turns));
                        RPoly y = p.radius * RPoly(ExactReal::sin_turns(p.turns));
                        auto at = v.erase(std::find_if(v.begin(), v.end(), [&] (auto & e) { return &e == &c; }));
                        at = v.insert(at, { Component(x), Component(y) });
                        return std::get<RPoly>(*(dim == d ? at : at + 1));
                    }
                    d += 2;
                }
            }
            throw PerturbationBoundViolated("perturbed coordinate out of range");
        }

        auto floor_power_of_two(const mpq_class & x) -> mpq_class
        {
            mpq_class p = 1;
            while (p > x)
                p /= 2;
            while (p * 2 <= x)
                p *= 2;
            return p;
        }
    }

    auto perturb_for_strictness(const AttributeInstance & ai, const PerturbationPlan & plan) -> PerturbationResult
    {
        /* Moving person j by delta_j (1, lambda) shifts X's score for j by
         * delta_j * c_X with c_X = pref_X[d0] + lambda pref_X[d1]. With
         * delta_j <= J delta_0 and |c_X| <= C, every shift is at most J delta_0 C.
         * Choosing delta_0 <= gap / (4 J C) keeps the total change of any
         * difference below gap / 2, so every strict comparison survives, while
         * tied perturbed people separate (distinct j, c_X != 0). */
        PerturbationResult result{ ai };
        int n = ai.size();
        int J = int(plan.people.size());
        if (J == 0 || ai.model != Model::Attribute)
            return result;

        std::vector<char> moved(n, 0);
        for (Person p : plan.people)
            moved.at(p) = 1;

        std::vector<char> needs_direction(n, 0);
        bool any_tie = false;
        std::optional<mpq_class> gap;
        for (Person x = 0 ; x < n ; ++x) {
            auto s = scores(ai, x);
            std::vector<Person> l;
            for (Person y = 0 ; y < n ; ++y)
                if (y != x) {
                    if (s[y].degree() > 0)
                        throw PerturbationBoundViolated("scores depend on the symbolic parameter");
                    l.push_back(y);
                }
            std::sort(l.begin(), l.end(), [&] (Person a, Person b) {
                return a != b && certified_sign(s[a] - s[b]).sign > 0;
            });

            /* Groups of equal score. */
            std::vector<std::vector<Person>> groups;
            for (Person y : l) {
                if (! groups.empty() && certified_sign(s[groups.back().front()] - s[y]).sign == 0)
                    groups.back().push_back(y);
                else
                    groups.push_back({ y });
            }

            for (std::size_t g = 0 ; g < groups.size() ; ++g) {
                auto & grp = groups[g];
                bool has_moved = std::any_of(grp.begin(), grp.end(), [&] (Person y) { return moved[y]; });
                if (grp.size() > 1) {
                    int fixed = int(std::count_if(grp.begin(), grp.end(), [&] (Person y) { return ! moved[y]; }));
                    if (fixed > 1)
                        throw PerturbationBoundViolated(ai.people[x].name + " has a tie outside the designated group");
                    needs_direction[x] = 1;
                    any_tie = true;
                }
                if (g + 1 < groups.size()) {
                    auto & nxt = groups[g + 1];
                    bool next_moved = std::any_of(nxt.begin(), nxt.end(), [&] (Person y) { return moved[y]; });
                    if (has_moved || next_moved) {
                        auto lb = abs_lower_bound((s[grp.front()] - s[nxt.front()]).coefficient(0));
                        if (! gap || lb < *gap)
                            gap = lb;
                    }
                }
            }
        }

        if (! any_tie)
            return result;

        auto direction_score = [&] (Person x, const mpq_class & lambda) {
            auto pref = expand(ai.people[x].preference);
            return (pref.at(plan.dims[0]) + RPoly(lambda) * pref.at(plan.dims[1])).coefficient(0);
        };

        mpq_class lambda = 0;
        for (int l = 1 ; l <= 16 && lambda == 0 ; ++l) {
            bool ok = true;
            for (Person x = 0 ; x < n && ok ; ++x)
                if (needs_direction[x] && direction_score(x, l).is_zero())
                    ok = false;
            if (ok)
                lambda = l;
        }
        if (lambda == 0)
            throw PerturbationBoundViolated("no perturbation direction separates the ties");

        mpq_class big_c = 0;
        for (Person x = 0 ; x < n ; ++x)
            big_c = std::max(big_c, abs_upper_bound(direction_score(x, lambda)));

        mpq_class g = gap.value_or(mpq_class(1));
        if (g <= 0 || big_c <= 0)
            throw PerturbationBoundViolated("non-positive perturbation bound");
        mpq_class bound = g / (4 * J * big_c);
        result.delta0 = floor_power_of_two(bound);
        result.lambda = lambda;
        result.gap = g;
        result.changed = true;

        for (int j = 1 ; j <= J ; ++j) {
            auto & pos = result.instance.people[plan.people[j - 1]].position;
            mpq_class delta = j * result.delta0;
            component_at(pos, plan.dims[0]) += RPoly(delta);
            component_at(pos, plan.dims[1]) += RPoly(lambda * delta);
        }
        return result;
    }
}
