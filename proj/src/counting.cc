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

#include <algorithm>
#include <set>

namespace roommates
{
    auto method_name(CountMethod m) -> std::string
    {
        switch (m) {
            case CountMethod::Downsets:   return "downsets";
            case CountMethod::MaximalIS:  return "maxis";
            case CountMethod::BruteForce: return "brute";
        }
        return "?";
    }

    namespace
    {
        enum class State : signed char { Unknown, In, Out };

        struct DownsetSearch
        {
            const RotationPoset & poset;
            const std::function<bool (const Bitset &)> & f;
            std::vector<int> pairs;
            bool stopped = false;

            /* Forcing in pulls predecessors in and the dual out; forcing out pushes
             * successors out and the dual in. */
            auto force(std::vector<State> & st, int x, State v) -> bool
            {
                std::vector<std::pair<int, State>> work{ { x, v } };
                while (! work.empty()) {
                    auto [y, w] = work.back();
                    work.pop_back();
                    if (st[y] == w)
                        continue;
                    if (st[y] != State::Unknown)
                        return false;
                    st[y] = w;
                    auto & related = (w == State::In) ? poset.below[y] : poset.above[y];
                    for (auto z = related.find_first() ; z != Bitset::npos ; z = related.find_next(z))
                        if (int(z) != y)
                            work.emplace_back(int(z), w);
                    if (poset.dual[y] >= 0)
                        work.emplace_back(poset.dual[y], w == State::In ? State::Out : State::In);
                    else if (w == State::Out)
                        return false;
                }
                return true;
            }

            auto run(std::vector<State> st, std::size_t next) -> void
            {
                while (next < pairs.size() && st[pairs[next]] != State::Unknown)
                    ++next;
                if (next == pairs.size()) {
                    Bitset b(poset.size());
                    for (int i = 0 ; i < poset.size() ; ++i)
                        if (st[i] == State::In)
                            b.set(i);
                    if (! f(b))
                        stopped = true;
                    return;
                }
                int a = pairs[next];
                for (int choice : { a, poset.dual[a] }) {
                    auto copy = st;
                    if (force(copy, choice, State::In))
                        run(std::move(copy), next + 1);
                    if (stopped)
                        return;
                }
            }
        };
    }

    auto for_each_stable_downset(const RotationPoset & poset, const std::function<bool (const Bitset &)> & f) -> void
    {
        DownsetSearch search{ poset, f, { } };
        std::vector<State> st(poset.size(), State::Unknown);
        for (int i = 0 ; i < poset.size() ; ++i) {
            if (poset.is_singleton(i)) {
                if (! search.force(st, i, State::In))
                    return;
            }
            else if (i < poset.dual[i])
                search.pairs.push_back(i);
        }
        search.run(std::move(st), 0);
    }

    auto count_via_downsets(const RotationPoset & poset) -> StableCount
    {
        StableCount result{ 0, CountMethod::Downsets };
        for_each_stable_downset(poset, [&] (const Bitset &) { ++result.value; return true; });
        return result;
    }

    auto count_via_maximal_is(const RotationGraph & g, const RotationPoset & poset) -> StableCount
    {
        StableCount result{ 0, CountMethod::MaximalIS };
        std::vector<int> pairs;
        for (int v : g.vertices)
            if (v < poset.dual[v])
                pairs.push_back(v);

        std::vector<int> chosen;
        std::function<void (std::size_t)> go = [&] (std::size_t i) {
            if (i == pairs.size()) {
                ++result.value;
                return;
            }
            for (int c : { pairs[i], poset.dual[pairs[i]] }) {
                if (std::any_of(chosen.begin(), chosen.end(), [&] (int x) { return g.adjacent(x, c); }))
                    continue;
                chosen.push_back(c);
                go(i + 1);
                chosen.pop_back();
            }
        };
        go(0);
        return result;
    }

    namespace
    {
        auto check_limit(const Instance & inst) -> void
        {
            if (inst.size() > brute_force_limit)
                throw InstanceTooLarge(std::to_string(inst.size()) + " people exceeds the brute-force limit of "
                        + std::to_string(brute_force_limit));
        }

        auto each_perfect_matching(int n, const std::function<void (const std::vector<Person> &)> & f) -> void
        {
            std::vector<Person> partner(n, -1);
            std::function<void ()> go = [&] () {
                Person a = 0;
                while (a < n && partner[a] >= 0)
                    ++a;
                if (a == n) {
                    f(partner);
                    return;
                }
                for (Person b = a + 1 ; b < n ; ++b) {
                    if (partner[b] >= 0)
                        continue;
                    partner[a] = b;
                    partner[b] = a;
                    go();
                    partner[a] = -1;
                    partner[b] = -1;
                }
            };
            go();
        }
    }

    auto count_brute_force(const Instance & inst) -> StableCount
    {
        check_limit(inst);
        StableCount result{ 0, CountMethod::BruteForce };
        each_perfect_matching(inst.size(), [&] (const std::vector<Person> & partner) {
            if (is_stable(inst, Matching(partner)))
                ++result.value;
        });
        return result;
    }

    auto all_stable_matchings_brute_force(const Instance & inst) -> std::vector<Matching>
    {
        check_limit(inst);
        std::vector<Matching> result;
        each_perfect_matching(inst.size(), [&] (const std::vector<Person> & partner) {
            Matching m(partner);
            if (is_stable(inst, m))
                result.push_back(std::move(m));
        });
        std::sort(result.begin(), result.end());
        return result;
    }

    auto matching_of_downset(const RotationPoset & poset, const Bitset & downset) -> Matching
    {
        /* Sorting by predecessor count gives a linear extension of Pi*. */
        std::vector<int> order;
        for (auto i = downset.find_first() ; i != Bitset::npos ; i = downset.find_next(i))
            order.push_back(int(i));
        std::stable_sort(order.begin(), order.end(),
                [&] (int a, int b) { return poset.below[a].count() < poset.below[b].count(); });

        Table t = *poset.phase1_table;
        for (int i : order) {
            auto & r = poset.rotations[i];
            if (! is_exposed(t, r))
                throw InternalInconsistency(poset.names[i] + " is not exposed when its turn comes");
            auto next = eliminate(t, r);
            if (! next)
                throw InternalInconsistency("eliminating " + poset.names[i] + " empties a list");
            t = std::move(*next);
        }
        if (! t.all_singletons())
            throw InternalInconsistency("downset does not reach an all-singleton table");
        return t.to_matching();
    }

    auto enumerate_stable_matchings(const RotationPoset & poset) -> std::vector<Matching>
    {
        std::vector<Matching> result;
        std::set<Matching> seen;
        for_each_stable_downset(poset, [&] (const Bitset & d) {
            auto m = matching_of_downset(poset, d);
            if (! seen.insert(m).second)
                throw InternalInconsistency("two downsets give the same matching");
            if (! is_stable(*poset.instance, m))
                throw InternalInconsistency("downset gives an unstable matching");
            result.push_back(std::move(m));
            return true;
        });
        return result;
    }
}
