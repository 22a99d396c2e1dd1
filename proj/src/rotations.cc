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

#include <roommates/rotations.hh>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>
#include <unordered_set>

namespace roommates
{
    auto exploration_budget_from_env() -> std::size_t
    {
        if (const char * v = std::getenv("SR_EXPLORATION_BUDGET")) {
            char * end = nullptr;
            auto b = std::strtoull(v, &end, 10);
            if (end && *end == '\0' && b > 0)
                return std::size_t(b);
        }
        return 1000000;
    }

    auto RotationPoset::index_of(const Rotation & r) const -> int
    {
        auto it = std::lower_bound(rotations.begin(), rotations.end(), r);
        return (it != rotations.end() && *it == r) ? int(it - rotations.begin()) : -1;
    }

    auto RotationPoset::num_singletons() const -> int
    {
        return int(std::count(dual.begin(), dual.end(), -1));
    }

    auto RotationPoset::num_dual_pairs() const -> int
    {
        return (size() - num_singletons()) / 2;
    }

    auto RotationPoset::conflicts() const -> std::vector<std::pair<Person, Person>>
    {
        std::vector<std::pair<Person, Person>> result;
        for (auto & [k, v] : remover)
            if (v.size() > 1)
                result.push_back(k);
        return result;
    }

    auto RotationPoset::hasse_edges() const -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> result;
        for (int i = 0 ; i < size() ; ++i)
            for (int j = 0 ; j < size() ; ++j) {
                if (i == j || ! precedes(i, j))
                    continue;
                /* i covers-below j unless some k strictly between. */
                Bitset between = above[i] & below[j];
                between.reset(i);
                between.reset(j);
                if (between.none())
                    result.emplace_back(i, j);
            }
        return result;
    }

    namespace
    {
        auto key_of(const Table & t) -> std::string
        {
            auto & f = t.fingerprint();
            return std::string(f.begin(), f.end());
        }

        auto compute_closure(RotationPoset & poset) -> void
        {
            int k = poset.size();
            std::vector<std::vector<int>> succ(k);
            std::vector<int> indeg(k, 0);
            for (int j = 0 ; j < k ; ++j)
                for (int i : poset.explicit_pred[j]) {
                    succ[i].push_back(j);
                    ++indeg[j];
                }

            std::vector<int> order;
            std::vector<int> ready;
            for (int i = 0 ; i < k ; ++i)
                if (indeg[i] == 0)
                    ready.push_back(i);
            while (! ready.empty()) {
                int i = ready.back();
                ready.pop_back();
                order.push_back(i);
                for (int j : succ[i])
                    if (--indeg[j] == 0)
                        ready.push_back(j);
            }
            if (int(order.size()) != k)
                throw InternalInconsistency("explicit precedence has a cycle");

            poset.below.assign(k, Bitset(k));
            for (int j : order) {
                poset.below[j].set(j);
                for (int i : poset.explicit_pred[j])
                    poset.below[j] |= poset.below[i];
            }
            poset.above.assign(k, Bitset(k));
            for (int j = 0 ; j < k ; ++j)
                for (int i = 0 ; i < k ; ++i)
                    if (poset.below[j][i])
                        poset.above[i].set(j);
        }

        auto assign_names(RotationPoset & poset) -> void
        {
            /* Number singletons and dual pairs together; within a pair the member
             * with fewer predecessors is the plain one, the other gets a 'd'. */
            int k = poset.size();
            auto key = [&] (int i) { return std::make_pair(poset.below[i].count(), i); };
            std::vector<int> primaries;
            for (int i = 0 ; i < k ; ++i) {
                int d = poset.dual[i];
                if (d < 0 || key(i) < key(d))
                    primaries.push_back(i);
            }
            std::sort(primaries.begin(), primaries.end(), [&] (int a, int b) { return key(a) < key(b); });
            poset.names.assign(k, "");
            int label = 0;
            for (int i : primaries) {
                ++label;
                poset.names[i] = "R" + std::to_string(label);
                if (poset.dual[i] >= 0)
                    poset.names[poset.dual[i]] = "R" + std::to_string(label) + "d";
            }
        }
    }

    auto discover_rotations(const Instance & inst, const ExplorationOptions & options) -> std::optional<RotationPoset>
    {
        auto shared = std::make_shared<const Instance>(inst);
        auto start = phase1(shared);
        if (! start)
            return std::nullopt;

        std::size_t budget = options.budget ? options.budget : exploration_budget_from_env();
        std::mt19937_64 rng(options.child_order_seed);

        std::set<Rotation> found;
        std::map<std::pair<Person, Person>, std::set<Rotation>> remover;
        std::unordered_set<std::string> visited;
        bool complete = false;

        std::vector<Table> stack{ *start };
        visited.insert(key_of(*start));
        while (! stack.empty()) {
            Table t = std::move(stack.back());
            stack.pop_back();
            if (t.all_singletons()) {
                complete = true;
                continue;
            }

            auto rots = exposed_rotations(t);
            if (options.child_order_seed)
                std::shuffle(rots.begin(), rots.end(), rng);
            for (auto & r : rots) {
                found.insert(r);
                std::vector<Removal> removals;
                auto next = eliminate(t, r, &removals);
                for (auto & rm : removals)
                    remover[{ rm.from, rm.removed }].insert(r);
                if (! next)
                    continue;
                if (visited.insert(key_of(*next)).second) {
                    if (visited.size() > budget)
                        throw ExplorationBudgetExceeded("visited more than " + std::to_string(budget) + " tables");
                    stack.push_back(std::move(*next));
                }
            }
        }

        if (! complete)
            return std::nullopt;

        RotationPoset poset;
        poset.instance = shared;
        poset.phase1_table = *start;
        poset.rotations.assign(found.begin(), found.end());
        poset.tables_visited = visited.size();
        int k = poset.size();

        int n = inst.size();
        if (k > (n / 2) * (n - 1))
            throw InternalInconsistency("more rotations than the n(2n-1) bound");

        for (auto & [pair, rs] : remover)
            for (auto & r : rs)
                poset.remover[pair].insert(poset.index_of(r));

        poset.dual.assign(k, -1);
        for (int i = 0 ; i < k ; ++i)
            poset.dual[i] = poset.index_of(poset.rotations[i].dual());

        /* R' explicitly precedes R when R has (e, h, s) and some p != h above s on
         * e's original list was taken off e's list by R'. */
        poset.explicit_pred.assign(k, { });
        for (int j = 0 ; j < k ; ++j)
            for (auto & tr : poset.rotations[j].triples()) {
                auto & l = inst.list(tr.e);
                for (int r = 0 ; r < inst.rank(tr.e, tr.s) ; ++r) {
                    Person p = l[r];
                    if (p == tr.h)
                        continue;
                    auto it = poset.remover.find({ tr.e, p });
                    if (it == poset.remover.end())
                        continue;
                    for (int i : it->second)
                        if (i != j)
                            poset.explicit_pred[j].insert(i);
                }
            }

        compute_closure(poset);
        assign_names(poset);
        return poset;
    }

    auto rotation_graph(const RotationPoset & poset) -> RotationGraph
    {
        RotationGraph g;
        for (int i = 0 ; i < poset.size() ; ++i)
            if (! poset.is_singleton(i))
                g.vertices.push_back(i);
        for (int a : g.vertices)
            for (int b : g.vertices)
                if (poset.pi(poset.dual[a], b))
                    g.edges.insert({ std::min(a, b), std::max(a, b) });
        return g;
    }

    auto attribution_consistency_check(const Instance & inst, std::uint64_t seed, int runs) -> AttributionReport
    {
        AttributionReport report;
        auto shared = std::make_shared<const Instance>(inst);
        auto start = phase1(shared);
        if (! start)
            return report;

        std::mt19937_64 rng(seed);
        std::map<std::pair<Person, Person>, Rotation> seen;
        for (int run = 0 ; run < runs ; ++run) {
            ++report.runs;
            Table t = *start;
            while (! t.all_singletons()) {
                auto rots = exposed_rotations(t);
                if (rots.empty())
                    break;
                auto & r = rots[std::uniform_int_distribution<std::size_t>(0, rots.size() - 1)(rng)];
                std::vector<Removal> removals;
                auto next = eliminate(t, r, &removals);
                for (auto & rm : removals) {
                    ++report.pairs_checked;
                    auto [it, fresh] = seen.emplace(std::make_pair(rm.from, rm.removed), r);
                    if (! fresh && it->second != r) {
                        report.consistent = false;
                        report.conflicts.push_back("(" + std::to_string(rm.from + 1) + ", " + std::to_string(rm.removed + 1)
                                + ") removed by " + it->second.to_string() + " and by " + r.to_string());
                    }
                }
                if (! next)
                    break;
                t = std::move(*next);
            }
        }
        return report;
    }

    auto hasse_dot(const RotationPoset & poset) -> std::string
    {
        std::ostringstream out;
        out << "digraph hasse {\n";
        for (int i = 0 ; i < poset.size() ; ++i)
            out << "  " << poset.names[i] << " [label=\"" << poset.names[i] << "\\n" << poset.rotations[i].to_string() << "\"];\n";
        for (auto & [a, b] : poset.hasse_edges())
            out << "  " << poset.names[a] << " -> " << poset.names[b] << ";\n";
        out << "}\n";
        return out.str();
    }

    auto rotation_graph_dot(const RotationPoset & poset, const RotationGraph & g) -> std::string
    {
        std::ostringstream out;
        out << "graph gofi {\n";
        for (int v : g.vertices)
            out << "  " << poset.names[v] << ";\n";
        for (auto & [a, b] : g.edges)
            out << "  " << poset.names[a] << " -- " << poset.names[b] << ";\n";
        out << "}\n";
        return out.str();
    }
}
