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

#ifndef ROOMMATES_ROTATIONS_HH
#define ROOMMATES_ROTATIONS_HH

#include <roommates/irving.hh>

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace roommates
{
    ROOMMATES_ERROR(ExplorationBudgetExceeded);
    ROOMMATES_ERROR(InternalInconsistency);

    using Bitset = boost::dynamic_bitset<>;

    struct ExplorationOptions
    {
        /* Visited-table cap; 0 means read SR_EXPLORATION_BUDGET, else 10^6. */
        std::size_t budget = 0;

        /* Children are visited in this order; a nonzero seed shuffles them. */
        std::uint64_t child_order_seed = 0;
    };

    struct RotationPoset
    {
        std::shared_ptr<const Instance> instance;
        std::optional<Table> phase1_table;

        /* Sorted canonical rotations. */
        std::vector<Rotation> rotations;

        /* Index of the dual, or -1 for singletons. */
        std::vector<int> dual;

        /* remover[(x, p)] = rotations whose elimination took p off x's list.
         * More than one entry would contradict uniqueness; see conflicts(). */
        std::map<std::pair<Person, Person>, std::set<int>> remover;

        /* explicit_pred[j] = rotations explicitly preceding j. */
        std::vector<std::set<int>> explicit_pred;

        /* below[j] = { i : Pi*(i, j) }, above[i] = { j : Pi*(i, j) }; both reflexive. */
        std::vector<Bitset> below, above;

        /* R1, R1d, ... */
        std::vector<std::string> names;

        std::size_t tables_visited = 0;

        auto size() const -> int { return int(rotations.size()); }
        auto index_of(const Rotation & r) const -> int;
        auto is_singleton(int i) const -> bool { return dual[i] < 0; }
        auto num_singletons() const -> int;
        auto num_dual_pairs() const -> int;

        /* Pi*(i, j): i precedes j (reflexive). */
        auto precedes(int i, int j) const -> bool { return below[j][i]; }

        /* Pi: Pi* restricted to non-singletons. */
        auto pi(int i, int j) const -> bool { return ! is_singleton(i) && ! is_singleton(j) && precedes(i, j); }

        auto conflicts() const -> std::vector<std::pair<Person, Person>>;

        /* Covering pairs (i, j), i < j in Pi*. */
        auto hasse_edges() const -> std::vector<std::pair<int, int>>;
    };

    /* nullopt means no stable matching. */
    auto discover_rotations(const Instance & inst, const ExplorationOptions & options = { }) -> std::optional<RotationPoset>;

    struct RotationGraph
    {
        std::vector<int> vertices;
        std::set<std::pair<int, int>> edges;

        auto adjacent(int a, int b) const -> bool { return edges.count({ std::min(a, b), std::max(a, b) }); }
    };

    auto rotation_graph(const RotationPoset & poset) -> RotationGraph;

    struct AttributionReport
    {
        bool consistent = true;
        int runs = 0;
        std::size_t pairs_checked = 0;
        std::vector<std::string> conflicts;
    };

    auto attribution_consistency_check(const Instance & inst, std::uint64_t seed, int runs = 10) -> AttributionReport;

    auto hasse_dot(const RotationPoset & poset) -> std::string;
    auto rotation_graph_dot(const RotationPoset & poset, const RotationGraph & g) -> std::string;

    auto exploration_budget_from_env() -> std::size_t;
}

#endif
