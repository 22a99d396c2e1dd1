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

#ifndef ROOMMATES_IRVING_HH
#define ROOMMATES_IRVING_HH

#include <roommates/core.hh>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace roommates
{
    ROOMMATES_ERROR(RotationNotExposed);
    ROOMMATES_ERROR(NoStableMatching);

    struct Triple
    {
        Person e, h, s;

        auto operator<=> (const Triple &) const = default;
    };

    /* A cyclic sequence of triples with s_i = h_{i+1}. Always kept in canonical
     * form, i.e. rotated so that the smallest e comes first. */
    class Rotation
    {
        private:
            std::vector<Triple> _triples;

        public:
            Rotation() = default;
            explicit Rotation(std::vector<Triple> triples);

            auto triples() const -> const std::vector<Triple> & { return _triples; }
            auto size() const -> int { return int(_triples.size()); }

            /* (S, E, E^r), canonicalised. Not necessarily a rotation of anything. */
            auto dual() const -> Rotation;

            auto to_string() const -> std::string;

            auto operator<=> (const Rotation &) const = default;
    };

    /* Short lists. Entries are stored as alive flags over the original list, so
     * membership tests and truncation are cheap and a list is always an ordered
     * subsequence of the original preferences. */
    class Table
    {
        private:
            std::shared_ptr<const Instance> _inst;
            std::vector<std::uint8_t> _alive;
            std::vector<int> _first, _last, _size;

            auto row(Person p) -> std::uint8_t * { return _alive.data() + std::size_t(p) * _inst->size(); }
            auto row(Person p) const -> const std::uint8_t * { return _alive.data() + std::size_t(p) * _inst->size(); }
            auto refresh(Person p) -> void;
            auto erase_one(Person p, Person q) -> void;

        public:
            explicit Table(std::shared_ptr<const Instance> inst);

            auto instance() const -> const Instance & { return *_inst; }
            auto shared_instance() const -> const std::shared_ptr<const Instance> & { return _inst; }
            auto num_people() const -> int { return _inst->size(); }

            auto contains(Person p, Person q) const -> bool { return row(p)[_inst->rank(p, q)]; }
            auto size(Person p) const -> int { return _size[p]; }
            auto first(Person p) const -> Person;
            auto second(Person p) const -> Person;
            auto last(Person p) const -> Person;
            auto list(Person p) const -> std::vector<Person>;

            /* Removes q from p's list and p from q's list. */
            auto remove_pair(Person p, Person q) -> void;

            /* Removes everyone strictly below q on p's list (symmetrically); returns them. */
            auto truncate_below(Person p, Person q) -> std::vector<Person>;

            auto any_empty() const -> bool;
            auto all_singletons() const -> bool;
            auto total_entries() const -> long;
            auto is_symmetric() const -> bool;

            /* Exact canonical key for memoisation. */
            auto fingerprint() const -> const std::vector<std::uint8_t> & { return _alive; }

            auto to_matching() const -> Matching;
            auto to_string() const -> std::string;

            auto operator== (const Table & other) const -> bool { return _alive == other._alive; }
    };

    /* nullopt means no stable matching. Free people are chosen lowest index first,
     * unless a chooser is supplied (used to test order independence). */
    using FreeChooser = std::function<Person (const std::vector<Person> & free)>;
    auto phase1(std::shared_ptr<const Instance> inst, const FreeChooser & chooser = nullptr) -> std::optional<Table>;
    auto phase1(const Instance & inst) -> std::optional<Table>;

    /* Canonical forms, sorted. */
    auto exposed_rotations(const Table & t) -> std::vector<Rotation>;

    auto is_exposed(const Table & t, const Rotation & r) -> bool;

    struct Removal
    {
        Person from, removed;
    };

    /* nullopt means some list became empty. Throws RotationNotExposed. If
     * removals is given, each (x, s) is appended where s's truncation took s
     * off x's list. The symmetric entry (x off s's list) is not recorded. */
    auto eliminate(const Table & t, const Rotation & r, std::vector<Removal> * removals = nullptr) -> std::optional<Table>;

    /* nullopt means no stable matching. */
    auto find_stable_matching(const Instance & inst) -> std::optional<Matching>;

    /* Throws NoStableMatching. */
    auto solve(const Instance & inst) -> Matching;
}

#endif
