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
#ifndef ROOMMATES_CORE_HH
#define ROOMMATES_CORE_HH

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace roommates
{
    /* People are 0-based internally, 1-based in files. */
    using Person = int;

    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

#define ROOMMATES_ERROR(name) \
    class name : public Error \
    { \
        public: \
            explicit name(const std::string & what) : Error(#name ": " + what) { } \
    }

    ROOMMATES_ERROR(MalformedFile);
    ROOMMATES_ERROR(InvalidPreferenceList);
    ROOMMATES_ERROR(InvalidMatching);

    class Instance
    {
        private:
            std::vector<std::vector<Person>> _lists;
            std::vector<std::vector<int>> _rank;

        public:
            Instance() = default;

            /* Throws InvalidPreferenceList unless every list is a permutation of the others. */
            explicit Instance(std::vector<std::vector<Person>> lists);

            auto size() const -> int { return int(_lists.size()); }
            auto list(Person p) const -> const std::vector<Person> & { return _lists[p]; }
            auto lists() const -> const std::vector<std::vector<Person>> & { return _lists; }

            /* Position of q on p's list, 0 = favourite. */
            auto rank(Person p, Person q) const -> int { return _rank[p][q]; }
            auto prefers(Person p, Person a, Person b) const -> bool { return _rank[p][a] < _rank[p][b]; }

            auto operator== (const Instance & other) const -> bool { return _lists == other._lists; }
    };

    class Matching
    {
        private:
            std::vector<Person> _partner;

        public:
            Matching() = default;

            /* Throws InvalidMatching unless partner is a fixed-point-free involution. */
            explicit Matching(std::vector<Person> partner);

            static auto from_pairs(int num_people, const std::vector<std::pair<Person, Person>> & pairs) -> Matching;

            auto size() const -> int { return int(_partner.size()); }
            auto partner(Person p) const -> Person { return _partner[p]; }
            auto partners() const -> const std::vector<Person> & { return _partner; }

            /* Pairs (a, b) with a < b, sorted. */
            auto pairs() const -> std::vector<std::pair<Person, Person>>;

            auto operator== (const Matching & other) const -> bool { return _partner == other._partner; }
            auto operator< (const Matching & other) const -> bool { return _partner < other._partner; }
    };

    struct BlockingPair
    {
        Person a, b;

        auto operator== (const BlockingPair &) const -> bool = default;
    };

    /* Returns nullopt when stable, otherwise the lexicographically smallest blocking pair. */
    auto find_blocking_pair(const Instance & inst, const Matching & m) -> std::optional<BlockingPair>;

    auto is_stable(const Instance & inst, const Matching & m) -> bool;

    auto parse_instance(const std::string & text) -> Instance;
    auto serialize_instance(const Instance & inst) -> std::string;

    auto parse_matching(const std::string & text, int num_people) -> Matching;
    auto serialize_matching(const Matching & m) -> std::string;

    auto read_file(const std::string & path) -> std::string;
}

#endif
