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

#ifndef ROOMMATES_TESTS_FIXTURES_HH
#define ROOMMATES_TESTS_FIXTURES_HH

#include <roommates/core.hh>
#include <roommates/irving.hh>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace fixtures
{
    using namespace roommates;

    inline auto data_path(const std::string & name) -> std::string
    {
        return std::string(ROOMMATES_TEST_DATA) + "/" + name;
    }

    inline auto load(const std::string & name) -> Instance
    {
        return parse_instance(read_file(data_path(name)));
    }

    inline auto twelve() -> Instance { return load("twelve.sr"); }
    inline auto unsolvable4() -> Instance { return load("unsolvable4.sr"); }

    /* Rows of 1-based ids, one per person. */
    using Rows = std::vector<std::vector<int>>;

    inline auto table_rows(const Table & t) -> Rows
    {
        Rows r;
        for (Person p = 0 ; p < t.num_people() ; ++p) {
            r.emplace_back();
            for (Person q : t.list(p))
                r.back().push_back(q + 1);
        }
        return r;
    }

    inline auto matching(int n, const std::vector<std::pair<int, int>> & one_based) -> Matching
    {
        std::vector<std::pair<Person, Person>> pairs;
        for (auto [a, b] : one_based)
            pairs.emplace_back(a - 1, b - 1);
        return Matching::from_pairs(n, pairs);
    }

    /* (e: h, s) triples, 1-based. */
    inline auto rotation(const std::vector<std::array<int, 3>> & one_based) -> Rotation
    {
        std::vector<Triple> t;
        for (auto & x : one_based)
            t.push_back(Triple{ x[0] - 1, x[1] - 1, x[2] - 1 });
        return Rotation(std::move(t));
    }

    inline auto random_instance(int n, std::mt19937_64 & rng) -> Instance
    {
        std::vector<std::vector<Person>> lists(n);
        for (Person p = 0 ; p < n ; ++p) {
            for (Person q = 0 ; q < n ; ++q)
                if (q != p)
                    lists[p].push_back(q);
            std::shuffle(lists[p].begin(), lists[p].end(), rng);
        }
        return Instance(std::move(lists));
    }

    inline auto relabel(const Instance & inst, const std::vector<Person> & pi) -> Instance
    {
        std::vector<std::vector<Person>> lists(inst.size());
        for (Person p = 0 ; p < inst.size() ; ++p)
            for (Person q : inst.list(p))
                lists[pi[p]].push_back(pi[q]);
        return Instance(std::move(lists));
    }
}

#endif
