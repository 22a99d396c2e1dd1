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

#ifndef ROOMMATES_COUNTING_HH
#define ROOMMATES_COUNTING_HH

#include <roommates/rotations.hh>

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

namespace roommates
{
    ROOMMATES_ERROR(InstanceTooLarge);

    enum class CountMethod
    {
        Downsets,
        MaximalIS,
        BruteForce
    };

    auto method_name(CountMethod m) -> std::string;

    struct StableCount
    {
        mpz_class value;
        CountMethod method;
    };

    inline constexpr int brute_force_limit = 14;

    /* Calls f on every downset of Pi* holding all singletons and one of each dual
     * pair; return false from f to stop. */
    auto for_each_stable_downset(const RotationPoset & poset, const std::function<bool (const Bitset &)> & f) -> void;

    auto count_via_downsets(const RotationPoset & poset) -> StableCount;
    auto count_via_maximal_is(const RotationGraph & g, const RotationPoset & poset) -> StableCount;

    /* Throws InstanceTooLarge above brute_force_limit people. */
    auto count_brute_force(const Instance & inst) -> StableCount;
    auto all_stable_matchings_brute_force(const Instance & inst) -> std::vector<Matching>;

    /* Throws InternalInconsistency if a downset fails to replay. */
    auto enumerate_stable_matchings(const RotationPoset & poset) -> std::vector<Matching>;

    /* The matching reached by eliminating the given downset from the Phase-1 table. */
    auto matching_of_downset(const RotationPoset & poset, const Bitset & downset) -> Matching;
}

#endif
