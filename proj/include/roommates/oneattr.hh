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

#ifndef ROOMMATES_ONEATTR_HH
#define ROOMMATES_ONEATTR_HH

#include <roommates/core.hh>

#include <string>
#include <vector>

namespace roommates
{
    ROOMMATES_ERROR(InvalidTypeString);
    ROOMMATES_ERROR(DispatchExhausted);

    /* People in position order. Type A lists everyone by ascending position,
     * type B by descending position. */
    struct OneAttrInstance
    {
        std::string types;

        auto size() const -> int { return int(types.size()); }
    };

    /* Throws InvalidTypeString unless the string is over {A, B} with even length >= 2. */
    auto parse_type_string(const std::string & s) -> OneAttrInstance;

    /* Lines "position type", where type is A, B or a nonzero rational
     * preference (negative means A, positive B). Sorted by position; equal
     * positions are rejected. '#' starts a comment. */
    auto parse_oneattr_file(const std::string & text) -> OneAttrInstance;

    auto expand(const OneAttrInstance & oa) -> Instance;

    /* One recursion frame: the case applied to the current type string and
     * the pair it removed, in the frame's own 1-based positions. Base cases
     * have first = second = 0. */
    struct OneAttrStep
    {
        std::string types, rule;
        int first = 0, second = 0;
    };

    struct OneAttrSolution
    {
        std::vector<Matching> assignments;
        std::vector<OneAttrStep> steps;

        auto count() const -> int { return int(assignments.size()); }
    };

    /* Throws DispatchExhausted if no case applies. */
    auto solve_1attr(const OneAttrInstance & oa) -> OneAttrSolution;
}

#endif
