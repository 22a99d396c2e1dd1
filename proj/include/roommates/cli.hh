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

#ifndef ROOMMATES_CLI_HH
#define ROOMMATES_CLI_HH

#include <ostream>
#include <string>
#include <vector>

namespace roommates
{
    namespace exit_code
    {
        inline constexpr int ok = 0;
        /* No stable matching, a tie, a failed verification. */
        inline constexpr int negative = 1;
        /* Usage, file and internal errors. */
        inline constexpr int error = 2;
    }

    /* args excludes the program name. */
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
