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

#ifndef ROOMMATES_GEOMETRY_JSON_HH
#define ROOMMATES_GEOMETRY_JSON_HH

#include <roommates/geometry.hh>

#include <string>

namespace roommates
{
    /* Coordinates are exact: rationals {"num","den"} (decimal strings),
     * circles {"turns","radius"}, cosine sums {"const","cos"}, and values in
     * the symbolic parameter {"primary","tiebreak"} meaning primary R + tiebreak.
     * With approximate=true each person also gets *_approx arrays of doubles
     * (null for coordinates that depend on R); these are ignored on input. */
    auto geometric_to_json(const GeometricInstance & gi, bool approximate = false) -> std::string;

    /* Throws MalformedFile. Plain JSON numbers are rejected unless allow_float. */
    auto geometric_from_json(const std::string & text, bool allow_float = false) -> GeometricInstance;
}

#endif
