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

#ifndef ROOMMATES_GEOMETRY_HH
#define ROOMMATES_GEOMETRY_HH

#include <roommates/exact.hh>

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace roommates
{
    ROOMMATES_ERROR(PerturbationBoundViolated);

    class TieDetected : public Error
    {
        public:
            Person person, y, z;

            TieDetected(Person p, Person a, Person b, const std::string & names) :
                Error("TieDetected: person " + names), person(p), y(a), z(b) { }
    };

    /* A point (r cos 2 pi a, r sin 2 pi a); occupies two coordinates. */
    struct CirclePoint
    {
        mpq_class turns;
        RPoly radius = RPoly(1);
    };

    using Component = std::variant<RPoly, CirclePoint>;

    enum class Model
    {
        Attribute,
        Euclidean
    };

    struct GeoPerson
    {
        std::string name;
        std::vector<Component> position, preference;
    };

    /* One type for both models; the model field says how lists are derived.
     * AttributeInstance / EuclideanInstance are just this with the tag set. */
    struct GeometricInstance
    {
        Model model = Model::Attribute;
        int k = 0;
        std::vector<GeoPerson> people;

        auto size() const -> int { return int(people.size()); }
        auto index_of(const std::string & name) const -> int;
    };

    using AttributeInstance = GeometricInstance;
    using EuclideanInstance = GeometricInstance;

    auto scalar(const mpq_class & q) -> Component;
    auto scalar(const ExactReal & x) -> Component;
    auto circle(const mpq_class & turns, const RPoly & radius = RPoly(1)) -> Component;

    /* Flattens components to k coordinates. */
    auto expand(const std::vector<Component> & v) -> std::vector<RPoly>;
    auto dimension(const std::vector<Component> & v) -> int;

    auto dot(const std::vector<RPoly> & a, const std::vector<RPoly> & b) -> RPoly;
    auto squared_distance(const std::vector<RPoly> & a, const std::vector<RPoly> & b) -> RPoly;

    struct ComparisonStats
    {
        std::array<long, 3> by_certificate{ };

        auto count(Certificate c) const -> long { return by_certificate[int(c)]; }
        auto total() const -> long { return by_certificate[0] + by_certificate[1] + by_certificate[2]; }
    };

    /* Scores for person x: dot products (attribute) or squared distances
     * (euclidean, optionally at a concrete R). */
    auto scores(const GeometricInstance & gi, Person x, const std::optional<mpq_class> & concrete_r = std::nullopt)
        -> std::vector<RPoly>;

    /* Throws TieDetected, UndecidedComparison. */
    auto attribute_prefs(const AttributeInstance & ai, ComparisonStats * stats = nullptr) -> Instance;
    auto euclidean_prefs(const EuclideanInstance & ei, ComparisonStats * stats = nullptr,
            const std::optional<mpq_class> & concrete_r = std::nullopt) -> Instance;
    auto derive_prefs(const GeometricInstance & gi, ComparisonStats * stats = nullptr) -> Instance;

    /* ByIndex breaks exact ties by person index instead of throwing. */
    enum class Ties
    {
        Reject,
        ByIndex
    };

    auto derive_prefs(const GeometricInstance & gi, Ties ties) -> Instance;

    /* The first length entries of x's list, certified strict: each is strictly
     * preferred to the next and the last to everyone after it. Ties further
     * down are allowed. Throws TieDetected. */
    auto strict_prefix(const GeometricInstance & gi, Person x, int length) -> std::vector<Person>;

    struct PerturbationPlan
    {
        /* People whose positions move, in order j = 1, 2, ...; they get
         * delta_j = j delta_0 along direction (1, lambda) in coordinates dims. */
        std::vector<Person> people;
        std::array<int, 2> dims{ 0, 1 };
    };

    struct PerturbationResult
    {
        GeometricInstance instance;
        mpq_class delta0 = 0, lambda = 1, gap = 0;
        bool changed = false;
    };

    /* Throws PerturbationBoundViolated. */
    auto perturb_for_strictness(const AttributeInstance & ai, const PerturbationPlan & plan) -> PerturbationResult;
}

#endif
