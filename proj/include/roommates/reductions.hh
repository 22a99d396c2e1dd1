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


#ifndef ROOMMATES_REDUCTIONS_HH
#define ROOMMATES_REDUCTIONS_HH

#include <roommates/counting.hh>
#include <roommates/geometry.hh>

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace roommates
{
    ROOMMATES_ERROR(MalformedCover);
    ROOMMATES_ERROR(EmptyConstruction);
    ROOMMATES_ERROR(VerificationFailed);

    /* Simple undirected graph on vertices 0..n-1; edges stored with u < v. */
    struct InputGraph
    {
        int n_vertices = 0;
        std::set<std::pair<int, int>> edges;

        auto operator== (const InputGraph &) const -> bool = default;
    };

    /* Edges (i, j) are (left i, right j), 0-based. */
    struct BipartiteGraph
    {
        int n_left = 0, n_right = 0;
        std::set<std::pair<int, int>> edges;
    };

    /* "p n m" (or "p edge n m") header, "e u v" lines, "c" comments; 1-based. */
    auto parse_graph(const std::string & text) -> InputGraph;
    auto serialize_graph(const InputGraph & g) -> std::string;

    /* "p bip n1 n2 m" header, "e i j" meaning (b_i, t_j). */
    auto parse_bipartite_graph(const std::string & text) -> BipartiteGraph;
    auto is_bipartite_graph_file(const std::string & text) -> bool;

    auto independent_set_count(const InputGraph & g) -> mpz_class;
    auto independent_set_count(const BipartiteGraph & g) -> mpz_class;

    /* Edge (i, j) is (b_i, t_j), 0-based. */
    struct DoubleCover
    {
        int n = 0;
        std::set<std::pair<int, int>> edges;

        auto operator== (const DoubleCover &) const -> bool = default;
    };

    auto double_cover(const InputGraph & g) -> DoubleCover;

    /* Throws MalformedCover. */
    auto reconstruct_graph(const DoubleCover & k) -> InputGraph;

    /* Labels are 1-based as in the construction: the i-th edge of K in
     * lexicographic order carries labels 2i-1 and 2i. */
    struct CycleStructure
    {
        int n = 0, m = 0;
        std::vector<std::vector<int>> rho_cycles, sigma_cycles;

        /* psi[l] for l in 1..2m; psi[0] unused. */
        std::vector<int> psi;
        std::vector<int> rep_rho, rep_sigma;

        auto labels() const -> int { return 2 * m; }
        auto rho(int label) const -> int;
        auto rho_inverse(int label) const -> int;
        /* (cycle, position) of a label in its rho-cycle. */
        auto rho_position(int label) const -> std::pair<int, int>;
    };

    /* Throws MalformedCover if (K1) or (K2) fails. */
    auto cycle_structure(const DoubleCover & k) -> CycleStructure;

    /* People P_1..P_2m are 0..2m-1, Q_1..Q_2m are 2m..4m-1. */
    auto p_person(const CycleStructure & cs, int label) -> Person;
    auto q_person(const CycleStructure & cs, int label) -> Person;

    /* Unperturbed four-attribute vectors; Q's are tied among each other. */
    auto build_4attr_unperturbed(const CycleStructure & cs) -> AttributeInstance;

    /* The four-attribute instance with the Q and P positions moved to make every list strict. */
    auto build_4attr(const CycleStructure & cs, PerturbationResult * info = nullptr) -> AttributeInstance;

    /* Three-dimensional euclidean instance; R is the symbolic parameter. */
    auto build_3euclid(const CycleStructure & cs) -> EuclideanInstance;

    /* Lists of the euclidean instance at R = 2, 4, 8, ... until they equal the
     * symbolic-limit lists and stay equal for one more doubling. Returns the
     * first R that matched, or nullopt within max_doublings. */
    auto concrete_r_stabilization(const EuclideanInstance & ei, int max_doublings, Instance * limit = nullptr)
        -> std::optional<mpq_class>;

    /* Phase-1 short lists the construction must produce, 0-based rows. */
    auto expected_short_lists(const CycleStructure & cs) -> std::vector<std::vector<Person>>;

    /* Preference prefixes, with the noise entries included. */
    auto expected_prefixes(const CycleStructure & cs) -> std::vector<std::vector<Person>>;

    /* R_j (the Q rotation) and its dual for the j-th rho-cycle. */
    auto expected_rotation(const CycleStructure & cs, int j) -> Rotation;
    auto expected_dual_rotation(const CycleStructure & cs, int j) -> Rotation;

    enum class Route
    {
        Attr4,
        Euclid3
    };

    auto route_name(Route r) -> std::string;

    auto build_route(const CycleStructure & cs, Route route) -> GeometricInstance;

    struct ClauseResult
    {
        std::string clause;
        bool ok = false;
        std::string detail;
    };

    struct VerificationReport
    {
        Route route = Route::Attr4;
        int people = 0, rotations = 0;
        std::size_t tables_visited = 0;
        mpz_class stable_count, independent_sets;
        Instance instance;
        std::vector<ClauseResult> clauses;

        auto passed() const -> bool;
    };

    /* Builds, derives lists, discovers rotations and checks the rotation
     * content, (G1)-(G4), G(I) against the split graph of g, and the count.
     * Throws VerificationFailed naming the first violated clause; check_reduction
     * returns the report with every clause evaluated instead. */
    auto check_reduction(const InputGraph & g, Route route, const ExplorationOptions & options = { }) -> VerificationReport;
    auto verify_reduction(const InputGraph & g, Route route, const ExplorationOptions & options = { }) -> VerificationReport;

    /* Permutations rho, sigma of [n] (1-based values, rho[x - 1] = rho(x)). */
    struct BisCycles
    {
        int n = 0;
        std::vector<int> rho, sigma;

        /* Cycles listed from their smallest element, ordered by it. */
        auto rho_cycles() const -> std::vector<std::vector<int>>;
        auto sigma_cycles() const -> std::vector<std::vector<int>>;
        auto rho_of(int x) const -> int { return rho[x - 1]; }
        auto sigma_of(int x) const -> int { return sigma[x - 1]; }
        auto sigma_inverse(int x) const -> int;
        auto rho_inverse(int x) const -> int;
    };

    /* Throws Error unless rho and sigma are permutations of [n], n >= 1. */
    auto bis_cycles(std::vector<int> rho, std::vector<int> sigma) -> BisCycles;

    /* Edges labelled 1..n lexicographically by (left, right); rho cycles the
     * labels at each left vertex, sigma cycles the labels at each right vertex. */
    auto bis_cycles_lexicographic(const BipartiteGraph & g) -> BisCycles;

    /* Men A_1..A_n, B_1..B_n, C_1..C_n are 0..3n-1; women a, b, c are 3n..6n-1. */
    enum class BisRole { A, B, C, a, b, c };
    auto bis_person(const BisCycles & bc, BisRole role, int index) -> Person;
    auto bis_is_man(const BisCycles & bc, Person p) -> bool;

    auto build_bis_3attr(const BisCycles & bc) -> AttributeInstance;
    auto build_bis_2euclid(const BisCycles & bc) -> EuclideanInstance;

    /* The initial list of each person restricted to the other side: head is an
     * unordered block (the C's for a-women, the b's for B-men), tail is ordered. */
    struct InitialList
    {
        std::vector<Person> head, tail;
    };

    auto bis_initial_lists(const BisCycles & bc) -> std::vector<InitialList>;

    /* Empty strings mean the property holds; otherwise the first violation. */
    auto check_bis_sign_lemma(const BisCycles & bc, const AttributeInstance & ai) -> std::string;
    auto check_bis_observations(const BisCycles & bc, const EuclideanInstance & ei) -> std::string;
    /* Each person's list starts with their initial list: the head block in
     * any order, then the tail exactly, all strictly separated. */
    auto check_bis_prefixes(const BisCycles & bc, const GeometricInstance & gi) -> std::string;
}

#endif
