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


#include <roommates/reductions.hh>

#include <algorithm>
#include <map>
#include <sstream>

namespace roommates
{
    namespace
    {
        auto tokens_of(const std::string & line) -> std::vector<std::string>
        {
            std::istringstream in(line);
            std::vector<std::string> t;
            for (std::string s ; in >> s ; )
                t.push_back(s);
            return t;
        }

        auto to_int(const std::string & s, int line) -> long
        {
            try {
                std::size_t used = 0;
                long v = std::stol(s, &used);
                if (used != s.size())
                    throw MalformedFile("line " + std::to_string(line) + ": bad integer '" + s + "'");
                return v;
            }
            catch (const std::logic_error &) {
                throw MalformedFile("line " + std::to_string(line) + ": bad integer '" + s + "'");
            }
        }

        struct RawGraph
        {
            bool bipartite = false;
            long n1 = 0, n2 = 0, m = 0;
            std::vector<std::pair<long, long>> edges;
        };

        auto parse_raw(const std::string & text) -> RawGraph
        {
            RawGraph g;
            bool have_header = false;
            std::istringstream in(text);
            std::string line;
            for (int lineno = 1 ; std::getline(in, line) ; ++lineno) {
                auto t = tokens_of(line);
                if (t.empty() || t[0] == "c")
                    continue;
                if (t[0] == "p") {
                    if (have_header)
                        throw MalformedFile("line " + std::to_string(lineno) + ": second header");
                    have_header = true;
                    if (t.size() == 5 && t[1] == "bip") {
                        g.bipartite = true;
                        g.n1 = to_int(t[2], lineno);
                        g.n2 = to_int(t[3], lineno);
                        g.m = to_int(t[4], lineno);
                    }
                    else if (t.size() == 4 && t[1] == "edge") {
                        g.n1 = to_int(t[2], lineno);
                        g.m = to_int(t[3], lineno);
                    }
                    else if (t.size() == 3) {
                        g.n1 = to_int(t[1], lineno);
                        g.m = to_int(t[2], lineno);
                    }
                    else
                        throw MalformedFile("line " + std::to_string(lineno) + ": bad header");
                    if (g.n1 < 0 || g.n2 < 0 || g.m < 0)
                        throw MalformedFile("line " + std::to_string(lineno) + ": negative size");
                }
                else if (t[0] == "e") {
                    if (! have_header)
                        throw MalformedFile("line " + std::to_string(lineno) + ": edge before header");
                    if (t.size() != 3)
                        throw MalformedFile("line " + std::to_string(lineno) + ": edge needs two endpoints");
                    g.edges.emplace_back(to_int(t[1], lineno), to_int(t[2], lineno));
                }
                else
                    throw MalformedFile("line " + std::to_string(lineno) + ": unknown line type '" + t[0] + "'");
            }
            if (! have_header)
                throw MalformedFile("missing 'p' header");
            if (long(g.edges.size()) != g.m)
                throw MalformedFile("header says " + std::to_string(g.m) + " edges, file has " + std::to_string(g.edges.size()));
            return g;
        }
    }

    auto is_bipartite_graph_file(const std::string & text) -> bool
    {
        return parse_raw(text).bipartite;
    }

    auto parse_graph(const std::string & text) -> InputGraph
    {
        auto raw = parse_raw(text);
        if (raw.bipartite)
            throw MalformedFile("expected a general graph, got a bipartite header");
        InputGraph g;
        g.n_vertices = int(raw.n1);
        for (auto [u, v] : raw.edges) {
            if (u < 1 || v < 1 || u > raw.n1 || v > raw.n1)
                throw MalformedFile("edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
            if (u == v)
                throw MalformedFile("self-loop at " + std::to_string(u));
            if (! g.edges.emplace(int(std::min(u, v)) - 1, int(std::max(u, v)) - 1).second)
                throw MalformedFile("repeated edge " + std::to_string(u) + " " + std::to_string(v));
        }
        return g;
    }

    auto serialize_graph(const InputGraph & g) -> std::string
    {
        std::ostringstream out;
        out << "p " << g.n_vertices << " " << g.edges.size() << "\n";
        for (auto [u, v] : g.edges)
            out << "e " << u + 1 << " " << v + 1 << "\n";
        return out.str();
    }

    auto parse_bipartite_graph(const std::string & text) -> BipartiteGraph
    {
        auto raw = parse_raw(text);
        if (! raw.bipartite)
            throw MalformedFile("expected a 'p bip' header");
        BipartiteGraph g;
        g.n_left = int(raw.n1);
        g.n_right = int(raw.n2);
        for (auto [i, j] : raw.edges) {
            if (i < 1 || j < 1 || i > raw.n1 || j > raw.n2)
                throw MalformedFile("edge " + std::to_string(i) + " " + std::to_string(j) + " out of range");
            if (! g.edges.emplace(int(i) - 1, int(j) - 1).second)
                throw MalformedFile("repeated edge " + std::to_string(i) + " " + std::to_string(j));
        }
        return g;
    }

    namespace
    {
        constexpr int max_is_vertices = 24;

        auto count_independent(int n, const std::vector<std::uint32_t> & adj) -> mpz_class
        {
            if (n > max_is_vertices)
                throw InstanceTooLarge(std::to_string(n) + " vertices; independent sets are brute-forced up to "
                        + std::to_string(max_is_vertices));
            /* Recursion on the lowest undecided vertex: skip it, or take it and drop its neighbours. */
            std::function<long (std::uint32_t)> go = [&] (std::uint32_t free) -> long {
                if (free == 0)
                    return 1;
                int v = __builtin_ctz(free);
                std::uint32_t rest = free & ~(std::uint32_t(1) << v);
                return go(rest) + go(rest & ~adj[v]);
            };
            std::uint32_t all = n == 32 ? ~0u : ((std::uint32_t(1) << n) - 1);
            return mpz_class(go(all));
        }
    }

    auto independent_set_count(const InputGraph & g) -> mpz_class
    {
        std::vector<std::uint32_t> adj(std::max(g.n_vertices, 0));
        if (g.n_vertices > max_is_vertices)
            return count_independent(g.n_vertices, adj);
        for (auto [u, v] : g.edges) {
            adj[u] |= std::uint32_t(1) << v;
            adj[v] |= std::uint32_t(1) << u;
        }
        return count_independent(g.n_vertices, adj);
    }

    auto independent_set_count(const BipartiteGraph & g) -> mpz_class
    {
        int n = g.n_left + g.n_right;
        std::vector<std::uint32_t> adj(n);
        if (n > max_is_vertices)
            return count_independent(n, adj);
        for (auto [i, j] : g.edges) {
            adj[i] |= std::uint32_t(1) << (g.n_left + j);
            adj[g.n_left + j] |= std::uint32_t(1) << i;
        }
        return count_independent(n, adj);
    }

    auto double_cover(const InputGraph & g) -> DoubleCover
    {
        DoubleCover k;
        k.n = g.n_vertices;
        for (auto [u, v] : g.edges) {
            k.edges.emplace(u, v);
            k.edges.emplace(v, u);
        }
        return k;
    }

    namespace
    {
        auto check_cover(const DoubleCover & k) -> void
        {
            for (auto [i, j] : k.edges) {
                if (i < 0 || j < 0 || i >= k.n || j >= k.n)
                    throw MalformedCover("edge (b" + std::to_string(i + 1) + ", t" + std::to_string(j + 1) + ") out of range");
                if (i == j)
                    throw MalformedCover("(K1) violated: edge (b" + std::to_string(i + 1) + ", t" + std::to_string(i + 1) + ")");
                if (! k.edges.count({ j, i }))
                    throw MalformedCover("(K2) violated: (b" + std::to_string(i + 1) + ", t" + std::to_string(j + 1)
                            + ") present but (b" + std::to_string(j + 1) + ", t" + std::to_string(i + 1) + ") missing");
            }
        }
    }

    auto reconstruct_graph(const DoubleCover & k) -> InputGraph
    {
        check_cover(k);
        InputGraph g;
        g.n_vertices = k.n;
        for (auto [i, j] : k.edges)
            if (i < j)
                g.edges.emplace(i, j);
        return g;
    }

    auto CycleStructure::rho_position(int label) const -> std::pair<int, int>
    {
        for (int c = 0 ; c < int(rho_cycles.size()) ; ++c) {
            auto & cyc = rho_cycles[c];
            auto it = std::find(cyc.begin(), cyc.end(), label);
            if (it != cyc.end())
                return { c, int(it - cyc.begin()) };
        }
        throw Error("label " + std::to_string(label) + " is in no rho-cycle");
    }

    auto CycleStructure::rho(int label) const -> int
    {
        auto [c, k] = rho_position(label);
        auto & cyc = rho_cycles[c];
        return cyc[(k + 1) % cyc.size()];
    }

    auto CycleStructure::rho_inverse(int label) const -> int
    {
        auto [c, k] = rho_position(label);
        auto & cyc = rho_cycles[c];
        return cyc[(k + cyc.size() - 1) % cyc.size()];
    }

    auto cycle_structure(const DoubleCover & k) -> CycleStructure
    {
        check_cover(k);
        CycleStructure cs;
        cs.n = k.n;
        cs.m = int(k.edges.size());
        cs.rho_cycles.assign(k.n, { });
        cs.sigma_cycles.assign(k.n, { });

        /* The set iterates (b_i, t_j) lexicographically. */
        int e = 0;
        for (auto [i, j] : k.edges) {
            ++e;
            for (int label : { 2 * e - 1, 2 * e }) {
                cs.rho_cycles[i].push_back(label);
                cs.sigma_cycles[j].push_back(label);
            }
        }

        cs.psi.assign(cs.labels() + 1, 0);
        for (int c = 0 ; c < k.n ; ++c) {
            if (cs.rho_cycles[c].size() != cs.sigma_cycles[c].size())
                throw MalformedCover("rho-cycle " + std::to_string(c + 1) + " and sigma-cycle differ in length");
            for (std::size_t p = 0 ; p < cs.rho_cycles[c].size() ; ++p)
                cs.psi[cs.rho_cycles[c][p]] = cs.sigma_cycles[c][p];
        }
        for (int l = 1 ; l <= cs.labels() ; ++l)
            if (cs.psi[cs.psi[l]] != l)
                throw MalformedCover("psi is not an involution at " + std::to_string(l));

        for (auto & cyc : cs.rho_cycles)
            if (! cyc.empty()) {
                cs.rep_rho.push_back(cyc.front());
                cs.rep_sigma.push_back(cs.psi[cyc.front()]);
            }
        return cs;
    }

    auto p_person(const CycleStructure &, int label) -> Person
    {
        return label - 1;
    }

    auto q_person(const CycleStructure & cs, int label) -> Person
    {
        return cs.labels() + label - 1;
    }

    namespace
    {
        auto require_buildable(const CycleStructure & cs) -> void
        {
            if (cs.m == 0)
                throw EmptyConstruction("the graph has no edges, so there is nobody to build");
            for (int c = 0 ; c < cs.n ; ++c)
                if (cs.rho_cycles[c].empty())
                    throw EmptyConstruction("vertex " + std::to_string(c + 1)
                            + " is isolated; every vertex needs an edge to carry a rotation");
        }

        /* Angles of one cycle in turns; shared by the attribute and euclidean builders. */
        struct Angles
        {
            std::vector<mpq_class> p_first, p_last, q_last, q_hat, p_hat;
        };

        auto angles(const CycleStructure & cs) -> Angles
        {
            int L = cs.labels();
            Angles a;
            for (auto v : { &a.p_first, &a.p_last, &a.q_last, &a.q_hat, &a.p_hat })
                v->assign(L + 1, 0);
            mpq_class eps = rational(1, 4 * cs.m * cs.m);
            mpq_class thp = eps / 4;
            for (int i = 0 ; i < cs.n ; ++i) {
                auto & cyc = cs.rho_cycles[i];
                int d = int(cyc.size());
                mpq_class base = rational(i, cs.n);
                mpq_class th = eps / (7 * (d - 1));
                mpq_class s = 0, step = thp;
                for (int k = 0 ; k < d ; ++k) {
                    int l = cyc[k], next = cyc[(k + 1) % d];
                    a.p_first[l] = base + 7 * k * th;
                    a.q_hat[l] = base + 7 * k * th + 3 * th;
                    a.q_last[l] = base + s;
                    a.p_last[cs.psi[next]] = base + s + step;
                    a.p_hat[next] = base + s + step / 3;
                    /* s = 2 thp (1 + 1/2 + ... + 2^-(k-1)), step = 2^-k thp */
                    s += 2 * step;
                    step /= 2;
                }
            }
            return a;
        }

        auto zero() -> Component
        {
            return scalar(mpq_class(0));
        }

        auto name_people(GeometricInstance & gi, const CycleStructure & cs) -> void
        {
            gi.people.resize(2 * cs.labels());
            for (int l = 1 ; l <= cs.labels() ; ++l) {
                gi.people[p_person(cs, l)].name = "P" + std::to_string(l);
                gi.people[q_person(cs, l)].name = "Q" + std::to_string(l);
            }
        }
    }

    auto build_4attr_unperturbed(const CycleStructure & cs) -> AttributeInstance
    {
        require_buildable(cs);
        auto a = angles(cs);
        AttributeInstance ai;
        ai.model = Model::Attribute;
        ai.k = 4;
        name_people(ai, cs);
        for (int l = 1 ; l <= cs.labels() ; ++l) {
            auto & p = ai.people[p_person(cs, l)];
            p.position = { circle(a.p_first[l]), circle(a.p_last[l]) };
            p.preference = { zero(), zero(), circle(a.p_hat[l]) };
            auto & q = ai.people[q_person(cs, l)];
            q.position = { zero(), zero(), circle(a.q_last[l]) };
            q.preference = { circle(a.q_hat[l]), zero(), zero() };
        }
        return ai;
    }

    auto build_4attr(const CycleStructure & cs, PerturbationResult * info) -> AttributeInstance
    {
        auto ai = build_4attr_unperturbed(cs);
        /* The Q's tie among each other on every Q list. The P's can tie in
         * far tails of Q lists too (two P angles symmetric about a Q
         * preference), so they move as well; P positions in the first two
         * coordinates only ever meet Q preferences. */
        PerturbationPlan plan;
        for (int l = 1 ; l <= cs.labels() ; ++l)
            plan.people.push_back(q_person(cs, l));
        for (int l = 1 ; l <= cs.labels() ; ++l)
            plan.people.push_back(p_person(cs, l));
        plan.dims = { 0, 1 };
        auto result = perturb_for_strictness(ai, plan);
        if (info)
            *info = result;
        return result.instance;
    }

    auto build_3euclid(const CycleStructure & cs) -> EuclideanInstance
    {
        require_buildable(cs);
        auto a = angles(cs);
        RPoly R = RPoly::linear(ExactReal(1), ExactReal(0));
        mpq_class eps = rational(1, 4 * cs.m * cs.m);

        /* z of every P position and Q preference. */
        std::vector<mpq_class> z_p(cs.labels() + 1), z_qhat(cs.labels() + 1);
        for (int i = 0 ; i < cs.n ; ++i) {
            auto & cyc = cs.rho_cycles[i];
            int d = int(cyc.size());
            mpq_class th = eps / (7 * (d - 1));
            for (int k = 0 ; k < d ; ++k) {
                z_p[cyc[k]] = rational(i, cs.n) + 7 * k * th;
                z_qhat[cyc[k]] = z_p[cyc[k]] + 3 * th;
            }
        }

        /* Two P's at equal z-distance from a Q preference tie on that Q's list.
         * Moving P_l up by l eta breaks every such tie (the nearer-below one
         * gains, the one above loses) and, with 4m eta below half the smallest
         * nonzero gap between distances, keeps every strict comparison. */
        mpq_class gap = 1;
        for (int l = 1 ; l <= cs.labels() ; ++l) {
            std::vector<mpq_class> dist;
            for (int x = 1 ; x <= cs.labels() ; ++x)
                dist.push_back(abs(z_qhat[l] - z_p[x]));
            std::sort(dist.begin(), dist.end());
            for (std::size_t i = 0 ; i + 1 < dist.size() ; ++i)
                if (dist[i + 1] != dist[i])
                    gap = std::min<mpq_class>(gap, dist[i + 1] - dist[i]);
        }
        mpq_class eta = 1;
        while (eta * 8 * cs.m > gap)
            eta /= 2;
        for (int l = 1 ; l <= cs.labels() ; ++l)
            z_p[l] += l * eta;

        EuclideanInstance ei;
        ei.model = Model::Euclidean;
        ei.k = 3;
        name_people(ei, cs);
        for (int l = 1 ; l <= cs.labels() ; ++l) {
            auto & p = ei.people[p_person(cs, l)];
            p.position = { circle(a.p_last[l], R), scalar(z_p[l]) };
            p.preference = { circle(a.p_hat[l], R), zero() };
            auto & q = ei.people[q_person(cs, l)];
            /* Below -1 on the z-axis, so every P comes before every Q on a Q's
             * list. At 0 the Q's would sit 3 theta from the first cycle's Q
             * preferences, ahead of their second P, and tie with each other. */
            q.position = { circle(a.q_last[l], R), scalar(-1 - rational(l, 4 * cs.m)) };
            q.preference = { zero(), zero(), scalar(z_qhat[l]) };
        }
        return ei;
    }

    auto concrete_r_stabilization(const EuclideanInstance & ei, int max_doublings, Instance * limit_out)
        -> std::optional<mpq_class>
    {
        auto limit = euclidean_prefs(ei);
        if (limit_out)
            *limit_out = limit;
        auto at = [&] (const mpq_class & r) -> std::optional<Instance> {
            try {
                return euclidean_prefs(ei, nullptr, r);
            }
            catch (const TieDetected &) {
                return std::nullopt;
            }
        };
        mpq_class r = 2;
        for (int i = 0 ; i < max_doublings ; ++i, r *= 2) {
            auto inst = at(r);
            if (inst && *inst == limit) {
                auto again = at(2 * r);
                if (again && *again == limit)
                    return r;
            }
        }
        return std::nullopt;
    }

    auto expected_short_lists(const CycleStructure & cs) -> std::vector<std::vector<Person>>
    {
        std::vector<std::vector<Person>> rows(2 * cs.labels());
        for (auto & cyc : cs.rho_cycles) {
            int d = int(cyc.size());
            for (int j = 0 ; j < d ; ++j) {
                int l = cyc[j], next = cyc[(j + 1) % d], prev = cyc[(j + d - 1) % d];
                rows[q_person(cs, l)] = { p_person(cs, l), p_person(cs, next) };
                rows[p_person(cs, l)] = { q_person(cs, prev), p_person(cs, cs.psi[l]), q_person(cs, l) };
            }
        }
        return rows;
    }

    auto expected_prefixes(const CycleStructure & cs) -> std::vector<std::vector<Person>>
    {
        std::vector<std::vector<Person>> rows(2 * cs.labels());
        for (auto & cyc : cs.rho_cycles) {
            int d = int(cyc.size());
            for (int j = 0 ; j < d ; ++j) {
                int l = cyc[j];
                auto & q = rows[q_person(cs, l)];
                auto & p = rows[p_person(cs, l)];
                if (j < d - 1)
                    q = { p_person(cs, l), p_person(cs, cyc[j + 1]) };
                else
                    for (int t = d - 1 ; t >= 0 ; --t)
                        q.push_back(p_person(cs, cyc[t]));
                if (j > 0)
                    p = { q_person(cs, cyc[j - 1]), p_person(cs, cs.psi[l]), q_person(cs, l) };
                else {
                    p = { q_person(cs, cyc[d - 1]), p_person(cs, cs.psi[l]) };
                    for (int t = d - 1 ; t >= 1 ; --t) {
                        p.push_back(p_person(cs, cs.psi[cyc[t]]));
                        p.push_back(q_person(cs, cyc[t - 1]));
                    }
                }
            }
        }
        return rows;
    }

    auto expected_rotation(const CycleStructure & cs, int j) -> Rotation
    {
        auto & cyc = cs.rho_cycles.at(j);
        int d = int(cyc.size());
        std::vector<Triple> t;
        for (int k = 0 ; k < d ; ++k)
            t.push_back({ q_person(cs, cyc[k]), p_person(cs, cyc[k]), p_person(cs, cyc[(k + 1) % d]) });
        return Rotation(std::move(t));
    }

    auto expected_dual_rotation(const CycleStructure & cs, int j) -> Rotation
    {
        auto & cyc = cs.rho_cycles.at(j);
        int d = int(cyc.size());
        std::vector<Triple> t;
        for (int k = 0 ; k < d ; ++k)
            t.push_back({ p_person(cs, cyc[k]), q_person(cs, cyc[(k + d - 1) % d]), q_person(cs, cyc[k]) });
        return Rotation(std::move(t));
    }

    auto route_name(Route r) -> std::string
    {
        return r == Route::Attr4 ? "attr4" : "euclid3";
    }

    auto build_route(const CycleStructure & cs, Route route) -> GeometricInstance
    {
        return route == Route::Attr4 ? build_4attr(cs) : build_3euclid(cs);
    }

    auto VerificationReport::passed() const -> bool
    {
        return ! clauses.empty() && std::all_of(clauses.begin(), clauses.end(), [] (auto & c) { return c.ok; });
    }

    namespace
    {
        auto rows_to_string(const std::vector<Person> & row) -> std::string
        {
            std::string s;
            for (Person p : row)
                s += (s.empty() ? "" : " ") + std::to_string(p + 1);
            return s;
        }
    }

    auto check_reduction(const InputGraph & g, Route route, const ExplorationOptions & options) -> VerificationReport
    {
        VerificationReport rep;
        rep.route = route;
        auto cs = cycle_structure(double_cover(g));
        auto geo = build_route(cs, route);
        rep.instance = derive_prefs(geo);
        rep.people = rep.instance.size();
        rep.independent_sets = independent_set_count(g);

        auto add = [&] (std::string clause, bool ok, std::string detail = { }) {
            rep.clauses.push_back({ std::move(clause), ok, std::move(detail) });
        };

        auto poset = discover_rotations(rep.instance, options);
        if (! poset) {
            add("solvable", false, "the constructed instance has no stable matching");
            return rep;
        }
        rep.rotations = poset->size();
        rep.tables_visited = poset->tables_visited;

        /* Phase-1 short lists. */
        {
            auto expected = expected_short_lists(cs);
            std::string detail;
            for (Person p = 0 ; p < rep.people && detail.empty() ; ++p)
                if (poset->phase1_table->list(p) != expected[p])
                    detail = geo.people[p].name + ": got " + rows_to_string(poset->phase1_table->list(p))
                        + ", expected " + rows_to_string(expected[p]);
            add("phase1", detail.empty(), detail);
        }

        /* (a) Rotation content: R_j, its dual, and nothing else. */
        std::vector<int> b_idx(cs.n, -1), t_idx(cs.n, -1);
        {
            std::string detail;
            for (int j = 0 ; j < cs.n ; ++j) {
                b_idx[j] = poset->index_of(expected_rotation(cs, j));
                t_idx[j] = poset->index_of(expected_dual_rotation(cs, j));
                if (detail.empty() && b_idx[j] < 0)
                    detail = "missing " + expected_rotation(cs, j).to_string();
                if (detail.empty() && t_idx[j] < 0)
                    detail = "missing " + expected_dual_rotation(cs, j).to_string();
            }
            if (detail.empty() && poset->size() != 2 * cs.n)
                detail = std::to_string(poset->size()) + " rotations, expected " + std::to_string(2 * cs.n);
            if (detail.empty() && poset->num_singletons() != 0)
                detail = "unexpected singleton rotations";
            add("rotations", detail.empty(), detail);
            if (! detail.empty())
                return rep;
        }

        /* (G1) b_j is dual to t_j. */
        {
            std::string detail;
            for (int j = 0 ; j < cs.n && detail.empty() ; ++j)
                if (poset->dual[b_idx[j]] != t_idx[j])
                    detail = "b" + std::to_string(j + 1) + " and t" + std::to_string(j + 1) + " are not dual";
            add("G1", detail.empty(), detail);
        }

        auto pi = [&] (int a, int b) { return poset->pi(a, b); };
        auto pair_name = [] (char x, int i, char y, int j) {
            return std::string("(") + x + std::to_string(i + 1) + ", " + y + std::to_string(j + 1) + ")";
        };
        /* (G2) the pairs (b_i, t_j) in Pi are exactly E(K). */
        {
            std::set<std::pair<int, int>> got;
            for (int i = 0 ; i < cs.n ; ++i)
                for (int j = 0 ; j < cs.n ; ++j)
                    if (pi(b_idx[i], t_idx[j]))
                        got.emplace(i, j);
            auto k = double_cover(g);
            std::string detail;
            for (auto e : got)
                if (detail.empty() && ! k.edges.count(e))
                    detail = pair_name('b', e.first, 't', e.second) + " in Pi but not in K";
            for (auto e : k.edges)
                if (detail.empty() && ! got.count(e))
                    detail = pair_name('b', e.first, 't', e.second) + " in K but not in Pi";
            add("G2", detail.empty(), detail);
        }
        /* (G3) no (t_i, b_j). */
        {
            std::string detail;
            for (int i = 0 ; i < cs.n ; ++i)
                for (int j = 0 ; j < cs.n ; ++j)
                    if (detail.empty() && pi(t_idx[i], b_idx[j]))
                        detail = pair_name('t', i, 'b', j) + " in Pi";
            add("G3", detail.empty(), detail);
        }
        /* (G4) (t_i, t_j) only for i = j. */
        {
            std::string detail;
            for (int i = 0 ; i < cs.n ; ++i)
                for (int j = 0 ; j < cs.n ; ++j)
                    if (detail.empty() && pi(t_idx[i], t_idx[j]) != (i == j))
                        detail = pair_name('t', i, 't', j) + (i == j ? " missing from Pi" : " in Pi");
            add("G4", detail.empty(), detail);
        }

        /* (c) G(I) is the split graph: R_v - R_v^d, and R_v^d - R_w^d for vw in E. */
        {
            auto gi = rotation_graph(*poset);
            std::set<std::pair<int, int>> expected;
            auto edge = [] (int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            for (int v = 0 ; v < cs.n ; ++v)
                expected.insert(edge(b_idx[v], t_idx[v]));
            for (auto [v, w] : g.edges)
                expected.insert(edge(t_idx[v], t_idx[w]));
            std::string detail;
            if (gi.edges != expected)
                detail = "G(I) has " + std::to_string(gi.edges.size()) + " edges, the split graph "
                    + std::to_string(expected.size());
            add("graph", detail.empty(), detail);
        }

        /* (d) stable count = #IS. */
        {
            rep.stable_count = count_via_downsets(*poset).value;
            bool ok = rep.stable_count == rep.independent_sets;
            add("count", ok, ok ? std::string() : "stable count " + rep.stable_count.get_str()
                    + " != independent sets " + rep.independent_sets.get_str());
        }
        return rep;
    }

    auto verify_reduction(const InputGraph & g, Route route, const ExplorationOptions & options) -> VerificationReport
    {
        auto rep = check_reduction(g, route, options);
        for (auto & c : rep.clauses)
            if (! c.ok)
                throw VerificationFailed(c.clause + ": " + c.detail);
        return rep;
    }

    namespace
    {
        auto cycles_of(const std::vector<int> & perm) -> std::vector<std::vector<int>>
        {
            int n = int(perm.size());
            std::vector<char> seen(n + 1, 0);
            std::vector<std::vector<int>> result;
            for (int x = 1 ; x <= n ; ++x) {
                if (seen[x])
                    continue;
                result.emplace_back();
                for (int y = x ; ! seen[y] ; y = perm[y - 1]) {
                    seen[y] = 1;
                    result.back().push_back(y);
                }
            }
            return result;
        }

        auto inverse_of(const std::vector<int> & perm, int x) -> int
        {
            auto it = std::find(perm.begin(), perm.end(), x);
            return int(it - perm.begin()) + 1;
        }

        auto check_permutation(const std::vector<int> & perm, int n, const char * name) -> void
        {
            if (int(perm.size()) != n)
                throw Error(std::string(name) + " has the wrong length");
            std::vector<char> seen(n + 1, 0);
            for (int x : perm) {
                if (x < 1 || x > n || seen[x])
                    throw Error(std::string(name) + " is not a permutation of 1.." + std::to_string(n));
                seen[x] = 1;
            }
        }
    }

    auto BisCycles::rho_cycles() const -> std::vector<std::vector<int>> { return cycles_of(rho); }
    auto BisCycles::sigma_cycles() const -> std::vector<std::vector<int>> { return cycles_of(sigma); }
    auto BisCycles::rho_inverse(int x) const -> int { return inverse_of(rho, x); }
    auto BisCycles::sigma_inverse(int x) const -> int { return inverse_of(sigma, x); }

    auto bis_cycles(std::vector<int> rho, std::vector<int> sigma) -> BisCycles
    {
        int n = int(rho.size());
        if (n < 1)
            throw EmptyConstruction("permutations of an empty set");
        check_permutation(rho, n, "rho");
        check_permutation(sigma, n, "sigma");
        return BisCycles{ n, std::move(rho), std::move(sigma) };
    }

    auto bis_cycles_lexicographic(const BipartiteGraph & g) -> BisCycles
    {
        int n = int(g.edges.size());
        if (n == 0)
            throw EmptyConstruction("the bipartite graph has no edges");
        std::map<int, std::vector<int>> left, right;
        int label = 0;
        for (auto [i, j] : g.edges) {
            ++label;
            left[i].push_back(label);
            right[j].push_back(label);
        }
        std::vector<int> rho(n), sigma(n);
        for (auto * groups : { &left, &right })
            for (auto & [v, labels] : *groups)
                for (std::size_t k = 0 ; k < labels.size() ; ++k)
                    (groups == &left ? rho : sigma)[labels[k] - 1] = labels[(k + 1) % labels.size()];
        return bis_cycles(std::move(rho), std::move(sigma));
    }

    auto bis_person(const BisCycles & bc, BisRole role, int index) -> Person
    {
        return int(role) * bc.n + index - 1;
    }

    auto bis_is_man(const BisCycles & bc, Person p) -> bool
    {
        return p < 3 * bc.n;
    }

    namespace
    {
        auto name_bis(GeometricInstance & gi, const BisCycles & bc) -> void
        {
            gi.people.resize(6 * bc.n);
            const char * tags[] = { "A", "B", "C", "a", "b", "c" };
            for (int r = 0 ; r < 6 ; ++r)
                for (int x = 1 ; x <= bc.n ; ++x)
                    gi.people[bis_person(bc, BisRole(r), x)].name = tags[r] + std::to_string(x);
        }

        auto require_complete(const GeometricInstance & gi) -> void
        {
            for (auto & p : gi.people)
                if (p.position.empty() || p.preference.empty())
                    throw InternalInconsistency(p.name + " was not assigned by the construction");
        }

        auto power(long base, int e) -> mpq_class
        {
            mpz_class r;
            mpz_ui_pow_ui(r.get_mpz_t(), base, e);
            return mpq_class(r);
        }
    }

    auto build_bis_3attr(const BisCycles & bc) -> AttributeInstance
    {
        using R = BisRole;
        int n = bc.n;
        AttributeInstance ai;
        ai.model = Model::Attribute;
        ai.k = 3;
        name_bis(ai, bc);
        auto at = [&] (R r, int x) -> GeoPerson & { return ai.people[bis_person(bc, r, x)]; };

        /* Angles in turns: zeta = 1/16 (pi/8), phi = 1/100 (2 pi/100). */
        const mpq_class zeta = rational(1, 16), phi = rational(1, 100), half = rational(1, 2);
        const mpq_class eps = zeta / (n * n);
        const RPoly sin_phi(ExactReal::sin_turns(phi));
        const ExactReal cos_phi = ExactReal::cos_turns(phi);

        auto sigma = bc.sigma_cycles();
        int l = int(sigma.size());
        for (int i = 0 ; i < l ; ++i) {
            int p = int(sigma[i].size());
            mpq_class th = eps / (7 * p - 1);
            for (int m = 0 ; m < p ; ++m) {
                int x = sigma[i][m];
                mpq_class base = zeta * i / l + 7 * m * th;
                at(R::a, x).position = { circle(base + 4 * th), zero() };
                at(R::b, bc.rho_of(x)).position = { circle(base + 6 * th), scalar(power(4, bc.rho_of(x))) };
                at(R::c, bc.sigma_inverse(x)).position = { circle(base), zero() };
                at(R::A, x).preference = { circle(base + rational(14, 3) * th), zero() };
                at(R::B, x).preference = { circle(base + 4 * th, sin_phi), scalar(cos_phi) };
                at(R::C, bc.sigma_inverse(x)).preference = { circle(base + rational(8, 5) * th), zero() };
            }
        }

        auto rho = bc.rho_cycles();
        int k = int(rho.size());
        for (int i = 0 ; i < k ; ++i) {
            int q = int(rho[i].size());
            mpq_class w = eps / (7 * q - 1);
            for (int m = 0 ; m < q ; ++m) {
                int x = rho[i][m];
                mpq_class base = half + zeta * i / k + 7 * m * w;
                at(R::A, bc.rho_inverse(x)).position = { circle(base), zero() };
                at(R::B, x).position = { circle(base + 4 * w), zero() };
                at(R::C, x).position = { circle(base + 6 * w), scalar(mpq_class(-power(4, x))) };
                at(R::a, x).preference = { circle(base + 4 * w, sin_phi), scalar(-cos_phi) };
                at(R::b, x).preference = { circle(base + rational(8, 5) * w), zero() };
                at(R::c, x).preference = { circle(base + rational(14, 3) * w), zero() };
            }
        }
        require_complete(ai);
        return ai;
    }

    auto build_bis_2euclid(const BisCycles & bc) -> EuclideanInstance
    {
        using R = BisRole;
        int n = bc.n;
        EuclideanInstance ei;
        ei.model = Model::Euclidean;
        ei.k = 2;
        name_bis(ei, bc);
        auto at = [&] (R r, int x) -> GeoPerson & { return ei.people[bis_person(bc, r, x)]; };
        auto pt = [] (const mpq_class & x, const mpq_class & y) -> std::vector<Component> {
            return { scalar(x), scalar(y) };
        };

        const mpq_class eps = 1 / power(100, n), far = power(1000, n);
        const mpq_class three = rational(3, 10), six = rational(3, 5);

        mpq_class off = 0;
        for (auto & cyc : bc.sigma_cycles()) {
            int p = int(cyc.size());
            for (int h = 0 ; h < p ; ++h) {
                int x = cyc[h];
                mpq_class s = off + h;
                at(R::a, x).position = pt(s + 1, 0);
                at(R::b, bc.rho_of(x)).position = pt(0, s + 1);
                at(R::c, bc.sigma_inverse(x)).position = pt(s + three, 0);
                at(R::A, x).preference = pt(s + 1, s + 1 - eps);
                at(R::B, x).preference = pt(s + 1, far);
                at(R::C, bc.sigma_inverse(x)).preference = pt(s + six, 0);
            }
            off += 2 * p;
        }

        off = 0;
        for (auto & cyc : bc.rho_cycles()) {
            int q = int(cyc.size());
            for (int g = 0 ; g < q ; ++g) {
                int x = cyc[g];
                mpq_class s = off + g;
                at(R::A, bc.rho_inverse(x)).position = pt(-s - three, 0);
                at(R::B, x).position = pt(-s - 1, 0);
                /* The printed formula sums sigma-cycle lengths here; the rho sums
                 * used by every other men's coordinate are what the lists need. */
                at(R::C, x).position = pt(0, -s - 1);
                at(R::a, x).preference = pt(-s - 1, -far);
                at(R::b, x).preference = pt(-s - six, 0);
                at(R::c, x).preference = pt(-s - 1, -s - 1 + eps);
            }
            off += 2 * q;
        }
        require_complete(ei);
        return ei;
    }

    auto bis_initial_lists(const BisCycles & bc) -> std::vector<InitialList>
    {
        using R = BisRole;
        int n = bc.n;
        std::vector<InitialList> lists(6 * n);
        auto who = [&] (R r, int x) { return bis_person(bc, r, x); };
        auto pw = [] (auto next, int x, int k) { for (int i = 0 ; i < k ; ++i) x = next(x); return x; };
        auto rho = [&] (int x) { return bc.rho_of(x); };
        auto sigma = [&] (int x) { return bc.sigma_of(x); };

        for (auto & cyc : bc.rho_cycles()) {
            int q = int(cyc.size()), f = cyc[0];
            for (int m = 0 ; m < q ; ++m) {
                int x = cyc[m];
                lists[who(R::b, x)].tail = { who(R::A, bc.rho_inverse(x)), who(R::B, x) };
                lists[who(R::c, x)].tail = { who(R::B, x), who(R::C, x) };
                auto & a = lists[who(R::a, x)];
                for (int c = n ; c >= 1 ; --c)
                    a.head.push_back(who(R::C, c));
                if (m <= q - 2)
                    a.tail = { who(R::B, x), who(R::A, x) };
                else {
                    a.tail = { who(R::B, x) };
                    for (int t = q - 2 ; t >= 0 ; --t) {
                        a.tail.push_back(who(R::A, pw(rho, f, t)));
                        a.tail.push_back(who(R::B, pw(rho, f, t)));
                    }
                    a.tail.push_back(who(R::A, x));
                }
            }
        }

        for (auto & cyc : bc.sigma_cycles()) {
            int p = int(cyc.size()), e = cyc[0];
            for (int m = 0 ; m < p ; ++m) {
                int x = cyc[m];
                lists[who(R::A, x)].tail = { who(R::a, x), who(R::b, bc.rho_of(x)) };
                lists[who(R::C, bc.sigma_inverse(x))].tail = { who(R::c, bc.sigma_inverse(x)), who(R::a, x) };
                auto & b = lists[who(R::B, x)];
                for (int y = 1 ; y <= n ; ++y)
                    b.head.push_back(who(R::b, y));
                if (m <= p - 2)
                    b.tail = { who(R::a, x), who(R::c, x) };
                else {
                    b.tail = { who(R::a, x) };
                    for (int t = p - 2 ; t >= 0 ; --t) {
                        b.tail.push_back(who(R::c, pw(sigma, e, t)));
                        b.tail.push_back(who(R::a, pw(sigma, e, t)));
                    }
                    b.tail.push_back(who(R::c, x));
                }
            }
        }
        return lists;
    }

    auto check_bis_sign_lemma(const BisCycles & bc, const AttributeInstance & ai) -> std::string
    {
        int N = ai.size();
        for (Person x = 0 ; x < N ; ++x) {
            auto pref = expand(ai.people[x].preference);
            for (Person y = 0 ; y < N ; ++y) {
                auto s = certified_sign(dot(pref, expand(ai.people[y].position)));
                int want = bis_is_man(bc, x) == bis_is_man(bc, y) ? -1 : 1;
                if (s.sign != want)
                    return ai.people[x].name + " preference . " + ai.people[y].name + " position has sign "
                        + std::to_string(s.sign) + ", expected " + std::to_string(want);
            }
        }
        return { };
    }

    auto check_bis_observations(const BisCycles & bc, const EuclideanInstance & ei) -> std::string
    {
        int N = ei.size();
        auto initial = bis_initial_lists(bc);
        std::vector<RPoly> origin(ei.k, RPoly());
        for (Person x = 0 ; x < N ; ++x) {
            auto pref = expand(ei.people[x].preference);
            RPoly to_origin = squared_distance(pref, origin);
            std::vector<Person> mine = initial[x].head;
            mine.insert(mine.end(), initial[x].tail.begin(), initial[x].tail.end());
            for (Person y : mine)
                if (certified_sign(to_origin - squared_distance(pref, expand(ei.people[y].position))).sign <= 0)
                    return ei.people[x].name + " is not closer to " + ei.people[y].name + " than to the origin";
            for (Person y = 0 ; y < N ; ++y)
                if (bis_is_man(bc, x) == bis_is_man(bc, y)
                        && certified_sign(squared_distance(pref, expand(ei.people[y].position)) - to_origin).sign <= 0)
                    return ei.people[x].name + " is not closer to the origin than to " + ei.people[y].name;
        }
        return { };
    }

    auto check_bis_prefixes(const BisCycles & bc, const GeometricInstance & gi) -> std::string
    {
        auto initial = bis_initial_lists(bc);
        for (Person x = 0 ; x < gi.size() ; ++x) {
            auto & want = initial[x];
            std::size_t h = want.head.size();
            std::vector<Person> got;
            try {
                got = strict_prefix(gi, x, int(h + want.tail.size()));
            }
            catch (const TieDetected & e) {
                return e.what();
            }
            if (got.size() < h + want.tail.size())
                return gi.people[x].name + ": list too short";
            for (Person y : got)
                if (bis_is_man(bc, x) == bis_is_man(bc, y))
                    return gi.people[x].name + ": " + gi.people[y].name + " appears inside the initial list";
            std::vector<Person> got_head(got.begin(), got.begin() + h), want_head = want.head;
            std::sort(got_head.begin(), got_head.end());
            std::sort(want_head.begin(), want_head.end());
            if (got_head != want_head)
                return gi.people[x].name + ": the first " + std::to_string(h) + " entries are not the expected block";
            for (std::size_t i = 0 ; i < want.tail.size() ; ++i)
                if (got[h + i] != want.tail[i])
                    return gi.people[x].name + ": entry " + std::to_string(h + i + 1) + " is " + gi.people[got[h + i]].name
                        + ", expected " + gi.people[want.tail[i]].name;
        }
        return { };
    }
}
