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

#include <roommates/cli.hh>
#include <roommates/counting.hh>
#include <roommates/geometry_json.hh>
#include <roommates/irving.hh>
#include <roommates/oneattr.hh>
#include <roommates/reductions.hh>
#include <roommates/rotations.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace roommates
{
    namespace
    {
        using json = nlohmann::ordered_json;

        struct Options
        {
            bool json = false;
            std::uint64_t seed = 0;

            std::string file, output, sr_output, kind, method = "downsets", dot, route = "attr4";
            bool float_coords = false, break_ties = false;
        };

        auto pairs_json(const Matching & m) -> json
        {
            json a = json::array();
            for (auto [x, y] : m.pairs())
                a.push_back({ x + 1, y + 1 });
            return a;
        }

        auto pairs_text(const Matching & m) -> std::string
        {
            std::string s;
            for (auto [x, y] : m.pairs())
                s += (s.empty() ? "" : " ") + std::to_string(x + 1) + "-" + std::to_string(y + 1);
            return s;
        }

        auto triples_json(const Rotation & r) -> json
        {
            json a = json::array();
            for (auto & t : r.triples())
                a.push_back({ t.e + 1, t.h + 1, t.s + 1 });
            return a;
        }

        auto write_file(const std::string & path, const std::string & text, std::ostream & out) -> void
        {
            if (path == "-") {
                out << text;
                return;
            }
            std::ofstream f(path, std::ios::binary);
            if (! f)
                throw Error("cannot write '" + path + "'");
            f << text;
            if (! f)
                throw Error("error writing '" + path + "'");
        }

        auto load_instance(const Options & o) -> Instance
        {
            return parse_instance(read_file(o.file));
        }

        auto exploration(const Options & o) -> ExplorationOptions
        {
            ExplorationOptions e;
            e.child_order_seed = o.seed;
            return e;
        }

        auto cmd_solve(const Options & o, std::ostream & out) -> int
        {
            auto inst = load_instance(o);
            auto m = solve(inst);
            if (o.json)
                out << json{ { "verb", "solve" }, { "stable", true }, { "matching", pairs_json(m) } }.dump(2) << '\n';
            else
                out << "stable assignment: " << pairs_text(m) << '\n';
            return exit_code::ok;
        }

        auto cmd_count(const Options & o, std::ostream & out, std::ostream & err) -> int
        {
            auto inst = load_instance(o);
            std::vector<CountMethod> methods;
            if (o.method == "downsets" || o.method == "all")
                methods.push_back(CountMethod::Downsets);
            if (o.method == "maxis" || o.method == "all")
                methods.push_back(CountMethod::MaximalIS);
            if (o.method == "brute" || o.method == "all")
                methods.push_back(CountMethod::BruteForce);

            std::optional<std::optional<RotationPoset>> poset;
            auto get_poset = [&] () -> const std::optional<RotationPoset> & {
                if (! poset)
                    poset = discover_rotations(inst, exploration(o));
                return *poset;
            };

            json results = json::array();
            std::vector<mpz_class> values;
            for (auto m : methods) {
                mpz_class v = 0;
                json entry = { { "count", "" }, { "method", method_name(m) } };
                if (m == CountMethod::BruteForce) {
                    v = count_brute_force(inst).value;
                    entry["rotations"] = entry["dual_pairs"] = entry["singletons"] = nullptr;
                }
                else {
                    auto & p = get_poset();
                    if (p)
                        v = m == CountMethod::Downsets ? count_via_downsets(*p).value
                            : count_via_maximal_is(rotation_graph(*p), *p).value;
                    entry["rotations"] = p ? p->size() : 0;
                    entry["dual_pairs"] = p ? p->num_dual_pairs() : 0;
                    entry["singletons"] = p ? p->num_singletons() : 0;
                }
                entry["count"] = v.get_str();
                values.push_back(v);
                results.push_back(entry);
            }
            bool agree = std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
            if (o.json)
                out << (methods.size() == 1 ? results[0] : json{ { "results", results }, { "agree", agree } }).dump(2) << '\n';
            else if (methods.size() == 1)
                out << values[0].get_str() << '\n';
            else
                for (auto & r : results)
                    out << r["method"].get<std::string>() << ' ' << r["count"].get<std::string>() << '\n';
            if (! agree) {
                err << "error: counting methods disagree\n";
                return exit_code::error;
            }
            return exit_code::ok;
        }

        auto cmd_rotations(const Options & o, std::ostream & out) -> int
        {
            auto inst = load_instance(o);
            auto poset = discover_rotations(inst, exploration(o));
            if (! poset)
                throw NoStableMatching("the instance has no stable assignment");
            auto & p = *poset;
            if (o.dot == "hasse") {
                out << hasse_dot(p);
                return exit_code::ok;
            }
            auto g = rotation_graph(p);
            if (o.dot == "gofi") {
                out << rotation_graph_dot(p, g);
                return exit_code::ok;
            }
            if (o.json) {
                json rots = json::array(), hasse = json::array(), edges = json::array();
                for (int i = 0 ; i < p.size() ; ++i)
                    rots.push_back({ { "name", p.names[i] }, { "triples", triples_json(p.rotations[i]) },
                            { "dual", p.is_singleton(i) ? json(nullptr) : json(p.names[p.dual[i]]) } });
                for (auto [a, b] : p.hasse_edges())
                    hasse.push_back({ p.names[a], p.names[b] });
                for (auto [a, b] : g.edges)
                    edges.push_back({ p.names[a], p.names[b] });
                out << json{ { "verb", "rotations" }, { "rotations", rots }, { "hasse", hasse },
                        { "graph_edges", edges }, { "tables_visited", p.tables_visited } }.dump(2) << '\n';
                return exit_code::ok;
            }
            for (int i = 0 ; i < p.size() ; ++i)
                out << p.names[i] << ": " << p.rotations[i].to_string()
                    << (p.is_singleton(i) ? "  singleton" : "  dual " + p.names[p.dual[i]]) << '\n';
            for (auto [a, b] : p.hasse_edges())
                out << p.names[a] << " < " << p.names[b] << '\n';
            return exit_code::ok;
        }

        auto print_matchings(const Options & o, const std::string & verb, const std::vector<Matching> & ms, std::ostream & out) -> void
        {
            if (o.json) {
                json a = json::array();
                for (auto & m : ms)
                    a.push_back(pairs_json(m));
                out << json{ { "verb", verb }, { "count", std::to_string(ms.size()) }, { "matchings", a } }.dump(2) << '\n';
                return;
            }
            out << ms.size() << " stable assignment" << (ms.size() == 1 ? "" : "s") << '\n';
            for (auto & m : ms)
                out << pairs_text(m) << '\n';
        }

        auto cmd_enumerate(const Options & o, std::ostream & out) -> int
        {
            auto inst = load_instance(o);
            std::vector<Matching> ms;
            if (auto p = discover_rotations(inst, exploration(o)))
                ms = enumerate_stable_matchings(*p);
            std::sort(ms.begin(), ms.end());
            print_matchings(o, "enumerate", ms, out);
            return exit_code::ok;
        }

        auto cmd_oracle(const Options & o, std::ostream & out) -> int
        {
            auto ms = all_stable_matchings_brute_force(load_instance(o));
            std::sort(ms.begin(), ms.end());
            print_matchings(o, "oracle", ms, out);
            return exit_code::ok;
        }

        auto cmd_reduce(const Options & o, std::ostream & out) -> int
        {
            auto text = read_file(o.file);
            GeometricInstance gi;
            if (o.kind == "is4attr" || o.kind == "is3euclid") {
                auto cs = cycle_structure(double_cover(parse_graph(text)));
                gi = build_route(cs, o.kind == "is4attr" ? Route::Attr4 : Route::Euclid3);
            }
            else {
                auto bc = bis_cycles_lexicographic(parse_bipartite_graph(text));
                gi = o.kind == "bis3attr" ? build_bis_3attr(bc) : build_bis_2euclid(bc);
            }
            write_file(o.output, geometric_to_json(gi, o.float_coords), out);
            if (! o.sr_output.empty())
                write_file(o.sr_output, serialize_instance(derive_prefs(gi, o.break_ties ? Ties::ByIndex : Ties::Reject)), out);
            if (o.output != "-" && o.sr_output != "-") {
                if (o.json)
                    out << json{ { "verb", "reduce" }, { "construction", o.kind }, { "people", gi.size() },
                            { "dimension", gi.k }, { "output", o.output } }.dump(2) << '\n';
                else
                    out << o.kind << ": " << gi.size() << " people in dimension " << gi.k << " written to " << o.output << '\n';
            }
            return exit_code::ok;
        }

        auto cmd_prefs(const Options & o, std::ostream & out) -> int
        {
            auto gi = geometric_from_json(read_file(o.file), o.float_coords);
            auto inst = derive_prefs(gi, o.break_ties ? Ties::ByIndex : Ties::Reject);
            write_file(o.output, serialize_instance(inst), out);
            if (o.output != "-") {
                if (o.json)
                    out << json{ { "verb", "prefs" }, { "people", inst.size() }, { "output", o.output } }.dump(2) << '\n';
                else
                    out << inst.size() << " preference lists written to " << o.output << '\n';
            }
            return exit_code::ok;
        }

        auto cmd_oneattr(const Options & o, std::ostream & out) -> int
        {
            std::error_code ec;
            auto oa = std::filesystem::is_regular_file(o.file, ec) ? parse_oneattr_file(read_file(o.file))
                : parse_type_string(o.file);
            auto sol = solve_1attr(oa);
            if (o.json) {
                json a = json::array(), steps = json::array();
                for (auto & m : sol.assignments)
                    a.push_back(pairs_json(m));
                for (auto & s : sol.steps)
                    steps.push_back({ { "types", s.types }, { "rule", s.rule },
                            { "pair", s.first ? json{ s.first, s.second } : json(nullptr) } });
                out << json{ { "verb", "oneattr" }, { "types", oa.types }, { "count", sol.count() },
                        { "assignments", a }, { "steps", steps } }.dump(2) << '\n';
                return exit_code::ok;
            }
            out << oa.types << ": " << sol.count() << " stable assignment" << (sol.count() == 1 ? "" : "s") << '\n';
            for (auto & m : sol.assignments)
                out << pairs_text(m) << '\n';
            return exit_code::ok;
        }

        auto cmd_verify(const Options & o, std::ostream & out) -> int
        {
            auto g = parse_graph(read_file(o.file));
            auto rep = check_reduction(g, o.route == "euclid3" ? Route::Euclid3 : Route::Attr4, exploration(o));
            if (o.json) {
                json clauses = json::array();
                for (auto & c : rep.clauses)
                    clauses.push_back({ { "clause", c.clause }, { "ok", c.ok }, { "detail", c.detail } });
                out << json{ { "verb", "verify" }, { "route", route_name(rep.route) }, { "passed", rep.passed() },
                        { "people", rep.people }, { "rotations", rep.rotations }, { "tables_visited", rep.tables_visited },
                        { "stable_count", rep.stable_count.get_str() }, { "independent_sets", rep.independent_sets.get_str() },
                        { "clauses", clauses } }.dump(2) << '\n';
            }
            else {
                for (auto & c : rep.clauses)
                    out << (c.ok ? "ok   " : "FAIL ") << c.clause << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
                out << (rep.passed() ? "pass" : "fail") << ": route " << route_name(rep.route) << ", " << rep.people
                    << " people, " << rep.rotations << " rotations, count " << rep.stable_count.get_str()
                    << ", independent sets " << rep.independent_sets.get_str() << '\n';
            }
            return rep.passed() ? exit_code::ok : exit_code::negative;
        }

        /* "Name: message" from the error macro. */
        auto error_type(const std::exception & e) -> std::string
        {
            std::string w = e.what();
            auto colon = w.find(':');
            if (colon == std::string::npos || w.find(' ') < colon)
                return "Error";
            return w.substr(0, colon);
        }

        auto is_negative(const std::exception & e) -> bool
        {
            return dynamic_cast<const NoStableMatching *>(&e) || dynamic_cast<const TieDetected *>(&e)
                || dynamic_cast<const VerificationFailed *>(&e);
        }
    }

    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{ "Stable roommates: solving, counting, rotations and geometric reductions.", "roommates" };
        app.require_subcommand(1);
        app.fallthrough();
        Options o;
        app.add_flag("--json", o.json, "Machine-readable output");
        app.add_option("--seed", o.seed, "Seed for randomised child order (0 = fixed order)");

        auto file_verb = [&] (const std::string & name, const std::string & help, const std::string & what = "FILE",
                const std::string & arg_help = "Input file") {
            auto * sub = app.add_subcommand(name, help);
            sub->add_option(what, o.file, arg_help)->required();
            return sub;
        };
        auto * solve_cmd = file_verb("solve", "Find one stable assignment");
        auto * count_cmd = file_verb("count", "Count stable assignments");
        count_cmd->add_option("--method", o.method, "downsets, maxis, brute or all")
            ->check(CLI::IsMember({ "downsets", "maxis", "brute", "all" }));
        auto * rot_cmd = file_verb("rotations", "List rotations and their precedence");
        rot_cmd->add_option("--dot", o.dot, "Print DOT: hasse (precedence) or gofi (rotation graph)")
            ->check(CLI::IsMember({ "hasse", "gofi" }));
        auto * enum_cmd = file_verb("enumerate", "List every stable assignment");
        auto * oracle_cmd = file_verb("oracle", "List stable assignments by brute force");

        auto * reduce_cmd = app.add_subcommand("reduce", "Build a geometric instance from a graph. bis3attr and bis2euclid "
                "read a bipartite graph and label it lexicographically");
        reduce_cmd->add_option("KIND", o.kind, "is4attr, is3euclid, bis3attr or bis2euclid")->required()
            ->check(CLI::IsMember({ "is4attr", "is3euclid", "bis3attr", "bis2euclid" }));
        reduce_cmd->add_option("GRAPH", o.file, "Graph file")->required();
        reduce_cmd->add_option("-o,--output", o.output, "Output JSON ('-' for stdout)")->required();
        reduce_cmd->add_option("--sr", o.sr_output, "Also write the derived preference lists");
        reduce_cmd->add_flag("--float", o.float_coords, "Add decimal approximations for plotting");
        reduce_cmd->add_flag("--break-ties", o.break_ties, "With --sr, break exact ties by person index");

        auto * prefs_cmd = file_verb("prefs", "Derive preference lists from a geometric instance", "GEOM");
        prefs_cmd->add_option("-o,--output", o.output, "Output .sr file ('-' for stdout)")->required();
        prefs_cmd->add_flag("--unsafe-float", o.float_coords, "Accept plain JSON numbers as coordinates");
        prefs_cmd->add_flag("--break-ties", o.break_ties, "Break exact ties by person index instead of failing");

        auto * oneattr_cmd = file_verb("oneattr", "Solve a 1-attribute instance", "TYPES",
                "Type string such as ABBA, or a file of position/type lines");
        auto * verify_cmd = file_verb("verify", "Build a reduction and check it end to end", "GRAPH", "Graph file");
        verify_cmd->add_option("--route", o.route, "attr4 or euclid3")->check(CLI::IsMember({ "attr4", "euclid3" }));

        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return exit_code::ok;
        }
        catch (const CLI::CallForAllHelp &) {
            out << app.help("", CLI::AppFormatMode::All);
            return exit_code::ok;
        }
        catch (const CLI::ParseError & e) {
            err << "error: " << e.what() << '\n';
            auto subs = app.get_subcommands();
            err << (subs.empty() ? app.help() : subs.front()->help());
            return exit_code::error;
        }

        try {
            auto * sub = app.get_subcommands().front();
            if (sub == solve_cmd) return cmd_solve(o, out);
            if (sub == count_cmd) return cmd_count(o, out, err);
            if (sub == rot_cmd) return cmd_rotations(o, out);
            if (sub == enum_cmd) return cmd_enumerate(o, out);
            if (sub == oracle_cmd) return cmd_oracle(o, out);
            if (sub == reduce_cmd) return cmd_reduce(o, out);
            if (sub == prefs_cmd) return cmd_prefs(o, out);
            if (sub == oneattr_cmd) return cmd_oneattr(o, out);
            if (sub == verify_cmd) return cmd_verify(o, out);
            return exit_code::error;
        }
        catch (const std::exception & e) {
            bool negative = is_negative(e);
            if (o.json)
                out << json{ { "error", { { "type", error_type(e) }, { "message", e.what() } } } }.dump(2) << '\n';
            if (dynamic_cast<const NoStableMatching *>(&e) && ! o.json)
                out << "no stable assignment\n";
            err << (negative ? "" : "error: ") << e.what() << '\n';
            return negative ? exit_code::negative : exit_code::error;
        }
    }
}
