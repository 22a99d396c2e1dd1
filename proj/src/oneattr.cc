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

#include <roommates/oneattr.hh>

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <sstream>

namespace roommates
{
    auto parse_type_string(const std::string & s) -> OneAttrInstance
    {
        if (s.size() < 2 || s.size() % 2 != 0)
            throw InvalidTypeString("need an even number of people, at least 2, got " + std::to_string(s.size()));
        for (char c : s)
            if (c != 'A' && c != 'B')
                throw InvalidTypeString(std::string("unexpected character '") + c + "' in \"" + s + "\"");
        return { s };
    }

    auto parse_oneattr_file(const std::string & text) -> OneAttrInstance
    {
        std::vector<std::pair<mpq_class, char>> people;
        std::istringstream in(text);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#') ; hash != std::string::npos)
                line.erase(hash);
            std::istringstream words(line);
            std::string pos, type, extra;
            if (! (words >> pos))
                continue;
            if (! (words >> type) || (words >> extra))
                throw MalformedFile("line " + std::to_string(line_no) + ": expected \"position type\"");
            auto rat = [&] (const std::string & w) {
                mpq_class q;
                if (q.set_str(w, 10) != 0)
                    throw MalformedFile("line " + std::to_string(line_no) + ": not a rational: " + w);
                q.canonicalize();
                return q;
            };
            char t;
            if (type == "A" || type == "B")
                t = type[0];
            else {
                auto pref = rat(type);
                if (pref == 0)
                    throw MalformedFile("line " + std::to_string(line_no) + ": a zero preference is indifferent to everyone");
                t = pref < 0 ? 'A' : 'B';
            }
            people.emplace_back(rat(pos), t);
        }
        std::sort(people.begin(), people.end());
        for (std::size_t i = 0 ; i + 1 < people.size() ; ++i)
            if (people[i].first == people[i + 1].first)
                throw MalformedFile("two people share position " + people[i].first.get_str());
        std::string types;
        for (auto & [p, t] : people)
            types += t;
        return parse_type_string(types);
    }

    auto expand(const OneAttrInstance & oa) -> Instance
    {
        int n = oa.size();
        std::vector<std::vector<Person>> lists(n);
        for (Person x = 0 ; x < n ; ++x)
            for (int k = 0 ; k < n ; ++k) {
                Person y = oa.types[x] == 'A' ? k : n - 1 - k;
                if (y != x)
                    lists[x].push_back(y);
            }
        return Instance(std::move(lists));
    }

    namespace
    {
        using Partners = std::vector<Person>;

        struct Rule
        {
            const char * name;
            int first, second;
        };

        /* Cases in dispatch order; positions are 1-based. */
        auto dispatch(const std::string & s) -> std::optional<Rule>
        {
            int n = int(s.size());
            auto A = [&] (int i) { return s[i - 1] == 'A'; };
            auto B = [&] (int i) { return s[i - 1] == 'B'; };
            auto any = [&] (int lo, int hi, bool want_a) {
                for (int i = lo ; i <= hi ; ++i)
                    if (A(i) == want_a)
                        return true;
                return false;
            };
            if (n < 4)
                return std::nullopt;

            if (A(1) && A(2))
                return Rule{ "T1", 1, 2 };
            if (B(n - 1) && B(n))
                return Rule{ "S1", n - 1, n };
            if (B(1) && A(n))
                return Rule{ "M1", 1, n };
            if (A(1) && B(2) && A(n) && any(3, n - 1, true))
                return Rule{ "M2", 2, n };
            if (B(1) && A(n - 1) && B(n) && any(2, n - 2, false))
                return Rule{ "S2", 1, n - 1 };
            if (n == 4)
                return std::nullopt;
            if (B(1) && A(2) && A(3) && any(4, n, true))
                return Rule{ "T2", 2, 3 };
            if (B(n - 2) && B(n - 1) && A(n) && any(1, n - 3, false))
                return Rule{ "S3", n - 2, n - 1 };
            if (n >= 6 && A(1) && B(2) && A(3) && A(n - 1) && B(n))
                return Rule{ "T3", 1, 3 };
            if (n >= 6 && A(1) && B(2) && B(n - 2) && A(n - 1) && B(n))
                return Rule{ "S4", n - 2, n };
            if (n >= 6 && A(1) && B(2) && B(3) && A(n - 2) && A(n - 1) && B(n))
                return Rule{ "M3", 2, n - 1 };
            return std::nullopt;
        }

        auto pairs_to_partners(int n, std::initializer_list<std::pair<int, int>> pairs) -> Partners
        {
            Partners p(n);
            for (auto [a, b] : pairs) {
                p[a - 1] = b - 1;
                p[b - 1] = a - 1;
            }
            return p;
        }

        auto solve(const std::string & s, std::vector<OneAttrStep> & steps) -> std::vector<Partners>
        {
            int n = int(s.size());
            if (n == 2) {
                steps.push_back({ s, "B1" });
                return { pairs_to_partners(2, { { 1, 2 } }) };
            }
            if (auto rule = dispatch(s)) {
                steps.push_back({ s, rule->name, rule->first, rule->second });
                std::string rest;
                std::vector<Person> keep;
                for (int i = 1 ; i <= n ; ++i)
                    if (i != rule->first && i != rule->second) {
                        rest += s[i - 1];
                        keep.push_back(i - 1);
                    }
                auto sub = solve(rest, steps);
                std::vector<Partners> result;
                for (auto & m : sub) {
                    Partners p(n);
                    p[rule->first - 1] = rule->second - 1;
                    p[rule->second - 1] = rule->first - 1;
                    for (std::size_t i = 0 ; i < keep.size() ; ++i)
                        p[keep[i]] = keep[m[i]];
                    result.push_back(std::move(p));
                }
                return result;
            }
            if (s == "ABBA" || s == "BAAB") {
                /* BAAB is ABBA read backwards with the types swapped; both
                 * assignments are invariant under that relabelling. */
                steps.push_back({ s, s == "ABBA" ? "B2" : "B3" });
                return { pairs_to_partners(4, { { 1, 4 }, { 2, 3 } }), pairs_to_partners(4, { { 1, 3 }, { 2, 4 } }) };
            }
            if (s == "ABAB") {
                steps.push_back({ s, "B4" });
                return { pairs_to_partners(4, { { 1, 3 }, { 2, 4 } }) };
            }
            throw DispatchExhausted("no case applies to " + s);
        }
    }

    auto solve_1attr(const OneAttrInstance & oa) -> OneAttrSolution
    {
        parse_type_string(oa.types);
        OneAttrSolution result;
        for (auto & p : solve(oa.types, result.steps))
            result.assignments.emplace_back(std::move(p));
        std::sort(result.assignments.begin(), result.assignments.end());
        return result;
    }
}
