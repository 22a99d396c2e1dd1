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

#include <roommates/core.hh>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace roommates
{
    Instance::Instance(std::vector<std::vector<Person>> lists) :
        _lists(std::move(lists))
    {
        int n = int(_lists.size());
        if (n < 2 || n % 2 != 0)
            throw InvalidPreferenceList("number of people must be even and at least 2, got " + std::to_string(n));

        _rank.assign(n, std::vector<int>(n, -1));
        for (int p = 0 ; p < n ; ++p) {
            auto & l = _lists[p];
            if (int(l.size()) != n - 1)
                throw InvalidPreferenceList("person " + std::to_string(p + 1) + " lists " + std::to_string(l.size())
                        + " people, expected " + std::to_string(n - 1));
            for (int r = 0 ; r < n - 1 ; ++r) {
                Person q = l[r];
                if (q < 0 || q >= n)
                    throw InvalidPreferenceList("person " + std::to_string(p + 1) + " lists unknown person " + std::to_string(q + 1));
                if (q == p)
                    throw InvalidPreferenceList("person " + std::to_string(p + 1) + " lists themself");
                if (_rank[p][q] != -1)
                    throw InvalidPreferenceList("person " + std::to_string(p + 1) + " lists " + std::to_string(q + 1) + " twice");
                _rank[p][q] = r;
            }
        }
    }

    Matching::Matching(std::vector<Person> partner) :
        _partner(std::move(partner))
    {
        int n = int(_partner.size());
        if (n < 2 || n % 2 != 0)
            throw InvalidMatching("matching must cover an even number of people");
        for (int p = 0 ; p < n ; ++p) {
            Person q = _partner[p];
            if (q < 0 || q >= n || q == p || _partner[q] != p)
                throw InvalidMatching("partner map is not a fixed-point-free involution at person " + std::to_string(p + 1));
        }
    }

    auto Matching::from_pairs(int num_people, const std::vector<std::pair<Person, Person>> & pairs) -> Matching
    {
        std::vector<Person> partner(num_people, -1);
        for (auto & [a, b] : pairs) {
            if (a < 0 || a >= num_people || b < 0 || b >= num_people)
                throw InvalidMatching("pair mentions an unknown person");
            if (partner[a] != -1 || partner[b] != -1)
                throw InvalidMatching("person " + std::to_string((partner[a] != -1 ? a : b) + 1) + " is matched twice");
            partner[a] = b;
            partner[b] = a;
        }
        return Matching(std::move(partner));
    }

    auto Matching::pairs() const -> std::vector<std::pair<Person, Person>>
    {
        std::vector<std::pair<Person, Person>> result;
        for (Person p = 0 ; p < size() ; ++p)
            if (p < _partner[p])
                result.emplace_back(p, _partner[p]);
        return result;
    }

    namespace
    {
        auto check_sizes(const Instance & inst, const Matching & m) -> void
        {
            if (inst.size() != m.size())
                throw InvalidMatching("matching covers " + std::to_string(m.size()) + " people, instance has "
                        + std::to_string(inst.size()));
        }
    }

    auto find_blocking_pair(const Instance & inst, const Matching & m) -> std::optional<BlockingPair>
    {
        check_sizes(inst, m);

        /* For each a, only the people a prefers to their partner can block with a. */
        std::optional<BlockingPair> best;
        for (Person a = 0 ; a < inst.size() ; ++a) {
            auto & l = inst.list(a);
            for (int r = 0 ; r < inst.rank(a, m.partner(a)) ; ++r) {
                Person b = l[r];
                if (b > a && inst.prefers(b, a, m.partner(b))) {
                    BlockingPair cand{ a, b };
                    if (! best || b < best->b)
                        best = cand;
                }
            }
            if (best)
                return best;
        }
        return std::nullopt;
    }

    auto is_stable(const Instance & inst, const Matching & m) -> bool
    {
        return ! find_blocking_pair(inst, m).has_value();
    }

    namespace
    {
        auto content_lines(const std::string & text) -> std::vector<std::string>
        {
            std::vector<std::string> result;
            std::istringstream in(text);
            std::string line;
            while (std::getline(in, line)) {
                if (! line.empty() && line.back() == '\r')
                    line.pop_back();
                auto first = line.find_first_not_of(" \t");
                if (first == std::string::npos || line[first] == '#')
                    continue;
                result.push_back(line);
            }
            return result;
        }

        auto integers(const std::string & line, int line_no) -> std::vector<long long>
        {
            std::vector<long long> result;
            std::istringstream in(line);
            std::string tok;
            while (in >> tok) {
                std::size_t used = 0;
                long long v = 0;
                try {
                    v = std::stoll(tok, &used);
                }
                catch (const std::exception &) {
                    used = 0;
                }
                if (used != tok.size() || used == 0)
                    throw MalformedFile("line " + std::to_string(line_no) + ": '" + tok + "' is not an integer");
                result.push_back(v);
            }
            return result;
        }
    }

    auto parse_instance(const std::string & text) -> Instance
    {
        auto lines = content_lines(text);
        if (lines.empty())
            throw MalformedFile("missing header");

        auto header = integers(lines[0], 1);
        if (header.size() != 1)
            throw MalformedFile("header must be a single integer");
        long long n = header[0];
        if (n < 2 || n % 2 != 0)
            throw MalformedFile("number of people must be even and at least 2, got " + std::to_string(n));
        if (lines.size() != std::size_t(n) + 1)
            throw MalformedFile("expected " + std::to_string(n) + " preference lines, found " + std::to_string(lines.size() - 1));

        std::vector<std::vector<Person>> lists(n);
        for (long long p = 0 ; p < n ; ++p) {
            for (auto v : integers(lines[p + 1], int(p + 2))) {
                if (v < 1 || v > n)
                    throw InvalidPreferenceList("person " + std::to_string(p + 1) + " lists unknown person " + std::to_string(v));
                lists[p].push_back(Person(v - 1));
            }
        }
        return Instance(std::move(lists));
    }

    auto serialize_instance(const Instance & inst) -> std::string
    {
        std::ostringstream out;
        out << inst.size() << '\n';
        for (Person p = 0 ; p < inst.size() ; ++p) {
            bool first = true;
            for (Person q : inst.list(p)) {
                out << (first ? "" : " ") << q + 1;
                first = false;
            }
            out << '\n';
        }
        return out.str();
    }

    auto parse_matching(const std::string & text, int num_people) -> Matching
    {
        std::vector<std::pair<Person, Person>> pairs;
        int line_no = 0;
        for (auto & line : content_lines(text)) {
            auto v = integers(line, ++line_no);
            if (v.size() != 2 || v[0] < 1 || v[1] < 1 || v[0] > num_people || v[1] > num_people || v[0] >= v[1])
                throw MalformedFile("matching line '" + line + "' must be 'a b' with 1 <= a < b <= " + std::to_string(num_people));
            pairs.emplace_back(Person(v[0] - 1), Person(v[1] - 1));
        }
        return Matching::from_pairs(num_people, pairs);
    }

    auto serialize_matching(const Matching & m) -> std::string
    {
        std::ostringstream out;
        for (auto & [a, b] : m.pairs())
            out << a + 1 << ' ' << b + 1 << '\n';
        return out.str();
    }

    auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw Error("cannot open '" + path + "'");
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }
}
