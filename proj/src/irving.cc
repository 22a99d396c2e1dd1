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

#include <roommates/irving.hh>

#include <algorithm>
#include <set>
#include <sstream>

namespace roommates
{
    Rotation::Rotation(std::vector<Triple> triples) :
        _triples(std::move(triples))
    {
        if (_triples.size() < 2)
            throw std::logic_error("rotation needs at least two triples");
        auto smallest = std::min_element(_triples.begin(), _triples.end(),
                [] (const Triple & a, const Triple & b) { return a.e < b.e; });
        std::rotate(_triples.begin(), smallest, _triples.end());
    }

    auto Rotation::dual() const -> Rotation
    {
        std::vector<Triple> d;
        int k = size();
        for (int i = 0 ; i < k ; ++i)
            d.push_back(Triple{ _triples[i].s, _triples[i].e, _triples[(i + 1) % k].e });
        return Rotation(std::move(d));
    }

    auto Rotation::to_string() const -> std::string
    {
        std::ostringstream out;
        bool first = true;
        for (auto & t : _triples) {
            out << (first ? "" : " ") << "(" << t.e + 1 << ": " << t.h + 1 << ", " << t.s + 1 << ")";
            first = false;
        }
        return out.str();
    }

    Table::Table(std::shared_ptr<const Instance> inst) :
        _inst(std::move(inst))
    {
        int n = _inst->size();
        _alive.assign(std::size_t(n) * n, 0);
        _first.assign(n, 0);
        _last.assign(n, n - 2);
        _size.assign(n, n - 1);
        for (Person p = 0 ; p < n ; ++p)
            std::fill(row(p), row(p) + n - 1, 1);
    }

    auto Table::refresh(Person p) -> void
    {
        int len = _inst->size() - 1;
        auto r = row(p);
        while (_first[p] < len && ! r[_first[p]])
            ++_first[p];
        while (_last[p] >= 0 && ! r[_last[p]])
            --_last[p];
    }

    auto Table::erase_one(Person p, Person q) -> void
    {
        auto & cell = row(p)[_inst->rank(p, q)];
        if (cell) {
            cell = 0;
            --_size[p];
            refresh(p);
        }
    }

    auto Table::first(Person p) const -> Person
    {
        return _size[p] > 0 ? _inst->list(p)[_first[p]] : -1;
    }

    auto Table::second(Person p) const -> Person
    {
        if (_size[p] < 2)
            return -1;
        auto r = row(p);
        int i = _first[p] + 1;
        while (! r[i])
            ++i;
        return _inst->list(p)[i];
    }

    auto Table::last(Person p) const -> Person
    {
        return _size[p] > 0 ? _inst->list(p)[_last[p]] : -1;
    }

    auto Table::list(Person p) const -> std::vector<Person>
    {
        std::vector<Person> result;
        auto r = row(p);
        for (int i = 0 ; i < _inst->size() - 1 ; ++i)
            if (r[i])
                result.push_back(_inst->list(p)[i]);
        return result;
    }

    auto Table::remove_pair(Person p, Person q) -> void
    {
        erase_one(p, q);
        erase_one(q, p);
    }

    auto Table::truncate_below(Person p, Person q) -> std::vector<Person>
    {
        std::vector<Person> removed;
        auto & l = _inst->list(p);
        for (int i = _inst->rank(p, q) + 1 ; i <= _last[p] ; ++i)
            if (row(p)[i])
                removed.push_back(l[i]);
        for (Person x : removed)
            remove_pair(p, x);
        return removed;
    }

    auto Table::any_empty() const -> bool
    {
        return std::any_of(_size.begin(), _size.end(), [] (int s) { return s == 0; });
    }

    auto Table::all_singletons() const -> bool
    {
        return std::all_of(_size.begin(), _size.end(), [] (int s) { return s == 1; });
    }

    auto Table::total_entries() const -> long
    {
        long t = 0;
        for (int s : _size)
            t += s;
        return t;
    }

    auto Table::is_symmetric() const -> bool
    {
        for (Person p = 0 ; p < num_people() ; ++p)
            for (Person q = 0 ; q < num_people() ; ++q)
                if (p != q && contains(p, q) != contains(q, p))
                    return false;
        return true;
    }

    auto Table::to_matching() const -> Matching
    {
        if (! all_singletons())
            throw std::logic_error("table is not all-singleton");
        std::vector<Person> partner(num_people());
        for (Person p = 0 ; p < num_people() ; ++p)
            partner[p] = first(p);
        return Matching(std::move(partner));
    }

    auto Table::to_string() const -> std::string
    {
        std::ostringstream out;
        for (Person p = 0 ; p < num_people() ; ++p) {
            out << p + 1 << ":";
            for (Person q : list(p))
                out << " " << q + 1;
            out << '\n';
        }
        return out.str();
    }

    auto phase1(std::shared_ptr<const Instance> inst, const FreeChooser & chooser) -> std::optional<Table>
    {
        Table t(std::move(inst));
        int n = t.num_people();

        /* e is free unless e is the last entry on the list of e's head. */
        auto is_free = [&] (Person e) { return t.last(t.first(e)) != e; };

        std::set<Person> free;
        for (Person p = 0 ; p < n ; ++p)
            free.insert(p);

        while (! free.empty()) {
            Person e;
            if (chooser)
                e = chooser(std::vector<Person>(free.begin(), free.end()));
            else
                e = *free.begin();

            Person h = t.first(e);
            auto removed = t.truncate_below(h, e);
            if (t.any_empty())
                return std::nullopt;

            /* Only people who lost an entry can change status. */
            removed.push_back(e);
            removed.push_back(h);
            for (Person p : removed) {
                if (is_free(p))
                    free.insert(p);
                else
                    free.erase(p);
            }
        }

        return t;
    }

    auto phase1(const Instance & inst) -> std::optional<Table>
    {
        return phase1(std::make_shared<const Instance>(inst));
    }

    auto exposed_rotations(const Table & t) -> std::vector<Rotation>
    {
        int n = t.num_people();
        auto next = [&] (Person x) -> Person {
            Person s = t.second(x);
            if (s < 0)
                return -1;
            Person y = t.last(s);
            return t.size(y) >= 2 ? y : -1;
        };

        /* Functional-graph cycle finding: 0 unseen, 1 on current walk, 2 done. */
        std::vector<int> colour(n, 0);
        std::set<Rotation> found;
        for (Person start = 0 ; start < n ; ++start) {
            if (colour[start] || t.size(start) < 2)
                continue;
            std::vector<Person> walk;
            Person x = start;
            while (x >= 0 && colour[x] == 0) {
                colour[x] = 1;
                walk.push_back(x);
                x = next(x);
            }
            if (x >= 0 && colour[x] == 1) {
                auto it = std::find(walk.begin(), walk.end(), x);
                std::vector<Triple> triples;
                for ( ; it != walk.end() ; ++it)
                    triples.push_back(Triple{ *it, t.first(*it), t.second(*it) });
                found.insert(Rotation(std::move(triples)));
            }
            for (Person w : walk)
                colour[w] = 2;
        }
        return std::vector<Rotation>(found.begin(), found.end());
    }

    auto is_exposed(const Table & t, const Rotation & r) -> bool
    {
        auto & tr = r.triples();
        for (std::size_t i = 0 ; i < tr.size() ; ++i) {
            if (t.size(tr[i].e) < 2 || t.first(tr[i].e) != tr[i].h || t.second(tr[i].e) != tr[i].s)
                return false;
            if (tr[i].s != tr[(i + 1) % tr.size()].h)
                return false;
        }
        return true;
    }

    auto eliminate(const Table & t, const Rotation & r, std::vector<Removal> * removals) -> std::optional<Table>
    {
        if (! is_exposed(t, r))
            throw RotationNotExposed(r.to_string());

        Table result = t;
        for (auto & tr : r.triples()) {
            for (Person x : result.truncate_below(tr.s, tr.e))
                if (removals)
                    removals->push_back(Removal{ x, tr.s });
        }
        if (result.any_empty())
            return std::nullopt;
        return result;
    }

    auto find_stable_matching(const Instance & inst) -> std::optional<Matching>
    {
        auto t = phase1(inst);
        if (! t)
            return std::nullopt;
        while (! t->all_singletons()) {
            auto rots = exposed_rotations(*t);
            if (rots.empty())
                throw std::logic_error("table with a long list exposes no rotation");
            t = eliminate(*t, rots.front());
            if (! t)
                return std::nullopt;
        }
        return t->to_matching();
    }

    auto solve(const Instance & inst) -> Matching
    {
        auto m = find_stable_matching(inst);
        if (! m)
            throw NoStableMatching("the instance has no stable assignment");
        return *m;
    }
}
