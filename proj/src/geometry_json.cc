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

#include <roommates/geometry_json.hh>

#include <json.hpp>

namespace roommates
{
    using nlohmann::json;

    namespace
    {
        auto q_json(const mpq_class & q) -> json
        {
            return json{ { "num", q.get_num().get_str() }, { "den", q.get_den().get_str() } };
        }

        auto real_json(const ExactReal & x) -> json
        {
            if (x.is_rational())
                return q_json(x.constant());
            json terms = json::array();
            for (auto & [t, c] : x.terms())
                terms.push_back(json{ { "coef", q_json(c) }, { "turns", q_json(t) } });
            return json{ { "const", q_json(x.constant()) }, { "cos", terms } };
        }

        auto poly_json(const RPoly & p) -> json
        {
            if (p.degree() <= 0)
                return real_json(p.coefficient(0));
            if (p.degree() > 1)
                throw Error("coordinates must be at most linear in R");
            return json{ { "primary", real_json(p.coefficient(1)) }, { "tiebreak", real_json(p.coefficient(0)) } };
        }

        auto vector_json(const std::vector<Component> & v) -> json
        {
            json a = json::array();
            for (auto & c : v) {
                if (auto s = std::get_if<RPoly>(&c))
                    a.push_back(poly_json(*s));
                else {
                    auto & p = std::get<CirclePoint>(c);
                    a.push_back(json{ { "turns", q_json(p.turns) }, { "radius", poly_json(p.radius) } });
                }
            }
            return a;
        }

        auto approx_json(const std::vector<Component> & v) -> json
        {
            json a = json::array();
            for (auto & x : expand(v)) {
                if (x.degree() > 0)
                    a.push_back(nullptr);
                else
                    a.push_back(to_double(x.coefficient(0)));
            }
            return a;
        }

        auto integer(const json & j, const std::string & what) -> mpz_class
        {
            mpz_class z;
            if (j.is_string()) {
                if (z.set_str(j.get<std::string>(), 10) != 0)
                    throw MalformedFile(what + " is not a decimal integer");
            }
            else if (j.is_number_integer())
                z = mpz_class(std::to_string(j.get<long long>()));
            else
                throw MalformedFile(what + " must be an integer or a decimal string");
            return z;
        }

        auto q_from(const json & j, bool allow_float) -> mpq_class
        {
            if (j.is_object() && j.contains("num") && j.contains("den")) {
                mpz_class den = integer(j["den"], "den");
                if (den == 0)
                    throw MalformedFile("zero denominator");
                mpq_class q(integer(j["num"], "num"), den);
                q.canonicalize();
                return q;
            }
            if (j.is_number()) {
                if (j.is_number_integer())
                    return mpq_class(integer(j, "number"));
                if (! allow_float)
                    throw MalformedFile("floating-point coordinate needs --unsafe-float");
                return mpq_class(j.get<double>());
            }
            throw MalformedFile("expected a rational {\"num\",\"den\"}");
        }

        auto real_from(const json & j, bool allow_float) -> ExactReal
        {
            if (j.is_object() && j.contains("cos")) {
                ExactReal x(j.contains("const") ? q_from(j["const"], allow_float) : mpq_class(0));
                for (auto & t : j["cos"])
                    x += ExactReal::cos_turns(q_from(t.at("turns"), allow_float), q_from(t.at("coef"), allow_float));
                return x;
            }
            return ExactReal(q_from(j, allow_float));
        }

        auto poly_from(const json & j, bool allow_float) -> RPoly
        {
            if (j.is_object() && j.contains("primary"))
                return RPoly::linear(real_from(j["primary"], allow_float),
                        j.contains("tiebreak") ? real_from(j["tiebreak"], allow_float) : ExactReal());
            return RPoly(real_from(j, allow_float));
        }

        auto vector_from(const json & j, bool allow_float) -> std::vector<Component>
        {
            if (! j.is_array())
                throw MalformedFile("coordinate vector must be an array");
            std::vector<Component> v;
            for (auto & c : j) {
                if (c.is_object() && c.contains("turns"))
                    v.push_back(CirclePoint{ q_from(c["turns"], allow_float),
                            c.contains("radius") ? poly_from(c["radius"], allow_float) : RPoly(1) });
                else
                    v.push_back(poly_from(c, allow_float));
            }
            return v;
        }
    }

    auto geometric_to_json(const GeometricInstance & gi, bool approximate) -> std::string
    {
        json people = json::array();
        for (auto & p : gi.people) {
            json o{ { "name", p.name }, { "position", vector_json(p.position) }, { "preference", vector_json(p.preference) } };
            if (approximate) {
                o["position_approx"] = approx_json(p.position);
                o["preference_approx"] = approx_json(p.preference);
            }
            people.push_back(std::move(o));
        }
        json doc{ { "model", gi.model == Model::Attribute ? "attribute" : "euclidean" }, { "k", gi.k }, { "people", people } };
        return doc.dump(1) + "\n";
    }

    auto geometric_from_json(const std::string & text, bool allow_float) -> GeometricInstance
    {
        json doc;
        try {
            doc = json::parse(text);
        }
        catch (const json::exception & e) {
            throw MalformedFile(std::string("invalid JSON: ") + e.what());
        }

        try {
            GeometricInstance gi;
            auto model = doc.at("model").get<std::string>();
            if (model == "attribute")
                gi.model = Model::Attribute;
            else if (model == "euclidean")
                gi.model = Model::Euclidean;
            else
                throw MalformedFile("unknown model '" + model + "'");
            gi.k = doc.at("k").get<int>();
            for (auto & p : doc.at("people")) {
                GeoPerson gp;
                gp.name = p.at("name").get<std::string>();
                gp.position = vector_from(p.at("position"), allow_float);
                gp.preference = vector_from(p.at("preference"), allow_float);
                if (dimension(gp.position) != gi.k || dimension(gp.preference) != gi.k)
                    throw MalformedFile(gp.name + " does not have dimension " + std::to_string(gi.k));
                gi.people.push_back(std::move(gp));
            }
            return gi;
        }
        catch (const json::exception & e) {
            throw MalformedFile(std::string("bad geometric instance: ") + e.what());
        }
    }
}
