#include "keypoly/jsonio.hpp"

#include <nlohmann/json.hpp>

namespace keypoly {

using json = nlohmann::ordered_json;

std::string bipoly_to_json(const BiPoly & p)
{
    json j;
    j["vars"] = {"x", "lambda"};
    j["terms"] = json::array();
    for (auto & [e, k] : p.t)
        j["terms"].push_back({{"exp", {e.first, e.second}}, {"coef", rat_string(k)}});
    return j.dump();
}

BiPoly bipoly_from_json(const std::string & s)
{
    json j = json::parse(s);
    BiPoly p;
    for (auto & t : j.at("terms"))
        p.add_term(t.at("exp").at(0).get<int>(), t.at("exp").at(1).get<int>(),
                   rat_parse(t.at("coef").get<std::string>()));
    return p;
}

std::string unipoly_to_json(const UPoly & p, const std::string & var)
{
    json j;
    j["vars"] = {var};
    j["terms"] = json::array();
    for (int i = 0; i <= p.degree(); i++)
        if (!is_zero(p.coeff(i)))
            j["terms"].push_back({{"exp", {i}}, {"coef", rat_string(p.coeff(i))}});
    return j.dump();
}

UPoly unipoly_from_json(const std::string & s)
{
    json j = json::parse(s);
    UPoly p;
    for (auto & t : j.at("terms")) {
        int i = t.at("exp").at(0).get<int>();
        if ((int) p.c.size() <= i)
            p.c.resize(i + 1, Rational(0));
        p.c[i] = rat_parse(t.at("coef").get<std::string>());
    }
    p.trim();
    return p;
}

} // namespace keypoly
