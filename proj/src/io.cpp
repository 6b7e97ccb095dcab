#include "circlex/io.hpp"

#include <sstream>
#include <stdexcept>

namespace circlex {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

int parse_int(const std::string& s) {
    size_t used = 0;
    int value;
    try {
        value = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    return value;
}

std::string join(const std::vector<int>& v, char sep) {
    std::ostringstream out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << sep;
        out << v[i];
    }
    return out.str();
}

}  // namespace

Circulant parse_circulant(const std::string& text, bool force_json) {
    std::string t = strip(text);
    if (t.empty()) throw std::invalid_argument("empty circulant argument");
    if (force_json || t[0] == '{') {
        Json j;
        try {
            j = Json::parse(t);
        } catch (const Json::parse_error& e) {
            throw std::invalid_argument(std::string("bad circulant JSON: ") + e.what());
        }
        if (!j.is_object() || !j.contains("n") || !j.contains("s"))
            throw std::invalid_argument("circulant JSON needs fields \"n\" and \"s\"");
        if (!j["n"].is_number_integer() || !j["s"].is_array())
            throw std::invalid_argument("circulant JSON needs integer \"n\" and array \"s\"");
        std::vector<int> s;
        for (const Json& x : j["s"]) {
            if (!x.is_number_integer())
                throw std::invalid_argument("connection set entries must be integers");
            s.push_back(x.get<int>());
        }
        return Circulant(j["n"].get<int>(), std::move(s));
    }

    size_t colon = t.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("expected \"n:s1,s2,...\", got '" + t + "'");
    int n = parse_int(strip(t.substr(0, colon)));
    std::vector<int> s;
    std::string rest = strip(t.substr(colon + 1));
    if (!rest.empty()) {
        std::istringstream in(rest);
        std::string item;
        while (std::getline(in, item, ',')) s.push_back(parse_int(strip(item)));
    }
    return Circulant(n, std::move(s));
}

std::string format_circulant(const Circulant& c) {
    return std::to_string(c.order()) + ":" + join(c.connection_set(), ',');
}

Json to_json(const Circulant& c) {
    return Json{{"n", c.order()}, {"s", c.connection_set()}};
}

Json to_json(const Decomposition& d) {
    return Json{{"gamma0", to_json(d.gamma0)},
                {"factors", d.factors},
                {"b", d.b},
                {"aut_order", aut_order(d).str()},
                {"arc_transitivity_verified", d.arc_transitivity_verified},
                {"gamma0_normality_verified", d.gamma0_normality_verified}};
}

Json to_json(const DenseDigraph& g) {
    Json arcs = Json::array();
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (g.arc(u, v)) arcs.push_back(Json::array({u, v}));
    return Json{{"order", g.order()}, {"arcs", arcs}};
}

Json to_json(const CiReport& r) {
    Json j{{"isomorphic", r.isomorphic}};
    if (r.multiplier)
        j["multiplier"] = *r.multiplier;
    else
        j["multiplier"] = nullptr;
    j["ci_guarantee"] = r.ci_guarantee;
    return j;
}

Json to_json(const CheckResult& c) {
    return Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

Json to_json(const VerificationReport& r) {
    Json checks = Json::array();
    for (const CheckResult& c : r.checks) checks.push_back(to_json(c));
    return Json{{"all_pass", r.all_pass()}, {"checks", checks}};
}

Json to_json(const CensusEntry& e) {
    return Json{{"n", e.n},
                {"canonical_s", e.canonical.connection_set()},
                {"decomposition", to_json(e.decomposition)},
                {"aut_order", e.aut_order.str()},
                {"undirected", e.undirected}};
}

Json to_json(const std::vector<CensusEntry>& entries) {
    Json j = Json::array();
    for (const CensusEntry& e : entries) j.push_back(to_json(e));
    return j;
}

std::string census_csv(const std::vector<CensusEntry>& entries) {
    std::ostringstream out;
    out << "n,canonical_s,n0,s0,factors,b,aut_order,undirected\n";
    for (const CensusEntry& e : entries) {
        out << e.n << ',' << join(e.canonical.connection_set(), ';') << ','
            << e.decomposition.gamma0.order() << ','
            << join(e.decomposition.gamma0.connection_set(), ';') << ','
            << join(e.decomposition.factors, ';') << ',' << e.decomposition.b << ','
            << e.aut_order.str() << ',' << (e.undirected ? "true" : "false") << '\n';
    }
    return out.str();
}

}  // namespace circlex
