// JSON text formats for directed and signed graphs.  djson: {"n": int,
// "arcs": [[u,v],...], "name"?: string}.  sjson: {"n": int, "edges":
// [[u,v],...] in strict lexicographic order, "signs": [+1/-1,...] aligned
// with edges, "name"?: string}.  Writers emit keys in that order with
// compact separators, so output is byte-stable.
#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "digraph.hpp"
#include "signed_graph.hpp"

namespace wiener {

struct NamedDigraph {
    Digraph digraph;
    std::string name;
};

struct NamedSigned {
    SignedGraph graph;
    std::string name;
};

namespace detail {

inline auto parse_json(const std::string& text, const char* what) -> nlohmann::json {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
    }
}

inline auto read_order(const nlohmann::json& j, const char* what, std::initializer_list<const char*> allowed)
    -> int {
    if (!j.is_object()) throw std::invalid_argument(std::string(what) + ": root must be an object");
    for (auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* name : allowed) ok = ok || key == name;
        if (!ok) throw std::invalid_argument(std::string(what) + ": unknown field '" + key + "'");
    }
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument(std::string(what) + ": field 'n' must be an integer");
    int n = j["n"].get<int>();
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument(std::string(what) + ": field 'n' out of range 0..64");
    return n;
}

inline auto read_pair(const nlohmann::json& entry, int n, const char* what, const char* field, size_t idx)
    -> std::pair<int, int> {
    auto where = [&] { return std::string(what) + ": field '" + field + "' entry " + std::to_string(idx); };
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() || !entry[1].is_number_integer())
        throw std::invalid_argument(where() + ": expected a pair of integers");
    int u = entry[0].get<int>(), v = entry[1].get<int>();
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument(where() + ": vertex out of range");
    return {u, v};
}

inline auto read_name(const nlohmann::json& j, const char* what) -> std::string {
    if (!j.contains("name")) return "";
    if (!j["name"].is_string())
        throw std::invalid_argument(std::string(what) + ": field 'name' must be a string");
    return j["name"].get<std::string>();
}

}  // namespace detail

inline auto read_djson(const std::string& text) -> NamedDigraph {
    auto j = detail::parse_json(text, "djson");
    int n = detail::read_order(j, "djson", {"n", "arcs", "name"});
    if (!j.contains("arcs") || !j["arcs"].is_array())
        throw std::invalid_argument("djson: field 'arcs' must be an array");
    NamedDigraph out{Digraph::empty(n), detail::read_name(j, "djson")};
    for (size_t i = 0; i < j["arcs"].size(); ++i) {
        auto [u, v] = detail::read_pair(j["arcs"][i], n, "djson", "arcs", i);
        if (u == v)
            throw std::invalid_argument("djson: field 'arcs' entry " + std::to_string(i) + ": self-loop");
        if (out.digraph.has_arc(u, v))
            throw std::invalid_argument("djson: field 'arcs' entry " + std::to_string(i) + ": duplicate arc");
        out.digraph.add_arc(u, v);
    }
    return out;
}

inline auto write_djson(const Digraph& d, const std::string& name = "") -> std::string {
    nlohmann::ordered_json j;
    j["n"] = d.n;
    auto arcs = nlohmann::ordered_json::array();
    for (int u = 0; u < d.n; ++u)
        for (uint64_t m = d.out[u]; m != 0; m &= m - 1) arcs.push_back({u, std::countr_zero(m)});
    j["arcs"] = std::move(arcs);
    if (!name.empty()) j["name"] = name;
    return j.dump();
}

inline auto read_sjson(const std::string& text) -> NamedSigned {
    auto j = detail::parse_json(text, "sjson");
    int n = detail::read_order(j, "sjson", {"n", "edges", "signs", "name"});
    if (!j.contains("edges") || !j["edges"].is_array())
        throw std::invalid_argument("sjson: field 'edges' must be an array");
    if (!j.contains("signs") || !j["signs"].is_array())
        throw std::invalid_argument("sjson: field 'signs' must be an array");
    if (j["signs"].size() != j["edges"].size())
        throw std::invalid_argument("sjson: fields 'edges' and 'signs' must have equal length");
    NamedSigned out{SignedGraph{Graph::empty(n), 0}, detail::read_name(j, "sjson")};
    std::pair<int, int> prev{-1, -1};
    for (size_t i = 0; i < j["edges"].size(); ++i) {
        auto [u, v] = detail::read_pair(j["edges"][i], n, "sjson", "edges", i);
        if (u >= v)
            throw std::invalid_argument("sjson: field 'edges' entry " + std::to_string(i) +
                                        ": endpoints must satisfy u < v");
        if (std::pair{u, v} <= prev)
            throw std::invalid_argument("sjson: field 'edges' entry " + std::to_string(i) +
                                        ": edges must be in lexicographic order");
        prev = {u, v};
        out.graph.base.add_edge(u, v);
        if (!j["signs"][i].is_number_integer())
            throw std::invalid_argument("sjson: field 'signs' entry " + std::to_string(i) +
                                        ": expected +1 or -1");
        int s = j["signs"][i].get<int>();
        if (s != 1 && s != -1)
            throw std::invalid_argument("sjson: field 'signs' entry " + std::to_string(i) +
                                        ": expected +1 or -1");
        if (s == -1) out.graph.negatives |= uint64_t{1} << i;
    }
    return out;
}

inline auto write_sjson(const SignedGraph& s, const std::string& name = "") -> std::string {
    nlohmann::ordered_json j;
    j["n"] = s.base.n;
    auto edges = nlohmann::ordered_json::array();
    auto signs = nlohmann::ordered_json::array();
    auto list = s.base.edges();
    for (size_t e = 0; e < list.size(); ++e) {
        edges.push_back({list[e].first, list[e].second});
        signs.push_back(s.sign(e));
    }
    j["edges"] = std::move(edges);
    j["signs"] = std::move(signs);
    if (!name.empty()) j["name"] = name;
    return j.dump();
}

}  // namespace wiener
