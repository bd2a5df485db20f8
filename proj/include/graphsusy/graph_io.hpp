#pragma once

// Graph, matrix, state and Morse-function (de)serialisation.
//
// Graph JSON: {"name": s, "vertices": [s...], "edges": [{"id": s, "tail": s, "head": s}...]}
// An edge may give "endpoints": [a, b] instead of tail/head; it is then
// oriented from the lower-indexed vertex to the higher one.
//
// Text: one edge per line "tail head [id]"; "# vertex <name>" declares a
// vertex (for isolated ones); "# name <name>" names the graph; other lines
// starting with '#' are comments.

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "graphsusy/dynamics.hpp"
#include "graphsusy/graph.hpp"
#include "graphsusy/morse.hpp"

namespace graphsusy {

using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void malformed(const std::string& what, const std::string& subject = {})
{
    throw Error(ErrorCode::MalformedInput, what, subject);
}

inline const Json& member(const Json& obj, const char* key)
{
    auto it = obj.find(key);
    if (it == obj.end())
        malformed(std::string("missing field '") + key + "'");
    return *it;
}

inline std::string string_field(const Json& obj, const char* key)
{
    const auto& v = member(obj, key);
    if (!v.is_string())
        malformed(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

/// Name -> index, rejecting duplicates.
inline std::unordered_map<std::string, std::size_t> vertex_lookup(const std::vector<std::string>& vertices)
{
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (!idx.emplace(vertices[i], i).second)
            throw Error(ErrorCode::DuplicateId, "vertex '" + vertices[i] + "' appears twice", vertices[i]);
    return idx;
}

inline std::size_t resolve(const std::unordered_map<std::string, std::size_t>& idx, const std::string& v,
                           const std::string& edge_id)
{
    auto it = idx.find(v);
    if (it == idx.end())
        throw Error(ErrorCode::DanglingEndpoint, "edge '" + edge_id + "' references unknown vertex '" + v + "'",
                    edge_id);
    return it->second;
}

} // namespace detail

inline OrientedGraph graph_from_json(const Json& doc)
{
    if (!doc.is_object())
        detail::malformed("graph document must be a JSON object");
    std::string name;
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string())
            detail::malformed("field 'name' must be a string");
        name = it->get<std::string>();
    }
    const auto& vs = detail::member(doc, "vertices");
    if (!vs.is_array())
        detail::malformed("field 'vertices' must be an array");
    std::vector<std::string> vertices;
    for (const auto& v : vs) {
        if (!v.is_string())
            detail::malformed("vertex ids must be strings");
        vertices.push_back(v.get<std::string>());
    }
    const auto idx = detail::vertex_lookup(vertices);

    std::vector<Edge> edges;
    if (auto it = doc.find("edges"); it != doc.end()) {
        if (!it->is_array())
            detail::malformed("field 'edges' must be an array");
        for (const auto& e : *it) {
            if (!e.is_object())
                detail::malformed("each edge must be an object");
            Edge edge;
            edge.id = e.contains("id") ? detail::string_field(e, "id") : "e" + std::to_string(edges.size() + 1);
            if (e.contains("endpoints")) {
                const auto& ends = e["endpoints"];
                if (!ends.is_array() || ends.size() != 2 || !ends[0].is_string() || !ends[1].is_string())
                    detail::malformed("'endpoints' must be a pair of vertex ids", edge.id);
                const std::size_t a = detail::resolve(idx, ends[0].get<std::string>(), edge.id);
                const std::size_t b = detail::resolve(idx, ends[1].get<std::string>(), edge.id);
                edge.tail = std::min(a, b);
                edge.head = std::max(a, b);
            } else {
                edge.tail = detail::resolve(idx, detail::string_field(e, "tail"), edge.id);
                edge.head = detail::resolve(idx, detail::string_field(e, "head"), edge.id);
            }
            edges.push_back(std::move(edge));
        }
    }
    return OrientedGraph(std::move(name), std::move(vertices), std::move(edges));
}

inline OrientedGraph parse_graph_json(const std::string& text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        detail::malformed(std::string("invalid JSON: ") + ex.what());
    }
    return graph_from_json(doc);
}

inline Json graph_to_json(const OrientedGraph& g)
{
    Json edges = Json::array();
    for (const auto& e : g.edges())
        edges.push_back({{"id", e.id}, {"tail", g.vertices()[e.tail]}, {"head", g.vertices()[e.head]}});
    return {{"name", g.name()}, {"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

inline std::string serialize_graph(const OrientedGraph& g) { return graph_to_json(g).dump(2) + "\n"; }

inline OrientedGraph parse_graph_text(const std::string& text, std::string name = {})
{
    std::vector<std::string> vertices;
    std::unordered_map<std::string, std::size_t> idx;
    auto intern = [&](const std::string& v) {
        auto [it, fresh] = idx.emplace(v, vertices.size());
        if (fresh)
            vertices.push_back(v);
        return it->second;
    };
    std::vector<Edge> edges;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first))
            continue;
        if (first[0] == '#') {
            std::string key, value, extra;
            if (first == "#")
                ls >> key;
            else
                key = first.substr(1);
            if (key == "vertex" || key == "name") {
                if (!(ls >> value) || (ls >> extra))
                    detail::malformed("line " + std::to_string(lineno) + ": expected '# " + key + " <id>'");
                if (key == "name")
                    name = value;
                else if (!idx.emplace(value, vertices.size()).second)
                    throw Error(ErrorCode::DuplicateId, "vertex '" + value + "' declared twice", value);
                else
                    vertices.push_back(value);
            }
            continue;
        }
        std::string head, id, extra;
        if (!(ls >> head))
            detail::malformed("line " + std::to_string(lineno) + ": expected 'tail head [id]'");
        if (!(ls >> id))
            id = "e" + std::to_string(edges.size() + 1);
        if (ls >> extra)
            detail::malformed("line " + std::to_string(lineno) + ": trailing tokens");
        const std::size_t t = intern(first);
        const std::size_t h = intern(head);
        edges.push_back({id, t, h});
    }
    return OrientedGraph(std::move(name), std::move(vertices), std::move(edges));
}

inline std::string read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw Error(ErrorCode::MalformedInput, "cannot open '" + path + "'", path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

/// JSON when the first non-blank character is '{', text otherwise.
inline OrientedGraph parse_graph(const std::string& text)
{
    const auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{')
        return parse_graph_json(text);
    return parse_graph_text(text);
}

inline OrientedGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

// ---------------------------------------------------------------------------
// Matrices

template <typename T>
Json matrix_to_json(const Matrix<T>& m)
{
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            entries.push_back(m(i, j));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline RealMatrix real_matrix_from_json(const Json& doc)
{
    if (!doc.is_object())
        detail::malformed("matrix must be a JSON object");
    const auto& r = detail::member(doc, "rows");
    const auto& c = detail::member(doc, "cols");
    const auto& entries = detail::member(doc, "entries");
    if (!r.is_number_unsigned() || !c.is_number_unsigned() || !entries.is_array())
        detail::malformed("matrix needs unsigned 'rows', 'cols' and an 'entries' array");
    RealMatrix m(r.get<std::size_t>(), c.get<std::size_t>());
    if (entries.size() != m.rows() * m.cols())
        throw Error(ErrorCode::DimensionMismatch, "entry count does not equal rows*cols");
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (!entries[k].is_number())
            detail::malformed("matrix entries must be numbers");
        m(k / m.cols(), k % m.cols()) = entries[k].get<double>();
    }
    return m;
}

// ---------------------------------------------------------------------------
// States

inline Sector parse_sector(const std::string& s)
{
    if (s == "vertex")
        return Sector::Vertex;
    if (s == "edge")
        return Sector::Edge;
    if (s == "mixed")
        return Sector::Mixed;
    throw Error(ErrorCode::InvalidArgument, "sector must be vertex, edge or mixed, not '" + s + "'", s);
}

inline Json state_to_json(const QuantumState& st)
{
    Json re = Json::array(), im = Json::array();
    for (const auto& a : st.amplitudes) {
        re.push_back(a.real());
        im.push_back(a.imag());
    }
    return {{"sector", std::string(to_string(st.sector))}, {"re", std::move(re)}, {"im", std::move(im)}};
}

/// "im" may be omitted for a real state.
inline QuantumState state_from_json(const Json& doc, const OrientedGraph& g)
{
    if (!doc.is_object())
        detail::malformed("state must be a JSON object");
    const Sector s = parse_sector(detail::string_field(doc, "sector"));
    const auto& re = detail::member(doc, "re");
    if (!re.is_array())
        detail::malformed("'re' must be an array");
    Json im = doc.contains("im") ? doc["im"] : Json::array();
    if (!im.is_array())
        detail::malformed("'im' must be an array");
    if (!im.empty() && im.size() != re.size())
        throw Error(ErrorCode::DimensionMismatch, "'re' and 'im' differ in length");
    std::vector<Amplitude> amps;
    for (std::size_t k = 0; k < re.size(); ++k) {
        if (!re[k].is_number() || (!im.empty() && !im[k].is_number()))
            detail::malformed("amplitudes must be numbers");
        amps.emplace_back(re[k].get<double>(), im.empty() ? 0.0 : im[k].get<double>());
    }
    return make_state(g, s, std::move(amps));
}

// ---------------------------------------------------------------------------
// Morse functions

inline MorseFunction morse_function_from_json(const Json& doc, const OrientedGraph& g)
{
    if (!doc.is_object())
        detail::malformed("Morse function must be a JSON object");
    MorseFunction f{std::vector<double>(g.vertex_count(), std::nan("")),
                    std::vector<double>(g.edge_count(), std::nan(""))};
    auto fill = [&](const char* key, std::vector<double>& out, bool vertices) {
        const auto& obj = detail::member(doc, key);
        if (!obj.is_object())
            detail::malformed(std::string("'") + key + "' must map ids to numbers");
        for (const auto& [id, value] : obj.items()) {
            if (!value.is_number())
                detail::malformed("value of '" + id + "' must be a number", id);
            const std::size_t i = vertices ? g.require_vertex(id) : g.require_edge(id);
            out[i] = value.get<double>();
        }
        for (std::size_t i = 0; i < out.size(); ++i)
            if (std::isnan(out[i])) {
                const std::string id = vertices ? g.vertices()[i] : g.edge(i).id;
                throw Error(ErrorCode::MalformedInput, "no value for '" + id + "'", id);
            }
    };
    fill("vertex_values", f.vertex_values, true);
    fill("edge_values", f.edge_values, false);
    return f;
}

inline Json morse_function_to_json(const OrientedGraph& g, const MorseFunction& f)
{
    Json vs = Json::object(), es = Json::object();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        vs[g.vertices()[v]] = f.vertex_values[v];
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        es[g.edge(e).id] = f.edge_values[e];
    return {{"vertex_values", std::move(vs)}, {"edge_values", std::move(es)}};
}

} // namespace graphsusy
