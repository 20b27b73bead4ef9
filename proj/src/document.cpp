#include "sqg/document.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "sqg/errors.hpp"
#include "sqg/labels.hpp"

namespace sqg {

namespace {

constexpr const char* kGenerator = "sqg";
constexpr const char* kVersion = "1.0";

std::string colour_name(Colour c) { return c == Colour::black ? "black" : "white"; }

std::string tagged_label(const Vertex& v) {
    std::string s(1, colour_char(v.colour));
    s += "{";
    for (size_t i = 0; i < v.label.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v.label[i]);
    }
    return s + "}";
}

std::string plain_label(const Label& l) {
    std::string s = "{";
    for (size_t i = 0; i < l.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(l[i]);
    }
    return s + "}";
}

}  // namespace

nlohmann::ordered_json to_document(const Complex& c, int n, int k) {
    std::vector<int> order = c.vertex_ids();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Vertex& va = c.vertex(a);
        const Vertex& vb = c.vertex(b);
        if (va.colour != vb.colour) return va.colour == Colour::black;
        return lex_compare(va.label, vb.label) < 0;
    });
    std::map<int, int> new_id;
    for (size_t i = 0; i < order.size(); ++i) new_id[order[i]] = static_cast<int>(i) + 1;

    nlohmann::ordered_json doc;
    doc["meta"] = {{"generator", kGenerator}, {"version", kVersion}};
    doc["n"] = n;
    doc["k"] = k;
    doc["dim"] = c.dim();

    nlohmann::ordered_json verts = nlohmann::ordered_json::array();
    for (int v : order) {
        const Vertex& p = c.vertex(v);
        nlohmann::ordered_json jv;
        jv["id"] = new_id[v];
        jv["label"] = p.label;
        jv["color"] = colour_name(p.colour);
        verts.push_back(std::move(jv));
    }
    doc["vertices"] = std::move(verts);

    std::vector<Face> facets;
    for (const Face& f : c.facets()) {
        Face g;
        for (int v : f) g.push_back(new_id[v]);
        std::sort(g.begin(), g.end());
        facets.push_back(std::move(g));
    }
    std::sort(facets.begin(), facets.end());
    doc["facets"] = facets;

    std::vector<std::pair<int, int>> pairs;
    if (c.has_antipode())
        for (int v : c.vertex_ids()) {
            int w = c.antipode(v);
            if (new_id[v] < new_id[w]) pairs.push_back({new_id[v], new_id[w]});
        }
    std::sort(pairs.begin(), pairs.end());
    nlohmann::ordered_json anti = nlohmann::ordered_json::array();
    for (auto [a, b] : pairs) anti.push_back(nlohmann::ordered_json::array({a, b}));
    doc["antipode"] = std::move(anti);
    return doc;
}

std::string document_to_string(const nlohmann::ordered_json& doc) {
    return doc.dump(2) + "\n";
}

ParsedDocument from_document(const nlohmann::ordered_json& doc) {
    auto fail = [](const std::string& what) -> void {
        throw parameter_error("document: " + what);
    };
    if (!doc.is_object()) fail("not an object");
    for (const char* field : {"meta", "n", "k", "dim", "vertices", "facets", "antipode"})
        if (!doc.contains(field)) fail(std::string("missing field '") + field + "'");
    if (!doc["n"].is_number_integer() || !doc["k"].is_number_integer() ||
        !doc["dim"].is_number_integer())
        fail("n, k, dim must be integers");

    ParsedDocument out;
    out.n = doc["n"].get<int>();
    out.k = doc["k"].get<int>();

    const auto& verts = doc["vertices"];
    if (!verts.is_array() || verts.empty()) fail("vertices must be a nonempty array");
    const Vertex* prev = nullptr;
    std::vector<Vertex> parsed;
    for (size_t i = 0; i < verts.size(); ++i) {
        const auto& jv = verts[i];
        if (!jv.is_object() || !jv.contains("id") || !jv.contains("label") ||
            !jv.contains("color"))
            fail("vertex " + std::to_string(i) + " malformed");
        if (!jv["id"].is_number_integer() || jv["id"].get<int>() != static_cast<int>(i) + 1)
            fail("vertex ids must be dense from 1 in order");
        if (!jv["label"].is_array()) fail("vertex label must be an array");
        Label l;
        for (const auto& x : jv["label"]) {
            if (!x.is_number_integer()) fail("label entries must be integers");
            l.push_back(x.get<int>());
        }
        if (!std::is_sorted(l.begin(), l.end()) ||
            std::adjacent_find(l.begin(), l.end()) != l.end())
            fail("label must be strictly ascending");
        if (!jv["color"].is_string()) fail("color must be a string");
        std::string cs = jv["color"].get<std::string>();
        if (cs != "black" && cs != "white") fail("color must be black or white");
        Vertex v{std::move(l), cs == "black" ? Colour::black : Colour::white, false};
        if (prev) {
            bool ok = prev->colour != v.colour
                          ? prev->colour == Colour::black
                          : lex_compare(prev->label, v.label) < 0;
            if (!ok) fail("vertices not in canonical (color, label) order");
        }
        parsed.push_back(v);
        prev = &parsed.back();
    }

    for (const Vertex& v : parsed) out.complex.add_vertex(v.label, v.colour);
    const int count = static_cast<int>(parsed.size());

    const auto& jfacets = doc["facets"];
    if (!jfacets.is_array() || jfacets.empty()) fail("facets must be a nonempty array");
    std::vector<Face> facets;
    for (const auto& jf : jfacets) {
        if (!jf.is_array() || jf.empty()) fail("facet must be a nonempty array");
        Face f;
        for (const auto& x : jf) {
            if (!x.is_number_integer()) fail("facet entries must be integers");
            int id = x.get<int>();
            if (id < 1 || id > count) fail("facet id out of range");
            f.push_back(id - 1);
        }
        if (!std::is_sorted(f.begin(), f.end()) ||
            std::adjacent_find(f.begin(), f.end()) != f.end())
            fail("facet ids must be strictly ascending");
        facets.push_back(std::move(f));
    }
    out.complex.add_facets(facets);
    if (out.complex.facets() != facets)
        fail("facets not maximal or not lexicographically sorted");
    if (doc["dim"].get<int>() != out.complex.dim()) fail("dim does not match facets");

    const auto& janti = doc["antipode"];
    if (!janti.is_array()) fail("antipode must be an array");
    if (!janti.empty()) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& jp : janti) {
            if (!jp.is_array() || jp.size() != 2 || !jp[0].is_number_integer() ||
                !jp[1].is_number_integer())
                fail("antipode entries must be id pairs");
            int a = jp[0].get<int>(), b = jp[1].get<int>();
            if (a < 1 || a > count || b < 1 || b > count) fail("antipode id out of range");
            pairs.push_back({a - 1, b - 1});
        }
        try {
            out.complex.set_antipode(pairs);
        } catch (const structural_error& e) {
            fail(e.what());
        }
    }
    return out;
}

ParsedDocument parse_document_string(const std::string& text) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parameter_error(std::string("document: invalid JSON: ") + e.what());
    }
    return from_document(doc);
}

std::string to_dimacs(const SimpleGraph& g) {
    std::ostringstream out;
    out << "p edge " << g.order() << " " << g.edges.size() << "\n";
    std::vector<std::pair<int, int>> edges = g.edges;
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

std::string dimacs_label_map(const SimpleGraph& g) {
    std::ostringstream out;
    for (int v = 0; v < g.order(); ++v) {
        out << v + 1 << " ";
        if (!g.colours.empty()) out << colour_char(g.colours[v]);
        out << plain_label(g.labels[v]) << "\n";
    }
    return out.str();
}

std::string facets_text(const Complex& c) {
    std::vector<std::vector<std::string>> lines;
    for (const Face& f : c.facets()) {
        std::vector<std::string> parts;
        for (int v : f) parts.push_back(tagged_label(c.vertex(v)));
        std::sort(parts.begin(), parts.end());
        lines.push_back(std::move(parts));
    }
    std::sort(lines.begin(), lines.end());
    std::ostringstream out;
    for (const auto& parts : lines) {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) out << " ";
            out << parts[i];
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace sqg
