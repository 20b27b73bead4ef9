#include "sqg/graphs.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sqg/errors.hpp"

namespace sqg {

std::vector<std::vector<bool>> SimpleGraph::adjacency() const {
    std::vector<std::vector<bool>> adj(order(), std::vector<bool>(order(), false));
    for (auto [u, v] : edges) adj[u][v] = adj[v][u] = true;
    return adj;
}

SimpleGraph SimpleGraph::without_edge(std::size_t index) const {
    SimpleGraph g = *this;
    g.edges.erase(g.edges.begin() + index);
    return g;
}

SimpleGraph SimpleGraph::without_vertex(int v) const {
    SimpleGraph g;
    std::vector<int> remap(order(), -1);
    for (int i = 0; i < order(); ++i) {
        if (i == v) continue;
        remap[i] = (int)g.labels.size();
        g.labels.push_back(labels[i]);
        if (!colours.empty()) g.colours.push_back(colours[i]);
    }
    for (auto [a, b] : edges) {
        if (a == v || b == v) continue;
        g.edges.emplace_back(remap[a], remap[b]);
    }
    return g;
}

namespace {

bool disjoint(const Label& a, const Label& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        (a[i] < b[j] ? i : j)++;
    }
    return true;
}

SimpleGraph disjointness_graph(std::vector<Label> labels) {
    SimpleGraph g;
    g.labels = std::move(labels);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (disjoint(g.labels[u], g.labels[v])) g.edges.emplace_back(u, v);
    return g;
}

} // namespace

SimpleGraph kneser_graph(int n, int k) {
    if (k < 1 || n < 2 * k)
        throw parameter_error("kneser_graph: need k >= 1 and n >= 2k");
    std::vector<Label> all;
    Label cur;
    auto rec = [&](auto&& self, int next) -> void {
        if ((int)cur.size() == k) {
            all.push_back(cur);
            return;
        }
        for (int x = next; x + (k - (int)cur.size()) <= n + 1; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return disjointness_graph(std::move(all));
}

SimpleGraph schrijver_graph(int n, int k) {
    if (k < 1 || n < 2 * k + 1)
        throw parameter_error("schrijver_graph: need k >= 1 and n >= 2k+1");
    return disjointness_graph(vertex_sets(n, k));
}

SimpleGraph associated_graph(const Complex& k) {
    SimpleGraph g;
    std::vector<int> remap(k.id_bound(), -1);
    for (int v : k.vertex_ids()) {
        remap[v] = g.order();
        g.labels.push_back(k.vertex(v).label);
        g.colours.push_back(k.vertex(v).colour);
    }
    for (const Face& e : k.faces_of_dim(1))
        if (k.vertex(e[0]).colour != k.vertex(e[1]).colour)
            g.edges.emplace_back(remap[e[0]], remap[e[1]]);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Quotient quotient_complex(const Complex& k) {
    if (!k.has_antipode())
        throw structural_error("quotient_complex: complex carries no antipode");
    Quotient q;
    std::set<Label> label_set;
    for (int v : k.vertex_ids()) label_set.insert(k.vertex(v).label);
    q.labels.assign(label_set.begin(), label_set.end());
    auto index_of = [&](const Label& l) {
        return (int)(std::lower_bound(q.labels.begin(), q.labels.end(), l) -
                     q.labels.begin());
    };
    std::vector<int> vmap(k.id_bound(), -1);
    for (int v : k.vertex_ids()) vmap[v] = index_of(k.vertex(v).label);

    // one cell per antipodal facet pair; cells sharing a label image are kept
    // apart, the quotient being a generalised complex rather than a simplicial
    // one (suspension-heavy instances do produce such collisions)
    std::set<Face> reps;
    for (const Face& f : k.facets()) {
        Face m;
        for (int v : f) m.push_back(k.antipode(v));
        std::sort(m.begin(), m.end());
        reps.insert(std::min(f, m));
    }
    for (const Face& f : reps) {
        Face g;
        for (int v : f) g.push_back(vmap[v]);
        std::sort(g.begin(), g.end());
        q.facets.push_back(std::move(g));
    }
    std::sort(q.facets.begin(), q.facets.end());

    q.graph.labels = q.labels;
    std::set<std::pair<int, int>> edges;
    for (const Face& e : k.faces_of_dim(1))
        if (k.vertex(e[0]).colour != k.vertex(e[1]).colour) {
            int a = vmap[e[0]], b = vmap[e[1]];
            if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
        }
    q.graph.edges.assign(edges.begin(), edges.end());
    return q;
}

bool is_spanning_subgraph(const SimpleGraph& sub, const SimpleGraph& super) {
    std::map<Label, int> where;
    for (int i = 0; i < super.order(); ++i) where[super.labels[i]] = i;
    if (where.size() != (std::size_t)super.order()) return false;
    std::set<Label> sub_labels(sub.labels.begin(), sub.labels.end());
    if (sub_labels.size() != (std::size_t)sub.order() ||
        sub.order() != super.order())
        return false;
    for (const Label& l : sub.labels)
        if (!where.count(l)) return false;
    std::set<std::pair<int, int>> super_edges(super.edges.begin(), super.edges.end());
    for (auto [u, v] : sub.edges) {
        int a = where[sub.labels[u]], b = where[sub.labels[v]];
        if (!super_edges.count({std::min(a, b), std::max(a, b)})) return false;
    }
    return true;
}

} // namespace sqg
