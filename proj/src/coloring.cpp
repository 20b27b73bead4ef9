#include <algorithm>

#include "sqg/errors.hpp"
#include "sqg/graphs.hpp"

namespace sqg {

namespace {

struct Search {
    int n;
    std::vector<std::vector<bool>> adj;
    std::vector<int> degree;
    std::vector<int> colour;  // -1 = unassigned
    int limit;                // palette size
    long long budget;         // remaining decisions, <0 = unbounded
    long long used = 0;
    bool out_of_budget = false;

    explicit Search(const SimpleGraph& g, int colours, long long max_nodes)
        : n(g.order()), adj(g.adjacency()), degree(n, 0), colour(n, -1),
          limit(colours), budget(max_nodes) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (adj[u][v]) ++degree[u];
    }

    // most saturated first; break ties by degree, then index
    int pick() const {
        int best = -1, best_sat = -1;
        for (int u = 0; u < n; ++u) {
            if (colour[u] != -1) continue;
            int sat = 0;
            std::vector<bool> seen(limit, false);
            for (int v = 0; v < n; ++v)
                if (adj[u][v] && colour[v] != -1 && !seen[colour[v]]) {
                    seen[colour[v]] = true;
                    ++sat;
                }
            if (sat > best_sat || (sat == best_sat && degree[u] > degree[best]))
                best = u, best_sat = sat;
        }
        return best;
    }

    bool run(int assigned, int palette_used) {
        if (assigned == n) return true;
        int u = pick();
        std::vector<bool> banned(limit, false);
        for (int v = 0; v < n; ++v)
            if (adj[u][v] && colour[v] != -1) banned[colour[v]] = true;
        // allowing at most one brand-new colour kills palette symmetry
        int tryable = std::min(limit, palette_used + 1);
        for (int c = 0; c < tryable; ++c) {
            if (banned[c]) continue;
            if (budget >= 0 && used >= budget) {
                out_of_budget = true;
                return false;
            }
            ++used;
            colour[u] = c;
            if (run(assigned + 1, std::max(palette_used, c + 1))) return true;
            colour[u] = -1;
            if (out_of_budget) return false;
        }
        return false;
    }
};

int greedy_clique(const SimpleGraph& g) {
    auto adj = g.adjacency();
    std::vector<int> order(g.order());
    for (int i = 0; i < g.order(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int da = (int)std::count(adj[a].begin(), adj[a].end(), true);
        int db = (int)std::count(adj[b].begin(), adj[b].end(), true);
        return da > db;
    });
    std::vector<int> clique;
    for (int u : order) {
        bool fits = true;
        for (int v : clique)
            if (!adj[u][v]) {
                fits = false;
                break;
            }
        if (fits) clique.push_back(u);
    }
    return (int)clique.size();
}

int greedy_dsatur_bound(const SimpleGraph& g) {
    Search s(g, g.order() + 1, -1);
    int used = 0;
    for (int step = 0; step < g.order(); ++step) {
        int u = s.pick();
        std::vector<bool> banned(used + 2, false);
        for (int v = 0; v < g.order(); ++v)
            if (s.adj[u][v] && s.colour[v] != -1) banned[s.colour[v]] = true;
        int c = 0;
        while (banned[c]) ++c;
        s.colour[u] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

} // namespace

int colourable(const SimpleGraph& g, int colours, long long max_nodes,
               long long* nodes_used) {
    if (colours < 0) throw parameter_error("colourable: negative palette");
    if (g.order() == 0) return 1;
    if (colours == 0) return 0;
    Search s(g, colours, max_nodes);
    bool ok = s.run(0, 0);
    if (nodes_used) *nodes_used = s.used;
    if (!ok && s.out_of_budget) return -1;
    return ok ? 1 : 0;
}

ChromaticResult chromatic_number(const SimpleGraph& g, long long max_nodes) {
    ChromaticResult r;
    if (g.order() == 0) return r;
    int lb = std::max(1, greedy_clique(g));
    int ub = greedy_dsatur_bound(g);
    for (int c = lb; c < ub; ++c) {
        long long used = 0;
        long long rem = max_nodes < 0 ? -1 : std::max(0ll, max_nodes - r.nodes);
        int ans = colourable(g, c, rem, &used);
        r.nodes += used;
        if (ans == 1) {
            ub = c;
            break;
        }
        if (ans == -1) {  // c undecided: everything below c is refuted
            r.lower = c;
            r.upper = ub;
            return r;
        }
        lb = c + 1;
    }
    r.lower = r.upper = ub;
    return r;
}

namespace {

CriticalityResult critical_sweep(const SimpleGraph& g, long long max_nodes,
                                 bool vertices) {
    CriticalityResult r;
    ChromaticResult chi = chromatic_number(g, max_nodes);
    if (!chi.exact()) return r;  // conclusive stays false
    r.chi = chi.upper;
    r.conclusive = true;
    std::size_t count = vertices ? (std::size_t)g.order() : g.edges.size();
    for (std::size_t i = 0; i < count; ++i) {
        SimpleGraph h = vertices ? g.without_vertex((int)i) : g.without_edge(i);
        int drop = colourable(h, r.chi - 1, max_nodes, nullptr);
        if (drop == -1) {
            r.conclusive = false;
            return r;
        }
        if (drop == 1 && !vertices) {
            // deleting one edge lowers the chromatic number by at most one
            int two = colourable(h, r.chi - 2, max_nodes, nullptr);
            if (two == -1) {
                r.conclusive = false;
                return r;
            }
            if (two == 1)
                throw structural_error(
                    "edge deletion dropped the chromatic number by two");
        }
        if (drop == 0) r.robust_edges.push_back(i);
    }
    r.critical = r.robust_edges.empty();
    return r;
}

} // namespace

CriticalityResult check_edge_critical(const SimpleGraph& g, long long max_nodes) {
    return critical_sweep(g, max_nodes, false);
}

CriticalityResult check_vertex_critical(const SimpleGraph& g, long long max_nodes) {
    return critical_sweep(g, max_nodes, true);
}

} // namespace sqg
