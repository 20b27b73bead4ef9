#include "sqg/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "sqg/errors.hpp"
#include "sqg/graphs.hpp"
#include "sqg/homology.hpp"
#include "sqg/labels.hpp"

namespace sqg {

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

std::string label_str(const Label& a) {
    std::string s = "{";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a[i]);
    }
    return s + "}";
}

std::string vertex_str(const Complex& k, int v) {
    return std::string(1, colour_char(k.vertex(v).colour)) + label_str(k.vertex(v).label);
}

CheckResult pass(std::string name, std::string detail = "ok") {
    return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

// rebuild a facet list as a standalone complex with dense ids
Complex from_faces_only(const std::vector<Face>& faces) {
    std::vector<int> ids;
    for (const Face& f : faces) ids.insert(ids.end(), f.begin(), f.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    Complex c;
    for (int v : ids) c.add_vertex({v}, Colour::black);
    auto dense = [&](int v) {
        return (int)(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };
    std::vector<Face> remapped;
    for (const Face& f : faces) {
        Face g;
        for (int v : f) g.push_back(dense(v));
        remapped.push_back(std::move(g));
    }
    c.add_facets(std::move(remapped));
    return c;
}

std::string face_labels_str(const Complex& k, const Face& f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ' ';
        s += vertex_str(k, f[i]);
    }
    return s + "]";
}

} // namespace

CheckResult check_sphere(const Complex& k, int d, bool deep_links) {
    const std::string name = "sphere_d" + std::to_string(d);
    if (k.facets().empty()) return fail(name, "empty complex");
    for (const Face& f : k.facets())
        if ((int)f.size() != d + 1)
            return fail(name, "facet of dimension " + std::to_string(f.size() - 1) +
                                  " in a claimed " + std::to_string(d) + "-sphere");
    if (d == 0) {
        if (k.facets().size() != 2) return fail(name, "0-sphere needs two points");
        return pass(name);
    }

    // every (d-1)-face lies in exactly two facets
    std::vector<Face> ridges;
    for (const Face& f : k.facets())
        for (std::size_t skip = 0; skip < f.size(); ++skip) {
            Face r;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != skip) r.push_back(f[i]);
            ridges.push_back(std::move(r));
        }
    std::sort(ridges.begin(), ridges.end());
    for (std::size_t i = 0; i < ridges.size();) {
        std::size_t j = i;
        while (j < ridges.size() && ridges[j] == ridges[i]) ++j;
        if (j - i != 2) {
            std::ostringstream os;
            os << "ridge (";
            for (int v : ridges[i]) os << ' ' << v;
            os << " ) lies in " << (j - i) << " facets";
            return fail(name, os.str());
        }
        i = j;
    }

    // connectivity of the 1-skeleton
    auto ids = k.vertex_ids();
    std::map<int, std::vector<int>> adj;
    for (const Face& e : k.faces_of_dim(1)) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::set<int> seen{ids.front()};
    std::vector<int> stack{ids.front()};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (seen.insert(v).second) stack.push_back(v);
    }
    if (seen.size() != ids.size()) return fail(name, "not connected");

    long long chi = 0, sign = 1;
    for (std::size_t c : k.f_vector()) {
        chi += sign * (long long)c;
        sign = -sign;
    }
    long long want_chi = 1 + (d % 2 == 0 ? 1 : -1);
    if (chi != want_chi)
        return fail(name, "Euler characteristic " + std::to_string(chi) +
                              ", expected " + std::to_string(want_chi));

    std::vector<long long> betti = betti_gf2(k.facets());
    std::vector<long long> want(d + 1, 0);
    want[0] = want[d] = 1;
    if (betti != want) {
        std::ostringstream os;
        os << "GF(2) Betti numbers";
        for (long long b : betti) os << ' ' << b;
        return fail(name, os.str());
    }

    if (d <= 3 || deep_links) {
        for (int v : ids) {
            std::vector<Face> link;
            for (std::size_t fi : k.facets_containing(v)) {
                Face g;
                for (int u : k.facets()[fi])
                    if (u != v) g.push_back(u);
                link.push_back(std::move(g));
            }
            CheckResult sub = check_sphere(from_faces_only(link), d - 1, deep_links);
            if (!sub.pass)
                return fail(name, "link of vertex " + std::to_string(v) + ": " +
                                      sub.detail);
        }
    }
    return pass(name);
}

CheckResult check_antisymmetry(const Complex& k) {
    const std::string name = "antisymmetry";
    if (!k.has_antipode()) return fail(name, "no antipode installed");
    for (int v : k.vertex_ids()) {
        int a = k.antipode(v);
        if (a == v) return fail(name, "fixed point at " + vertex_str(k, v));
        if (k.antipode(a) != v) return fail(name, "not an involution at id " +
                                                      std::to_string(v));
        if (k.vertex(a).colour == k.vertex(v).colour)
            return fail(name, "antipode keeps the colour of " + vertex_str(k, v));
        if (k.vertex(a).label != k.vertex(v).label)
            return fail(name, "antipode changes the label of " + vertex_str(k, v));
    }
    std::vector<Face> mapped;
    for (const Face& f : k.facets()) {
        Face g;
        for (int v : f) g.push_back(k.antipode(v));
        std::sort(g.begin(), g.end());
        mapped.push_back(std::move(g));
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped != k.facets()) return fail(name, "antipode does not map facets onto facets");
    for (const Face& f : k.facets())
        for (int v : f)
            if (std::binary_search(f.begin(), f.end(), k.antipode(v)))
                return fail(name, "face " + face_labels_str(k, f) +
                                      " contains an antipodal pair");
    return pass(name);
}

CheckResult check_no_monochromatic_facets(const Complex& k) {
    const std::string name = "bichromatic_facets";
    for (const Face& f : k.facets()) {
        bool black = false, white = false;
        for (int v : f)
            (k.vertex(v).colour == Colour::black ? black : white) = true;
        if (!black || !white)
            return fail(name, "monochromatic facet " + face_labels_str(k, f));
    }
    return pass(name);
}

CheckResult check_edge_label_disjointness(const Complex& k) {
    const std::string name = "edge_disjointness";
    for (const Face& e : k.faces_of_dim(1)) {
        if (k.vertex(e[0]).colour == k.vertex(e[1]).colour) continue;
        const Label& a = k.vertex(e[0]).label;
        const Label& b = k.vertex(e[1]).label;
        Label meet;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(meet));
        if (!meet.empty())
            return fail(name, "edge " + face_labels_str(k, e) +
                                  " joins intersecting labels");
    }
    return pass(name);
}

CheckResult check_label_census(const Complex& k, int n, int kk) {
    const std::string name = "label_census";
    auto family = vertex_sets(n, kk);
    std::map<std::pair<Label, Colour>, int> seen;
    for (int v : k.vertex_ids())
        ++seen[{k.vertex(v).label, k.vertex(v).colour}];
    for (const Label& a : family)
        for (Colour c : {Colour::black, Colour::white}) {
            int got = seen.count({a, c}) ? seen[{a, c}] : 0;
            if (got != 1)
                return fail(name, std::string(1, colour_char(c)) + label_str(a) +
                                      " appears " + std::to_string(got) + " times");
        }
    if (k.vertex_count() != 2 * family.size())
        return fail(name, "stray vertices outside the family");
    return pass(name, std::to_string(2 * family.size()) + " vertices");
}

CheckResult check_edge_levels(const Complex& k, int n) {
    const std::string name = "edge_levels";
    for (const Face& e : k.faces_of_dim(1)) {
        if (k.vertex(e[0]).colour == k.vertex(e[1]).colour) continue;
        int la = level(n, k.vertex(e[0]).label);
        int lb = level(n, k.vertex(e[1]).label);
        if (la > lb) std::swap(la, lb);
        if (lb - la > 1 || (la == lb && la != 0))
            return fail(name, "edge " + face_labels_str(k, e) + " has levels " +
                                  std::to_string(la) + "," + std::to_string(lb));
    }
    return pass(name);
}

CheckResult check_core_avoidance(const Complex& k, int kk) {
    const std::string name = "core_avoidance";
    if (kk < 2) return pass(name, "vacuous for k=1");
    for (Colour side : {Colour::black, Colour::white}) {
        // core values realized on the other side
        std::set<Label> cores;
        for (int v : k.vertex_ids())
            if (k.vertex(v).colour == opposite(side))
                cores.insert(core(k.vertex(v).label));
        for (int v : k.vertex_ids()) {
            if (k.vertex(v).colour != side) continue;
            bool avoids_all = true;
            for (const Label& c : cores) {
                bool found = false;
                for (std::size_t fi : k.facets_containing(v)) {
                    bool hit = false;
                    for (int u : k.facets()[fi])
                        if (k.vertex(u).colour == opposite(side) &&
                            core(k.vertex(u).label) == c) {
                            hit = true;
                            break;
                        }
                    if (!hit) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    avoids_all = false;
                    break;
                }
            }
            bool singular = is_singular(k.vertex(v).label, kk);
            if (avoids_all == singular)
                return fail(name, vertex_str(k, v) + (singular
                                      ? " is singular yet avoids every core value"
                                      : " is nonsingular yet trapped by a core value"));
        }
    }
    return pass(name);
}

CheckResult check_singular_neighbour_cores(const Complex& k, int kk) {
    const std::string name = "singular_neighbour_cores";
    for (const Face& e : k.faces_of_dim(1)) {
        if (k.vertex(e[0]).colour != k.vertex(e[1]).colour) continue;
        const Label& a = k.vertex(e[0]).label;
        const Label& b = k.vertex(e[1]).label;
        if ((is_singular(a, kk) || is_singular(b, kk)) && core(a) != core(b))
            return fail(name, "edge " + face_labels_str(k, e) +
                                  " breaks core agreement at a singular vertex");
    }
    return pass(name);
}

CheckResult check_subcomplex(const Complex& sub, const Complex& super) {
    const std::string name = "subcomplex";
    std::map<int, int> to_super;
    for (int v : sub.vertex_ids()) {
        int t = super.find_vertex(sub.vertex(v).colour, sub.vertex(v).label);
        if (t == -1)
            return fail(name, "vertex " + vertex_str(sub, v) + " missing above");
        to_super[v] = t;
    }
    for (const Face& f : sub.facets()) {
        Face g;
        for (int v : f) g.push_back(to_super[v]);
        std::sort(g.begin(), g.end());
        if (!super.has_face(g))
            return fail(name, "facet " + face_labels_str(sub, f) + " missing above");
    }
    return pass(name);
}

CheckResult check_quotient_faces(const Complex& k) {
    const std::string name = "quotient_faces";
    if (!k.has_antipode()) return fail(name, "no antipode installed");
    // facets must pair up under the antipode, and none may touch both copies
    // of a label; label sets shared between distinct pairs are fine (the
    // quotient is a generalised complex) but worth counting
    std::set<Face> facet_set(k.facets().begin(), k.facets().end());
    std::set<Face> reps;
    for (const Face& f : k.facets()) {
        std::set<Label> seen;
        for (int v : f)
            if (!seen.insert(k.vertex(v).label).second)
                return fail(name, "facet " + face_labels_str(k, f) +
                                      " contains an antipodal pair");
        Face image;
        for (int v : f) image.push_back(k.antipode(v));
        std::sort(image.begin(), image.end());
        if (!facet_set.count(image))
            return fail(name, "antipodal image of " + face_labels_str(k, f) +
                                  " is not a facet");
        reps.insert(std::min(f, image));
    }
    std::map<std::vector<Label>, int> by_labels;
    for (const Face& f : reps) {
        std::vector<Label> key;
        for (int v : f) key.push_back(k.vertex(v).label);
        std::sort(key.begin(), key.end());
        ++by_labels[key];
    }
    std::size_t shared = 0;
    for (const auto& [key, count] : by_labels)
        if (count > 1) ++shared;
    return pass(name, std::to_string(reps.size()) + " facet orbits, " +
                          std::to_string(shared) + " label sets shared");
}

CheckResult check_quadrangulation(const Complex& k) {
    const std::string name = "quadrangulation";
    if (!k.has_antipode()) return fail(name, "no antipode installed");
    Quotient q = quotient_complex(k);
    std::set<std::pair<int, int>> edges(q.graph.edges.begin(), q.graph.edges.end());
    auto index_of = [&](const Label& l) {
        return (int)(std::lower_bound(q.labels.begin(), q.labels.end(), l) -
                     q.labels.begin());
    };
    // the quotient graph restricted to the 1-faces of any quotient cell must
    // be complete bipartite with an edge; for a cell with all labels distinct
    // that is the full bipartite graph between the lifted colour classes
    for (const Face& f : k.facets()) {
        std::set<Label> all, blacks, whites;
        for (int v : f) {
            const Vertex& p = k.vertex(v);
            if (!all.insert(p.label).second)
                return fail(name, "facet " + face_labels_str(k, f) +
                                      " maps to a cell with a repeated vertex");
            (p.colour == Colour::black ? blacks : whites).insert(p.label);
        }
        if (blacks.empty() || whites.empty())
            return fail(name, "facet " + face_labels_str(k, f) +
                                  " is monochromatic, its restriction has no edge");
        for (const Label& b : blacks)
            for (const Label& w : whites) {
                int x = index_of(b), y = index_of(w);
                if (!edges.count({std::min(x, y), std::max(x, y)}))
                    return fail(name, "pair " + label_str(b) + " " + label_str(w) +
                                          " is missing from the quotient graph");
            }
    }
    return pass(name, std::to_string(q.facets.size()) +
                          " cells restrict to complete bipartite with an edge");
}

CheckResult check_quotient_homology(const Complex& k, int d) {
    const std::string name = "quotient_homology";
    if (!k.has_antipode()) return fail(name, "no antipode installed");
    std::vector<int> anti(k.id_bound(), -1);
    for (int v : k.vertex_ids()) anti[v] = k.antipode(v);
    std::vector<long long> betti = betti_gf2_orbits(k.facets(), anti);
    std::vector<long long> want(d + 1, 1);
    if (betti != want) {
        std::ostringstream os;
        os << "GF(2) Betti numbers";
        for (long long b : betti) os << ' ' << b;
        os << ", expected all 1 up to degree " << d;
        return fail(name, os.str());
    }
    return pass(name);
}

Report verify_sphere(const Complex& k, int n, int kk, bool deep_links) {
    int d = n - 2 * kk;
    Report r;
    r.checks.push_back(check_sphere(k, d, deep_links));
    r.checks.push_back(check_antisymmetry(k));
    r.checks.push_back(check_label_census(k, n, kk));
    r.checks.push_back(check_no_monochromatic_facets(k));
    r.checks.push_back(check_edge_label_disjointness(k));
    r.checks.push_back(check_edge_levels(k, n));
    r.checks.push_back(check_core_avoidance(k, kk));
    r.checks.push_back(check_singular_neighbour_cores(k, kk));
    r.checks.push_back(check_quotient_faces(k));
    r.checks.push_back(check_quadrangulation(k));
    r.checks.push_back(check_quotient_homology(k, d));
    return r;
}

} // namespace sqg
