#include "sqg/construct.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "sqg/errors.hpp"
#include "sqg/labels.hpp"

namespace sqg {

namespace {

std::string label_str(const Label& l) {
    std::string s = "{";
    for (size_t i = 0; i < l.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(l[i]);
    }
    return s + "}";
}

std::string vertex_str(const Complex& c, int id) {
    const Vertex& v = c.vertex(id);
    return std::string(1, colour_char(v.colour)) + label_str(v.label);
}

// Drop u and v from a sorted id list; if either was present, insert w.
void replace_ids(std::vector<int>& ids, int u, int v, int w) {
    bool had = false;
    auto drop = [&](int x) {
        auto it = std::lower_bound(ids.begin(), ids.end(), x);
        if (it != ids.end() && *it == x) {
            ids.erase(it);
            had = true;
        }
    };
    drop(u);
    drop(v);
    if (had) ids.insert(std::lower_bound(ids.begin(), ids.end(), w), w);
}

// Contract the edge {u,v} while keeping the shell's boundary bookkeeping in
// step: membership lists and the outer-boundary faces follow the survivor.
int shell_contract(Shell& s, int u, int v, const Label& label) {
    int w = s.complex.contract_edge(u, v, label);
    replace_ids(s.interior_boundary, u, v, w);
    replace_ids(s.exterior_boundary, u, v, w);
    for (Face& f : s.exterior_facets) {
        bool touched = false;
        for (int& x : f)
            if (x == u || x == v) {
                x = w;
                touched = true;
            }
        if (touched) {
            std::sort(f.begin(), f.end());
            if (std::adjacent_find(f.begin(), f.end()) != f.end())
                throw construction_error("contract: outer boundary face collapsed");
        }
    }
    return w;
}

struct Surface {
    std::vector<int> ids;
    std::vector<Face> faces;
};

// Recompute the inner surface of a d-dimensional thickening in progress: the
// (d-1)-faces lying in at most one d-cell, minus the outer boundary proper.
// Outer faces not yet built over count as inner (the two surfaces coincide
// there, the thickening is pinched). Anything else exposed is an error.
Surface inner_surface(const Shell& s, int d) {
    std::set<Face> eb(s.exterior_facets.begin(), s.exterior_facets.end());
    std::map<Face, int> cover;
    std::set<Face> surface;
    for (const Face& f : s.complex.facets()) {
        if (static_cast<int>(f.size()) == d + 1) {
            for (size_t skip = 0; skip < f.size(); ++skip) {
                Face g;
                for (size_t i = 0; i < f.size(); ++i)
                    if (i != skip) g.push_back(f[i]);
                ++cover[g];
            }
        } else if (static_cast<int>(f.size()) == d) {
            // a maximal (d-1)-face: legal only on the untouched outer sheet
            if (!eb.count(f))
                throw construction_error("surface: exposed flap off the outer boundary");
            surface.insert(f);
        } else {
            throw construction_error("surface: facet of unexpected dimension");
        }
    }
    for (const auto& [g, c] : cover) {
        if (eb.count(g)) {
            if (c >= 2)
                throw construction_error("surface: solid on both sides of the outer boundary");
            continue;  // covered exactly once: outer boundary proper
        }
        if (c == 1)
            surface.insert(g);
        else if (c > 2)
            throw construction_error("surface: ridge lies in more than two cells");
    }
    Surface out;
    std::set<int> ids;
    for (const Face& g : surface) ids.insert(g.begin(), g.end());
    out.ids.assign(ids.begin(), ids.end());
    out.faces.assign(surface.begin(), surface.end());
    return out;
}

std::set<std::pair<char, Label>> colour_label_set(const Complex& c,
                                                  const std::vector<int>& ids) {
    std::set<std::pair<char, Label>> out;
    for (int v : ids) {
        const Vertex& p = c.vertex(v);
        out.insert({colour_char(p.colour), p.label});
    }
    return out;
}

}  // namespace

Complex build_base_cycle(int k) {
    if (k < 1) throw parameter_error("base cycle: k >= 1 required");
    const int m = 2 * k + 1;
    Complex c;
    for (int p = 0; p < 2 * m; ++p)
        c.add_vertex(base_independent_set(k, (p % m) + 1),
                     p % 2 == 0 ? Colour::black : Colour::white);
    std::vector<Face> edges;
    for (int p = 0; p < 2 * m; ++p) {
        Face e{p, (p + 1) % (2 * m)};
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    c.add_facets(std::move(edges));
    std::vector<std::pair<int, int>> pairs;
    for (int p = 0; p < m; ++p) pairs.push_back({p, p + m});
    c.set_antipode(pairs);
    return c;
}

const Complex& Builder::sphere(int n, int k) {
    auto key = std::make_pair(n, k);
    auto it = spheres_.find(key);
    if (it != spheres_.end()) return it->second;
    Complex c = make_sphere(n, k);
    return spheres_.emplace(key, std::move(c)).first->second;
}

const Shell& Builder::shell(int n, int k, Colour c) {
    auto key = std::make_tuple(n, k, static_cast<int>(c));
    auto it = shells_.find(key);
    if (it != shells_.end()) return it->second;
    Shell s = make_shell(n, k, c);
    return shells_.emplace(key, std::move(s)).first->second;
}

const Ball& Builder::ball(int n, int k, Colour c) {
    auto key = std::make_tuple(n, k, static_cast<int>(c));
    auto it = balls_.find(key);
    if (it != balls_.end()) return it->second;
    Ball b = make_ball(n, k, c);
    return balls_.emplace(key, std::move(b)).first->second;
}

Shell Builder::make_shell(int n, int k, Colour c) {
    if (k < 1 || n < 2 * k + 2)
        throw parameter_error("shell: need k >= 1 and n >= 2k+2, got n=" +
                              std::to_string(n) + " k=" + std::to_string(k));
    const int d = n - 2 * k;

    Shell s;
    s.complex = sphere(n - 1, k);
    s.complex.clear_antipode();
    s.exterior_boundary = s.complex.vertex_ids();
    s.interior_boundary = s.exterior_boundary;
    s.exterior_facets = s.complex.facets();

    if (k == 1) {
        // degenerate thickening: cone the whole circuit sphere from one apex
        Complex base = s.complex;
        int apex = s.complex.add_vertex({n}, c);
        s.complex.join_with_vertex(apex, base);
        s.interior_boundary = {apex};
        for (const Face& f : s.exterior_facets)
            if (!s.complex.has_face(f))
                throw construction_error("shell: outer boundary face lost");
        for (const Face& f : s.complex.facets())
            if (static_cast<int>(f.size()) != d + 1)
                throw construction_error("shell: not pure after coning");
        return s;
    }

    // label families driving the passes: the level-zero labels are exactly
    // those legal one circuit step down, the rest have positive level
    std::vector<Label> v_zero = vertex_sets(n - 2, k);
    std::set<Label> v_zero_set(v_zero.begin(), v_zero.end());
    std::vector<Label> v_plus;
    for (const Label& a : vertex_sets(n - 1, k))
        if (!v_zero_set.count(a)) v_plus.push_back(a);

    if (n == 2 * k + 2) {
        // first thickening: clones over the nonsingular primary vertices,
        // then two cone caps closing the band over the singular labels
        const int m = 2 * k + 1;
        for (int j = 3; j <= m; ++j) {
            Label lab = base_independent_set(k, j);
            int v = s.complex.find_vertex(c, lab);
            if (v == -1)
                throw construction_error("shell: seed vertex missing for " + label_str(lab));
            add_clone(s, v, clone_label(n, lab));
        }
        auto cap = [&](int apex_j, int p1, int p2, int p3) {
            int apex = s.complex.find_vertex(c, clone_label(n, base_independent_set(k, apex_j)));
            int u1 = s.complex.find_vertex(opposite(c), base_independent_set(k, p1));
            int u2 = s.complex.find_vertex(c, base_independent_set(k, p2));
            int u3 = s.complex.find_vertex(opposite(c), base_independent_set(k, p3));
            if (apex == -1 || u1 == -1 || u2 == -1 || u3 == -1)
                throw construction_error("shell: cap vertex missing");
            Complex path = s.complex.induced({u1, u2, u3});
            std::set<Face> got(path.facets().begin(), path.facets().end());
            Face e1{std::min(u1, u2), std::max(u1, u2)};
            Face e2{std::min(u2, u3), std::max(u2, u3)};
            if (got != std::set<Face>{e1, e2})
                throw construction_error("shell: cap seat is not a two-edge path");
            s.complex.join_with_vertex(apex, path);
        };
        cap(3, m, 1, 2);
        cap(m, 1, 2, 3);
    } else {
        // clone over every positive-level primary vertex
        for (const Label& a : v_plus) {
            int v = s.complex.find_vertex(c, a);
            if (v == -1)
                throw construction_error("shell: primary vertex missing for " + label_str(a));
            add_clone(s, v, clone_label(n, a));
        }
        // level-zero primary vertices get temporary clones which then merge
        // into the clone already standing over the lifted label
        std::map<Label, int> pending;
        auto clone_primary = [&](const Label& a) {
            int v = s.complex.find_vertex(c, a);
            if (v == -1)
                throw construction_error("shell: primary vertex missing for " + label_str(a));
            pending[a] = add_clone(s, v, a, true);
        };
        auto merge_primary = [&](const Label& a) {
            Label target = clone_label(n, a);
            int v = s.complex.find_vertex(c, target);
            if (v == -1)
                throw construction_error("shell: no standing clone " + label_str(target) +
                                         " to absorb " + label_str(a));
            shell_contract(s, pending.at(a), v, target);
        };
        if (opts_.interleave_contractions) {
            for (const Label& a : v_zero) {
                clone_primary(a);
                merge_primary(a);
            }
        } else {
            for (const Label& a : v_zero) clone_primary(a);
            for (const Label& a : v_zero) merge_primary(a);
        }

        // after the primary merge the inner surface must consist of the
        // standing clones plus every original secondary vertex that is not
        // singular; the two singular secondary vertices are buried
        Surface mid = inner_surface(s, d);
        {
            std::set<std::pair<char, Label>> want;
            for (const Label& a : v_plus) {
                want.insert({colour_char(c), clone_label(n, a)});
                want.insert({colour_char(opposite(c)), a});
            }
            for (const Label& a : v_zero)
                if (!is_singular(a, k)) want.insert({colour_char(opposite(c)), a});
            if (colour_label_set(s.complex, mid.ids) != want)
                throw construction_error("shell: inner surface wrong after primary merge");
        }
        s.interior_boundary = mid.ids;

        // the same clone-and-merge over the secondary colour, skipping the
        // buried singular labels; merges pull each temporary into the
        // original vertex carrying the lifted label one step down
        pending.clear();
        auto clone_secondary = [&](const Label& b) {
            int v = s.complex.find_vertex(opposite(c), b);
            if (v == -1)
                throw construction_error("shell: secondary vertex missing for " + label_str(b));
            pending[b] = add_clone(s, v, b, true);
        };
        auto merge_secondary = [&](const Label& b) {
            Label target = clone_label(n - 1, b);
            int v = s.complex.find_vertex(opposite(c), target);
            if (v == -1)
                throw construction_error("shell: no secondary vertex " + label_str(target) +
                                         " to absorb " + label_str(b));
            shell_contract(s, pending.at(b), v, target);
        };
        if (opts_.interleave_contractions) {
            for (const Label& b : v_zero) {
                if (is_singular(b, k)) continue;
                clone_secondary(b);
                merge_secondary(b);
            }
        } else {
            for (const Label& b : v_zero)
                if (!is_singular(b, k)) clone_secondary(b);
            for (const Label& b : v_zero)
                if (!is_singular(b, k)) merge_secondary(b);
        }
    }

    // shared finalisation: recompute the inner surface and pin every
    // structural promise the next recursion level relies on
    for (int v : s.complex.vertex_ids())
        if (s.complex.vertex(v).temporary)
            throw construction_error("shell: temporary vertex survived");

    Surface fin = inner_surface(s, d);
    if (n == 2 * k + 2) {
        // the cone caps bury vertices outside the local tracking rules
        s.interior_boundary = fin.ids;
    } else if (fin.ids != s.interior_boundary) {
        throw construction_error("shell: tracked inner surface drifted from recomputation");
    }

    for (const Face& f : s.complex.facets())
        if (static_cast<int>(f.size()) != d + 1)
            throw construction_error("shell: not pure after thickening");

    {
        std::set<std::pair<char, Label>> want;
        for (const Label& a : v_plus) {
            want.insert({colour_char(c), clone_label(n, a)});
            want.insert({colour_char(opposite(c)), a});
        }
        if (colour_label_set(s.complex, s.interior_boundary) != want)
            throw construction_error("shell: inner surface census is wrong");
    }

    const Complex& base = sphere(n - 1, k);
    {
        // the outer boundary must still spell out the base sphere
        if (colour_label_set(s.complex, s.exterior_boundary) !=
            colour_label_set(base, base.vertex_ids()))
            throw construction_error("shell: outer boundary vertices changed");
        if (s.exterior_facets.size() != base.facets().size())
            throw construction_error("shell: outer boundary facet count changed");
        for (const Face& f : s.exterior_facets)
            if (!s.complex.has_face(f))
                throw construction_error("shell: outer boundary face lost");
    }

    {
        // no new edge may appear between two vertices with old labels
        std::set<std::pair<Label, Label>> base_edges;
        for (const Face& e : base.faces_of_dim(1)) {
            const Vertex& x = base.vertex(e[0]);
            const Vertex& y = base.vertex(e[1]);
            if (x.colour == y.colour) continue;
            const Vertex& bl = x.colour == Colour::black ? x : y;
            const Vertex& wh = x.colour == Colour::black ? y : x;
            base_edges.insert({bl.label, wh.label});
        }
        for (const Face& e : s.complex.faces_of_dim(1)) {
            const Vertex& x = s.complex.vertex(e[0]);
            const Vertex& y = s.complex.vertex(e[1]);
            if (x.colour == y.colour) continue;
            if (x.label.back() == n || y.label.back() == n) continue;
            const Vertex& bl = x.colour == Colour::black ? x : y;
            const Vertex& wh = x.colour == Colour::black ? y : x;
            if (!base_edges.count({bl.label, wh.label}))
                throw construction_error("shell: new edge between old labels " +
                                         label_str(bl.label) + " " + label_str(wh.label));
        }
    }

    {
        // the inner surface is induced and is the sphere two steps down
        Complex ib = s.complex.induced(s.interior_boundary);
        std::set<Face> got(ib.facets().begin(), ib.facets().end());
        std::set<Face> want(fin.faces.begin(), fin.faces.end());
        if (got != want)
            throw construction_error("shell: inner surface is not induced");
    }
    interior_boundary_isomorphism(s, sphere(n - 3, k - 1));

    return s;
}

Ball Builder::make_ball(int n, int k, Colour c) {
    Shell sh = shell(n, k, c);
    const int d = n - 2 * k;

    if (k >= 2) {
        Ball fill = ball(n - 2, k - 1, opposite(c));

        // pull the fill's labels up into the ambient family: vertices of the
        // ball's own colour shift into the top slot, the others shift into
        // the top slot when their level is positive and one lower otherwise
        for (int v : fill.complex.vertex_ids()) {
            const Vertex& p = fill.complex.vertex(v);
            Label nl;
            if (p.colour == c)
                nl = g_map(n, p.label);
            else if (level(n - 2, p.label) >= 1)
                nl = g_map(n, p.label);
            else
                nl = g_map(n - 1, p.label);
            fill.complex.relabel_vertex(v, nl);
        }
        {
            std::set<std::pair<char, Label>> seen;
            for (int v : fill.complex.vertex_ids()) {
                const Vertex& p = fill.complex.vertex(v);
                if (!seen.insert({colour_char(p.colour), p.label}).second)
                    throw construction_error("ball: relabelled fill repeats " +
                                             vertex_str(fill.complex, v));
            }
        }

        // the fill's boundary must land exactly on the cavity wall
        std::map<int, int> ident;
        std::set<int> wall_ids(sh.interior_boundary.begin(), sh.interior_boundary.end());
        for (int v : fill.boundary_ids) {
            const Vertex& p = fill.complex.vertex(v);
            int t = sh.complex.find_vertex(p.colour, p.label);
            if (t == -1 || !wall_ids.count(t))
                throw construction_error("ball: fill boundary vertex " +
                                         vertex_str(fill.complex, v) +
                                         " misses the cavity wall");
            ident[v] = t;
        }
        if (ident.size() != wall_ids.size())
            throw construction_error("ball: fill boundary does not cover the cavity wall");

        // both sides must present the same sphere along the seam
        Complex wall = sh.complex.induced(sh.interior_boundary);
        std::vector<Face> glue = wall.facets();
        {
            std::set<Face> fill_side;
            for (const Face& f : fill.boundary_facets) {
                Face g;
                for (int v : f) g.push_back(ident.at(v));
                std::sort(g.begin(), g.end());
                fill_side.insert(std::move(g));
            }
            if (fill_side != std::set<Face>(glue.begin(), glue.end()))
                throw construction_error("ball: seam spheres disagree");
        }
        sh.complex = union_identify(sh.complex, fill.complex, ident, glue);
    }

    Ball b{std::move(sh.complex), std::move(sh.exterior_boundary),
           std::move(sh.exterior_facets)};

    // census: boundary carries every old label in both colours, the interior
    // every new label exactly once with colour set by the parity of its level
    {
        std::set<std::pair<char, Label>> got = colour_label_set(b.complex, b.boundary_ids);
        std::set<std::pair<char, Label>> want;
        for (const Label& a : vertex_sets(n - 1, k)) {
            want.insert({colour_char(Colour::black), a});
            want.insert({colour_char(Colour::white), a});
        }
        if (got != want) throw construction_error("ball: boundary census is wrong");

        std::set<int> bd(b.boundary_ids.begin(), b.boundary_ids.end());
        std::set<Label> interior;
        for (int v : b.complex.vertex_ids()) {
            if (bd.count(v)) continue;
            const Vertex& p = b.complex.vertex(v);
            int lv = level(n, p.label);
            if (lv < 1)
                throw construction_error("ball: interior vertex " +
                                         vertex_str(b.complex, v) + " has level zero");
            Colour expect = lv % 2 == 1 ? c : opposite(c);
            if (p.colour != expect)
                throw construction_error("ball: interior vertex " +
                                         vertex_str(b.complex, v) + " has wrong colour");
            if (!interior.insert(p.label).second)
                throw construction_error("ball: interior label repeated");
        }
        std::set<Label> want_interior;
        for (const Label& a : vertex_sets(n, k))
            if (level(n, a) >= 1) want_interior.insert(a);
        if (interior != want_interior)
            throw construction_error("ball: interior census is wrong");
    }

    for (const Face& f : b.complex.facets())
        if (static_cast<int>(f.size()) != d + 1)
            throw construction_error("ball: not pure");
    for (const Face& f : b.boundary_facets)
        if (!b.complex.has_face(f))
            throw construction_error("ball: boundary face lost");
    {
        int chi = 0, sign = 1;
        for (int m : b.complex.f_vector()) {
            chi += sign * m;
            sign = -sign;
        }
        if (chi != 1)
            throw construction_error("ball: Euler characteristic " + std::to_string(chi));
    }
    return b;
}

Complex Builder::make_sphere(int n, int k) {
    if (k < 1 || n < 2 * k + 1)
        throw parameter_error("sphere: need k >= 1 and n >= 2k+1, got n=" +
                              std::to_string(n) + " k=" + std::to_string(k));
    if (n == 2 * k + 1) return build_base_cycle(k);

    Ball upper = ball(n, k, Colour::black);
    Complex lower = mirror_with_colour_swap(upper.complex);

    std::map<int, int> ident;
    for (int t : upper.boundary_ids) {
        const Vertex& p = upper.complex.vertex(t);
        int lv = lower.find_vertex(p.colour, p.label);
        if (lv == -1)
            throw construction_error("sphere: no mirror partner for " +
                                     vertex_str(upper.complex, t));
        ident[lv] = t;
    }
    Complex sph = union_identify(upper.complex, lower, ident, upper.boundary_facets);

    std::vector<std::pair<int, int>> pairs;
    for (int v : sph.vertex_ids()) {
        const Vertex& p = sph.vertex(v);
        if (p.colour != Colour::black) continue;
        int w = sph.find_vertex(Colour::white, p.label);
        if (w == -1)
            throw construction_error("sphere: no white partner for " + vertex_str(sph, v));
        pairs.push_back({v, w});
    }
    sph.set_antipode(pairs);
    return sph;
}

std::map<int, int> interior_boundary_isomorphism(const Shell& s, const Complex& target) {
    std::map<int, int> phi;
    for (int v : s.interior_boundary) {
        const Vertex& p = s.complex.vertex(v);
        int t = target.find_vertex(p.colour, f_map(p.label));
        if (t == -1)
            throw construction_error("inner boundary: no core image for " +
                                     vertex_str(s.complex, v));
        phi[v] = t;
    }
    if (!check_isomorphism(s.complex.induced(s.interior_boundary), target, phi))
        throw construction_error("inner boundary does not match the core sphere");
    return phi;
}

}  // namespace sqg
