#include "sqg/complex.hpp"

#include <algorithm>
#include <string>

#include "sqg/errors.hpp"

namespace sqg {

Colour opposite(Colour c) { return c == Colour::black ? Colour::white : Colour::black; }

char colour_char(Colour c) { return c == Colour::black ? 'b' : 'w'; }

namespace {

std::string face_str(const Face& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(f[i]);
    }
    return s + ")";
}

// fixed-width bitset over vertex ids, for subset tests
struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(int bound, const Face& f) : w((bound + 63) / 64, 0) {
        for (int v : f) w[v / 64] |= 1ull << (v % 64);
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
};

// drop duplicates and any face contained in another
void maximalize(std::vector<Face>& faces, int id_bound) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    if (faces.size() < 2) return;
    std::vector<std::size_t> order(faces.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return faces[a].size() > faces[b].size();
    });
    std::vector<Bits> kept_bits;
    std::vector<Face> kept;
    for (std::size_t idx : order) {
        Bits b(id_bound, faces[idx]);
        bool covered = false;
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (kept[j].size() <= faces[idx].size()) break;  // sorted by size
            if (b.subset_of(kept_bits[j])) { covered = true; break; }
        }
        if (!covered) {
            kept.push_back(faces[idx]);
            kept_bits.push_back(std::move(b));
        }
    }
    std::sort(kept.begin(), kept.end());
    faces = std::move(kept);
}

void combinations_into(const Face& f, int take, std::vector<Face>& out) {
    Face cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if ((int)cur.size() == take) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i + (take - cur.size()) <= f.size() + 0u; ++i) {
            cur.push_back(f[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace

Complex Complex::from_facets(const std::vector<std::pair<Label, Colour>>& vertices,
                             std::vector<Face> faces) {
    Complex c;
    for (const auto& [label, colour] : vertices) c.add_vertex(label, colour);
    c.add_facets(std::move(faces));
    return c;
}

int Complex::add_vertex(Label label, Colour colour, bool temporary) {
    vertices_.push_back(Vertex{std::move(label), colour, temporary});
    alive_.push_back(true);
    anti_.push_back(-1);
    return (int)vertices_.size() - 1;
}

Face Complex::canonical_face(Face f) const {
    if (f.empty()) throw structural_error("empty face");
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f)
        if (v < 0 || v >= id_bound() || !alive_[v])
            throw structural_error("face " + face_str(f) + " uses dead vertex " +
                                   std::to_string(v));
    return f;
}

void Complex::add_facets(std::vector<Face> faces) {
    if (faces.empty()) return;
    for (Face& f : faces) f = canonical_face(std::move(f));
    maximalize(faces, id_bound());
    // absorb in both directions against the current facet list
    std::vector<Bits> new_bits;
    new_bits.reserve(faces.size());
    for (const Face& f : faces) new_bits.emplace_back(id_bound(), f);
    std::vector<Face> result;
    result.reserve(facets_.size() + faces.size());
    std::vector<bool> drop_new(faces.size(), false);
    for (const Face& old : facets_) {
        Bits ob(id_bound(), old);
        bool covered = false;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            if (drop_new[i]) continue;
            if (old.size() <= faces[i].size() && ob.subset_of(new_bits[i])) {
                covered = true;
                break;
            }
            if (faces[i].size() <= old.size() && new_bits[i].subset_of(ob))
                drop_new[i] = true;
        }
        if (!covered) result.push_back(old);
    }
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (!drop_new[i]) result.push_back(std::move(faces[i]));
    std::sort(result.begin(), result.end());
    facets_ = std::move(result);
}

const Vertex& Complex::vertex(int id) const {
    if (id < 0 || id >= id_bound())
        throw structural_error("no vertex with id " + std::to_string(id));
    return vertices_[id];
}

bool Complex::alive(int id) const {
    return id >= 0 && id < id_bound() && alive_[id];
}

std::vector<int> Complex::vertex_ids() const {
    std::vector<int> ids;
    for (int i = 0; i < id_bound(); ++i)
        if (alive_[i]) ids.push_back(i);
    return ids;
}

std::size_t Complex::vertex_count() const {
    return (std::size_t)std::count(alive_.begin(), alive_.end(), true);
}

int Complex::id_bound() const { return (int)vertices_.size(); }

int Complex::find_vertex(Colour c, const Label& l) const {
    for (int i = 0; i < id_bound(); ++i)
        if (alive_[i] && !vertices_[i].temporary && vertices_[i].colour == c &&
            vertices_[i].label == l)
            return i;
    return -1;
}

int Complex::dim() const {
    int d = -1;
    for (const Face& f : facets_) d = std::max(d, (int)f.size() - 1);
    return d;
}

std::vector<Face> Complex::faces_of_dim(int d) const {
    std::vector<Face> out;
    for (const Face& f : facets_)
        if ((int)f.size() >= d + 1) combinations_into(f, d + 1, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<Face>> Complex::faces_by_dim() const {
    std::vector<std::vector<Face>> out;
    for (int d = 0; d <= dim(); ++d) out.push_back(faces_of_dim(d));
    return out;
}

std::vector<std::size_t> Complex::f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& faces : faces_by_dim()) f.push_back(faces.size());
    return f;
}

bool Complex::has_face(const Face& f) const {
    if (f.empty()) return false;
    for (const Face& g : facets_)
        if (g.size() >= f.size() &&
            std::includes(g.begin(), g.end(), f.begin(), f.end()))
            return true;
    return false;
}

std::vector<std::size_t> Complex::facets_containing(int v) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < facets_.size(); ++i)
        if (std::binary_search(facets_[i].begin(), facets_[i].end(), v))
            out.push_back(i);
    return out;
}

Complex Complex::induced(std::vector<int> ids) const {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int v : ids)
        if (!alive(v))
            throw structural_error("induced: dead vertex " + std::to_string(v));
    Complex r;
    r.vertices_ = vertices_;
    r.alive_.assign(vertices_.size(), false);
    r.anti_.assign(vertices_.size(), -1);
    for (int v : ids) r.alive_[v] = true;
    std::vector<Face> cut;
    for (const Face& f : facets_) {
        Face g;
        std::set_intersection(f.begin(), f.end(), ids.begin(), ids.end(),
                              std::back_inserter(g));
        if (!g.empty()) cut.push_back(std::move(g));
    }
    maximalize(cut, id_bound());
    r.facets_ = std::move(cut);
    return r;
}

int Complex::contract_edge(int u, int v, Label survivor_label, bool temporary) {
    if (!alive(u) || !alive(v) || u == v)
        throw structural_error("contract_edge: bad pair (" + std::to_string(u) +
                               "," + std::to_string(v) + ")");
    if (vertices_[u].colour != vertices_[v].colour)
        throw structural_error("contract_edge: colours differ on (" +
                               std::to_string(u) + "," + std::to_string(v) + ")");
    if (!has_face({std::min(u, v), std::max(u, v)}))
        throw structural_error("contract_edge: (" + std::to_string(u) + "," +
                               std::to_string(v) + ") is not an edge");
    int w = add_vertex(std::move(survivor_label), vertices_[u].colour, temporary);
    std::vector<Face> keep, changed;
    for (Face& f : facets_) {
        bool hit = std::binary_search(f.begin(), f.end(), u) ||
                   std::binary_search(f.begin(), f.end(), v);
        if (!hit) {
            keep.push_back(std::move(f));
            continue;
        }
        Face g;
        for (int x : f) g.push_back(x == u || x == v ? w : x);
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        changed.push_back(std::move(g));
    }
    alive_[u] = alive_[v] = false;
    facets_ = std::move(keep);
    add_facets(std::move(changed));
    return w;
}

void Complex::join_with_vertex(int apex, const Complex& sub) {
    if (!alive(apex)) throw structural_error("join: dead apex");
    std::vector<Face> batch;
    batch.push_back({apex});
    for (const Face& f : sub.facets()) {
        for (int v : f) {
            if (v == apex) throw structural_error("join: apex lies in the base");
            if (!alive(v))
                throw structural_error("join: base vertex " + std::to_string(v) +
                                       " not in this complex");
        }
        Face g = f;
        g.push_back(apex);
        std::sort(g.begin(), g.end());
        batch.push_back(std::move(g));
    }
    add_facets(std::move(batch));
}

void Complex::set_antipode(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> anti(vertices_.size(), -1);
    for (auto [u, v] : pairs) {
        if (!alive(u) || !alive(v) || u == v)
            throw structural_error("antipode: bad pair (" + std::to_string(u) + "," +
                                   std::to_string(v) + ")");
        if (anti[u] != -1 || anti[v] != -1)
            throw structural_error("antipode: vertex paired twice");
        anti[u] = v;
        anti[v] = u;
    }
    for (int i = 0; i < id_bound(); ++i)
        if (alive_[i] && anti[i] == -1)
            throw structural_error("antipode: vertex " + std::to_string(i) +
                                   " unpaired");
    anti_ = std::move(anti);
    has_antipode_ = true;
}

int Complex::antipode(int id) const {
    if (!has_antipode_ || !alive(id))
        throw structural_error("antipode not available for id " + std::to_string(id));
    return anti_[id];
}

void Complex::clear_antipode() {
    anti_.assign(vertices_.size(), -1);
    has_antipode_ = false;
}

void Complex::relabel_vertex(int id, Label l) {
    if (!alive(id))
        throw structural_error("relabel: vertex " + std::to_string(id) + " not alive");
    vertices_[id].label = std::move(l);
}

int add_clone(Shell& s, int v, Label label, bool temporary) {
    if (!std::binary_search(s.interior_boundary.begin(), s.interior_boundary.end(), v))
        throw construction_error("add_clone: vertex " + std::to_string(v) +
                                 " is not on the interior boundary");
    Complex ib = s.complex.induced(s.interior_boundary);
    int clone = s.complex.add_vertex(std::move(label), s.complex.vertex(v).colour,
                                     temporary);
    std::vector<Face> batch;
    for (std::size_t fi : ib.facets_containing(v)) {
        Face g = ib.facets()[fi];
        g.push_back(clone);
        std::sort(g.begin(), g.end());
        batch.push_back(std::move(g));
    }
    if (batch.empty())
        throw construction_error("add_clone: vertex " + std::to_string(v) +
                                 " has empty interior-boundary star");
    s.complex.add_facets(std::move(batch));
    auto& ibs = s.interior_boundary;
    ibs.erase(std::find(ibs.begin(), ibs.end(), v));
    ibs.insert(std::upper_bound(ibs.begin(), ibs.end(), clone), clone);
    return clone;
}

Complex union_identify(const Complex& a, const Complex& b,
                       const std::map<int, int>& ident,
                       const std::vector<Face>& glue) {
    Complex r = a;
    r.clear_antipode();
    std::vector<int> b_to_r(b.id_bound(), -1);
    std::vector<bool> hit_in_a(a.id_bound(), false);
    for (auto [vb, va] : ident) {
        if (!b.alive(vb) || !a.alive(va))
            throw structural_error("union_identify: dead vertex in ident");
        if (hit_in_a[va])
            throw structural_error("union_identify: target " + std::to_string(va) +
                                   " identified twice");
        hit_in_a[va] = true;
        const Vertex& pb = b.vertex(vb);
        const Vertex& pa = a.vertex(va);
        if (pb.colour != pa.colour || pb.label != pa.label)
            throw structural_error("union_identify: colour/label mismatch at (" +
                                   std::to_string(vb) + "," + std::to_string(va) + ")");
        b_to_r[vb] = va;
    }
    // the shared subcomplex must embed in both sides
    std::map<int, int> inv;
    for (auto [vb, va] : ident) inv[va] = vb;
    for (const Face& g : glue) {
        if (!a.has_face(g))
            throw structural_error("union_identify: glue face " + face_str(g) +
                                   " missing in left complex");
        Face pre;
        for (int v : g) {
            auto it = inv.find(v);
            if (it == inv.end())
                throw structural_error("union_identify: glue face " + face_str(g) +
                                       " leaves the identified set");
            pre.push_back(it->second);
        }
        std::sort(pre.begin(), pre.end());
        if (!b.has_face(pre))
            throw structural_error("union_identify: glue face " + face_str(g) +
                                   " missing in right complex");
    }
    for (int vb : b.vertex_ids())
        if (b_to_r[vb] == -1) {
            const Vertex& p = b.vertex(vb);
            b_to_r[vb] = r.add_vertex(p.label, p.colour, p.temporary);
        }
    std::vector<Face> batch;
    for (const Face& f : b.facets()) {
        Face g;
        for (int v : f) g.push_back(b_to_r[v]);
        std::sort(g.begin(), g.end());
        batch.push_back(std::move(g));
    }
    r.add_facets(std::move(batch));
    return r;
}

bool check_isomorphism(const Complex& a, const Complex& b,
                       const std::map<int, int>& phi) {
    auto aid = a.vertex_ids();
    if (phi.size() != aid.size() || a.vertex_count() != b.vertex_count()) return false;
    std::vector<bool> hit(b.id_bound(), false);
    for (int u : aid) {
        auto it = phi.find(u);
        if (it == phi.end()) return false;
        int v = it->second;
        if (!b.alive(v) || hit[v]) return false;
        hit[v] = true;
        if (a.vertex(u).colour != b.vertex(v).colour) return false;
    }
    std::vector<Face> mapped;
    for (const Face& f : a.facets()) {
        Face g;
        for (int v : f) g.push_back(phi.at(v));
        std::sort(g.begin(), g.end());
        mapped.push_back(std::move(g));
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == b.facets();
}

Complex mirror_with_colour_swap(const Complex& k) {
    Complex m;
    std::vector<int> remap(k.id_bound(), -1);
    for (int v : k.vertex_ids()) {
        const Vertex& p = k.vertex(v);
        remap[v] = m.add_vertex(p.label, opposite(p.colour), p.temporary);
    }
    std::vector<Face> batch;
    for (const Face& f : k.facets()) {
        Face g;
        for (int v : f) g.push_back(remap[v]);
        std::sort(g.begin(), g.end());
        batch.push_back(std::move(g));
    }
    m.add_facets(std::move(batch));
    return m;
}

} // namespace sqg
