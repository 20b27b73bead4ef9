#ifndef SQG_COMPLEX_HPP
#define SQG_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "sqg/labels.hpp"

namespace sqg {

enum class Colour : std::uint8_t { black, white };

Colour opposite(Colour c);
char colour_char(Colour c);  // 'b' or 'w'

struct Vertex {
    Label label;
    Colour colour;
    bool temporary = false;  // mid-build clone awaiting contraction
};

/// A face: strictly increasing list of vertex ids.
using Face = std::vector<int>;

/// A finite 2-coloured simplicial complex. Only maximal faces are stored;
/// downward closure is implicit. Vertex ids are dense indices assigned in
/// creation order and are never reused; contracted vertices stay behind as
/// dead ids. The facet list is kept sorted with no face containing another.
class Complex {
public:
    Complex() = default;

    /// Build from explicit vertex and face lists; ids are list positions.
    /// Non-maximal input faces are absorbed.
    static Complex from_facets(const std::vector<std::pair<Label, Colour>>& vertices,
                               std::vector<Face> faces);

    int add_vertex(Label label, Colour colour, bool temporary = false);

    /// Insert faces, dropping any that are already covered and absorbing any
    /// existing facet covered by a new face.
    void add_facets(std::vector<Face> faces);

    const Vertex& vertex(int id) const;
    bool alive(int id) const;
    std::vector<int> vertex_ids() const;  // alive ids, ascending
    std::size_t vertex_count() const;
    int id_bound() const;

    /// Alive permanent vertex with the given colour and label, or -1.
    int find_vertex(Colour c, const Label& l) const;

    const std::vector<Face>& facets() const { return facets_; }
    int dim() const;
    std::vector<Face> faces_of_dim(int d) const;
    std::vector<std::vector<Face>> faces_by_dim() const;  // index = dimension
    std::vector<std::size_t> f_vector() const;
    bool has_face(const Face& f) const;
    std::vector<std::size_t> facets_containing(int v) const;  // facet indices

    /// Subcomplex of all faces contained in `ids`. The result shares this
    /// complex's id space.
    Complex induced(std::vector<int> ids) const;

    /// Merge the adjacent same-coloured pair {u,v} into one fresh vertex
    /// carrying `survivor_label`; returns its id. Faces through u or v are
    /// rewritten and re-maximalized.
    int contract_edge(int u, int v, Label survivor_label, bool temporary = false);

    /// Cone: add sigma u {apex} for every face sigma of `sub` (which must live
    /// in this complex's id space and not contain apex).
    void join_with_vertex(int apex, const Complex& sub);

    void set_antipode(const std::vector<std::pair<int, int>>& pairs);
    void clear_antipode();
    bool has_antipode() const { return has_antipode_; }
    int antipode(int id) const;

    void relabel_vertex(int id, Label l);

private:
    std::vector<Vertex> vertices_;
    std::vector<bool> alive_;
    std::vector<Face> facets_;  // each sorted; list sorted; mutually incomparable
    std::vector<int> anti_;
    bool has_antipode_ = false;

    Face canonical_face(Face f) const;
};

/// A thickened sphere under construction: the complex plus its two boundary
/// spheres. `exterior_facets` tracks the outer sphere's facets through vertex
/// renamings so the inner surface can be recomputed.
struct Shell {
    Complex complex;
    std::vector<int> interior_boundary;  // sorted vertex ids
    std::vector<int> exterior_boundary;  // sorted vertex ids
    std::vector<Face> exterior_facets;
};

///// Raise a clone v* over interior-boundary vertex v: for every face sigma of
/// the interior boundary containing v, add sigma u {v*}. v* replaces v in the
/// interior boundary. Returns the clone's id.
int add_clone(Shell& s, int v, Label label, bool temporary = false);

/// Disjoint union of `a` and `b` with the vertices of `b` named in `ident`
/// (b-id -> a-id) identified with their images. Identified pairs must agree in
/// colour and label. Every face in `glue` (a-ids, all inside the image of
/// `ident`) must be a face of both complexes; callers pass the subcomplex the
/// two sides are meant to share.
Complex union_identify(const Complex& a, const Complex& b,
                       const std::map<int, int>& ident,
                       const std::vector<Face>& glue);

/// True iff `phi` (a-id -> b-id) is a colour-preserving bijection of alive
/// vertices carrying faces onto faces in both directions.
bool check_isomorphism(const Complex& a, const Complex& b,
                       const std::map<int, int>& phi);

/// Copy with colours flipped and labels kept; fresh dense ids in ascending
/// order of the source's alive ids.
Complex mirror_with_colour_swap(const Complex& k);

} // namespace sqg

#endif
