#include "catch2/catch_amalgamated.hpp"

#include <numeric>

#include "sqg/complex.hpp"
#include "sqg/errors.hpp"

using namespace sqg;

namespace {

// alternating 2m-cycle with singleton labels {1},...,{2m}
Complex make_cycle(int length) {
    Complex c;
    for (int i = 0; i < length; ++i)
        c.add_vertex({i + 1}, i % 2 == 0 ? Colour::black : Colour::white);
    std::vector<Face> edges;
    for (int i = 0; i < length; ++i) {
        Face e{i, (i + 1) % length};
        std::sort(e.begin(), e.end());
        edges.push_back(e);
    }
    c.add_facets(edges);
    return c;
}

long long euler(const Complex& c) {
    long long chi = 0, sign = 1;
    for (std::size_t f : c.f_vector()) {
        chi += sign * (long long)f;
        sign = -sign;
    }
    return chi;
}

std::vector<std::vector<Label>> label_facets(const Complex& c) {
    std::vector<std::vector<Label>> out;
    for (const Face& f : c.facets()) {
        std::vector<Label> g;
        for (int v : f) g.push_back(c.vertex(v).label);
        std::sort(g.begin(), g.end());
        out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("from_facets absorbs dominated faces", "[complex]") {
    Complex c = Complex::from_facets(
        {{{1}, Colour::black}, {{2}, Colour::white}, {{3}, Colour::black}},
        {{0, 1}, {0, 1, 2}});
    REQUIRE(c.facets() == std::vector<Face>{{0, 1, 2}});
    REQUIRE(c.dim() == 2);
    REQUIRE(c.vertex_count() == 3);
}

TEST_CASE("face enumeration by dimension", "[complex]") {
    Complex tri = Complex::from_facets(
        {{{1}, Colour::black}, {{2}, Colour::white}, {{3}, Colour::black}},
        {{0, 1, 2}});
    REQUIRE(tri.f_vector() == std::vector<std::size_t>{3, 3, 1});
    REQUIRE(tri.faces_of_dim(1) == std::vector<Face>{{0, 1}, {0, 2}, {1, 2}});
    REQUIRE(tri.faces_of_dim(3).empty());

    Complex cyc = make_cycle(14);
    REQUIRE(cyc.f_vector() == std::vector<std::size_t>{14, 14});
    REQUIRE(euler(cyc) == 0);
}

TEST_CASE("induced subcomplex keeps the ambient id space", "[complex]") {
    Complex cyc = make_cycle(6);
    Complex path = cyc.induced({0, 1, 2});
    REQUIRE(path.facets() == std::vector<Face>{{0, 1}, {1, 2}});
    REQUIRE(path.vertex(0).label == Label{1});

    Complex far = cyc.induced({0, 3});
    REQUIRE(far.facets() == std::vector<Face>{{0}, {3}});

    Complex none = cyc.induced({});
    REQUIRE(none.facets().empty());
}

TEST_CASE("has_face and facets_containing", "[complex]") {
    Complex cyc = make_cycle(6);
    REQUIRE(cyc.has_face({2}));
    REQUIRE(cyc.has_face({2, 3}));
    REQUIRE_FALSE(cyc.has_face({2, 4}));
    // facet list is kept lex-sorted: {0,1} then {0,5} then the rest
    REQUIRE(cyc.facets_containing(0) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("find_vertex sees only permanent alive vertices", "[complex]") {
    Complex c;
    int u = c.add_vertex({1, 3}, Colour::black);
    c.add_vertex({1, 3}, Colour::black, /*temporary=*/true);
    REQUIRE(c.find_vertex(Colour::black, {1, 3}) == u);
    REQUIRE(c.find_vertex(Colour::white, {1, 3}) == -1);
}

TEST_CASE("contract_edge merges an adjacent same-coloured pair", "[complex]") {
    // maximal faces xu, xv, uvy; contracting uv leaves xw, wy
    Complex c = Complex::from_facets({{{1}, Colour::white},   // x = 0
                                      {{2}, Colour::black},   // u = 1
                                      {{3}, Colour::black},   // v = 2
                                      {{4}, Colour::white}},  // y = 3
                                     {{0, 1}, {0, 2}, {1, 2, 3}});
    int w = c.contract_edge(1, 2, {9});
    REQUIRE(w == 4);
    REQUIRE(c.facets() == std::vector<Face>{{0, 4}, {3, 4}});
    REQUIRE_FALSE(c.alive(1));
    REQUIRE_FALSE(c.alive(2));
    REQUIRE(c.vertex(w).label == Label{9});
    REQUIRE(c.vertex(w).colour == Colour::black);
}

TEST_CASE("contract_edge preconditions", "[complex]") {
    Complex cyc = make_cycle(6);
    REQUIRE_THROWS_AS(cyc.contract_edge(0, 2, {9}), structural_error);  // not an edge
    REQUIRE_THROWS_AS(cyc.contract_edge(0, 1, {9}), structural_error);  // colours differ
    Complex two = Complex::from_facets({{{1}, Colour::black}, {{2}, Colour::black}},
                                       {{0, 1}});
    REQUIRE_NOTHROW(two.contract_edge(0, 1, {9}));
}

TEST_CASE("join_with_vertex cones the base", "[complex]") {
    Complex cyc = make_cycle(6);
    int apex = cyc.add_vertex({7}, Colour::black);
    cyc.join_with_vertex(apex, cyc.induced({0, 1, 2, 3, 4, 5}));
    REQUIRE(cyc.facets().size() == 6);
    for (const Face& f : cyc.facets()) REQUIRE(f.size() == 3);
    REQUIRE(euler(cyc) == 1);  // a disk

    Complex bad = make_cycle(4);
    REQUIRE_THROWS_AS(bad.join_with_vertex(0, bad.induced({0, 1})), structural_error);
}

TEST_CASE("union of two cones over a shared cycle is a sphere", "[complex]") {
    Complex upper = make_cycle(6);
    int a1 = upper.add_vertex({7}, Colour::black);
    upper.join_with_vertex(a1, upper.induced({0, 1, 2, 3, 4, 5}));

    Complex lower = make_cycle(6);
    int a2 = lower.add_vertex({7}, Colour::white);
    lower.join_with_vertex(a2, lower.induced({0, 1, 2, 3, 4, 5}));

    std::map<int, int> ident;
    for (int i = 0; i < 6; ++i) ident[i] = i;
    std::vector<Face> glue;
    for (int i = 0; i < 6; ++i) {
        Face e{i, (i + 1) % 6};
        std::sort(e.begin(), e.end());
        glue.push_back(e);
    }
    Complex sphere = union_identify(upper, lower, ident, glue);
    REQUIRE(sphere.vertex_count() == 8);
    REQUIRE(sphere.facets().size() == 12);
    REQUIRE(euler(sphere) == 2);
}

TEST_CASE("union with empty ident is a disjoint union", "[complex]") {
    Complex a = make_cycle(4);
    Complex b = make_cycle(6);
    Complex u = union_identify(a, b, {}, {});
    REQUIRE(u.vertex_count() == 10);
    REQUIRE(u.facets().size() == 10);
}

TEST_CASE("union_identify rejects mismatches", "[complex]") {
    Complex a = make_cycle(4);
    Complex b = make_cycle(4);
    REQUIRE_THROWS_AS(union_identify(a, b, {{0, 1}}, {}), structural_error);  // colour
    // label mismatch at same colour
    REQUIRE_THROWS_AS(union_identify(a, b, {{0, 2}}, {}), structural_error);
    // glue face not present on one side
    std::map<int, int> ident{{0, 0}, {1, 1}, {2, 2}};
    REQUIRE_THROWS_AS(union_identify(a, b, ident, {{0, 2}}), structural_error);
    REQUIRE_NOTHROW(union_identify(a, b, ident, {{0, 1}, {1, 2}}));
}

TEST_CASE("isomorphism check is colour-aware", "[complex]") {
    Complex a = make_cycle(6);
    Complex b = make_cycle(6);
    std::map<int, int> rot;   // shift by two keeps the colouring
    for (int i = 0; i < 6; ++i) rot[i] = (i + 2) % 6;
    REQUIRE(check_isomorphism(a, b, rot));
    std::map<int, int> shift;  // shift by one swaps colours
    for (int i = 0; i < 6; ++i) shift[i] = (i + 1) % 6;
    REQUIRE_FALSE(check_isomorphism(a, b, shift));
    std::map<int, int> partial{{0, 0}};
    REQUIRE_FALSE(check_isomorphism(a, b, partial));
}

TEST_CASE("mirror flips colours and keeps labels and faces", "[complex]") {
    Complex a = make_cycle(6);
    Complex m = mirror_with_colour_swap(a);
    REQUIRE(m.vertex_count() == 6);
    REQUIRE(m.vertex(0).colour == Colour::white);
    REQUIRE(m.vertex(0).label == Label{1});
    REQUIRE(m.facets() == a.facets());
    // mirroring twice restores the original
    std::map<int, int> id;
    for (int i = 0; i < 6; ++i) id[i] = i;
    REQUIRE(check_isomorphism(mirror_with_colour_swap(m), a, id));
}

TEST_CASE("add_clone raises a vertex over its interior-boundary star", "[complex]") {
    // interior boundary is the single edge {u,v}; cloning v adds the face {u,v,v*}
    Shell s;
    int u = s.complex.add_vertex({1}, Colour::black);
    int v = s.complex.add_vertex({2}, Colour::black);
    s.complex.add_facets({{u, v}});
    s.interior_boundary = {u, v};
    int clone = add_clone(s, v, {3});
    REQUIRE(s.complex.facets() == std::vector<Face>{{u, v, clone}});
    REQUIRE(s.interior_boundary == std::vector<int>{u, clone});
    REQUIRE(s.complex.vertex(clone).colour == Colour::black);
    REQUIRE_THROWS_AS(add_clone(s, v, {4}), construction_error);  // v left the boundary
}

TEST_CASE("cloning two neighbours commutes at the boundary level", "[complex]") {
    // the final interior boundary (as labels) does not depend on clone order,
    // even though the triangulated quad between the two clones does
    auto run = [](bool v_first) {
        Shell s;
        s.complex = make_cycle(10);
        s.interior_boundary.resize(10);
        std::iota(s.interior_boundary.begin(), s.interior_boundary.end(), 0);
        if (v_first) {
            add_clone(s, 3, {13});
            add_clone(s, 2, {12});
        } else {
            add_clone(s, 2, {12});
            add_clone(s, 3, {13});
        }
        return label_facets(s.complex.induced(s.interior_boundary));
    };
    REQUIRE(run(true) == run(false));
}

TEST_CASE("antipode pairs must cover all vertices exactly once", "[complex]") {
    Complex cyc = make_cycle(6);
    cyc.set_antipode({{0, 3}, {1, 4}, {2, 5}});
    REQUIRE(cyc.antipode(0) == 3);
    REQUIRE(cyc.antipode(4) == 1);
    REQUIRE_THROWS_AS(cyc.set_antipode({{0, 3}, {1, 4}}), structural_error);
    REQUIRE_THROWS_AS(cyc.set_antipode({{0, 3}, {1, 4}, {2, 4}}), structural_error);
}
