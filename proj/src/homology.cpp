#include "sqg/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace sqg {

namespace {

using Row = std::vector<std::uint64_t>;

// rank over GF(2) by incremental row reduction against stored pivot rows
struct Eliminator {
    std::map<std::size_t, Row> pivots;  // pivot column -> reduced row
    long long rank = 0;

    static std::size_t lowest_bit(const Row& r) {
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i]) return i * 64 + (std::size_t)__builtin_ctzll(r[i]);
        return (std::size_t)-1;
    }

    void feed(Row r) {
        for (;;) {
            std::size_t p = lowest_bit(r);
            if (p == (std::size_t)-1) return;
            auto it = pivots.find(p);
            if (it == pivots.end()) {
                pivots.emplace(p, std::move(r));
                ++rank;
                return;
            }
            const Row& q = it->second;
            for (std::size_t i = 0; i < r.size(); ++i) r[i] ^= q[i];
        }
    }
};

void subsets_of_size(const Face& f, int take, std::vector<Face>& out) {
    Face cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if ((int)cur.size() == take) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i + (take - cur.size()) <= f.size(); ++i) {
            cur.push_back(f[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace

std::vector<long long> betti_gf2_orbits(const std::vector<Face>& facets,
                                        const std::vector<int>& antipode) {
    if (facets.empty()) return {};
    int dim = 0;
    for (const Face& f : facets) dim = std::max(dim, (int)f.size() - 1);

    // canonical orbit representative: the smaller of a face and its image
    auto rep = [&](Face f) {
        Face m;
        for (int v : f) m.push_back(antipode[v]);
        std::sort(m.begin(), m.end());
        return std::min(f, m);
    };

    std::vector<std::vector<Face>> cells(dim + 1);
    for (int d = 0; d <= dim; ++d) {
        std::vector<Face> sub;
        for (const Face& f : facets)
            if ((int)f.size() >= d + 1) subsets_of_size(f, d + 1, sub);
        for (Face& s : sub) cells[d].push_back(rep(std::move(s)));
        std::sort(cells[d].begin(), cells[d].end());
        cells[d].erase(std::unique(cells[d].begin(), cells[d].end()),
                       cells[d].end());
    }
    auto index_of = [&](int d, const Face& f) {
        return (std::size_t)(std::lower_bound(cells[d].begin(), cells[d].end(), f) -
                             cells[d].begin());
    };

    std::vector<long long> rank(dim + 2, 0);
    for (int d = 1; d <= dim; ++d) {
        std::size_t words = (cells[d - 1].size() + 63) / 64;
        Eliminator elim;
        for (const Face& f : cells[d]) {
            Row r(words, 0);
            std::vector<Face> sub;
            subsets_of_size(f, d, sub);
            for (const Face& s : sub) {
                std::size_t j = index_of(d - 1, rep(s));
                r[j / 64] ^= 1ull << (j % 64);
            }
            elim.feed(std::move(r));
        }
        rank[d] = elim.rank;
    }

    std::vector<long long> betti(dim + 1);
    for (int d = 0; d <= dim; ++d)
        betti[d] = (long long)cells[d].size() - rank[d] - rank[d + 1];
    return betti;
}

std::vector<long long> betti_gf2(const std::vector<Face>& facets) {
    if (facets.empty()) return {};
    int dim = 0;
    for (const Face& f : facets) dim = std::max(dim, (int)f.size() - 1);

    // all faces per dimension, sorted for index lookup
    std::vector<std::vector<Face>> faces(dim + 1);
    for (int d = 0; d <= dim; ++d) {
        for (const Face& f : facets)
            if ((int)f.size() >= d + 1) subsets_of_size(f, d + 1, faces[d]);
        std::sort(faces[d].begin(), faces[d].end());
        faces[d].erase(std::unique(faces[d].begin(), faces[d].end()),
                       faces[d].end());
    }
    auto index_of = [&](int d, const Face& f) {
        return (std::size_t)(std::lower_bound(faces[d].begin(), faces[d].end(), f) -
                             faces[d].begin());
    };

    // rank of each boundary map d -> d-1, eliminating over the smaller side
    std::vector<long long> rank(dim + 2, 0);
    for (int d = 1; d <= dim; ++d) {
        std::size_t rows_hi = faces[d].size(), rows_lo = faces[d - 1].size();
        Eliminator elim;
        if (rows_hi <= rows_lo) {
            std::size_t words = (rows_lo + 63) / 64;
            for (const Face& f : faces[d]) {
                Row r(words, 0);
                std::vector<Face> sub;
                subsets_of_size(f, d, sub);
                for (const Face& s : sub) {
                    std::size_t j = index_of(d - 1, s);
                    r[j / 64] ^= 1ull << (j % 64);
                }
                elim.feed(std::move(r));
            }
        } else {
            std::size_t words = (rows_hi + 63) / 64;
            std::vector<Row> rows(rows_lo, Row(words, 0));
            for (std::size_t i = 0; i < faces[d].size(); ++i) {
                std::vector<Face> sub;
                subsets_of_size(faces[d][i], d, sub);
                for (const Face& s : sub) {
                    std::size_t j = index_of(d - 1, s);
                    rows[j][i / 64] ^= 1ull << (i % 64);
                }
            }
            for (Row& r : rows) elim.feed(std::move(r));
        }
        rank[d] = elim.rank;
    }

    std::vector<long long> betti(dim + 1);
    for (int d = 0; d <= dim; ++d)
        betti[d] = (long long)faces[d].size() - rank[d] - rank[d + 1];
    return betti;
}

} // namespace sqg
