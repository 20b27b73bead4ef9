#include "sqg/labels.hpp"

#include <algorithm>
#include <string>

#include "sqg/errors.hpp"

namespace sqg {

namespace {

std::string to_string(const Label& a) {
    std::string s = "{";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a[i]);
    }
    return s + "}";
}

bool is_sorted_subset_of(const Label& a, int n) {
    int prev = 0;
    for (int x : a) {
        if (x <= prev || x > n) return false;
        prev = x;
    }
    return true;
}

bool contains(const Label& a, int x) {
    return std::binary_search(a.begin(), a.end(), x);
}

} // namespace

bool is_independent(const Label& a, int n) {
    if (n < 1 || !is_sorted_subset_of(a, n)) return false;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i + 1] - a[i] == 1) return false;
    // wrap-around adjacency
    if (a.size() >= 2 && a.front() == 1 && a.back() == n) return false;
    // in C_1 and C_2 every pair of distinct elements is adjacent; a single
    // vertex of C_1 is its own neighbour
    if (n == 1 && !a.empty()) return false;
    if (n == 2 && a.size() > 1) return false;
    return true;
}

std::vector<Label> vertex_sets(int n, int k) {
    if (k < 1 || n < 2 * k)
        throw parameter_error("vertex_sets: need k >= 1 and n >= 2k, got n=" +
                              std::to_string(n) + " k=" + std::to_string(k));
    std::vector<Label> out;
    Label cur;
    // backtracking in lexicographic order; consecutive picks differ by >= 2,
    // and a set containing 1 must avoid n
    auto rec = [&](auto&& self, int next) -> void {
        if ((int)cur.size() == k) {
            out.push_back(cur);
            return;
        }
        int remaining = k - (int)cur.size();
        int last = n;
        if (!cur.empty() && cur.front() == 1) last = n - 1;
        // leave room: the i-th pick after `next` costs 2 positions each
        for (int x = next; x + 2 * (remaining - 1) <= last; ++x) {
            cur.push_back(x);
            self(self, x + 2);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

Label core(const Label& a) {
    if (a.empty()) throw parameter_error("core: empty label");
    Label r;
    if (a.front() == 1)
        r.assign(a.begin() + 1, a.end());
    else
        r.assign(a.begin(), a.end() - 1);
    return r;
}

Label lambda_set(int n, int i) {
    if (n < 1 || i < 0 || 2 * i > n)
        throw parameter_error("lambda_set: need 0 <= i <= n/2, got n=" +
                              std::to_string(n) + " i=" + std::to_string(i));
    Label r;
    int lo = (i % 2 == 1) ? 2 : 1;        // low block starts at 2 (odd) or 1 (even)
    for (int x = lo; x <= i - 1; x += 2) r.push_back(x);
    int hi = (i % 2 == 1) ? n : n - 1;    // high block ends at n (odd) or n-1 (even)
    for (int x = n - i + 1; x <= hi; x += 2) r.push_back(x);
    return r;
}

int level(int n, const Label& a) {
    if (!is_independent(a, n))
        throw parameter_error("level: " + to_string(a) + " not independent in C_" +
                              std::to_string(n));
    int cap = std::min((int)a.size(), n / 2);
    for (int i = cap; i >= 1; --i) {
        Label lam = lambda_set(n, i);
        if (std::includes(a.begin(), a.end(), lam.begin(), lam.end())) return i;
    }
    return 0;
}

Label clone_label(int n, const Label& b) {
    if (!is_independent(b, n - 1))
        throw parameter_error("clone_label: " + to_string(b) +
                              " not independent in C_" + std::to_string(n - 1));
    Label r = core(b);
    r.push_back(n);
    return r;
}

Label f_map(const Label& x) {
    Label c = core(x);
    for (int& v : c) {
        if (v <= 1)
            throw parameter_error("f_map: core of " + to_string(x) + " contains 1");
        --v;
    }
    return c;
}

Label g_map(int n, const Label& y) {
    if (!is_independent(y, n - 2))
        throw parameter_error("g_map: " + to_string(y) + " not independent in C_" +
                              std::to_string(n - 2));
    Label r;
    if (contains(y, n - 2)) {
        r.push_back(1);
        for (int v : y) r.push_back(v + 1);
    } else {
        for (int v : y) r.push_back(v + 1);
        r.push_back(n);
    }
    return r;
}

bool is_singular(const Label& a, int k) {
    if ((int)a.size() != k)
        throw parameter_error("is_singular: |A| != k for " + to_string(a));
    return !a.empty() && a.back() <= 2 * k && is_independent(a, 2 * k);
}

Label base_independent_set(int k, int j) {
    if (k < 1 || j < 1 || j > 2 * k + 1)
        throw parameter_error("base_independent_set: need 1 <= j <= 2k+1, got k=" +
                              std::to_string(k) + " j=" + std::to_string(j));
    int n = 2 * k + 1;
    Label r;
    for (int t = 0; t < k; ++t) r.push_back((j - 1 + 2 * t) % n + 1);
    std::sort(r.begin(), r.end());
    return r;
}

std::strong_ordering lex_compare(const Label& a, const Label& b) {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                  b.end());
}

} // namespace sqg
