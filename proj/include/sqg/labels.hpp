#ifndef SQG_LABELS_HPP
#define SQG_LABELS_HPP

#include <compare>
#include <vector>

namespace sqg {

/// A vertex label: a strictly increasing sequence of integers from [n].
/// The ambient circuit length n is passed to each operation that needs it.
using Label = std::vector<int>;

/// True iff `a` is a strictly increasing subset of [n] that is independent in
/// the circuit C_n (no two cyclically adjacent elements; {1,n} counts as
/// adjacent). The empty set is independent.
bool is_independent(const Label& a, int n);

/// All k-subsets of [n] independent in C_n, in lexicographic order.
/// Requires k >= 1 and n >= 2k.
std::vector<Label> vertex_sets(int n, int k);

/// core(A): drop 1 if present, otherwise drop the maximum. Requires |A| >= 1.
/// For independent sets the result avoids both 1 and n.
Label core(const Label& a);

/// The threshold set Lambda_{n,i} for 0 <= i <= n/2:
///   i odd:  {2,4,...,i-1} u {n-i+1,n-i+3,...,n}
///   i even: {1,3,...,i-1} u {n-i+1,n-i+3,...,n-1}
Label lambda_set(int n, int i);

/// level_n(A) = max { i : Lambda_{n,i} subseteq A }, searched downward from
/// min(|A|, n/2). Requires A independent in C_n.
int level(int n, const Label& a);

/// nu_n(B) = core(B) u {n} for B in V(n-1,k). The label of the clone raised
/// over b(B) when extending from circuit length n-1 to n.
Label clone_label(int n, const Label& b);

/// f(X) = core(X) - 1 (elementwise). On labels of positive level this is the
/// dimension-reduction bijection V+(n,k) -> V(n-2,k-1).
Label f_map(const Label& x);

/// g_n(Y), the inverse of f on positive-level labels:
///   (Y+1) u {1} if n-2 in Y, else (Y+1) u {n}.
/// Requires Y independent in C_{n-2}.
Label g_map(int n, const Label& y);

/// True iff A lies in V(2k,k), i.e. max(A) <= 2k and A is independent in
/// C_{2k}. Exactly {1,3,...,2k-1} and {2,4,...,2k} qualify. Requires |A| = k.
bool is_singular(const Label& a, int k);

/// I_j = {j, j+2, ..., j+2k-2} with wrap-around in [2k+1], sorted.
/// Requires 1 <= j <= 2k+1. These are the 2k+1 elements of V(2k+1,k).
Label base_independent_set(int k, int j);

/// Lexicographic comparison of labels.
std::strong_ordering lex_compare(const Label& a, const Label& b);

} // namespace sqg

#endif
