#pragma once

#include <vector>

namespace heightlab {

// Exponent vectors (a_1..a_d) with sum n, in lexicographically descending
// order: for d=2, n=2 this yields (2,0), (1,1), (0,2).
inline std::vector<std::vector<int>> monomials_lex_desc(int d, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(d), 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == d - 1) {
            cur[static_cast<size_t>(pos)] = rem;
            out.push_back(cur);
            return;
        }
        for (int a = rem; a >= 0; --a) {
            cur[static_cast<size_t>(pos)] = a;
            self(self, pos + 1, rem - a);
        }
    };
    if (d > 0) rec(rec, 0, n);
    return out;
}

// k-element subsets of {0..n-1} as sorted index vectors, in lexicographic
// ascending order: {0,1}, {0,2}, {1,2} for n=3, k=2.
inline std::vector<std::vector<int>> subsets_lex(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<size_t>(k));
    auto rec = [&](auto&& self, int start, int pos) -> void {
        if (pos == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - (k - pos); ++i) {
            cur[static_cast<size_t>(pos)] = i;
            self(self, i + 1, pos + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace heightlab
