#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dyckfact/factor.hpp"

namespace dyckfact::test {

/// Shift pair with the given (m, n): m*n + n*(-m) = 0.
inline ShiftPair sp_for(int m, int n) {
    return ShiftPair::create(Rat(n), Rat(-m));
}

inline SolutionPair shifted_fundamental(const ShiftPair& sp, const std::string& word,
                                        const Rat& lambda) {
    SolutionPair base = fundamental_from_word(sp, Word(word));
    return SolutionPair{shift_poly(base.p1, -lambda), shift_poly(base.p2, -lambda)};
}

/// Independent oracle: number of rotation orbits of words with exactly
/// m ones and n twos, by exhaustive generation and canonical rotation.
inline std::size_t brute_force_orbit_count(int m, int n) {
    int len = m + n;
    std::set<std::string> canon;
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
        if (__builtin_popcount(mask) != m) continue;
        std::string w(static_cast<std::size_t>(len), '2');
        for (int i = 0; i < len; ++i)
            if (mask & (1u << i)) w[static_cast<std::size_t>(i)] = '1';
        std::string best = w;
        for (int k = 1; k < len; ++k) {
            std::string rot = w.substr(static_cast<std::size_t>(k)) + w.substr(0, static_cast<std::size_t>(k));
            if (rot < best) best = rot;
        }
        canon.insert(best);
    }
    return canon.size();
}

/// All multisets of the given size drawn from a value pool.
inline void multisets_from(const std::vector<Rat>& pool, std::size_t size,
                           const std::function<void(const std::vector<Rat>&)>& visit) {
    std::vector<Rat> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == size) {
            visit(cur);
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            self(self, i);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace dyckfact::test
