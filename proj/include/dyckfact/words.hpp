#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "dyckfact/lattice.hpp"

namespace dyckfact {

/// Finite sequence over the alphabet {1, 2}, possibly empty.
class Word {
public:
    Word() = default;

    /// Validates that every character is '1' or '2'.
    explicit Word(std::string_view s);

    std::size_t length() const { return s_.size(); }
    bool empty() const { return s_.empty(); }

    /// Entry at position i as the integer 1 or 2.
    int at(std::size_t i) const { return s_[i] - '0'; }

    /// Number of occurrences of the given letter (1 or 2).
    std::size_t count(int letter) const;

    const std::string& str() const { return s_; }

    friend Word operator+(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::string s_;
};

/// Cyclic left rotation by k (any integer, reduced mod the length).
Word shift(const Word& w, long k);

/// Membership in the submonoid: the letter-weighted sum
/// count(1)*alpha1 + count(2)*alpha2 vanishes.
bool in_M(const ShiftPair& sp, const Word& w);

/// A nonempty member of the submonoid is cyclically irreducible iff its
/// length is exactly m + n. Throws domain_error if w is not a member.
bool is_cyclically_irreducible(const ShiftPair& sp, const Word& w);

/// Smallest rotation r >= 0 such that the initial segment of length
/// s1 + s2 of shift(w, r) contains exactly s1 ones, where
/// s_i = count(i)/gcd(count(1), count(2)). Always exists for nonempty w.
std::size_t balanced_window(const Word& w);

struct CyclicSplit {
    std::size_t shift; ///< rotation applied before splitting
    Word prefix;       ///< length m + n, in the submonoid
    Word suffix;       ///< nonempty remainder, in the submonoid
};

/// Splits a reducible member into two nonempty submonoid members after a
/// rotation; nullopt when the word is already of length m + n.
/// Throws domain_error if w is not a member or is empty.
std::optional<CyclicSplit> cyclic_split(const ShiftPair& sp, const Word& w);

/// Number of rotation orbits of cyclically irreducible words:
/// binomial(m + n, m) / (m + n), an exact integer.
/// Throws domain_error unless m, n are positive and coprime.
Int count_irr_orbits(const Int& m, const Int& n);

} // namespace dyckfact
