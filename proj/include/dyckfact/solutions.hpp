#pragma once

#include <optional>
#include <string>
#include <utility>

#include "dyckfact/paths.hpp"
#include "dyckfact/poly.hpp"

namespace dyckfact {

/// The pair attached to a word of the submonoid: with partial sums
/// eta_k of the step shifts, the factor (u - eta_k) goes into the
/// component opposite to the k-th letter. Throws domain_error when the
/// word is not a submonoid member. The empty word gives (1, 1).
SolutionPair fundamental_from_word(const ShiftPair& sp, const Word& w);

/// Irreducible solution labeled by a Dyck path and a shift: the
/// word-built pair with every root translated by lambda.
struct FundamentalSolution {
    DyckPath path;
    Rat lambda;
    SolutionPair pair;

    friend bool operator==(const FundamentalSolution&, const FundamentalSolution&) = default;
};

/// Builds the labeled irreducible solution. Requires the path endpoint
/// to match the (m, n) of the shift pair.
FundamentalSolution fundamental(const ShiftPair& sp, const DyckPath& d, const Rat& lambda);

/// Exact check of the defining equation:
/// p1(u) p2(u) == p1(u + alpha2) p2(u + alpha1), by coefficient
/// comparison of both expanded sides.
bool verify(const ShiftPair& sp, const SolutionPair& s);

/// Shift b with a_i(u) = b_i(u - b) for both components, if one exists.
/// Only the single candidate aligning the minimal roots is tested.
std::optional<Rat> equivalent(const SolutionPair& a, const SolutionPair& b);

/// Solution sets when one or both shift parameters vanish.
enum class DegenerateClass {
    AllPairs,      ///< both zero: every pair of monic polynomials
    FirstTrivial,  ///< alpha1 = 0 != alpha2: {1} x R1
    SecondTrivial, ///< alpha2 = 0 != alpha1: R1 x {1}
};

std::string to_string(DegenerateClass c);

/// Classifies the degenerate cases. Throws domain_error when both
/// parameters are nonzero (the main pipeline applies).
DegenerateClass classify_degenerate(const Rat& alpha1, const Rat& alpha2);

/// The scaling bijection to shifts (alpha1/gamma, alpha2/gamma): every
/// root is divided by gamma. Throws domain_error when gamma = 0.
std::pair<ShiftPair, SolutionPair> rescale(const ShiftPair& sp, const SolutionPair& s,
                                           const Rat& gamma);

} // namespace dyckfact
