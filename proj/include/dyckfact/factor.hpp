#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dyckfact/solutions.hpp"

namespace dyckfact {

/// Outcome of the necessary-condition test for nontrivial solutions.
enum class Triviality {
    Trivial,              ///< the pair is (1, 1)
    NontrivialImpossible, ///< no (m, n) exists: only (1, 1) can verify
    Eligible,             ///< nontrivial and (m, n) present: factorizable
};

Triviality triviality_check(const ShiftPair& sp, const SolutionPair& s);

/// Identifies a coset of the shift lattice by its smallest root value
/// within the solution under inspection.
struct CosetKey {
    Rat representative;

    friend bool operator==(const CosetKey&, const CosetKey&) = default;
    friend auto operator<=>(const CosetKey& a, const CosetKey& b) {
        return a.representative <=> b.representative;
    }
};

/// Splits a verified solution into its per-coset parts: roots of each
/// component grouped by coset modulo the shift lattice. Every part is
/// itself a solution and the product over all parts is the input.
/// The trivial solution yields an empty map.
std::map<CosetKey, SolutionPair> c_integral_split(const ShiftPair& sp, const SolutionPair& s);

/// One irreducible factor: a Dyck path and its shift label.
struct FactorLabel {
    DyckPath path;
    Rat lambda;

    friend bool operator==(const FactorLabel&, const FactorLabel&) = default;
};

struct CosetFactors {
    CosetKey key;
    std::vector<FactorLabel> factors; ///< nondecreasing in the south-east order

    friend bool operator==(const CosetFactors&, const CosetFactors&) = default;
};

/// Canonical ordered factorization into irreducibles, one block per
/// coset, blocks sorted by representative.
struct Factorization {
    std::vector<CosetFactors> cosets;

    std::size_t factor_count() const;

    /// Product of all listed fundamentals.
    SolutionPair reconstruct(const ShiftPair& sp) const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Root chase from the proof of the divisor proposition: starting from a
/// deterministically chosen root, walk lambda -> lambda + alpha_j along
/// vanishing components until a value repeats; the traversed letters form
/// a submonoid word whose shifted fundamental divides the solution.
/// Returns that word and the shift. Requires a verified nontrivial
/// solution with (m, n) present.
std::pair<Word, Rat> find_fundamental_divisor(const ShiftPair& sp, const SolutionPair& s);

/// The unique ordered factorization: per coset, repeatedly extract
/// the minimal irreducible in the south-east order and divide it out.
/// The minimal factor is found as the south-east boundary of the root
/// support on the cylinder: on every anti-diagonal it passes through the
/// support point with the least y - x. Throws domain_error when the
/// input does not verify the equation.
Factorization canonical_factorization(const ShiftPair& sp, const SolutionPair& s);

/// The two-vertex multiquiver solution: descending factorial polynomials
/// t_i = u(u+1)...(u+a_i-1) for a_i > 0 and (u-1)...(u-|a_i|) for
/// a_i < 0. Requires nonzero integers of opposite sign.
SolutionPair multiquiver_solution(const Int& alpha1, const Int& alpha2);

/// Canonical factorization of the multiquiver solution; checks that it
/// consists of gcd(|alpha1|, |alpha2|) copies of the zero-area path, one
/// per coset, at the predicted shifts.
Factorization multiquiver_factorization(const Int& alpha1, const Int& alpha2);

} // namespace dyckfact
