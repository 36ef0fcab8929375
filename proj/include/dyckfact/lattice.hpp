#pragma once

#include <optional>
#include <utility>

#include "dyckfact/rational.hpp"

namespace dyckfact {

/// Coordinates (r, s) of a lattice element r*alpha1 + s*alpha2 with
/// r in [0, m-1]. Unique because gcd(m, n) = 1.
struct LatticeCoord {
    Int r;
    Int s;

    friend bool operator==(const LatticeCoord&, const LatticeCoord&) = default;
};

/// Returns the unique coprime positive pair (m, n) with
/// m*alpha1 + n*alpha2 = 0, or nullopt when no positive integer
/// combination vanishes (for rationals: when the signs agree).
/// Throws domain_error if either input is zero.
std::optional<std::pair<Int, Int>> derive_mn(const Rat& alpha1, const Rat& alpha2);

/// The pair of shift parameters (alpha1, alpha2), both nonzero, together
/// with the derived invariants: the coprime pair (m, n) when it exists and
/// the generator gamma = alpha2/m of the lattice Z*alpha1 + Z*alpha2.
class ShiftPair {
public:
    /// Throws domain_error if either parameter is zero.
    static ShiftPair create(Rat alpha1, Rat alpha2);

    const Rat& alpha1() const { return alpha1_; }
    const Rat& alpha2() const { return alpha2_; }

    bool has_mn() const { return mn_.has_value(); }

    /// Throws domain_error when no (m, n) exists.
    const std::pair<Int, Int>& mn() const;

    /// Lattice generator alpha2/m (sign not normalized; only ratios
    /// delta/gamma are ever used). Throws when (m, n) is absent.
    const Rat& gamma() const;

    friend bool operator==(const ShiftPair& a, const ShiftPair& b) {
        return a.alpha1_ == b.alpha1_ && a.alpha2_ == b.alpha2_;
    }

private:
    ShiftPair(Rat a1, Rat a2) : alpha1_(std::move(a1)), alpha2_(std::move(a2)) {}

    Rat alpha1_;
    Rat alpha2_;
    std::optional<std::pair<Int, Int>> mn_;
    std::optional<Rat> gamma_;
};

/// True iff delta lies in the lattice Z*alpha1 + Z*alpha2, i.e.
/// delta/gamma is an integer. Requires (m, n) present.
bool lattice_member(const ShiftPair& sp, const Rat& delta);

/// Writes delta in the lattice as r*alpha1 + s*alpha2 with r in [0, m-1].
/// Throws domain_error if delta is not a lattice member.
LatticeCoord decompose(const ShiftPair& sp, const Rat& delta);

/// The coordinate bijection lattice -> Z, (r, s) |-> r + s*m.
Int xi(const ShiftPair& sp, const LatticeCoord& coord);

/// Value r*alpha1 + s*alpha2 of a coordinate pair (inverse of decompose).
Rat recompose(const ShiftPair& sp, const LatticeCoord& coord);

} // namespace dyckfact
