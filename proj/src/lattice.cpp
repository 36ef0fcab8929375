#include "dyckfact/lattice.hpp"

namespace dyckfact {

std::optional<std::pair<Int, Int>> derive_mn(const Rat& alpha1, const Rat& alpha2) {
    if (alpha1.is_zero() || alpha2.is_zero())
        throw domain_error("derive_mn requires nonzero shift parameters");
    Rat ratio = -alpha2 / alpha1; // m/n in lowest terms when positive
    if (ratio.sign() <= 0) return std::nullopt;
    return std::make_pair(ratio.num(), ratio.den());
}

ShiftPair ShiftPair::create(Rat alpha1, Rat alpha2) {
    if (alpha1.is_zero() || alpha2.is_zero())
        throw domain_error("shift parameters must be nonzero (degenerate cases are classified separately)");
    ShiftPair sp(std::move(alpha1), std::move(alpha2));
    sp.mn_ = derive_mn(sp.alpha1_, sp.alpha2_);
    if (sp.mn_) sp.gamma_ = sp.alpha2_ / Rat(sp.mn_->first);
    return sp;
}

const std::pair<Int, Int>& ShiftPair::mn() const {
    if (!mn_) throw domain_error("no positive integer combination of the shifts vanishes");
    return *mn_;
}

const Rat& ShiftPair::gamma() const {
    mn();
    return *gamma_;
}

bool lattice_member(const ShiftPair& sp, const Rat& delta) {
    Rat t = delta / sp.gamma();
    return t.is_integer();
}

LatticeCoord decompose(const ShiftPair& sp, const Rat& delta) {
    Rat tq = delta / sp.gamma();
    if (!tq.is_integer())
        throw domain_error("value " + delta.str() + " is not in the shift lattice");
    const auto& [m, n] = sp.mn();
    Int t = tq.num();
    // delta = t*gamma with gamma = alpha2/m, alpha1 = -n*gamma, so
    // r*alpha1 + s*alpha2 = (s*m - r*n)*gamma and we solve s*m - r*n = t.
    Int r;
    if (m == 1) {
        r = 0;
    } else {
        Int ninv;
        mpz_invert(ninv.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
        Int mt = (-t * ninv) % m;
        r = mt < 0 ? Int(mt + m) : mt;
    }
    Int s = (t + r * n) / m;
    return LatticeCoord{r, s};
}

Int xi(const ShiftPair& sp, const LatticeCoord& coord) {
    return coord.r + coord.s * sp.mn().first;
}

Rat recompose(const ShiftPair& sp, const LatticeCoord& coord) {
    return Rat(coord.r) * sp.alpha1() + Rat(coord.s) * sp.alpha2();
}

} // namespace dyckfact
