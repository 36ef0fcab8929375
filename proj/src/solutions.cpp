#include "dyckfact/solutions.hpp"

#include <cassert>

namespace dyckfact {

SolutionPair fundamental_from_word(const ShiftPair& sp, const Word& w) {
    if (!in_M(sp, w))
        throw domain_error("word '" + w.str() + "' is not in the submonoid");
    std::vector<Rat> roots1, roots2;
    Rat eta(0);
    for (std::size_t k = 0; k < w.length(); ++k) {
        int letter = w.at(k);
        eta += letter == 1 ? sp.alpha1() : sp.alpha2();
        (letter == 2 ? roots1 : roots2).push_back(eta);
    }
    return SolutionPair{MonicPoly::from_roots(std::move(roots1)),
                        MonicPoly::from_roots(std::move(roots2))};
}

FundamentalSolution fundamental(const ShiftPair& sp, const DyckPath& d, const Rat& lambda) {
    const auto& [m, n] = sp.mn();
    if (Int(d.m()) != m || Int(d.n()) != n)
        throw domain_error("path endpoint (" + std::to_string(d.m()) + ", " + std::to_string(d.n()) +
                           ") does not match the shift pair");
    SolutionPair base = fundamental_from_word(sp, d.word());
    SolutionPair pair{shift_poly(base.p1, -lambda), shift_poly(base.p2, -lambda)};
#ifndef NDEBUG
    // Cross-check against the closed form: component 1 collects the points
    // entered by up steps, component 2 those entered by right steps, each
    // contributing the root lambda + x*alpha1 + y*alpha2.
    {
        std::vector<Rat> r1, r2;
        LatticePath p = d.path();
        for (std::size_t i = 1; i < p.points.size(); ++i) {
            Rat root = lambda + Rat(p.points[i].x) * sp.alpha1() + Rat(p.points[i].y) * sp.alpha2();
            bool up = p.points[i].y > p.points[i - 1].y;
            (up ? r1 : r2).push_back(root);
        }
        assert(pair == (SolutionPair{MonicPoly::from_roots(std::move(r1)),
                                     MonicPoly::from_roots(std::move(r2))}));
    }
#endif
    return FundamentalSolution{d, lambda, std::move(pair)};
}

bool verify(const ShiftPair& sp, const SolutionPair& s) {
    MonicPoly lhs = mul(s.p1, s.p2);
    MonicPoly rhs = mul(shift_poly(s.p1, sp.alpha2()), shift_poly(s.p2, sp.alpha1()));
    return lhs.coeffs() == rhs.coeffs();
}

std::optional<Rat> equivalent(const SolutionPair& a, const SolutionPair& b) {
    if (a.p1.degree() != b.p1.degree() || a.p2.degree() != b.p2.degree()) return std::nullopt;
    Rat shift(0);
    if (a.p1.degree() > 0)
        shift = a.p1.roots().front() - b.p1.roots().front();
    else if (a.p2.degree() > 0)
        shift = a.p2.roots().front() - b.p2.roots().front();
    else
        return Rat(0);
    auto shifted_matches = [&](const MonicPoly& pa, const MonicPoly& pb) {
        for (std::size_t i = 0; i < pa.degree(); ++i)
            if (pa.roots()[i] != pb.roots()[i] + shift) return false;
        return true;
    };
    if (shifted_matches(a.p1, b.p1) && shifted_matches(a.p2, b.p2)) return shift;
    return std::nullopt;
}

std::string to_string(DegenerateClass c) {
    switch (c) {
        case DegenerateClass::AllPairs: return "R1xR1";
        case DegenerateClass::FirstTrivial: return "{1}xR1";
        case DegenerateClass::SecondTrivial: return "R1x{1}";
    }
    return "?";
}

DegenerateClass classify_degenerate(const Rat& alpha1, const Rat& alpha2) {
    bool z1 = alpha1.is_zero(), z2 = alpha2.is_zero();
    if (!z1 && !z2)
        throw domain_error("both shift parameters are nonzero; use the main pipeline");
    if (z1 && z2) return DegenerateClass::AllPairs;
    return z1 ? DegenerateClass::FirstTrivial : DegenerateClass::SecondTrivial;
}

std::pair<ShiftPair, SolutionPair> rescale(const ShiftPair& sp, const SolutionPair& s,
                                           const Rat& gamma) {
    if (gamma.is_zero()) throw domain_error("rescaling factor must be nonzero");
    ShiftPair scaled = ShiftPair::create(sp.alpha1() / gamma, sp.alpha2() / gamma);
    auto scale_poly = [&](const MonicPoly& p) {
        std::vector<Rat> roots;
        roots.reserve(p.degree());
        for (const Rat& r : p.roots()) roots.push_back(r / gamma);
        return MonicPoly::from_roots(std::move(roots));
    };
    return {scaled, SolutionPair{scale_poly(s.p1), scale_poly(s.p2)}};
}

} // namespace dyckfact
