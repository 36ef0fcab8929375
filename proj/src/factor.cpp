#include "dyckfact/factor.hpp"

#include <algorithm>
#include <optional>

namespace dyckfact {

namespace {

using RootMultiset = std::map<Rat, long>;

RootMultiset to_multiset(const MonicPoly& p) {
    RootMultiset ms;
    for (const Rat& r : p.roots()) ++ms[r];
    return ms;
}

void require_verified(const ShiftPair& sp, const SolutionPair& s, const char* op) {
    if (!verify(sp, s))
        throw domain_error(std::string(op) + " requires a pair satisfying the equation");
}

// --- south-east boundary extraction -------------------------------------
//
// Within one coset, every remaining root maps to a point of the cylinder
// Z^2 / Z(m, n). Each irreducible factor of the remainder covers m + n of
// those points, and the minimal factor in the south-east order is below
// every other factor on every anti-diagonal. Since any support point lies
// on some factor, the minimal factor is exactly the set of south-east-most
// support points, one per anti-diagonal class.

struct CylPoint {
    Int x, y; // a lift to Z^2 relative to the coset representative
};

class CosetExtractor {
public:
    CosetExtractor(const ShiftPair& sp, const Rat& rep, const SolutionPair& part)
        : sp_(sp), rep_(rep), r1_(to_multiset(part.p1)), r2_(to_multiset(part.p2)) {
        m_ = sp.mn().first;
        n_ = sp.mn().second;
        Int total = m_ + n_;
        if (!total.fits_slong_p())
            throw domain_error("m + n exceeds any representable solution degree");
        period_ = total.get_si();
    }

    std::vector<FactorLabel> run() {
        std::vector<FactorLabel> out;
        while (!r1_.empty() || !r2_.empty()) out.push_back(extract_minimal());
        return out;
    }

private:
    Rat value_of(const CylPoint& p) const {
        return rep_ + Rat(p.x) * sp_.alpha1() + Rat(p.y) * sp_.alpha2();
    }

    FactorLabel extract_minimal() {
        // Support points of the remaining roots (a value present in both
        // components contributes the same point twice, harmlessly).
        std::vector<LatticeCoord> support;
        for (const RootMultiset* ms : {&r1_, &r2_})
            for (const auto& [v, cnt] : *ms) {
                (void)cnt;
                support.push_back(decompose(sp_, v - rep_));
            }
        Int window_base = support.front().r + support.front().s;
        for (const LatticeCoord& c : support)
            if (c.r + c.s < window_base) window_base = c.r + c.s;
        // For each anti-diagonal of the window keep the lift with the
        // least y - x.
        struct Lift {
            CylPoint pt;
            Int f;
            bool set = false;
        };
        std::vector<Lift> best(static_cast<std::size_t>(period_));
        for (const LatticeCoord& c : support) {
            Int off = c.r + c.s - window_base;
            Int tfloor = floor_div(off, Int(period_));
            long slot = Int(off - tfloor * period_).get_si();
            CylPoint lift{c.r - tfloor * m_, c.s - tfloor * n_};
            Int f = lift.y - lift.x;
            auto& b = best[static_cast<std::size_t>(slot)];
            if (!b.set || f < b.f) b = Lift{lift, f, true};
        }
        // Chain the per-diagonal minima into a closed path on the cylinder.
        std::vector<CylPoint> pts;
        pts.reserve(static_cast<std::size_t>(period_ + 1));
        for (long i = 0; i < period_; ++i) {
            const Lift& b = best[static_cast<std::size_t>(i)];
            if (!b.set)
                throw std::logic_error("root support misses an anti-diagonal on a verified part");
            pts.push_back(b.pt);
        }
        pts.push_back(CylPoint{pts.front().x + m_, pts.front().y + n_});
        std::string steps;
        steps.reserve(static_cast<std::size_t>(period_));
        for (long i = 0; i < period_; ++i) {
            const CylPoint& a = pts[static_cast<std::size_t>(i)];
            const CylPoint& b = pts[static_cast<std::size_t>(i + 1)];
            if (b.x == a.x + 1 && b.y == a.y)
                steps.push_back('1');
            else if (b.x == a.x && b.y == a.y + 1)
                steps.push_back('2');
            else
                throw std::logic_error("south-east boundary of a verified part is not a lattice path");
        }
        // Rotate to the unique Dyck representative; its start is the base
        // point and carries the shift label.
        Word cyc(steps);
        std::optional<std::size_t> dyck_at;
        for (std::size_t k = 0; k < cyc.length(); ++k) {
            if (is_dyck(word_to_path(shift(cyc, static_cast<long>(k))))) {
                dyck_at = k;
                break;
            }
        }
        if (!dyck_at) throw std::logic_error("boundary word of a verified part has no Dyck rotation");
        Word dyck_word = shift(cyc, static_cast<long>(*dyck_at));
        Rat lambda = value_of(pts[*dyck_at]);
        // Consume one root per visited point; an up step enters a root of
        // the first component, a right step a root of the second.
        for (long i = 0; i < period_; ++i) {
            RootMultiset& ms = steps[static_cast<std::size_t>(i)] == '2' ? r1_ : r2_;
            Rat v = value_of(pts[static_cast<std::size_t>(i + 1)]);
            auto it = ms.find(v);
            if (it == ms.end())
                throw std::logic_error("division by the extracted minimal factor failed");
            if (--it->second == 0) ms.erase(it);
        }
        return FactorLabel{DyckPath::from_word(dyck_word), lambda};
    }

    const ShiftPair& sp_;
    Rat rep_;
    RootMultiset r1_;
    RootMultiset r2_;
    Int m_, n_;
    long period_;
};

} // namespace

Triviality triviality_check(const ShiftPair& sp, const SolutionPair& s) {
    if (s.is_trivial()) return Triviality::Trivial;
    if (!sp.has_mn()) return Triviality::NontrivialImpossible;
    return Triviality::Eligible;
}

std::map<CosetKey, SolutionPair> c_integral_split(const ShiftPair& sp, const SolutionPair& s) {
    require_verified(sp, s, "c_integral_split");
    std::map<CosetKey, SolutionPair> out;
    if (s.is_trivial()) return out;
    // A verified nontrivial solution forces (m, n) to exist.
    std::vector<Rat> all = s.p1.roots();
    all.insert(all.end(), s.p2.roots().begin(), s.p2.roots().end());
    std::sort(all.begin(), all.end());
    std::vector<Rat> reps;
    auto rep_of = [&](const Rat& v) -> Rat {
        for (const Rat& r : reps)
            if (lattice_member(sp, v - r)) return r;
        reps.push_back(v); // ascending scan: first value seen is the minimum
        return v;
    };
    std::map<Rat, std::pair<std::vector<Rat>, std::vector<Rat>>> grouped;
    for (const Rat& v : all) rep_of(v);
    for (const Rat& v : s.p1.roots()) grouped[rep_of(v)].first.push_back(v);
    for (const Rat& v : s.p2.roots()) grouped[rep_of(v)].second.push_back(v);
    for (auto& [rep, pr] : grouped)
        out.emplace(CosetKey{rep}, SolutionPair{MonicPoly::from_roots(std::move(pr.first)),
                                                MonicPoly::from_roots(std::move(pr.second))});
    return out;
}

std::size_t Factorization::factor_count() const {
    std::size_t k = 0;
    for (const auto& c : cosets) k += c.factors.size();
    return k;
}

SolutionPair Factorization::reconstruct(const ShiftPair& sp) const {
    SolutionPair acc{MonicPoly::one(), MonicPoly::one()};
    for (const auto& c : cosets)
        for (const auto& f : c.factors) acc = mul(acc, fundamental(sp, f.path, f.lambda).pair);
    return acc;
}

std::pair<Word, Rat> find_fundamental_divisor(const ShiftPair& sp, const SolutionPair& s) {
    require_verified(sp, s, "find_fundamental_divisor");
    if (s.is_trivial())
        throw domain_error("the trivial solution has no fundamental divisor");
    sp.mn();
    // Deterministic start: smallest root by (coset representative,
    // xi-coordinate within the coset), both ordered lexicographically.
    std::vector<Rat> all = s.p1.roots();
    all.insert(all.end(), s.p2.roots().begin(), s.p2.roots().end());
    std::sort(all.begin(), all.end());
    Rat lambda0 = all.front();
    {
        std::vector<Rat> reps;
        auto rep_of = [&](const Rat& v) -> Rat {
            for (const Rat& r : reps)
                if (lattice_member(sp, v - r)) return r;
            reps.push_back(v);
            return v;
        };
        std::optional<std::pair<Rat, Int>> best_key;
        for (const Rat& v : all) {
            Rat rep = rep_of(v);
            Int x = xi(sp, decompose(sp, v - rep));
            std::pair<Rat, Int> key{rep, x};
            if (!best_key || key < *best_key) {
                best_key = key;
                lambda0 = v;
            }
        }
    }
    // Chase: from lambda, prefer the letter-1 move when both apply.
    auto next_letter = [&](const Rat& lambda) -> int {
        if (s.p2.has_root(lambda + sp.alpha1())) return 1;
        if (s.p1.has_root(lambda + sp.alpha2())) return 2;
        throw domain_error("root chase left the zero set; not a solution");
    };
    std::vector<Rat> seen{lambda0};
    std::string letters; // letters[k] moves lambda_k to lambda_{k+1}
    for (;;) {
        int j = next_letter(seen.back());
        Rat nxt = seen.back() + (j == 1 ? sp.alpha1() : sp.alpha2());
        letters.push_back(static_cast<char>('0' + j));
        auto hit = std::find(seen.begin(), seen.end(), nxt);
        if (hit != seen.end()) {
            std::size_t r = static_cast<std::size_t>(hit - seen.begin());
            Word word(letters.substr(r));
            return {word, seen[r]};
        }
        seen.push_back(nxt);
    }
}

Factorization canonical_factorization(const ShiftPair& sp, const SolutionPair& s) {
    require_verified(sp, s, "canonical_factorization");
    Factorization out;
    for (const auto& [key, part] : c_integral_split(sp, s)) {
        CosetExtractor ex(sp, key.representative, part);
        out.cosets.push_back(CosetFactors{key, ex.run()});
    }
    return out;
}

SolutionPair multiquiver_solution(const Int& alpha1, const Int& alpha2) {
    if (alpha1 == 0 || alpha2 == 0 || sgn(alpha1) == sgn(alpha2))
        throw domain_error("multiquiver shifts must be nonzero integers of opposite sign");
    auto poly_for = [](const Int& a) {
        std::vector<Rat> roots;
        if (a > 0)
            for (Int k = 0; k < a; ++k) roots.push_back(Rat(Int(-k)));
        else
            for (Int k = 1; k <= -a; ++k) roots.push_back(Rat(k));
        return MonicPoly::from_roots(std::move(roots));
    };
    return SolutionPair{poly_for(alpha1), poly_for(alpha2)};
}

Factorization multiquiver_factorization(const Int& alpha1, const Int& alpha2) {
    SolutionPair s = multiquiver_solution(alpha1, alpha2);
    ShiftPair sp = ShiftPair::create(Rat(alpha1), Rat(alpha2));
    Factorization fact = canonical_factorization(sp, s);
    // Structural check: gcd copies of the zero-area path, one per coset,
    // at shifts -(max-1), ..., -(max-gcd).
    Int g;
    mpz_gcd(g.get_mpz_t(), alpha1.get_mpz_t(), alpha2.get_mpz_t());
    Int alpha = alpha1 > alpha2 ? alpha1 : alpha2;
    auto [m, n] = sp.mn();
    DyckPath pi0 = zero_area_path(static_cast<int>(m.get_si()), static_cast<int>(n.get_si()));
    std::vector<Rat> expected_lambdas;
    for (Int j = 1; j <= g; ++j) expected_lambdas.push_back(Rat(Int(j - alpha)));
    std::vector<Rat> got_lambdas;
    for (const auto& c : fact.cosets) {
        if (c.factors.size() != 1 || !(c.factors.front().path == pi0))
            throw std::logic_error("multiquiver factorization deviates from the zero-area form");
        got_lambdas.push_back(c.factors.front().lambda);
    }
    std::sort(got_lambdas.begin(), got_lambdas.end());
    std::sort(expected_lambdas.begin(), expected_lambdas.end());
    if (got_lambdas != expected_lambdas)
        throw std::logic_error("multiquiver factorization shifts deviate from the predicted set");
    return fact;
}

} // namespace dyckfact
