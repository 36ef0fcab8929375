#include "dyckfact/poly.hpp"

#include <algorithm>
#include <sstream>

namespace dyckfact {

namespace {

std::vector<Rat> expand(const std::vector<Rat>& roots) {
    std::vector<Rat> c{Rat(1)};
    for (const Rat& r : roots) {
        // multiply by (u - r)
        c.push_back(Rat(0));
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] -= r * c[i - 1];
    }
    return c;
}

// Horner evaluation of a descending-degree coefficient vector.
Rat eval_coeffs(const std::vector<Rat>& c, const Rat& u) {
    Rat acc(0);
    for (const Rat& ci : c) acc = acc * u + ci;
    return acc;
}

// Division by (u - r); remainder must be zero.
std::vector<Rat> deflate(const std::vector<Rat>& c, const Rat& r) {
    std::vector<Rat> q;
    q.reserve(c.size() - 1);
    Rat acc(0);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        acc = acc * r + c[i];
        q.push_back(acc);
    }
    return q;
}

std::vector<Int> positive_divisors(Int v) {
    Int a = abs(v);
    std::vector<Int> divs;
    for (Int i = 1; i * i <= a; ++i) {
        if (a % i == 0) {
            divs.push_back(i);
            if (i * i != a) divs.push_back(a / i);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::string coeffs_str(const std::vector<Rat>& c) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << c[i].str();
    os << "]";
    return os.str();
}

// One rational root of the (nonconstant, monic, nonzero constant term)
// polynomial, or nullopt. Candidates p/q with p dividing the cleared
// constant term and q dividing the cleared leading coefficient.
std::optional<Rat> find_rational_root(const std::vector<Rat>& c) {
    Int lcm(1);
    for (const Rat& ci : c) {
        Int d = ci.den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
    Int a0 = (c.back() * Rat(lcm)).num();
    std::vector<Int> ps = positive_divisors(a0);
    std::vector<Int> qs = positive_divisors(lcm);
    for (const Int& q : qs) {
        for (const Int& p : ps) {
            Rat cand(p, q);
            if (eval_coeffs(c, cand).is_zero()) return cand;
            if (eval_coeffs(c, -cand).is_zero()) return -cand;
        }
    }
    return std::nullopt;
}

} // namespace

MonicPoly MonicPoly::from_roots(std::vector<Rat> roots) {
    std::sort(roots.begin(), roots.end());
    MonicPoly p;
    p.coeffs_ = expand(roots);
    p.roots_ = std::move(roots);
    return p;
}

MonicPoly MonicPoly::from_coeffs(std::vector<Rat> coeffs) {
    if (coeffs.empty() || coeffs.front() != Rat(1))
        throw domain_error("coefficient vector must be monic (leading coefficient 1)");
    std::vector<Rat> roots;
    std::vector<Rat> cur = coeffs;
    while (cur.size() > 1) {
        if (cur.back().is_zero()) {
            roots.emplace_back(0);
            cur.pop_back();
            continue;
        }
        std::optional<Rat> r = find_rational_root(cur);
        if (!r)
            throw non_splitting_error(
                "polynomial does not split over the rationals; residual factor " + coeffs_str(cur),
                cur);
        while (cur.size() > 1 && eval_coeffs(cur, *r).is_zero()) {
            cur = deflate(cur, *r);
            roots.push_back(*r);
        }
    }
    MonicPoly p = from_roots(std::move(roots));
    if (p.coeffs_ != coeffs) throw std::logic_error("root extraction lost coefficients");
    return p;
}

Rat MonicPoly::eval(const Rat& u) const { return eval_coeffs(coeffs_, u); }

bool MonicPoly::has_root(const Rat& r) const {
    return std::binary_search(roots_.begin(), roots_.end(), r);
}

MonicPoly shift_poly(const MonicPoly& p, const Rat& c) {
    std::vector<Rat> roots;
    roots.reserve(p.degree());
    for (const Rat& r : p.roots()) roots.push_back(r - c);
    return MonicPoly::from_roots(std::move(roots));
}

MonicPoly mul(const MonicPoly& a, const MonicPoly& b) {
    std::vector<Rat> roots = a.roots();
    roots.insert(roots.end(), b.roots().begin(), b.roots().end());
    return MonicPoly::from_roots(std::move(roots));
}

std::optional<MonicPoly> divide_exact(const MonicPoly& a, const MonicPoly& b) {
    std::vector<Rat> rest;
    const auto& ra = a.roots();
    const auto& rb = b.roots();
    std::size_t i = 0, j = 0;
    while (i < ra.size() && j < rb.size()) {
        if (ra[i] == rb[j]) {
            ++i;
            ++j;
        } else if (ra[i] < rb[j]) {
            rest.push_back(ra[i++]);
        } else {
            return std::nullopt; // root of b missing from a
        }
    }
    if (j < rb.size()) return std::nullopt;
    rest.insert(rest.end(), ra.begin() + static_cast<std::ptrdiff_t>(i), ra.end());
    return MonicPoly::from_roots(std::move(rest));
}

SolutionPair mul(const SolutionPair& a, const SolutionPair& b) {
    return SolutionPair{mul(a.p1, b.p1), mul(a.p2, b.p2)};
}

std::optional<SolutionPair> divide_exact(const SolutionPair& a, const SolutionPair& b) {
    auto q1 = divide_exact(a.p1, b.p1);
    if (!q1) return std::nullopt;
    auto q2 = divide_exact(a.p2, b.p2);
    if (!q2) return std::nullopt;
    return SolutionPair{std::move(*q1), std::move(*q2)};
}

} // namespace dyckfact
