#pragma once

#include <optional>
#include <vector>

#include "dyckfact/rational.hpp"

namespace dyckfact {

/// Thrown when a polynomial does not split over the rationals; carries
/// the residual factor left after removing every rational root.
class non_splitting_error : public domain_error {
public:
    non_splitting_error(const std::string& msg, std::vector<Rat> residual)
        : domain_error(msg), residual_(std::move(residual)) {}

    /// Monic coefficient vector (descending degree) of the residual.
    const std::vector<Rat>& residual_coeffs() const { return residual_; }

private:
    std::vector<Rat> residual_;
};

/// Monic polynomial over the rationals that splits into linear factors.
///
/// The sorted root multiset is the source of truth; the coefficient
/// vector (descending degree, leading 1) is derived on construction and
/// kept for verification and I/O. Degree 0 is the constant 1.
class MonicPoly {
public:
    MonicPoly() : coeffs_{Rat(1)} {}

    static MonicPoly one() { return MonicPoly(); }

    static MonicPoly from_roots(std::vector<Rat> roots);

    /// Extracts all roots by repeated application of the rational root
    /// theorem. Throws non_splitting_error if a nonconstant factor with
    /// no rational root remains; requires a leading coefficient of 1.
    static MonicPoly from_coeffs(std::vector<Rat> coeffs);

    const std::vector<Rat>& roots() const { return roots_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    std::size_t degree() const { return roots_.size(); }
    bool is_one() const { return roots_.empty(); }

    Rat eval(const Rat& u) const;
    bool has_root(const Rat& r) const;

    friend bool operator==(const MonicPoly& a, const MonicPoly& b) { return a.roots_ == b.roots_; }

private:
    std::vector<Rat> roots_;  // ascending
    std::vector<Rat> coeffs_; // descending degree, coeffs_[0] == 1
};

/// Substitution u -> u + c; roots move by -c.
MonicPoly shift_poly(const MonicPoly& p, const Rat& c);

/// Ring product: multiset union of roots.
MonicPoly mul(const MonicPoly& a, const MonicPoly& b);

/// Quotient a/b when the roots of b form a sub-multiset of the roots
/// of a; nullopt otherwise.
std::optional<MonicPoly> divide_exact(const MonicPoly& a, const MonicPoly& b);

/// Pair of monic polynomials; candidate or verified solution.
struct SolutionPair {
    MonicPoly p1;
    MonicPoly p2;

    bool is_trivial() const { return p1.is_one() && p2.is_one(); }
    std::size_t total_degree() const { return p1.degree() + p2.degree(); }

    friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
};

SolutionPair mul(const SolutionPair& a, const SolutionPair& b);
std::optional<SolutionPair> divide_exact(const SolutionPair& a, const SolutionPair& b);

} // namespace dyckfact
