#pragma once

#include <cstddef>
#include <vector>

#include "dyckfact/words.hpp"

namespace dyckfact {

/// Default bound on m + n for path enumeration (Catalan-scale growth).
/// Overridable per call and, in the CLI, via --max-size or
/// the DYCKFACT_MAX_SIZE environment variable.
inline constexpr int kDefaultMaxSize = 30;

struct Point {
    long x;
    long y;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Lattice path with unit steps to the right and up, starting at (0, 0).
struct LatticePath {
    std::vector<Point> points;

    /// Validates the start point and the step set.
    static LatticePath from_points(std::vector<Point> pts);

    Point endpoint() const { return points.back(); }
};

/// Entry 1 becomes a right step, entry 2 an up step.
LatticePath word_to_path(const Word& w);

/// Inverse of word_to_path.
Word path_to_word(const LatticePath& p);

/// True iff m*y >= n*x holds at every point, where (m, n) is the endpoint.
bool is_dyck(const LatticePath& p);

/// A generalized Dyck path: endpoint (m, n) with gcd(m, n) = 1, staying
/// weakly above the line m*y = n*x. Stored by its step word.
class DyckPath {
public:
    /// Throws domain_error unless the word traces a valid Dyck path with
    /// coprime endpoint.
    static DyckPath from_word(const Word& w);

    const Word& word() const { return word_; }
    int m() const { return m_; }
    int n() const { return n_; }
    LatticePath path() const { return word_to_path(word_); }

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend auto operator<=>(const DyckPath& a, const DyckPath& b) { return a.word_ <=> b.word_; }

private:
    DyckPath(Word w, int m, int n) : word_(std::move(w)), m_(m), n_(n) {}

    Word word_;
    int m_;
    int n_;
};

/// All generalized Dyck paths with endpoint (m, n), in lexicographic word
/// order. Throws domain_error if gcd(m, n) != 1 or m + n > max_size.
std::vector<DyckPath> enumerate_dyck(int m, int n, int max_size = kDefaultMaxSize);

struct OrbitRep {
    std::size_t shift; ///< rotation that lands on the Dyck representative
    DyckPath path;
};

/// The unique rotation of a cyclically irreducible word whose path is a
/// Dyck path. Throws domain_error if the word is not cyclically
/// irreducible for the given shifts.
OrbitRep canonical_orbit_rep(const ShiftPair& sp, const Word& w);

/// Number of complete unit lattice cells between the path and the line
/// m*y = n*x.
long area(const DyckPath& d);

/// The unique zero-area path with endpoint (m, n), built by the greedy
/// partial-sum rule. Requires gcd(m, n) = 1.
DyckPath zero_area_path(int m, int n);

/// Dyck path translated onto the cylinder Z^2 / Z(m, n), labeled by its
/// base point (base.r in [0, m-1], base.s in Z).
struct CylPath {
    DyckPath path;
    LatticeCoord base;

    friend bool operator==(const CylPath&, const CylPath&) = default;
};

/// South-east partial order on cylindrical paths: a <= b iff at every
/// anti-diagonal the (unique) point of a lies weakly south-east of the
/// point of b. Both paths are lifted to periodic staircases and compared
/// over one full period of m + n anti-diagonals; the result is
/// independent of the choice of origin. Throws on mismatched (m, n).
bool cyl_leq(const CylPath& a, const CylPath& b);

} // namespace dyckfact
