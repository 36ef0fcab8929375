#include "dyckfact/paths.hpp"

#include <cassert>
#include <numeric>
#include <optional>
#include <string>

namespace dyckfact {

LatticePath LatticePath::from_points(std::vector<Point> pts) {
    if (pts.empty() || pts.front() != Point{0, 0})
        throw domain_error("lattice path must start at the origin");
    for (std::size_t i = 1; i < pts.size(); ++i) {
        bool right = pts[i] == Point{pts[i - 1].x + 1, pts[i - 1].y};
        bool up = pts[i] == Point{pts[i - 1].x, pts[i - 1].y + 1};
        if (!right && !up) throw domain_error("lattice path steps must be unit right or up");
    }
    return LatticePath{std::move(pts)};
}

LatticePath word_to_path(const Word& w) {
    std::vector<Point> pts;
    pts.reserve(w.length() + 1);
    Point cur{0, 0};
    pts.push_back(cur);
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (w.at(i) == 1)
            ++cur.x;
        else
            ++cur.y;
        pts.push_back(cur);
    }
    return LatticePath{std::move(pts)};
}

Word path_to_word(const LatticePath& p) {
    std::string s;
    s.reserve(p.points.size() - 1);
    for (std::size_t i = 1; i < p.points.size(); ++i)
        s.push_back(p.points[i].x > p.points[i - 1].x ? '1' : '2');
    return Word(s);
}

bool is_dyck(const LatticePath& p) {
    auto [m, n] = p.endpoint();
    for (const Point& pt : p.points)
        if (static_cast<long long>(m) * pt.y < static_cast<long long>(n) * pt.x) return false;
    return true;
}

DyckPath DyckPath::from_word(const Word& w) {
    if (w.empty()) throw domain_error("a Dyck path must be nonempty");
    long m = static_cast<long>(w.count(1));
    long n = static_cast<long>(w.count(2));
    if (m <= 0 || n <= 0 || std::gcd(m, n) != 1)
        throw domain_error("Dyck path endpoint (" + std::to_string(m) + ", " + std::to_string(n) +
                           ") must have coprime positive coordinates");
    if (!is_dyck(word_to_path(w)))
        throw domain_error("word '" + w.str() + "' dips below the line m*y = n*x");
    return DyckPath(w, static_cast<int>(m), static_cast<int>(n));
}

std::vector<DyckPath> enumerate_dyck(int m, int n, int max_size) {
    if (m <= 0 || n <= 0 || std::gcd(m, n) != 1)
        throw domain_error("enumeration requires coprime positive (m, n)");
    if (m + n > max_size)
        throw domain_error("m + n = " + std::to_string(m + n) + " exceeds the size bound " +
                           std::to_string(max_size));
    std::vector<DyckPath> out;
    std::string word;
    word.reserve(static_cast<std::size_t>(m + n));
    // Depth-first with right steps tried first: emits words in
    // lexicographic order.
    auto rec = [&](auto&& self, long x, long y) -> void {
        if (x == m && y == n) {
            out.push_back(DyckPath::from_word(Word(word)));
            return;
        }
        if (x < m && static_cast<long long>(m) * y >= static_cast<long long>(n) * (x + 1)) {
            word.push_back('1');
            self(self, x + 1, y);
            word.pop_back();
        }
        if (y < n) {
            word.push_back('2');
            self(self, x, y + 1);
            word.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

OrbitRep canonical_orbit_rep(const ShiftPair& sp, const Word& w) {
    if (!is_cyclically_irreducible(sp, w))
        throw domain_error("word '" + w.str() + "' is not cyclically irreducible");
    std::optional<OrbitRep> found;
    for (std::size_t k = 0; k < w.length(); ++k) {
        Word rotated = shift(w, static_cast<long>(k));
        if (is_dyck(word_to_path(rotated))) {
            assert(!found && "more than one Dyck rotation in an orbit");
            found = OrbitRep{k, DyckPath::from_word(rotated)};
#ifdef NDEBUG
            break;
#endif
        }
    }
    if (!found) throw std::logic_error("no Dyck rotation found in an irreducible orbit");
    return *found;
}

long area(const DyckPath& d) {
    // Height of the right step leaving column x.
    std::vector<long> step_height(static_cast<std::size_t>(d.m()));
    LatticePath p = d.path();
    for (std::size_t i = 1; i < p.points.size(); ++i)
        if (p.points[i].x > p.points[i - 1].x)
            step_height[static_cast<std::size_t>(p.points[i - 1].x)] = p.points[i].y;
    long cells = 0;
    long m = d.m(), n = d.n();
    for (long x = 0; x < m; ++x) {
        // Cell [x, x+1] x [y, y+1] counts iff it clears the line at its
        // south-east corner and sits under the path's step row.
        long ymin = (n * (x + 1) + m - 1) / m; // ceil(n(x+1)/m)
        long ymax = step_height[static_cast<std::size_t>(x)] - 1;
        if (ymax >= ymin) cells += ymax - ymin + 1;
    }
    return cells;
}

DyckPath zero_area_path(int m, int n) {
    if (m <= 0 || n <= 0 || std::gcd(m, n) != 1)
        throw domain_error("zero-area path requires coprime positive (m, n)");
    // Greedy: with weights 1 -> -n and 2 -> +m, keep every partial sum in
    // [0, m+n-1]; at each position only one choice stays inside.
    long N = m + n;
    std::string word;
    long sum = 0;
    for (long i = 0; i < N; ++i) {
        if (sum >= n) {
            word.push_back('1');
            sum -= n;
        } else {
            word.push_back('2');
            sum += m;
        }
    }
    DyckPath d = DyckPath::from_word(Word(word));
    assert(area(d) == 0);
    return d;
}

namespace {

struct LiftedPath {
    const CylPath* cp;
    std::vector<Point> pts; // translated by the base point
    Int d0;                 // anti-diagonal of the first point

    explicit LiftedPath(const CylPath& c) : cp(&c), pts(c.path.path().points) {
        d0 = c.base.r + c.base.s;
    }

    // y - x at anti-diagonal d of the periodic staircase extension.
    Int f_at(const Int& d) const {
        long period = cp->path.m() + cp->path.n();
        Int t = floor_div(d - d0, Int(period));
        long idx = Int(d - d0 - t * period).get_si();
        const Point& p = pts[static_cast<std::size_t>(idx)];
        Int x = Int(p.x) + cp->base.r + t * cp->path.m();
        Int y = Int(p.y) + cp->base.s + t * cp->path.n();
        return y - x;
    }
};

} // namespace

bool cyl_leq(const CylPath& a, const CylPath& b) {
    if (a.path.m() != b.path.m() || a.path.n() != b.path.n())
        throw domain_error("cannot compare cylindrical paths on different cylinders");
    LiftedPath la(a), lb(b);
    Int start = la.d0 < lb.d0 ? la.d0 : lb.d0;
    int period = a.path.m() + a.path.n();
    for (int i = 0; i < period; ++i) {
        Int d = start + i;
        if (la.f_at(d) > lb.f_at(d)) return false;
    }
    return true;
}

} // namespace dyckfact
