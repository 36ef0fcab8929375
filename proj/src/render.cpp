#include "dyckfact/render.hpp"

#include <sstream>

namespace dyckfact {

std::string render_path(const DyckPath& d) {
    long m = d.m(), n = d.n();
    // Canvas cell (2x, 2(n-y)) holds lattice point (x, y); odd cells hold
    // edges.
    std::size_t w = static_cast<std::size_t>(2 * m + 1);
    std::size_t h = static_cast<std::size_t>(2 * n + 1);
    std::vector<std::string> canvas(h, std::string(w, ' '));
    for (long x = 0; x <= m; ++x)
        for (long y = 0; y <= n; ++y)
            canvas[static_cast<std::size_t>(2 * (n - y))][static_cast<std::size_t>(2 * x)] = '.';
    // Mark the line m*y = n*x where it crosses a canvas column.
    for (long c = 0; c <= 2 * m; ++c) {
        // y in canvas half-units: row = 2n - c*n/m, rounded to nearest.
        long num = 2 * n * m - c * n;
        long row = (num + m / 2) / m;
        if (row >= 0 && row < static_cast<long>(h)) {
            char& cell = canvas[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
            if (cell == ' ' || cell == '.') cell = '*';
        }
    }
    LatticePath p = d.path();
    for (std::size_t i = 1; i < p.points.size(); ++i) {
        const Point& a = p.points[i - 1];
        const Point& b = p.points[i];
        if (b.x > a.x)
            canvas[static_cast<std::size_t>(2 * (n - a.y))][static_cast<std::size_t>(2 * a.x + 1)] = '_';
        else
            canvas[static_cast<std::size_t>(2 * (n - b.y) + 1)][static_cast<std::size_t>(2 * a.x)] = '|';
    }
    for (const Point& pt : p.points)
        canvas[static_cast<std::size_t>(2 * (n - pt.y))][static_cast<std::size_t>(2 * pt.x)] = 'o';
    std::ostringstream os;
    os << d.word().str() << "  (" << m << ", " << n << ")  area " << area(d) << "\n";
    for (const std::string& row : canvas) os << row << "\n";
    return os.str();
}

std::string render_paths(const std::vector<DyckPath>& ds) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (i) os << "\n";
        os << render_path(ds[i]);
    }
    return os.str();
}

std::string render_cylinder(const std::vector<CylPath>& cs) {
    if (cs.empty()) return "";
    long m = cs.front().path.m();
    for (const CylPath& c : cs)
        if (c.path.m() != m || c.path.n() != cs.front().path.n())
            throw domain_error("cannot draw cylindrical paths with different periods");
    // Gather normalized points (x in [0, m], y unbounded).
    struct Mark {
        long x;
        Int y;
        std::size_t idx;
    };
    std::vector<Mark> marks;
    Int ymin, ymax;
    bool first = true;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        LatticePath p = cs[i].path.path();
        for (const Point& pt : p.points) {
            long x = pt.x + static_cast<long>(cs[i].base.r.get_si());
            Int y = Int(pt.y) + cs[i].base.s;
            if (x > m) {
                x -= static_cast<long>(m);
                y -= cs[i].path.n();
            }
            marks.push_back(Mark{x, y, i});
            if (first || y < ymin) ymin = y;
            if (first || y > ymax) ymax = y;
            first = false;
        }
    }
    long rows = Int(ymax - ymin).get_si() + 1;
    std::vector<std::string> canvas(static_cast<std::size_t>(rows),
                                    std::string(static_cast<std::size_t>(m + 1), '.'));
    for (const Mark& mk : marks) {
        long row = rows - 1 - Int(mk.y - ymin).get_si();
        char& cell = canvas[static_cast<std::size_t>(row)][static_cast<std::size_t>(mk.x)];
        char tag = mk.idx < 9 ? static_cast<char>('1' + mk.idx) : '+';
        cell = (cell == '.' || cell == tag) ? tag : '#';
    }
    std::ostringstream os;
    os << "cylinder (" << m << ", " << cs.front().path.n() << "), columns 0.." << m
       << " with x=" << m << " glued to x=0 one period down\n";
    for (long r = 0; r < rows; ++r) {
        Int y = ymax - r;
        os << canvas[static_cast<std::size_t>(r)] << "   y=" << y.get_str() << "\n";
    }
    return os.str();
}

} // namespace dyckfact
