#include "dyckfact/words.hpp"

#include <algorithm>
#include <numeric>

namespace dyckfact {

Word::Word(std::string_view s) : s_(s) {
    for (char c : s_)
        if (c != '1' && c != '2')
            throw parse_error("word entries must be '1' or '2': '" + s_ + "'");
}

std::size_t Word::count(int letter) const {
    return static_cast<std::size_t>(std::count(s_.begin(), s_.end(), static_cast<char>('0' + letter)));
}

Word operator+(const Word& a, const Word& b) { return Word(a.s_ + b.s_); }

Word shift(const Word& w, long k) {
    if (w.empty()) return w;
    long len = static_cast<long>(w.length());
    long r = ((k % len) + len) % len;
    const std::string& s = w.str();
    return Word(s.substr(static_cast<std::size_t>(r)) + s.substr(0, static_cast<std::size_t>(r)));
}

bool in_M(const ShiftPair& sp, const Word& w) {
    Rat sum = Rat(Int(w.count(1))) * sp.alpha1() + Rat(Int(w.count(2))) * sp.alpha2();
    return sum.is_zero();
}

bool is_cyclically_irreducible(const ShiftPair& sp, const Word& w) {
    if (!in_M(sp, w))
        throw domain_error("word '" + w.str() + "' is not in the submonoid");
    if (w.empty()) return false;
    const auto& [m, n] = sp.mn();
    return Int(w.length()) == m + n;
}

std::size_t balanced_window(const Word& w) {
    if (w.empty()) throw domain_error("balanced_window requires a nonempty word");
    std::size_t l1 = w.count(1), l2 = w.count(2);
    std::size_t d = std::gcd(l1, l2);
    std::size_t s1 = l1 / d, s2 = l2 / d;
    std::size_t win = s1 + s2;
    // Ones in the initial window of each rotation; update incrementally.
    std::size_t ones = 0;
    for (std::size_t i = 0; i < win; ++i) ones += w.at(i) == 1;
    std::size_t len = w.length();
    for (std::size_t r = 0; r < len; ++r) {
        if (ones == s1) return r;
        ones -= w.at(r) == 1;
        ones += w.at((r + win) % len) == 1;
    }
    throw std::logic_error("no balanced window found in a nonempty word");
}

std::optional<CyclicSplit> cyclic_split(const ShiftPair& sp, const Word& w) {
    if (!in_M(sp, w))
        throw domain_error("word '" + w.str() + "' is not in the submonoid");
    if (w.empty())
        throw domain_error("cyclic_split requires a nonempty word");
    const auto& [m, n] = sp.mn();
    if (Int(w.length()) == m + n) return std::nullopt;
    std::size_t k = balanced_window(w);
    Word rotated = shift(w, static_cast<long>(k));
    std::size_t win = static_cast<std::size_t>(m.get_ui() + n.get_ui());
    Word prefix(rotated.str().substr(0, win));
    Word suffix(rotated.str().substr(win));
    return CyclicSplit{k, prefix, suffix};
}

Int count_irr_orbits(const Int& m, const Int& n) {
    if (m <= 0 || n <= 0) throw domain_error("orbit count requires positive m, n");
    Int g;
    mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
    if (g != 1) throw domain_error("orbit count requires gcd(m, n) = 1");
    Int total = m + n;
    if (!total.fits_ulong_p())
        throw domain_error("m + n too large for orbit counting");
    Int b;
    mpz_bin_ui(b.get_mpz_t(), total.get_mpz_t(), m.get_ui());
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), b.get_mpz_t(), total.get_mpz_t());
    if (r != 0) throw std::logic_error("binomial(m+n, m) not divisible by m+n");
    return q;
}

} // namespace dyckfact
