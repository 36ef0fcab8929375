// Acceptance suite: end-to-end checks of the classification pipeline at
// desk scale. Each criterion prints one pass/fail line; the process exits
// with the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "dyckfact/factor.hpp"
#include "dyckfact/json_io.hpp"
#include "test_support.hpp"

using namespace dyckfact;
using test::shifted_fundamental;
using test::sp_for;

namespace {

struct failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw failure(what);
}

std::string key_of(const SolutionPair& s) { return to_json(s).dump(); }

// ---- criterion bodies ---------------------------------------------------

void worked_example_1() {
    ShiftPair sp = ShiftPair::create(Rat(2), Rat(-3));
    auto build = [&] {
        SolutionPair s = fundamental_from_word(sp, Word("21211"));
        require(s.p1 == MonicPoly::from_roots({Rat(-3), Rat(-4)}), "p1 mismatch");
        require(s.p2 == MonicPoly::from_roots({Rat(0), Rat(-1), Rat(-2)}), "p2 mismatch");
        require(verify(sp, s), "does not verify");
    };
    build();
    constexpr int reps = 50;
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) build();
    auto dt = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
    double per_call = dt.count() / reps;
    require(per_call < 1.0, "construction took " + std::to_string(per_call) + " ms");
}

void worked_example_2() {
    ShiftPair sp = ShiftPair::create(Rat(5), Rat(-3));
    SolutionPair s = fundamental_from_word(sp, Word("11221222"));
    require(s.p1 == MonicPoly::from_roots({Rat(7), Rat(6), Rat(4), Rat(3), Rat(0)}), "p1 mismatch");
    require(s.p2 == MonicPoly::from_roots({Rat(10), Rat(9), Rat(5)}), "p2 mismatch");
    require(verify(sp, s), "does not verify");
}

void orbit_count_corollary() {
    for (int m = 1; m <= 11; ++m)
        for (int n = 1; n <= 11; ++n) {
            if (m + n > 12 || std::gcd(m, n) != 1) continue;
            Int formula = count_irr_orbits(m, n);
            std::size_t paths = enumerate_dyck(m, n, 40).size();
            std::size_t orbits = test::brute_force_orbit_count(m, n);
            require(formula == Int(static_cast<unsigned long>(paths)),
                    "path count mismatch at (" + std::to_string(m) + "," + std::to_string(n) + ")");
            require(formula == Int(static_cast<unsigned long>(orbits)),
                    "orbit count mismatch at (" + std::to_string(m) + "," + std::to_string(n) + ")");
        }
}

void label_completeness() {
    const std::vector<Rat> lambdas{Rat(0), Rat(1, 2), Rat(5)};
    for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{3, 2}}) {
        ShiftPair sp = sp_for(m, n);
        auto paths = enumerate_dyck(m, n);

        // Labels build verified solutions and round-trip uniquely.
        std::map<std::string, std::pair<std::string, std::string>> seen;
        for (const DyckPath& d : paths)
            for (const Rat& lambda : lambdas) {
                FundamentalSolution fs = fundamental(sp, d, lambda);
                require(verify(sp, fs.pair), "fundamental does not verify");
                Factorization fact = canonical_factorization(sp, fs.pair);
                require(fact.factor_count() == 1, "irreducible split into several factors");
                const FactorLabel& fl = fact.cosets.front().factors.front();
                require(fl.path == d && fl.lambda == lambda, "label does not round-trip");
                auto [it, fresh] = seen.emplace(key_of(fs.pair),
                                                std::make_pair(d.word().str(), lambda.str()));
                require(fresh, "two labels built the same solution");
            }

        // Exhaustive window search: every verified candidate of the
        // irreducible degree lies in the labeled family.
        std::vector<Rat> window;
        for (int t = 0; t < 2 * (m + n); ++t) window.push_back(Rat(t) * sp.gamma());
        std::set<std::string> expected;
        for (const DyckPath& d : paths)
            for (const Rat& lambda : window) {
                SolutionPair s = fundamental(sp, d, lambda).pair;
                bool inside = true;
                for (const MonicPoly* p : {&s.p1, &s.p2})
                    for (const Rat& r : p->roots())
                        inside = inside && std::find(window.begin(), window.end(), r) != window.end();
                if (inside) expected.insert(key_of(s));
            }
        std::set<std::string> found;
        test::multisets_from(window, static_cast<std::size_t>(n), [&](const std::vector<Rat>& r1) {
            test::multisets_from(window, static_cast<std::size_t>(m), [&](const std::vector<Rat>& r2) {
                SolutionPair s{MonicPoly::from_roots(r1), MonicPoly::from_roots(r2)};
                if (verify(sp, s)) found.insert(key_of(s));
            });
        });
        require(found == expected, "window search disagrees with the labeled family at (" +
                                       std::to_string(m) + "," + std::to_string(n) + ")");
    }
}

void same_sign_exhaustive_search() {
    std::vector<Rat> pool;
    for (long v = -2; v <= 2; ++v) pool.push_back(Rat(v));
    for (auto [a, b] : {std::pair{1L, 1L}, std::pair{2L, 3L}, std::pair{1L, 2L}}) {
        ShiftPair sp = ShiftPair::create(Rat(a), Rat(b));
        long verified = 0;
        for (std::size_t d1 = 0; d1 <= 4; ++d1)
            for (std::size_t d2 = 0; d1 + d2 <= 4; ++d2)
                test::multisets_from(pool, d1, [&](const std::vector<Rat>& r1) {
                    test::multisets_from(pool, d2, [&](const std::vector<Rat>& r2) {
                        SolutionPair s{MonicPoly::from_roots(r1), MonicPoly::from_roots(r2)};
                        if (verify(sp, s)) {
                            ++verified;
                            require(s.is_trivial(), "nontrivial pair verified against same-sign shifts");
                        }
                    });
                });
        require(verified == 1, "expected exactly the trivial solution");
    }
}

void non_unique_factorization_example() {
    ShiftPair sp = ShiftPair::create(Rat(2), Rat(-3));
    SolutionPair fg = mul(shifted_fundamental(sp, "11122", Rat(0)),
                          shifted_fundamental(sp, "12211", Rat(3)));
    SolutionPair hk = mul(shifted_fundamental(sp, "12112", Rat(0)),
                          shifted_fundamental(sp, "12112", Rat(3)));
    require(fg == hk, "the two constructions differ");
    for (const SolutionPair* s : {&fg, &hk}) {
        Factorization fact = canonical_factorization(sp, *s);
        require(fact.cosets.size() == 1, "expected a single coset");
        const auto& fs = fact.cosets.front().factors;
        require(fs.size() == 2, "expected two factors");
        require(fs[0].path.word() == Word("21211") && fs[0].lambda == Rat(6), "first factor wrong");
        require(fs[1].path.word() == Word("21211") && fs[1].lambda == Rat(3), "second factor wrong");
        CylPath c0{fs[0].path, decompose(sp, fs[0].lambda - fs[1].lambda)};
        CylPath c1{fs[1].path, LatticeCoord{0, 0}};
        require(cyl_leq(c0, c1), "factors are not ordered");
        require(fact.reconstruct(sp) == *s, "product of factors differs from the input");
    }
}

void ordered_factorization_uniqueness() {
    std::mt19937_64 rng(987654321);
    const std::vector<Rat> coset_offsets{Rat(0), Rat(1, 2), Rat(1, 3)};
    for (auto [m, n] : {std::pair{3, 2}, std::pair{3, 5}}) {
        ShiftPair sp = sp_for(m, n);
        auto paths = enumerate_dyck(m, n);
        for (int iter = 0; iter < 100; ++iter) {
            Rat offset = coset_offsets[rng() % coset_offsets.size()];
            int k = 1 + static_cast<int>(rng() % 4);
            std::vector<SolutionPair> factors;
            for (int i = 0; i < k; ++i) {
                const DyckPath& d = paths[rng() % paths.size()];
                Rat lambda = offset + Rat(static_cast<long>(rng() % 15) - 7) * sp.gamma();
                factors.push_back(fundamental(sp, d, lambda).pair);
            }
            SolutionPair forward{};
            for (const auto& f : factors) forward = mul(forward, f);
            std::vector<SolutionPair> shuffled = factors;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            SolutionPair backward{};
            for (const auto& f : shuffled) backward = mul(backward, f);

            Factorization fact = canonical_factorization(sp, forward);
            require(fact == canonical_factorization(sp, backward),
                    "factorization depends on the construction order");
            require(fact.reconstruct(sp) == forward, "reconstruction mismatch");
            require(fact.cosets.size() == 1, "one coset expected");
            const auto& fs = fact.cosets.front().factors;
            require(fs.size() == static_cast<std::size_t>(k), "factor count mismatch");
            const Rat& rep = fact.cosets.front().key.representative;
            for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
                CylPath a{fs[i].path, decompose(sp, fs[i].lambda - rep)};
                CylPath b{fs[i + 1].path, decompose(sp, fs[i + 1].lambda - rep)};
                require(cyl_leq(a, b), "factors not nondecreasing");
            }
        }
    }
}

void coset_split_parts() {
    ShiftPair sp = ShiftPair::create(Rat(2), Rat(-3));
    auto paths = enumerate_dyck(3, 2);
    SolutionPair s = mul(mul(fundamental(sp, paths[0], Rat(0)).pair,
                             fundamental(sp, paths[1], Rat(1, 3)).pair),
                         fundamental(sp, paths[0], Rat(1, 2)).pair);
    auto split = c_integral_split(sp, s);
    require(split.size() == 3, "expected three parts");
    SolutionPair prod{};
    for (const auto& [key, part] : split) {
        require(verify(sp, part), "part does not verify");
        prod = mul(prod, part);
    }
    require(prod == s, "parts do not multiply back");
}

void partial_order_example() {
    ShiftPair sp = ShiftPair::create(Rat(-5), Rat(3));
    for (const Rat& origin : {Rat(0), Rat(-17)}) {
        auto cyl = [&](const char* w, long lambda) {
            return CylPath{DyckPath::from_word(Word(w)), decompose(sp, Rat(lambda) - origin)};
        };
        CylPath p1 = cyl("22212211", -10);
        CylPath p2 = cyl("22222111", -17);
        CylPath p3 = cyl("22221211", -16);
        require(cyl_leq(p3, p1), "pi3 <= pi1 fails");
        require(!cyl_leq(p1, p3), "pi1 <= pi3 unexpectedly holds");
        require(!cyl_leq(p2, p1) && !cyl_leq(p1, p2), "pi2 comparable to pi1");
        require(!cyl_leq(p2, p3) && !cyl_leq(p3, p2), "pi2 comparable to pi3");
    }
}

void multiquiver_examples() {
    struct Case {
        long a1, a2;
        std::vector<long> p1_roots, p2_roots;
        const char* word;
        std::vector<long> lambdas; // ascending
    };
    const std::vector<Case> cases{
        {-1, 1, {1}, {0}, "21", {0}},
        {-1, 2, {1}, {-1, 0}, "211", {-1}},
        {-4, 6, {1, 2, 3, 4}, {-5, -4, -3, -2, -1, 0}, "21211", {-5, -4}},
    };
    for (const Case& c : cases) {
        SolutionPair s = multiquiver_solution(c.a1, c.a2);
        std::vector<Rat> r1, r2;
        for (long v : c.p1_roots) r1.emplace_back(v);
        for (long v : c.p2_roots) r2.emplace_back(v);
        require(s.p1 == MonicPoly::from_roots(r1) && s.p2 == MonicPoly::from_roots(r2),
                "closed form mismatch");
        require(verify(ShiftPair::create(Rat(c.a1), Rat(c.a2)), s), "does not verify");
        Factorization fact = multiquiver_factorization(c.a1, c.a2);
        std::vector<Rat> lambdas;
        for (const auto& blk : fact.cosets) {
            require(blk.factors.size() == 1, "one factor per coset expected");
            require(blk.factors.front().path.word() == Word(c.word), "factor path is not zero-area");
            lambdas.push_back(blk.factors.front().lambda);
        }
        std::sort(lambdas.begin(), lambdas.end());
        std::vector<Rat> want;
        for (long v : c.lambdas) want.emplace_back(v);
        require(lambdas == want, "factor shifts mismatch");
    }
}

void zero_area_uniqueness() {
    for (int m = 1; m <= 9; ++m)
        for (int n = 1; n <= 9; ++n) {
            if (m + n > 10 || std::gcd(m, n) != 1) continue;
            DyckPath zero = zero_area_path(m, n);
            int count = 0;
            for (const DyckPath& d : enumerate_dyck(m, n)) {
                if (area(d) == 0) {
                    ++count;
                    require(d == zero, "zero-area path differs from the greedy one");
                }
            }
            require(count == 1, "zero-area path not unique");
        }
}

void property_suites() {
    std::mt19937_64 rng(20250811);
    const std::vector<std::pair<int, int>> shapes{{1, 1}, {2, 1}, {3, 2}, {3, 5}, {5, 2}};

    auto random_sp_paths = [&](int iter) {
        auto [m, n] = shapes[static_cast<std::size_t>(iter) % shapes.size()];
        return std::make_pair(sp_for(m, n), enumerate_dyck(m, n));
    };
    auto random_lambda = [&](const ShiftPair& sp) {
        Rat offset(static_cast<long>(rng() % 5), 3);
        return offset + Rat(static_cast<long>(rng() % 13) - 6) * sp.gamma();
    };

    // Monoid closure and the divisibility property.
    for (int iter = 0; iter < 500; ++iter) {
        auto [sp, paths] = random_sp_paths(iter);
        auto rand_product = [&](int k) {
            SolutionPair s{};
            for (int i = 0; i < k; ++i)
                s = mul(s, fundamental(sp, paths[rng() % paths.size()], random_lambda(sp)).pair);
            return s;
        };
        SolutionPair a = rand_product(1 + static_cast<int>(rng() % 2));
        SolutionPair b = rand_product(1 + static_cast<int>(rng() % 2));
        SolutionPair ab = mul(a, b);
        require(verify(sp, ab), "product of solutions does not verify");
        auto q = divide_exact(ab, a);
        require(q.has_value(), "division by a factor failed");
        require(verify(sp, *q), "quotient of solutions does not verify");
        require(*q == b, "quotient differs from the cofactor");
    }

    // Rescaling bijection round trip.
    const std::vector<Rat> gammas{Rat(2), Rat(-1, 2), Rat(3, 4), Rat(7), Rat(-5, 3)};
    for (int iter = 0; iter < 500; ++iter) {
        auto [sp, paths] = random_sp_paths(iter);
        SolutionPair s = fundamental(sp, paths[rng() % paths.size()], random_lambda(sp)).pair;
        const Rat& g = gammas[static_cast<std::size_t>(iter) % gammas.size()];
        auto [sp2, s2] = rescale(sp, s, g);
        require(verify(sp2, s2), "rescaled pair does not verify");
        auto [sp3, s3] = rescale(sp2, s2, Rat(1) / g);
        require(sp3 == sp && s3 == s, "rescaling round trip failed");
    }

    // Shift law for rotations.
    for (int iter = 0; iter < 500; ++iter) {
        auto [sp, paths] = random_sp_paths(iter);
        Word w = paths[rng() % paths.size()].word();
        if (rng() % 2) w = w + paths[rng() % paths.size()].word();
        std::size_t k = rng() % w.length();
        Rat eta(0);
        for (std::size_t i = 0; i < k; ++i) eta += w.at(i) == 1 ? sp.alpha1() : sp.alpha2();
        SolutionPair base = fundamental_from_word(sp, w);
        SolutionPair rotated = fundamental_from_word(sp, shift(w, static_cast<long>(k)));
        require(rotated.p1 == shift_poly(base.p1, eta) && rotated.p2 == shift_poly(base.p2, eta),
                "rotation shift law failed");
    }

    // Word/path bijection.
    for (int iter = 0; iter < 500; ++iter) {
        std::size_t len = rng() % 13;
        std::string s;
        for (std::size_t i = 0; i < len; ++i) s.push_back(rng() % 2 ? '1' : '2');
        Word w(s);
        require(path_to_word(word_to_path(w)) == w, "bijection failed");
    }

    // Squarefreeness for cyclically irreducible words.
    for (int iter = 0; iter < 500; ++iter) {
        auto [sp, paths] = random_sp_paths(iter);
        Word w = shift(paths[rng() % paths.size()].word(),
                       static_cast<long>(rng() % (paths[0].word().length())));
        SolutionPair s = fundamental_from_word(sp, w);
        auto roots = mul(s.p1, s.p2).roots();
        require(std::adjacent_find(roots.begin(), roots.end()) == roots.end(),
                "irreducible fundamental has a repeated root");
    }
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria{
        {"worked example (2,-3) word 21211, exact and under 1 ms", worked_example_1},
        {"worked example (5,-3) word 11221222, exact", worked_example_2},
        {"orbit-count corollary vs enumeration and Burnside brute force, m+n <= 12", orbit_count_corollary},
        {"labeled irreducibles round-trip and exhaust the window search", label_completeness},
        {"same-sign shifts admit only the trivial solution (exhaustive)", same_sign_exhaustive_search},
        {"non-unique factorization example orders as [(21211,6),(21211,3)]", non_unique_factorization_example},
        {"canonical factorization: 200 random products, sorted, order-free", ordered_factorization_uniqueness},
        {"coset split into three verifying parts with exact product", coset_split_parts},
        {"partial-order example on the (3,5) cylinder, origin-independent", partial_order_example},
        {"multiquiver solutions and their zero-area factorizations", multiquiver_examples},
        {"zero-area path unique among enumerated paths, m+n <= 10", zero_area_uniqueness},
        {"property suites: closure, divisibility, rescaling, shifts, bijection, squarefree", property_suites},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        std::string verdict = "pass";
        std::string detail;
        try {
            criteria[i].run();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
            ++failures;
        }
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
        std::ostringstream line;
        line << "[" << verdict << "] criterion " << (i + 1) << ": " << criteria[i].name << " ("
             << static_cast<long>(ms.count()) << " ms)";
        if (!detail.empty()) line << " -- " << detail;
        std::cout << line.str() << "\n";
    }
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures;
}
