#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "coveralg/covers.hpp"
#include "coveralg/monomial_ideal.hpp"
#include "testutil.hpp"

using namespace coveralg;
using testutil::cycle4;
using testutil::q6;
using testutil::triangle;

namespace {

std::vector<std::vector<Int>> cover_vectors(const std::vector<CoverVector>& covers) {
    std::vector<std::vector<Int>> out;
    for (const auto& c : covers) out.push_back(c.c);
    return out;
}

// exhaustive two-part split check, independent of decompose()
bool splits_as_two_one_covers(const Hypergraph& h, const WeightFunction& w,
                              const std::vector<Int>& c) {
    std::vector<Int> u(c.size(), 0);
    while (true) {
        if (is_k_cover(h, w, u, 1)) {
            std::vector<Int> rest(c.size());
            for (std::size_t i = 0; i < c.size(); ++i) rest[i] = c[i] - u[i];
            if (is_k_cover(h, w, rest, 1)) return true;
        }
        std::size_t i = c.size();
        while (i > 0 && u[i - 1] == c[i - 1]) u[--i] = 0;
        if (i == 0) return false;
        ++u[i - 1];
    }
}

}  // namespace

TEST_CASE("is_k_cover: pinned cases") {
    const auto tri = triangle();
    const auto w1 = unit_weights(tri);
    CHECK(is_k_cover(tri, w1, {1, 1, 0}, 1));
    CHECK(is_k_cover(tri, w1, {1, 1, 1}, 2));
    CHECK_FALSE(is_k_cover(tri, w1, {1, 1, 0}, 2));
    CHECK(is_k_cover(q6(), unit_weights(q6()), {1, 0, 0, 1, 0, 0}, 1));
    CHECK(is_k_cover(tri, w1, {0, 0, 0}, 0));  // every vector is a 0-cover
    CHECK_THROWS_AS(is_k_cover(tri, w1, {1, 1}, 1), std::invalid_argument);
}

TEST_CASE("make_cover validates") {
    const auto tri = triangle();
    const auto w1 = unit_weights(tri);
    CHECK(make_cover(tri, w1, {1, 1, 1}, 2).k == 2);
    CHECK_THROWS_AS(make_cover(tri, w1, {1, 0, 0}, 1), std::invalid_argument);
}

TEST_CASE("minimal_k_covers: pinned values") {
    CHECK(cover_vectors(minimal_k_covers(q6(), unit_weights(q6()), 1)) ==
          std::vector<std::vector<Int>>{{0, 0, 1, 0, 0, 1},
                                        {0, 0, 1, 1, 1, 0},
                                        {0, 1, 0, 0, 1, 0},
                                        {0, 1, 0, 1, 0, 1},
                                        {1, 0, 0, 0, 1, 1},
                                        {1, 0, 0, 1, 0, 0},
                                        {1, 1, 1, 0, 0, 0}});

    CHECK(cover_vectors(minimal_k_covers(triangle(), unit_weights(triangle()), 2)) ==
          std::vector<std::vector<Int>>{{0, 2, 2}, {1, 1, 1}, {2, 0, 2}, {2, 2, 0}});

    const Hypergraph single = normalize_clutter({{1}}, 1);
    CHECK(cover_vectors(minimal_k_covers(single, WeightFunction{{2}}, 3)) ==
          std::vector<std::vector<Int>>{{6}});
}

TEST_CASE("minimal q6 1-covers are the blocker edges") {
    const auto covers = minimal_k_covers(q6(), unit_weights(q6()), 1);
    std::vector<std::vector<int>> as_sets;
    for (const auto& cv : covers) {
        std::vector<int> s;
        for (std::size_t v = 0; v < cv.c.size(); ++v) {
            CHECK((cv.c[v] == 0 || cv.c[v] == 1));
            if (cv.c[v] == 1) s.push_back(static_cast<int>(v) + 1);
        }
        as_sets.push_back(std::move(s));
    }
    std::sort(as_sets.begin(), as_sets.end());
    CHECK(as_sets == blocker(q6()).edges);
}

TEST_CASE("minimal cover entry bound lemma") {
    // every entry of a minimal k-cover stays within k * max incident weight,
    // and isolated vertices stay at zero
    std::mt19937_64 rng(555001);
    for (int trial = 0; trial < 40; ++trial) {
        auto inst = testutil::random_clutter(rng, 4, 4, 2);
        for (Int k = 1; k <= 3; ++k) {
            const Int max_w = inst.w.weights.empty()
                                  ? 0
                                  : *std::max_element(inst.w.weights.begin(),
                                                      inst.w.weights.end());
            for (const auto& cover : minimal_k_covers(inst.h, inst.w, k)) {
                for (std::size_t v = 0; v < cover.c.size(); ++v) {
                    CHECK(cover.c[v] <= k * max_w);
                    bool isolated = true;
                    for (const auto& e : inst.h.edges)
                        if (std::binary_search(e.begin(), e.end(),
                                               static_cast<int>(v) + 1))
                            isolated = false;
                    if (isolated) CHECK(cover.c[v] == 0);
                }
            }
        }
    }
}

TEST_CASE("minimal covers are k-covers, minimal, and complete") {
    // cross-check against plain box enumeration on the triangle
    const auto tri = triangle();
    const WeightFunction w{{2, 1, 1}};
    const Int k = 2;
    const auto covers = cover_vectors(minimal_k_covers(tri, w, k));
    std::vector<std::vector<Int>> expected;
    const Int bound = 4;  // k * max w
    for (Int a = 0; a <= bound; ++a)
        for (Int b = 0; b <= bound; ++b)
            for (Int c = 0; c <= bound; ++c) {
                const std::vector<Int> v{a, b, c};
                if (!is_k_cover(tri, w, v, k)) continue;
                bool minimal = true;
                for (std::size_t i = 0; i < 3 && minimal; ++i) {
                    if (v[i] == 0) continue;
                    auto down = v;
                    --down[i];
                    if (is_k_cover(tri, w, down, k)) minimal = false;
                }
                if (minimal) expected.push_back(v);
            }
    CHECK(covers == expected);
}

TEST_CASE("decompose: pinned cases") {
    const auto w6 = unit_weights(q6());
    auto parts = decompose(q6(), w6, {1, 1, 1, 1, 1, 1}, 2);
    REQUIRE(parts.has_value());
    CHECK(parts->size() == 2);
    std::vector<Int> sum(6, 0);
    for (const auto& p : *parts) {
        CHECK(is_k_cover(q6(), w6, p, 1));
        for (std::size_t i = 0; i < 6; ++i) sum[i] += p[i];
    }
    CHECK(sum == std::vector<Int>{1, 1, 1, 1, 1, 1});

    CHECK_FALSE(decompose(triangle(), unit_weights(triangle()), {1, 1, 1}, 2));

    auto self = decompose(triangle(), unit_weights(triangle()), {1, 1, 0}, 1);
    REQUIRE(self.has_value());
    CHECK(*self == std::vector<std::vector<Int>>{{1, 1, 0}});
}

TEST_CASE("decompose: rejections") {
    CHECK_THROWS_AS(decompose(triangle(), unit_weights(triangle()), {1, 0, 0}, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(decompose(triangle(), unit_weights(triangle()), {1, 1, 1}, 0),
                    std::invalid_argument);
}

TEST_CASE("decompose agrees with the exhaustive two-part oracle at k = 2") {
    std::mt19937_64 rng(77120);
    int examined = 0;
    while (examined < 60) {
        auto inst = testutil::random_clutter(rng, 4, 3, 2);
        for (const auto& cover : minimal_k_covers(inst.h, inst.w, 2)) {
            CHECK(decompose(inst.h, inst.w, cover.c, 2).has_value() ==
                  splits_as_two_one_covers(inst.h, inst.w, cover.c));
            ++examined;
        }
    }
}

TEST_CASE("sum closure and monotonicity of covers") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 50; ++trial) {
        auto inst = testutil::random_clutter(rng, 5, 4, 2);
        auto ones = minimal_k_covers(inst.h, inst.w, 1);
        auto twos = minimal_k_covers(inst.h, inst.w, 2);
        if (ones.empty() || twos.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick1(0, ones.size() - 1);
        std::uniform_int_distribution<std::size_t> pick2(0, twos.size() - 1);
        const auto& a = ones[pick1(rng)].c;
        const auto& b = twos[pick2(rng)].c;
        std::vector<Int> sum(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
        CHECK(is_k_cover(inst.h, inst.w, sum, 3));  // j-cover + k-cover is (j+k)-cover
        auto bigger = sum;
        for (auto& x : bigger) x += 1;
        CHECK(is_k_cover(inst.h, inst.w, bigger, 3));  // upward closed
    }
}

TEST_CASE("scaling: k-cover of (h, w) <=> 1-cover of (h, k*w)") {
    std::mt19937_64 rng(90210);
    for (int trial = 0; trial < 30; ++trial) {
        auto inst = testutil::random_clutter(rng, 4, 3, 2);
        WeightFunction scaled;
        for (Int x : inst.w.weights) scaled.weights.push_back(3 * x);
        std::uniform_int_distribution<Int> entry(0, 6);
        for (int probe = 0; probe < 20; ++probe) {
            std::vector<Int> c(static_cast<std::size_t>(inst.h.n));
            for (auto& x : c) x = entry(rng);
            CHECK(is_k_cover(inst.h, inst.w, c, 3) ==
                  is_k_cover(inst.h, scaled, c, 1));
        }
    }
}

TEST_CASE("is_standard_graded_up_to: pinned cases") {
    // 4-cycle: TU, so standard graded for every weight with entries <= 2
    const auto c4 = cycle4();
    std::vector<Int> wv(4, 1);
    while (true) {
        CHECK(is_standard_graded_up_to(c4, WeightFunction{wv}, 3).standard);
        std::size_t i = wv.size();
        while (i > 0 && wv[i - 1] == 2) wv[--i] = 1;
        if (i == 0) break;
        ++wv[i - 1];
    }

    auto failure = is_standard_graded_up_to(triangle(), unit_weights(triangle()), 2);
    CHECK_FALSE(failure.standard);
    REQUIRE(failure.failing_cover.has_value());
    CHECK(failure.failing_cover->c == std::vector<Int>{1, 1, 1});
    CHECK(failure.failing_cover->k == 2);

    const Hypergraph single = normalize_clutter({{1, 2}}, 2);
    CHECK(is_standard_graded_up_to(single, WeightFunction{{3}}, 4).standard);
}

TEST_CASE("standard gradedness matches symbolic = ordinary power equality") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        auto inst = testutil::random_clutter(rng, 4, 3, 2);
        const Int K = 3;
        const bool graded = is_standard_graded_up_to(inst.h, inst.w, K).standard;
        const MonomialIdeal base = ideal_of(inst.h, inst.w);
        bool ideals_agree = true;
        for (Int k = 0; k <= K; ++k)
            if (!equals(power(base, k), symbolic_power(inst.h, inst.w, k)))
                ideals_agree = false;
        CHECK(graded == ideals_agree);
    }
}

TEST_CASE("algebra_generators_up_to: pinned cases") {
    auto tri_gens = algebra_generators_up_to(triangle(), unit_weights(triangle()), 2);
    REQUIRE(tri_gens.size() == 4);
    CHECK(tri_gens[0] == AlgebraGenerator{{0, 1, 1}, 1});
    CHECK(tri_gens[1] == AlgebraGenerator{{1, 0, 1}, 1});
    CHECK(tri_gens[2] == AlgebraGenerator{{1, 1, 0}, 1});
    CHECK(tri_gens[3] == AlgebraGenerator{{1, 1, 1}, 2});

    auto c4_gens = algebra_generators_up_to(cycle4(), unit_weights(cycle4()), 3);
    REQUIRE(c4_gens.size() == 2);
    CHECK(c4_gens[0] == AlgebraGenerator{{0, 1, 0, 1}, 1});
    CHECK(c4_gens[1] == AlgebraGenerator{{1, 0, 1, 0}, 1});

    const Hypergraph single = normalize_clutter({{1}}, 1);
    auto single_gens = algebra_generators_up_to(single, unit_weights(single), 2);
    REQUIRE(single_gens.size() == 1);
    CHECK(single_gens[0] == AlgebraGenerator{{1}, 1});
}

TEST_CASE("witness_from_fractional_vertex: pinned cases") {
    const auto tri = triangle();
    const auto w1 = unit_weights(tri);
    RationalPoint half{{Rational(1, 2), Rational(1, 2), Rational(1, 2)}};
    CoverVector witness = witness_from_fractional_vertex(tri, w1, half);
    CHECK(witness.c == std::vector<Int>{1, 1, 1});
    CHECK(witness.k == 2);
    CHECK_FALSE(decompose(tri, w1, witness.c, witness.k).has_value());

    RationalPoint mixed{{Rational(1, 2), Rational(2, 3), Rational(1)}};
    CHECK(mixed.denominator_lcm() == 6);

    RationalPoint integral{{Rational(1), Rational(1), Rational(0)}};
    CHECK_THROWS_AS(witness_from_fractional_vertex(tri, w1, integral),
                    std::invalid_argument);
}

TEST_CASE("q6 witness from bounded search never decomposes") {
    const auto h = q6();
    auto hit = fractional_vertex_search(incidence_matrix(h), 3);
    REQUIRE(hit.has_value());
    WeightFunction w{hit->weights};
    CoverVector cover = witness_from_fractional_vertex(h, w, hit->vertex);
    CHECK(cover.c == std::vector<Int>{0, 0, 2, 1, 1, 1});
    CHECK(cover.k == 2);
    CHECK(is_k_cover(h, w, cover.c, cover.k));
    CHECK_FALSE(decompose(h, w, cover.c, cover.k).has_value());
}

TEST_CASE("find_veronese_degree") {
    CHECK(find_veronese_degree(cycle4(), 3, 2) == 1);
    CHECK(find_veronese_degree(normalize_clutter({{1, 2}}, 2), 3, 1) == 1);
    CHECK(find_veronese_degree(triangle(), 3, 4) == 2);
}

TEST_CASE("verify_main_theorem: pinned cases") {
    auto c4 = verify_main_theorem(cycle4(), 2, 3);
    CHECK(c4.unimodular);
    CHECK(c4.verdict == TheoremReport::Verdict::AllWeightsStandardGraded);

    auto tri = verify_main_theorem(triangle(), 1, 2);
    CHECK_FALSE(tri.unimodular);
    CHECK(tri.verdict == TheoremReport::Verdict::WitnessFound);
    REQUIRE(tri.witness_weights.has_value());
    CHECK(*tri.witness_weights == std::vector<Int>{1, 1, 1});
    REQUIRE(tri.witness_cover.has_value());
    CHECK(tri.witness_cover->c == std::vector<Int>{1, 1, 1});
    CHECK(tri.witness_cover->k == 2);

    auto q = verify_main_theorem(q6(), 3, 3);
    CHECK_FALSE(q.unimodular);
    CHECK(q.verdict == TheoremReport::Verdict::WitnessFound);
    REQUIRE(q.witness_cover.has_value());
    CHECK_FALSE(decompose(q6(), WeightFunction{*q.witness_weights},
                          q.witness_cover->c, q.witness_cover->k)
                    .has_value());
}
