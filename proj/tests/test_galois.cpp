#include "doctest.h"

#include "ramicalc/error.hpp"
#include "ramicalc/galois.hpp"
#include "ramicalc/ultrametric.hpp"
#include "support/generators.hpp"

using namespace ramicalc;
using namespace ramicalc::testing;

namespace {

Rational q(std::int64_t a, std::int64_t b = 1)
{
    return Rational(a, b);
}

UltrametricTable three(const Rational& ab, const Rational& bc, const Rational& ac)
{
    return UltrametricTable({"a", "b", "c"}, {{q(0), ab, ac}, {ab, q(0), bc}, {ac, bc, q(0)}}, true);
}

}  // namespace

TEST_CASE("slope_of")
{
    CHECK(slope_of(1, 0) == q(0));
    CHECK(slope_of(4, 2) == q(1, 2));
    CHECK(slope_of(3, 7) == q(7, 3));
    CHECK_THROWS_AS(slope_of(0, 1), DomainError);
}

TEST_CASE("decomposition invariants")
{
    CHECK_THROWS_AS(GaloisDecomposition(2, {{1, 0}, {2, 1}}), ValidationError);
    CHECK_THROWS_AS(GaloisDecomposition(2, {{2, 1}, {2, 1}}), ValidationError);
    CHECK_NOTHROW(GaloisDecomposition(2, {{1, 0}, {3, 1}}));
}

TEST_CASE("sigma_function")
{
    CHECK(sigma_function(GaloisDecomposition(1, {{1, 0}})) == PLFunction::identity());

    const PLFunction s = sigma_function(degree4_decomposition());
    CHECK(s(q(0)) == q(5, 16));
    CHECK(s.slope_right(q(0)) == q(1, 16));
    CHECK(s.slope_right(q(1, 3)) == q(1));
    CHECK(derivative_jumps(s).size() == 1);
    CHECK(derivative_jumps(s).front().x == q(1, 3));
    const auto d = degree4_decomposition();
    std::vector<AffineTerm> terms;
    for (const auto& c : d.components()) {
        terms.push_back({c.dim, c.swan});
    }
    for (const auto& x : {q(0), q(1, 4), q(1, 3), q(1, 2), q(2)}) {
        CHECK(s(x) == max_sum_eval(16, terms, x));
    }
}

TEST_CASE("delta_from_pairing")
{
    CHECK(delta_from_pairing(PLFunction::identity(), q(3, 7)) == q(3, 7));
    const PLFunction s = sigma_function(degree4_decomposition());
    CHECK(delta_from_pairing(s, q(1, 3)) == q(1, 3));
    CHECK_THROWS_AS(delta_from_pairing(s, q(1, 4)), DomainError);
    Rng rng(21);
    for (int i = 0; i < 100; ++i) {
        const Rational x(uniform(rng, 0, 100), uniform(rng, 1, 17));
        REQUIRE(delta_from_pairing(s, s(x)) == x);
    }
}

TEST_CASE("restrict_tame_sigma")
{
    const PLFunction deg3_sigma = sigma_function(degree_p_decomposition(3, 1));
    CHECK(restrict_tame_sigma(deg3_sigma, 1) == deg3_sigma);
    const PLFunction k = restrict_tame_sigma(deg3_sigma, 2);
    CHECK(k(q(0)) == q(4, 9));
    CHECK(derivative_jumps(k).front().x == q(1, 2));
    CHECK(k.slopes() == deg3_sigma.slopes());
    CHECK_THROWS_AS(restrict_tame_sigma(deg3_sigma, 0), DomainError);
}

TEST_CASE("validate_ultrametric")
{
    CHECK(validate_ultrametric(UltrametricTable({"a"}, {{q(0)}}, true)).valid());
    CHECK(validate_ultrametric(three(q(1), q(1), q(1, 2))).valid());
    CHECK(validate_ultrametric(three(q(1), q(1, 2), q(1))).valid());
    CHECK(validate_ultrametric(three(q(1, 2), q(1), q(1))).valid());

    const auto bad = validate_ultrametric(three(q(3), q(1), q(1)));
    REQUIRE_FALSE(bad.valid());
    bool found = false;
    for (const auto& v : bad.triangle_violations) {
        found = found || (v.x == "a" && v.y == "c" && v.z == "b");
    }
    CHECK(found);

    const auto sep = validate_ultrametric(three(q(0), q(1), q(1)));
    CHECK(sep.separation_violations.size() == 1);
    const UltrametricTable loose({"a", "b"}, {{q(0), q(0)}, {q(0), q(0)}}, false);
    CHECK(validate_ultrametric(loose).valid());

    CHECK_THROWS_AS(UltrametricTable({"a", "b"}, {{q(0), q(1)}, {q(2), q(0)}}, true), ValidationError);
    CHECK_THROWS_AS(UltrametricTable({"a", "a"}, {{q(0), q(1)}, {q(1), q(0)}}, true), ValidationError);
    CHECK_THROWS_AS(UltrametricTable({"a", "b"}, {{q(0), q(-1)}, {q(-1), q(0)}}, true), ValidationError);
}

TEST_CASE("tame_distance_min")
{
    CHECK(tame_distance_min({q(5)}, 1) == q(5));
    CHECK(tame_distance_min({q(4), q(6), q(8)}, 2) == q(2));
    CHECK_THROWS_AS(tame_distance_min({}, 2), DomainError);

    Rng rng(22);
    for (int i = 0; i < 20; ++i) {
        const auto t = random_ultrametric(rng, 5);
        const std::int64_t e = uniform(rng, 1, 6);
        auto lifted = t.matrix();
        for (auto& row : lifted) {
            for (auto& v : row) {
                v *= Rational(e);
            }
        }
        const UltrametricTable k(t.labels(), lifted, true);
        REQUIRE(validate_ultrametric(k).valid());
        for (std::size_t a = 0; a < t.size(); ++a) {
            for (std::size_t b = 0; b < t.size(); ++b) {
                REQUIRE(tame_distance_min({k(a, b)}, e) == t(a, b));
            }
        }
    }
}

TEST_CASE("least_sigma_jump")
{
    const PLFunction deg4_sigma = sigma_function(degree4_decomposition());
    const auto d = least_sigma_jump(deg4_sigma, 2, AbsolutelyWild{});
    CHECK(d.a == q(1, 3));
    CHECK(d.integral == false);
    CHECK(d.p_integral);
    CHECK_FALSE(d.consistent());

    const auto g = least_sigma_jump(deg4_sigma, 2, GeneralWild{3});
    CHECK(g.scaled_integral == true);
    CHECK(g.consistent());

    const PLFunction at2({{q(0), q(1)}, {q(2), q(2)}}, q(1));
    const auto two = least_sigma_jump(at2, 3, AbsolutelyWild{});
    CHECK(two.a == q(2));
    CHECK(two.integral == true);

    const PLFunction quarter({{q(0), q(1, 8)}, {q(1, 4), q(1, 4)}}, q(1));
    CHECK_FALSE(least_sigma_jump(quarter, 2, AbsolutelyWild{}).p_integral);

    CHECK_THROWS_AS(least_sigma_jump(PLFunction::identity(), 2, AbsolutelyWild{}), DomainError);
}

TEST_CASE("twist_distance")
{
    const auto id = twist_distance(PLFunction::identity(), 2);
    CHECK(id.bound == q(2));
    CHECK(id.exact);
    const auto one = twist_distance(sigma_function(degree4_decomposition()), 1);
    CHECK(one.bound == q(1));
    CHECK(one.exact);
    const PLFunction at2({{q(0), q(1)}, {q(2), q(2)}}, q(1));
    CHECK_FALSE(twist_distance(at2, 2).exact);
}

TEST_CASE("single_jump_diagnostic")
{
    const auto note = single_jump_diagnostic(sigma_function(degree4_decomposition()), 2, 2);
    REQUIRE(note.has_value());
    CHECK(note->find("16") != std::string::npos);
    CHECK_FALSE(single_jump_diagnostic(PLFunction::identity(), 2, 2).has_value());
    const PLFunction two({{q(0), q(1)}, {q(1), q(5, 4)}, {q(2), q(2)}}, q(1));
    CHECK_FALSE(single_jump_diagnostic(two, 2, 1).has_value());
}
