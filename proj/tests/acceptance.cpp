// One line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ramicalc/herbrand.hpp"
#include "support/generators.hpp"

using namespace ramicalc;
using namespace ramicalc::testing;

namespace {

Rational q(std::int64_t a, std::int64_t b = 1)
{
    return Rational(a, b);
}

// Collects the first failure of a criterion.
class Check {
public:
    void expect(bool ok, const std::string& what)
    {
        ++count_;
        if (!ok && failure_.empty()) {
            failure_ = what;
        }
    }
    const std::string& failure() const { return failure_; }
    std::size_t count() const { return count_; }

private:
    std::string failure_;
    std::size_t count_ = 0;
};

std::vector<Rational> jump_points(const PLFunction& f)
{
    std::vector<Rational> xs;
    for (const auto& j : derivative_jumps(f)) {
        xs.push_back(j.x);
    }
    return xs;
}

void degree_four_example(Check& c)
{
    const HerbrandBundle b(degree4_profile(), degree4_decomposition());
    c.expect(b.phi()(q(0)) == q(5, 16), "phi(0) = 5/16");
    const auto phi_jumps = jump_points(b.phi());
    c.expect(!phi_jumps.empty() && phi_jumps.front() == q(1, 4), "phi' jumps at 1/4");
    c.expect(jump_points(b.sigma()) == std::vector<Rational>{q(1, 3)}, "sigma' has a unique jump at 1/3");
    c.expect(b.psi().slopes() == std::vector<Rational>{q(1, 4), q(4), q(2), q(1)}, "psi' = 1/4, 4, 2, 1");
    c.expect(jump_points(b.psi()) == std::vector<Rational>{q(1, 3), q(3, 8), q(1, 2)},
             "psi' changes at 1/3, 3/8, 1/2");
}

void degree_p_family(Check& c)
{
    for (std::int64_t p : {2, 3, 5, 7}) {
        for (std::int64_t m : {1, 2}) {
            if (std::gcd(m, p) != 1) {
                continue;
            }
            const std::string tag = " (p=" + std::to_string(p) + ", m=" + std::to_string(m) + ")";
            const HerbrandBundle b(minimal_profile(m, p, p), degree_p_decomposition(p, m));
            const Rational pr(p);
            const Rational mr(m);
            c.expect(b.phi()(q(0)) == mr * (pr - q(1)) / (pr * pr), "phi(0) = m(p-1)/p^2" + tag);
            c.expect(b.phi().slope_right(q(0)) == q(1) / pr, "phi' = 1/p near 0" + tag);
            c.expect(jump_points(b.phi()) == std::vector<Rational>{mr / pr}, "phi' jumps at m/p" + tag);
            c.expect(b.sigma().slopes() == std::vector<Rational>{q(1) / (pr * pr), q(1)}, "sigma slopes" + tag);
            c.expect(jump_points(b.sigma()) == std::vector<Rational>{mr / (pr + q(1))},
                     "sigma' jumps at m/(p+1)" + tag);
            c.expect(b.psi().slopes() == std::vector<Rational>{q(1) / pr, pr, q(1)}, "psi' = (1/p, p)" + tag);
            c.expect(jump_points(b.psi()).front() == mr / (pr + q(1)), "psi' jumps at m/(p+1)" + tag);
            c.expect(agree_from(b.psi(), PLFunction::identity()) == mr / pr, "psi = x from m/p" + tag);
            // Hand oracle: x/p, then p x - m(p-1)/p, then x.
            for (int i = 0; i <= 48; ++i) {
                const Rational x = mr * Rational(i, 32);
                Rational expected = x;
                if (x <= mr / (pr + q(1))) {
                    expected = x / pr;
                } else if (x <= mr / pr) {
                    expected = pr * x - mr * (pr - q(1)) / pr;
                }
                c.expect(b.psi()(x) == expected, "psi matches the hand oracle" + tag);
            }
        }
    }
    const HerbrandBundle b3(minimal_profile(1, 3, 3), degree_p_decomposition(3, 1));
    c.expect(b3.psi()(q(1, 4)) == q(1, 12), "psi(1/4) = 1/12 for p=3, m=1");
}

void minimal_profiles(Check& c)
{
    Rng rng(3);
    int done = 0;
    while (done < 50) {
        const std::int64_t a = uniform(rng, 1, 40);
        const std::int64_t b = uniform(rng, 1, 40);
        if (std::gcd(a, b) != 1) {
            continue;
        }
        std::int64_t p = 2;
        for (std::int64_t k = 2; k <= b; ++k) {
            if (b % k == 0) {
                p = k;
                break;
            }
        }
        const PLFunction phi = structure_function(minimal_profile(a, b, p));
        const std::string tag = " (a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")";
        c.expect(phi(q(0)) == Rational(a * (b - 1), b * b), "phi(0) = a(b-1)/b^2" + tag);
        const auto cert = certify(phi);
        c.expect(cert.convex && cert.strictly_increasing, "certified" + tag);
        ++done;
    }
}

void scaling_coherence(Check& c)
{
    Rng rng(4);
    for (int i = 0; i < 200; ++i) {
        const HerbrandBundle b = random_bundle(rng, true);
        for (std::int64_t e = 1; e <= 6; ++e) {
            const PLFunction lifted_phi = structure_function(tame_lift_structure(b.profile(), e));
            const PLFunction expected = herbrand_function(lifted_phi, restrict_tame_sigma(b.sigma(), e));
            c.expect(tame_lift_herbrand(b.psi(), e) == expected,
                     "bundle " + std::to_string(i) + ", e = " + std::to_string(e));
        }
    }
}

void interpolation_round_trip(Check& c)
{
    Rng rng(5);
    std::size_t declared = 0;
    for (int i = 0; i < 100; ++i) {
        const HerbrandBundle b = random_bundle(rng, uniform(rng, 0, 3) != 0);
        const auto& m = b.profile().m();
        const auto full = interpolate_psi(bracketing_samples(b), m, b.exceptional_set());
        c.expect(full.ok() && full.psi && *full.psi == b.psi(), "bracketing grid reconstructs bundle "
                                                                    + std::to_string(i));
        const auto sparse = interpolate_psi(sparse_samples(b), m, b.exceptional_set());
        c.expect(!sparse.psi || *sparse.psi == b.psi(), "sparse grid never yields a wrong function");
        c.expect(sparse.psi.has_value() != !sparse.issues.empty(), "failure report accompanies a missing result");
        if (!sparse.ok()) {
            ++declared;
        }
    }
    c.expect(declared > 0, "some sparse grids are declared insufficient");
}

void property_suites(Check& c)
{
    Rng rng(6);
    // (a) certification of sigma and phi.
    for (int i = 0; i < 1000; ++i) {
        const auto prof = random_profile(rng);
        const auto phi = certify(structure_function(prof));
        const auto sigma = certify(sigma_function(matching_decomposition(rng, prof)));
        c.expect(phi.convex && phi.strictly_increasing, "(a) structure function certified");
        c.expect(sigma.convex && sigma.strictly_increasing, "(a) decomposition function certified");
    }
    // (b) ultrametric tables and planted violations.
    for (int i = 0; i < 500; ++i) {
        const auto t = random_ultrametric(rng, static_cast<std::size_t>(uniform(rng, 1, 8)));
        c.expect(validate_ultrametric(t).valid(), "(b) generated table accepted");
        const auto big = random_ultrametric(rng, static_cast<std::size_t>(uniform(rng, 3, 8)));
        c.expect(!validate_ultrametric(plant_violation(rng, big)).valid(), "(b) planted violation rejected");
    }
    // (c) pairing tables stay ultrametric.
    for (int i = 0; i < 200; ++i) {
        const auto cat = random_varsigma_catalog(rng);
        c.expect(validate_ultrametric(cat.table).valid(), "(c) catalog table valid");
        c.expect(validate_ultrametric(varsigma_table(cat.profiles, cat.table)).valid(), "(c) pairing table valid");
    }
    // (d) algebraic identities.
    for (int i = 0; i < 500; ++i) {
        const PLFunction f = random_increasing(rng, static_cast<int>(uniform(rng, 1, 6)));
        const PLFunction g = random_increasing(rng, static_cast<int>(uniform(rng, 1, 6)));
        const std::int64_t a = uniform(rng, 1, 5);
        const std::int64_t e = uniform(rng, 1, 5);
        c.expect(invert(invert(f)) == f, "(d) invert is an involution");
        c.expect(compose(invert(f), f) == PLFunction::identity(), "(d) left inverse");
        c.expect(compose(f, invert(f)) == PLFunction::identity(f.initial_value()), "(d) right inverse");
        c.expect(scale_conj(scale_conj(f, a), e) == scale_conj(f, a * e), "(d) scale_conj is multiplicative");
        c.expect(scale_conj(compose(f, g), e) == compose(scale_conj(f, e), scale_conj(g, e)),
                 "(d) scale_conj commutes with compose");
        c.expect(scale_conj(invert(f), e) == invert(scale_conj(f, e)), "(d) scale_conj commutes with invert");
        const PLFunction fg = compose(f, g);
        for (int k = 0; k < 5; ++k) {
            const Rational x(uniform(rng, 0, 60), uniform(rng, 1, 7));
            c.expect(fg(x) == scan_eval(f, scan_eval(g, x)), "(d) compose agrees pointwise");
        }
    }
    // (e) boundary slopes for minimal-style profiles.
    for (std::int64_t p : {2, 3, 5}) {
        for (std::int64_t r = 1; r <= (p == 2 ? 3 : 2); ++r) {
            std::int64_t n = 1;
            for (std::int64_t k = 0; k < r; ++k) {
                n *= p;
            }
            for (int i = 0; i < 30; ++i) {
                std::int64_t a = uniform(rng, 1, 3 * n);
                if (a % p == 0) {
                    ++a;
                }
                const auto prof = minimal_profile(a, n, p);
                const HerbrandBundle b(prof, matching_decomposition(rng, prof, true));
                const auto rep = boundary_slopes_check(b.psi(), p, r, prof.m());
                c.expect(rep.ok(), "(e) boundary slopes for p=" + std::to_string(p) + ", a/n=" + prof.m().str());
            }
        }
    }
}

void transfer_checks(Check& c)
{
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        const HerbrandBundle b = random_bundle(rng, uniform(rng, 0, 1) == 1);
        const auto cat = consistent_transfer_catalog(rng, b.psi());
        c.expect(ball_transfer_check(cat.delta, cat.a, cat.psi).ok(), "consistent catalog passes");
    }
    for (int i = 0; i < 100; ++i) {
        const HerbrandBundle b = random_bundle(rng, uniform(rng, 0, 1) == 1);
        const bool strict = i % 2 == 0;
        const auto cat = adversarial_transfer_catalog(rng, b.psi(), strict);
        const auto rep = ball_transfer_check(cat.delta, cat.a, cat.psi);
        bool kind = false;
        for (const auto& v : rep.violations) {
            kind = kind || v.strict == strict;
        }
        c.expect(!rep.ok() && kind,
                 std::string("adversarial catalog flagged in the ") + (strict ? "strict" : "non-strict") + " form");
    }
}

struct Criterion {
    int id;
    const char* title;
    std::chrono::milliseconds limit;
    std::function<void(Check&)> body;
};

}  // namespace

int main()
{
    using namespace std::chrono_literals;
    const std::vector<Criterion> criteria{
        {1, "degree-4 worked example, exact phi/sigma/psi data", 1000ms, degree_four_example},
        {2, "degree-p family for p in {2,3,5,7}, m in {1,2}", 1000ms, degree_p_family},
        {3, "minimal profiles: phi(0) = a(b-1)/b^2 for 50 coprime pairs", 1000ms, minimal_profiles},
        {4, "tame-lift coherence on 200 bundles, e = 1..6", 5000ms, scaling_coherence},
        {5, "interpolation round trip on 100 bundles", 5000ms, interpolation_round_trip},
        {6, "property suites (a)-(e)", 30000ms, property_suites},
        {7, "ball transfer on 100 consistent and 100 adversarial catalogs", 5000ms, transfer_checks},
    };
    bool all = true;
    for (const auto& cr : criteria) {
        Check c;
        std::string error;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.body(c);
        } catch (const std::exception& e) {
            error = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::string detail = !error.empty() ? error : c.failure();
        if (detail.empty() && ms > cr.limit) {
            detail = "over time limit";
        }
        const bool pass = detail.empty();
        all = all && pass;
        std::cout << "criterion " << cr.id << ": " << (pass ? "PASS" : "FAIL") << "  " << cr.title << " ("
                  << c.count() << " checks, " << ms.count() << " ms, limit " << cr.limit.count() << " ms)";
        if (!pass) {
            std::cout << "  -- " << detail;
        }
        std::cout << '\n';
    }
    return all ? 0 : 1;
}
