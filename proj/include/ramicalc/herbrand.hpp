#ifndef RAMICALC_HERBRAND_HPP
#define RAMICALC_HERBRAND_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramicalc/endo_class.hpp"
#include "ramicalc/galois.hpp"
#include "ramicalc/plf.hpp"
#include "ramicalc/rational.hpp"
#include "ramicalc/ultrametric.hpp"

namespace ramicalc {

/// Psi = Phi^-1 o Sigma. Throws DomainError when sigma(0) < phi(0).
PLFunction herbrand_function(const PLFunction& phi, const PLFunction& sigma);

/// Structure, decomposition and Herbrand functions of one endo-class
/// together with the exceptional set D (all slope discontinuities of psi
/// and sigma).
///
/// Construction enforces psi(0) = 0 and psi(x) = x for x >= m.
class HerbrandBundle {
public:
    HerbrandBundle(EndoClassProfile profile, GaloisDecomposition decomposition);

    const EndoClassProfile& profile() const noexcept { return profile_; }
    const GaloisDecomposition& decomposition() const noexcept { return decomposition_; }
    const PLFunction& phi() const noexcept { return phi_; }
    const PLFunction& sigma() const noexcept { return sigma_; }
    const PLFunction& psi() const noexcept { return psi_; }
    const std::vector<Rational>& exceptional_set() const noexcept { return exceptional_; }

    /// Slope discontinuities of sigma at which psi' is continuous. No such
    /// example is known, so a nonempty result is worth flagging.
    std::vector<Rational> silent_sigma_jumps() const;

private:
    EndoClassProfile profile_;
    GaloisDecomposition decomposition_;
    PLFunction phi_;
    PLFunction sigma_;
    PLFunction psi_;
    std::vector<Rational> exceptional_;
};

/// delta = psi(eps): the ultrametric radius matching a ramification radius.
Rational transfer_radius(const PLFunction& psi, const Rational& eps);

struct TransferViolation {
    std::string x;
    std::string y;
    Rational eps;
    bool strict;  // which form of the equivalence failed
};

struct TransferReport {
    std::vector<TransferViolation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Checks A(x, y) < psi_x(eps) <=> Delta(x, y) < eps, and the non-strict
/// analogue, for every ordered pair and every eps in a grid made of the
/// slope discontinuities of the psi's, the Delta values, and midpoints.
TransferReport ball_transfer_check(const UltrametricTable& delta_table, const UltrametricTable& a_table,
                                   const std::map<std::string, PLFunction>& psi_per_label);

/// True iff psi1^-1 = psi2^-1 on [a, oo).
bool psi_inverse_agreement(const PLFunction& psi1, const PLFunction& psi2, const Rational& a);

/// x -> e psi(x / e).
PLFunction tame_lift_herbrand(const PLFunction& psi, std::int64_t e);

/// A measured distance A_K(Theta^K, chi Theta^K) over a tame extension of
/// ramification index e, for a character of Swan conductor k.
struct TwistSample {
    std::int64_t e;
    std::int64_t k;
    Rational value;

    Rational abscissa() const { return Rational(k, e); }
    Rational ordinate() const { return value / Rational(e); }
};

struct InterpolationOutcome {
    // Reconstruction mode: the recovered function, when the samples
    // determine it.
    std::optional<PLFunction> psi;
    // Reconstruction failures or verification mismatches, human readable.
    std::vector<std::string> issues;
    // Verification mode: indices of samples disagreeing with the reference.
    std::vector<std::size_t> mismatched;
    // Verification mode: indices of samples at points of D (not judged).
    std::vector<std::size_t> skipped;

    bool ok() const noexcept { return issues.empty(); }
};

/// Rebuilds psi from twist samples, or checks samples against a reference.
///
/// Reconstruction adjoins the anchors (0, 0) and the identity on [m, oo),
/// then requires every linear piece to be witnessed by three collinear
/// points and consecutive pieces to meet inside the gap separating them.
/// A grid that is too sparse yields issues and no function.
///
/// Throws DomainError for a sample at a point of D (reconstruction only)
/// and InconsistentDataError for duplicate abscissae with different values.
InterpolationOutcome interpolate_psi(const std::vector<TwistSample>& samples, const Rational& m,
                                     const std::vector<Rational>& exceptional,
                                     const std::optional<PLFunction>& reference = std::nullopt);

/// (a, t) with m = a p^(t - r) and p not dividing a.
struct LevelDecomposition {
    mpz_class a;
    std::int64_t t;
};

LevelDecomposition decompose_m(const Rational& m, std::int64_t p, std::int64_t r);

struct BoundarySlopeReport {
    Rational first_slope;
    Rational expected_first;
    Rational last_slope;  // slope just left of m
    Rational expected_last;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// Checks psi' = p^-r near 0 and psi' = p^(r - t) just below m for a
/// totally wild class of degree p^r. Throws DomainError when t >= r (twist
/// the class to lower its level first).
BoundarySlopeReport boundary_slopes_check(const PLFunction& psi, std::int64_t p, std::int64_t r, const Rational& m);

struct EssentialTamenessReport {
    bool psi_is_identity;
    bool e_prime_to_p;
    bool consistent() const noexcept { return psi_is_identity == e_prime_to_p; }
};

EssentialTamenessReport essentially_tame_check(const EndoClassProfile& profile, const PLFunction& psi);

}  // namespace ramicalc

#endif
