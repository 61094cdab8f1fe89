#ifndef RAMICALC_GALOIS_HPP
#define RAMICALC_GALOIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramicalc/plf.hpp"
#include "ramicalc/rational.hpp"

namespace ramicalc {

/// Irreducible constituent of the tensor square: its dimension and Swan
/// conductor.
struct Constituent {
    std::int64_t dim;
    std::int64_t swan;

    friend bool operator==(const Constituent&, const Constituent&) = default;
};

/// Decomposition of sigma-dual (x) sigma into constituents, which is all
/// the decomposition function depends on.
///
/// Invariants, checked on construction:
///   - dimensions of the constituents sum to dim^2
///   - the trivial constituent (1, 0) occurs
class GaloisDecomposition {
public:
    GaloisDecomposition(std::int64_t dim, std::vector<Constituent> components);

    std::int64_t dim() const noexcept { return dim_; }
    const std::vector<Constituent>& components() const noexcept { return components_; }

    /// Copy with every Swan conductor multiplied by e: the decomposition
    /// seen over a tame extension of ramification index e.
    GaloisDecomposition scaled_swans(std::int64_t e) const;

    friend bool operator==(const GaloisDecomposition&, const GaloisDecomposition&) = default;

private:
    std::int64_t dim_;
    std::vector<Constituent> components_;
};

Rational slope_of(std::int64_t dim, std::int64_t swan);

/// Decomposition function: delta -> dim^-2 * sum_i max(delta * dim_i, sw_i).
PLFunction sigma_function(const GaloisDecomposition& d);

/// The unique delta with sigma(delta) = varsigma.
Rational delta_from_pairing(const PLFunction& sigma, const Rational& varsigma);

/// Decomposition function of the restriction to a tame extension of
/// ramification index e. Only meaningful for totally wild representations;
/// that is the caller's assertion and is not checked.
PLFunction restrict_tame_sigma(const PLFunction& sigma, std::int64_t e);

/// Distance over the base field recovered from the distances between the
/// translates over a tame extension of ramification index e.
Rational tame_distance_min(const std::vector<Rational>& conjugate_distances, std::int64_t e);

struct AbsolutelyWild {};
struct GeneralWild {
    std::int64_t e_ti;  // ramification index of the imprimitivity field
};

struct SigmaJumpDiagnostic {
    Rational a;  // least derivative jump of sigma
    bool absolutely_wild = false;
    // Absolutely wild mode: a must be a positive integer.
    std::optional<bool> integral;
    // General mode: a * e_ti must be an integer.
    std::optional<bool> scaled_integral;
    // a must be p-integral in either mode.
    bool p_integral = false;
    std::string interpretation;

    bool consistent() const
    {
        return p_integral && integral.value_or(true) && scaled_integral.value_or(true);
    }
};

/// Reads the least slope discontinuity of sigma and checks it against the
/// integrality constraints imposed by the twisting characters of sigma.
/// Throws DomainError if sigma has no slope discontinuity.
SigmaJumpDiagnostic least_sigma_jump(const PLFunction& sigma, std::int64_t p, AbsolutelyWild mode);
SigmaJumpDiagnostic least_sigma_jump(const PLFunction& sigma, std::int64_t p, GeneralWild mode);

struct TwistDistance {
    Rational bound;
    bool exact;
};

/// Distance between sigma and its twist by a character of conductor c:
/// at most c, and exactly c when sigma' is continuous at c.
TwistDistance twist_distance(const PLFunction& sigma, std::int64_t c);

/// For sigma with a single slope discontinuity, the structure of the
/// Galois group of the pro-kernel field; nullopt otherwise.
std::optional<std::string> single_jump_diagnostic(const PLFunction& sigma, std::int64_t p, std::int64_t r);

}  // namespace ramicalc

#endif
