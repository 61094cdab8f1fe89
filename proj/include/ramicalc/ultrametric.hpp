#ifndef RAMICALC_ULTRAMETRIC_HPP
#define RAMICALC_ULTRAMETRIC_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ramicalc/rational.hpp"

namespace ramicalc {

/// Finite labeled point set with pairwise rational distances.
///
/// Models either the pairing on wild-inertia orbits or the ultrametric on
/// endo-classes; the values are input data. Construction checks only that
/// the matrix is well formed (square, symmetric, nonnegative, zero
/// diagonal, distinct labels); the strong triangle inequality is checked by
/// validate_ultrametric.
class UltrametricTable {
public:
    UltrametricTable(std::vector<std::string> labels, std::vector<std::vector<Rational>> dist, bool separating);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<std::vector<Rational>>& matrix() const noexcept { return dist_; }
    bool separating() const noexcept { return separating_; }

    const Rational& operator()(std::size_t i, std::size_t j) const { return dist_[i][j]; }
    const Rational& at(const std::string& a, const std::string& b) const;
    std::optional<std::size_t> index_of(const std::string& label) const;

    friend bool operator==(const UltrametricTable&, const UltrametricTable&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Rational>> dist_;
    bool separating_;
};

/// Triple with d(x, z) > max(d(x, y), d(y, z)).
struct TriangleViolation {
    std::string x;
    std::string y;
    std::string z;
};

struct UltrametricReport {
    std::vector<TriangleViolation> triangle_violations;
    // Distinct labels at distance zero, only collected for separating tables.
    std::vector<std::pair<std::string, std::string>> separation_violations;

    bool valid() const noexcept { return triangle_violations.empty() && separation_violations.empty(); }
};

UltrametricReport validate_ultrametric(const UltrametricTable& t);

}  // namespace ramicalc

#endif
