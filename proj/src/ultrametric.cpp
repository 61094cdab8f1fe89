#include "ramicalc/ultrametric.hpp"

#include <algorithm>
#include <set>

#include "ramicalc/error.hpp"

namespace ramicalc {

UltrametricTable::UltrametricTable(std::vector<std::string> labels, std::vector<std::vector<Rational>> dist,
                                   bool separating)
    : labels_(std::move(labels)), dist_(std::move(dist)), separating_(separating)
{
    const std::size_t n = labels_.size();
    if (n == 0) {
        throw ValidationError("nonempty labels", "table has no points");
    }
    if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n) {
        throw ValidationError("distinct labels", "a label occurs twice");
    }
    if (dist_.size() != n) {
        throw ValidationError("square matrix", "distance matrix has " + std::to_string(dist_.size())
                                                   + " rows for " + std::to_string(n) + " labels");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (dist_[i].size() != n) {
            throw ValidationError("square matrix", "row " + labels_[i] + " has the wrong length");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!dist_[i][i].is_zero()) {
            throw ValidationError("zero diagonal", "d(" + labels_[i] + "," + labels_[i] + ") != 0");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (dist_[i][j].sign() < 0) {
                throw ValidationError("nonnegative distances",
                                      "d(" + labels_[i] + "," + labels_[j] + ") = " + dist_[i][j].str());
            }
            if (dist_[i][j] != dist_[j][i]) {
                throw ValidationError("symmetry", "d(" + labels_[i] + "," + labels_[j] + ") != d("
                                                      + labels_[j] + "," + labels_[i] + ")");
            }
        }
    }
}

std::optional<std::size_t> UltrametricTable::index_of(const std::string& label) const
{
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

const Rational& UltrametricTable::at(const std::string& a, const std::string& b) const
{
    const auto i = index_of(a);
    const auto j = index_of(b);
    if (!i || !j) {
        throw DomainError("unknown label in distance lookup");
    }
    return dist_[*i][*j];
}

UltrametricReport validate_ultrametric(const UltrametricTable& t)
{
    UltrametricReport report;
    const std::size_t n = t.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t z = x + 1; z < n; ++z) {
            if (t.separating() && t(x, z).is_zero()) {
                report.separation_violations.emplace_back(t.labels()[x], t.labels()[z]);
            }
            for (std::size_t y = 0; y < n; ++y) {
                if (y == x || y == z) {
                    continue;
                }
                if (t(x, z) > std::max(t(x, y), t(y, z))) {
                    report.triangle_violations.push_back({t.labels()[x], t.labels()[y], t.labels()[z]});
                }
            }
        }
    }
    return report;
}

}  // namespace ramicalc
