#ifndef RAMICALC_IO_HPP
#define RAMICALC_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ramicalc/endo_class.hpp"
#include "ramicalc/galois.hpp"
#include "ramicalc/herbrand.hpp"
#include "ramicalc/plf.hpp"
#include "ramicalc/ultrametric.hpp"

// File formats. Every rational is written as "a/b" ("a" when b = 1).
// Schema errors raise ParseError; well-formed data violating a domain
// invariant raises ValidationError from the type's constructor.
namespace ramicalc::io {

/// Breakpoint dump: header `x,y,right_slope`, one row per breakpoint.
std::string to_csv(const PLFunction& f);
PLFunction from_csv(std::string_view text);

Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GaloisDecomposition& d);
GaloisDecomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EndoClassProfile& prof);
EndoClassProfile profile_from_json(const nlohmann::json& j);

nlohmann::json to_json(const UltrametricTable& t);
UltrametricTable table_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TwistSample& s);
std::vector<TwistSample> samples_from_json(const nlohmann::json& j);

/// Profile and decomposition JSON followed by `# <name>` CSV blocks for
/// phi, phi_inverse, sigma and psi, and the exceptional set.
std::string bundle_export(const HerbrandBundle& b);

}  // namespace ramicalc::io

#endif
