#include "ramicalc/io.hpp"

#include <optional>
#include <sstream>

#include "ramicalc/error.hpp"

namespace ramicalc::io {

using nlohmann::json;

namespace {

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string_view trim_cr(std::string_view s)
{
    if (!s.empty() && s.back() == '\r') {
        s.remove_suffix(1);
    }
    return s;
}

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

std::int64_t int_field(const json& j, const char* key)
{
    const json& v = field(j, key);
    if (!v.is_number_integer()) {
        throw ParseError(std::string("field '") + key + "' must be an integer");
    }
    return v.get<std::int64_t>();
}

}  // namespace

std::string to_csv(const PLFunction& f)
{
    std::ostringstream os;
    os << "x,y,right_slope\n";
    const auto& pts = f.breakpoints();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        os << pts[i].x << ',' << pts[i].y << ',' << f.segment_slope(i) << '\n';
    }
    return os.str();
}

PLFunction from_csv(std::string_view text)
{
    auto lines = split(text, '\n');
    while (!lines.empty() && trim_cr(lines.back()).empty()) {
        lines.pop_back();
    }
    if (lines.empty() || trim_cr(lines.front()) != "x,y,right_slope") {
        throw ParseError("breakpoint CSV must start with the header x,y,right_slope");
    }
    if (lines.size() < 2) {
        throw ParseError("breakpoint CSV has no rows");
    }
    std::vector<Breakpoint> pts;
    Rational last_slope;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split(trim_cr(lines[i]), ',');
        if (cells.size() != 3) {
            throw ParseError("CSV row " + std::to_string(i) + " does not have three cells");
        }
        pts.push_back({Rational::parse(cells[0]), Rational::parse(cells[1])});
        last_slope = Rational::parse(cells[2]);
    }
    std::optional<PLFunction> parsed;
    try {
        parsed.emplace(pts, last_slope);
    } catch (const DomainError& e) {
        throw ParseError(std::string("breakpoint CSV: ") + e.what());
    }
    const PLFunction& f = *parsed;
    // Interior slopes are implied by consecutive points; check the file agrees.
    for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
        const auto cells = split(trim_cr(lines[i]), ',');
        if (f.slope_right(pts[i - 1].x) != Rational::parse(cells[2])) {
            throw ParseError("CSV row " + std::to_string(i) + " has a slope inconsistent with its neighbours");
        }
    }
    return f;
}

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer()) {
        return Rational(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    throw ParseError("rationals must be encoded as \"a/b\" strings or integers");
}

json to_json(const GaloisDecomposition& d)
{
    json comps = json::array();
    for (const auto& c : d.components()) {
        comps.push_back({{"dim", c.dim}, {"swan", c.swan}});
    }
    return {{"dim", d.dim()}, {"components", comps}};
}

GaloisDecomposition decomposition_from_json(const json& j)
{
    const json& comps = field(j, "components");
    if (!comps.is_array()) {
        throw ParseError("'components' must be an array");
    }
    std::vector<Constituent> out;
    for (const auto& c : comps) {
        out.push_back({int_field(c, "dim"), int_field(c, "swan")});
    }
    return GaloisDecomposition(int_field(j, "dim"), std::move(out));
}

json to_json(const EndoClassProfile& prof)
{
    json tower = json::array();
    for (const auto& lv : prof.tower()) {
        tower.push_back({{"jump", lv.jump.str()}, {"d", lv.d}, {"ex", lv.ex}, {"c", lv.c}});
    }
    return {{"p", prof.p()},
            {"deg", prof.deg()},
            {"e", prof.e()},
            {"f", prof.f()},
            {"m", prof.m().str()},
            {"k0", prof.k0() ? json(prof.k0()->str()) : json(nullptr)},
            {"trivial", prof.is_trivial()},
            {"tower", tower}};
}

EndoClassProfile profile_from_json(const json& j)
{
    const json& k0j = field(j, "k0");
    std::optional<Rational> k0;
    if (!k0j.is_null()) {
        k0 = rational_from_json(k0j);
    }
    const json& trivial = field(j, "trivial");
    if (!trivial.is_boolean()) {
        throw ParseError("'trivial' must be a boolean");
    }
    const json& tj = field(j, "tower");
    if (!tj.is_array()) {
        throw ParseError("'tower' must be an array");
    }
    std::vector<TowerLevel> tower;
    for (const auto& lv : tj) {
        tower.push_back({rational_from_json(field(lv, "jump")), int_field(lv, "d"), int_field(lv, "ex"),
                         int_field(lv, "c")});
    }
    return EndoClassProfile(int_field(j, "p"), int_field(j, "deg"), int_field(j, "e"), int_field(j, "f"),
                            rational_from_json(field(j, "m")), k0, std::move(tower), trivial.get<bool>());
}

json to_json(const UltrametricTable& t)
{
    json dist = json::array();
    for (const auto& row : t.matrix()) {
        json r = json::array();
        for (const auto& v : row) {
            r.push_back(v.str());
        }
        dist.push_back(r);
    }
    return {{"labels", t.labels()}, {"dist", dist}, {"separating", t.separating()}};
}

UltrametricTable table_from_json(const json& j)
{
    const json& labels = field(j, "labels");
    const json& dist = field(j, "dist");
    const json& sep = field(j, "separating");
    if (!labels.is_array() || !dist.is_array() || !sep.is_boolean()) {
        throw ParseError("ultrametric table needs array 'labels', array 'dist' and boolean 'separating'");
    }
    std::vector<std::string> names;
    for (const auto& l : labels) {
        if (!l.is_string()) {
            throw ParseError("labels must be strings");
        }
        names.push_back(l.get<std::string>());
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : dist) {
        if (!r.is_array()) {
            throw ParseError("'dist' rows must be arrays");
        }
        std::vector<Rational> row;
        for (const auto& v : r) {
            row.push_back(rational_from_json(v));
        }
        rows.push_back(std::move(row));
    }
    return UltrametricTable(std::move(names), std::move(rows), sep.get<bool>());
}

json to_json(const TwistSample& s)
{
    return {{"e", s.e}, {"k", s.k}, {"value", s.value.str()}};
}

std::vector<TwistSample> samples_from_json(const json& j)
{
    if (!j.is_array()) {
        throw ParseError("twist samples must be a JSON array");
    }
    std::vector<TwistSample> out;
    for (const auto& s : j) {
        out.push_back({int_field(s, "e"), int_field(s, "k"), rational_from_json(field(s, "value"))});
    }
    return out;
}

std::string bundle_export(const HerbrandBundle& b)
{
    std::ostringstream os;
    os << "# profile\n" << to_json(b.profile()).dump() << '\n';
    os << "# decomposition\n" << to_json(b.decomposition()).dump() << '\n';
    os << "# phi\n" << to_csv(b.phi());
    os << "# phi_inverse\n" << to_csv(invert(b.phi()));
    os << "# sigma\n" << to_csv(b.sigma());
    os << "# psi\n" << to_csv(b.psi());
    os << "# exceptional\n";
    for (std::size_t i = 0; i < b.exceptional_set().size(); ++i) {
        os << (i ? "," : "") << b.exceptional_set()[i];
    }
    os << '\n';
    return os.str();
}

}  // namespace ramicalc::io
