#include "ramicalc/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ramicalc/endo_class.hpp"
#include "ramicalc/error.hpp"
#include "ramicalc/galois.hpp"
#include "ramicalc/herbrand.hpp"
#include "ramicalc/io.hpp"
#include "ramicalc/svg_plot.hpp"

namespace ramicalc::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Input problems that make the job malformed rather than invalid.
class InputError : public Error {
public:
    using Error::Error;
};

std::optional<mpz_class> max_denominator()
{
    const char* env = std::getenv("RAMICALC_MAX_DENOM");
    if (env == nullptr || *env == '\0') {
        return std::nullopt;
    }
    try {
        return mpz_class(env, 10);
    } catch (const std::invalid_argument&) {
        throw InputError(std::string("RAMICALC_MAX_DENOM is not an integer: ") + env);
    }
}

void guard(const Rational& r)
{
    const auto limit = max_denominator();
    if (limit && r.denominator() > *limit) {
        throw InputError("rational " + r.str() + " exceeds RAMICALC_MAX_DENOM = " + limit->get_str());
    }
}

void guard_json(const json& j)
{
    if (j.is_string()) {
        try {
            guard(Rational::parse(j.get<std::string>()));
        } catch (const ParseError&) {
            // Labels and other non-numeric strings.
        }
    } else if (j.is_structured()) {
        for (const auto& v : j) {
            guard_json(v);
        }
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const std::string& path)
{
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    guard_json(j);
    return j;
}

PLFunction read_csv(const std::string& path)
{
    PLFunction f = io::from_csv(read_file(path));
    for (const auto& b : f.breakpoints()) {
        guard(b.x);
        guard(b.y);
    }
    guard(f.terminal_slope());
    return f;
}

Rational parse_option(const std::string& text, const char* name)
{
    try {
        Rational r = Rational::parse(text);
        guard(r);
        return r;
    } catch (const ParseError& e) {
        throw InputError(std::string("--") + name + ": " + e.what());
    }
}

// Parse errors inside a schema are malformed input; invariant violations
// surface as ValidationError and are left to propagate.
template <typename F>
auto load(const std::string& path, F&& parse)
{
    const json j = read_json(path);
    try {
        return parse(j);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_artifact(const std::string& path, const std::string& content, std::ostream& out)
{
    if (path.empty()) {
        out << content;
        return;
    }
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw InputError("cannot write " + path);
        }
        f << content;
        if (!f.flush()) {
            throw InputError("failed writing " + path);
        }
    }
    fs::rename(tmp, target);
}

struct Options {
    std::string profile;
    std::string profile2;
    std::string decomp;
    std::string ultrametric;
    std::string catalog;
    std::string samples;
    std::string reference;
    std::string out;
    std::string bundle;
    std::string eps;
    std::string a;
    std::string m;
    std::string exclude;
    std::vector<std::string> csv;
    std::int64_t e = 0;
};

std::vector<Rational> parse_list(const std::string& text, const char* name)
{
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(parse_option(item, name));
        }
    }
    return out;
}

int cmd_sigma(const Options& o, std::ostream& out)
{
    const auto d = load(o.decomp, io::decomposition_from_json);
    write_artifact(o.out, io::to_csv(sigma_function(d)), out);
    return kSuccess;
}

int cmd_phi(const Options& o, std::ostream& out)
{
    const auto prof = load(o.profile, io::profile_from_json);
    write_artifact(o.out, io::to_csv(structure_function(prof)), out);
    return kSuccess;
}

int cmd_psi(const Options& o, std::ostream& out, std::ostream& err)
{
    auto prof = load(o.profile, io::profile_from_json);
    auto d = load(o.decomp, io::decomposition_from_json);
    const HerbrandBundle b(std::move(prof), std::move(d));
    for (const auto& x : b.silent_sigma_jumps()) {
        err << "note: psi' is continuous at the sigma' discontinuity " << x << '\n';
    }
    if (!o.bundle.empty()) {
        write_artifact(o.bundle, io::bundle_export(b), out);
    }
    write_artifact(o.out, io::to_csv(b.psi()), out);
    return kSuccess;
}

int cmd_lift(const Options& o, std::ostream& out)
{
    if (o.e < 1) {
        throw InputError("--e must be a positive integer");
    }
    const auto prof = load(o.profile, io::profile_from_json);
    write_artifact(o.out, io::to_json(tame_lift_structure(prof, o.e)).dump(2) + "\n", out);
    return kSuccess;
}

int cmd_transfer(const Options& o, std::ostream& out)
{
    const Rational eps = parse_option(o.eps, "eps");
    if (eps.sign() <= 0) {
        throw InputError("--eps must be positive");
    }
    auto prof = load(o.profile, io::profile_from_json);
    auto d = load(o.decomp, io::decomposition_from_json);
    const HerbrandBundle b(std::move(prof), std::move(d));
    write_artifact(o.out, "eps,delta\n" + eps.str() + "," + transfer_radius(b.psi(), eps).str() + "\n", out);
    return kSuccess;
}

int cmd_interpolate(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto samples = load(o.samples, io::samples_from_json);
    std::optional<Rational> m;
    std::vector<Rational> excluded = parse_list(o.exclude, "exclude");
    if (!o.m.empty()) {
        m = parse_option(o.m, "m");
    }
    if (!o.profile.empty() || !o.decomp.empty()) {
        if (o.profile.empty() || o.decomp.empty()) {
            throw InputError("--profile and --decomp must be given together");
        }
        auto prof = load(o.profile, io::profile_from_json);
        auto d = load(o.decomp, io::decomposition_from_json);
        const HerbrandBundle b(std::move(prof), std::move(d));
        m = m.value_or(b.profile().m());
        excluded.insert(excluded.end(), b.exceptional_set().begin(), b.exceptional_set().end());
    }
    std::optional<PLFunction> reference;
    if (!o.reference.empty()) {
        reference = read_csv(o.reference);
    }
    if (!m && !reference) {
        throw InputError("reconstruction needs --m (or --profile/--decomp)");
    }
    const auto outcome = interpolate_psi(samples, m.value_or(Rational(0)), excluded, reference);
    for (std::size_t i : outcome.skipped) {
        err << "skipped sample " << i << " at an exceptional abscissa\n";
    }
    if (!outcome.ok()) {
        for (const auto& issue : outcome.issues) {
            err << "error: " << issue << '\n';
        }
        return kValidationFailure;
    }
    if (outcome.psi) {
        write_artifact(o.out, io::to_csv(*outcome.psi), out);
    } else {
        write_artifact(o.out, "all " + std::to_string(samples.size() - outcome.skipped.size())
                                  + " judged samples agree with the reference\n",
                       out);
    }
    return kSuccess;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err)
{
    if (o.ultrametric.empty() && o.profile.empty() && o.decomp.empty()) {
        throw InputError("validate needs --ultrametric, --profile or --decomp");
    }
    std::optional<UltrametricTable> table;
    if (!o.ultrametric.empty()) {
        table = load(o.ultrametric, io::table_from_json);
    }
    if (!o.profile.empty()) {
        load(o.profile, io::profile_from_json);
        out << "profile: valid\n";
    }
    if (!o.decomp.empty()) {
        load(o.decomp, io::decomposition_from_json);
        out << "decomposition: valid\n";
    }
    if (!table) {
        return kSuccess;
    }
    const auto rep = validate_ultrametric(*table);
    for (const auto& v : rep.triangle_violations) {
        err << "violation: (" << v.x << "," << v.y << "," << v.z << "): d(" << v.x << "," << v.z << ") = "
            << table->at(v.x, v.z) << " > max(d(" << v.x << "," << v.y << "), d(" << v.y << "," << v.z
            << "))\n";
    }
    for (const auto& [a, b] : rep.separation_violations) {
        err << "violation: separation: d(" << a << "," << b << ") = 0\n";
    }
    if (!rep.valid()) {
        return kValidationFailure;
    }
    out << "ultrametric: valid\n";
    return kSuccess;
}

int cmd_pair(const Options& o, std::ostream& out)
{
    if (!o.catalog.empty()) {
        if (o.ultrametric.empty()) {
            throw InputError("--catalog needs --ultrametric");
        }
        const auto profiles = load(o.catalog, [](const json& j) {
            if (!j.is_object()) {
                throw ParseError("catalog must map labels to profiles");
            }
            std::vector<std::pair<std::string, EndoClassProfile>> out;
            for (const auto& [label, pj] : j.items()) {
                out.emplace_back(label, io::profile_from_json(pj));
            }
            return out;
        });
        const auto table = load(o.ultrametric, io::table_from_json);
        const auto result = varsigma_table(profiles, table);
        write_artifact(o.out, io::to_json(result).dump(2) + "\n", out);
        return kSuccess;
    }
    if (o.profile.empty() || o.profile2.empty() || o.a.empty()) {
        throw InputError("pair needs --profile, --profile2 and --a (or --catalog with --ultrametric)");
    }
    const Rational a = parse_option(o.a, "a");
    const auto p1 = load(o.profile, io::profile_from_json);
    const auto p2 = load(o.profile2, io::profile_from_json);
    write_artifact(o.out, "a,varsigma\n" + a.str() + "," + pairing_varsigma(p1, p2, a).str() + "\n", out);
    return kSuccess;
}

int cmd_plot(const Options& o, std::ostream& out)
{
    std::vector<LabeledFunction> fns;
    if (!o.profile.empty()) {
        fns.emplace_back("phi", structure_function(load(o.profile, io::profile_from_json)));
    }
    if (!o.decomp.empty()) {
        fns.emplace_back("sigma", sigma_function(load(o.decomp, io::decomposition_from_json)));
    }
    if (!o.profile.empty() && !o.decomp.empty()) {
        fns.emplace_back("psi", herbrand_function(fns[0].second, fns[1].second));
    }
    for (const auto& entry : o.csv) {
        const auto eq = entry.find('=');
        const std::string label = eq == std::string::npos ? fs::path(entry).stem().string() : entry.substr(0, eq);
        const std::string path = eq == std::string::npos ? entry : entry.substr(eq + 1);
        fns.emplace_back(label, read_csv(path));
    }
    if (fns.empty()) {
        throw InputError("plot needs --profile, --decomp or --csv");
    }
    write_artifact(o.out, plot_svg(fns), out);
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact ramification calculus: decomposition, structure and Herbrand functions", "ramicalc"};
    app.require_subcommand(1);
    Options o;

    auto* sigma = app.add_subcommand("sigma", "decomposition function of a Galois decomposition");
    sigma->add_option("--decomp", o.decomp, "decomposition JSON")->required();
    sigma->add_option("--out", o.out, "breakpoint CSV (default stdout)");

    auto* phi = app.add_subcommand("phi", "structure function of an endo-class profile");
    phi->add_option("--profile", o.profile, "profile JSON")->required();
    phi->add_option("--out", o.out, "breakpoint CSV (default stdout)");

    auto* psi = app.add_subcommand("psi", "Herbrand function of a profile and decomposition");
    psi->add_option("--profile", o.profile, "profile JSON")->required();
    psi->add_option("--decomp", o.decomp, "decomposition JSON")->required();
    psi->add_option("--out", o.out, "breakpoint CSV (default stdout)");
    psi->add_option("--bundle", o.bundle, "also write the bundle export");

    auto* lift = app.add_subcommand("lift", "tame lift of a totally wild profile");
    lift->add_option("--e", o.e, "ramification index of the tame extension")->required();
    lift->add_option("--profile", o.profile, "profile JSON")->required();
    lift->add_option("--out", o.out, "profile JSON (default stdout)");

    auto* transfer = app.add_subcommand("transfer", "ultrametric radius delta = psi(eps)");
    transfer->add_option("--profile", o.profile, "profile JSON")->required();
    transfer->add_option("--decomp", o.decomp, "decomposition JSON")->required();
    transfer->add_option("--eps", o.eps, "ramification radius a/b")->required();
    transfer->add_option("--out", o.out, "CSV (default stdout)");

    auto* interp = app.add_subcommand("interpolate", "rebuild psi from twist samples, or check them");
    interp->add_option("--samples", o.samples, "twist samples JSON")->required();
    interp->add_option("--m", o.m, "level m");
    interp->add_option("--exclude", o.exclude, "comma-separated exceptional abscissae");
    interp->add_option("--profile", o.profile, "profile JSON (supplies m and D with --decomp)");
    interp->add_option("--decomp", o.decomp, "decomposition JSON");
    interp->add_option("--reference", o.reference, "reference breakpoint CSV: verification mode");
    interp->add_option("--out", o.out, "breakpoint CSV (default stdout)");

    auto* validate = app.add_subcommand("validate", "check input files against their invariants");
    validate->add_option("--ultrametric", o.ultrametric, "ultrametric table JSON");
    validate->add_option("--profile", o.profile, "profile JSON");
    validate->add_option("--decomp", o.decomp, "decomposition JSON");

    auto* pair = app.add_subcommand("pair", "pairing value Phi(A) for two profiles or a catalog");
    pair->add_option("--profile", o.profile, "first profile JSON");
    pair->add_option("--profile2", o.profile2, "second profile JSON");
    pair->add_option("--a", o.a, "distance A between the classes");
    pair->add_option("--catalog", o.catalog, "JSON object mapping labels to profiles");
    pair->add_option("--ultrametric", o.ultrametric, "A table on the catalog labels");
    pair->add_option("--out", o.out, "output (default stdout)");

    auto* plot = app.add_subcommand("plot", "SVG overlay of functions");
    plot->add_option("--profile", o.profile, "profile JSON (plots phi)");
    plot->add_option("--decomp", o.decomp, "decomposition JSON (plots sigma; psi with --profile)");
    plot->add_option("--csv", o.csv, "label=path of a breakpoint CSV, repeatable");
    plot->add_option("--out", o.out, "SVG path")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kMalformedInput;
    }

    try {
        if (sigma->parsed()) return cmd_sigma(o, out);
        if (phi->parsed()) return cmd_phi(o, out);
        if (psi->parsed()) return cmd_psi(o, out, err);
        if (lift->parsed()) return cmd_lift(o, out);
        if (transfer->parsed()) return cmd_transfer(o, out);
        if (interp->parsed()) return cmd_interpolate(o, out, err);
        if (validate->parsed()) return cmd_validate(o, out, err);
        if (pair->parsed()) return cmd_pair(o, out);
        if (plot->parsed()) return cmd_plot(o, out);
    } catch (const InputError& e) {
        err << "malformed input: " << e.what() << '\n';
        return kMalformedInput;
    } catch (const ParseError& e) {
        err << "malformed input: " << e.what() << '\n';
        return kMalformedInput;
    } catch (const ValidationError& e) {
        err << "invalid: " << e.invariant() << " (" << e.what() << ")\n";
        return kValidationFailure;
    } catch (const Error& e) {
        err << "invalid: " << e.what() << '\n';
        return kValidationFailure;
    } catch (const fs::filesystem_error& e) {
        err << "malformed input: " << e.what() << '\n';
        return kMalformedInput;
    }
    return kMalformedInput;
}

}  // namespace ramicalc::cli
