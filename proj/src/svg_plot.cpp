#include "ramicalc/svg_plot.hpp"

#include <array>
#include <sstream>

#include "ramicalc/error.hpp"

namespace ramicalc {

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 480;
constexpr int kLeft = 60;
constexpr int kTop = 20;
constexpr int kPlotWidth = 560;
constexpr int kPlotHeight = 420;

constexpr std::array<const char*, 6> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

// Fixed-point rendering of a rational to two decimals, rounding half up.
std::string pixel(const Rational& v)
{
    const mpz_class hundredths = floor(v * Rational(100) + Rational(1, 2));
    mpz_class whole;
    mpz_class frac;
    mpz_fdiv_qr_ui(whole.get_mpz_t(), frac.get_mpz_t(), hundredths.get_mpz_t(), 100);
    std::string f = frac.get_str();
    if (f.size() < 2) {
        f.insert(0, "0");
    }
    return whole.get_str() + "." + f;
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

struct Window {
    Rational x_max;
    Rational y_min;
    Rational y_max;

    Rational px(const Rational& x) const { return Rational(kLeft) + Rational(kPlotWidth) * x / x_max; }
    Rational py(const Rational& y) const
    {
        return Rational(kTop + kPlotHeight) - Rational(kPlotHeight) * (y - y_min) / (y_max - y_min);
    }
};

Window make_window(const std::vector<LabeledFunction>& fns)
{
    Rational last(0);
    for (const auto& [_, f] : fns) {
        last = std::max(last, f.breakpoints().back().x);
    }
    Window w{last.is_zero() ? Rational(1) : last * Rational(5, 4), Rational(0), Rational(0)};
    bool first = true;
    for (const auto& [_, f] : fns) {
        std::vector<Rational> ys{f(std::max(f.domain_start(), w.x_max))};
        for (const auto& b : f.breakpoints()) {
            if (b.x <= w.x_max) {
                ys.push_back(b.y);
            }
        }
        for (const auto& y : ys) {
            if (first) {
                w.y_min = std::min(Rational(0), y);
                w.y_max = y;
                first = false;
            }
            w.y_min = std::min(w.y_min, y);
            w.y_max = std::max(w.y_max, y);
        }
    }
    if (w.y_max <= w.y_min) {
        w.y_max = w.y_min + Rational(1);
    }
    return w;
}

}  // namespace

std::string plot_svg(const std::vector<LabeledFunction>& functions)
{
    if (functions.empty()) {
        throw DomainError("nothing to plot");
    }
    const Window w = make_window(functions);
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    os << "<!-- map: px = " << kLeft << " + " << kPlotWidth << "*x/(" << w.x_max << "), py = "
       << kTop + kPlotHeight << " - " << kPlotHeight << "*(y - (" << w.y_min << "))/(" << (w.y_max - w.y_min)
       << "); pixels rounded half-up to 1/100 -->\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

    // Axes and window labels.
    const std::string x0 = pixel(w.px(Rational(0)));
    const std::string x1 = pixel(w.px(w.x_max));
    const std::string y0 = pixel(w.py(w.y_min));
    const std::string y1 = pixel(w.py(w.y_max));
    os << "<g stroke=\"black\" stroke-width=\"1\">\n";
    os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0 << "\"/>\n";
    os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1 << "\"/>\n";
    os << "</g>\n";
    os << "<g font-family=\"monospace\" font-size=\"11\">\n";
    os << "<text x=\"" << x0 << "\" y=\"" << kTop + kPlotHeight + 16 << "\">0</text>\n";
    os << "<text x=\"" << x1 << "\" y=\"" << kTop + kPlotHeight + 16 << "\" text-anchor=\"end\">" << w.x_max
       << "</text>\n";
    os << "<text x=\"" << kLeft - 4 << "\" y=\"" << y0 << "\" text-anchor=\"end\">" << w.y_min << "</text>\n";
    os << "<text x=\"" << kLeft - 4 << "\" y=\"" << y1 << "\" text-anchor=\"end\">" << w.y_max << "</text>\n";
    os << "</g>\n";

    for (std::size_t i = 0; i < functions.size(); ++i) {
        const auto& [label, f] = functions[i];
        const char* colour = kPalette[i % kPalette.size()];
        std::vector<Breakpoint> pts;
        for (const auto& b : f.breakpoints()) {
            if (b.x <= w.x_max) {
                pts.push_back(b);
            }
        }
        if (pts.empty() || pts.back().x < w.x_max) {
            const Rational end = std::max(w.x_max, f.domain_start());
            pts.push_back({end, f(end)});
        }
        os << "<g id=\"f" << i << "\">\n";
        os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
        for (std::size_t k = 0; k < pts.size(); ++k) {
            os << (k ? " " : "") << pixel(w.px(pts[k].x)) << ',' << pixel(w.py(pts[k].y));
        }
        os << "\"/>\n";
        for (const auto& b : f.breakpoints()) {
            if (b.x <= w.x_max) {
                os << "<circle cx=\"" << pixel(w.px(b.x)) << "\" cy=\"" << pixel(w.py(b.y))
                   << "\" r=\"3\" fill=\"" << colour << "\"><title>(" << b.x << ", " << b.y
                   << ")</title></circle>\n";
            }
        }
        os << "<text x=\"" << kLeft + 10 << "\" y=\"" << kTop + 14 * (static_cast<int>(i) + 1)
           << "\" font-family=\"monospace\" font-size=\"12\" fill=\"" << colour << "\">" << escape(label)
           << "</text>\n";
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace ramicalc
