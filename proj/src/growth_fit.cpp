#include "kummer/growth_fit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "kummer/errors.hpp"

namespace kummer {

LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("linear_fit: length mismatch");
    const std::size_t n = xs.size();
    if (n < 2) throw std::invalid_argument("linear_fit: need at least two points");

    double mx = 0, my = 0;
    for (std::size_t k = 0; k < n; ++k) {
        mx += xs[k];
        my += ys[k];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const double dx = xs[k] - mx;
        const double dy = ys[k] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0) throw std::invalid_argument("linear_fit: all x values equal");

    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy == 0) {
        fit.r_squared = 1;
    } else {
        double ss_res = 0;
        for (std::size_t k = 0; k < n; ++k) {
            const double r = ys[k] - (fit.slope * xs[k] + fit.intercept);
            ss_res += r * r;
        }
        fit.r_squared = std::clamp(1 - ss_res / syy, 0.0, 1.0);
    }
    return fit;
}

GrowthFit fit_exponent(std::span<const CountSample> samples, double tail_fraction) {
    if (!(tail_fraction > 0 && tail_fraction <= 1)) throw std::invalid_argument("tail fraction must lie in (0, 1]");

    std::vector<CountSample> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.B < b.B; });
    const auto keep = static_cast<std::size_t>(std::ceil(tail_fraction * static_cast<double>(sorted.size())));

    std::vector<double> xs, ys;
    for (std::size_t k = sorted.size() - std::min(keep, sorted.size()); k < sorted.size(); ++k) {
        if (sorted[k].count < 1 || sorted[k].B < 1) continue;
        xs.push_back(std::log(static_cast<double>(sorted[k].B)));
        ys.push_back(std::log(static_cast<double>(sorted[k].count)));
    }
    if (xs.size() < 3)
        throw InsufficientSamples("need at least 3 tail samples with count >= 1, have " + std::to_string(xs.size()));

    const LinearFit lf = linear_fit(xs, ys);
    return {lf.slope, lf.intercept, lf.r_squared, tail_fraction, xs.size()};
}

void write_samples_csv(std::ostream& out, std::span<const CountSample> samples) {
    out << "B,count\n";
    for (const auto& s : samples) out << s.B << ',' << s.count << '\n';
}

std::vector<CountSample> read_samples_csv(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + why);
    };
    auto strip_cr = [](std::string& s) {
        if (!s.empty() && s.back() == '\r') s.pop_back();
    };

    if (!std::getline(in, line)) {
        lineno = 1;
        fail("missing header 'B,count'");
    }
    ++lineno;
    strip_cr(line);
    if (line != "B,count") fail("expected header 'B,count', got '" + line + "'");

    auto parse_u64 = [&](std::string_view s, const char* field) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            fail(std::string("invalid ") + field + " '" + std::string(s) + "'");
        return v;
    };

    std::vector<CountSample> out;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) fail("expected 'B,count'");
        std::string_view view(line);
        out.push_back({parse_u64(view.substr(0, comma), "B"), parse_u64(view.substr(comma + 1), "count")});
    }
    return out;
}

}  // namespace kummer
