#ifndef STRINGGRAPH_IO_SURVEY_HPP
#define STRINGGRAPH_IO_SURVEY_HPP

// Separator size survey: for each size n, `trials` seeded families (seed +
// trial index) are turned into string graphs and separated; the medians of m
// and |S| per size are fitted to |S| = K m^beta by least squares in log-log.

#include "../geometry.hpp"
#include "../separator.hpp"
#include "generate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace stringgraph {

struct SurveyRow {
    std::size_t n = 0;
    std::size_t trial = 0;
    std::size_t m = 0;
    std::size_t separator = 0;
};

struct SurveySummary {
    std::size_t n = 0;
    double median_m = 0.0;
    double median_separator = 0.0;
};

struct SurveyResult {
    std::vector<SurveyRow> rows;
    std::vector<SurveySummary> summary;
    double beta = std::numeric_limits<double>::quiet_NaN(); ///< NaN with fewer than 2 usable sizes
    double log_k = std::numeric_limits<double>::quiet_NaN();
    bool all_valid = true; ///< every partition passed the separator validator
};

/// Random segments with both endpoints uniform in the default region.
inline GeneratorSpec default_survey_spec(std::uint64_t seed = 1) {
    GeneratorSpec s;
    s.kind = GeneratorKind::random_segments;
    s.seed = seed;
    return s;
}

inline double median(std::vector<double> v) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(v.begin(), v.end());
    const std::size_t k = v.size() / 2;
    return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

/// Least-squares slope and intercept of y against x.
inline std::pair<double, double> fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const double k = static_cast<double>(x.size());
    if (x.size() < 2) return {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double den = k * sxx - sx * sx;
    if (den == 0) return {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
    const double slope = (k * sxy - sx * sy) / den;
    return {slope, (sy - slope * sx) / k};
}

inline SurveyResult separator_size_survey(const GeneratorSpec& base, const std::vector<std::size_t>& sizes,
                                          std::size_t trials, SeparatorStrategy strategy = SeparatorStrategy::automatic) {
    if (trials == 0) throw BadSpec("survey needs at least one trial");
    if (base.kind == GeneratorKind::convex_chords) throw BadSpec("survey needs a string family generator");
    SurveyResult out;
    std::vector<double> xs, ys;
    for (std::size_t n : sizes) {
        std::vector<double> ms, ss;
        for (std::size_t t = 0; t < trials; ++t) {
            GeneratorSpec spec = base;
            spec.count = n;
            spec.seed = base.seed + t;
            const Graph g = intersection_graph(generate_family(spec));
            const auto sep = find_balanced_separator(g, strategy);
            out.all_valid = out.all_valid && is_valid_separator(g, sep);
            out.rows.push_back({n, t, g.m(), sep.separator.size()});
            ms.push_back(static_cast<double>(g.m()));
            ss.push_back(static_cast<double>(sep.separator.size()));
        }
        SurveySummary s{n, median(ms), median(ss)};
        out.summary.push_back(s);
        if (s.median_m > 0 && s.median_separator > 0) {
            xs.push_back(std::log(s.median_m));
            ys.push_back(std::log(s.median_separator));
        }
    }
    std::tie(out.beta, out.log_k) = fit_line(xs, ys);
    return out;
}

/// One line per size: n,median_m,median_separator.
inline std::string survey_csv(const SurveyResult& r) {
    std::ostringstream os;
    os << "n,median_m,median_separator\n";
    for (const auto& s : r.summary) os << s.n << ',' << s.median_m << ',' << s.median_separator << '\n';
    return os.str();
}

} // namespace stringgraph

#endif // STRINGGRAPH_IO_SURVEY_HPP
