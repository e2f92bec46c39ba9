#ifndef STRINGGRAPH_PARAMS_HPP
#define STRINGGRAPH_PARAMS_HPP

#include "error.hpp"
#include "separator.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace stringgraph {

/// Constants of the extraction procedures. None of them affects whether a
/// witness is correct; they only steer thresholds and guaranteed sizes.
///
/// The independent-set recursion works with c = c'' * c' / 30; that relation
/// is documented here and not enforced.
struct AlgorithmParams {
    double c1 = 2.0;          ///< separator constant, |S| <= c1 * sqrt(m)
    double c2 = 1.0;          ///< biclique constant, K_{t,t}-free => m <= c2 t log t n
    double c = 0.01;          ///< master extraction constant
    double c_prime = 0.01;    ///< density threshold alpha = c' (s / log n)^2
    double c_dblprime = 0.05; ///< multipartite part size constant
    double epsilon = 0.5;     ///< colour exponent for color_or_clique
    double delta = 0.0;       ///< clique exponent; 0 derives it from epsilon
    SeparatorStrategy strategy = SeparatorStrategy::automatic;
    /// Above this many vertices a K_r-freeness precondition is spot-checked
    /// around high-degree vertices instead of searched exhaustively.
    std::size_t exact_check_limit = 2000;

    /// C(eps) of the dense-core refinement: max((12 c1)^2, 4 c1^2 / eps^2).
    double refine_constant(double eps) const {
        return std::max(std::pow(12.0 * c1, 2.0), 4.0 * c1 * c1 / (eps * eps));
    }

    void validate() const {
        if (!(c1 > 0 && c2 > 0 && c > 0 && c_prime > 0 && c_dblprime > 0))
            throw DomainError("algorithm constants must be strictly positive");
        if (!(epsilon > 0 && epsilon < 1)) throw DomainError("epsilon must lie in (0,1)");
        if (!(delta >= 0 && delta <= 1)) throw DomainError("delta must lie in [0,1]");
    }
};

/// Binary logarithm with the n >= 2 guard used by every threshold.
inline double log2n(std::size_t n) { return std::log2(static_cast<double>(std::max<std::size_t>(n, 2))); }

} // namespace stringgraph

#endif // STRINGGRAPH_PARAMS_HPP
