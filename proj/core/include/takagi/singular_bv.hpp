#pragma once

#include "takagi/errors.hpp"
#include "takagi/rational.hpp"

#include <cstdint>
#include <vector>

namespace takagi {

/// Flattened Takagi function tau^L(x) = tau(x_b) - (x - x_b) with
/// x_b = P^L(x): agrees with tau on Omega^L, linear with slope -1 across
/// every removed gap interval; continuous on [0,1].
Rat flattened_takagi(const Rat& x);

/// Takagi singular function tau^S(x) = tau^L(x) + x = tau(x_b) + x_b:
/// nondecreasing, continuous, tau^S(0) = 0, tau^S(1) = 1, constant on every
/// gap interval.
Rat takagi_singular(const Rat& x);

/// Exact piecewise-linear function on [0,1]: strictly increasing grid from 0
/// to 1 with matching ordinates, linear in between.
class PLFunction {
public:
    PLFunction(std::vector<Rat> grid, std::vector<Rat> values);

    const std::vector<Rat>& grid() const { return grid_; }
    const std::vector<Rat>& values() const { return values_; }
    std::size_t size() const { return grid_.size(); }

    Rat eval(const Rat& x) const;

private:
    std::vector<Rat> grid_, values_;
};

struct FunctionTag {
    enum class Kind { TauL, TauS, TauPartial };
    Kind kind = Kind::TauL;
    unsigned partial_n = 0;

    static FunctionTag tauL() { return {Kind::TauL, 0}; }
    static FunctionTag tauS() { return {Kind::TauS, 0}; }
    static FunctionTag partial(unsigned n) { return {Kind::TauPartial, n}; }
};

struct SampleLimits {
    unsigned max_depth = 20;
};

/// Exact sample on the grid k/2^depth. For TauPartial(n) with depth >= n the
/// sample IS the function.
PLFunction sample_pl(FunctionTag f, unsigned depth, const SampleLimits& lim = {});

/// Sum of |value increments|; for a monotone sample, the endpoint difference.
Rat total_variation(const PLFunction& f);

/// Number of boundary points of the upper set {f > t} inside (0,1), i.e.
/// the strict crossings of level t. Throws degenerate_level_error when t
/// hits a sampled value; perturb (e.g. by 2^-(depth+5)) and retry.
std::uint64_t upper_set_perimeter(const PLFunction& f, const Rat& t);

/// Exact integral over t of the perimeter of {f > t}, via a sweep over the
/// sorted segment value-spans. Equals total_variation(f) exactly; the two
/// routes are computed independently.
Rat coarea_integral(const PLFunction& f);

/// N_depth(t) = perimeter of {tau^L sample > t} / 2: a grid-based estimate
/// of the number of local level sets at level t, not an exact count.
std::uint64_t local_level_count_estimate(const Rat& t, unsigned depth,
                                         const SampleLimits& lim = {});
/// Same estimate against a precomputed TauL sample.
std::uint64_t local_level_count_estimate(const PLFunction& tau_l_sample, const Rat& t);

} // namespace takagi
