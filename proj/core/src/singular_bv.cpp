#include "takagi/singular_bv.hpp"

#include "takagi/binexp.hpp"
#include "takagi/omega.hpp"
#include "takagi/takagi_eval.hpp"

#include <algorithm>
#include <stdexcept>

namespace takagi {

Rat flattened_takagi(const Rat& x) {
    require_unit_interval(x, "flattened_takagi");
    BinExp xb = project_omega_L(x);
    Rat vb = xb.value();
    return takagi_exact(xb) - (x - vb);
}

Rat takagi_singular(const Rat& x) {
    require_unit_interval(x, "takagi_singular");
    BinExp xb = project_omega_L(x);
    return takagi_exact(xb) + xb.value();
}

PLFunction::PLFunction(std::vector<Rat> grid, std::vector<Rat> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (grid_.size() != values_.size())
        throw std::invalid_argument("PLFunction: grid/value size mismatch");
    if (grid_.size() < 2)
        throw std::invalid_argument("PLFunction: need at least two grid points");
    if (grid_.front() != Rat(0) || grid_.back() != Rat(1))
        throw std::invalid_argument("PLFunction: grid must span [0,1]");
    for (std::size_t i = 1; i < grid_.size(); ++i)
        if (!(grid_[i - 1] < grid_[i]))
            throw std::invalid_argument("PLFunction: grid not strictly increasing");
}

Rat PLFunction::eval(const Rat& x) const {
    require_unit_interval(x, "PLFunction::eval");
    auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
    if (it == grid_.end()) return values_.back();
    std::size_t i = static_cast<std::size_t>(it - grid_.begin());
    if (i == 0) return values_.front();
    const Rat& g0 = grid_[i - 1];
    const Rat& g1 = grid_[i];
    if (x == g0) return values_[i - 1];
    return values_[i - 1] + (values_[i] - values_[i - 1]) * (x - g0) / (g1 - g0);
}

PLFunction sample_pl(FunctionTag f, unsigned depth, const SampleLimits& lim) {
    if (depth > lim.max_depth)
        throw resource_error("sample_pl: depth " + std::to_string(depth) +
                             " exceeds the cap " + std::to_string(lim.max_depth));
    std::size_t n = (std::size_t{1} << depth) + 1;
    mpz_class den = pow2(depth);
    std::vector<Rat> grid, values;
    grid.reserve(n);
    values.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        Rat x(mpz_class(static_cast<unsigned long>(k)), den);
        grid.push_back(x);
        switch (f.kind) {
            case FunctionTag::Kind::TauL: values.push_back(flattened_takagi(x)); break;
            case FunctionTag::Kind::TauS: values.push_back(takagi_singular(x)); break;
            case FunctionTag::Kind::TauPartial: values.push_back(takagi_partial(x, f.partial_n)); break;
        }
    }
    return PLFunction(std::move(grid), std::move(values));
}

Rat total_variation(const PLFunction& f) {
    Rat tv(0);
    const auto& v = f.values();
    for (std::size_t i = 1; i < v.size(); ++i) tv += abs(v[i] - v[i - 1]);
    return tv;
}

std::uint64_t upper_set_perimeter(const PLFunction& f, const Rat& t) {
    const auto& v = f.values();
    for (const Rat& val : v)
        if (val == t)
            throw degenerate_level_error("upper_set_perimeter: level " + t.str() +
                                         " collides with a sampled value; perturb it");
    std::uint64_t count = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if ((v[i - 1] < t && t < v[i]) || (v[i] < t && t < v[i - 1])) ++count;
    }
    return count;
}

Rat coarea_integral(const PLFunction& f) {
    // event sweep over segment value-spans: between consecutive distinct
    // sampled values the perimeter is constant
    const auto& v = f.values();
    std::vector<std::pair<Rat, int>> events;
    events.reserve(2 * v.size());
    for (std::size_t i = 1; i < v.size(); ++i) {
        const Rat& a = v[i - 1];
        const Rat& b = v[i];
        if (a == b) continue;
        if (a < b) {
            events.emplace_back(a, +1);
            events.emplace_back(b, -1);
        } else {
            events.emplace_back(b, +1);
            events.emplace_back(a, -1);
        }
    }
    std::sort(events.begin(), events.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    Rat integral(0);
    long long active = 0;
    std::size_t i = 0;
    Rat prev(0);
    while (i < events.size()) {
        const Rat& val = events[i].first;
        if (active > 0) integral += (val - prev) * Rat(active);
        while (i < events.size() && events[i].first == val) {
            active += events[i].second;
            ++i;
        }
        prev = val;
    }
    return integral;
}

std::uint64_t local_level_count_estimate(const PLFunction& tau_l_sample, const Rat& t) {
    std::uint64_t perim = upper_set_perimeter(tau_l_sample, t);
    if (perim % 2 != 0)
        throw std::logic_error("local_level_count_estimate: odd perimeter");
    return perim / 2;
}

std::uint64_t local_level_count_estimate(const Rat& t, unsigned depth,
                                         const SampleLimits& lim) {
    return local_level_count_estimate(sample_pl(FunctionTag::tauL(), depth, lim), t);
}

} // namespace takagi
