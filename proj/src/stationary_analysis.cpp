#include "fluidcc/stationary_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fluidcc/errors.hpp"

namespace fluidcc {

const char* to_string(ExtremumKind k) {
    switch (k) {
        case ExtremumKind::LocalMax: return "local_max";
        case ExtremumKind::LocalMin: return "local_min";
        case ExtremumKind::Plateau: return "plateau";
    }
    return "?";
}

double stationarity_tolerance(const ModelParams& params) {
    return 1e-6 * params.loss.capacity_C / params.rtt_T;
}

namespace {

StationaryPoint make_point(const Trajectory& traj, double t, ExtremumKind kind) {
    StationaryPoint pt;
    pt.time_t = t;
    pt.rate_x = traj.rate_at(t);
    pt.kind = kind;
    pt.residual = std::abs(traj.rhs_at(t));
    pt.loss_p = loss_probability(traj.params.loss, std::max(0.0, pt.rate_x));
    const double p_d = loss_probability(traj.params.loss, std::max(0.0, traj.delayed_rate_at(t)));
    if (p_d > 0.0)
        pt.eq7_gap = std::abs(pt.rate_x -
                              std::sqrt(2.0 * (1.0 - p_d) / p_d) / traj.params.rtt_T);
    else
        pt.eq7_gap = std::numeric_limits<double>::infinity();
    return pt;
}

// Bisect the dense-output rhs over [t_lo, t_hi]; signs at the ends differ.
double refine_zero(const Trajectory& traj, double t_lo, double t_hi) {
    double f_lo = traj.rhs_at(t_lo);
    for (int iter = 0; iter < 80; ++iter) {
        const double mid = 0.5 * (t_lo + t_hi);
        const double f_mid = traj.rhs_at(mid);
        if ((f_lo <= 0.0) == (f_mid <= 0.0)) {
            t_lo = mid;
            f_lo = f_mid;
        } else {
            t_hi = mid;
        }
    }
    return 0.5 * (t_lo + t_hi);
}

// Discrete sigma-neighborhood verification of an extremum at dense time t_n.
// Returns true when every sampled rate within +-sigma respects the extremum
// inequality (with a tiny slack for interpolation noise).
bool neighborhood_holds(const Trajectory& traj, double t_n, bool is_max) {
    const double dt = traj.params.step_dt;
    const double sigma = std::max(3.0 * dt, traj.params.rtt_T / 8.0);
    const double x_n = traj.rate_at(t_n);
    const double slack = 1e-9 * traj.params.loss.capacity_C;
    const std::size_t n = traj.size();

    auto first = static_cast<long>(std::ceil((t_n - sigma) / dt));
    auto last = static_cast<long>(std::floor((t_n + sigma) / dt));
    first = std::max(first, 0L);
    last = std::min(last, static_cast<long>(n) - 1);
    for (long j = first; j <= last; ++j) {
        const double x_j = traj.rates[static_cast<std::size_t>(j)];
        if (is_max && x_j > x_n + slack)
            return false;
        if (!is_max && x_j < x_n - slack)
            return false;
    }
    return true;
}

}  // namespace

ExtremumKind classify_extremum(const Trajectory& traj, const IndexWindow& window) {
    const std::size_t n = traj.size();
    if (window.lo < 3 || window.hi + 3 >= n)
        throw WindowTooSmallError("classify_extremum: fewer than 3 samples on one side");

    const double tol = stationarity_tolerance(traj.params);
    const double d_lo = traj.derivatives[window.lo];
    const double d_hi = traj.derivatives[window.hi];
    if (std::abs(d_lo) < tol && std::abs(d_hi) < tol)
        return ExtremumKind::Plateau;

    const bool is_max = d_lo > 0.0 && d_hi < 0.0;
    const bool is_min = d_lo < 0.0 && d_hi > 0.0;
    if (!is_max && !is_min)
        return ExtremumKind::Plateau;

    const double t_n = refine_zero(traj, traj.times[window.lo], traj.times[window.hi]);
    if (!neighborhood_holds(traj, t_n, is_max))
        return ExtremumKind::Plateau;  // sign pattern and neighborhood disagree
    return is_max ? ExtremumKind::LocalMax : ExtremumKind::LocalMin;
}

std::vector<StationaryPoint> find_stationary_points(const Trajectory& traj) {
    std::vector<StationaryPoint> out;
    const std::size_t n = traj.size();
    if (n < 3)
        return out;

    const double tol = stationarity_tolerance(traj.params);
    const auto& d = traj.derivatives;

    // Mark samples inside collapsed plateau runs (>= 3 consecutive near-zero).
    std::vector<char> in_run(n, 0);
    for (std::size_t i = 0; i < n;) {
        if (std::abs(d[i]) < tol) {
            std::size_t j = i;
            while (j + 1 < n && std::abs(d[j + 1]) < tol)
                ++j;
            if (j - i + 1 >= 3) {
                for (std::size_t q = i; q <= j; ++q)
                    in_run[q] = 1;
                const std::size_t mid = (i + j) / 2;
                out.push_back(make_point(traj, traj.times[mid], ExtremumKind::Plateau));
            }
            i = j + 1;
        } else {
            ++i;
        }
    }

    // Strict sign changes outside collapsed runs, bisection-refined.
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (in_run[i] && in_run[i + 1])
            continue;
        const bool pos_to_neg = d[i] > 0.0 && d[i + 1] < 0.0;
        const bool neg_to_pos = d[i] < 0.0 && d[i + 1] > 0.0;
        if (!pos_to_neg && !neg_to_pos)
            continue;

        ExtremumKind kind = pos_to_neg ? ExtremumKind::LocalMax : ExtremumKind::LocalMin;
        const IndexWindow window{i, i + 1};
        if (window.lo >= 3 && window.hi + 3 < n)
            kind = classify_extremum(traj, window);

        const double t_n = refine_zero(traj, traj.times[i], traj.times[i + 1]);
        if (t_n <= traj.times.front() || t_n >= traj.times.back())
            continue;  // endpoints are never stationary points
        out.push_back(make_point(traj, t_n, kind));
    }

    std::sort(out.begin(), out.end(),
              [](const StationaryPoint& a, const StationaryPoint& b) { return a.time_t < b.time_t; });
    return out;
}

LemmaReport lemma_report(const Trajectory& traj) {
    LemmaReport rep;
    rep.points = find_stationary_points(traj);

    for (const auto& pt : rep.points) {
        switch (pt.kind) {
            case ExtremumKind::LocalMax: ++rep.count_local_max; break;
            case ExtremumKind::LocalMin: ++rep.count_local_min; break;
            case ExtremumKind::Plateau: ++rep.count_plateau; break;
        }
    }

    const auto [mn, mx] = std::minmax_element(traj.rates.begin(), traj.rates.end());
    rep.rate_global_min = traj.rates.empty() ? 0.0 : *mn;
    rep.rate_global_max = traj.rates.empty() ? 0.0 : *mx;

    if (rep.points.empty()) {
        rep.band_min = rep.rate_global_min;
        rep.band_max = rep.rate_global_max;
    } else {
        rep.band_min = rep.points.front().rate_x;
        rep.band_max = rep.points.front().rate_x;
        for (const auto& pt : rep.points) {
            rep.band_min = std::min(rep.band_min, pt.rate_x);
            rep.band_max = std::max(rep.band_max, pt.rate_x);
        }
    }

    // Strict +/- swings of the sampled derivative, and whether any occur
    // after the first LocalMax.
    double first_max_time = std::numeric_limits<double>::infinity();
    for (const auto& pt : rep.points)
        if (pt.kind == ExtremumKind::LocalMax) {
            first_max_time = pt.time_t;
            break;
        }
    bool swing_after_max = false;
    const auto& d = traj.derivatives;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] > 0.0 && d[i + 1] < 0.0) {
            ++rep.pos_to_neg_crossings;
            if (traj.times[i] > first_max_time)
                swing_after_max = true;
        }
    }
    rep.single_local_max = rep.count_local_max == 1 && !swing_after_max;
    return rep;
}

}  // namespace fluidcc
