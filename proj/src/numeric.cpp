#include "crn/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "crn/error.hpp"
#include "crn/graph.hpp"

namespace crn {

std::vector<double> bind_rates(const Network& net, const RateAssignment& k) {
    std::vector<double> out(net.reaction_count());
    for (const Reaction& rx : net.reactions()) {
        auto it = k.values.find(rx.rate_label);
        if (it == k.values.end()) throw Error("no rate value for label: " + rx.rate_label);
        if (!(it->second > 0.0)) throw Error("rate value must be positive: " + rx.rate_label);
        out[rx.index] = it->second;
    }
    return out;
}

namespace {

double pow_int(double x, int e) {
    double r = 1.0;  // e == 0 gives 1 even at x == 0
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

// Precomputed sparse mass-action evaluator.
struct RhsEvaluator {
    int m = 0;
    std::vector<double> k;
    std::vector<std::vector<std::pair<int, int>>> source;  // reaction -> (species, exp)
    std::vector<std::vector<std::pair<int, int>>> delta;   // reaction -> (species, net change)
    mutable long long evals = 0;

    RhsEvaluator(const Network& net, std::vector<double> rates) : m(net.species_count()), k(std::move(rates)) {
        source.resize(net.reaction_count());
        delta.resize(net.reaction_count());
        for (const Reaction& rx : net.reactions()) {
            source[rx.index] = rx.source.terms();
            std::map<int, int> d;
            for (const auto& [s, c] : rx.product.terms()) d[s] += c;
            for (const auto& [s, c] : rx.source.terms()) d[s] -= c;
            for (const auto& [s, c] : d)
                if (c != 0) delta[rx.index].push_back({s, c});
        }
    }

    double rate(size_t i, const std::vector<double>& x) const {
        double v = k[i];
        for (const auto& [s, e] : source[i]) v *= pow_int(x[s], e);
        return v;
    }

    void operator()(const std::vector<double>& x, std::vector<double>& dx) const {
        ++evals;
        std::fill(dx.begin(), dx.end(), 0.0);
        for (size_t i = 0; i < source.size(); ++i) {
            double v = rate(i, x);
            for (const auto& [s, c] : delta[i]) dx[s] += c * v;
        }
    }

    // Natural magnitude of each species equation: the gross flux through the
    // species. Row-scaling the Newton system by this keeps species sitting at
    // tiny concentrations solved to relative, not absolute, accuracy.
    void flux_scale(const std::vector<double>& x, std::vector<double>& scale) const {
        std::fill(scale.begin(), scale.end(), 0.0);
        for (size_t i = 0; i < source.size(); ++i) {
            double v = rate(i, x);
            for (const auto& [s, c] : delta[i]) scale[s] += std::abs(c) * v;
        }
        for (double& s : scale) s = std::max(s, 1e-300);
    }

    // J[p][q] = d(dx_p)/d(x_q)
    void jacobian(const std::vector<double>& x, std::vector<std::vector<double>>& jac) const {
        for (auto& row : jac) std::fill(row.begin(), row.end(), 0.0);
        for (size_t i = 0; i < source.size(); ++i) {
            for (const auto& [q, e] : source[i]) {
                double dv = k[i] * e * pow_int(x[q], e - 1);
                for (const auto& [s2, e2] : source[i])
                    if (s2 != q) dv *= pow_int(x[s2], e2);
                for (const auto& [p, c] : delta[i]) jac[p][q] += c * dv;
            }
        }
    }
};

double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// Householder QR least squares for rows >= cols; returns false when the
// matrix is numerically rank deficient. The Newton systems here are small
// (at most ~50 x 25).
bool qr_least_squares(std::vector<std::vector<double>> a, std::vector<double> b,
                      std::vector<double>& out) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int k = 0; k < cols; ++k) {
        double norm = 0.0;
        for (int r = k; r < rows; ++r) norm += a[r][k] * a[r][k];
        norm = std::sqrt(norm);
        if (norm < 1e-300) return false;
        double alpha = a[k][k] > 0 ? -norm : norm;
        std::vector<double> v(rows - k);
        v[0] = a[k][k] - alpha;
        for (int r = k + 1; r < rows; ++r) v[r - k] = a[r][k];
        double vnorm2 = 0.0;
        for (double vv : v) vnorm2 += vv * vv;
        if (vnorm2 < 1e-300) {
            a[k][k] = alpha;
            continue;
        }
        for (int c = k; c < cols; ++c) {
            double dot = 0.0;
            for (int r = k; r < rows; ++r) dot += v[r - k] * a[r][c];
            double f = 2.0 * dot / vnorm2;
            for (int r = k; r < rows; ++r) a[r][c] -= f * v[r - k];
        }
        double dot = 0.0;
        for (int r = k; r < rows; ++r) dot += v[r - k] * b[r];
        double f = 2.0 * dot / vnorm2;
        for (int r = k; r < rows; ++r) b[r] -= f * v[r - k];
    }
    out.assign(cols, 0.0);
    for (int r = cols - 1; r >= 0; --r) {
        if (std::abs(a[r][r]) < 1e-300) return false;
        double s = b[r];
        for (int c = r + 1; c < cols; ++c) s -= a[r][c] * out[c];
        out[r] = s / a[r][r];
    }
    return true;
}

struct CompatibilityClass {
    std::vector<std::vector<double>> laws;  // conservation-law vectors
    std::vector<double> totals;             // law . x0
};

// Relative steady-state residual per the solver contract.
double relative_residual(const std::vector<double>& rhs, const std::vector<double>& x, double k_max) {
    return inf_norm(rhs) / std::max(1.0, inf_norm(x) * k_max);
}

// Damped Gauss-Newton on the scaled stacked system: every species equation
// divided by its gross flux, plus the conservation-law equations. Scaling
// each row by its own magnitude keeps species sitting at tiny concentrations
// solved to relative precision; the system is consistent at a steady state,
// so the least-squares iteration converges quadratically there.
bool newton_polish(const RhsEvaluator& f, const CompatibilityClass& cc, double k_max,
                   const SteadyStateOptions& opts, std::vector<double>& x) {
    const int m = f.m;
    const int laws = static_cast<int>(cc.laws.size());
    const int rows = m + laws;
    std::vector<double> rhs(m), dx(m), trial(m), rhs_trial(m), scale(m), scale_trial(m);
    std::vector<std::vector<double>> jac(m, std::vector<double>(m));

    double total_scale = 1.0;
    for (double t : cc.totals) total_scale = std::max(total_scale, std::abs(t));

    auto stacked = [&](const std::vector<double>& state, const std::vector<double>& r,
                       const std::vector<double>& sc, std::vector<double>& out_f) {
        for (int p = 0; p < m; ++p) out_f[p] = r[p] / sc[p];
        for (int j = 0; j < laws; ++j) {
            double dot = 0.0;
            for (int q = 0; q < m; ++q) dot += cc.laws[j][q] * state[q];
            out_f[m + j] = (dot - cc.totals[j]) / total_scale;
        }
    };

    std::vector<double> fval(rows), ftrial(rows);
    f(x, rhs);
    f.flux_scale(x, scale);
    stacked(x, rhs, scale, fval);
    double fnorm = inf_norm(fval);

    auto meets_tolerances = [&]() {
        if (relative_residual(rhs, x, k_max) >= opts.residual_tol) return false;
        double drift = 0.0;
        for (int j = 0; j < laws; ++j) {
            double dot = 0.0;
            for (int q = 0; q < m; ++q) dot += cc.laws[j][q] * x[q];
            drift = std::max(drift, std::abs(dot - cc.totals[j]));
        }
        return drift / total_scale <= opts.conservation_tol;
    };

    // Iterate to a deep floor rather than stopping at the first tolerance
    // hit: the extra quadratic steps are nearly free and keep every species
    // equation balanced to relative precision, not just the largest ones.
    constexpr double kScaledFloor = 5e-14;   // stop polishing below this
    constexpr double kScaledTarget = 1e-9;   // required for success
    for (int iter = 0; iter < opts.max_newton_iters; ++iter) {
        if (fnorm < kScaledFloor) break;
        f.jacobian(x, jac);
        std::vector<std::vector<double>> a(rows, std::vector<double>(m));
        std::vector<double> b(rows);
        for (int p = 0; p < m; ++p) {
            for (int q = 0; q < m; ++q) a[p][q] = jac[p][q] / scale[p];
            b[p] = -fval[p];
        }
        for (int j = 0; j < laws; ++j) {
            for (int q = 0; q < m; ++q) a[m + j][q] = cc.laws[j][q] / total_scale;
            b[m + j] = -fval[m + j];
        }
        if (!qr_least_squares(std::move(a), std::move(b), dx)) break;

        double lambda = 1.0;
        bool stepped = false;
        for (int halving = 0; halving < 40; ++halving, lambda *= 0.5) {
            bool positive = true;
            for (int q = 0; q < m; ++q) {
                trial[q] = x[q] + lambda * dx[q];
                if (trial[q] < 0.0) {
                    positive = false;
                    break;
                }
            }
            if (!positive) continue;
            f(trial, rhs_trial);
            f.flux_scale(trial, scale_trial);
            stacked(trial, rhs_trial, scale_trial, ftrial);
            double tnorm = inf_norm(ftrial);
            if (tnorm < fnorm) {
                x = trial;
                rhs = rhs_trial;
                scale = scale_trial;
                fval = ftrial;
                fnorm = tnorm;
                stepped = true;
                break;
            }
        }
        if (!stepped) break;  // rounding plateau or no descent direction
    }
    return fnorm < kScaledTarget && meets_tolerances();
}

// Dormand-Prince 5(4) coefficients.
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247, A64 = 49.0 / 176,
                 A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784,
                 B6 = 11.0 / 84;
constexpr double E1 = 35.0 / 384 - 5179.0 / 57600, E3 = 500.0 / 1113 - 7571.0 / 16695,
                 E4 = 125.0 / 192 - 393.0 / 640, E5 = -2187.0 / 6784 + 92097.0 / 339200,
                 E6 = 11.0 / 84 - 187.0 / 2100, E7 = -1.0 / 40;

// Integrates to t_end; returns false when the eval budget runs out first.
bool integrate_to(const RhsEvaluator& f, double t_end, long long eval_budget,
                  std::vector<double>& x, double& t) {
    const int m = f.m;
    const double rtol = 1e-8, atol = 1e-12;
    std::vector<double> k1(m), k2(m), k3(m), k4(m), k5(m), k6(m), k7(m), y(m), y5(m);
    double h = std::min(1e-3, (t_end - t) / 10);
    f(x, k1);
    while (t < t_end) {
        if (f.evals > eval_budget) return false;
        h = std::min(h, t_end - t);
        auto stage = [&](std::vector<double>& out, std::initializer_list<std::pair<const std::vector<double>*, double>> terms) {
            for (int q = 0; q < m; ++q) {
                double acc = x[q];
                for (const auto& [vec, w] : terms) acc += h * w * (*vec)[q];
                out[q] = acc;
            }
        };
        stage(y, {{&k1, A21}});
        f(y, k2);
        stage(y, {{&k1, A31}, {&k2, A32}});
        f(y, k3);
        stage(y, {{&k1, A41}, {&k2, A42}, {&k3, A43}});
        f(y, k4);
        stage(y, {{&k1, A51}, {&k2, A52}, {&k3, A53}, {&k4, A54}});
        f(y, k5);
        stage(y, {{&k1, A61}, {&k2, A62}, {&k3, A63}, {&k4, A64}, {&k5, A65}});
        f(y, k6);
        stage(y5, {{&k1, B1}, {&k3, B3}, {&k4, B4}, {&k5, B5}, {&k6, B6}});
        f(y5, k7);

        bool positive = true;
        for (int q = 0; q < m; ++q) {
            if (y5[q] < 0.0 || !std::isfinite(y5[q])) {
                positive = false;
                break;
            }
        }
        double err = 0.0;
        if (positive) {
            for (int q = 0; q < m; ++q) {
                double e = h * (E1 * k1[q] + E3 * k3[q] + E4 * k4[q] + E5 * k5[q] + E6 * k6[q] +
                                E7 * k7[q]);
                double sc = atol + rtol * std::max(std::abs(x[q]), std::abs(y5[q]));
                err = std::max(err, std::abs(e) / sc);
            }
        }
        if (positive && err <= 1.0) {
            t += h;
            x = y5;
            k1 = k7;  // FSAL
            h *= std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 1.0, 5.0);
        } else {
            h *= positive ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 0.9) : 0.5;
            if (h < 1e-14) return false;  // stiffness wall; let Newton take over
        }
    }
    return true;
}

}  // namespace

std::vector<double> mass_action_rhs(const Network& net, const std::vector<double>& k,
                                    const std::vector<double>& x) {
    if (static_cast<int>(k.size()) != net.reaction_count())
        throw Error("rate vector size mismatch");
    if (static_cast<int>(x.size()) != net.species_count())
        throw Error("state vector size mismatch");
    RhsEvaluator f(net, k);
    std::vector<double> dx(net.species_count());
    f(x, dx);
    return dx;
}

SteadyStateResult find_steady_state(const Network& net, const std::vector<double>& k,
                                    const std::vector<double>& x0,
                                    const SteadyStateOptions& opts) {
    SteadyStateResult res;
    if (static_cast<int>(x0.size()) != net.species_count())
        throw Error("state vector size mismatch");
    for (double v : x0)
        if (!(v > 0.0)) throw Error("initial state must be strictly positive");

    RhsEvaluator f(net, k);
    double k_max = *std::max_element(k.begin(), k.end());

    CompatibilityClass cc;
    for (const auto& law : conservation_laws(net)) {
        std::vector<double> row(net.species_count());
        for (int q = 0; q < net.species_count(); ++q) row[q] = law[q].to_double();
        double dot = 0.0;
        for (int q = 0; q < net.species_count(); ++q) dot += row[q] * x0[q];
        cc.totals.push_back(dot);
        cc.laws.push_back(std::move(row));
    }

    std::vector<double> x = x0;
    double t = 0.0;
    double horizon = opts.initial_horizon;
    std::vector<double> rhs(net.species_count());

    while (true) {
        std::vector<double> candidate = x;
        if (newton_polish(f, cc, k_max, opts, candidate)) {
            f(candidate, rhs);
            res.x = candidate;
            res.converged = true;
            res.residual = relative_residual(rhs, candidate, k_max);
            res.rhs_evals = f.evals;
            return res;
        }
        if (f.evals > opts.max_rhs_evals) break;
        if (!integrate_to(f, horizon, opts.max_rhs_evals, x, t) && f.evals > opts.max_rhs_evals)
            break;
        horizon *= 2;
    }

    f(x, rhs);
    res.x = x;
    res.converged = false;
    res.residual = relative_residual(rhs, x, k_max);
    res.rhs_evals = f.evals;
    res.message = "no convergence within the evaluation budget";
    return res;
}

double binomial_residual(const BasisBinomial& b, const std::vector<double>& k,
                         const std::vector<double>& x, double floor) {
    auto mono = [&x](const Complex& c) {
        double prod = 1.0;
        for (const auto& [s, e] : c.terms()) prod *= pow_int(x[s], e);
        return prod;
    };
    double lhs = b.lhs_coeff.eval(k) * mono(b.lhs_mono);
    double rhs = b.rhs_coeff.eval(k) * mono(b.rhs_mono);
    return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), floor});
}

Rational binomial_gap_exact(const BasisBinomial& b, const std::vector<Rational>& k,
                            const std::vector<Rational>& x) {
    auto mono = [&x](const Complex& c) {
        Rational prod(1);
        for (const auto& [s, e] : c.terms())
            for (int i = 0; i < e; ++i) prod = prod * x.at(s);
        return prod;
    };
    return b.lhs_coeff.eval_exact(k) * mono(b.lhs_mono) -
           b.rhs_coeff.eval_exact(k) * mono(b.rhs_mono);
}

namespace {

uint64_t splitmix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::vector<double> sample_log_uniform(uint64_t seed, uint64_t stream, size_t count, double lo,
                                       double hi) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(stream)));
    const double llo = std::log10(lo), lhi = std::log10(hi);
    std::vector<double> out(count);
    for (double& v : out) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
        v = std::pow(10.0, llo + (lhi - llo) * u);
    }
    return out;
}

VerificationReport verify_basis(const Network& net, const GeneralizedNetwork& g,
                                const std::vector<BasisBinomial>& basis, int trials, double tol,
                                uint64_t seed, const VerifyOptions& opts) {
    if (trials < 0) throw Error("trial count must be nonnegative");
    if (g.base.reaction_count() != net.reaction_count())
        throw Error("generalized network does not derive from this network");
    VerificationReport report;
    report.trials = trials;
    report.seed = seed;
    report.tol = tol;
    report.residual_floor = opts.residual_floor;
    report.min_converged =
        opts.min_converged >= 0 ? opts.min_converged : (trials * 9 + 9) / 10;

    if (trials == 0) {
        report.pass = true;
        report.note = "no evidence: zero trials requested";
        return report;
    }

    bool all_below_tol = true;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<double> k =
            sample_log_uniform(seed, 2 * static_cast<uint64_t>(trial), net.reaction_count());
        std::vector<double> x0 =
            sample_log_uniform(seed, 2 * static_cast<uint64_t>(trial) + 1, net.species_count());

        TrialResult tr;
        SteadyStateResult ss = find_steady_state(net, k, x0, opts.solver);
        tr.converged = ss.converged;
        tr.residual_ode = ss.residual;
        if (ss.converged) {
            double worst = 0.0;
            for (const BasisBinomial& b : basis)
                worst = std::max(worst, binomial_residual(b, k, ss.x, opts.residual_floor));
            tr.residual_basis_max = worst;
            if (worst >= tol) all_below_tol = false;
            ++report.converged_count;
        }
        report.per_trial.push_back(tr);
    }
    report.pass = all_below_tol && report.converged_count >= report.min_converged &&
                  report.converged_count > 0;
    if (report.converged_count < trials)
        report.note = std::to_string(trials - report.converged_count) +
                      " trial(s) inconclusive (no convergence)";
    return report;
}

}  // namespace crn
