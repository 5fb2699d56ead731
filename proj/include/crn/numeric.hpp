#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "crn/network.hpp"
#include "crn/toric.hpp"
#include "crn/translate.hpp"

namespace crn {

// Positive numeric values for the rate-constant symbols.
struct RateAssignment {
    std::map<std::string, double> values;
};

// Per-reaction rate vector aligned with net.reactions(). Throws on missing
// labels or nonpositive values.
std::vector<double> bind_rates(const Network& net, const RateAssignment& k);

// dx/dt under mass-action kinetics, with 0^0 == 1.
std::vector<double> mass_action_rhs(const Network& net, const std::vector<double>& k,
                                    const std::vector<double>& x);

struct SteadyStateOptions {
    double residual_tol = 1e-10;       // relative, see SteadyStateResult::residual
    double conservation_tol = 1e-9;    // relative drift of conserved totals
    long long max_rhs_evals = 10000000;
    int max_newton_iters = 50;
    double initial_horizon = 10.0;     // doubled until the residual target is met
};

struct SteadyStateResult {
    std::vector<double> x;
    bool converged = false;
    double residual = 0.0;  // ||rhs||_inf / max(1, ||x||_inf * k_max)
    long long rhs_evals = 0;
    std::string message;
};

// Integrates the mass-action ODE with an adaptive explicit scheme, doubling
// the time horizon and polishing with a damped Newton iteration restricted to
// the stoichiometric compatibility class of x0. On failure the result carries
// a diagnostic instead of a fabricated state.
SteadyStateResult find_steady_state(const Network& net, const std::vector<double>& k,
                                    const std::vector<double>& x0,
                                    const SteadyStateOptions& opts = {});

// |lhs - rhs| / max(|lhs|, |rhs|, floor) for one basis binomial at numeric
// rates (per reaction) and concentrations.
double binomial_residual(const BasisBinomial& b, const std::vector<double>& k,
                         const std::vector<double>& x, double floor = 1e-30);

// Exact rational binomial gap (lhs - rhs); no floating point on this path.
Rational binomial_gap_exact(const BasisBinomial& b, const std::vector<Rational>& k,
                            const std::vector<Rational>& x);

struct TrialResult {
    bool converged = false;
    double residual_ode = 0.0;
    double residual_basis_max = 0.0;
};

struct VerificationReport {
    int trials = 0;
    uint64_t seed = 0;
    double tol = 0.0;
    double residual_floor = 1e-30;
    int min_converged = 0;
    std::vector<TrialResult> per_trial;
    int converged_count = 0;
    bool pass = false;
    std::string note;
};

struct VerifyOptions {
    double residual_floor = 1e-30;
    int min_converged = -1;  // default: ceil(0.9 * trials)
    SteadyStateOptions solver;
};

// Runs seeded random trials: rate constants log-uniform in [0.1, 10], random
// positive initial state, steady state via find_steady_state, then every
// basis binomial evaluated at the steady state. A trial that does not
// converge is inconclusive and never counts as passing. With zero trials the
// report passes vacuously and says so in `note`.
VerificationReport verify_basis(const Network& net, const GeneralizedNetwork& g,
                                const std::vector<BasisBinomial>& basis, int trials, double tol,
                                uint64_t seed, const VerifyOptions& opts = {});

// Deterministic per-trial sampling, exposed for tests and the CLI.
std::vector<double> sample_log_uniform(uint64_t seed, uint64_t stream, size_t count,
                                       double lo = 0.1, double hi = 10.0);

}  // namespace crn
