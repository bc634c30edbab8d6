#pragma once

#include <stdexcept>
#include <vector>

#include "mcsl/common/rng.hpp"

namespace mcsl::mechanism {

// All symbols of the device <-> edge-server data-submission game.
struct MechanismParams {
    double reward = 10.0;          // R, paid by the requestor for processing
    double alpha_s = 3.0;          // leakage-reward slope
    double beta_s = 2.0;           // leakage-reward offset
    double epsilon = 0.9;          // weight of the device's valuation in g(v,s)
    double v_max = 50.0;           // \bar v
    double s_max = 500.0;          // \bar s
    double sensing_cost = 2.0;     // c_d
    double eta = 2.0;              // privacy-loss weight
    double xi = 2.0;               // c_s = xi * v
    double horizon = 1.0;          // T; integrands are time-constant

    double leakage_reward(double theta) const { return alpha_s * theta + beta_s; }
    double eta_xi() const { return eta * xi; }

    void validate() const {
        if (v_max <= 0 || s_max <= 0) throw std::invalid_argument("v_max and s_max must be positive");
        if (sensing_cost < 0) throw std::invalid_argument("sensing cost must be >= 0");
        if (horizon <= 0) throw std::invalid_argument("horizon must be positive");
        if (alpha_s < 0 || beta_s < 0) throw std::invalid_argument("leakage coefficients must be >= 0");
        if (epsilon < 0 || epsilon > 1) throw std::invalid_argument("epsilon must lie in [0,1]");
    }
};

// Thrown when eta*xi <= 1: the device's objective is not concave in v and the
// closed forms do not exist.
struct ConditionViolation : std::domain_error {
    using std::domain_error::domain_error;
};

// g(v, s) = eps*v/v_max + (1-eps)*s/s_max, the success probability of the
// submission. Domain-checked.
double collection_probability(double v, double s, const MechanismParams& p);

// U_s and U_d: time-constant integrands times the horizon.
double server_utility(double v, double s, double theta, const MechanismParams& p);
double device_utility(double v, double s, const MechanismParams& p);

// The device's optimal rule v*(s), a rational expression in s. Unclamped:
// protocol code clamps to [0, v_max] at the point of use.
struct GameRule {
    MechanismParams params;
    double evaluate(double s) const;            // v*(s), unclamped
    double evaluate_clamped(double s) const;    // max(0, min(v*(s), v_max))
};

GameRule optimal_game_rule(const MechanismParams& p);  // throws ConditionViolation

// Closed-form maximizer of U_s(s, v*(s); theta), clamped to [0, s_max].
double optimal_server_strategy(double theta, const MechanismParams& p);

struct SubmissionOutcome {
    bool accepted = false;
    double s_star = 0.0;
    double v_star = 0.0;
    double payment = 0.0;         // v_star + s_star when accepted
    double device_utility = 0.0;  // U_d at the realized point
    double server_utility = 0.0;  // U_s at the realized point
    double elapsed = 0.0;         // protocol wall time in simulated seconds
};

// Algorithm-1 exchange: device proposes v*(s); server best-responds with s*
// and accepts iff the trade is strictly profitable, otherwise stays silent and
// the device terminates at `timeout`.
SubmissionOutcome run_submission_protocol(const MechanismParams& device_params,
                                          double server_theta, double timeout);

// Theorem-1 check: truthful theta weakly dominates every sampled
// misreport, with utilities evaluated under the true theta.
bool incentive_compatibility_check(double theta_true, const std::vector<double>& theta_fakes,
                                   const MechanismParams& p);

// Random valid parameter set with eta*xi > 1, for property tests and sweeps.
MechanismParams random_valid_params(Rng& rng);

// Unchecked evaluations of the defining expressions, used where the closed
// forms have to be followed outside the payment box (oracle comparisons, the
// incentive-compatibility proof path). Protocol code never calls these.
namespace raw {
double g(double v, double s, const MechanismParams& p);
double server_utility(double v, double s, double theta, const MechanismParams& p);
double device_utility(double v, double s, const MechanismParams& p);
}  // namespace raw

}  // namespace mcsl::mechanism
