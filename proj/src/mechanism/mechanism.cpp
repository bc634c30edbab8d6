#include "mcsl/mechanism/mechanism.hpp"

#include <algorithm>
#include <cmath>

namespace mcsl::mechanism {

namespace {

void check_domain(double v, double s, const MechanismParams& p) {
    if (!(v >= 0.0 && v <= p.v_max))
        throw std::domain_error("v out of [0, v_max]");
    if (!(s >= 0.0 && s <= p.s_max))
        throw std::domain_error("s out of [0, s_max]");
}

void require_concave(const MechanismParams& p) {
    if (!(p.eta_xi() > 1.0))
        throw ConditionViolation("eta*xi must exceed 1 for the optimal rule to exist");
}

}  // namespace

namespace raw {

double g(double v, double s, const MechanismParams& p) {
    return p.epsilon * v / p.v_max + (1.0 - p.epsilon) * s / p.s_max;
}

double server_utility(double v, double s, double theta, const MechanismParams& p) {
    return p.horizon * (p.reward + p.leakage_reward(theta) - v - s) * g(v, s, p);
}

double device_utility(double v, double s, const MechanismParams& p) {
    double cost = p.sensing_cost + p.eta_xi() * v;  // C = c_d + eta*c_s, c_s = xi*v
    return p.horizon * (v + s - cost) * g(v, s, p);
}

}  // namespace raw

double collection_probability(double v, double s, const MechanismParams& p) {
    check_domain(v, s, p);
    return raw::g(v, s, p);
}

double server_utility(double v, double s, double theta, const MechanismParams& p) {
    if (theta < 0.0 || theta > 1.0) throw std::domain_error("theta out of [0,1]");
    check_domain(v, s, p);
    return raw::server_utility(v, s, theta, p);
}

double device_utility(double v, double s, const MechanismParams& p) {
    check_domain(v, s, p);
    return raw::device_utility(v, s, p);
}

double GameRule::evaluate(double s) const {
    const auto& p = params;
    const double ex = p.eta_xi();
    return ((1.0 - p.epsilon) * (ex - 1.0) * p.v_max * s -
            p.epsilon * p.s_max * (s - p.sensing_cost)) /
           (2.0 * p.epsilon * (1.0 - ex) * p.s_max);
}

double GameRule::evaluate_clamped(double s) const {
    return std::clamp(evaluate(s), 0.0, params.v_max);
}

GameRule optimal_game_rule(const MechanismParams& p) {
    p.validate();
    require_concave(p);
    if (p.epsilon <= 0.0) throw ConditionViolation("the rule is undefined at epsilon = 0");
    return GameRule{p};
}

double optimal_server_strategy(double theta, const MechanismParams& p) {
    p.validate();
    require_concave(p);
    if (theta < 0.0 || theta > 1.0) throw std::domain_error("theta out of [0,1]");
    const double ex = p.eta_xi();
    const double a0 = p.epsilon / p.v_max + (ex - 1.0) * (p.epsilon - 1.0) / p.s_max;
    const double a1 = 2.0 * (ex - 1.0);
    const double r_theta = p.reward + p.alpha_s * theta + p.beta_s;
    const double term1 =
        (r_theta + p.sensing_cost / a1) / (2.0 * (p.v_max * a0 / (p.epsilon * a1) + 1.0));
    const double term2 =
        p.sensing_cost * p.epsilon /
        (2.0 * p.v_max * a1 * (a0 / a1 - (p.epsilon - 1.0) / p.s_max));
    return std::clamp(term1 + term2, 0.0, p.s_max);
}

SubmissionOutcome run_submission_protocol(const MechanismParams& device_params,
                                          double server_theta, double timeout) {
    GameRule rule = optimal_game_rule(device_params);
    SubmissionOutcome out;
    const double s_star = optimal_server_strategy(server_theta, device_params);
    const double v_star = rule.evaluate_clamped(s_star);
    const double u_s = server_utility(v_star, s_star, server_theta, device_params);
    if (u_s > 0.0) {
        // Accepting v*(s) is profitable: the server returns s*, the device
        // derives v* and the data transfers against payment v* + s*.
        out.accepted = true;
        out.s_star = s_star;
        out.v_star = v_star;
        out.payment = v_star + s_star;
        out.server_utility = u_s;
        out.device_utility = device_utility(v_star, s_star, device_params);
        out.elapsed = 0.0;
    } else {
        // The server keeps silent; the device terminates after the timeout.
        out.accepted = false;
        out.elapsed = timeout;
    }
    return out;
}

bool incentive_compatibility_check(double theta_true, const std::vector<double>& theta_fakes,
                                   const MechanismParams& p) {
    // Evaluated along the rule itself (unclamped), matching the proof: s*(theta)
    // is the exact argmax of the concave U_s(s, v*(s); theta) over [0, s_max].
    GameRule rule = optimal_game_rule(p);
    if (theta_true < 0.0 || theta_true > 1.0) throw std::domain_error("theta out of [0,1]");
    const double s_true = optimal_server_strategy(theta_true, p);
    const double u_true = raw::server_utility(rule.evaluate(s_true), s_true, theta_true, p);
    for (double fake : theta_fakes) {
        if (fake < 0.0 || fake > 1.0) throw std::domain_error("theta out of [0,1]");
        const double s_fake = optimal_server_strategy(fake, p);
        const double u_fake = raw::server_utility(rule.evaluate(s_fake), s_fake, theta_true, p);
        if (u_fake > u_true + 1e-12) return false;
    }
    return true;
}

MechanismParams random_valid_params(Rng& rng) {
    MechanismParams p;
    p.reward = rng.uniform(1.0, 20.0);
    p.alpha_s = rng.uniform(0.0, 5.0);
    p.beta_s = rng.uniform(0.0, 5.0);
    p.epsilon = rng.uniform(0.05, 0.95);
    p.v_max = rng.uniform(10.0, 100.0);
    p.s_max = rng.uniform(100.0, 1000.0);
    p.sensing_cost = rng.uniform(0.0, 5.0);
    // draw eta, xi until the concavity condition holds
    do {
        p.eta = rng.uniform(0.2, 10.0);
        p.xi = rng.uniform(0.2, 10.0);
    } while (p.eta_xi() <= 1.05);
    p.horizon = 1.0;
    return p;
}

}  // namespace mcsl::mechanism
