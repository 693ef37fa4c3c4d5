#include "sensing/belief.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace sensing {

SensingCost SensingCost::uniform(double k) {
    if (!(k >= 0.0) || !std::isfinite(k))
        throw std::invalid_argument("sensing cost must be finite and nonnegative");
    SensingCost c;
    c.kind_ = Kind::Uniform;
    c.k_ = k;
    return c;
}

SensingCost SensingCost::per_action(VectorXd costs) {
    if (costs.size() == 0 || costs.minCoeff() < 0.0 || !costs.allFinite())
        throw std::invalid_argument("per-action sensing costs must be finite and nonnegative");
    SensingCost c;
    c.kind_ = Kind::PerAction;
    c.per_action_ = std::move(costs);
    return c;
}

SensingCost SensingCost::belief_dependent(Fn fn) {
    SensingCost c;
    c.kind_ = Kind::BeliefDependent;
    c.fn_ = std::move(fn);
    return c;
}

double SensingCost::uniform_k() const {
    if (kind_ != Kind::Uniform)
        throw std::invalid_argument("uniform_k() requires the uniform sensing cost model");
    return k_;
}

double SensingCost::operator()(const RowVectorXd& belief, int action) const {
    switch (kind_) {
    case Kind::Uniform:
        return k_;
    case Kind::PerAction:
        return per_action_[action];
    case Kind::BeliefDependent: {
        const double k = fn_(belief, action);
        if (!(k >= 0.0) || !std::isfinite(k))
            throw std::invalid_argument("belief-dependent sensing cost returned an invalid value");
        return k;
    }
    }
    return 0.0;
}

BeliefState BeliefState::at_root(const BaselineMdp& mdp, int root) {
    if (root < 0 || root >= mdp.num_states)
        throw std::invalid_argument("root state index out of range");
    BeliefState b;
    b.root = root;
    b.belief = RowVectorXd::Zero(mdp.num_states);
    b.belief[root] = 1.0;
    return b;
}

namespace {
void clamp_and_renormalize(RowVectorXd& belief) {
    // floating-point drift over long products must not produce negatives
    bool touched = false;
    for (int i = 0; i < belief.size(); ++i) {
        if (belief[i] < 0.0) {
            if (belief[i] < -1e-15) throw std::logic_error("belief entry below -1e-15");
            belief[i] = 0.0;
            touched = true;
        }
    }
    if (touched) belief /= belief.sum();
}
} // namespace

BeliefState extend(const BeliefState& b, int action, const BaselineMdp& mdp) {
    if (action < 0 || action >= mdp.num_actions)
        throw std::invalid_argument("action index out of range");
    BeliefState out;
    out.root = b.root;
    out.blind_actions = b.blind_actions;
    out.blind_actions.push_back(action);
    out.z_cost = b.z_cost + std::pow(mdp.discount, b.depth()) * mdp.expected_cost(b.belief, action);
    out.belief = mdp.belief_step(b.belief, action);
    clamp_and_renormalize(out.belief);
    return out;
}

double z_from_belief(const BaselineMdp& mdp, const RowVectorXd& belief,
                     std::span<const int> actions) {
    RowVectorXd b = belief;
    double z = 0.0;
    double scale = 1.0;
    for (int a : actions) {
        z += scale * mdp.expected_cost(b, a);
        b = mdp.belief_step(b, a);
        scale *= mdp.discount;
    }
    return z;
}

double z_of_path(const BaselineMdp& mdp, int root, std::span<const int> actions) {
    return z_from_belief(mdp, BeliefState::at_root(mdp, root).belief, actions);
}

double v_as(const RowVectorXd& belief, const MatrixXd& q_star,
            const SensingCost& cost, double alpha) {
    if (!cost.is_uniform())
        throw std::invalid_argument(
            "v_as: the closed form k/(1-a) requires a uniform sensing cost; "
            "use the truncated or SPI machinery for non-uniform models");
    return (belief * q_star).minCoeff() + cost.uniform_k() / (1.0 - alpha);
}

int pi_as(const RowVectorXd& belief, const MatrixXd& q_star) {
    RowVectorXd q = belief * q_star;
    int best = 0;
    for (int a = 1; a < q.size(); ++a)
        if (q[a] < q[best]) best = a;
    return best;
}

double v_as0(const RowVectorXd& belief, const MatrixXd& q_star) {
    return (belief * q_star).minCoeff();
}

namespace {
// min_a [ B C(a) + k'(B,a) + a B T(a) v_bar ] with the lowest-index argmin.
// For the uniform model the k term is a constant shift, so this agrees with
// the outside-the-min form.
std::pair<double, int> ms_minimize(const RowVectorXd& belief, const VectorXd& v_bar,
                                   const BaselineMdp& mdp, const SensingCost& cost) {
    double best = std::numeric_limits<double>::infinity();
    int best_a = 0;
    for (int a = 0; a < mdp.num_actions; ++a) {
        const double q = mdp.expected_cost(belief, a) + cost(belief, a) +
                         mdp.discount * mdp.belief_step(belief, a).dot(v_bar);
        if (q < best) {
            best = q;
            best_a = a;
        }
    }
    return {best, best_a};
}
} // namespace

double v_ms(const RowVectorXd& belief, const VectorXd& v_bar,
            const BaselineMdp& mdp, const SensingCost& cost) {
    return ms_minimize(belief, v_bar, mdp, cost).first;
}

int pi_ms(const RowVectorXd& belief, const VectorXd& v_bar,
          const BaselineMdp& mdp, const SensingCost& cost) {
    return ms_minimize(belief, v_bar, mdp, cost).second;
}

} // namespace sensing
