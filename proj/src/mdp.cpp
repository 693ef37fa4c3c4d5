#include "sensing/mdp.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sensing {

BaselineMdp BaselineMdp::from_dense(std::string name,
                                    const std::vector<MatrixXd>& transitions,
                                    MatrixXd costs, double discount,
                                    Convention convention) {
    BaselineMdp mdp;
    mdp.name = std::move(name);
    mdp.num_actions = static_cast<int>(transitions.size());
    mdp.num_states = mdp.num_actions > 0 ? static_cast<int>(transitions[0].rows()) : 0;
    mdp.discount = discount;
    mdp.costs = std::move(costs);
    mdp.convention = convention;
    mdp.transitions.reserve(transitions.size());
    for (const MatrixXd& t : transitions) {
        mdp.transitions.emplace_back(t.sparseView());
        mdp.transitions.back().makeCompressed();
    }
    return mdp;
}

RowVectorXd BaselineMdp::belief_step(const RowVectorXd& belief, int action) const {
    RowVectorXd out = RowVectorXd::Zero(num_states);
    const SparseRowMatrix& t = transitions[action];
    for (int i = 0; i < num_states; ++i) {
        const double bi = belief[i];
        if (bi == 0.0) continue;
        for (SparseRowMatrix::InnerIterator it(t, i); it; ++it)
            out[it.col()] += bi * it.value();
    }
    return out;
}

VectorXd BaselineMdp::transition_apply(int action, const VectorXd& v) const {
    return transitions[action] * v;
}

ValidationResult validate(const BaselineMdp& mdp) {
    auto fail = [](const std::string& msg) { return ValidationResult{false, msg}; };
    if (mdp.num_states <= 0) return fail("num_states must be positive");
    if (mdp.num_actions <= 0) return fail("num_actions must be positive");
    if (!(mdp.discount > 0.0 && mdp.discount < 1.0)) {
        std::ostringstream os;
        os << "discount must lie strictly in (0,1), got " << mdp.discount;
        return fail(os.str());
    }
    if (static_cast<int>(mdp.transitions.size()) != mdp.num_actions)
        return fail("transitions must hold one matrix per action");
    for (int a = 0; a < mdp.num_actions; ++a) {
        const SparseRowMatrix& t = mdp.transitions[a];
        if (t.rows() != mdp.num_states || t.cols() != mdp.num_states) {
            std::ostringstream os;
            os << "transition matrix for action " << a << " is " << t.rows() << "x"
               << t.cols() << ", expected " << mdp.num_states << "x" << mdp.num_states;
            return fail(os.str());
        }
        for (int s = 0; s < mdp.num_states; ++s) {
            double sum = 0.0;
            for (SparseRowMatrix::InnerIterator it(t, s); it; ++it) {
                if (it.value() < 0.0) {
                    std::ostringstream os;
                    os << "negative transition probability at action " << a << ", row "
                       << s << ", col " << it.col();
                    return fail(os.str());
                }
                sum += it.value();
            }
            if (std::abs(sum - 1.0) > 1e-12) {
                std::ostringstream os;
                os << "row " << s << " of transition matrix for action " << a
                   << " sums to " << sum << ", expected 1";
                return fail(os.str());
            }
        }
    }
    if (mdp.costs.rows() != mdp.num_states || mdp.costs.cols() != mdp.num_actions)
        return fail("cost table must be |S| x |A|");
    for (int s = 0; s < mdp.num_states; ++s)
        for (int a = 0; a < mdp.num_actions; ++a)
            if (!std::isfinite(mdp.costs(s, a))) {
                std::ostringstream os;
                os << "non-finite cost at state " << s << ", action " << a;
                return fail(os.str());
            }
    if (mdp.initial_distribution) {
        const VectorXd& d = *mdp.initial_distribution;
        if (d.size() != mdp.num_states)
            return fail("initial_distribution must have one entry per state");
        if (d.minCoeff() < 0.0) return fail("initial_distribution has a negative entry");
        if (std::abs(d.sum() - 1.0) > 1e-9) return fail("initial_distribution does not sum to 1");
    }
    return {};
}

BaselineSolution solve_baseline(const BaselineMdp& mdp, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("solve_baseline: tol must be positive");
    ValidationResult v = validate(mdp);
    if (!v.ok) throw std::invalid_argument("solve_baseline: invalid MDP: " + v.message);

    const int S = mdp.num_states;
    const int A = mdp.num_actions;
    const double alpha = mdp.discount;
    const double stop = tol * (1.0 - alpha) / (2.0 * alpha);

    VectorXd value = VectorXd::Zero(S);
    MatrixXd q(S, A);
    while (true) {
        for (int a = 0; a < A; ++a)
            q.col(a) = mdp.costs.col(a) + alpha * mdp.transition_apply(a, value);
        VectorXd next = q.rowwise().minCoeff();
        const double diff = (next - value).lpNorm<Eigen::Infinity>();
        value = std::move(next);
        if (diff <= stop) break;
    }
    for (int a = 0; a < A; ++a)
        q.col(a) = mdp.costs.col(a) + alpha * mdp.transition_apply(a, value);

    BaselineSolution sol;
    sol.v_star = value;
    sol.q_star = q;
    sol.pi_star.resize(S);
    for (int s = 0; s < S; ++s) {
        int best = 0;
        for (int a = 1; a < A; ++a)
            if (q(s, a) < q(s, best)) best = a;
        sol.pi_star[s] = best;
    }
    sol.residual = (value - q.rowwise().minCoeff()).lpNorm<Eigen::Infinity>();
    return sol;
}

VectorXd evaluate_baseline_policy(const BaselineMdp& mdp, const std::vector<int>& policy) {
    const int S = mdp.num_states;
    if (static_cast<int>(policy.size()) != S)
        throw std::invalid_argument("evaluate_baseline_policy: policy must assign one action per state");
    MatrixXd system = MatrixXd::Identity(S, S);
    VectorXd cost(S);
    for (int s = 0; s < S; ++s) {
        const int a = policy[s];
        if (a < 0 || a >= mdp.num_actions)
            throw std::invalid_argument("evaluate_baseline_policy: action index out of range");
        cost[s] = mdp.costs(s, a);
        for (SparseRowMatrix::InnerIterator it(mdp.transitions[a], s); it; ++it)
            system(s, it.col()) -= mdp.discount * it.value();
    }
    return system.partialPivLu().solve(cost);
}

std::vector<int> absorbing_zero_cost_states(const BaselineMdp& mdp) {
    std::vector<int> out;
    for (int s = 0; s < mdp.num_states; ++s) {
        bool absorbing = true;
        for (int a = 0; a < mdp.num_actions && absorbing; ++a) {
            if (mdp.costs(s, a) != 0.0) absorbing = false;
            int nnz = 0;
            for (SparseRowMatrix::InnerIterator it(mdp.transitions[a], s); it; ++it) {
                if (it.col() != s || it.value() != 1.0) absorbing = false;
                ++nnz;
            }
            if (nnz != 1) absorbing = false;
        }
        if (absorbing) out.push_back(s);
    }
    return out;
}

} // namespace sensing
