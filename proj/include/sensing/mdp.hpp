#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <optional>
#include <string>
#include <vector>

namespace sensing {

using Eigen::MatrixXd;
using Eigen::RowVectorXd;
using Eigen::VectorXd;
using SparseRowMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// Whether the environment was originally specified with costs or rewards.
/// Internally everything is a cost; reward-based inputs are negated at
/// ingestion and negated back for reporting.
enum class Convention { Cost, Reward };

/// Finite tabular MDP: per-action row-stochastic transition matrices,
/// an |S| x |A| cost table, and a discount factor in (0,1).
struct BaselineMdp {
    std::string name;
    int num_states = 0;
    int num_actions = 0;
    double discount = 0.0;
    std::vector<SparseRowMatrix> transitions; // one |S| x |S| matrix per action
    MatrixXd costs;                           // |S| x |A|
    Convention convention = Convention::Cost;
    std::optional<VectorXd> initial_distribution;

    static BaselineMdp from_dense(std::string name,
                                  const std::vector<MatrixXd>& transitions,
                                  MatrixXd costs, double discount,
                                  Convention convention = Convention::Cost);

    /// b' = b T(a)
    RowVectorXd belief_step(const RowVectorXd& belief, int action) const;
    /// T(a) v
    VectorXd transition_apply(int action, const VectorXd& v) const;
    /// b C(a)
    double expected_cost(const RowVectorXd& belief, int action) const {
        return belief.dot(costs.col(action));
    }
    MatrixXd dense_transition(int action) const { return MatrixXd(transitions[action]); }
};

struct ValidationResult {
    bool ok = true;
    std::string message; // first violated invariant, with location
};

/// Checks row-stochasticity (1e-12), nonnegativity, finite costs and
/// discount in (0,1). Violations are returned, not thrown.
ValidationResult validate(const BaselineMdp& mdp);

struct BaselineSolution {
    VectorXd v_star;          // |S|
    MatrixXd q_star;          // |S| x |A|
    std::vector<int> pi_star; // lowest-index argmin of each Q* row
    double residual = 0.0;    // achieved sup-norm Bellman residual
};

/// Value iteration with the stopping rule
///   ||V_{t+1} - V_t||_inf <= tol (1-a) / (2a),
/// which guarantees a sup-norm error of at most tol. Q* is one final
/// backup from the converged V*.
BaselineSolution solve_baseline(const BaselineMdp& mdp, double tol = 1e-10);

/// Exact policy evaluation: solves V = c_pi + a P_pi V by direct solve.
VectorXd evaluate_baseline_policy(const BaselineMdp& mdp, const std::vector<int>& policy);

/// States that are absorbing under every action with zero cost. Episodic
/// environments embed their terminal cells this way.
std::vector<int> absorbing_zero_cost_states(const BaselineMdp& mdp);

} // namespace sensing
