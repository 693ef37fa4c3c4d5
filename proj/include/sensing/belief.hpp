#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sensing/mdp.hpp"

namespace sensing {

/// Sensing cost model k'(belief, action): a uniform constant k, a
/// per-action vector, or an arbitrary nonnegative function of the belief.
class SensingCost {
public:
    enum class Kind { Uniform, PerAction, BeliefDependent };
    using Fn = std::function<double(const RowVectorXd&, int)>;

    static SensingCost uniform(double k);
    static SensingCost per_action(VectorXd costs);
    static SensingCost belief_dependent(Fn fn);

    Kind kind() const { return kind_; }
    bool is_uniform() const { return kind_ == Kind::Uniform; }
    /// The constant k; only valid for the uniform model.
    double uniform_k() const;
    double operator()(const RowVectorXd& belief, int action) const;

private:
    Kind kind_ = Kind::Uniform;
    double k_ = 0.0;
    VectorXd per_action_;
    Fn fn_;
};

/// A root state plus a string of blind actions, with the induced belief
/// row vector and the discounted path cost Z cached incrementally.
struct BeliefState {
    int root = 0;
    std::vector<int> blind_actions;
    RowVectorXd belief;
    double z_cost = 0.0;

    int depth() const { return static_cast<int>(blind_actions.size()); }

    static BeliefState at_root(const BaselineMdp& mdp, int root);
};

/// One blind step: belief' = belief T(a), z' = z + a^depth (belief C(a)).
/// Entries within -1e-15 of zero are clamped and the belief renormalized.
BeliefState extend(const BeliefState& b, int action, const BaselineMdp& mdp);

/// Z((s, a_1, ..., a_m)): expected cumulative discounted cost of the blind
/// path. Empty path is 0.
double z_of_path(const BaselineMdp& mdp, int root, std::span<const int> actions);

/// Same walk started from an arbitrary belief rather than a unit vector.
double z_from_belief(const BaselineMdp& mdp, const RowVectorXd& belief,
                     std::span<const int> actions);

/// min B Q* + k/(1-a): value of always sensing from this belief onwards.
/// Closed form requires the uniform cost model.
double v_as(const RowVectorXd& belief, const MatrixXd& q_star,
            const SensingCost& cost, double alpha);
/// Lowest-index argmin of B Q*.
int pi_as(const RowVectorXd& belief, const MatrixXd& q_star);

/// min B Q*: the always-sense value at zero sensing cost; a lower bound on
/// the optimal value of the sensing MDP at this belief.
double v_as0(const RowVectorXd& belief, const MatrixXd& q_star);

/// Myopic sensing: best single sensing step under terminal values v_bar,
///   min_a [ B C(a) + k'(B,a) + a B T(a) v_bar ].
double v_ms(const RowVectorXd& belief, const VectorXd& v_bar,
            const BaselineMdp& mdp, const SensingCost& cost);
int pi_ms(const RowVectorXd& belief, const VectorXd& v_bar,
          const BaselineMdp& mdp, const SensingCost& cost);

} // namespace sensing
