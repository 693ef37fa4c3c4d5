#pragma once

#include <string>
#include <vector>

#include "sensing/belief.hpp"
#include "sensing/mdp.hpp"

namespace sensing {

/// Per-root plan: a (possibly empty) string of blind actions ending in
/// exactly one sensing action.
struct Plan {
    std::vector<int> blind_prefix;
    int sense_action = 0;

    bool operator==(const Plan&) const = default;
};

/// Finite opportunistic-sensing policy: one plan per root state. This is
/// the policy class AS, ATM, SPI and the truncated solver all produce.
struct SensingPolicy {
    std::vector<Plan> plans; // indexed by root state
    std::string metadata;    // provenance: AS | SPI | ATM | truncated-N

    bool operator==(const SensingPolicy& other) const { return plans == other.plans; }
};

struct RootValueTable {
    VectorXd values;       // V^pi at root states
    double residual = 0.0; // linear-solve residual, sup norm
};

/// The Always Sense policy: empty prefix, sense with the baseline-optimal
/// action at every root.
SensingPolicy as_policy(const BaselineSolution& solution);

struct EvaluateOptions {
    // Dense direct solve up to this size; Jacobi iteration beyond it.
    int dense_solve_limit = 4096;
    double jacobi_tol = 1e-12;
};

/// Exact evaluation of a sensing policy at the root states. Each root
/// contributes one row of the linear system V = c + diag(a^{m_j+1}) P V,
/// where c_j folds the blind-path cost, the sensing step and its cost, and
/// P row j is the landing distribution over roots after the sensing step.
RootValueTable evaluate_on_roots(const BaselineMdp& mdp, const SensingCost& cost,
                                 const SensingPolicy& policy,
                                 const EvaluateOptions& options = {});

/// Pieces of the evaluation linear system, exposed for solvers that patch
/// single rows (see the policy-update routine).
struct RootLinearSystem {
    VectorXd c;        // per-root immediate cost
    MatrixXd p;        // per-root landing distribution over roots
    VectorXd d;        // per-root discount a^{m_j+1}
};

RootLinearSystem build_root_system(const BaselineMdp& mdp, const SensingCost& cost,
                                   const SensingPolicy& policy);
void build_root_row(const BaselineMdp& mdp, const SensingCost& cost, const Plan& plan,
                    int root, double& c, RowVectorXd& p_row, double& d);

/// JSON (de)serialization; round trips are lossless.
std::string policy_to_json(const SensingPolicy& policy);
SensingPolicy policy_from_json(const std::string& text);
void save_policy(const SensingPolicy& policy, const std::string& path);
SensingPolicy load_policy(const std::string& path);

} // namespace sensing
