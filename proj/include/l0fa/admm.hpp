#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "l0fa/objective.hpp"

namespace l0fa {

enum class Penalty { L0, L1 };

/// Tuning parameters of the six-block ADMM.
struct AdmmConfig {
    double c_weight = 110.0;
    double mu_weight = 110.0;
    double rho = 16.0;
    double gamma = 1e-4;
    double tol = 1e-3;
    int max_iter = 10000;
    int init_rank = 0;  // 0 = ceil(p/4)
    bool project_l = true;
    Penalty penalty = Penalty::L0;
    bool estimate_lipschitz = false;
    int trace_every = 0;  // 0 = auto: 1 for p <= 100, 10 above
    std::uint64_t seed = 0;

    void validate() const;
    int effective_init_rank(Eigen::Index p) const;
    int effective_trace_every(Eigen::Index p) const;
};

/// The six-matrix iterate (L, S, U, V; Lambda, Theta) plus its counter.
struct AdmmState {
    SymMatrix l, s, u, v, lambda, theta;
    int k = 0;
};

/// Per-iteration diagnostics. `k` is the index of the new iterate, so the
/// first record (k = 1) describes the transition from the initialization.
struct IterDiag {
    int k = 0;
    std::array<double, 6> beta{};  // ||L+ - L||_F, ..., ||Theta+ - Theta||_F
    double lagrangian = 0.0;
    double f_val = 0.0;
    long s_l0 = 0;
    double sym_defect = 0.0;  // max relative asymmetry over the six blocks

    double max_beta() const;
};

struct SolveReport {
    AdmmState final_state;
    bool converged = false;
    int iterations = 0;
    std::vector<IterDiag> diagnostics;
    double wall_time_sec = 0.0;
    std::optional<double> lipschitz_estimate;
};

/// Spectral initialization: L0 keeps the top-d eigenpairs of SigmaCheck,
/// S0 = SigmaCheck - L0, U0 = L0, V0 = S0, Lambda0 = Theta0 = 0.
AdmmState initialize(const Problem& prob, int d);

/// Closed-form L-update. With `project` set the result is additionally
/// projected onto the PSD cone (the optional acceleration step).
SymMatrix update_l(const Problem& prob, const AdmmState& state, double rho,
                   bool project = false);

/// One proximal gradient step on the S-subproblem, taken at S^k with the
/// fresh gradient at (L^{k+1}, S^k).
SymMatrix update_s(const Problem& prob, const SymMatrix& l_next, const AdmmState& state,
                   double rho, double gamma, Penalty penalty = Penalty::L0);

SymMatrix update_u(const SymMatrix& l_next, const SymMatrix& lambda, double rho);
SymMatrix update_v(const SymMatrix& s_next, const SymMatrix& theta, double rho);

struct DualPair {
    SymMatrix lambda;
    SymMatrix theta;
};

DualPair update_duals(const SymMatrix& l_next, const SymMatrix& u_next,
                      const SymMatrix& s_next, const SymMatrix& v_next,
                      const SymMatrix& lambda, const SymMatrix& theta, double rho);

/// Frobenius norms of the six block differences between successive iterates.
std::array<double, 6> residuals(const AdmmState& prev, const AdmmState& next);

/// Run the ADMM until max(beta_1..beta_6) < tol or the iteration budget is
/// exhausted. Deterministic for a fixed (prob, cfg).
SolveReport solve(const Problem& prob, const AdmmConfig& cfg);

/// Overload matching the stored six-matrix state.
double augmented_lagrangian(const Problem& prob, const AdmmState& state, double rho,
                            double zero_tol = 0.0);

/// Iterations k >= 1 where the sufficient-descent inequality
///   L_rho(A^k) - L_rho(A^{k+1}) >= (eps/2) * sum of squared primal diffs
///                                + (1/rho) * sum of squared dual diffs
/// fails by more than `slack`. Requires an unstrided diagnostic trace.
std::vector<int> descent_check(const SolveReport& report, double rho, double epsilon,
                               double slack = 1e-8);

}  // namespace l0fa
