#include "l0fa/admm.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace l0fa {

void AdmmConfig::validate() const {
    if (!(c_weight > 0.0)) throw ConfigError("c_weight must be > 0");
    if (!(mu_weight > 0.0)) throw ConfigError("mu_weight must be > 0");
    if (!(rho > 0.0)) throw ConfigError("rho must be > 0");
    if (!(gamma > 0.0)) throw ConfigError("gamma must be > 0");
    if (!(tol > 0.0)) throw ConfigError("tol must be > 0");
    if (max_iter < 0) throw ConfigError("max_iter must be >= 0");
    if (init_rank < 0) throw ConfigError("init_rank must be >= 0 (0 = auto)");
    if (trace_every < 0) throw ConfigError("trace_every must be >= 0 (0 = auto)");
}

int AdmmConfig::effective_init_rank(Eigen::Index p) const {
    if (init_rank > 0) return init_rank;
    return static_cast<int>((p + 3) / 4);  // ceil(p/4)
}

int AdmmConfig::effective_trace_every(Eigen::Index p) const {
    if (trace_every > 0) return trace_every;
    return p <= 100 ? 1 : 10;
}

double IterDiag::max_beta() const { return *std::max_element(beta.begin(), beta.end()); }

AdmmState initialize(const Problem& prob, int d) {
    const Eigen::Index p = prob.dim();
    if (d < 1 || d >= p) {
        throw BadInitRank("init rank d must satisfy 1 <= d < p, got d = " +
                          std::to_string(d) + " with p = " + std::to_string(p));
    }
    const EigenPairs ep = sym_eig(prob.sigma_check());
    Eigen::VectorXd kept = ep.values;
    kept.tail(p - d).setZero();

    AdmmState st;
    st.l = SymMatrix::from_product(ep.vectors * kept.asDiagonal() * ep.vectors.transpose());
    st.s = prob.sigma_check() - st.l;
    st.u = st.l;
    st.v = st.s;
    st.lambda = SymMatrix::zero(p);
    st.theta = SymMatrix::zero(p);
    st.k = 0;
    return st;
}

SymMatrix update_l(const Problem& prob, const AdmmState& state, double rho, bool project) {
    const double mu = prob.mu();
    const Eigen::Index p = prob.dim();
    const Eigen::MatrixXd m =
        (Eigen::MatrixXd::Identity(p, p) - state.lambda.mat() +
         mu * prob.sigma_check_inv().mat() - rho * (state.s.mat() + state.u.mat())) /
        mu;
    const EigenPairs ep = sym_eig(SymMatrix::from_product(m));
    const Eigen::VectorXd shifted =
        (ep.values.array().square() + 4.0 * rho / mu).sqrt() - ep.values.array();
    SymMatrix l = SymMatrix::from_product(mu / (2.0 * rho) * ep.vectors *
                                          shifted.asDiagonal() * ep.vectors.transpose()) -
                  state.s;
    if (project) l = psd_project(l);
    return l;
}

SymMatrix update_s(const Problem& prob, const SymMatrix& l_next, const AdmmState& state,
                   double rho, double gamma, Penalty penalty) {
    const SymMatrix grad = grad_s(prob, l_next, state.s);
    const SymMatrix step_arg =
        state.s - (grad - state.theta + (state.s - state.v) * rho) * gamma;
    const ProxParams params(gamma, prob.c());
    return penalty == Penalty::L0 ? prox_l0_matrix(step_arg, params)
                                  : prox_l1_matrix(step_arg, params);
}

SymMatrix update_u(const SymMatrix& l_next, const SymMatrix& lambda, double rho) {
    return psd_project(l_next - lambda * (1.0 / rho));
}

SymMatrix update_v(const SymMatrix& s_next, const SymMatrix& theta, double rho) {
    return psd_project(s_next - theta * (1.0 / rho));
}

DualPair update_duals(const SymMatrix& l_next, const SymMatrix& u_next,
                      const SymMatrix& s_next, const SymMatrix& v_next,
                      const SymMatrix& lambda, const SymMatrix& theta, double rho) {
    return DualPair{lambda - (l_next - u_next) * rho, theta - (s_next - v_next) * rho};
}

std::array<double, 6> residuals(const AdmmState& prev, const AdmmState& next) {
    return {(next.l - prev.l).norm(),      (next.s - prev.s).norm(),
            (next.u - prev.u).norm(),      (next.v - prev.v).norm(),
            (next.lambda - prev.lambda).norm(), (next.theta - prev.theta).norm()};
}

double augmented_lagrangian(const Problem& prob, const AdmmState& state, double rho,
                            double zero_tol) {
    return augmented_lagrangian(prob, state.l, state.s, state.u, state.v, state.lambda,
                                state.theta, rho, zero_tol);
}

namespace {

double state_sym_defect(const AdmmState& st) {
    return std::max({st.l.sym_defect(), st.s.sym_defect(), st.u.sym_defect(),
                     st.v.sym_defect(), st.lambda.sym_defect(), st.theta.sym_defect()});
}

bool state_all_finite(const AdmmState& st) {
    return st.l.all_finite() && st.s.all_finite() && st.u.all_finite() &&
           st.v.all_finite() && st.lambda.all_finite() && st.theta.all_finite();
}

}  // namespace

SolveReport solve(const Problem& prob, const AdmmConfig& cfg) {
    cfg.validate();
    if (cfg.c_weight != prob.c() || cfg.mu_weight != prob.mu()) {
        throw ConfigError("AdmmConfig (C, mu) must match the Problem weights");
    }
    const auto t0 = std::chrono::steady_clock::now();
    const Eigen::Index p = prob.dim();
    const int stride = cfg.effective_trace_every(p);

    SolveReport report;
    AdmmState state = initialize(prob, cfg.effective_init_rank(p));

    double k_hat = 0.0;
    SymMatrix gs_prev;
    if (cfg.estimate_lipschitz) gs_prev = grad_s(prob, state.l, state.s);

    for (int k = 0; k < cfg.max_iter; ++k) {
        const AdmmState prev = state;
        try {
            const SymMatrix l_next = update_l(prob, state, cfg.rho, cfg.project_l);
            const SymMatrix s_next =
                update_s(prob, l_next, state, cfg.rho, cfg.gamma, cfg.penalty);
            const SymMatrix u_next = update_u(l_next, state.lambda, cfg.rho);
            const SymMatrix v_next = update_v(s_next, state.theta, cfg.rho);
            const DualPair duals = update_duals(l_next, u_next, s_next, v_next,
                                                state.lambda, state.theta, cfg.rho);
            state = AdmmState{l_next, s_next, u_next, v_next, duals.lambda, duals.theta,
                              k + 1};

            if (!state_all_finite(state)) {
                throw NonFiniteIterate(k + 1, "iterate " + std::to_string(k + 1) +
                                                  " has non-finite entries");
            }

            IterDiag diag;
            diag.k = k + 1;
            diag.beta = residuals(prev, state);
            // One factorization of L+S serves f, the Lagrangian and, when
            // requested, the Lipschitz probe. U and V are PSD by construction
            // here, so the indicator terms vanish.
            const detail::PdSum sum = detail::factor_pd_sum(state.l, state.s);
            const double trace_term = (state.l + state.s).inner(prob.sigma_check_inv());
            diag.f_val =
                state.l.trace() + prob.mu() * (trace_term - sum.log_det);
            diag.s_l0 = l0_norm(state.s, 0.0);
            const SymMatrix dl = state.l - state.u;
            const SymMatrix ds = state.s - state.v;
            diag.lagrangian = diag.f_val +
                              prob.c() * static_cast<double>(diag.s_l0) -
                              state.lambda.inner(dl) + 0.5 * cfg.rho * dl.norm() * dl.norm() -
                              state.theta.inner(ds) + 0.5 * cfg.rho * ds.norm() * ds.norm();
            diag.sym_defect = state_sym_defect(state);

            if (cfg.estimate_lipschitz) {
                const SymMatrix gs_cur =
                    (prob.sigma_check_inv() - sum.inverse) * prob.mu();
                const double dpoint = std::hypot(diag.beta[0], diag.beta[1]);
                if (dpoint > 1e-14) {
                    // grad_L and grad_S differ by the constant I, so the
                    // stacked gradient difference is sqrt(2) * ||d grad_S||.
                    const double dgrad = std::sqrt(2.0) * (gs_cur - gs_prev).norm();
                    k_hat = std::max(k_hat, dgrad / dpoint);
                }
                gs_prev = gs_cur;
            }

            const bool converged_now = diag.max_beta() < cfg.tol;
            if ((k + 1) % stride == 0 || converged_now || k + 1 == cfg.max_iter) {
                report.diagnostics.push_back(diag);
            }
            if (converged_now) {
                report.converged = true;
                break;
            }
        } catch (const SingularSum& e) {
            if (dynamic_cast<const SingularLagrangian*>(&e) != nullptr) throw;
            throw SingularLagrangian(k + 1, "L + S lost positive definiteness at iteration " +
                                                std::to_string(k + 1) + ": " + e.what());
        }
    }

    report.final_state = state;
    report.iterations = state.k;
    if (cfg.estimate_lipschitz) report.lipschitz_estimate = k_hat;
    report.wall_time_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::vector<int> descent_check(const SolveReport& report, double rho, double epsilon,
                               double slack) {
    if (!(rho > 0.0)) throw ConfigError("rho must be > 0");
    if (epsilon < 0.0) throw ConfigError("epsilon must be >= 0");
    std::vector<int> violations;
    const auto& d = report.diagnostics;
    for (std::size_t i = 1; i < d.size(); ++i) {
        if (d[i].k != d[i - 1].k + 1) {
            throw ConfigError("descent_check needs an unstrided diagnostic trace");
        }
        // Transition A^k -> A^{k+1} with k = d[i-1].k >= 1.
        const double decrease = d[i - 1].lagrangian - d[i].lagrangian;
        const auto& b = d[i].beta;
        const double primal =
            b[0] * b[0] + b[1] * b[1] + b[2] * b[2] + b[3] * b[3];
        const double dual = b[4] * b[4] + b[5] * b[5];
        const double required = 0.5 * epsilon * primal + dual / rho;
        if (decrease < required - slack) violations.push_back(d[i - 1].k);
    }
    return violations;
}

}  // namespace l0fa
