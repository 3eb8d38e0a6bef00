#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "risbf/config.hpp"
#include "risbf/tensor.hpp"

namespace risbf {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using CRowVec = Eigen::RowVectorXcd;
using cplx = std::complex<double>;

// One channel realization plus its (W_opt, theta_opt) labels. Labels are
// zero until a solver fills them.
struct ChannelSample {
    CMat H_AU;  // K x M direct link
    CMat H_AR;  // N x M AP -> RIS
    CMat H_RU;  // K x N RIS -> UEs
    CMat W_opt;                  // M x K label
    Eigen::VectorXd theta_opt;   // N label, entries in [-pi, pi)
    bool labeled = false;
};

struct RateReport {
    std::vector<double> per_ue;  // bits/s/Hz
    double weighted_sum = 0.0;
};

/// rho(d) = rho0_lin * d^-a with d0 = 1 m.
double path_loss(double d, double a, double rho0_lin);

// Geometric narrowband channels: sum of R planar-wave paths with CN(0,1)
// gains, ULA at the AP/UE side, URA at the RIS, then Frobenius
// normalization to the per-link path gain. Pure in (config, seed).
ChannelSample gen_channels(const SystemConfig& cfg, std::uint64_t seed);

// RIS URA dimensions: largest divisor of N that is <= sqrt(N), times N over it.
std::pair<int, int> ris_grid(int n);

/// H_k = diag(h_RU_k) * H_AR
CMat cascaded_channel(const CRowVec& h_RU_k, const CMat& H_AR);

/// G = H_AU + H_RU * diag(e^{j theta}) * H_AR. Shared by the rate path and
/// the in-graph updater so both see bitwise-identical channels.
CMat effective_channel_of(const ChannelSample& s, const Eigen::VectorXd& theta);

// Rates from an explicit effective channel (rows g_k).
RateReport rates_from_effective(const CMat& W, const CMat& G, double sigma2,
                                const std::vector<double>& p);

/// Eq.-style per-UE rates: R_k = log2(1 + |g_k w_k|^2 / (sum_{l != k} |g_k w_l|^2 + sigma2)).
RateReport achievable_rates(const CMat& W, const Eigen::VectorXd& theta, const ChannelSample& s,
                            const SystemConfig& cfg);

double rate_from_terms(double signal, double interference, double sigma2);

/// y_k = sum_l (h_AU_k + phi H_k) w_l s_l + n_k
CVec simulate_rx(const CMat& W, const Eigen::VectorXd& theta, const CVec& symbols,
                 const CVec& noise, const ChannelSample& s);

// interleaved (re, im) row-major bridges to the autodiff tensor layout
Tensor cmat_to_tensor(const CMat& m);
CMat tensor_to_cmat(const Tensor& t);

}  // namespace risbf
