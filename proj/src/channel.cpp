#include "risbf/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "risbf/log.hpp"
#include "risbf/rng.hpp"

namespace risbf {

double path_loss(double d, double a, double rho0_lin) {
    if (d <= 0.0) throw std::invalid_argument("path_loss: distance must be positive");
    if (a <= 0.0) throw std::invalid_argument("path_loss: exponent must be positive");
    return rho0_lin * std::pow(d, -a);
}

std::pair<int, int> ris_grid(int n) {
    int best = 1;
    for (int v = 1; v * v <= n; ++v)
        if (n % v == 0) best = v;
    return {best, n / best};
}

namespace {

// half-wavelength ULA steering, m-th entry e^{j pi m sin(az)}
CVec ula_steering(int m, double az) {
    CVec a(m);
    double s = std::sin(az);
    for (int i = 0; i < m; ++i) a(i) = std::polar(1.0, M_PI * i * s);
    return a;
}

// half-wavelength URA steering over an (nv x nh) grid, row-major flattening
CVec ura_steering(int nv, int nh, double az, double el) {
    CVec a(nv * nh);
    double u = std::sin(az) * std::cos(el);
    double v = std::sin(el);
    for (int q = 0; q < nv; ++q)
        for (int p = 0; p < nh; ++p)
            a(q * nh + p) = std::polar(1.0, M_PI * (p * u + q * v));
    return a;
}

double half_angle(Rng& rng) { return rng.uniform() * M_PI - M_PI / 2.0; }

void normalize_to_gain(CMat& h, double rho) {
    double fn = h.norm();
    if (fn == 0.0) throw std::runtime_error("gen_channels: degenerate zero channel");
    h *= std::sqrt(rho) / fn;
}

}  // namespace

ChannelSample gen_channels(const SystemConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    const int M = cfg.M, K = cfg.K, N = cfg.N, R = cfg.R;
    auto [nv, nh] = ris_grid(N);
    const double scale = std::sqrt(1.0 / R);

    Rng rng(derive_seed(seed, 0x43484E4C /* "CHNL" */));

    ChannelSample s;
    s.H_AU = CMat::Zero(K, M);
    s.H_AR = CMat::Zero(N, M);
    s.H_RU = CMat::Zero(K, N);

    for (int k = 0; k < K; ++k)
        for (int r = 0; r < R; ++r) {
            double re, im;
            rng.cnormal(re, im);
            CVec at = ula_steering(M, half_angle(rng));
            s.H_AU.row(k) += scale * cplx(re, im) * at.adjoint();
        }

    for (int r = 0; r < R; ++r) {
        double re, im;
        rng.cnormal(re, im);
        CVec ar = ura_steering(nv, nh, half_angle(rng), half_angle(rng));
        CVec at = ula_steering(M, half_angle(rng));
        s.H_AR += scale * cplx(re, im) * ar * at.adjoint();
    }

    for (int k = 0; k < K; ++k)
        for (int r = 0; r < R; ++r) {
            double re, im;
            rng.cnormal(re, im);
            CVec at = ura_steering(nv, nh, half_angle(rng), half_angle(rng));
            s.H_RU.row(k) += scale * cplx(re, im) * at.adjoint();
        }

    normalize_to_gain(s.H_AU, path_loss(cfg.d_AU, cfg.a_AU, cfg.rho0_lin));
    normalize_to_gain(s.H_AR, path_loss(cfg.d_AR, cfg.a_AR, cfg.rho0_lin));
    normalize_to_gain(s.H_RU, path_loss(cfg.d_RU, cfg.a_RU, cfg.rho0_lin));

    s.W_opt = CMat::Zero(M, K);
    s.theta_opt = Eigen::VectorXd::Zero(N);
    return s;
}

CMat cascaded_channel(const CRowVec& h_RU_k, const CMat& H_AR) {
    if (h_RU_k.cols() != H_AR.rows())
        throw std::invalid_argument("cascaded_channel: dimension mismatch");
    CMat out = H_AR;
    for (Eigen::Index n = 0; n < H_AR.rows(); ++n) out.row(n) *= h_RU_k(n);
    return out;
}

CMat effective_channel_of(const ChannelSample& s, const Eigen::VectorXd& theta) {
    const Eigen::Index K = s.H_RU.rows(), N = s.H_RU.cols(), M = s.H_AR.cols();
    if (theta.size() != N) throw std::invalid_argument("effective_channel: theta length mismatch");
    if (s.H_AU.rows() != K || s.H_AU.cols() != M || s.H_AR.rows() != N)
        throw std::invalid_argument("effective_channel: sample dimension mismatch");
    CMat G = s.H_AU;
    for (Eigen::Index k = 0; k < K; ++k)
        for (Eigen::Index n = 0; n < N; ++n) {
            cplx t = s.H_RU(k, n) * std::polar(1.0, theta(n));
            for (Eigen::Index m = 0; m < M; ++m) G(k, m) += t * s.H_AR(n, m);
        }
    return G;
}

double rate_from_terms(double signal, double interference, double sigma2) {
    return std::log2(1.0 + signal / (interference + sigma2));
}

RateReport rates_from_effective(const CMat& W, const CMat& G, double sigma2,
                                const std::vector<double>& p) {
    const Eigen::Index K = G.rows();
    if (W.cols() != K || W.rows() != G.cols())
        throw std::invalid_argument("rates: W dimension mismatch");
    CMat Z = G * W;  // Z(k, l) = g_k w_l
    RateReport r;
    r.per_ue.resize(K);
    for (Eigen::Index k = 0; k < K; ++k) {
        double sig = std::norm(Z(k, k));
        double interf = 0.0;
        for (Eigen::Index l = 0; l < K; ++l)
            if (l != k) interf += std::norm(Z(k, l));
        r.per_ue[k] = rate_from_terms(sig, interf, sigma2);
        r.weighted_sum += p[k] * r.per_ue[k];
    }
    return r;
}

RateReport achievable_rates(const CMat& W, const Eigen::VectorXd& theta, const ChannelSample& s,
                            const SystemConfig& cfg) {
    if (!W.allFinite() || !theta.allFinite())
        throw std::invalid_argument("achievable_rates: NaN in inputs");
    double pw = W.squaredNorm();
    if (pw > cfg.P * (1.0 + 1e-9))
        log::warn("achievable_rates: ||W||_F^2 = %.6g exceeds P = %.6g", pw, cfg.P);
    CMat G = effective_channel_of(s, theta);
    return rates_from_effective(W, G, cfg.sigma2, cfg.priorities());
}

CVec simulate_rx(const CMat& W, const Eigen::VectorXd& theta, const CVec& symbols,
                 const CVec& noise, const ChannelSample& s) {
    const Eigen::Index K = s.H_RU.rows();
    if (symbols.size() != K || noise.size() != K || W.cols() != K)
        throw std::invalid_argument("simulate_rx: dimension mismatch");
    CMat G = effective_channel_of(s, theta);
    return G * (W * symbols) + noise;
}

Tensor cmat_to_tensor(const CMat& m) {
    Tensor t({static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()), 2});
    std::size_t i = 0;
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            t.data[i++] = m(r, c).real();
            t.data[i++] = m(r, c).imag();
        }
    return t;
}

CMat tensor_to_cmat(const Tensor& t) {
    if (t.rank() != 3 || t.shape[2] != 2)
        throw std::invalid_argument("tensor_to_cmat: expected [rows, cols, 2]");
    CMat m(t.shape[0], t.shape[1]);
    std::size_t i = 0;
    for (std::size_t r = 0; r < t.shape[0]; ++r)
        for (std::size_t c = 0; c < t.shape[1]; ++c) {
            m(r, c) = cplx(t.data[i], t.data[i + 1]);
            i += 2;
        }
    return m;
}

}  // namespace risbf
