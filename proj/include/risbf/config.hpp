#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace risbf {

inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watt_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

// Scenario scalars. Powers in watts, distances in meters, angles in radians.
struct SystemConfig {
    int M = 4;    // AP antennas
    int K = 3;    // single-antenna UEs
    int N = 16;   // RIS elements
    int Nc = 8;   // control-message features
    int D = 2;    // quantization levels (power of 2)
    double P = 0.1;                 // transmit power budget
    double sigma2 = 1.7989e-15;     // noise power, identical across UEs
    std::vector<double> p;          // UE priorities, defaults to all-ones
    int R = 100;                    // multipath count per link
    double d_AR = 50.0, d_RU = 2.0, d_AU = 50.039984;
    double a_AR = 2.8, a_RU = 2.8, a_AU = 3.5;
    // Reference path gain at d0 = 1 m, as a linear factor. The alternative
    // -30 dB reading (1e-3) is kept alongside for reference; the stated
    // per-link gains are reproduced by 30, not by 1e-3.
    double rho0_lin = 30.0;
    double rho0_db_alt = -30.0;

    int control_bits() const;  // B = Nc * log2(D)
    std::vector<double> priorities() const {
        return p.empty() ? std::vector<double>(static_cast<std::size_t>(K), 1.0) : p;
    }
    void validate() const;

    static SystemConfig desk();    // M=4, K=3, N=16, Nc=8
    static SystemConfig paper();   // M=4, K=3, N=100, Nc=100
};

SystemConfig config_from_json(const std::string& text);
std::string config_to_json(const SystemConfig& c);
SystemConfig load_config(const std::string& path);
void save_config(const SystemConfig& c, const std::string& path);

// Default noise power from -170 dBm/Hz over 180 kHz.
double default_noise_watt();

}  // namespace risbf
