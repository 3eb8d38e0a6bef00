#include "risbf/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace risbf {

using nlohmann::ordered_json;

double default_noise_watt() {
    double dbm = -170.0 + 10.0 * std::log10(180000.0);
    return dbm_to_watt(dbm);
}

int SystemConfig::control_bits() const {
    int bits_per_feature = 0;
    for (int d = D; d > 1; d >>= 1) bits_per_feature++;
    return Nc * bits_per_feature;
}

void SystemConfig::validate() const {
    if (M < 1 || K < 1 || N < 1 || Nc < 1) throw std::invalid_argument("config: M, K, N, Nc must be >= 1");
    if (D < 2 || (D & (D - 1)) != 0) throw std::invalid_argument("config: D must be a power of 2, >= 2");
    if (P <= 0.0) throw std::invalid_argument("config: P must be positive");
    if (sigma2 <= 0.0) throw std::invalid_argument("config: sigma2 must be positive");
    if (d_AR <= 0.0 || d_RU <= 0.0 || d_AU <= 0.0) throw std::invalid_argument("config: distances must be positive");
    if (R < 1) throw std::invalid_argument("config: R must be >= 1");
    if (!p.empty()) {
        if (static_cast<int>(p.size()) != K) throw std::invalid_argument("config: priorities size must equal K");
        for (double v : p)
            if (v < 0.0) throw std::invalid_argument("config: priorities must be non-negative");
    }
}

SystemConfig SystemConfig::desk() {
    SystemConfig c;
    c.M = 4;
    c.K = 3;
    c.N = 16;
    c.Nc = 8;
    c.P = dbm_to_watt(20.0);
    c.sigma2 = default_noise_watt();
    c.d_AU = std::sqrt(c.d_AR * c.d_AR + c.d_RU * c.d_RU);
    return c;
}

SystemConfig SystemConfig::paper() {
    SystemConfig c = desk();
    c.N = 100;
    c.Nc = 100;
    return c;
}

std::string config_to_json(const SystemConfig& c) {
    ordered_json j;
    j["M"] = c.M;
    j["K"] = c.K;
    j["N"] = c.N;
    j["N_c"] = c.Nc;
    j["D"] = c.D;
    j["P"] = c.P;
    j["sigma2"] = c.sigma2;
    j["p"] = c.priorities();
    j["R"] = c.R;
    j["d_AR"] = c.d_AR;
    j["d_RU"] = c.d_RU;
    j["d_AU"] = c.d_AU;
    j["a_AR"] = c.a_AR;
    j["a_RU"] = c.a_RU;
    j["a_AU"] = c.a_AU;
    j["rho0_lin"] = c.rho0_lin;
    j["rho0_db_alt"] = c.rho0_db_alt;
    return j.dump();
}

SystemConfig config_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    SystemConfig c;
    c.M = j.at("M").get<int>();
    c.K = j.at("K").get<int>();
    c.N = j.at("N").get<int>();
    c.Nc = j.at("N_c").get<int>();
    c.D = j.value("D", 2);
    if (j.contains("P_dBm"))
        c.P = dbm_to_watt(j.at("P_dBm").get<double>());
    else
        c.P = j.at("P").get<double>();
    c.sigma2 = j.value("sigma2", default_noise_watt());
    if (j.contains("p")) c.p = j.at("p").get<std::vector<double>>();
    c.R = j.value("R", 100);
    c.d_AR = j.value("d_AR", 50.0);
    c.d_RU = j.value("d_RU", 2.0);
    c.d_AU = j.value("d_AU", std::sqrt(c.d_AR * c.d_AR + c.d_RU * c.d_RU));
    c.a_AR = j.value("a_AR", 2.8);
    c.a_RU = j.value("a_RU", 2.8);
    c.a_AU = j.value("a_AU", 3.5);
    if (j.contains("rho0_lin"))
        c.rho0_lin = j.at("rho0_lin").get<double>();
    else if (j.contains("rho0_dB"))
        c.rho0_lin = std::pow(10.0, j.at("rho0_dB").get<double>() / 10.0);
    c.rho0_db_alt = j.value("rho0_db_alt", -30.0);
    c.validate();
    return c;
}

SystemConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return config_from_json(ss.str());
}

void save_config(const SystemConfig& c, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write config: " + path);
    f << config_to_json(c) << "\n";
}

}  // namespace risbf
