#pragma once

#include <string>
#include <vector>

#include "risbf/channel.hpp"
#include "risbf/config.hpp"

namespace risbf {

// Dataset container: header, length-prefixed JSON (config, labeled flag,
// sample count), then per-sample f64 blocks in ChannelSample field order
// (H_AU, H_AR, H_RU, W_opt row-major interleaved re/im, then theta_opt).
struct Dataset {
    SystemConfig config;
    std::vector<ChannelSample> samples;
    bool labeled = false;
};

void dataset_write(const std::string& path, const Dataset& ds);
Dataset dataset_read(const std::string& path);

}  // namespace risbf
