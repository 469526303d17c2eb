#ifndef APRXLIK_SERIALIZE_HPP
#define APRXLIK_SERIALIZE_HPP

#include <string>

#include "aprxlik/ising.hpp"
#include "aprxlik/twolevel.hpp"

namespace aprx {

// JSON wire formats used by the harness: datasets carry their generative
// record; spin configurations are row-major arrays of +-1.
std::string to_json(const twolevel::TwoLevelDataset& dataset);
twolevel::TwoLevelDataset twolevel_dataset_from_json(const std::string& text);

std::string to_json(const ising::SpinConfig& config);
ising::SpinConfig spin_config_from_json(const std::string& text);

}  // namespace aprx

#endif
