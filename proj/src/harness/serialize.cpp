#include "aprxlik/serialize.hpp"

#include <json.hpp>

namespace aprx {

std::string to_json(const twolevel::TwoLevelDataset& dataset) {
    nlohmann::json j;
    j["n"] = dataset.n;
    j["m"] = dataset.m;
    j["y"] = dataset.y;
    j["theta0"] = dataset.theta0;
    j["seed"] = dataset.seed;
    return j.dump();
}

twolevel::TwoLevelDataset twolevel_dataset_from_json(const std::string& text) {
    twolevel::TwoLevelDataset d;
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        d.n = j.at("n").get<int>();
        d.m = j.at("m").get<int>();
        d.y = j.at("y").get<std::vector<int>>();
        d.theta0 = j.at("theta0").get<double>();
        d.seed = j.at("seed").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::invalid_argument, std::string("dataset JSON: ") + e.what());
    }
    if (static_cast<int>(d.y.size()) != d.n) fail(Errc::invalid_argument, "dataset JSON: length(y) != n");
    for (int v : d.y)
        if (v < 0 || v > d.m) fail(Errc::invalid_argument, "dataset JSON: y out of [0, m]");
    return d;
}

std::string to_json(const ising::SpinConfig& config) {
    return nlohmann::json(config).dump();
}

ising::SpinConfig spin_config_from_json(const std::string& text) {
    ising::SpinConfig c;
    try {
        c = nlohmann::json::parse(text).get<ising::SpinConfig>();
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::invalid_argument, std::string("spin config JSON: ") + e.what());
    }
    for (int s : c)
        if (s != 1 && s != -1) fail(Errc::invalid_argument, "spin config JSON: spins must be +1 or -1");
    return c;
}

}  // namespace aprx
