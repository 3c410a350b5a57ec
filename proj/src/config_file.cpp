#include "polarga/config_file.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace polarga {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::invalid_argument("config: " + path + ": " + what);
}

}  // namespace

std::map<std::string, std::string> parse_key_values(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::map<std::string, std::string> fields;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) fail(path, "expected 'key = value', got '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty()) fail(path, "empty key or value in '" + stripped + "'");
        if (!fields.emplace(key, value).second) fail(path, "duplicate key '" + key + "'");
    }
    return fields;
}

GenAlgConfig load_genalg_config(const std::string& path) {
    const auto fields = parse_key_values(path);
    GenAlgConfig cfg;
    bool have_n = false, have_k = false, have_decoder = false;
    for (const auto& [key, value] : fields) {
        try {
            if (key == "n") {
                cfg.n = std::stoi(value);
                have_n = true;
            } else if (key == "N") {
                const unsigned long block = std::stoul(value);
                if (block < 2 || !std::has_single_bit(block))
                    fail(path, "N must be a power of two >= 2");
                cfg.n = std::countr_zero(block);
                have_n = true;
            } else if (key == "k") {
                cfg.k = std::stoi(value);
                have_k = true;
            } else if (key == "decoder") {
                cfg.decoder = DecoderSpec::parse(value);
                have_decoder = true;
            } else if (key == "snr_genalg_db") {
                cfg.snr_genalg_db = std::stod(value);
            } else if (key == "frames_per_eval") {
                cfg.frames_per_eval = std::stoull(value);
            } else if (key == "max_generations") {
                cfg.max_generations = std::stoi(value);
            } else if (key == "elite_count") {
                cfg.elite_count = std::stoi(value);
            } else if (key == "master_seed") {
                cfg.master_seed = std::stoull(value);
            } else if (key == "fitness_metric") {
                if (value == "ber")
                    cfg.fitness_metric = FitnessMetric::Ber;
                else if (value == "bler")
                    cfg.fitness_metric = FitnessMetric::Bler;
                else
                    fail(path, "fitness_metric must be ber or bler");
            } else if (key == "init_epsilons") {
                cfg.init_epsilons.clear();
                std::istringstream ss(value);
                std::string tok;
                while (std::getline(ss, tok, ',')) cfg.init_epsilons.push_back(std::stod(trim(tok)));
                if (cfg.init_epsilons.empty()) fail(path, "init_epsilons is empty");
            } else if (key == "include_hybrid_seeds") {
                if (value == "true")
                    cfg.include_hybrid_seeds = true;
                else if (value == "false")
                    cfg.include_hybrid_seeds = false;
                else
                    fail(path, "include_hybrid_seeds must be true or false");
            } else {
                fail(path, "unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument& e) {
            if (std::string(e.what()).rfind("config:", 0) == 0) throw;
            fail(path, "bad value for '" + key + "': " + value);
        }
    }
    if (!have_n || !have_k || !have_decoder) fail(path, "n (or N), k and decoder are required");
    population_size(cfg.elite_count);  // validates T
    return cfg;
}

}  // namespace polarga
