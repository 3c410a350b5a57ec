#pragma once

#include <map>
#include <string>

#include "polarga/genalg.hpp"

namespace polarga {

// Flat `key = value` documents; '#' starts a comment, blank lines ignored.
std::map<std::string, std::string> parse_key_values(const std::string& path);

// Reads a GenAlgConfig from a config file. Recognized keys: n (or N), k,
// decoder, snr_genalg_db, frames_per_eval, max_generations, elite_count,
// master_seed, fitness_metric (ber|bler), init_epsilons (comma separated),
// include_hybrid_seeds (true|false). Unknown keys are rejected.
GenAlgConfig load_genalg_config(const std::string& path);

}  // namespace polarga
