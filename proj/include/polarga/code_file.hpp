#pragma once

#include <string>

#include "polarga/error_stats.hpp"
#include "polarga/polar_code.hpp"

namespace polarga {

// Text-based, versioned on-disk description of a polar code: the A-vector,
// the 1-based information set, and where the design came from. Human-diffable
// on purpose.
struct CodeMetadata {
    std::string construction;  // bhattacharyya | rm | rm-polar | genalg | imported
    std::string design_param;  // e.g. "epsilon=0.5" or "snr_genalg_db=2"
    std::string decoder_tag;   // tailoring decoder, empty for channel-based designs
    uint64_t master_seed = 0;
    int generations = 0;
    std::string rng;           // generator recorded for reproducibility
};

struct OperatingPoint {
    double snr_db = 0.0;
    std::string decoder_tag;
    ErrorStats stats;
};

struct CodeFile {
    int format_version = 1;
    PolarCode code;
    CodeMetadata meta;
    std::vector<OperatingPoint> operating_points;
};

// Stable content hash of (N, k, a_vector); used to identify designs in CSV
// output and sweep results.
uint64_t code_digest(const PolarCode& code);
std::string digest_hex(uint64_t digest);

void save_code(const std::string& path, const CodeFile& file);

// Throws std::invalid_argument with a diagnostic on malformed files or
// constraint violations (sum of a_vector != k, info_set mismatch, bad N).
// Files holding only an info_set (no a_vector) are accepted as imports;
// zero_based_import selects the index convention for them.
CodeFile load_code(const std::string& path, bool zero_based_import = false);

}  // namespace polarga
