#include "polarga/code_file.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace polarga {

uint64_t code_digest(const PolarCode& code) {
    // FNV-1a over "N:k:" followed by the a_vector characters.
    uint64_t h = 0xcbf29ce484222325ull;
    auto feed = [&h](char c) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    };
    for (char c : std::to_string(code.block_length)) feed(c);
    feed(':');
    for (char c : std::to_string(code.dimension)) feed(c);
    feed(':');
    for (uint8_t b : code.a) feed(b ? '1' : '0');
    return h;
}

std::string digest_hex(uint64_t digest) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
    return buf;
}

void save_code(const std::string& path, const CodeFile& file) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("save_code: cannot open '" + path + "' for writing");
    out << "format_version = " << file.format_version << "\n";
    out << "N = " << file.code.block_length << "\n";
    out << "k = " << file.code.dimension << "\n";
    out << "a_vector = ";
    for (uint8_t b : file.code.a) out << (b ? '1' : '0');
    out << "\n";
    out << "info_set =";
    for (int idx : file.code.info_set_1based()) out << ' ' << idx;
    out << "\n";
    out << "digest = " << digest_hex(code_digest(file.code)) << "\n";
    if (!file.meta.construction.empty()) out << "construction = " << file.meta.construction << "\n";
    if (!file.meta.design_param.empty()) out << "design_param = " << file.meta.design_param << "\n";
    if (!file.meta.decoder_tag.empty()) out << "decoder = " << file.meta.decoder_tag << "\n";
    if (file.meta.master_seed != 0) out << "master_seed = " << file.meta.master_seed << "\n";
    if (file.meta.generations != 0) out << "generations = " << file.meta.generations << "\n";
    if (!file.meta.rng.empty()) out << "rng = " << file.meta.rng << "\n";
    for (const auto& op : file.operating_points) {
        char line[256];
        std::snprintf(line, sizeof line, "operating_point = %g %s %llu %llu %llu", op.snr_db,
                      op.decoder_tag.c_str(), static_cast<unsigned long long>(op.stats.frames),
                      static_cast<unsigned long long>(op.stats.bit_errors),
                      static_cast<unsigned long long>(op.stats.block_errors));
        out << line << "\n";
    }
    if (!out) throw std::invalid_argument("save_code: write to '" + path + "' failed");
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::invalid_argument("load_code: " + path + ": " + what);
}

}  // namespace

CodeFile load_code(const std::string& path, bool zero_based_import) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("load_code: cannot open '" + path + "'");

    std::map<std::string, std::string> fields;
    std::vector<std::string> op_lines;
    std::string line;
    while (std::getline(in, line)) {
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) fail(path, "expected 'key = value', got '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key == "operating_point")
            op_lines.push_back(value);
        else if (!fields.emplace(key, value).second)
            fail(path, "duplicate key '" + key + "'");
    }

    auto require = [&](const std::string& key) {
        const auto it = fields.find(key);
        if (it == fields.end()) fail(path, "missing required key '" + key + "'");
        return it->second;
    };
    auto to_int = [&](const std::string& key, const std::string& value) {
        try {
            size_t used = 0;
            const long v = std::stol(value, &used);
            if (used != value.size()) throw std::invalid_argument("");
            return static_cast<int>(v);
        } catch (const std::exception&) {
            fail(path, "key '" + key + "' is not an integer: '" + value + "'");
        }
    };

    CodeFile file;
    if (fields.count("format_version")) {
        file.format_version = to_int("format_version", fields["format_version"]);
        if (file.format_version != 1) fail(path, "unsupported format_version");
    }
    const int block_length = to_int("N", require("N"));
    const int dimension = to_int("k", require("k"));

    const bool has_a = fields.count("a_vector") > 0;
    const bool has_set = fields.count("info_set") > 0;
    if (!has_a && !has_set) fail(path, "need a_vector or info_set");

    std::vector<int> info_set;
    if (has_set) {
        std::istringstream ss(fields["info_set"]);
        int idx;
        while (ss >> idx) info_set.push_back(idx);
        if (!ss.eof()) fail(path, "info_set contains a non-integer token");
        if (zero_based_import)
            for (int& i : info_set) ++i;
    }

    if (has_a) {
        const std::string& bits = fields["a_vector"];
        if (static_cast<int>(bits.size()) != block_length)
            fail(path, "a_vector length " + std::to_string(bits.size()) + " does not match N");
        BitVec a(bits.size());
        for (size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] != '0' && bits[i] != '1') fail(path, "a_vector must be a 0/1 string");
            a[i] = bits[i] == '1';
        }
        try {
            file.code = PolarCode::from_a_vector(std::move(a));
        } catch (const std::exception& e) {
            fail(path, e.what());
        }
        if (has_set) {
            if (file.code.info_set_1based() != info_set)
                fail(path, "info_set does not agree with a_vector");
        }
    } else {
        int n = 0;
        while ((1 << n) < block_length) ++n;
        if ((1 << n) != block_length) fail(path, "N is not a power of two");
        try {
            file.code = PolarCode::from_info_set(n, info_set);
        } catch (const std::exception& e) {
            fail(path, e.what());
        }
    }
    if (file.code.block_length != block_length) fail(path, "N does not match a_vector length");
    if (file.code.dimension != dimension)
        fail(path, "a_vector has " + std::to_string(file.code.dimension) + " ones but k = " +
                       std::to_string(dimension));

    if (fields.count("construction")) file.meta.construction = fields["construction"];
    if (fields.count("design_param")) file.meta.design_param = fields["design_param"];
    if (fields.count("decoder")) file.meta.decoder_tag = fields["decoder"];
    if (fields.count("master_seed"))
        file.meta.master_seed = std::stoull(fields["master_seed"]);
    if (fields.count("generations")) file.meta.generations = to_int("generations", fields["generations"]);
    if (fields.count("rng")) file.meta.rng = fields["rng"];

    for (const std::string& op_text : op_lines) {
        std::istringstream ss(op_text);
        OperatingPoint op;
        unsigned long long frames, bit_errors, block_errors;
        if (!(ss >> op.snr_db >> op.decoder_tag >> frames >> bit_errors >> block_errors))
            fail(path, "malformed operating_point '" + op_text + "'");
        op.stats.frames = frames;
        op.stats.bit_errors = bit_errors;
        op.stats.block_errors = block_errors;
        file.operating_points.push_back(op);
    }
    return file;
}

}  // namespace polarga
