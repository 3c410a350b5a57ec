#include "polarga/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "polarga/code_file.hpp"
#include "polarga/config_file.hpp"
#include "polarga/genalg.hpp"
#include "polarga/parallel.hpp"
#include "polarga/reliability.hpp"
#include "polarga/simulate.hpp"

namespace polarga {

namespace {

constexpr const char* kRngTag = "splitmix64-boxmuller";

std::string format_rate(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", value);
    return buf;
}

std::string format_snr(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", value);
    return buf;
}

std::vector<double> parse_snr_list(const std::string& text) {
    std::vector<double> out;
    std::istringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        out.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("bad SNR value '" + tok + "'");
    }
    if (out.empty()) throw std::invalid_argument("empty SNR list");
    return out;
}

void write_results_csv(const std::string& path, const SweepResult& sweep, uint64_t seed) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << "# polarsim simulate decoder=" << sweep.decoder_tag
        << " code_digest=" << digest_hex(sweep.code_digest) << " seed=" << seed
        << " rng=" << kRngTag << "\n";
    out << "snr_db,frames,bit_errors,block_errors,ber,bler\n";
    for (const auto& point : sweep.points) {
        out << format_snr(point.snr_db) << ',' << point.stats.frames << ','
            << point.stats.bit_errors << ',' << point.stats.block_errors << ','
            << format_rate(point.stats.ber()) << ',' << format_rate(point.stats.bler()) << "\n";
    }
}

void write_history_csv(const std::string& path, const GenAlgResult& result) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << "generation,best_ber,median_ber,best_digest\n";
    for (const auto& rec : result.history)
        out << rec.generation << ',' << format_rate(rec.best_ber) << ','
            << format_rate(rec.median_ber) << ',' << digest_hex(rec.best_digest) << "\n";
}

void write_chart_csv(const std::string& path, const std::vector<std::vector<uint8_t>>& chart) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    for (const auto& row : chart) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << int(row[c]);
        }
        out << "\n";
    }
}

struct GlobalOpts {
    uint64_t seed = 0;
    bool seed_given = false;
    int threads = 0;
    std::string config_path;
};

int run(int argc, const char* const* argv) {
    CLI::App app{"polar code construction and evaluation workbench"};
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_option("--seed", global.seed, "master seed override")
        ->each([&global](const std::string&) { global.seed_given = true; });
    app.add_option("--threads", global.threads, "worker threads (0 = auto)");
    app.add_option("--config", global.config_path, "genalg config file (construct)");

    // baseline
    auto* baseline = app.add_subcommand("baseline", "write a non-genetic construction");
    std::string base_type = "bhattacharyya";
    int base_n = 0, base_block = 0, base_k = 0, base_min_weight = 0;
    double base_eps = 0.5;
    std::string base_out;
    baseline->add_option("--type", base_type, "bhattacharyya | rm | hybrid")
        ->check(CLI::IsMember({"bhattacharyya", "rm", "hybrid"}));
    baseline->add_option("-n,--stages", base_n, "polarization stages (N = 2^n)");
    baseline->add_option("-N,--block-length", base_block, "block length (power of two)");
    baseline->add_option("-k,--dimension", base_k, "information bits")->required();
    baseline->add_option("--epsilon", base_eps, "BEC design erasure probability");
    baseline->add_option("--min-weight", base_min_weight,
                         "hybrid weight threshold (0 = default rule)");
    baseline->add_option("-o,--output", base_out, "output code file")->required();

    // construct
    auto* construct = app.add_subcommand("construct", "run the genetic construction");
    std::string construct_out, construct_history;
    construct->add_option("-o,--output", construct_out, "output code file")->required();
    construct->add_option("--history", construct_history, "per-generation history CSV");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo BER/BLER sweep");
    std::string sim_code, sim_decoder, sim_snr, sim_out;
    StopRule sim_stop;
    bool sim_zero_based = false;
    simulate->add_option("--code", sim_code, "code file")->required();
    simulate->add_option("--decoder", sim_decoder, "SC | SCL(L) | SCL+CRC-r(L) | BP(N)")->required();
    simulate->add_option("--snr", sim_snr, "comma-separated E_b/N_0 points (dB)")->required();
    simulate->add_option("--min-block-errors", sim_stop.min_block_errors,
                         "stop a point after this many block errors");
    simulate->add_option("--max-frames", sim_stop.max_frames, "frame cap per point");
    simulate->add_flag("--zero-based", sim_zero_based, "info_set in the file is 0-based");
    simulate->add_option("-o,--output", sim_out, "output CSV")->required();

    // chart
    auto* chart = app.add_subcommand("chart", "frozen-channel chart CSV");
    std::string chart_code, chart_out;
    double chart_eps = 0.5;
    int chart_columns = 0;
    bool chart_zero_based = false;
    chart->add_option("--code", chart_code, "code file")->required();
    chart->add_option("--epsilon", chart_eps, "BEC epsilon for the reliability ordering");
    chart->add_option("--columns", chart_columns, "chart columns (default 128, or N if smaller)");
    chart->add_flag("--zero-based", chart_zero_based, "info_set in the file is 0-based");
    chart->add_option("-o,--output", chart_out, "output CSV")->required();

    // dmin
    auto* dmin = app.add_subcommand("dmin", "minimum-distance report");
    std::string dmin_code;
    bool dmin_zero_based = false;
    dmin->add_option("--code", dmin_code, "code file")->required();
    dmin->add_flag("--zero-based", dmin_zero_based, "info_set in the file is 0-based");

    // info
    auto* info = app.add_subcommand("info", "print code file metadata");
    std::string info_code;
    bool info_zero_based = false;
    info->add_option("--code", info_code, "code file")->required();
    info->add_flag("--zero-based", info_zero_based, "info_set in the file is 0-based");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    const int threads = resolve_threads(global.threads);

    if (baseline->parsed()) {
        if (base_block > 0) {
            if (base_block < 2 || (base_block & (base_block - 1)) != 0)
                throw std::invalid_argument("block length must be a power of two");
            base_n = 0;
            while ((1 << base_n) < base_block) ++base_n;
        }
        if (base_n < 1) throw std::invalid_argument("need -n or -N");
        CodeFile file;
        file.meta.rng = kRngTag;
        if (base_type == "rm") {
            file.code = rm_info_set(base_n, base_k);
            file.meta.construction = "rm";
        } else {
            const ReliabilityProfile profile = bhattacharyya_bec(base_n, base_eps);
            if (base_type == "bhattacharyya") {
                file.code = info_set_from_profile(profile, base_k);
                file.meta.construction = "bhattacharyya";
            } else {
                const int mw = base_min_weight > 0
                                   ? base_min_weight
                                   : default_hybrid_min_weight(base_n, base_k, profile);
                file.code = rm_polar_hybrid(base_n, base_k, profile, mw);
                file.meta.construction = "rm-polar";
                file.meta.design_param = "epsilon=" + format_snr(base_eps) +
                                         " min_weight=" + std::to_string(mw);
            }
            if (file.meta.design_param.empty())
                file.meta.design_param = "epsilon=" + format_snr(base_eps);
        }
        save_code(base_out, file);
        std::cout << "wrote " << base_out << " (digest " << digest_hex(code_digest(file.code))
                  << ")\n";
        return 0;
    }

    if (construct->parsed()) {
        if (global.config_path.empty())
            throw std::invalid_argument("construct requires --config <file>");
        GenAlgConfig cfg = load_genalg_config(global.config_path);
        if (global.seed_given) cfg.master_seed = global.seed;
        const GenAlgResult result = genalg_run(cfg, threads, &std::cerr);

        CodeFile file;
        file.code = PolarCode::from_a_vector(result.best.a);
        file.meta.construction = "genalg";
        file.meta.design_param = "snr_genalg_db=" + format_snr(cfg.snr_genalg_db);
        file.meta.decoder_tag = cfg.decoder.to_string();
        file.meta.master_seed = cfg.master_seed;
        file.meta.generations = cfg.max_generations;
        file.meta.rng = kRngTag;
        save_code(construct_out, file);
        if (!construct_history.empty()) write_history_csv(construct_history, result);
        std::cout << "wrote " << construct_out << " (digest "
                  << digest_hex(code_digest(file.code))
                  << ", best BER " << format_rate(result.best.fitness->ber()) << ")\n";
        return 0;
    }

    if (simulate->parsed()) {
        const CodeFile file = load_code(sim_code, sim_zero_based);
        const DecoderSpec spec = DecoderSpec::parse(sim_decoder);
        const uint64_t seed = global.seed_given ? global.seed : 1;
        const SweepResult sweep =
            monte_carlo_sweep(file.code, spec, parse_snr_list(sim_snr), sim_stop, seed, threads);
        write_results_csv(sim_out, sweep, seed);
        std::cout << "wrote " << sim_out << "\n";
        return 0;
    }

    if (chart->parsed()) {
        const CodeFile file = load_code(chart_code, chart_zero_based);
        const int len = file.code.block_length;
        const int columns = chart_columns > 0 ? chart_columns : (len >= 128 ? 128 : len);
        const ReliabilityProfile profile = bhattacharyya_bec(file.code.n, chart_eps);
        write_chart_csv(chart_out, frozen_chart(file.code, profile, columns));
        std::cout << "wrote " << chart_out << "\n";
        return 0;
    }

    if (dmin->parsed()) {
        const CodeFile file = load_code(dmin_code, dmin_zero_based);
        std::cout << "dmin_upper = " << dmin_upper(file.code) << "\n";
        if (file.code.dimension <= 20)
            std::cout << "dmin_bruteforce = " << dmin_bruteforce(file.code) << "\n";
        else
            std::cout << "dmin_bruteforce skipped (k > 20)\n";
        return 0;
    }

    if (info->parsed()) {
        const CodeFile file = load_code(info_code, info_zero_based);
        const PolarCode& code = file.code;
        std::cout << "P(" << code.block_length << "," << code.dimension << ")  rate "
                  << format_snr(double(code.dimension) / code.block_length) << "\n";
        std::cout << "digest = " << digest_hex(code_digest(code)) << "\n";
        std::cout << "info_set =";
        for (int idx : code.info_set_1based()) std::cout << ' ' << idx;
        std::cout << "\n";
        if (!file.meta.construction.empty())
            std::cout << "construction = " << file.meta.construction << "\n";
        if (!file.meta.design_param.empty())
            std::cout << "design_param = " << file.meta.design_param << "\n";
        if (!file.meta.decoder_tag.empty())
            std::cout << "decoder = " << file.meta.decoder_tag << "\n";
        if (file.meta.master_seed != 0)
            std::cout << "master_seed = " << file.meta.master_seed << "\n";
        if (file.meta.generations != 0)
            std::cout << "generations = " << file.meta.generations << "\n";
        for (const auto& op : file.operating_points)
            std::cout << "operating_point: " << format_snr(op.snr_db) << " dB " << op.decoder_tag
                      << "  frames=" << op.stats.frames << " ber=" << format_rate(op.stats.ber())
                      << " bler=" << format_rate(op.stats.bler()) << "\n";
        return 0;
    }

    return 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace polarga
