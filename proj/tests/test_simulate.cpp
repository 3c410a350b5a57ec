#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <fstream>

#include "polarga/code_file.hpp"
#include "polarga/config_file.hpp"
#include "polarga/reliability.hpp"
#include "polarga/simulate.hpp"

using namespace polarga;

namespace {

PolarCode bec_code(int n, int k) { return info_set_from_profile(bhattacharyya_bec(n, 0.5), k); }

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/polarga_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("sweep: determinism, thread independence, waterfall") {
    const PolarCode code = bec_code(6, 32);
    const DecoderSpec spec = DecoderSpec::parse("SC");
    StopRule stop;
    stop.min_block_errors = 100;
    stop.max_frames = 60'000;
    const std::vector<double> snrs = {0.0, 1.0, 2.0, 3.0};

    const SweepResult a = monte_carlo_sweep(code, spec, snrs, stop, 7, 1);
    const SweepResult b = monte_carlo_sweep(code, spec, snrs, stop, 7, 4);
    REQUIRE(a.points.size() == 4);
    for (size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].stats.frames == b.points[i].stats.frames);
        CHECK(a.points[i].stats.bit_errors == b.points[i].stats.bit_errors);
        CHECK(a.points[i].stats.block_errors == b.points[i].stats.block_errors);
        CHECK(a.points[i].stats.block_errors >= 100);
    }
    for (size_t i = 1; i < a.points.size(); ++i)
        CHECK(a.points[i].stats.ber() <= a.points[i - 1].stats.ber());

    // effectively noiseless at very high SNR: zero errors, frame cap reached
    StopRule cap;
    cap.min_block_errors = 1;
    cap.max_frames = 3000;
    const SweepResult clean = monte_carlo_sweep(code, spec, {40.0}, cap, 7, 2);
    CHECK(clean.points[0].stats.bit_errors == 0);
    CHECK(clean.points[0].stats.frames == 3000);

    CHECK_THROWS_AS(monte_carlo_sweep(code, spec, {}, stop, 7, 1), std::invalid_argument);
    CHECK_THROWS_AS(monte_carlo_sweep(code, spec, {2.0, 1.0}, stop, 7, 1), std::invalid_argument);
}

TEST_CASE("CRC-aided rate bookkeeping") {
    const PolarCode code = bec_code(6, 40);  // 40 non-frozen: 24 user + 16 CRC
    const DecoderSpec spec = DecoderSpec::parse("SCL+CRC-16(4)");
    CHECK(effective_code_rate(code, spec) == doctest::Approx(24.0 / 64.0));
    FrameSimulator sim(code, spec, 2.0);
    CHECK(sim.user_bits() == 24);
    const ErrorStats stats = sim.run_frame(123);
    CHECK(stats.info_bits_per_frame == 24);

    const PolarCode tiny = bec_code(4, 10);
    CHECK_THROWS_AS(effective_code_rate(tiny, DecoderSpec::parse("SCL+CRC-16(4)")),
                    std::invalid_argument);
}

TEST_CASE("frozen chart") {
    const PolarCode code = bec_code(4, 7);
    const ReliabilityProfile profile = bhattacharyya_bec(4, 0.5);
    const auto chart = frozen_chart(code, profile, 4);
    REQUIRE(chart.size() == 4);
    int total = 0;
    for (const auto& row : chart) {
        REQUIRE(row.size() == 4);
        for (uint8_t v : row) total += v;
    }
    CHECK(total == code.block_length - code.dimension);
    // the least reliable channels come first and are frozen
    CHECK(chart[0] == std::vector<uint8_t>{1, 1, 1, 1});

    const PolarCode all_frozen = PolarCode::from_a_vector(BitVec(16, 0));
    for (const auto& row : frozen_chart(all_frozen, profile, 4))
        for (uint8_t v : row) CHECK(v == 1);

    CHECK_THROWS_AS(frozen_chart(code, profile, 3), std::invalid_argument);

    // the published chart shape: N=2048 over 16 x 128
    const PolarCode big = bec_code(11, 1024);
    const auto big_chart = frozen_chart(big, bhattacharyya_bec(11, 0.5), 128);
    CHECK(big_chart.size() == 16);
    CHECK(big_chart[0].size() == 128);
}

TEST_CASE("code file round trip and validation") {
    TempFile tmp("code.pc");
    CodeFile file;
    file.code = PolarCode::from_info_set(3, {4, 6, 7, 8});
    file.meta.construction = "bhattacharyya";
    file.meta.design_param = "epsilon=0.5";
    file.meta.rng = "splitmix64-boxmuller";
    file.meta.master_seed = 42;
    OperatingPoint op;
    op.snr_db = 2.0;
    op.decoder_tag = "SC";
    op.stats = {1000, 17, 5, 4};
    file.operating_points.push_back(op);
    save_code(tmp.path, file);

    const CodeFile loaded = load_code(tmp.path);
    CHECK(loaded.code.a == file.code.a);
    CHECK(loaded.code.dimension == 4);
    CHECK(loaded.meta.construction == "bhattacharyya");
    CHECK(loaded.meta.design_param == "epsilon=0.5");
    CHECK(loaded.meta.master_seed == 42);
    REQUIRE(loaded.operating_points.size() == 1);
    CHECK(loaded.operating_points[0].stats.bit_errors == 17);
    CHECK(code_digest(loaded.code) == code_digest(file.code));

    // the worked P(8,4) example: info_set {4,6,7,8} <-> a_vector 00010111
    std::ifstream in(tmp.path);
    std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(contents.find("a_vector = 00010111") != std::string::npos);
    CHECK(contents.find("info_set = 4 6 7 8") != std::string::npos);
}

TEST_CASE("code file rejects inconsistent contents") {
    TempFile tmp("bad.pc");
    {
        std::ofstream out(tmp.path);
        out << "N = 8\nk = 4\na_vector = 00010101\n";  // only 3 ones
    }
    CHECK_THROWS_WITH_AS(load_code(tmp.path), doctest::Contains("ones"), std::invalid_argument);
    {
        std::ofstream out(tmp.path);
        out << "N = 8\nk = 4\na_vector = 00010111\ninfo_set = 4 6 7\n";
    }
    CHECK_THROWS_AS(load_code(tmp.path), std::invalid_argument);
    {
        std::ofstream out(tmp.path);
        out << "N = 8\nk = 4\n";
    }
    CHECK_THROWS_AS(load_code(tmp.path), std::invalid_argument);
}

TEST_CASE("info_set-only imports honor the index convention flag") {
    TempFile tmp("import.pc");
    {
        std::ofstream out(tmp.path);
        out << "N = 8\nk = 4\ninfo_set = 3 5 6 7\n";  // 0-based export of {4,6,7,8}
    }
    const CodeFile imported = load_code(tmp.path, /*zero_based_import=*/true);
    CHECK(imported.code.info_set_1based() == std::vector<int>{4, 6, 7, 8});
    {
        std::ofstream out(tmp.path);
        out << "N = 8\nk = 4\ninfo_set = 4 6 7 8\n";
    }
    const CodeFile native = load_code(tmp.path);
    CHECK(native.code.info_set_1based() == std::vector<int>{4, 6, 7, 8});
}

TEST_CASE("genalg config parsing") {
    TempFile tmp("cfg.txt");
    {
        std::ofstream out(tmp.path);
        out << "# demo config\n"
            << "N = 64\n"
            << "k = 32\n"
            << "decoder = SCL(8)\n"
            << "snr_genalg_db = 2.0\n"
            << "frames_per_eval = 1000\n"
            << "max_generations = 3\n"
            << "elite_count = 5\n"
            << "master_seed = 77\n"
            << "fitness_metric = ber\n"
            << "init_epsilons = 0.3, 0.5\n"
            << "include_hybrid_seeds = true\n";
    }
    const GenAlgConfig cfg = load_genalg_config(tmp.path);
    CHECK(cfg.n == 6);
    CHECK(cfg.k == 32);
    CHECK(cfg.decoder.to_string() == "SCL(8)");
    CHECK(cfg.frames_per_eval == 1000);
    CHECK(cfg.init_epsilons == std::vector<double>{0.3, 0.5});
    CHECK(cfg.master_seed == 77);

    {
        std::ofstream out(tmp.path);
        out << "N = 64\nk = 32\ndecoder = SCL(8)\nnot_a_key = 3\n";
    }
    CHECK_THROWS_AS(load_genalg_config(tmp.path), std::invalid_argument);
    {
        std::ofstream out(tmp.path);
        out << "N = 63\nk = 32\ndecoder = SCL(8)\n";
    }
    CHECK_THROWS_AS(load_genalg_config(tmp.path), std::invalid_argument);
}

TEST_CASE("decoder spec parsing") {
    CHECK(DecoderSpec::parse("SC").to_string() == "SC");
    CHECK(DecoderSpec::parse("SCL(32)").to_string() == "SCL(32)");
    CHECK(DecoderSpec::parse("SCL+CRC-16(32)").to_string() == "SCL+CRC-16(32)");
    CHECK(DecoderSpec::parse("BP(200)").to_string() == "BP(200)");
    CHECK(DecoderSpec::parse("SCL+CRC-16(32)").crc_bits == 16);
    CHECK_THROWS_AS(DecoderSpec::parse("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(DecoderSpec::parse("SCL(0)"), std::invalid_argument);
    CHECK_THROWS_AS(DecoderSpec::parse("SCL+CRC-12(8)"), std::invalid_argument);
    CHECK_THROWS_AS(DecoderSpec::parse("BP()"), std::invalid_argument);
}
