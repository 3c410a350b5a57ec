#pragma once

#include "polarga/decoder.hpp"

namespace polarga {

// Successive cancellation list decoding with lazy-copied per-level arrays.
// The path metric is the exact logarithmic penalty ln(1 + e^{-(1-2u)*llr})
// added at every bit decision (frozen bits included), so the minimum-metric
// full path is the maximum-likelihood message among those explored. Equal
// metrics are resolved by path creation order, which makes replays and the
// L=1 <-> SC equivalence bit-exact.
//
// With crc_bits = r > 0 the decoder returns the smallest-metric path whose
// k info bits pass the CRC, falling back to the smallest metric overall.
class SclDecoder : public Decoder {
  public:
    SclDecoder(PolarCode code, SclConfig cfg);
    DecodeResult decode(const LlrFrame& frame) override;

  private:
    // Copy-on-write slot pool; one pool per level per payload kind.
    template <typename T>
    struct Pool {
        int width = 0;
        std::vector<T> storage;  // list_size slots of `width`
        std::vector<int> refs;
        std::vector<int> free_slots;

        void init(int slots, int w);
        void reset();
        int acquire();
        void add_ref(int slot) { ++refs[slot]; }
        void release(int slot);
        const T* read(int slot) const { return storage.data() + static_cast<size_t>(slot) * width; }
        // Detach for partial writes: preserves current contents.
        T* write(int& slot);
        // Detach for full overwrites: skips the copy.
        T* overwrite(int& slot);
    };

    struct Path {
        double metric = 0.0;
        std::vector<int> llr_slot;  // levels 1..n (index 0 unused)
        std::vector<int> c_slot;    // levels 0..n
        BitVec u_hat;
    };

    void start_frame(const LlrFrame& frame);
    void calc_llr(int level, int phase);
    void update_partial_sums(int level, int phase);
    void set_decision(int path_id, int phase, uint8_t bit, double metric);
    int clone_path(int path_id);
    void kill_path(int path_id);
    void extend_frozen(int phase);
    void extend_info(int phase);
    int pick_result_path() const;

    PolarCode code_;
    SclConfig cfg_;
    int levels_ = 0;               // n
    std::vector<double> channel_;  // level-0 LLRs in graph order
    std::vector<Pool<double>> llr_pools_;  // per level, 1..n
    std::vector<Pool<uint8_t>> c_pools_;   // per level, 0..n
    std::vector<Path> paths_;
    std::vector<int> order_;       // active path ids in creation order
    std::vector<int> free_paths_;

    struct Fork {
        double metric;
        int id;  // 2*position_in_order + bit
    };
    std::vector<Fork> forks_;
    std::vector<uint8_t> keep_;
    std::vector<double> fork_metric_scratch_;
    std::vector<int> order_scratch_;
};

}  // namespace polarga
