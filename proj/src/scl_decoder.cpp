#include "polarga/scl_decoder.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "polarga/crc.hpp"
#include "polarga/llr_math.hpp"

namespace polarga {

template <typename T>
void SclDecoder::Pool<T>::init(int slots, int w) {
    width = w;
    storage.assign(static_cast<size_t>(slots) * w, T{});
    refs.assign(static_cast<size_t>(slots), 0);
    free_slots.clear();
    free_slots.reserve(static_cast<size_t>(slots));
    for (int s = slots - 1; s >= 0; --s) free_slots.push_back(s);
}

template <typename T>
void SclDecoder::Pool<T>::reset() {
    std::fill(refs.begin(), refs.end(), 0);
    free_slots.clear();
    for (int s = static_cast<int>(refs.size()) - 1; s >= 0; --s) free_slots.push_back(s);
}

template <typename T>
int SclDecoder::Pool<T>::acquire() {
    assert(!free_slots.empty());
    const int s = free_slots.back();
    free_slots.pop_back();
    refs[s] = 1;
    return s;
}

template <typename T>
void SclDecoder::Pool<T>::release(int slot) {
    if (--refs[slot] == 0) free_slots.push_back(slot);
}

template <typename T>
T* SclDecoder::Pool<T>::write(int& slot) {
    if (refs[slot] > 1) {
        const int fresh = acquire();
        --refs[slot];
        std::copy_n(read(slot), width, storage.data() + static_cast<size_t>(fresh) * width);
        slot = fresh;
    }
    return storage.data() + static_cast<size_t>(slot) * width;
}

template <typename T>
T* SclDecoder::Pool<T>::overwrite(int& slot) {
    if (refs[slot] > 1) {
        const int fresh = acquire();
        --refs[slot];
        slot = fresh;
    }
    return storage.data() + static_cast<size_t>(slot) * width;
}

SclDecoder::SclDecoder(PolarCode code, SclConfig cfg)
    : code_(std::move(code)), cfg_(std::move(cfg)) {
    if (cfg_.list_size < 1) throw std::invalid_argument("SclDecoder: list size must be >= 1");
    if (cfg_.crc_bits < 0) throw std::invalid_argument("SclDecoder: negative CRC size");
    if (cfg_.crc_bits > 0) {
        if (cfg_.crc_bits >= code_.dimension)
            throw std::invalid_argument("SclDecoder: crc_bits must be smaller than k");
        if (crc_degree(cfg_.crc_poly) != cfg_.crc_bits)
            throw std::invalid_argument("SclDecoder: polynomial degree does not match crc_bits");
    }
    levels_ = code_.n;
    const int list = cfg_.list_size;
    channel_.assign(static_cast<size_t>(code_.block_length), 0.0);
    llr_pools_.resize(static_cast<size_t>(levels_) + 1);
    c_pools_.resize(static_cast<size_t>(levels_) + 1);
    for (int lv = 1; lv <= levels_; ++lv) llr_pools_[lv].init(list, code_.block_length >> lv);
    for (int lv = 0; lv <= levels_; ++lv) c_pools_[lv].init(list, 2 * (code_.block_length >> lv));
    paths_.resize(static_cast<size_t>(list));
    for (auto& p : paths_) {
        p.llr_slot.assign(static_cast<size_t>(levels_) + 1, -1);
        p.c_slot.assign(static_cast<size_t>(levels_) + 1, -1);
        p.u_hat.assign(static_cast<size_t>(code_.block_length), 0);
    }
    order_.reserve(static_cast<size_t>(list));
    free_paths_.reserve(static_cast<size_t>(list));
    forks_.reserve(2 * static_cast<size_t>(list));
    keep_.assign(2 * static_cast<size_t>(list), 0);
}

void SclDecoder::start_frame(const LlrFrame& frame) {
    for (int m = 0; m < code_.block_length; ++m)
        channel_[m] = frame.llrs[bit_reverse(m, code_.n)];
    for (int lv = 1; lv <= levels_; ++lv) llr_pools_[lv].reset();
    for (int lv = 0; lv <= levels_; ++lv) c_pools_[lv].reset();
    order_.clear();
    free_paths_.clear();
    for (int id = static_cast<int>(paths_.size()) - 1; id >= 1; --id) free_paths_.push_back(id);
    Path& root = paths_[0];
    root.metric = 0.0;
    std::fill(root.u_hat.begin(), root.u_hat.end(), 0);
    for (int lv = 1; lv <= levels_; ++lv) root.llr_slot[lv] = llr_pools_[lv].acquire();
    for (int lv = 0; lv <= levels_; ++lv) root.c_slot[lv] = c_pools_[lv].acquire();
    order_.push_back(0);
}

int SclDecoder::clone_path(int path_id) {
    assert(!free_paths_.empty());
    const int fresh = free_paths_.back();
    free_paths_.pop_back();
    Path& src = paths_[path_id];
    Path& dst = paths_[fresh];
    dst.metric = src.metric;
    dst.u_hat = src.u_hat;
    for (int lv = 1; lv <= levels_; ++lv) {
        dst.llr_slot[lv] = src.llr_slot[lv];
        llr_pools_[lv].add_ref(src.llr_slot[lv]);
    }
    for (int lv = 0; lv <= levels_; ++lv) {
        dst.c_slot[lv] = src.c_slot[lv];
        c_pools_[lv].add_ref(src.c_slot[lv]);
    }
    return fresh;
}

void SclDecoder::kill_path(int path_id) {
    Path& p = paths_[path_id];
    for (int lv = 1; lv <= levels_; ++lv) {
        llr_pools_[lv].release(p.llr_slot[lv]);
        p.llr_slot[lv] = -1;
    }
    for (int lv = 0; lv <= levels_; ++lv) {
        c_pools_[lv].release(p.c_slot[lv]);
        p.c_slot[lv] = -1;
    }
    free_paths_.push_back(path_id);
}

void SclDecoder::calc_llr(int level, int phase) {
    if (level == 0) return;
    if ((phase & 1) == 0) calc_llr(level - 1, phase >> 1);
    const int m = code_.block_length >> level;
    for (int id : order_) {
        Path& p = paths_[id];
        const double* in =
            level == 1 ? channel_.data() : llr_pools_[level - 1].read(p.llr_slot[level - 1]);
        double* out = llr_pools_[level].overwrite(p.llr_slot[level]);
        if (phase & 1) {
            const uint8_t* sums = c_pools_[level].read(p.c_slot[level]);  // column 0
            for (int b = 0; b < m; ++b) out[b] = (sums[b] ? -in[b] : in[b]) + in[b + m];
        } else {
            for (int b = 0; b < m; ++b) out[b] = boxplus(in[b], in[b + m]);
        }
    }
}

void SclDecoder::update_partial_sums(int level, int phase) {
    const int parent_phase = phase >> 1;
    const int m = code_.block_length >> level;
    for (int id : order_) {
        Path& p = paths_[id];
        const uint8_t* child = c_pools_[level].read(p.c_slot[level]);
        uint8_t* parent = c_pools_[level - 1].write(p.c_slot[level - 1]);
        uint8_t* dst = parent + (parent_phase & 1) * 2 * m;
        for (int b = 0; b < m; ++b) {
            dst[b] = child[b] ^ child[m + b];
            dst[m + b] = child[m + b];
        }
    }
    if ((parent_phase & 1) && level > 1) update_partial_sums(level - 1, parent_phase);
}

void SclDecoder::set_decision(int path_id, int phase, uint8_t bit, double metric) {
    Path& p = paths_[path_id];
    uint8_t* c = c_pools_[levels_].write(p.c_slot[levels_]);
    c[phase & 1] = bit;
    p.u_hat[phase] = bit;
    p.metric = metric;
}

void SclDecoder::extend_frozen(int phase) {
    for (int id : order_) {
        const double llr = llr_pools_[levels_].read(paths_[id].llr_slot[levels_])[0];
        set_decision(id, phase, 0, paths_[id].metric + softplus(-llr));
    }
}

void SclDecoder::extend_info(int phase) {
    const int active = static_cast<int>(order_.size());
    const int list = cfg_.list_size;
    forks_.clear();
    for (int pos = 0; pos < active; ++pos) {
        const Path& p = paths_[order_[pos]];
        const double llr = llr_pools_[levels_].read(p.llr_slot[levels_])[0];
        forks_.push_back({p.metric + softplus(-llr), 2 * pos});
        forks_.push_back({p.metric + softplus(llr), 2 * pos + 1});
    }
    fork_metric_scratch_.assign(static_cast<size_t>(2 * active), 0.0);
    for (const Fork& f : forks_) fork_metric_scratch_[f.id] = f.metric;

    std::fill(keep_.begin(), keep_.end(), 0);
    if (2 * active <= list) {
        for (const Fork& f : forks_) keep_[f.id] = 1;
    } else {
        std::sort(forks_.begin(), forks_.end(), [](const Fork& a, const Fork& b) {
            if (a.metric != b.metric) return a.metric < b.metric;
            return a.id < b.id;  // creation-order tie break
        });
        for (int i = 0; i < list; ++i) keep_[forks_[i].id] = 1;
    }

    for (int pos = 0; pos < active; ++pos)
        if (!keep_[2 * pos] && !keep_[2 * pos + 1]) kill_path(order_[pos]);

    order_scratch_.clear();
    for (int pos = 0; pos < active; ++pos) {
        const int id = order_[pos];
        const bool keep0 = keep_[2 * pos] != 0;
        const bool keep1 = keep_[2 * pos + 1] != 0;
        if (!keep0 && !keep1) continue;
        if (keep0 && keep1) {
            const int twin = clone_path(id);
            set_decision(id, phase, 0, fork_metric_scratch_[2 * pos]);
            set_decision(twin, phase, 1, fork_metric_scratch_[2 * pos + 1]);
            order_scratch_.push_back(id);
            order_scratch_.push_back(twin);
        } else {
            const uint8_t bit = keep1 ? 1 : 0;
            set_decision(id, phase, bit, fork_metric_scratch_[2 * pos + bit]);
            order_scratch_.push_back(id);
        }
    }
    order_ = order_scratch_;
}

int SclDecoder::pick_result_path() const {
    std::vector<int> ranked = order_;
    std::stable_sort(ranked.begin(), ranked.end(),
                     [this](int a, int b) { return paths_[a].metric < paths_[b].metric; });
    if (cfg_.crc_bits > 0) {
        BitVec info_word(static_cast<size_t>(code_.dimension));
        for (int id : ranked) {
            const Path& p = paths_[id];
            int w = 0;
            for (int pos = 0; pos < code_.block_length; ++pos)
                if (code_.a[pos]) info_word[w++] = p.u_hat[pos];
            if (crc_check(info_word, cfg_.crc_poly)) return id;
        }
    }
    return ranked.front();
}

DecodeResult SclDecoder::decode(const LlrFrame& frame) {
    if (static_cast<int>(frame.llrs.size()) != code_.block_length)
        throw std::invalid_argument("SclDecoder: frame length does not match block length");
    start_frame(frame);
    for (int phase = 0; phase < code_.block_length; ++phase) {
        calc_llr(levels_, phase);
        if (code_.a[phase])
            extend_info(phase);
        else
            extend_frozen(phase);
        if (phase & 1) update_partial_sums(levels_, phase);
    }
    const int best = pick_result_path();
    DecodeResult result;
    result.u_hat = paths_[best].u_hat;
    result.x_hat.resize(static_cast<size_t>(code_.block_length));
    const uint8_t* graph_word = c_pools_[0].read(paths_[best].c_slot[0]);
    for (int j = 0; j < code_.block_length; ++j)
        result.x_hat[j] = graph_word[bit_reverse(j, code_.n)];
    return result;
}

}  // namespace polarga
