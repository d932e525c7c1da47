#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace scatter {

inline int hardware_threads() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

// Deterministic sample fan-out: work is cut into fixed-size chunks keyed by
// chunk index, each chunk is accumulated sequentially by one worker, and the
// per-chunk partials are combined in index order with a fixed-arity pairwise
// tree. The result is byte-identical for any thread count.
template <typename Acc>
class ChunkedReducer {
public:
    ChunkedReducer(std::uint64_t total, std::uint64_t chunk_size = 1ull << 14)
        : total_(total), chunk_(chunk_size ? chunk_size : 1) {}

    // body(chunk_begin, chunk_end, acc) accumulates samples [begin, end).
    // zero() produces an identity accumulator; plus(a, b) merges two.
    template <typename Body, typename Zero, typename Plus>
    Acc run(int threads, Body&& body, Zero&& zero, Plus&& plus) const {
        const std::uint64_t n_chunks = total_ == 0 ? 0 : (total_ + chunk_ - 1) / chunk_;
        std::vector<Acc> partial(n_chunks, zero());
        std::atomic<std::uint64_t> next{0};

        auto worker = [&] {
            for (;;) {
                const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
                if (c >= n_chunks) return;
                const std::uint64_t lo = c * chunk_;
                const std::uint64_t hi = std::min(total_, lo + chunk_);
                body(lo, hi, partial[c]);
            }
        };

        const int nt = std::max(1, std::min<int>(threads, static_cast<int>(n_chunks ? n_chunks : 1)));
        if (nt == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(nt));
            for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }

        return pairwise(partial, 0, n_chunks, zero, plus);
    }

private:
    template <typename Zero, typename Plus>
    static Acc pairwise(std::vector<Acc>& v, std::uint64_t lo, std::uint64_t n,
                        Zero&& zero, Plus&& plus) {
        if (n == 0) return zero();
        if (n == 1) return std::move(v[lo]);
        const std::uint64_t half = n / 2;
        Acc a = pairwise(v, lo, half, zero, plus);
        Acc b = pairwise(v, lo + half, n - half, zero, plus);
        return plus(std::move(a), std::move(b));
    }

    std::uint64_t total_;
    std::uint64_t chunk_;
};

// Pairwise sum of a plain buffer, fixed reduction order.
inline double pairwise_sum(const double* v, std::size_t n) {
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

} // namespace scatter
