#include "mht/channel_coding.hpp"

#include "mht/binary_testing.hpp"
#include "mht/mary_testing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace mht {

namespace {

constexpr std::uint64_t kDenseEntryGuard = 1u << 20;

void check_code(const DMC& w, const ChannelCode& code) {
    if (code.codewords.empty())
        throw std::invalid_argument("code must have at least one codeword");
    std::vector<int> sorted = code.codewords;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= w.input_size)
            throw std::invalid_argument("codeword outside input alphabet");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("codewords must be distinct");
    }
}

double binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0.0;
    double r = 1.0;
    for (int i = 0; i < k; ++i)
        r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return r;
}

// ML error of a candidate codebook, 1 - sum_y max_v W(y|x_v) / M.
double ml_error(const DMC& w, const std::vector<int>& words) {
    double mu = 0.0;
    for (int y = 0; y < w.output_size; ++y) {
        double colmax = 0.0;
        for (int x : words)
            colmax = std::max(colmax, w(x, y));
        mu += colmax;
    }
    return 1.0 - mu / static_cast<double>(words.size());
}

struct SearchBest {
    double error = 2.0;
    std::vector<int> words;

    void offer(double err, const std::vector<int>& w) {
        if (err < error || (err == error && w < words)) {
            error = err;
            words = w;
        }
    }
    void merge(const SearchBest& other) {
        if (!other.words.empty())
            offer(other.error, other.words);
    }
};

// Enumerates sorted codeword tuples with a fixed head element, recursing
// over the remaining positions in lexicographic order.
void enumerate_tail(const DMC& w, std::vector<int>& words, std::size_t pos,
                    SearchBest& best) {
    const std::size_t m = words.size();
    if (pos == m) {
        best.offer(ml_error(w, words), words);
        return;
    }
    for (int c = words[pos - 1] + 1;
         c <= w.input_size - static_cast<int>(m - pos); ++c) {
        words[pos] = c;
        enumerate_tail(w, words, pos + 1, best);
    }
}

} // namespace

std::string codeword_bits(int word, int blocklength) {
    std::string s(static_cast<std::size_t>(blocklength), '0');
    for (int b = 0; b < blocklength; ++b)
        if (word >> (blocklength - 1 - b) & 1)
            s[static_cast<std::size_t>(b)] = '1';
    return s;
}

DMC bsc(int n, double delta) {
    if (n < 1)
        throw std::invalid_argument("bsc: blocklength must be positive");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("bsc: delta outside (0,1)");
    if (n > 10) // 4^n transition entries
        throw guard_error("bsc: blocklength too large for dense storage");

    const int size = 1 << n;
    // Precompute delta^d (1-delta)^(n-d) per Hamming distance d.
    std::vector<double> by_distance(static_cast<std::size_t>(n) + 1);
    for (int d = 0; d <= n; ++d)
        by_distance[d] = std::pow(delta, d) * std::pow(1.0 - delta, n - d);

    DMC w;
    w.input_size = w.output_size = size;
    w.transition.resize(static_cast<std::size_t>(size) * size);
    for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y)
            w.transition[static_cast<std::size_t>(x) * size + y] =
                by_distance[std::popcount(static_cast<unsigned>(x ^ y))];
    return w;
}

JointDistribution code_to_joint(const DMC& w, const ChannelCode& code) {
    check_code(w, code);
    const int m = code.size();
    const int ny = w.output_size;
    if (static_cast<std::uint64_t>(m) * ny > kDenseEntryGuard)
        throw guard_error("code_to_joint: joint too large for dense storage");
    std::vector<double> mass(static_cast<std::size_t>(m) * ny);
    for (int v = 0; v < m; ++v)
        for (int y = 0; y < ny; ++y)
            mass[static_cast<std::size_t>(v) * ny + y] =
                w(code.codewords[v], y) / static_cast<double>(m);
    return JointDistribution(m, ny, std::move(mass), true);
}

double metaconverse(const DMC& w, const ChannelCode& code,
                    const FiniteMeasure& qy) {
    return metaconverse_alpha(code_to_joint(w, code), qy);
}

double codebook_free_bound(const DMC& w, int num_messages,
                           const FiniteMeasure& px, const FiniteMeasure& qy) {
    if (num_messages < 1)
        throw std::invalid_argument("codebook_free_bound: M must be positive");
    if (px.size() != static_cast<std::size_t>(w.input_size) ||
        qy.size() != static_cast<std::size_t>(w.output_size))
        throw std::invalid_argument("codebook_free_bound: size mismatch");
    const std::size_t nx = px.size(), ny = qy.size();
    if (static_cast<std::uint64_t>(nx) * ny > kDenseEntryGuard)
        throw guard_error("codebook_free_bound: product alphabet too large");

    std::vector<double> p(nx * ny), q(nx * ny);
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = 0; y < ny; ++y) {
            p[x * ny + y] = px[x] * w(static_cast<int>(x), static_cast<int>(y));
            q[x * ny + y] = px[x] * qy[y];
        }
    return alpha_beta(FiniteMeasure(std::move(p)),
                      FiniteMeasure(std::move(q), qy.normalized),
                      1.0 / static_cast<double>(num_messages))
        .alpha;
}

CodeSearchResult best_code_search(const DMC& w, int n, int num_messages,
                                  const CodeSearchOptions& opts) {
    if (num_messages < 1)
        throw std::invalid_argument("best_code_search: M must be positive");
    if (w.input_size < num_messages)
        throw std::invalid_argument(
            "best_code_search: fewer inputs than messages");

    const int m = num_messages;
    const int s = w.input_size;
    const double candidates = opts.fix_first_zero
                                  ? binomial(s - 1, m - 1)
                                  : binomial(s, m);
    if (candidates > static_cast<double>(opts.max_candidates))
        throw guard_error("best_code_search: candidate space exceeds guard");

    // Partition by the value of the first non-fixed codeword; each worker
    // takes a strided slice and the merge order is fixed, so the result is
    // identical for any worker count.
    const int first_pos = opts.fix_first_zero ? 1 : 0;
    if (first_pos >= m) { // m == 1 with the first codeword pinned
        std::vector<int> words{0};
        return {ChannelCode{n, words}, ml_error(w, words)};
    }
    std::vector<int> heads;
    for (int c = first_pos == 0 ? 0 : 1; c <= s - (m - first_pos); ++c)
        heads.push_back(c);

    auto run_slice = [&](std::size_t offset, std::size_t stride,
                         SearchBest& best) {
        std::vector<int> words(static_cast<std::size_t>(m));
        if (opts.fix_first_zero)
            words[0] = 0;
        for (std::size_t i = offset; i < heads.size(); i += stride) {
            words[static_cast<std::size_t>(first_pos)] = heads[i];
            if (m == first_pos + 1)
                best.offer(ml_error(w, words), words);
            else
                enumerate_tail(w, words,
                               static_cast<std::size_t>(first_pos) + 1, best);
        }
    };

    const int workers = std::max(1, opts.workers);
    std::vector<SearchBest> partial(static_cast<std::size_t>(workers));
    if (workers == 1) {
        run_slice(0, 1, partial[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t)
            pool.emplace_back(run_slice, static_cast<std::size_t>(t),
                              static_cast<std::size_t>(workers),
                              std::ref(partial[static_cast<std::size_t>(t)]));
        for (std::thread& th : pool)
            th.join();
    }
    SearchBest best;
    for (const SearchBest& p : partial)
        best.merge(p);
    return {ChannelCode{n, best.words}, best.error};
}

} // namespace mht
