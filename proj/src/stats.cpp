#include "fdo/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fdo::stats {

SampleSummary summarize(std::span<const double> samples)
{
    if (samples.empty())
        throw std::invalid_argument("summarize: empty sample");
    SampleSummary s;
    s.n = samples.size();
    s.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(s.n);
    if (s.n > 1) {
        double ss = 0.0;
        for (double v : samples)
            ss += (v - s.mean) * (v - s.mean);
        s.std = std::sqrt(ss / static_cast<double>(s.n - 1));
    }
    return s;
}

std::vector<double> midranks(std::span<const double> values)
{
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && values[order[j]] == values[order[i]])
            ++j;
        // positions i..j-1 hold ranks i+1..j
        const double avg = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k)
            ranks[order[k]] = avg;
        i = j;
    }
    return ranks;
}

namespace {

/// Exact two-sided p from the permutation distribution of the rank sum.
/// Midranks are multiples of 1/2, so doubled ranks are integers and the
/// distribution is counted by a subset-sum recursion over them.
double exact_p(const std::vector<double>& ranks, std::size_t n_a, double observed)
{
    const std::size_t total = ranks.size();
    std::vector<int> doubled(total);
    int max_sum = 0;
    for (std::size_t i = 0; i < total; ++i) {
        doubled[i] = static_cast<int>(std::lround(2.0 * ranks[i]));
        max_sum += doubled[i];
    }
    // ways[k][s]: number of k-subsets of the items seen so far with doubled sum s
    std::vector<std::vector<double>> ways(n_a + 1, std::vector<double>(static_cast<std::size_t>(max_sum) + 1, 0.0));
    ways[0][0] = 1.0;
    for (std::size_t i = 0; i < total; ++i) {
        for (std::size_t k = std::min(i + 1, n_a); k >= 1; --k) {
            const auto& prev = ways[k - 1];
            auto& cur = ways[k];
            for (int s = max_sum; s >= doubled[i]; --s)
                cur[static_cast<std::size_t>(s)] += prev[static_cast<std::size_t>(s - doubled[i])];
        }
    }
    const int obs = static_cast<int>(std::lround(2.0 * observed));
    double all = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    for (int s = 0; s <= max_sum; ++s) {
        const double w = ways[n_a][static_cast<std::size_t>(s)];
        all += w;
        if (s <= obs)
            lower += w;
        if (s >= obs)
            upper += w;
    }
    return std::min(1.0, 2.0 * std::min(lower, upper) / all);
}

double normal_p(const std::vector<double>& pooled, std::size_t n_a, std::size_t n_b, double observed)
{
    const auto n = static_cast<double>(n_a);
    const auto m = static_cast<double>(n_b);
    const double total = n + m;
    const double expected = n * (total + 1.0) / 2.0;

    std::vector<double> sorted(pooled);
    std::sort(sorted.begin(), sorted.end());
    double tie_term = 0.0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i + 1;
        while (j < sorted.size() && sorted[j] == sorted[i])
            ++j;
        const auto t = static_cast<double>(j - i);
        tie_term += t * t * t - t;
        i = j;
    }
    const double variance = n * m / 12.0 * ((total + 1.0) - tie_term / (total * (total - 1.0)));
    if (!(variance > 0.0))
        return 1.0;
    const double z = std::max(0.0, std::abs(observed - expected) - 0.5) / std::sqrt(variance);
    return std::clamp(std::erfc(z / std::sqrt(2.0)), 0.0, 1.0);
}

}  // namespace

WilcoxonResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b)
{
    if (a.empty() || b.empty())
        throw std::invalid_argument("wilcoxon_rank_sum: empty sample");
    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    const std::vector<double> ranks = midranks(pooled);

    WilcoxonResult out;
    out.rank_sum = std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(a.size()), 0.0);
    if (pooled.size() <= exact_limit) {
        out.method = WilcoxonMethod::exact;
        out.p_value = exact_p(ranks, a.size(), out.rank_sum);
    } else {
        out.method = WilcoxonMethod::normal_approx;
        out.p_value = normal_p(pooled, a.size(), b.size(), out.rank_sum);
    }
    return out;
}

}  // namespace fdo::stats
