#ifndef FDO_STATS_HPP
#define FDO_STATS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace fdo::stats {

struct SampleSummary {
    double mean = 0.0;
    double std = 0.0;  ///< sample standard deviation (n - 1 denominator); 0 when n == 1
    std::size_t n = 0;

    /// False for a single observation, where the sample deviation is undefined and reported as 0.
    bool std_defined() const { return n > 1; }
};

/// Mean and sample standard deviation. Throws std::invalid_argument on empty input.
SampleSummary summarize(std::span<const double> samples);

enum class WilcoxonMethod { exact, normal_approx };

struct WilcoxonResult {
    double rank_sum = 0.0;  ///< sum of the pooled ranks of the first sample
    double p_value = 1.0;  ///< two-sided
    WilcoxonMethod method = WilcoxonMethod::exact;
};

/// Pooled sizes up to this bound use the exact null distribution.
inline constexpr std::size_t exact_limit = 14;

/// Ranks 1..N with ties receiving the average of the ranks they span.
std::vector<double> midranks(std::span<const double> values);

/// Two-sided Wilcoxon rank-sum test. Exact (conditional on ties) when
/// |a| + |b| <= 14, otherwise the normal approximation with tie and
/// continuity corrections. Throws std::invalid_argument on empty input.
WilcoxonResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b);

}  // namespace fdo::stats

#endif  // FDO_STATS_HPP
