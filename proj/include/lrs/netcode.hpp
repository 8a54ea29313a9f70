#pragma once

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lrs/decoder.hpp"

namespace lrs {

inline constexpr int kSamplingAttempts = 1000;

namespace detail {

/// Spread `units` over blocks with the given capacities, uniformly one unit at a time.
inline std::vector<std::size_t> spread(std::size_t units, const std::vector<std::size_t>& capacity, Rng& rng) {
    std::vector<std::size_t> out(capacity.size(), 0);
    for (std::size_t u = 0; u < units; ++u) {
        std::vector<std::size_t> open;
        for (std::size_t i = 0; i < capacity.size(); ++i)
            if (out[i] < capacity[i]) open.push_back(i);
        ++out[open[rng.below(open.size())]];
    }
    return out;
}

}  // namespace detail

/// Block-diagonal transfer matrix Diag(A_1..A_l), A_i over R of shape
/// n_i x N_i, whose free rank is exactly n - rho. Rows are pushed into the
/// maximal ideal by multiplying them by p.
inline std::vector<Matrix> sample_transfer(const ChainRing& ring, const LengthPartition& partition,
                                           const std::vector<std::size_t>& out_dims, std::size_t rho, Rng& rng) {
    if (out_dims.size() != partition.blocks()) fail(ErrorCode::DimensionMismatch, "one output dimension per block");
    const std::size_t n = partition.length();
    if (rho > n) fail(ErrorCode::BudgetInfeasible, "erasure budget exceeds n");
    std::vector<std::size_t> cap(partition.blocks());
    std::size_t cap_total = 0;
    for (std::size_t i = 0; i < cap.size(); ++i) {
        cap[i] = std::min(partition.block(i), out_dims[i]);
        cap_total += cap[i];
    }
    if (n - rho > cap_total) fail(ErrorCode::SamplingExhausted, "output dimensions cannot carry free rank n - rho");

    // Remove cap_total - (n - rho) units of free rank across blocks.
    const std::vector<std::size_t> deficit = detail::spread(cap_total - (n - rho), cap, rng);
    const Elem p = ring.p_power(1);
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < cap.size(); ++i) {
        const std::size_t ni = partition.block(i);
        const int target = static_cast<int>(cap[i] - deficit[i]);
        const std::size_t degrade = ni - static_cast<std::size_t>(target);
        bool done = false;
        for (int attempt = 0; attempt < kSamplingAttempts && !done; ++attempt) {
            Matrix a = random_matrix(ring, ni, out_dims[i], rng);
            std::vector<std::size_t> rows(ni);
            for (std::size_t r = 0; r < ni; ++r) rows[r] = r;
            for (std::size_t r = 0; r < degrade; ++r) {
                const std::size_t pick = r + rng.below(ni - r);
                std::swap(rows[r], rows[pick]);
                for (std::size_t c = 0; c < a.cols; ++c) a(rows[r], c) = ring.mul(a(rows[r], c), p);
            }
            if (out_dims[i] == 0 || rank_and_free_rank(ring, a).free_rank == target) {
                blocks.push_back(std::move(a));
                done = true;
            }
        }
        if (!done) fail(ErrorCode::SamplingExhausted, "could not sample a transfer block of the requested free rank");
    }
    return blocks;
}

/// Error vector of sum-rank weight exactly t: per block e_i = alpha_i B_i with
/// alpha_i in S^{t_i} and B_i in R^{t_i x N_i}, both of full free rank t_i.
inline Vector sample_error(const Extension& ext, const LengthPartition& partition, std::size_t t, Rng& rng) {
    std::vector<std::size_t> cap(partition.blocks());
    std::size_t cap_total = 0;
    for (std::size_t i = 0; i < cap.size(); ++i) {
        cap[i] = std::min(partition.block(i), ext.rank());
        cap_total += cap[i];
    }
    if (t > cap_total) fail(ErrorCode::BudgetInfeasible, "error weight exceeds sum of min(n_i, m)");
    const std::vector<std::size_t> ranks = detail::spread(t, cap, rng);
    Vector e;
    for (std::size_t i = 0; i < cap.size(); ++i) {
        const std::size_t ni = partition.block(i);
        const std::size_t ti = ranks[i];
        if (ti == 0) {
            e.insert(e.end(), ni, Elem{});
            continue;
        }
        Vector alpha(ti);
        for (int attempt = 0;; ++attempt) {
            if (attempt == kSamplingAttempts) fail(ErrorCode::SamplingExhausted, "could not sample a free alpha");
            for (auto& x : alpha) x = ext.random(rng);
            if (free_rank_of(ext, alpha) == static_cast<int>(ti)) break;
        }
        Matrix b;
        for (int attempt = 0;; ++attempt) {
            if (attempt == kSamplingAttempts) fail(ErrorCode::SamplingExhausted, "could not sample a free B");
            b = random_matrix(ext.base(), ti, ni, rng);
            if (rank_and_free_rank(ext.base(), b).free_rank == static_cast<int>(ti)) break;
        }
        const Vector block = multiply(ext, std::span<const Elem>(alpha), b);
        e.insert(e.end(), block.begin(), block.end());
    }
    if (sum_rank_weight(ext, e, partition) != static_cast<int>(t))
        fail(ErrorCode::SamplingExhausted, "sampled error does not have the requested weight");
    return e;
}

struct ChannelConfig {
    std::vector<std::size_t> out_dims;  // N_i; empty means N_i = n_i
    std::size_t t = 0;
    std::size_t rho = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    bool stress = false;  // allow 2t + rho + 1 > n - k + 1
    bool keep_log = false;
    unsigned threads = 1;
};

enum class TrialOutcome { Success, Failure, Miscorrection };

struct TrialStats {
    std::size_t trials = 0;
    std::size_t successes = 0;
    std::size_t failures = 0;
    std::size_t miscorrections = 0;
    double rate = 0.0;
    double seconds = 0.0;
    std::vector<std::string> log;  // JSON lines, one per trial
};

/// (n - 2t - rho) / n.
inline double information_rate(std::size_t n, std::size_t t, std::size_t rho) {
    return (static_cast<double>(n) - 2.0 * static_cast<double>(t) - static_cast<double>(rho)) / static_cast<double>(n);
}

inline bool within_guarantee(const LrsCode& code, std::size_t t, std::size_t rho) {
    return 2 * t + rho + 1 <= code.designed_distance();
}

namespace detail {

struct TrialRecord {
    TrialOutcome outcome = TrialOutcome::Failure;
    std::string line;
};

inline const char* outcome_name(TrialOutcome o) {
    switch (o) {
        case TrialOutcome::Success: return "success";
        case TrialOutcome::Failure: return "failure";
        case TrialOutcome::Miscorrection: return "miscorrection";
    }
    return "failure";
}

inline TrialRecord run_one_trial(const LrsCode& code, const ChannelConfig& config,
                                 const std::vector<std::size_t>& out_dims, std::size_t index) {
    const Extension& ext = code.ext();
    Rng rng = Rng::for_stream(config.seed, index);
    Vector msg(code.k());
    for (auto& x : msg) x = ext.random(rng);
    const Vector c = encode(code, msg);
    const auto blocks = sample_transfer(ext.base(), code.partition(), out_dims, config.rho, rng);
    const LengthPartition out_partition = output_partition(blocks);
    const Vector e = sample_error(ext, out_partition, config.t, rng);
    Vector y = apply_transfer(ext, c, code.partition(), blocks);
    for (std::size_t j = 0; j < y.size(); ++j) y[j] = ext.add(y[j], e[j]);

    TrialRecord rec;
    std::string note;
    try {
        const DecodeResult res = erasure_decode(code, y, blocks);
        if (!res.ok()) {
            rec.outcome = TrialOutcome::Failure;
        } else if (res.message == msg) {
            rec.outcome = TrialOutcome::Success;
        } else {
            rec.outcome = TrialOutcome::Miscorrection;
        }
    } catch (const Error& err) {
        rec.outcome = TrialOutcome::Failure;
        note = std::string(code_name(err.code()));
    }
    if (config.keep_log) {
        std::ostringstream os;
        os << "{\"trial\":" << index << ",\"outcome\":\"" << outcome_name(rec.outcome)
           << "\",\"free_rank\":" << transfer_free_rank(ext.base(), blocks) << ",\"error_weight\":" << config.t;
        if (!note.empty()) os << ",\"error\":\"" << note << "\"";
        os << "}";
        rec.line = os.str();
    }
    return rec;
}

}  // namespace detail

/// Monte-Carlo run of y = c A + e followed by erasure decoding. Trial i uses
/// the stream Rng::for_stream(seed, i), so results do not depend on threads.
inline TrialStats run_trials(const LrsCode& code, const ChannelConfig& config) {
    if (!config.stress && !within_guarantee(code, config.t, config.rho))
        fail(ErrorCode::BoundViolated, "2t + rho + 1 = " + std::to_string(2 * config.t + config.rho + 1) +
                                           " exceeds n - k + 1 = " + std::to_string(code.designed_distance()) +
                                           " (use stress mode to run anyway)");
    std::vector<std::size_t> out_dims = config.out_dims;
    if (out_dims.empty()) out_dims = code.partition().sizes();
    if (out_dims.size() != code.partition().blocks()) fail(ErrorCode::DimensionMismatch, "one output dimension per block");

    const auto start = std::chrono::steady_clock::now();
    std::vector<detail::TrialRecord> records(config.trials);
    const unsigned workers = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(config.trials)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < config.trials; ++i) records[i] = detail::run_one_trial(code, config, out_dims, i);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < config.trials; i += workers)
                    records[i] = detail::run_one_trial(code, config, out_dims, i);
            });
        for (auto& th : pool) th.join();
    }

    TrialStats stats;
    stats.trials = config.trials;
    for (auto& rec : records) {
        switch (rec.outcome) {
            case TrialOutcome::Success: ++stats.successes; break;
            case TrialOutcome::Failure: ++stats.failures; break;
            case TrialOutcome::Miscorrection: ++stats.miscorrections; break;
        }
        if (config.keep_log) stats.log.push_back(std::move(rec.line));
    }
    stats.rate = information_rate(code.n(), config.t, config.rho);
    stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return stats;
}

inline std::string csv_header() {
    return "p,r,s,m,partition,k,t,rho,trials,successes,failures,miscorrections,rate,seconds";
}

/// One CSV row; the partition column joins block sizes with '+'.
inline std::string csv_row(const LrsCode& code, const ChannelConfig& config, const TrialStats& stats) {
    const Extension& ext = code.ext();
    std::ostringstream os;
    os << ext.p() << ',' << ext.r() << ',' << ext.base().degree() << ',' << ext.rank() << ',';
    for (std::size_t i = 0; i < code.partition().blocks(); ++i) os << (i ? "+" : "") << code.partition().block(i);
    os << ',' << code.k() << ',' << config.t << ',' << config.rho << ',' << stats.trials << ',' << stats.successes << ','
       << stats.failures << ',' << stats.miscorrections << ',' << std::setprecision(6) << stats.rate << ','
       << std::fixed << std::setprecision(3) << stats.seconds;
    return os.str();
}

}  // namespace lrs
