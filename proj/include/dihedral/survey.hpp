#pragma once

/// Exhaustive parameter-space scans:
///
///  * scan_stabilizers — for every canonical generating set and every level
///    up to saturation, compute Stab(W'_l) and record any value that is
///    neither the trivial subgroup {0} nor all of Z_n;
///  * survey_lambda    — one lambda_1 row per canonical orbit per n, with
///    the floor(n/2)+1 bound enforced as a hard invariant.
///
/// Parameter tuples are independent work items; they are distributed over a
/// small thread pool and aggregated in (n, a, b) order so the output is
/// identical whatever the thread count.  Long stabilizer scans checkpoint
/// completed tuples to an append-only JSON-lines file and resume from it.

#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dihedral/group.hpp"
#include "dihedral/residue_set.hpp"
#include "dihedral/stability.hpp"
#include "dihedral/word_length.hpp"

namespace dihedral {

/// A scan invariant was violated; treated as fatal (it would mean either a
/// falsified bound or a kernel bug).
struct verification_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Run fn(i) for i in [0, count) on `jobs` threads, pulling indices from a
/// shared counter.  Callers store results per index, so aggregation order
/// does not depend on scheduling.
template <class F>
void parallel_for_index(std::size_t count, int jobs, F&& fn) {
    jobs = resolve_jobs(jobs);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace detail

/// Canonical representatives: all (a, b) pairs that are the lexicographic
/// minimum of their relabeling orbit.  Includes non-generating pairs.
inline std::vector<std::pair<int, int>> canonical_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) {
            if (a == b) continue;
            GeneratingSet S(n, a, b);
            auto orbit = canonical_orbit(S);
            if (orbit.front() == std::pair<int, int>{a, b}) out.emplace_back(a, b);
        }
    return out;
}

inline std::vector<GeneratingSet> canonical_generating_sets(int n) {
    std::vector<GeneratingSet> out;
    for (auto [a, b] : canonical_pairs(n)) {
        GeneratingSet S(n, a, b);
        if (is_generating(S)) out.push_back(S);
    }
    return out;
}

struct StabilizerCounterexample {
    int n, a, b, level;
    ResidueSet stab;
};

struct ConjectureScanResult {
    int n_min = 0, n_max = 0;
    long long sets_scanned = 0;
    long long levels_checked = 0;
    long long non_generating_skipped = 0; // canonical orbits whose gcd(a,b,n) > 1
    std::vector<StabilizerCounterexample> counterexamples;
    bool confirmed = true;
};

namespace detail {

struct SetScan {
    long long levels = 0;
    std::vector<StabilizerCounterexample> cx;
};

/// Levels l = 1 .. first_full + 1 (so that the saturated level of each
/// parity is included; those must report the full stabilizer).
inline SetScan scan_one_set(int n, int a, int b) {
    SetScan out;
    ResidueSet sp(n, {0, a, b});
    ResidueSet cur(n);
    cur.insert(0);
    int l = 0, first_full = -1;
    while (first_full < 0 || l < first_full + 1) {
        cur = (l % 2 == 0) ? sumset(cur, sp) : diffset(cur, sp);
        ++l;
        ++out.levels;
        ResidueSet st = stabilizer(cur);
        auto size = st.count();
        if (size != 1 && size != static_cast<std::size_t>(n))
            out.cx.push_back({n, a, b, l, std::move(st)});
        if (first_full < 0 && cur.is_full()) first_full = l;
        if (l > 2 * n + 2)
            throw std::logic_error("scan_one_set: level iteration exceeded the 2n+2 safety bound");
    }
    return out;
}

inline nlohmann::json checkpoint_record(int n, int a, int b, const SetScan& scan) {
    nlohmann::json cx = nlohmann::json::array();
    for (const auto& e : scan.cx)
        cx.push_back({{"l", e.level}, {"stab", e.stab.members()}});
    return {{"n", n}, {"a", a}, {"b", b}, {"levels", scan.levels}, {"cx", std::move(cx)}};
}

inline std::string checkpoint_key(int n, int a, int b) {
    return std::to_string(n) + ":" + std::to_string(a) + ":" + std::to_string(b);
}

/// Parse an existing checkpoint file; malformed trailing lines (a previous
/// run killed mid-write) are ignored.
inline std::unordered_map<std::string, SetScan> load_checkpoint(const std::string& path) {
    std::unordered_map<std::string, SetScan> done;
    std::ifstream in(path);
    if (!in) return done;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
        if (rec.is_discarded() || !rec.contains("n")) continue;
        int n = rec["n"], a = rec["a"], b = rec["b"];
        SetScan scan;
        scan.levels = rec["levels"];
        for (const auto& e : rec["cx"]) {
            ResidueSet st(n);
            for (int m : e["stab"].get<std::vector<int>>()) st.insert(m);
            scan.cx.push_back({n, a, b, e["l"], std::move(st)});
        }
        done[checkpoint_key(n, a, b)] = std::move(scan);
    }
    return done;
}

} // namespace detail

/// Scan every canonical generating set for n in [n_min, n_max], all levels
/// to saturation.  jobs = 0 picks the hardware thread count.  When
/// checkpoint_path is nonempty, completed (n, a, b) tuples are appended
/// there (flushed every 100 sets) and skipped on re-runs.
inline ConjectureScanResult scan_stabilizers(int n_min, int n_max, int jobs = 0,
                                             const std::string& checkpoint_path = {}) {
    if (n_min < 3 || n_min > n_max)
        throw std::invalid_argument("scan_stabilizers: need 3 <= n_min <= n_max");

    ConjectureScanResult result;
    result.n_min = n_min;
    result.n_max = n_max;

    struct Task {
        int n, a, b;
    };
    std::vector<Task> tasks;
    for (int n = n_min; n <= n_max; ++n)
        for (auto [a, b] : canonical_pairs(n)) {
            if (is_generating(GeneratingSet(n, a, b))) tasks.push_back({n, a, b});
            else ++result.non_generating_skipped;
        }

    auto done = checkpoint_path.empty()
                    ? std::unordered_map<std::string, detail::SetScan>{}
                    : detail::load_checkpoint(checkpoint_path);

    std::vector<detail::SetScan> scans(tasks.size());
    std::mutex writer_mutex; // single writer for the checkpoint stream
    std::ofstream ckpt;
    if (!checkpoint_path.empty()) {
        ckpt.open(checkpoint_path, std::ios::app);
        if (!ckpt) throw std::runtime_error("scan_stabilizers: cannot open checkpoint file " + checkpoint_path);
    }
    int pending = 0;

    detail::parallel_for_index(tasks.size(), jobs, [&](std::size_t i) {
        const Task& t = tasks[i];
        if (!done.empty()) {
            auto it = done.find(detail::checkpoint_key(t.n, t.a, t.b));
            if (it != done.end()) {
                scans[i] = it->second;
                return;
            }
        }
        scans[i] = detail::scan_one_set(t.n, t.a, t.b);
        if (ckpt.is_open()) {
            std::lock_guard<std::mutex> lock(writer_mutex);
            ckpt << detail::checkpoint_record(t.n, t.a, t.b, scans[i]).dump() << '\n';
            if (++pending >= 100) {
                ckpt.flush();
                pending = 0;
            }
        }
    });
    if (ckpt.is_open()) ckpt.flush();

    for (auto& s : scans) {
        result.levels_checked += s.levels;
        for (auto& e : s.cx) result.counterexamples.push_back(std::move(e));
    }
    result.sets_scanned = static_cast<long long>(tasks.size());
    result.confirmed = result.counterexamples.empty();
    return result;
}

/// Re-derive every counterexample entry from its own parameters.  Returns a
/// description of each entry that fails to reproduce (stabilizer mismatch,
/// or a stabilizer that is actually trivial or full); empty means the
/// report is internally consistent.
inline std::vector<std::string> reverify_counterexamples(const ConjectureScanResult& result) {
    std::vector<std::string> problems;
    for (const auto& e : result.counterexamples) {
        std::string tag = "(n=" + std::to_string(e.n) + ", a=" + std::to_string(e.a) +
                          ", b=" + std::to_string(e.b) + ", l=" + std::to_string(e.level) + ")";
        auto size = e.stab.count();
        if (size == 1 || size == static_cast<std::size_t>(e.n)) {
            problems.push_back(tag + ": recorded stabilizer is trivial or full");
            continue;
        }
        WPrimeSequence seq = w_prime_sequence(e.n, GeneratingSet(e.n, e.a, e.b), e.level);
        if (stabilizer(seq.levels[static_cast<std::size_t>(e.level)]) != e.stab)
            problems.push_back(tag + ": recorded stabilizer does not match recomputation");
    }
    return problems;
}

struct SurveyRow {
    int n, a, b; // canonical pair
    int lambda1;
    int max_reflection_length;
    int bound; // floor(n/2) + 1
    bool tight;
    bool prime_condition_met;
};

/// The survey aborts if any row violates the floor(n/2)+1 bound.
inline void validate_survey_row(const SurveyRow& row) {
    if (row.lambda1 > row.bound)
        throw verification_failure("survey_lambda: lambda1 bound violated at n=" + std::to_string(row.n) +
                                   " (a=" + std::to_string(row.a) + ", b=" + std::to_string(row.b) +
                                   "): lambda1=" + std::to_string(row.lambda1) +
                                   " > " + std::to_string(row.bound));
}

/// One row per canonical generating orbit per n, sorted by (n, a, b).
inline std::vector<SurveyRow> survey_lambda(int n_min, int n_max, int jobs = 0) {
    if (n_min < 3 || n_min > n_max)
        throw std::invalid_argument("survey_lambda: need 3 <= n_min <= n_max");
    struct Task {
        int n, a, b;
    };
    std::vector<Task> tasks;
    for (int n = n_min; n <= n_max; ++n)
        for (auto [a, b] : canonical_pairs(n))
            if (is_generating(GeneratingSet(n, a, b))) tasks.push_back({n, a, b});

    std::vector<SurveyRow> rows(tasks.size());
    detail::parallel_for_index(tasks.size(), jobs, [&](std::size_t i) {
        const Task& t = tasks[i];
        LambdaReport rep = lambda1(t.n, GeneratingSet(t.n, t.a, t.b));
        rows[i] = SurveyRow{t.n,
                            t.a,
                            t.b,
                            rep.lambda1,
                            rep.max_reflection_length,
                            rep.bound_n_half,
                            rep.lambda1 == rep.bound_n_half,
                            rep.prime_condition_met};
        validate_survey_row(rows[i]);
    });
    return rows;
}

} // namespace dihedral
