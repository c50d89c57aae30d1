#include "looksay/run_chemistry.hpp"

#include <deque>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "looksay/errors.hpp"

namespace looksay {

std::uint64_t total_digits(const RunString& runs) {
    std::uint64_t total = 0;
    for (const Run& r : runs) total += r.count;
    return total;
}

std::string run_text(const RunString& runs) {
    static const char* alphabet = "0123456789abcdefghijklmnopqrstuvwxyz";
    std::ostringstream out;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (i > 0) out << ' ';
        out << alphabet[runs[i].digit];
        if (runs[i].count > 1) out << '^' << runs[i].count;
    }
    return out.str();
}

namespace {

void check_runs(const RunString& runs, const RuleSpec& rule) {
    if (runs.empty()) throw domain_error("say step requires a nonempty run list");
    for (const Run& r : runs) {
        if (r.count == 0) throw domain_error("runs must have positive length");
        if (r.digit >= rule.base) throw domain_error("run digit out of range for the base");
    }
}

inline void append_run(RunString& out, std::uint8_t digit, std::uint64_t count) {
    if (!out.empty() && out.back().digit == digit)
        out.back().count += count;
    else
        out.push_back({digit, count});
}

} // namespace

RunString say_runs(const RunString& runs, const RuleSpec& rule, std::uint64_t max_digits) {
    check_runs(runs, rule);
    RunString out;
    std::uint64_t total = 0;
    for (const Run& r : runs) {
        const auto [reps, tail] = rule_repeats(rule, r.count);
        const DigitString numeral = render_count(r.count, rule.base);
        const std::vector<Run> numeral_runs = encode_runs(numeral);
        total += reps * static_cast<std::uint64_t>(numeral.size()) + tail;
        if (total > max_digits) throw budget_error("say output would exceed the digit budget");
        for (std::uint64_t t = 0; t < reps; ++t)
            for (const Run& nr : numeral_runs) append_run(out, nr.digit, nr.count);
        append_run(out, r.digit, tail);
    }
    return out;
}

namespace {

/* First <= limit runs of say(runs), touching only as many input runs as
 * needed.  `exact` reports whether the whole input was consumed without
 * truncation (in which case the result is the complete say output).  Runs
 * beyond the first `limit` can only append or merge at the tail, so the
 * returned prefix is final either way. */
RunString prefix_say(const RunString& runs, const RuleSpec& rule, unsigned limit, bool& exact) {
    RunString out;
    out.reserve(limit + 4);
    for (const Run& r : runs) {
        const auto [reps, tail] = rule_repeats(rule, r.count);
        const DigitString numeral = render_count(r.count, rule.base);
        const std::vector<Run> numeral_runs = encode_runs(numeral);
        for (std::uint64_t t = 0; t < reps && out.size() <= limit; ++t)
            for (const Run& nr : numeral_runs) append_run(out, nr.digit, nr.count);
        append_run(out, r.digit, tail);
        if (out.size() > limit) {
            out.resize(limit);
            exact = false;
            return out;
        }
    }
    exact = true;
    return out;
}

} // namespace

bool orbit_cut_safe(std::uint8_t left_digit, std::span<const Run> suffix, const RuleSpec& rule,
                    const OrbitCutParams& params) {
    if (suffix.empty()) return false;
    if (left_digit == 0) return true; // numerals never lead with 0, so 0|R persists
    RunString window;
    std::uint64_t digits = 0;
    for (const Run& r : suffix) {
        if (window.size() == params.window_runs) break;
        window.push_back(r);
        digits += r.count;
        if (digits > params.window_digits) break;
    }
    bool exact = window.size() == suffix.size();
    if (window.front().digit == left_digit) return false;
    RunString current = std::move(window);
    for (unsigned t = 0; t < params.horizon; ++t) {
        bool step_exact = false;
        current = prefix_say(current, rule, params.window_runs, step_exact);
        exact = exact && step_exact;
        if (current.empty()) return true; // no future string, nothing to collide with
        if (current.front().digit == left_digit) return false;
        if (current.size() < 2 && !exact) return false; // window exhausted: cannot decide
    }
    return true;
}

std::vector<RunString> split_runs_after_zero(const RunString& runs) {
    if (runs.empty()) throw domain_error("cannot split an empty run list");
    std::vector<RunString> chunks;
    std::size_t start = 0;
    for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
        if (runs[i].digit != 0) continue; // adjacent runs differ, so the next run is nonzero
        chunks.emplace_back(runs.begin() + start, runs.begin() + i + 1);
        start = i + 1;
    }
    chunks.emplace_back(runs.begin() + start, runs.end());
    return chunks;
}

std::vector<RunString> split_runs_orbit(const RunString& runs, const RuleSpec& rule,
                                        const OrbitCutParams& params) {
    if (runs.empty()) throw domain_error("cannot split an empty run list");
    std::vector<RunString> chunks;
    std::size_t start = 0;
    for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
        const std::span<const Run> suffix(runs.data() + i + 1, runs.size() - i - 1);
        if (!orbit_cut_safe(runs[i].digit, suffix, rule, params)) continue;
        chunks.emplace_back(runs.begin() + start, runs.begin() + i + 1);
        start = i + 1;
    }
    chunks.emplace_back(runs.begin() + start, runs.end());
    return chunks;
}

const RunElement& RunChemistry::by_id(std::uint32_t id) const {
    if (id == 0 || id > elements_.size()) throw domain_error("element id out of range");
    return elements_[id - 1];
}

namespace {

std::string intern_key(const RunString& runs) {
    std::string key;
    key.reserve(runs.size() * 9);
    for (const Run& r : runs) {
        key.push_back(static_cast<char>(r.digit));
        const char* raw = reinterpret_cast<const char*>(&r.count);
        key.append(raw, sizeof(r.count));
    }
    return key;
}

} // namespace

RunChemistry discover_run_elements(const DigitString& seed, const RuleSpec& rule, bool orbit_cuts,
                                   const DiscoveryLimits& limits, const OrbitCutParams& params) {
    if (seed.empty()) throw domain_error("discovery requires a nonempty seed");
    if (seed.base() != rule.base) throw domain_error("seed base does not match rule base");

    const std::uint64_t say_budget =
        limits.max_digits > std::numeric_limits<std::uint64_t>::max() / 64
            ? std::numeric_limits<std::uint64_t>::max()
            : limits.max_digits * 64;
    auto split = [&](const RunString& rs) {
        return orbit_cuts ? split_runs_orbit(rs, rule, params) : split_runs_after_zero(rs);
    };

    std::unordered_map<std::string, std::uint32_t> index;
    std::vector<RunElement> elements;
    std::vector<unsigned> depth;
    std::deque<std::uint32_t> queue;
    auto intern = [&](RunString rs, unsigned at_depth) {
        const std::string key = intern_key(rs);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        if (elements.size() >= limits.max_elements)
            throw budget_error("element budget exceeded during discovery");
        if (total_digits(rs) > limits.max_digits)
            throw budget_error("element digit budget exceeded during discovery");
        if (at_depth > limits.max_iterations)
            throw budget_error("iteration budget exceeded during discovery");
        const std::uint32_t id = static_cast<std::uint32_t>(elements.size() + 1);
        index.emplace(key, id);
        elements.push_back(RunElement{id, std::move(rs), {}});
        depth.push_back(at_depth);
        queue.push_back(id);
        return id;
    };

    for (RunString& chunk : split(say_runs(encode_runs(seed), rule, say_budget)))
        intern(std::move(chunk), 0);
    while (!queue.empty()) {
        const std::uint32_t id = queue.front();
        queue.pop_front();
        const unsigned next_depth = depth[id - 1] + 1;
        std::vector<std::uint32_t> decay;
        for (RunString& chunk : split(say_runs(elements[id - 1].runs, rule, say_budget)))
            decay.push_back(intern(std::move(chunk), next_depth));
        elements[id - 1].decay = std::move(decay);
    }
    return RunChemistry(rule, orbit_cuts, std::move(elements));
}

SparseMatrix build_decay_matrix(const RunChemistry& chem) {
    std::vector<Triplet> entries;
    for (const RunElement& element : chem.elements()) {
        for (std::uint32_t target : element.decay)
            entries.push_back({target - 1, element.id - 1, 1});
    }
    return SparseMatrix::from_triplets(chem.size(), chem.size(), std::move(entries));
}

} // namespace looksay
