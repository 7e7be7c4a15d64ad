#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzn/element.hpp"
#include "fuzzn/errors.hpp"

namespace fuzzn {

enum class WorldKind { crisp, fuzzy };

inline std::string_view to_string(WorldKind k) {
    return k == WorldKind::crisp ? "crisp" : "fuzzy";
}

// A possible world: an outcome space covered by named member sets. Crisp
// worlds partition the outcomes (no overlap, no gap); fuzzy worlds only
// require every outcome to land in at least one member set, overlaps
// permitted.
class WorldModel {
public:
    WorldModel() = default;

    static WorldModel create(std::string name, WorldKind kind, CrispSet outcomes,
                             std::vector<std::pair<std::string, std::vector<std::string>>>
                                 member_sets) {
        WorldModel w;
        w.name_ = std::move(name);
        w.kind_ = kind;
        w.outcomes_ = std::move(outcomes);
        w.landing_.assign(w.outcomes_.size(), {});
        for (const auto& [set_name, members] : member_sets) {
            for (const auto& existing : w.set_names_) {
                if (existing == set_name) {
                    throw ArgumentError("duplicate member set '" + set_name + "' in world '" +
                                        w.name_ + "'");
                }
            }
            std::size_t set_idx = w.set_names_.size();
            w.set_names_.push_back(set_name);
            for (const auto& label : members) {
                auto idx = w.outcomes_.index_of(label);
                if (!idx) {
                    throw ArgumentError("member set '" + set_name + "' references unknown outcome '" +
                                        label + "'");
                }
                auto& lands = w.landing_[*idx];
                if (std::find(lands.begin(), lands.end(), set_idx) == lands.end()) {
                    lands.push_back(set_idx);
                }
            }
        }
        for (std::size_t i = 0; i < w.outcomes_.size(); ++i) {
            std::size_t n = w.landing_[i].size();
            const std::string& label = w.outcomes_.elements()[i].label;
            if (kind == WorldKind::crisp) {
                if (n == 0) {
                    throw PartitionError("outcome '" + label +
                                         "' lands in no member set of crisp world '" + w.name_ +
                                         "'");
                }
                if (n > 1) {
                    throw PartitionError("outcome '" + label +
                                         "' lands in " + std::to_string(n) +
                                         " member sets of crisp world '" + w.name_ + "'");
                }
            } else if (n == 0) {
                throw CoverageError("outcome '" + label + "' lands in no member set of world '" +
                                    w.name_ + "'");
            }
        }
        return w;
    }

    const std::string& name() const { return name_; }
    WorldKind kind() const { return kind_; }
    const CrispSet& outcome_space() const { return outcomes_; }
    const std::vector<std::string>& set_names() const { return set_names_; }
    std::size_t set_count() const { return set_names_.size(); }

    // Indices of the member sets the outcome lands in.
    const std::vector<std::size_t>& sets_of(std::size_t outcome) const {
        return landing_[outcome];
    }

    bool lands_in(std::size_t outcome, std::size_t set) const {
        const auto& lands = landing_[outcome];
        return std::find(lands.begin(), lands.end(), set) != lands.end();
    }

private:
    std::string name_;
    WorldKind kind_ = WorldKind::crisp;
    CrispSet outcomes_;
    std::vector<std::string> set_names_;
    std::vector<std::vector<std::size_t>> landing_;  // outcome -> member set indices
};

// A replayable experiment log: one outcome label per draw.
struct OutcomeLog {
    std::vector<std::string> draws;

    std::size_t size() const { return draws.size(); }
};

// Reads a log: one outcome label per line, blank lines ignored.
inline OutcomeLog read_outcome_log(std::istream& in) {
    OutcomeLog log;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t");
        log.draws.push_back(line.substr(begin, end - begin + 1));
    }
    return log;
}

inline OutcomeLog read_outcome_log_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open log file '" + path + "'");
    return read_outcome_log(in);
}

// Raw and normalized per-set experiment counts. Normalization divides the
// integer counts by the experiment count in a single division each, so exact
// properties (sums, comparisons against 1) are decided on the integers.
struct TallyResult {
    std::vector<std::string> sets;        // world order
    std::vector<std::uint64_t> raw;       // count per set
    std::uint64_t experiments = 0;        // N
    std::uint64_t raw_sum = 0;
    std::vector<double> normalized;       // raw / N
    double normalized_sum = 0.0;          // raw_sum / N
};

// Counts, for every member set, the draws landing in it; a draw whose
// outcome lies in an overlap increments every set it lands in.
inline TallyResult tally(const WorldModel& world, const OutcomeLog& log) {
    if (log.draws.empty()) throw EmptyLog("outcome log holds no experiments");
    TallyResult t;
    t.sets = world.set_names();
    t.raw.assign(world.set_count(), 0);
    t.experiments = log.draws.size();
    for (const auto& label : log.draws) {
        auto idx = world.outcome_space().index_of(label);
        if (!idx) {
            throw ArgumentError("draw '" + label + "' is not in the outcome space of world '" +
                                world.name() + "'");
        }
        for (std::size_t set : world.sets_of(*idx)) {
            ++t.raw[set];
            ++t.raw_sum;
        }
    }
    double n = static_cast<double>(t.experiments);
    t.normalized.reserve(t.raw.size());
    for (std::uint64_t r : t.raw) t.normalized.push_back(static_cast<double>(r) / n);
    t.normalized_sum = static_cast<double>(t.raw_sum) / n;
    return t;
}

enum class SumRelation { below_one, exactly_one, above_one };

inline std::string_view relation_symbol(SumRelation r) {
    switch (r) {
        case SumRelation::below_one: return "<";
        case SumRelation::exactly_one: return "=";
        default: return ">";
    }
}

struct SumLawVerdict {
    WorldKind kind = WorldKind::crisp;
    double sum = 0.0;
    SumRelation relation = SumRelation::exactly_one;
    // Crisp tallies must normalize to 1 (within 1e-12); fuzzy verdicts only
    // classify the sum and always pass.
    bool pass = true;
};

inline constexpr double kSumLawTolerance = 1e-12;

inline SumLawVerdict sum_law_check(const TallyResult& t, WorldKind kind) {
    SumLawVerdict v;
    v.kind = kind;
    v.sum = t.normalized_sum;
    // The relation is decided on the exact integer counts.
    if (t.raw_sum < t.experiments) {
        v.relation = SumRelation::below_one;
    } else if (t.raw_sum > t.experiments) {
        v.relation = SumRelation::above_one;
    } else {
        v.relation = SumRelation::exactly_one;
    }
    if (kind == WorldKind::crisp) {
        v.pass = std::abs(v.sum - 1.0) <= kSumLawTolerance &&
                 v.relation == SumRelation::exactly_one;
    }
    return v;
}

}  // namespace fuzzn
