#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzn/degree.hpp"
#include "fuzzn/element.hpp"
#include "fuzzn/errors.hpp"
#include "fuzzn/numeric.hpp"

namespace fuzzn {

// One support point of a type-n set before validation: the element, the
// degrees at levels 1..n-1, and the level-n degree. For n = 1 the path is
// empty.
struct RawEntry {
    Element element;
    std::vector<double> path;
    double top = 0.0;
};

struct ValidationFinding {
    std::string code;
    std::string message;
    // Index of the offending entry in the validated sequence; npos for
    // set-level findings.
    std::size_t entry = npos;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

using ValidationReport = std::vector<ValidationFinding>;

// Checks every type-n invariant on raw entry data: level >= 1, path lengths
// equal to level-1, all degrees in [0,1], consistent element attributes, and
// pairwise distinct (element, path) support points. Findings are the output;
// an empty report means the data is admissible.
inline ValidationReport validate(int level, std::span<const RawEntry> entries) {
    ValidationReport report;
    if (level < 1) {
        report.push_back({"LEVEL_RANGE", "set level must be >= 1, got " + std::to_string(level),
                          ValidationFinding::npos});
        return report;
    }
    std::map<std::string, Element> seen_elements;
    std::set<std::pair<std::string, std::vector<double>>> seen_support;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const RawEntry& e = entries[i];
        if (e.path.size() != static_cast<std::size_t>(level - 1)) {
            report.push_back({"PATH_LENGTH",
                              "entry " + std::to_string(i) + " ('" + e.element.label +
                                  "') has a degree path of length " +
                                  std::to_string(e.path.size()) + ", expected " +
                                  std::to_string(level - 1),
                              i});
            continue;
        }
        for (std::size_t l = 0; l < e.path.size(); ++l) {
            if (!is_degree(e.path[l])) {
                report.push_back({"DEGREE_RANGE",
                                  "entry " + std::to_string(i) + " level " + std::to_string(l + 1) +
                                      " degree out of range [0,1]: " + render_number(e.path[l]),
                                  i});
            }
        }
        if (!is_degree(e.top)) {
            report.push_back({"DEGREE_RANGE",
                              "entry " + std::to_string(i) + " top degree out of range [0,1]: " +
                                  render_number(e.top),
                              i});
        }
        auto [it, inserted] = seen_elements.emplace(e.element.label, e.element);
        if (!inserted && it->second != e.element) {
            report.push_back({"ELEMENT_CONFLICT",
                              "element '" + e.element.label +
                                  "' appears with conflicting value or unit",
                              i});
        }
        if (!seen_support.emplace(e.element.label, e.path).second) {
            report.push_back({"DUP_SUPPORT",
                              "duplicate support point for element '" + e.element.label + "'",
                              i});
        }
    }
    return report;
}

// A finite-support type-n fuzzy set. Entries are kept in canonical order
// (element index, then lexicographic degree path), each support point carries
// exactly one top degree, and every stored degree is in [0,1]. Instances are
// immutable after construction.
class TypeNFuzzySet {
public:
    struct Entry {
        std::size_t element = 0;  // index into support()
        std::vector<double> path;
        double top = 0.0;
    };

    TypeNFuzzySet() = default;

    // Validates and canonicalizes; element index order is the order of first
    // appearance in `entries`.
    static TypeNFuzzySet create(std::string name, int level, std::span<const RawEntry> entries) {
        ValidationReport report = validate(level, entries);
        if (!report.empty()) {
            throw ArgumentError("invalid type-" + std::to_string(level) + " set '" + name +
                                "': " + report.front().message);
        }
        TypeNFuzzySet f;
        f.name_ = std::move(name);
        f.level_ = level;
        for (const RawEntry& e : entries) {
            std::size_t idx = 0;
            for (; idx < f.support_.size(); ++idx) {
                if (f.support_[idx].label == e.element.label) break;
            }
            if (idx == f.support_.size()) f.support_.push_back(e.element);
            f.entries_.push_back({idx, e.path, e.top});
        }
        std::sort(f.entries_.begin(), f.entries_.end(), [](const Entry& a, const Entry& b) {
            if (a.element != b.element) return a.element < b.element;
            return a.path < b.path;
        });
        return f;
    }

    const std::string& name() const { return name_; }
    int level() const { return level_; }
    const std::vector<Element>& support() const { return support_; }
    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    const Element& element_of(const Entry& e) const { return support_[e.element]; }

    std::optional<std::size_t> support_index(std::string_view label) const {
        for (std::size_t i = 0; i < support_.size(); ++i) {
            if (support_[i].label == label) return i;
        }
        return std::nullopt;
    }

    // Entries of one element, in canonical (path-ascending) order.
    std::vector<const Entry*> entries_of(std::size_t element) const {
        std::vector<const Entry*> out;
        for (const Entry& e : entries_) {
            if (e.element == element) out.push_back(&e);
        }
        return out;
    }

    std::vector<RawEntry> raw_entries() const {
        std::vector<RawEntry> out;
        out.reserve(entries_.size());
        for (const Entry& e : entries_) out.push_back({support_[e.element], e.path, e.top});
        return out;
    }

    // Re-checks the stored data; empty by construction.
    ValidationReport validate() const {
        auto raw = raw_entries();
        return fuzzn::validate(level_, raw);
    }

private:
    std::string name_;
    int level_ = 1;
    std::vector<Element> support_;
    std::vector<Entry> entries_;
};

// A type-1 fuzzy set: (element, degree) pairs with one degree per element.
class Type1FuzzySet {
public:
    struct Entry {
        Element element;
        double degree = 0.0;
    };

    Type1FuzzySet() = default;

    static Type1FuzzySet create(std::string name, std::vector<Entry> entries) {
        std::vector<RawEntry> raw;
        raw.reserve(entries.size());
        for (const Entry& e : entries) raw.push_back({e.element, {}, e.degree});
        return from_typen(TypeNFuzzySet::create(std::move(name), 1, raw));
    }

    const std::string& name() const { return name_; }
    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    TypeNFuzzySet to_typen() const {
        std::vector<RawEntry> raw;
        raw.reserve(entries_.size());
        for (const Entry& e : entries_) raw.push_back({e.element, {}, e.degree});
        return TypeNFuzzySet::create(name_, 1, raw);
    }

    static Type1FuzzySet from_typen(const TypeNFuzzySet& f) {
        if (f.level() != 1) {
            throw LevelError("expected a level-1 set, got level " + std::to_string(f.level()));
        }
        Type1FuzzySet t;
        t.name_ = f.name();
        for (const auto& e : f.entries()) t.entries_.push_back({f.element_of(e), e.top});
        return t;
    }

private:
    std::string name_;
    std::vector<Entry> entries_;
};

// Re-reads a crisp set as a type-n set: one entry per element, every degree
// at every level equal to 1.
inline TypeNFuzzySet promote_crisp(const CrispSet& c, int level) {
    if (level < 1) {
        throw ArgumentError("promotion level must be >= 1, got " + std::to_string(level));
    }
    std::vector<RawEntry> raw;
    raw.reserve(c.size());
    for (const Element& e : c.elements()) {
        raw.push_back({e, std::vector<double>(static_cast<std::size_t>(level - 1), 1.0), 1.0});
    }
    return TypeNFuzzySet::create(c.name(), level, raw);
}

// Per-element, per-level branching counts m_{i,l} (the number of distinct
// length-l degree prefixes under element i) and the per-level champions
// attaining the maximum count, ties broken by smallest element index.
class BranchProfile {
public:
    struct Champion {
        std::size_t element = 0;
        std::size_t count = 0;
    };

    BranchProfile(std::size_t elements, int levels)
        : counts_(elements, std::vector<std::size_t>(static_cast<std::size_t>(levels), 0)),
          champions_(static_cast<std::size_t>(levels)) {}

    // m_{i,l} for 1 <= l <= levels().
    std::size_t count(std::size_t element, int level) const {
        return counts_[element][static_cast<std::size_t>(level - 1)];
    }

    const Champion& champion(int level) const {
        return champions_[static_cast<std::size_t>(level - 1)];
    }

    // Number of profiled levels: n-1 for a level-n set (none for n = 1).
    int levels() const { return static_cast<int>(champions_.size()); }
    std::size_t elements() const { return counts_.size(); }

private:
    friend BranchProfile branching_profile(const TypeNFuzzySet&);
    std::vector<std::vector<std::size_t>> counts_;
    std::vector<Champion> champions_;
};

inline BranchProfile branching_profile(const TypeNFuzzySet& f) {
    const int levels = f.level() - 1;
    BranchProfile profile(f.support().size(), levels);
    for (std::size_t i = 0; i < f.support().size(); ++i) {
        auto entries = f.entries_of(i);
        for (int l = 1; l <= levels; ++l) {
            // Entries are path-sorted, so distinct length-l prefixes are
            // adjacent-change counts.
            std::size_t distinct = 0;
            const std::vector<double>* prev = nullptr;
            std::vector<double> prev_prefix;
            for (const auto* e : entries) {
                std::vector<double> prefix(e->path.begin(), e->path.begin() + l);
                if (prev == nullptr || prefix != prev_prefix) {
                    ++distinct;
                    prev_prefix = std::move(prefix);
                    prev = &prev_prefix;
                }
            }
            profile.counts_[i][static_cast<std::size_t>(l - 1)] = distinct;
        }
    }
    for (int l = 1; l <= levels; ++l) {
        BranchProfile::Champion best;
        for (std::size_t i = 0; i < profile.counts_.size(); ++i) {
            std::size_t c = profile.counts_[i][static_cast<std::size_t>(l - 1)];
            if (c > best.count) best = {i, c};
        }
        profile.champions_[static_cast<std::size_t>(l - 1)] = best;
    }
    return profile;
}

// Reconstructs the domain of a level-n set (n >= 2) as m_k sets of level n-1,
// k the champion at level n-1: constituent j holds, for every element with at
// least j support paths, its j-th path (canonical order) with the top degree
// stripped. The support union of the constituents equals the top-stripped
// support of the input.
inline std::vector<TypeNFuzzySet> domain_typen(const TypeNFuzzySet& f) {
    if (f.level() < 2) {
        throw LevelError("domain reconstruction needs a set of level >= 2, got level " +
                         std::to_string(f.level()));
    }
    std::size_t branches = 0;
    std::vector<std::vector<const TypeNFuzzySet::Entry*>> per_element;
    per_element.reserve(f.support().size());
    for (std::size_t i = 0; i < f.support().size(); ++i) {
        per_element.push_back(f.entries_of(i));
        branches = std::max(branches, per_element.back().size());
    }
    std::vector<TypeNFuzzySet> constituents;
    constituents.reserve(branches);
    for (std::size_t j = 0; j < branches; ++j) {
        std::vector<RawEntry> raw;
        for (std::size_t i = 0; i < per_element.size(); ++i) {
            if (j >= per_element[i].size()) continue;
            const auto* e = per_element[i][j];
            std::vector<double> prefix(e->path.begin(), e->path.end() - 1);
            raw.push_back({f.support()[i], std::move(prefix), e->path.back()});
        }
        constituents.push_back(TypeNFuzzySet::create(
            f.name() + "#" + std::to_string(j + 1), f.level() - 1, raw));
    }
    return constituents;
}

struct SlicePair {
    Degree primary;
    Degree secondary;
};

// All (primary, secondary) pairs of one element of a type-2 set, ascending by
// primary degree.
inline std::vector<SlicePair> vertical_slice(const TypeNFuzzySet& f, std::string_view label) {
    if (f.level() != 2) {
        throw LevelError("vertical slice is defined on level-2 sets, got level " +
                         std::to_string(f.level()));
    }
    auto idx = f.support_index(label);
    if (!idx) throw NotInSupport("element '" + std::string(label) + "' not in support");
    std::vector<SlicePair> pairs;
    for (const auto* e : f.entries_of(*idx)) {
        pairs.push_back({Degree(e->path[0]), Degree(e->top)});
    }
    // Canonical entry order is already ascending in the primary degree.
    return pairs;
}

// One stratum of the n-fold uncertainty interpretation of a type-n set.
struct LadderStratum {
    int level = 1;
    // Count of distinct level-l degree values attached to the element.
    std::size_t distinct_degrees = 0;
    Degree min_degree;
    Degree max_degree;
    // What membership the level-l degrees quantify.
    std::string quantifies;
};

// The n uncertainty strata of an element's membership: strata 1..n-1 cover
// membership in the level-l constituent sets, stratum n covers membership in
// the set itself.
inline std::vector<LadderStratum> uncertainty_ladder(const TypeNFuzzySet& f,
                                                     std::string_view label) {
    auto idx = f.support_index(label);
    if (!idx) throw NotInSupport("element '" + std::string(label) + "' not in support");
    auto entries = f.entries_of(*idx);
    std::vector<LadderStratum> ladder;
    for (int l = 1; l <= f.level(); ++l) {
        std::set<double> values;
        for (const auto* e : entries) {
            values.insert(l == f.level() ? e->top : e->path[static_cast<std::size_t>(l - 1)]);
        }
        LadderStratum s;
        s.level = l;
        s.distinct_degrees = values.size();
        s.min_degree = Degree(*values.begin());
        s.max_degree = Degree(*values.rbegin());
        s.quantifies = l == f.level()
                           ? "membership in " + f.name()
                           : "membership in the level-" + std::to_string(l) + " constituent sets";
        ladder.push_back(std::move(s));
    }
    return ladder;
}

}  // namespace fuzzn
