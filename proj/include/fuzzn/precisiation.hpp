#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzn/errors.hpp"
#include "fuzzn/fuzzy_set.hpp"
#include "fuzzn/membership.hpp"
#include "fuzzn/worlds.hpp"

namespace fuzzn {

enum class EventTiming { before, after };

inline std::string_view to_string(EventTiming t) {
    return t == EventTiming::before ? "before" : "after";
}

// An event over a possible world: measurable realizations are precise in
// value, non-measurable ones are not; a measurable event that has already
// happened carries its realized outcome.
struct EventSpec {
    std::string name;
    bool measurable = true;
    EventTiming timing = EventTiming::before;
    std::string world;                        // world name
    std::optional<std::string> realization;   // outcome label

    void check() const {
        if (measurable && timing == EventTiming::after && !realization) {
            throw SpecError("event '" + name +
                            "' is measurable and realized but names no realization");
        }
    }
};

enum class LogicRecommendation { probabilistic, fuzzy, either };

inline std::string_view to_string(LogicRecommendation r) {
    switch (r) {
        case LogicRecommendation::probabilistic: return "probabilistic";
        case LogicRecommendation::fuzzy: return "fuzzy";
        default: return "either";
    }
}

// The folds of uncertainty an event carries and which logic handles them.
struct UncertaintyReport {
    int folds = 0;
    std::vector<std::string> strata;  // ordered stratum descriptions
    LogicRecommendation logic = LogicRecommendation::either;
};

// Decision table over (measurable, timing):
//   measurable, before      -> 1 fold (which realization), probabilistic
//   non-measurable, before  -> 2 folds (which realization + where in the
//                              world set), fuzzy
//   measurable, after       -> 0 folds, position exactly known, either
//   non-measurable, after   -> 1 fold (position only), fuzzy
inline UncertaintyReport classify_event(const EventSpec& e) {
    e.check();
    static const std::string which = "which realization occurs";
    static const std::string where = "where the realization lies in the world set";
    UncertaintyReport r;
    if (e.timing == EventTiming::before) {
        if (e.measurable) {
            r.strata = {which};
            r.logic = LogicRecommendation::probabilistic;
        } else {
            r.strata = {which, where};
            r.logic = LogicRecommendation::fuzzy;
        }
    } else if (!e.measurable) {
        r.strata = {where};
        r.logic = LogicRecommendation::fuzzy;
    }
    r.folds = static_cast<int>(r.strata.size());
    return r;
}

// A concept made precise in meaning: the subset of the world's outcome space
// it occupies, with the degree of occupying each position.
struct PrecisiatedConcept {
    std::string concept_name;
    Type1FuzzySet subset;
    std::string source_mf;

    // All-degrees-1 subsets are crisp; anything graded is fuzzy.
    bool crisp() const {
        for (const auto& e : subset.entries()) {
            if (e.degree != 1.0) return false;
        }
        return true;
    }
};

// Maps an imprecise-in-value concept onto the world's outcome space via a
// level-1 membership function. Zero-degree outcomes are excluded from the
// subset unless include_zero is set.
inline PrecisiatedConcept precisiate(std::string concept_name, const MembershipFn& mf,
                                     const WorldModel& world, std::string mf_name = "",
                                     bool include_zero = false) {
    if (mf.level() != 1) {
        throw ArgumentError("precisiation needs a level-1 membership function, got level " +
                            std::to_string(mf.level()));
    }
    std::vector<Type1FuzzySet::Entry> entries;
    for (const Element& outcome : world.outcome_space().elements()) {
        double d = eval_type1(mf, outcome).value();
        if (d > 0.0 || include_zero) entries.push_back({outcome, d});
    }
    PrecisiatedConcept c;
    c.subset = Type1FuzzySet::create(concept_name, std::move(entries));
    c.concept_name = std::move(concept_name);
    c.source_mf = std::move(mf_name);
    return c;
}

// Where a realized event sits in its world: an exact outcome when the
// realization is measurable, otherwise the precisiated subset embedding all
// its possible positions.
struct Realization {
    std::optional<Element> exact;
    std::optional<PrecisiatedConcept> subset;
};

inline Realization locate_realization(const EventSpec& e, const WorldModel& world,
                                      const MembershipFn* mf, std::string mf_name = "") {
    e.check();
    if (e.timing != EventTiming::after) {
        throw SpecError("event '" + e.name + "' has not been realized yet");
    }
    Realization r;
    if (e.measurable) {
        const Element* outcome = world.outcome_space().find(*e.realization);
        if (!outcome) {
            throw SpecError("realization '" + *e.realization + "' is not an outcome of world '" +
                            world.name() + "'");
        }
        r.exact = *outcome;
        return r;
    }
    if (!mf) {
        throw SpecError("locating a non-measurable realization needs a membership function");
    }
    r.subset = precisiate(e.name, *mf, world, std::move(mf_name));
    return r;
}

}  // namespace fuzzn
