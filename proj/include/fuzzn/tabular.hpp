#pragma once

#include <string>
#include <vector>

#include "fuzzn/fuzzy_set.hpp"
#include "fuzzn/numeric.hpp"
#include "fuzzn/precisiation.hpp"
#include "fuzzn/shapes.hpp"
#include "fuzzn/worlds.hpp"

// Flat tabular exports: comma-separated, '.' decimal point, header row first,
// one data row per line. Numbers use the shortest exact decimal rendering so
// identical inputs always serialize to identical bytes.

namespace fuzzn {

inline std::string element_value_cell(const Element& e) {
    return e.value ? render_number(*e.value) : std::string();
}

// Header element,value,d1,...,d{n-1},degree; one row per support entry in
// canonical order.
inline std::string set_table(const TypeNFuzzySet& f) {
    std::string out = "element,value";
    for (int l = 1; l < f.level(); ++l) out += ",d" + std::to_string(l);
    out += ",degree\n";
    for (const auto& e : f.entries()) {
        const Element& x = f.element_of(e);
        out += x.label + "," + element_value_cell(x);
        for (double d : e.path) out += "," + render_number(d);
        out += "," + render_number(e.top) + "\n";
    }
    return out;
}

inline std::string type1_table(const Type1FuzzySet& f) {
    std::string out = "element,value,degree\n";
    for (const auto& e : f.entries()) {
        out += e.element.label + "," + element_value_cell(e.element) + "," +
               render_number(e.degree) + "\n";
    }
    return out;
}

// The level-(n-1) constituents of a domain reconstruction, tagged with their
// 1-based constituent index.
inline std::string domain_table(const std::vector<TypeNFuzzySet>& constituents) {
    int level = constituents.empty() ? 1 : constituents.front().level();
    std::string out = "constituent,element,value";
    for (int l = 1; l < level; ++l) out += ",d" + std::to_string(l);
    out += ",degree\n";
    for (std::size_t j = 0; j < constituents.size(); ++j) {
        for (const auto& e : constituents[j].entries()) {
            const Element& x = constituents[j].element_of(e);
            out += std::to_string(j + 1) + "," + x.label + "," + element_value_cell(x);
            for (double d : e.path) out += "," + render_number(d);
            out += "," + render_number(e.top) + "\n";
        }
    }
    return out;
}

inline std::string slice_table(const std::vector<SlicePair>& pairs) {
    std::string out = "primary,secondary\n";
    for (const auto& p : pairs) {
        out += render_number(p.primary.value()) + "," + render_number(p.secondary.value()) + "\n";
    }
    return out;
}

inline std::string tally_table(const TallyResult& t) {
    std::string out = "set,raw,normalized\n";
    for (std::size_t i = 0; i < t.sets.size(); ++i) {
        out += t.sets[i] + "," + std::to_string(t.raw[i]) + "," +
               render_number(t.normalized[i]) + "\n";
    }
    return out;
}

inline std::string sample_table(const std::vector<ShapeSample>& rows) {
    std::string out = "input,degree\n";
    for (const auto& r : rows) {
        out += render_number(r.input) + "," + render_number(r.degree.value()) + "\n";
    }
    return out;
}

inline std::string sample_table(const std::vector<IntervalSample>& rows) {
    std::string out = "input,primary,secondary\n";
    for (const auto& r : rows) {
        out += render_number(r.input) + "," + render_number(r.primary.value()) + "," +
               render_number(r.secondary.value()) + "\n";
    }
    return out;
}

}  // namespace fuzzn
