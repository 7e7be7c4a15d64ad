#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzn/errors.hpp"

namespace fuzzn {

// A domain object: a text label plus an optional numeric attribute (an age,
// a temperature, ...) with its unit.
struct Element {
    std::string label;
    std::optional<double> value;
    std::string unit;

    friend bool operator==(const Element&, const Element&) = default;
};

// Classical set: an ordered finite sequence of elements with pairwise
// distinct labels.
class CrispSet {
public:
    CrispSet() = default;

    CrispSet(std::string name, std::vector<Element> elements)
        : name_(std::move(name)), elements_(std::move(elements)) {
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            for (std::size_t j = i + 1; j < elements_.size(); ++j) {
                if (elements_[i].label == elements_[j].label) {
                    throw ArgumentError("duplicate element label '" + elements_[i].label +
                                        "' in crisp set '" + name_ + "'");
                }
            }
        }
    }

    const std::string& name() const { return name_; }
    const std::vector<Element>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    const Element* find(std::string_view label) const {
        for (const auto& e : elements_) {
            if (e.label == label) return &e;
        }
        return nullptr;
    }

    std::optional<std::size_t> index_of(std::string_view label) const {
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (elements_[i].label == label) return i;
        }
        return std::nullopt;
    }

private:
    std::string name_;
    std::vector<Element> elements_;
};

}  // namespace fuzzn
