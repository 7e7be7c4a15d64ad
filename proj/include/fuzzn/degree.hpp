#pragma once

#include <string>

#include "fuzzn/errors.hpp"

namespace fuzzn {

// A membership degree in [0,1]. Construction rejects anything outside the
// range, including NaN; negative zero is normalized so rendering stays
// canonical.
class Degree {
public:
    constexpr Degree() = default;

    explicit Degree(double v) : value_(checked(v)) {}

    double value() const { return value_; }

    friend bool operator==(Degree a, Degree b) { return a.value_ == b.value_; }
    friend auto operator<=>(Degree a, Degree b) { return a.value_ <=> b.value_; }

private:
    static double checked(double v) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw ArgumentError("degree out of range [0,1]: " + std::to_string(v));
        }
        return v == 0.0 ? 0.0 : v;
    }

    double value_ = 0.0;
};

// True iff v is a representable degree; the check used before constructing
// Degree on paths where a softer failure (diagnostic, finding) is wanted.
inline bool is_degree(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace fuzzn
