#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fuzzn/degree.hpp"
#include "fuzzn/element.hpp"
#include "fuzzn/errors.hpp"
#include "fuzzn/fuzzy_set.hpp"
#include "fuzzn/numeric.hpp"
#include "fuzzn/shapes.hpp"

namespace fuzzn {

// An evaluable level-n membership function. A level-1 function maps an
// element to a degree; a level-n function (n >= 2) maps an (element,
// degree-path of length n-1) support point to a degree.
//
// Backings:
//  - unit: constant 1 everywhere.
//  - shape: a ShapeSpec; at level 1 it consumes the element's numeric value,
//    at level >= 2 the last path degree.
//  - interval primary/secondary: one branch of the discretized primary family
//    of an interval type-2 shape, and its triangular secondary function.
//  - table: an explicit finite map from support points to degrees; the
//    declared domain is exactly the table's key set.
class MembershipFn {
public:
    using TableKey = std::pair<std::string, std::vector<double>>;
    using Table = std::map<TableKey, double>;

    static MembershipFn unit(int level) {
        MembershipFn f(level);
        f.backing_ = Unit{};
        return f;
    }

    static MembershipFn from_shape(int level, ShapeSpec shape) {
        if (shape.is_piecewise() || shape.is_step()) {
            MembershipFn f(level);
            f.backing_ = std::move(shape);
            return f;
        }
        throw ArgumentError("unsupported shape backing");
    }

    static MembershipFn interval_primary(std::shared_ptr<const IntervalType2Spec> spec,
                                         int branch) {
        if (!spec) throw ArgumentError("null interval type-2 spec");
        if (branch < 0 || branch >= spec->primary_grid()) {
            throw ArgumentError("primary branch index out of range");
        }
        MembershipFn f(1);
        f.backing_ = IntervalPrimary{std::move(spec), branch};
        return f;
    }

    static MembershipFn interval_secondary(std::shared_ptr<const IntervalType2Spec> spec) {
        if (!spec) throw ArgumentError("null interval type-2 spec");
        MembershipFn f(2);
        f.backing_ = IntervalSecondary{std::move(spec)};
        return f;
    }

    static MembershipFn from_table(int level, Table table) {
        MembershipFn f(level);
        for (const auto& [key, degree] : table) {
            if (key.second.size() != static_cast<std::size_t>(level - 1)) {
                throw ArgumentError("table key path length does not match function level");
            }
            if (!is_degree(degree)) {
                throw ArgumentError("table degree out of range [0,1]: " + render_number(degree));
            }
        }
        f.backing_ = std::make_shared<const Table>(std::move(table));
        return f;
    }

    int level() const { return level_; }

    bool defined_at(const Element& x, std::span<const double> path) const {
        if (path.size() != static_cast<std::size_t>(level_ - 1)) return false;
        if (const auto* table = std::get_if<std::shared_ptr<const Table>>(&backing_)) {
            return (*table)->contains({x.label, {path.begin(), path.end()}});
        }
        if (const auto* shape = std::get_if<ShapeSpec>(&backing_)) {
            if (level_ == 1) {
                if (!x.value) return false;
                const auto& r = shape->range();
                return !r || (*x.value >= r->min && *x.value <= r->max);
            }
            return true;
        }
        if (const auto* prim = std::get_if<IntervalPrimary>(&backing_)) {
            if (!x.value) return false;
            const auto& lo_range = prim->spec->lower().range();
            return !lo_range || (*x.value >= lo_range->min && *x.value <= lo_range->max);
        }
        if (std::holds_alternative<IntervalSecondary>(backing_)) {
            return x.value.has_value();
        }
        return true;  // unit
    }

    Degree evaluate(const Element& x, std::span<const double> path) const {
        if (path.size() != static_cast<std::size_t>(level_ - 1)) {
            throw ArgumentError("degree path length " + std::to_string(path.size()) +
                                " does not match function level " + std::to_string(level_));
        }
        if (std::holds_alternative<Unit>(backing_)) return Degree(1.0);
        if (const auto* shape = std::get_if<ShapeSpec>(&backing_)) {
            double input = 0.0;
            if (level_ == 1) {
                if (!x.value) {
                    throw DomainError("element '" + x.label + "' has no numeric value");
                }
                input = *x.value;
            } else {
                input = path.back();
            }
            return eval_shape(*shape, input);
        }
        if (const auto* prim = std::get_if<IntervalPrimary>(&backing_)) {
            if (!x.value) throw DomainError("element '" + x.label + "' has no numeric value");
            auto points = prim->spec->primary_points(*x.value);
            // A degenerate interval collapses every branch onto its single
            // primary point.
            std::size_t g = std::min(static_cast<std::size_t>(prim->branch), points.size() - 1);
            return Degree(points[g]);
        }
        if (const auto* sec = std::get_if<IntervalSecondary>(&backing_)) {
            if (!x.value) throw DomainError("element '" + x.label + "' has no numeric value");
            return eval_interval_type2(*sec->spec, *x.value, Degree(path.back()));
        }
        const auto& table = std::get<std::shared_ptr<const Table>>(backing_);
        auto it = table->find({x.label, {path.begin(), path.end()}});
        if (it == table->end()) {
            throw DomainError("support point ('" + x.label + "') outside table domain");
        }
        return Degree(it->second);
    }

private:
    struct Unit {};
    struct IntervalPrimary {
        std::shared_ptr<const IntervalType2Spec> spec;
        int branch = 0;
    };
    struct IntervalSecondary {
        std::shared_ptr<const IntervalType2Spec> spec;
    };

    explicit MembershipFn(int level) : level_(level) {
        if (level < 1) {
            throw ArgumentError("membership function level must be >= 1, got " +
                                std::to_string(level));
        }
    }

    int level_ = 1;
    std::variant<Unit, ShapeSpec, IntervalPrimary, IntervalSecondary,
                 std::shared_ptr<const Table>>
        backing_ = Unit{};
};

inline Degree eval_type1(const MembershipFn& f, const Element& x) {
    if (f.level() != 1) {
        throw ArgumentError("eval_type1 needs a level-1 function, got level " +
                            std::to_string(f.level()));
    }
    return f.evaluate(x, {});
}

// A full evaluation stack for a type-n set: levels[l-1] holds the level-l
// family. Level 1 functions may be partial over the element domain (ragged
// branching); every function at level >= 2 must accept every support point
// produced below it, and the top level holds exactly one function.
struct MfStack {
    std::vector<std::vector<MembershipFn>> levels;

    int depth() const { return static_cast<int>(levels.size()); }

    static MfStack unit_stack(int n) {
        if (n < 1) throw ArgumentError("stack depth must be >= 1, got " + std::to_string(n));
        MfStack s;
        for (int l = 1; l <= n; ++l) s.levels.push_back({MembershipFn::unit(l)});
        return s;
    }

    // The discretized stack of an interval type-2 shape: primary_grid level-1
    // branches plus the triangular secondary on top.
    static MfStack interval_type2(IntervalType2Spec spec) {
        auto shared = std::make_shared<const IntervalType2Spec>(std::move(spec));
        MfStack s;
        s.levels.resize(2);
        for (int g = 0; g < shared->primary_grid(); ++g) {
            s.levels[0].push_back(MembershipFn::interval_primary(shared, g));
        }
        s.levels[1].push_back(MembershipFn::interval_secondary(shared));
        return s;
    }

    void check() const {
        if (levels.empty()) throw ArgumentError("empty membership-function stack");
        for (std::size_t l = 0; l < levels.size(); ++l) {
            if (levels[l].empty()) {
                throw ArgumentError("no functions at stack level " + std::to_string(l + 1));
            }
            for (const auto& f : levels[l]) {
                if (f.level() != static_cast<int>(l + 1)) {
                    throw ArgumentError("function of level " + std::to_string(f.level()) +
                                        " placed at stack level " + std::to_string(l + 1));
                }
            }
        }
        if (levels.back().size() != 1) {
            throw ArgumentError("the top stack level must hold exactly one function");
        }
    }
};

// Evaluates the stack over one element: every degree path the level-1..n-1
// families produce at x (distinct paths only), each carrying its top degree.
inline std::vector<RawEntry> eval_stack_at(const MfStack& stack, const Element& x) {
    stack.check();
    const int n = stack.depth();
    std::vector<std::vector<double>> paths{{}};
    for (int l = 1; l <= n - 1; ++l) {
        std::vector<std::vector<double>> next;
        for (const auto& path : paths) {
            bool extended = false;
            for (const auto& f : stack.levels[static_cast<std::size_t>(l - 1)]) {
                if (!f.defined_at(x, path)) {
                    if (l == 1) continue;  // ragged level-1 branching
                    throw InconsistentStack("level-" + std::to_string(l) +
                                            " function rejects a produced support point of '" +
                                            x.label + "'");
                }
                auto d = f.evaluate(x, path).value();
                auto ext = path;
                ext.push_back(d);
                next.push_back(std::move(ext));
                extended = true;
            }
            if (!extended) {
                throw DomainError("element '" + x.label + "' is outside the level-1 domain");
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        paths = std::move(next);
    }
    const MembershipFn& top = stack.levels.back().front();
    std::vector<RawEntry> entries;
    entries.reserve(paths.size());
    for (auto& path : paths) {
        if (!top.defined_at(x, path)) {
            if (n == 1) {
                throw DomainError("element '" + x.label + "' is outside the level-1 domain");
            }
            throw InconsistentStack("top-level function rejects a produced support point of '" +
                                    x.label + "'");
        }
        double t = top.evaluate(x, path).value();
        entries.push_back({x, std::move(path), t});
    }
    return entries;
}

// Materializes the stack over a whole element domain.
inline TypeNFuzzySet materialize(std::string name, const MfStack& stack,
                                 std::span<const Element> domain) {
    std::vector<RawEntry> raw;
    for (const Element& x : domain) {
        auto part = eval_stack_at(stack, x);
        raw.insert(raw.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return TypeNFuzzySet::create(std::move(name), stack.depth(), raw);
}

// The full set restricted to one element.
inline TypeNFuzzySet eval_typen(const MfStack& stack, const Element& x) {
    return materialize(x.label, stack, std::span<const Element>(&x, 1));
}

}  // namespace fuzzn
