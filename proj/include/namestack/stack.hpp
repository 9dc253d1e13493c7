// The stack value: ordered display names, one shared opacity, and the two
// reveal strings (hover tooltip, copy/paste replacement text). Also the
// overlap-darkening model: n superimposed layers of alpha a composite
// source-over to 1-(1-a)^n.
#ifndef NAMESTACK_STACK_HPP
#define NAMESTACK_STACK_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "namestack/ratio.hpp"

namespace namestack {

struct NameStack {
    std::vector<std::string> names;
    Ratio opacity = default_opacity();
    std::string tooltip_text;
    std::string actual_text;
    // Optional contiguous partition of names into equal-contribution groups,
    // given as group sizes summing to names.size(). Empty means ungrouped.
    std::vector<std::size_t> groups;

    bool operator==(const NameStack&) const = default;
};

// Names written out the way a citation normally would be: "A", "A and B",
// "A, B, and C".
inline std::string reveal_text(const std::vector<std::string>& names) {
    if (names.empty())
        throw std::invalid_argument("empty name list");
    if (names.size() == 1)
        return names.front();
    if (names.size() == 2)
        return names[0] + " and " + names[1];
    std::string out;
    for (std::size_t i = 0; i + 1 < names.size(); ++i) {
        out += names[i];
        out += ", ";
    }
    out += "and ";
    out += names.back();
    return out;
}

namespace detail {

inline void check_opacity(const Ratio& opacity) {
    // Formatting helpers reject values outside [0, 1], so the message cannot
    // echo the offending ratio here.
    if (!(Ratio(0) < opacity) || !(opacity <= Ratio(1)))
        throw std::invalid_argument("opacity must be in (0, 1]");
}

}  // namespace detail

inline NameStack build_stack(std::vector<std::string> names, Ratio opacity = default_opacity()) {
    if (names.empty())
        throw std::invalid_argument("empty name list");
    for (const std::string& name : names)
        if (name.empty())
            throw std::invalid_argument("empty name in stack");
    detail::check_opacity(opacity);
    NameStack stack;
    stack.tooltip_text = reveal_text(names);
    stack.actual_text = stack.tooltip_text;
    stack.names = std::move(names);
    stack.opacity = opacity;
    return stack;
}

// Resulting ink alpha of n superimposed layers, each drawn at alpha a.
// Returned as a double: the exact rational's denominator grows as den^n.
inline double effective_alpha(std::size_t n, Ratio a = default_opacity()) {
    if (n == 0)
        throw std::invalid_argument("overlap depth must be at least 1");
    detail::check_opacity(a);
    return 1.0 - std::pow(1.0 - a.to_double(), static_cast<double>(n));
}

// One stack per equal-contribution group, in group order. Every stack carries
// the joint reveal strings so any of them discloses the full author list in
// its original order.
inline std::vector<NameStack> grouped_stacks(const std::vector<std::vector<std::string>>& groups,
                                             Ratio opacity = default_opacity()) {
    if (groups.empty())
        throw std::invalid_argument("empty group list");
    std::vector<std::string> all;
    for (const std::vector<std::string>& group : groups) {
        if (group.empty())
            throw std::invalid_argument("empty group");
        all.insert(all.end(), group.begin(), group.end());
    }
    const std::string joint = reveal_text(all);
    std::vector<NameStack> stacks;
    stacks.reserve(groups.size());
    for (const std::vector<std::string>& group : groups) {
        NameStack stack = build_stack(group, opacity);
        stack.tooltip_text = joint;
        stack.actual_text = joint;
        stacks.push_back(std::move(stack));
    }
    return stacks;
}

}  // namespace namestack

#endif
