#pragma once

#include <string>
#include <vector>

#include "demazure/perm.hpp"

namespace demazure {

// A finite sequence of nonnegative integers. Trailing zeros are kept:
// (1,0) and (1) index different atoms even though x^(1,0) == x^(1).
struct WeakComposition {
    std::vector<int> parts;

    WeakComposition() = default;
    WeakComposition(std::initializer_list<int> ps);
    explicit WeakComposition(std::vector<int> ps);

    int size() const { return static_cast<int>(parts.size()); }
    int operator[](int i) const { return parts[static_cast<std::size_t>(i)]; }
    int sum() const;
    bool is_partition() const;

    WeakComposition padded(int len) const;

    bool operator==(const WeakComposition& o) const { return parts == o.parts; }
    bool operator!=(const WeakComposition& o) const { return parts != o.parts; }
    bool operator<(const WeakComposition& o) const { return parts < o.parts; }

    std::string to_string() const; // "(1,0,3)"
    static WeakComposition parse(const std::string& text);
};

struct Partition {
    std::vector<int> parts; // weakly decreasing

    Partition() = default;
    Partition(std::initializer_list<int> ps);
    explicit Partition(std::vector<int> ps);

    int size() const { return static_cast<int>(parts.size()); }
    int operator[](int i) const { return parts[static_cast<std::size_t>(i)]; }
    int sum() const;
    WeakComposition as_composition() const { return WeakComposition(parts); }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }

    std::string to_string() const;
};

Partition sort_desc(const WeakComposition& alpha);

// The minimal-length permutation with alpha_i = lambda_{omega(i)},
// lambda = sort_desc(alpha); equal parts keep their left-to-right order.
Permutation omega(const WeakComposition& alpha);

// beta >= alpha iff omega_beta <= omega_alpha in Bruhat order; defined only
// within one rearrangement class. Throws IncomparableShapes otherwise.
bool comp_geq(const WeakComposition& beta, const WeakComposition& alpha);
bool comp_leq(const WeakComposition& alpha, const WeakComposition& beta);

WeakComposition reverse(const WeakComposition& alpha);

// All distinct rearrangements of alpha (as compositions of the same length).
std::vector<WeakComposition> rearrangement_class(const WeakComposition& alpha);

// All weak compositions with `parts` parts summing to total.
std::vector<WeakComposition> compositions_of(int total, int parts);

// All partitions of total with at most max_parts parts (no trailing zeros).
std::vector<Partition> partitions_of(int total, int max_parts);

} // namespace demazure
