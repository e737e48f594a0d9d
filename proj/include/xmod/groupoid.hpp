#pragma once

#include <vector>

#include "xmod/base.hpp"
#include "xmod/finite_group.hpp"

namespace xmod {

/// Finite groupoid with explicit tables, written additively.
///
/// Conventions used throughout the library:
///   * compose(a, b) = a + b is defined iff tgt(a) == src(b); a is
///     traversed first, so src(a+b) = src(a) and tgt(a+b) = tgt(b).
///   * identity_at[x] and inverse[a] are -1 when the table fails to
///     provide them; validate_groupoid reports that instead of throwing.
struct FiniteGroupoid {
    int object_count = 0;
    std::vector<int> src;                // arrow -> object
    std::vector<int> tgt;                // arrow -> object
    std::vector<int> identity_at;        // object -> arrow, -1 when missing
    std::vector<int> inverse;            // arrow -> arrow, -1 when missing
    std::vector<std::vector<int>> comp;  // comp[a][b], -1 when undefined

    int arrow_count() const noexcept { return static_cast<int>(src.size()); }
    bool composable(int a, int b) const { return comp[a][b] >= 0; }
    int compose(int a, int b) const;
    int neg(int a) const;

    /// Derives identity and inverse tables from (src, tgt, comp); entries
    /// stay -1 when the data does not determine them. Throws
    /// MalformedTable on out-of-range ids only.
    static FiniteGroupoid from_tables(int object_count, std::vector<int> src,
                                      std::vector<int> tgt,
                                      std::vector<std::vector<int>> comp);

    static FiniteGroupoid discrete(int objects);
    static FiniteGroupoid indiscrete(int objects);
    static FiniteGroupoid from_group(const FiniteGroup& g);

    bool operator==(const FiniteGroupoid& other) const = default;
};

ValidationReport validate_groupoid(const FiniteGroupoid& g);

/// Arrows ending at x, ascending. Throws UnknownObject.
std::vector<int> costar(const FiniteGroupoid& g, int x);

/// Totally intransitive groupoid stored as a bundle of groups: every
/// element lives in the fibre over its base object.
struct GroupBundle {
    int object_count = 0;
    std::vector<int> base;               // element -> object
    std::vector<int> zero_at;            // object -> element, -1 when missing
    std::vector<int> negate;             // element -> element, -1 when missing
    std::vector<std::vector<int>> add;   // add[c][d], -1 across fibres

    int element_count() const noexcept { return static_cast<int>(base.size()); }
    int plus(int c, int d) const;
    int minus(int c) const;
    int zero(int x) const;
    std::vector<int> fibre(int x) const;

    /// Elements are laid out fibre by fibre in object order, so the
    /// fibre over x is a contiguous id range.
    static GroupBundle from_fibres(const std::vector<FiniteGroup>& fibres);

    FiniteGroupoid to_groupoid() const;
    static GroupBundle from_groupoid(const FiniteGroupoid& g);  // needs src == tgt

    /// Fibre over x as a standalone group; local ids follow global order.
    FiniteGroup fibre_group(int x) const;

    bool operator==(const GroupBundle& other) const = default;
};

ValidationReport validate_bundle(const GroupBundle& c);

struct GroupoidMorphism {
    std::vector<int> obj_map;
    std::vector<int> arr_map;

    bool operator==(const GroupoidMorphism& other) const = default;
};

ValidationReport validate_groupoid_morphism(const FiniteGroupoid& dom,
                                            const FiniteGroupoid& cod,
                                            const GroupoidMorphism& f);

GroupoidMorphism identity_groupoid_morphism(const FiniteGroupoid& g);

/// f . g, apply g first. Throws DomainMismatch on size mismatch.
GroupoidMorphism compose_groupoid_morphisms(const GroupoidMorphism& f,
                                            const GroupoidMorphism& g);

struct GroupoidAutGroup {
    std::vector<GroupoidMorphism> elements;  // lexicographic in (obj_map, arr_map)
    FiniteGroup group;                       // group.mul(i, j) = elements[i] . elements[j]
};

/// All invertible structure-preserving pairs (obj_map, arr_map), by
/// backtracking over hom-set-respecting bijections.
GroupoidAutGroup enumerate_groupoid_automorphisms(const FiniteGroupoid& g);

}  // namespace xmod
