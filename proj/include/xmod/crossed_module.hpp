#pragma once

#include <vector>

#include "xmod/base.hpp"
#include "xmod/groupoid.hpp"

namespace xmod {

/// Action of a groupoid G on a totally intransitive groupoid C over the
/// same objects: act[c][a] = c^a, defined iff base(c) = src(a), landing
/// in the fibre over tgt(a).
struct GroupoidAction {
    GroupBundle bundle;                 // C
    FiniteGroupoid g;                   // G
    std::vector<std::vector<int>> act;  // [element][arrow], -1 when undefined

    bool defined(int c, int a) const { return act[c][a] >= 0; }
    int apply(int c, int a) const;

    bool operator==(const GroupoidAction& other) const = default;
};

ValidationReport validate_action(const GroupoidAction& a);

/// Crossed module of groupoids (C, G, delta): delta is a bundle morphism
/// into G over the identity on objects, satisfying
///   CM1: delta(c^a) = -a + delta(c) + a
///   CM2: c^{delta(c1)} = -c1 + c + c1
struct CrossedModule {
    GroupoidAction action;
    std::vector<int> delta;  // element -> arrow

    const GroupBundle& bundle() const noexcept { return action.bundle; }
    const FiniteGroupoid& groupoid() const noexcept { return action.g; }
    int object_count() const noexcept { return action.g.object_count; }

    bool operator==(const CrossedModule& other) const = default;
};

enum class XmodVerdict { crossed, pre_crossed_only, neither };

const char* to_string(XmodVerdict v);

struct XmodCheck {
    ValidationReport report;  // empty iff verdict == crossed
    XmodVerdict verdict = XmodVerdict::neither;
};

XmodCheck validate_crossed_module(const CrossedModule& x);

/// (H, G, inclusion) with conjugation, one object. h lists the subgroup
/// elements by their ids in g. Throws NotNormal.
CrossedModule from_normal_subgroup(const FiniteGroup& g, const std::vector<int>& h);

/// (M, G, 0) for a right G-module: act[g][m]. Throws NotAbelian /
/// NotAnAction.
CrossedModule from_module_zero_map(const FiniteGroup& g, const FiniteGroup& m,
                                   const std::vector<std::vector<int>>& act);

/// (M, G x| N, delta) with delta(m) = (eta(m), 1) and the projection
/// action, for right G-modules M, N and an equivariant homomorphism eta.
/// Throws NotEquivariant / NotAbelian.
CrossedModule from_module_morphism(const FiniteGroup& g, const FiniteGroup& m,
                                   const std::vector<std::vector<int>>& act_m,
                                   const FiniteGroup& n,
                                   const std::vector<std::vector<int>>& act_n,
                                   const std::vector<int>& eta);

/// Morphism of crossed modules: (f0, f1) a groupoid morphism on G and f2
/// a bundle map on C with delta' f2 = f1 delta and f2(c^a) = f2(c)^{f1 a}.
struct XmodMorphism {
    std::vector<int> obj_map;
    std::vector<int> arr_map;
    std::vector<int> bun_map;

    bool operator==(const XmodMorphism& other) const = default;
    bool operator<(const XmodMorphism& other) const;
};

ValidationReport validate_xmod_morphism(const CrossedModule& dom, const CrossedModule& cod,
                                        const XmodMorphism& f);

XmodMorphism identity_xmod_morphism(const CrossedModule& x);

/// f . g, apply g first. Throws DomainMismatch.
XmodMorphism compose_xmod_morphisms(const XmodMorphism& f, const XmodMorphism& g);

bool is_xmod_automorphism(const CrossedModule& x, const XmodMorphism& f);

/// Inverse of a bijective endomorphism. Throws NotAutomorphism.
XmodMorphism invert_xmod_automorphism(const CrossedModule& x, const XmodMorphism& f);

struct XmodAutGroup {
    std::vector<XmodMorphism> elements;  // lexicographic in (obj, arr, bun)
    FiniteGroup group;                   // mul(i, j) = elements[i] . elements[j]

    int index_of(const XmodMorphism& f) const;  // throws NotAutomorphism if absent
};

XmodAutGroup enumerate_xmod_automorphisms(const CrossedModule& x);

}  // namespace xmod
