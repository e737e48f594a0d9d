#pragma once

#include <vector>

#include "xmod/base.hpp"
#include "xmod/derivations.hpp"

namespace xmod {

/// Section of the bundle: s2(x) lives in the fibre over x. These form the
/// group M2 under pointwise addition.
struct Section2 {
    std::vector<int> values;  // object -> element

    bool operator==(const Section2& other) const = default;
    bool operator<(const Section2& other) const { return values < other.values; }
};

ValidationReport validate_section2(const CrossedModule& x, const Section2& s);

struct M2Group {
    std::vector<Section2> elements;  // lexicographic
    FiniteGroup group;               // pointwise addition

    int index_of(const Section2& s) const;
};

M2Group enumerate_m2(const CrossedModule& x);

Section2 m2_zero(const CrossedModule& x);
Section2 m2_add(const CrossedModule& x, const Section2& s, const Section2& t);

/// zeta(s2) = (delta s2, a -> -s2(src a)^a + s2(tgt a)); always lands in
/// FDer*.
FreeDerivation zeta(const CrossedModule& x, const Section2& s2);

/// s2^{(t0,t1)} : x -> s2(src(t0 x))^{t0(x)}. Throws NotInvertible when t
/// is not in FDer*.
Section2 fder_action_on_m2(const CrossedModule& x, const Section2& s2,
                           const FreeDerivation& t);

/// Aut action on M2: s2^f = f2^-1 o s2 o f0. Throws NotAutomorphism.
Section2 aut_action_on_m2(const CrossedModule& x, const Section2& s2, const XmodMorphism& f);

/// Peiffer lifting of the actor, the closed evaluation of {s^-1, t}!s:
/// <s, t> : x -> s1^-1(t0(f0 x))^{s0(x)} with f = Delta(s) and s1^-1 the
/// derivation component of fder_inverse(s). Throws NotInvertible.
Section2 actor_peiffer_lifting(const CrossedModule& x, const FreeDerivation& s,
                               const FreeDerivation& t);

/// 2-crossed module L -> M -> P in one abstract multiplicative notation.
/// All actions are right actions written as tables value = action[elem][actor].
struct TwoCrossedModule {
    FiniteGroup l, m, p;
    std::vector<int> d1;                    // L -> M
    std::vector<int> d2;                    // M -> P
    std::vector<std::vector<int>> p_on_l;   // [l][p]
    std::vector<std::vector<int>> p_on_m;   // [m][p]
    std::vector<std::vector<int>> m_on_l;   // [l][m]
    std::vector<std::vector<int>> lift;     // [m0][m1] -> L
};

/// Checks the complex conditions, P-equivariance, the action laws, the
/// crossed-module axioms for d1 with the M-action, the compatibility
/// (l^m)^p = (l^p)^{m^p} and the Peiffer axioms P1..P6, all exhaustively.
ValidationReport validate_2crossed(const TwoCrossedModule& t);

/// The actor 2-crossed module M2 -> FDer* -> Aut with the enumerated
/// carriers kept for reporting and identification.
struct ActorTwoCrossed {
    TwoCrossedModule tcm;
    M2Group m2;
    FDerStarGroup fder;
    XmodAutGroup aut;
};

ActorTwoCrossed build_actor_2crossed(const CrossedModule& x);

}  // namespace xmod
