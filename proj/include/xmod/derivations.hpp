#pragma once

#include <vector>

#include "xmod/base.hpp"
#include "xmod/crossed_module.hpp"

namespace xmod {

/// Homotopy (s, g) on a morphism g: dom -> cod. s0 sends each object x to
/// an arrow of the codomain groupoid ending at g0(x); s1 is a
/// g-derivation: s1(a+b) = s1(a)^{g1 b} + s1(b), with s1(a) in the fibre
/// over g0(tgt a).
struct Homotopy {
    std::vector<int> s0;  // object -> codomain arrow
    std::vector<int> s1;  // arrow -> codomain element
    XmodMorphism base;    // g

    bool operator==(const Homotopy& other) const = default;
};

/// Free derivation: a homotopy over the identity, kept without the base.
struct FreeDerivation {
    std::vector<int> s0;  // object -> arrow, tgt(s0 x) = x
    std::vector<int> s1;  // arrow -> element in the fibre over tgt

    bool operator==(const FreeDerivation& other) const = default;
    bool operator<(const FreeDerivation& other) const {
        return s0 != other.s0 ? s0 < other.s0 : s1 < other.s1;
    }
};

/// Section of the target map with bijective source composite.
struct CoadmissibleSection {
    std::vector<int> arrows;  // object -> arrow, tgt = x

    bool operator==(const CoadmissibleSection& other) const = default;
    bool operator<(const CoadmissibleSection& other) const { return arrows < other.arrows; }
};

/// Derivation with the identity section left implicit.
struct PlainDerivation {
    std::vector<int> values;  // arrow -> element in the fibre over tgt

    bool operator==(const PlainDerivation& other) const = default;
    bool operator<(const PlainDerivation& other) const { return values < other.values; }
};

ValidationReport validate_homotopy(const CrossedModule& dom, const CrossedModule& cod,
                                   const Homotopy& h);
ValidationReport validate_free_derivation(const CrossedModule& x, const FreeDerivation& s);
ValidationReport validate_section(const FiniteGroupoid& g, const CoadmissibleSection& s);
ValidationReport validate_plain_derivation(const CrossedModule& x, const PlainDerivation& d);

/// The morphism induced by a homotopy:
///   f0(x) = src(s0 x)
///   f1(a) = s0(src a) + g1(a) + delta(s1 a) - s0(tgt a)
///   f2(c) = (g2(c) + s1(delta c))^{-s0(base c)}
/// Throws InvalidHomotopy when h fails validation.
XmodMorphism induced_morphism(const CrossedModule& dom, const CrossedModule& cod,
                              const Homotopy& h);

FreeDerivation fder_identity(const CrossedModule& x);

/// Monoid product: with g = delta_morphism(t),
///   (s*t)0(z) = s0(g0 z) + t0(z)
///   (s*t)1(z) = t1(z) + (s1(g1 z))^{t0(tgt z)}
FreeDerivation fder_multiply(const CrossedModule& x, const FreeDerivation& s,
                             const FreeDerivation& t);

/// The induced endomorphism of the free derivation s (its homotopy over
/// the identity).
XmodMorphism delta_morphism(const CrossedModule& x, const FreeDerivation& s);

/// Invertibility in the FDer monoid, decided by bijectivity of f1 and
/// cross-checked against bijectivity of f2 (the two must agree).
bool is_invertible(const CrossedModule& x, const FreeDerivation& s);

/// Inverse from the closed formulas
///   s0'(x) = -s0(f0^-1 x),  s1'(a) = -(s1(f1^-1 a))^{s0'(tgt a)}.
/// Throws NotInvertible.
FreeDerivation fder_inverse(const CrossedModule& x, const FreeDerivation& s);

/// All free derivations, sections-major, each component lexicographic.
std::vector<FreeDerivation> enumerate_fder(const CrossedModule& x);

struct FDerStarGroup {
    std::vector<FreeDerivation> elements;
    FiniteGroup group;  // mul(i, j) = elements[i] * elements[j]

    int index_of(const FreeDerivation& s) const;  // throws NotInvertible if absent
};

FDerStarGroup enumerate_fder_star(const CrossedModule& x);

/// Homotopies (s0, s1) over a fixed endomorphism g of x, lexicographic.
std::vector<Homotopy> enumerate_homotopies(const CrossedModule& x, const XmodMorphism& g);

/// Action of an automorphism on an invertible free derivation:
///   s^f = (f1^-1 s0 f0, f2^-1 s1 f1).
/// Throws NotAutomorphism / NotInvertible.
FreeDerivation aut_action(const CrossedModule& x, const FreeDerivation& s,
                          const XmodMorphism& f);

CoadmissibleSection msec_identity(const FiniteGroupoid& g);

/// (s0 * t0)(x) = s0(src(t0 x)) + t0(x)
CoadmissibleSection msec_multiply(const FiniteGroupoid& g, const CoadmissibleSection& s,
                                  const CoadmissibleSection& t);

struct MsecGroup {
    std::vector<CoadmissibleSection> elements;
    FiniteGroup group;

    int index_of(const CoadmissibleSection& s) const;
};

MsecGroup enumerate_msec(const FiniteGroupoid& g);

PlainDerivation der_zero(const CrossedModule& x);

/// (s1 * t1)(a) = t1(a) + s1(a + delta(t1 a))
PlainDerivation der_multiply(const CrossedModule& x, const PlainDerivation& s,
                             const PlainDerivation& t);

/// (s1^{t0})(a) = s1(t0(src a) + a - t0(tgt a))^{t0(tgt a)}
PlainDerivation msec_action_on_der(const CrossedModule& x, const PlainDerivation& s,
                                   const CoadmissibleSection& t);

bool der_is_invertible(const CrossedModule& x, const PlainDerivation& d);

struct DerStarGroup {
    std::vector<PlainDerivation> elements;
    FiniteGroup group;

    int index_of(const PlainDerivation& d) const;
};

DerStarGroup enumerate_der_star(const CrossedModule& x);

/// The two sides of the natural isomorphism
/// FDer*(C) -> M(G) x| Der*(C); split throws NotInvertible off FDer*.
std::pair<CoadmissibleSection, PlainDerivation> split_fder(const CrossedModule& x,
                                                           const FreeDerivation& s);
FreeDerivation merge_fder(const CrossedModule& x, const CoadmissibleSection& s0,
                          const PlainDerivation& s1);

}  // namespace xmod
