#pragma once

#include <vector>

#include "xmod/actor.hpp"
#include "xmod/base.hpp"

namespace xmod {

/// Crossed module (A2, A1, delta) whose object set A0 carries a monoid
/// multiplication, with commuting left/right A0-actions on arrows and
/// bundle elements and a braiding A1 x A1 -> A2. Objects of the inner
/// groupoid are the monoid elements.
struct BraidedXmod {
    CrossedModule xmod;
    std::vector<std::vector<int>> monoid;  // A0 x A0 -> A0
    int unit = 0;
    std::vector<std::vector<int>> left_on_arrows;    // [z][arrow]
    std::vector<std::vector<int>> right_on_arrows;   // [arrow][z]
    std::vector<std::vector<int>> left_on_elements;  // [z][element]
    std::vector<std::vector<int>> right_on_elements; // [element][z]
    std::vector<std::vector<int>> braiding;          // [arrow][arrow] -> element
};

struct BraidedCheck {
    ValidationReport report;  // axiom families 3.1 .. 3.11
    bool regular = false;     // A0 is a group
};

BraidedCheck validate_braided(const BraidedXmod& b);

/// Arrow of AUT(C): a homotopy (s0, s1) over the automorphism `target`,
/// kept when its induced source endomorphism is again an automorphism.
struct HomotopyArrow {
    std::vector<int> s0;
    std::vector<int> s1;
    int target = 0;  // index into the Aut carrier

    bool operator==(const HomotopyArrow& other) const = default;
    bool operator<(const HomotopyArrow& other) const;
};

/// Element of the AUT(C) bundle: a section over `target`, s2(x) in the
/// fibre over target0(x).
struct SectionOverAut {
    std::vector<int> s2;
    int target = 0;

    bool operator==(const SectionOverAut& other) const = default;
    bool operator<(const SectionOverAut& other) const;
};

struct AutBraided {
    BraidedXmod braided;
    XmodAutGroup aut;
    std::vector<HomotopyArrow> arrows;     // carrier of A1, target-major
    std::vector<SectionOverAut> elements;  // carrier of A2, target-major
};

/// The braided regular crossed module AUT(C): A0 = Aut(C), A1 = homotopy
/// triples with invertible source, A2 = sections over automorphisms,
/// braiding {(s0,s1,f),(t0,t1,f')} = (s1 o t0, f f').
AutBraided build_aut_braided(const CrossedModule& x);

struct Braided2Crossed {
    TwoCrossedModule tcm;
    std::vector<int> l_carrier;  // bundle element ids of the vertex fibre at e
    std::vector<int> k_carrier;  // arrow ids of the costar at e
};

/// Thm-style extraction A2(e) -> K -> A0 with K-product ab = (a.src b) + b,
/// the diagonal A0-actions, the K-action c!a = (c.src a)^a and the lift
/// <a,b> = {a^-1, b}!a. Throws NotRegular.
Braided2Crossed braided_to_2crossed(const BraidedXmod& b);

/// The reverse construction on carriers M x P and L x P. Throws
/// InvalidTwoCrossed when t fails validation.
BraidedXmod twocrossed_to_braided(const TwoCrossedModule& t);

struct IsomorphismWitness {
    std::vector<int> l_map;
    std::vector<int> m_map;
    std::vector<int> p_map;
};

bool is_two_crossed_isomorphism(const TwoCrossedModule& a, const TwoCrossedModule& b,
                                const IsomorphismWitness& w);

/// Checks braided_to_2crossed(twocrossed_to_braided(t)) against t: the
/// canonical identification is tried first, then an exhaustive search.
/// Throws NoIsomorphismFound if neither works.
IsomorphismWitness roundtrip_check(const TwoCrossedModule& t);

/// Compares build_actor_2crossed(x) with the costar extraction of
/// build_aut_braided(x) under the canonical identification, including the
/// two independently computed Peiffer lifts.
ValidationReport compare_actor_braided(const CrossedModule& x);

}  // namespace xmod
