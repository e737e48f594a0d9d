#pragma once

// Shared catalog of desk-scale crossed modules used by the unit tests,
// the acceptance suite and the corpus writer.

#include <string>
#include <vector>

#include "xmod/crossed_module.hpp"
#include "xmod/io.hpp"

namespace testinst {

struct Named {
    std::string name;
    xmod::CrossedModule x;
};

inline xmod::CrossedModule make_trivial() {
    xmod::CrossedModule x;
    x.action.bundle = xmod::GroupBundle::from_fibres({xmod::FiniteGroup::trivial()});
    x.action.g = xmod::FiniteGroupoid::from_group(xmod::FiniteGroup::trivial());
    x.action.act = {{0}};
    x.delta = {0};
    return x;
}

// (C2 -> C2, delta = id, trivial action)
inline xmod::CrossedModule make_c2c2() {
    xmod::CrossedModule x;
    x.action.bundle = xmod::GroupBundle::from_fibres({xmod::FiniteGroup::cyclic(2)});
    x.action.g = xmod::FiniteGroupoid::from_group(xmod::FiniteGroup::cyclic(2));
    x.action.act = {{0, 0}, {1, 1}};
    x.delta = {0, 1};
    return x;
}

// (C3 -> C3, delta = id, trivial action)
inline xmod::CrossedModule make_c3c3_id() {
    const xmod::FiniteGroup c3 = xmod::FiniteGroup::cyclic(3);
    xmod::CrossedModule x;
    x.action.bundle = xmod::GroupBundle::from_fibres({c3});
    x.action.g = xmod::FiniteGroupoid::from_group(c3);
    x.action.act.assign(3, std::vector<int>(3));
    for (int c = 0; c < 3; ++c)
        for (int a = 0; a < 3; ++a) x.action.act[c][a] = c;
    x.delta = {0, 1, 2};
    return x;
}

// (C3 -> 1, zero boundary)
inline xmod::CrossedModule make_c3_trivial_base() {
    xmod::CrossedModule x;
    x.action.bundle = xmod::GroupBundle::from_fibres({xmod::FiniteGroup::cyclic(3)});
    x.action.g = xmod::FiniteGroupoid::from_group(xmod::FiniteGroup::trivial());
    x.action.act = {{0}, {1}, {2}};
    x.delta = {0, 0, 0};
    return x;
}

inline std::vector<int> alternating3(const xmod::FiniteGroup& s3) {
    std::vector<int> a3;
    for (int i = 0; i < s3.order(); ++i)
        if (s3.element_order(i) != 2) a3.push_back(i);
    return a3;
}

inline xmod::CrossedModule make_s3a3() {
    const xmod::FiniteGroup s3 = xmod::FiniteGroup::symmetric(3);
    return xmod::from_normal_subgroup(s3, alternating3(s3));
}

inline xmod::CrossedModule make_s3s3() {
    const xmod::FiniteGroup s3 = xmod::FiniteGroup::symmetric(3);
    return xmod::from_normal_subgroup(s3, {0, 1, 2, 3, 4, 5});
}

inline xmod::CrossedModule make_c4c2() {
    return xmod::from_normal_subgroup(xmod::FiniteGroup::cyclic(4), {0, 2});
}

inline std::vector<std::vector<int>> c2_inversion_on_c3() {
    return {{0, 1, 2}, {0, 2, 1}};
}

inline xmod::CrossedModule make_zero_c3_c2() {
    return xmod::from_module_zero_map(xmod::FiniteGroup::cyclic(2),
                                      xmod::FiniteGroup::cyclic(3), c2_inversion_on_c3());
}

inline xmod::CrossedModule make_modmorph_c3_s3() {
    const xmod::FiniteGroup c2 = xmod::FiniteGroup::cyclic(2);
    const xmod::FiniteGroup c3 = xmod::FiniteGroup::cyclic(3);
    return xmod::from_module_morphism(c2, c3, c2_inversion_on_c3(), c3,
                                      c2_inversion_on_c3(), {0, 1, 2});
}

// trivial fibres over the indiscrete groupoid on two objects
inline xmod::CrossedModule make_indiscrete2() {
    xmod::CrossedModule x;
    x.action.bundle = xmod::GroupBundle::from_fibres(
        {xmod::FiniteGroup::trivial(), xmod::FiniteGroup::trivial()});
    x.action.g = xmod::FiniteGroupoid::indiscrete(2);
    x.action.act.assign(2, std::vector<int>(4, -1));
    for (int c = 0; c < 2; ++c)
        for (int a = 0; a < 4; ++a)
            if (x.action.g.src[a] == c) x.action.act[c][a] = x.action.g.tgt[a];
    x.delta = {x.action.g.identity_at[0], x.action.g.identity_at[1]};
    return x;
}

// C2 fibres over the indiscrete groupoid on two objects, transport action
inline xmod::CrossedModule make_pair_c2() {
    xmod::CrossedModule x;
    x.action.bundle = xmod::GroupBundle::from_fibres(
        {xmod::FiniteGroup::cyclic(2), xmod::FiniteGroup::cyclic(2)});
    x.action.g = xmod::FiniteGroupoid::indiscrete(2);
    x.action.act.assign(4, std::vector<int>(4, -1));
    for (int c = 0; c < 4; ++c) {
        const int bit = c % 2;
        for (int a = 0; a < 4; ++a) {
            if (x.action.g.src[a] != x.action.bundle.base[c]) continue;
            x.action.act[c][a] = x.action.g.tgt[a] * 2 + bit;
        }
    }
    x.delta = {x.action.g.identity_at[0], x.action.g.identity_at[0],
               x.action.g.identity_at[1], x.action.g.identity_at[1]};
    return x;
}

inline std::vector<Named> catalog() {
    return {
        {"trivial", make_trivial()},
        {"c2c2", make_c2c2()},
        {"c3c3_id", make_c3c3_id()},
        {"c3_triv", make_c3_trivial_base()},
        {"s3a3", make_s3a3()},
        {"s3s3", make_s3s3()},
        {"c4c2", make_c4c2()},
        {"zero_c3_c2", make_zero_c3_c2()},
        {"modmorph_c3_s3", make_modmorph_c3_s3()},
        {"indiscrete2", make_indiscrete2()},
        {"pair_c2", make_pair_c2()},
    };
}

/// Wraps a catalog instance in a document with systematic names
/// (objects x0.., arrows a0.., fibre elements c0..).
inline xmod::XmodDocument to_document(const Named& inst) {
    xmod::XmodDocument doc;
    doc.name = inst.name;
    doc.xmod = inst.x;
    for (int i = 0; i < inst.x.object_count(); ++i)
        doc.object_names.push_back("x" + std::to_string(i));
    for (int i = 0; i < inst.x.groupoid().arrow_count(); ++i)
        doc.arrow_names.push_back("a" + std::to_string(i));
    for (int x = 0; x < inst.x.object_count(); ++x) {
        int k = 0;
        for (int c : inst.x.bundle().fibre(x)) {
            (void)c;
            doc.element_names.push_back("c" + std::to_string(k++));
        }
    }
    return doc;
}

inline std::string corpus_dir() {
#ifdef XMOD_CORPUS_DIR
    return XMOD_CORPUS_DIR;
#else
    return "tests/corpus";
#endif
}

}  // namespace testinst
