#include "xmod/crossed_module.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace xmod {

namespace {

std::string pair(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

int GroupoidAction::apply(int c, int a) const {
    const int r = act[c][a];
    if (r < 0)
        throw Error(ErrorKind::malformed_table, "action undefined for " + pair(c, a));
    return r;
}

ValidationReport validate_action(const GroupoidAction& a) {
    if (a.bundle.object_count != a.g.object_count)
        throw Error(ErrorKind::base_mismatch, "C and G have different object sets");
    ValidationReport report;
    report.merge(validate_bundle(a.bundle), "bundle");
    report.merge(validate_groupoid(a.g), "groupoid");

    const int elems = a.bundle.element_count();
    const int arrows = a.g.arrow_count();
    if (static_cast<int>(a.act.size()) != elems)
        throw Error(ErrorKind::malformed_table, "action table has wrong number of rows");
    for (const auto& row : a.act)
        if (static_cast<int>(row.size()) != arrows)
            throw Error(ErrorKind::malformed_table, "action table row size mismatch");

    for (int c = 0; c < elems; ++c)
        for (int ar = 0; ar < arrows; ++ar) {
            const bool should = a.bundle.base[c] == a.g.src[ar];
            const int img = a.act[c][ar];
            if (img >= elems)
                throw Error(ErrorKind::malformed_table, "action references unknown element");
            if (img >= 0 && !should) report.add("action domain", pair(c, ar));
            if (img < 0 && should) report.add("action totality", pair(c, ar));
            if (img >= 0 && should && a.bundle.base[img] != a.g.tgt[ar])
                report.add("action target", pair(c, ar));
        }

    // (c1 + c2)^a = c1^a + c2^a
    for (int c1 = 0; c1 < elems; ++c1)
        for (int c2 = 0; c2 < elems; ++c2) {
            if (a.bundle.add[c1][c2] < 0) continue;
            const int sum = a.bundle.add[c1][c2];
            for (int ar = 0; ar < arrows; ++ar) {
                if (a.act[sum][ar] < 0 || a.act[c1][ar] < 0 || a.act[c2][ar] < 0) continue;
                const int lhs = a.act[sum][ar];
                const int rhs = a.bundle.add[a.act[c1][ar]][a.act[c2][ar]];
                if (lhs != rhs) report.add("action additive", pair(c1, c2) + "^" + std::to_string(ar));
            }
        }

    // c^{a+b} = (c^a)^b and c^{e_x} = c
    for (int c = 0; c < elems; ++c) {
        const int e = a.g.identity_at[a.bundle.base[c]];
        if (e >= 0 && a.act[c][e] >= 0 && a.act[c][e] != c)
            report.add("action unit", std::to_string(c));
        for (int p = 0; p < arrows; ++p) {
            if (a.act[c][p] < 0) continue;
            for (int q = 0; q < arrows; ++q) {
                const int pq = a.g.comp[p][q];
                if (pq < 0 || a.act[c][pq] < 0 || a.act[a.act[c][p]][q] < 0) continue;
                if (a.act[c][pq] != a.act[a.act[c][p]][q])
                    report.add("action composition", std::to_string(c) + "^" + pair(p, q));
            }
        }
    }
    return report;
}

const char* to_string(XmodVerdict v) {
    switch (v) {
        case XmodVerdict::crossed: return "crossed";
        case XmodVerdict::pre_crossed_only: return "pre-crossed only";
        case XmodVerdict::neither: return "neither";
    }
    return "?";
}

XmodCheck validate_crossed_module(const CrossedModule& x) {
    XmodCheck check;
    ValidationReport& report = check.report;
    report.merge(validate_action(x.action), "action");

    const GroupBundle& c = x.bundle();
    const FiniteGroupoid& g = x.groupoid();
    if (static_cast<int>(x.delta.size()) != c.element_count())
        throw Error(ErrorKind::malformed_table, "delta table does not cover the bundle");
    for (int e : x.delta)
        if (e < 0 || e >= g.arrow_count())
            throw Error(ErrorKind::malformed_table, "delta references unknown arrow");

    // delta is a morphism over the identity on objects
    for (int e = 0; e < c.element_count(); ++e) {
        if (g.src[x.delta[e]] != c.base[e] || g.tgt[x.delta[e]] != c.base[e])
            report.add("delta over identity", "element " + std::to_string(e));
    }
    for (int c1 = 0; c1 < c.element_count(); ++c1)
        for (int c2 = 0; c2 < c.element_count(); ++c2) {
            if (c.add[c1][c2] < 0) continue;
            const int lhs = x.delta[c.add[c1][c2]];
            const int rhs = g.comp[x.delta[c1]][x.delta[c2]];
            if (rhs < 0 || lhs != rhs) report.add("delta additive", pair(c1, c2));
        }

    if (!report.ok()) {
        check.verdict = XmodVerdict::neither;
        return check;
    }

    bool cm1_ok = true;
    for (int e = 0; e < c.element_count(); ++e)
        for (int a = 0; a < g.arrow_count(); ++a) {
            if (x.action.act[e][a] < 0) continue;
            const int lhs = x.delta[x.action.act[e][a]];
            const int rhs = g.compose(g.compose(g.neg(a), x.delta[e]), a);
            if (lhs != rhs) {
                report.add("CM1", pair(e, a));
                cm1_ok = false;
            }
        }

    bool cm2_ok = true;
    for (int e = 0; e < c.element_count(); ++e)
        for (int c1 = 0; c1 < c.element_count(); ++c1) {
            if (c.base[e] != c.base[c1]) continue;
            const int lhs = x.action.act[e][x.delta[c1]];
            const int rhs = c.plus(c.plus(c.minus(c1), e), c1);
            if (lhs != rhs) {
                report.add("CM2", pair(e, c1));
                cm2_ok = false;
            }
        }

    check.verdict = cm1_ok ? (cm2_ok ? XmodVerdict::crossed : XmodVerdict::pre_crossed_only)
                           : XmodVerdict::neither;
    return check;
}

CrossedModule from_normal_subgroup(const FiniteGroup& g, const std::vector<int>& h) {
    if (!g.is_normal_subgroup(h))
        throw Error(ErrorKind::not_normal, "h is not a normal subgroup of g");
    std::vector<int> elems = h;
    std::sort(elems.begin(), elems.end());

    std::map<int, int> local;
    for (size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<int>(i);
    const int hn = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(hn, std::vector<int>(hn));
    for (int i = 0; i < hn; ++i)
        for (int j = 0; j < hn; ++j) table[i][j] = local.at(g.mul(elems[i], elems[j]));

    CrossedModule x;
    x.action.bundle = GroupBundle::from_fibres({FiniteGroup::from_table(std::move(table))});
    x.action.g = FiniteGroupoid::from_group(g);
    x.action.act.assign(hn, std::vector<int>(g.order(), -1));
    x.delta.resize(hn);
    for (int i = 0; i < hn; ++i) {
        x.delta[i] = elems[i];
        for (int a = 0; a < g.order(); ++a) x.action.act[i][a] = local.at(g.conj(elems[i], a));
    }
    return x;
}

CrossedModule from_module_zero_map(const FiniteGroup& g, const FiniteGroup& m,
                                   const std::vector<std::vector<int>>& act) {
    if (!m.is_abelian())
        throw Error(ErrorKind::not_abelian, "a module with zero boundary must be abelian");
    if (!is_right_action(m, g, act))
        throw Error(ErrorKind::not_an_action, "act is not a right action of g on m");

    CrossedModule x;
    x.action.bundle = GroupBundle::from_fibres({m});
    x.action.g = FiniteGroupoid::from_group(g);
    x.action.act.assign(m.order(), std::vector<int>(g.order(), -1));
    x.delta.assign(m.order(), g.unit());
    for (int c = 0; c < m.order(); ++c)
        for (int a = 0; a < g.order(); ++a) x.action.act[c][a] = act[a][c];
    return x;
}

CrossedModule from_module_morphism(const FiniteGroup& g, const FiniteGroup& m,
                                   const std::vector<std::vector<int>>& act_m,
                                   const FiniteGroup& n,
                                   const std::vector<std::vector<int>>& act_n,
                                   const std::vector<int>& eta) {
    if (!m.is_abelian() || !n.is_abelian())
        throw Error(ErrorKind::not_abelian, "modules must be abelian");
    if (!is_right_action(m, g, act_m) || !is_right_action(n, g, act_n))
        throw Error(ErrorKind::not_an_action, "module structure is not a right action");
    if (static_cast<int>(eta.size()) != m.order())
        throw Error(ErrorKind::domain_mismatch, "eta does not cover m");
    for (int a = 0; a < m.order(); ++a)
        for (int b = 0; b < m.order(); ++b)
            if (eta[m.mul(a, b)] != n.mul(eta[a], eta[b]))
                throw Error(ErrorKind::not_equivariant, "eta is not a homomorphism");
    for (int a = 0; a < m.order(); ++a)
        for (int p = 0; p < g.order(); ++p)
            if (eta[act_m[p][a]] != act_n[p][eta[a]])
                throw Error(ErrorKind::not_equivariant, "eta does not commute with the g-action");

    const FiniteGroup big = semidirect_product(n, g, act_n);
    CrossedModule x;
    x.action.bundle = GroupBundle::from_fibres({m});
    x.action.g = FiniteGroupoid::from_group(big);
    x.action.act.assign(m.order(), std::vector<int>(big.order(), -1));
    x.delta.resize(m.order());
    for (int c = 0; c < m.order(); ++c) {
        x.delta[c] = semidirect_index(g, eta[c], g.unit());
        for (int p = 0; p < big.order(); ++p)
            x.action.act[c][p] = act_m[p % g.order()][c];  // projection to g
    }
    return x;
}

bool XmodMorphism::operator<(const XmodMorphism& other) const {
    if (obj_map != other.obj_map) return obj_map < other.obj_map;
    if (arr_map != other.arr_map) return arr_map < other.arr_map;
    return bun_map < other.bun_map;
}

ValidationReport validate_xmod_morphism(const CrossedModule& dom, const CrossedModule& cod,
                                        const XmodMorphism& f) {
    ValidationReport report;
    report.merge(validate_groupoid_morphism(dom.groupoid(), cod.groupoid(),
                                            GroupoidMorphism{f.obj_map, f.arr_map}),
                 "f1");
    const GroupBundle& c = dom.bundle();
    const GroupBundle& cc = cod.bundle();
    if (static_cast<int>(f.bun_map.size()) != c.element_count()) {
        report.add("f2 shape", "bundle map does not cover the domain");
        return report;
    }
    for (int e : f.bun_map)
        if (e < 0 || e >= cc.element_count()) {
            report.add("f2 shape", "element image out of range");
            return report;
        }
    if (!report.ok()) return report;

    for (int e = 0; e < c.element_count(); ++e)
        if (cc.base[f.bun_map[e]] != f.obj_map[c.base[e]])
            report.add("f2 base", "element " + std::to_string(e));
    for (int e1 = 0; e1 < c.element_count(); ++e1)
        for (int e2 = 0; e2 < c.element_count(); ++e2) {
            if (c.add[e1][e2] < 0) continue;
            const int img = cc.add[f.bun_map[e1]][f.bun_map[e2]];
            if (img < 0 || img != f.bun_map[c.add[e1][e2]])
                report.add("f2 additive", pair(e1, e2));
        }
    for (int e = 0; e < c.element_count(); ++e)
        if (cod.delta[f.bun_map[e]] != f.arr_map[dom.delta[e]])
            report.add("delta square", "element " + std::to_string(e));
    for (int e = 0; e < c.element_count(); ++e)
        for (int a = 0; a < dom.groupoid().arrow_count(); ++a) {
            if (dom.action.act[e][a] < 0) continue;
            const int lhs = f.bun_map[dom.action.act[e][a]];
            const int rhs = cod.action.act[f.bun_map[e]][f.arr_map[a]];
            if (rhs < 0 || lhs != rhs) report.add("action square", pair(e, a));
        }
    return report;
}

XmodMorphism identity_xmod_morphism(const CrossedModule& x) {
    XmodMorphism f;
    f.obj_map.resize(x.object_count());
    f.arr_map.resize(x.groupoid().arrow_count());
    f.bun_map.resize(x.bundle().element_count());
    std::iota(f.obj_map.begin(), f.obj_map.end(), 0);
    std::iota(f.arr_map.begin(), f.arr_map.end(), 0);
    std::iota(f.bun_map.begin(), f.bun_map.end(), 0);
    return f;
}

XmodMorphism compose_xmod_morphisms(const XmodMorphism& f, const XmodMorphism& g) {
    XmodMorphism r;
    const GroupoidMorphism gm = compose_groupoid_morphisms(
        GroupoidMorphism{f.obj_map, f.arr_map}, GroupoidMorphism{g.obj_map, g.arr_map});
    r.obj_map = gm.obj_map;
    r.arr_map = gm.arr_map;
    r.bun_map.resize(g.bun_map.size());
    for (size_t e = 0; e < g.bun_map.size(); ++e) {
        if (g.bun_map[e] >= static_cast<int>(f.bun_map.size()))
            throw Error(ErrorKind::domain_mismatch, "element image outside domain of outer map");
        r.bun_map[e] = f.bun_map[g.bun_map[e]];
    }
    return r;
}

namespace {

bool is_bijection(const std::vector<int>& v, int codomain) {
    if (static_cast<int>(v.size()) != codomain) return false;
    std::vector<bool> hit(codomain, false);
    for (int x : v) {
        if (x < 0 || x >= codomain || hit[x]) return false;
        hit[x] = true;
    }
    return true;
}

}  // namespace

bool is_xmod_automorphism(const CrossedModule& x, const XmodMorphism& f) {
    if (!is_bijection(f.obj_map, x.object_count())) return false;
    if (!is_bijection(f.arr_map, x.groupoid().arrow_count())) return false;
    if (!is_bijection(f.bun_map, x.bundle().element_count())) return false;
    return validate_xmod_morphism(x, x, f).ok();
}

XmodMorphism invert_xmod_automorphism(const CrossedModule& x, const XmodMorphism& f) {
    if (!is_xmod_automorphism(x, f))
        throw Error(ErrorKind::not_automorphism, "map is not an automorphism");
    XmodMorphism r;
    r.obj_map.resize(f.obj_map.size());
    r.arr_map.resize(f.arr_map.size());
    r.bun_map.resize(f.bun_map.size());
    for (size_t i = 0; i < f.obj_map.size(); ++i) r.obj_map[f.obj_map[i]] = static_cast<int>(i);
    for (size_t i = 0; i < f.arr_map.size(); ++i) r.arr_map[f.arr_map[i]] = static_cast<int>(i);
    for (size_t i = 0; i < f.bun_map.size(); ++i) r.bun_map[f.bun_map[i]] = static_cast<int>(i);
    return r;
}

int XmodAutGroup::index_of(const XmodMorphism& f) const {
    const auto it = std::lower_bound(elements.begin(), elements.end(), f);
    if (it == elements.end() || !(*it == f))
        throw Error(ErrorKind::not_automorphism, "map is not in Aut");
    return static_cast<int>(it - elements.begin());
}

namespace {

// per-element assignment of f2 candidates under the delta constraint,
// with additivity checked as soon as a triple is complete
void search_bundle_maps(const CrossedModule& x, const std::vector<int>& obj_map,
                        const std::vector<int>& arr_map, std::vector<int>& bun_map,
                        std::vector<bool>& used, int next, SearchBudget& budget,
                        std::vector<XmodMorphism>& out) {
    const GroupBundle& c = x.bundle();
    const int elems = c.element_count();
    if (next == elems) {
        out.push_back(XmodMorphism{obj_map, arr_map, bun_map});
        return;
    }
    const int target_fibre = obj_map[c.base[next]];
    for (int img = 0; img < elems; ++img) {
        if (used[img] || c.base[img] != target_fibre) continue;
        if (x.delta[img] != arr_map[x.delta[next]]) continue;
        budget.charge();
        bun_map[next] = img;
        used[img] = true;
        bool ok = true;
        for (int a = 0; a <= next && ok; ++a) {
            if (bun_map[a] < 0) continue;
            const int ab = c.add[a][next];
            if (ab >= 0 && ab <= next && bun_map[ab] >= 0 &&
                c.add[bun_map[a]][img] != bun_map[ab])
                ok = false;
            const int ba = c.add[next][a];
            if (ok && ba >= 0 && ba <= next && bun_map[ba] >= 0 &&
                c.add[img][bun_map[a]] != bun_map[ba])
                ok = false;
        }
        if (ok) search_bundle_maps(x, obj_map, arr_map, bun_map, used, next + 1, budget, out);
        bun_map[next] = -1;
        used[img] = false;
    }
}

}  // namespace

XmodAutGroup enumerate_xmod_automorphisms(const CrossedModule& x) {
    const GroupoidAutGroup gaut = enumerate_groupoid_automorphisms(x.groupoid());
    SearchBudget budget;
    std::vector<XmodMorphism> candidates;
    for (const GroupoidMorphism& fg : gaut.elements) {
        std::vector<int> bun_map(x.bundle().element_count(), -1);
        std::vector<bool> used(x.bundle().element_count(), false);
        search_bundle_maps(x, fg.obj_map, fg.arr_map, bun_map, used, 0, budget, candidates);
    }

    std::vector<XmodMorphism> elements;
    for (const auto& f : candidates)
        if (is_xmod_automorphism(x, f)) elements.push_back(f);
    std::sort(elements.begin(), elements.end());

    const int n = static_cast<int>(elements.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::map<XmodMorphism, int> index;
    for (int i = 0; i < n; ++i) index[elements[i]] = i;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const XmodMorphism c = compose_xmod_morphisms(elements[i], elements[j]);
            auto it = index.find(c);
            if (it == index.end())
                throw Error(ErrorKind::internal_check, "Aut not closed under composition");
            table[i][j] = it->second;
        }
    XmodAutGroup out;
    out.elements = std::move(elements);
    out.group = FiniteGroup::from_table(std::move(table));
    return out;
}

}  // namespace xmod
