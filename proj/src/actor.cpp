#include "xmod/actor.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace xmod {

namespace {

std::string pair(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string triple(int a, int b, int c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

ValidationReport validate_section2(const CrossedModule& x, const Section2& s) {
    ValidationReport report;
    if (static_cast<int>(s.values.size()) != x.object_count()) {
        report.add("shape", "section does not cover the objects");
        return report;
    }
    for (int i = 0; i < x.object_count(); ++i) {
        const int c = s.values[i];
        if (c < 0 || c >= x.bundle().element_count()) {
            report.add("shape", "element out of range");
            return report;
        }
        if (x.bundle().base[c] != i) report.add("typing", "object " + std::to_string(i));
    }
    return report;
}

int M2Group::index_of(const Section2& s) const {
    const auto it = std::lower_bound(elements.begin(), elements.end(), s);
    if (it == elements.end() || !(*it == s))
        throw Error(ErrorKind::internal_check, "section not in M2");
    return static_cast<int>(it - elements.begin());
}

M2Group enumerate_m2(const CrossedModule& x) {
    SearchBudget budget;
    M2Group out;
    std::vector<std::vector<int>> choices(x.object_count());
    for (int i = 0; i < x.object_count(); ++i) choices[i] = x.bundle().fibre(i);

    std::vector<int> cur(x.object_count());
    std::vector<size_t> idx(x.object_count(), 0);
    int level = 0;
    if (x.object_count() == 0) {
        out.elements.push_back(Section2{});
    } else {
        while (level >= 0) {
            if (level == x.object_count()) {
                out.elements.push_back(Section2{cur});
                --level;
                continue;
            }
            if (idx[level] == choices[level].size()) {
                idx[level] = 0;
                --level;
                continue;
            }
            budget.charge();
            cur[level] = choices[level][idx[level]++];
            ++level;
        }
    }

    const int n = static_cast<int>(out.elements.size());
    std::map<Section2, int> index;
    for (int i = 0; i < n; ++i) index[out.elements[i]] = i;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[i][j] = index.at(m2_add(x, out.elements[i], out.elements[j]));
    out.group = FiniteGroup::from_table(std::move(table));
    return out;
}

Section2 m2_zero(const CrossedModule& x) {
    Section2 s;
    s.values.resize(x.object_count());
    for (int i = 0; i < x.object_count(); ++i) s.values[i] = x.bundle().zero(i);
    return s;
}

Section2 m2_add(const CrossedModule& x, const Section2& s, const Section2& t) {
    Section2 r;
    r.values.resize(x.object_count());
    for (int i = 0; i < x.object_count(); ++i)
        r.values[i] = x.bundle().plus(s.values[i], t.values[i]);
    return r;
}

FreeDerivation zeta(const CrossedModule& x, const Section2& s2) {
    const FiniteGroupoid& g = x.groupoid();
    FreeDerivation s;
    s.s0.resize(x.object_count());
    for (int i = 0; i < x.object_count(); ++i) s.s0[i] = x.delta[s2.values[i]];
    s.s1.resize(g.arrow_count());
    for (int a = 0; a < g.arrow_count(); ++a) {
        const int moved = x.action.apply(s2.values[g.src[a]], a);
        s.s1[a] = x.bundle().plus(x.bundle().minus(moved), s2.values[g.tgt[a]]);
    }
#ifndef NDEBUG
    if (!validate_free_derivation(x, s).ok())
        throw Error(ErrorKind::internal_check, "zeta produced a non-derivation");
#endif
    return s;
}

Section2 fder_action_on_m2(const CrossedModule& x, const Section2& s2,
                           const FreeDerivation& t) {
    if (!is_invertible(x, t))
        throw Error(ErrorKind::not_invertible, "the action is defined for FDer* only");
    Section2 r;
    r.values.resize(x.object_count());
    for (int i = 0; i < x.object_count(); ++i) {
        const int a = t.s0[i];
        r.values[i] = x.action.apply(s2.values[x.groupoid().src[a]], a);
    }
    return r;
}

Section2 aut_action_on_m2(const CrossedModule& x, const Section2& s2, const XmodMorphism& f) {
    if (!is_xmod_automorphism(x, f))
        throw Error(ErrorKind::not_automorphism, "f is not an automorphism");
    const XmodMorphism finv = invert_xmod_automorphism(x, f);
    Section2 r;
    r.values.resize(x.object_count());
    for (int i = 0; i < x.object_count(); ++i)
        r.values[i] = finv.bun_map[s2.values[f.obj_map[i]]];
    return r;
}

Section2 actor_peiffer_lifting(const CrossedModule& x, const FreeDerivation& s,
                               const FreeDerivation& t) {
    if (!is_invertible(x, t))
        throw Error(ErrorKind::not_invertible, "lifting needs t in FDer*");
    const FreeDerivation sinv = fder_inverse(x, s);  // throws NotInvertible
    const XmodMorphism f = delta_morphism(x, s);

    // literal evaluation of {s^-1, t}!s: the braiding value s1^-1(t0 -)
    // translated along Delta(s) and acted by s
    Section2 r;
    r.values.resize(x.object_count());
    for (int i = 0; i < x.object_count(); ++i) {
        const int braid_value = sinv.s1[t.s0[f.obj_map[i]]];
        r.values[i] = x.action.apply(braid_value, s.s0[i]);
    }
    return r;
}

ValidationReport validate_2crossed(const TwoCrossedModule& t) {
    ValidationReport report;
    const int nl = t.l.order();
    const int nm = t.m.order();
    const int np = t.p.order();

    if (static_cast<int>(t.d1.size()) != nl || static_cast<int>(t.d2.size()) != nm ||
        static_cast<int>(t.p_on_l.size()) != nl || static_cast<int>(t.p_on_m.size()) != nm ||
        static_cast<int>(t.m_on_l.size()) != nl || static_cast<int>(t.lift.size()) != nm)
        throw Error(ErrorKind::malformed_table, "2-crossed module tables have wrong shapes");

    // d1, d2 homomorphisms and the complex condition d2 d1 = 1
    for (int a = 0; a < nl; ++a)
        for (int b = 0; b < nl; ++b)
            if (t.d1[t.l.mul(a, b)] != t.m.mul(t.d1[a], t.d1[b]))
                report.add("d1 homomorphism", pair(a, b));
    for (int a = 0; a < nm; ++a)
        for (int b = 0; b < nm; ++b)
            if (t.d2[t.m.mul(a, b)] != t.p.mul(t.d2[a], t.d2[b]))
                report.add("d2 homomorphism", pair(a, b));
    for (int a = 0; a < nl; ++a)
        if (t.d2[t.d1[a]] != t.p.unit()) report.add("complex d2 d1 = 1", std::to_string(a));

    // right action laws for P on L, P on M, M on L
    auto check_action = [&report](const FiniteGroup& acted, const FiniteGroup& actor,
                                  const std::vector<std::vector<int>>& table,
                                  const std::string& name) {
        for (int a = 0; a < acted.order(); ++a) {
            if (table[a][actor.unit()] != a) report.add(name + " unit", std::to_string(a));
            for (int x = 0; x < actor.order(); ++x)
                for (int y = 0; y < actor.order(); ++y)
                    if (table[a][actor.mul(x, y)] != table[table[a][x]][y])
                        report.add(name + " composition", triple(a, x, y));
        }
        for (int x = 0; x < actor.order(); ++x)
            for (int a = 0; a < acted.order(); ++a)
                for (int b = 0; b < acted.order(); ++b)
                    if (table[acted.mul(a, b)][x] != acted.mul(table[a][x], table[b][x]))
                        report.add(name + " automorphism", triple(a, b, x));
    };
    check_action(t.l, t.p, t.p_on_l, "P on L");
    check_action(t.m, t.p, t.p_on_m, "P on M");
    check_action(t.l, t.m, t.m_on_l, "M on L");

    // equivariance of d1 and d2 (P acts on itself by conjugation)
    for (int a = 0; a < nl; ++a)
        for (int x = 0; x < np; ++x)
            if (t.d1[t.p_on_l[a][x]] != t.p_on_m[t.d1[a]][x])
                report.add("d1 equivariant", pair(a, x));
    for (int a = 0; a < nm; ++a)
        for (int x = 0; x < np; ++x)
            if (t.d2[t.p_on_m[a][x]] != t.p.conj(t.d2[a], x))
                report.add("d2 equivariant", pair(a, x));

    // crossed module axioms for d1 with the M-action
    for (int a = 0; a < nl; ++a)
        for (int m = 0; m < nm; ++m)
            if (t.d1[t.m_on_l[a][m]] != t.m.conj(t.d1[a], m))
                report.add("CM1 for d1", pair(a, m));
    for (int a = 0; a < nl; ++a)
        for (int b = 0; b < nl; ++b)
            if (t.m_on_l[a][t.d1[b]] != t.l.conj(a, b)) report.add("CM2 for d1", pair(a, b));

    // compatibility (l^m)^p = (l^p)^{m^p}
    for (int a = 0; a < nl; ++a)
        for (int m = 0; m < nm; ++m)
            for (int x = 0; x < np; ++x)
                if (t.p_on_l[t.m_on_l[a][m]][x] !=
                    t.m_on_l[t.p_on_l[a][x]][t.p_on_m[m][x]])
                    report.add("action compatibility", triple(a, m, x));

    for (const auto& row : t.lift)
        if (static_cast<int>(row.size()) != nm)
            throw Error(ErrorKind::malformed_table, "lift table has wrong shape");

    // P1: d1<m0,m1> = m0^-1 m1^-1 m0 m1^{d2 m0}
    for (int m0 = 0; m0 < nm; ++m0)
        for (int m1 = 0; m1 < nm; ++m1) {
            const int rhs = t.m.mul(t.m.mul(t.m.mul(t.m.inv(m0), t.m.inv(m1)), m0),
                                    t.p_on_m[m1][t.d2[m0]]);
            if (t.d1[t.lift[m0][m1]] != rhs) report.add("P1", pair(m0, m1));
        }

    // P2: <d1 l, m> = l^-1 l^m
    for (int a = 0; a < nl; ++a)
        for (int m = 0; m < nm; ++m)
            if (t.lift[t.d1[a]][m] != t.l.mul(t.l.inv(a), t.m_on_l[a][m]))
                report.add("P2", pair(a, m));

    // P3: <m, d1 l> = (l^m)^-1 l^{d2 m}
    for (int m = 0; m < nm; ++m)
        for (int a = 0; a < nl; ++a) {
            const int rhs = t.l.mul(t.l.inv(t.m_on_l[a][m]), t.p_on_l[a][t.d2[m]]);
            if (t.lift[m][t.d1[a]] != rhs) report.add("P3", pair(m, a));
        }

    // P4: <m0, m1 m2> = <m0, m2> <m0, m1>^{m2^{d2 m0}}
    for (int m0 = 0; m0 < nm; ++m0)
        for (int m1 = 0; m1 < nm; ++m1)
            for (int m2 = 0; m2 < nm; ++m2) {
                const int twisted = t.p_on_m[m2][t.d2[m0]];
                const int rhs = t.l.mul(t.lift[m0][m2], t.m_on_l[t.lift[m0][m1]][twisted]);
                if (t.lift[m0][t.m.mul(m1, m2)] != rhs) report.add("P4", triple(m0, m1, m2));
            }

    // P5: <m0 m1, m2> = <m0, m2>^{m1} <m1, m2^{d2 m0}>
    for (int m0 = 0; m0 < nm; ++m0)
        for (int m1 = 0; m1 < nm; ++m1)
            for (int m2 = 0; m2 < nm; ++m2) {
                const int rhs = t.l.mul(t.m_on_l[t.lift[m0][m2]][m1],
                                        t.lift[m1][t.p_on_m[m2][t.d2[m0]]]);
                if (t.lift[t.m.mul(m0, m1)][m2] != rhs) report.add("P5", triple(m0, m1, m2));
            }

    // P6: <m0, m1>^p = <m0^p, m1^p>
    for (int m0 = 0; m0 < nm; ++m0)
        for (int m1 = 0; m1 < nm; ++m1)
            for (int x = 0; x < np; ++x)
                if (t.p_on_l[t.lift[m0][m1]][x] != t.lift[t.p_on_m[m0][x]][t.p_on_m[m1][x]])
                    report.add("P6", triple(m0, m1, x));

    return report;
}

ActorTwoCrossed build_actor_2crossed(const CrossedModule& x) {
    ActorTwoCrossed out;
    out.aut = enumerate_xmod_automorphisms(x);
    out.fder = enumerate_fder_star(x);
    out.m2 = enumerate_m2(x);

    TwoCrossedModule& t = out.tcm;
    t.l = out.m2.group;
    t.m = out.fder.group;
    t.p = out.aut.group;

    const int nl = t.l.order();
    const int nm = t.m.order();
    const int np = t.p.order();

    t.d1.resize(nl);
    for (int i = 0; i < nl; ++i) t.d1[i] = out.fder.index_of(zeta(x, out.m2.elements[i]));

    t.d2.resize(nm);
    for (int i = 0; i < nm; ++i)
        t.d2[i] = out.aut.index_of(delta_morphism(x, out.fder.elements[i]));

    t.p_on_l.assign(nl, std::vector<int>(np));
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < np; ++j)
            t.p_on_l[i][j] =
                out.m2.index_of(aut_action_on_m2(x, out.m2.elements[i], out.aut.elements[j]));

    t.p_on_m.assign(nm, std::vector<int>(np));
    for (int i = 0; i < nm; ++i)
        for (int j = 0; j < np; ++j)
            t.p_on_m[i][j] =
                out.fder.index_of(aut_action(x, out.fder.elements[i], out.aut.elements[j]));

    t.m_on_l.assign(nl, std::vector<int>(nm));
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nm; ++j)
            t.m_on_l[i][j] =
                out.m2.index_of(fder_action_on_m2(x, out.m2.elements[i], out.fder.elements[j]));

    t.lift.assign(nm, std::vector<int>(nm));
    for (int i = 0; i < nm; ++i)
        for (int j = 0; j < nm; ++j)
            t.lift[i][j] = out.m2.index_of(
                actor_peiffer_lifting(x, out.fder.elements[i], out.fder.elements[j]));

    return out;
}

}  // namespace xmod
