#include "xmod/derivations.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

namespace xmod {

namespace {

std::string pair(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

bool is_permutation(const std::vector<int>& v) {
    std::vector<bool> hit(v.size(), false);
    for (int x : v) {
        if (x < 0 || x >= static_cast<int>(v.size()) || hit[x]) return false;
        hit[x] = true;
    }
    return true;
}

std::vector<int> invert_permutation(const std::vector<int>& v) {
    std::vector<int> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[v[i]] = static_cast<int>(i);
    return r;
}

// triples (p, q, r) with r = p + q, grouped by max(p, q, r) so the
// derivation law can be checked as soon as a triple is complete
std::vector<std::vector<std::array<int, 3>>> law_triples(const FiniteGroupoid& g) {
    std::vector<std::vector<std::array<int, 3>>> by_max(g.arrow_count());
    for (int p = 0; p < g.arrow_count(); ++p)
        for (int q = 0; q < g.arrow_count(); ++q) {
            const int r = g.comp[p][q];
            if (r < 0) continue;
            by_max[std::max({p, q, r})].push_back({p, q, r});
        }
    return by_max;
}

// all maps arrows -> elements with base(s1 a) = fibre_of[a], subject to
// s1(p+q) = s1(p)^{exp_arrow[q]} + s1(q)
void search_derivations(const CrossedModule& x, const std::vector<int>& fibre_of,
                        const std::vector<int>& exp_arrow,
                        const std::vector<std::vector<std::array<int, 3>>>& triples,
                        std::vector<int>& values, int next, SearchBudget& budget,
                        std::vector<std::vector<int>>& out) {
    const FiniteGroupoid& g = x.groupoid();
    if (next == g.arrow_count()) {
        out.push_back(values);
        return;
    }
    for (int cand : x.bundle().fibre(fibre_of[next])) {
        budget.charge();
        values[next] = cand;
        bool ok = true;
        for (const auto& t : triples[next]) {
            const int acted = x.action.act[values[t[0]]][exp_arrow[t[1]]];
            if (acted < 0 || x.bundle().add[acted][values[t[1]]] != values[t[2]]) {
                ok = false;
                break;
            }
        }
        if (ok) search_derivations(x, fibre_of, exp_arrow, triples, values, next + 1, budget, out);
        values[next] = -1;
    }
}

std::vector<std::vector<int>> all_derivations(const CrossedModule& x,
                                              const std::vector<int>& g0,
                                              const std::vector<int>& g1,
                                              SearchBudget& budget) {
    const FiniteGroupoid& g = x.groupoid();
    std::vector<int> fibre_of(g.arrow_count());
    for (int a = 0; a < g.arrow_count(); ++a) fibre_of[a] = g0[g.tgt[a]];
    const auto triples = law_triples(g);
    std::vector<int> values(g.arrow_count(), -1);
    std::vector<std::vector<int>> out;
    search_derivations(x, fibre_of, g1, triples, values, 0, budget, out);
    return out;
}

// all sections of the target map with tgt(s0 x) = base_of[x], lexicographic
std::vector<std::vector<int>> all_sections(const FiniteGroupoid& g,
                                           const std::vector<int>& base_of,
                                           SearchBudget& budget) {
    std::vector<std::vector<int>> choices(g.object_count);
    for (int x = 0; x < g.object_count; ++x) choices[x] = costar(g, base_of[x]);
    std::vector<std::vector<int>> out;
    std::vector<int> cur(g.object_count);
    std::vector<size_t> idx(g.object_count, 0);
    if (g.object_count == 0) {
        out.push_back({});
        return out;
    }
    int level = 0;
    while (level >= 0) {
        if (level == g.object_count) {
            out.push_back(cur);
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
    return out;
}

}  // namespace

ValidationReport validate_homotopy(const CrossedModule& dom, const CrossedModule& cod,
                                   const Homotopy& h) {
    ValidationReport report;
    report.merge(validate_xmod_morphism(dom, cod, h.base), "base");
    if (!report.ok()) return report;

    const FiniteGroupoid& g = dom.groupoid();
    const FiniteGroupoid& gh = cod.groupoid();
    if (static_cast<int>(h.s0.size()) != dom.object_count() ||
        static_cast<int>(h.s1.size()) != g.arrow_count()) {
        report.add("shape", "s0/s1 do not cover the domain");
        return report;
    }
    for (int a : h.s0)
        if (a < 0 || a >= gh.arrow_count()) {
            report.add("shape", "s0 value out of range");
            return report;
        }
    for (int e : h.s1)
        if (e < 0 || e >= cod.bundle().element_count()) {
            report.add("shape", "s1 value out of range");
            return report;
        }

    for (int x = 0; x < dom.object_count(); ++x)
        if (gh.tgt[h.s0[x]] != h.base.obj_map[x])
            report.add("s0 typing", "object " + std::to_string(x));
    for (int a = 0; a < g.arrow_count(); ++a)
        if (cod.bundle().base[h.s1[a]] != h.base.obj_map[g.tgt[a]])
            report.add("s1 typing", "arrow " + std::to_string(a));
    if (!report.ok()) return report;

    for (int a = 0; a < g.arrow_count(); ++a)
        for (int b = 0; b < g.arrow_count(); ++b) {
            const int ab = g.comp[a][b];
            if (ab < 0) continue;
            const int acted = cod.action.act[h.s1[a]][h.base.arr_map[b]];
            if (acted < 0 || cod.bundle().add[acted][h.s1[b]] != h.s1[ab])
                report.add("derivation law", pair(a, b));
        }
    return report;
}

ValidationReport validate_free_derivation(const CrossedModule& x, const FreeDerivation& s) {
    return validate_homotopy(x, x, Homotopy{s.s0, s.s1, identity_xmod_morphism(x)});
}

ValidationReport validate_section(const FiniteGroupoid& g, const CoadmissibleSection& s) {
    ValidationReport report;
    if (static_cast<int>(s.arrows.size()) != g.object_count) {
        report.add("shape", "section does not cover the objects");
        return report;
    }
    std::vector<int> source(g.object_count);
    for (int x = 0; x < g.object_count; ++x) {
        const int a = s.arrows[x];
        if (a < 0 || a >= g.arrow_count()) {
            report.add("shape", "arrow out of range");
            return report;
        }
        if (g.tgt[a] != x) report.add("section of target", "object " + std::to_string(x));
        source[x] = g.src[a];
    }
    if (!is_permutation(source)) report.add("coadmissible", "src o s0 is not a bijection");
    return report;
}

ValidationReport validate_plain_derivation(const CrossedModule& x, const PlainDerivation& d) {
    FreeDerivation s;
    s.s0.resize(x.object_count());
    for (int i = 0; i < x.object_count(); ++i) s.s0[i] = x.groupoid().identity_at[i];
    s.s1 = d.values;
    return validate_free_derivation(x, s);
}

XmodMorphism induced_morphism(const CrossedModule& dom, const CrossedModule& cod,
                              const Homotopy& h) {
    {
        ValidationReport r = validate_homotopy(dom, cod, h);
        if (!r.ok())
            throw Error(ErrorKind::invalid_homotopy, r.violations[0].axiom + ", e.g. " +
                                                         r.violations[0].witness);
    }
    const FiniteGroupoid& g = dom.groupoid();
    const FiniteGroupoid& gh = cod.groupoid();
    XmodMorphism f;
    f.obj_map.resize(dom.object_count());
    for (int x = 0; x < dom.object_count(); ++x) f.obj_map[x] = gh.src[h.s0[x]];

    f.arr_map.resize(g.arrow_count());
    for (int a = 0; a < g.arrow_count(); ++a) {
        int arrow = gh.compose(h.s0[g.src[a]], h.base.arr_map[a]);
        arrow = gh.compose(arrow, cod.delta[h.s1[a]]);
        arrow = gh.compose(arrow, gh.neg(h.s0[g.tgt[a]]));
        f.arr_map[a] = arrow;
    }

    f.bun_map.resize(dom.bundle().element_count());
    for (int c = 0; c < dom.bundle().element_count(); ++c) {
        const int sum = cod.bundle().plus(h.base.bun_map[c], h.s1[dom.delta[c]]);
        f.bun_map[c] = cod.action.apply(sum, gh.neg(h.s0[dom.bundle().base[c]]));
    }

#ifndef NDEBUG
    if (!validate_xmod_morphism(dom, cod, f).ok())
        throw Error(ErrorKind::internal_check, "induced map failed morphism validation");
#endif
    return f;
}

FreeDerivation fder_identity(const CrossedModule& x) {
    FreeDerivation s;
    s.s0.resize(x.object_count());
    for (int i = 0; i < x.object_count(); ++i) s.s0[i] = x.groupoid().identity_at[i];
    s.s1.resize(x.groupoid().arrow_count());
    for (int a = 0; a < x.groupoid().arrow_count(); ++a)
        s.s1[a] = x.bundle().zero(x.groupoid().tgt[a]);
    return s;
}

XmodMorphism delta_morphism(const CrossedModule& x, const FreeDerivation& s) {
    return induced_morphism(x, x, Homotopy{s.s0, s.s1, identity_xmod_morphism(x)});
}

FreeDerivation fder_multiply(const CrossedModule& x, const FreeDerivation& s,
                             const FreeDerivation& t) {
    const XmodMorphism g = delta_morphism(x, t);
    const FiniteGroupoid& gg = x.groupoid();
    FreeDerivation r;
    r.s0.resize(x.object_count());
    for (int z = 0; z < x.object_count(); ++z)
        r.s0[z] = gg.compose(s.s0[g.obj_map[z]], t.s0[z]);
    r.s1.resize(gg.arrow_count());
    for (int a = 0; a < gg.arrow_count(); ++a) {
        const int acted = x.action.apply(s.s1[g.arr_map[a]], t.s0[gg.tgt[a]]);
        r.s1[a] = x.bundle().plus(t.s1[a], acted);
    }
    return r;
}

bool is_invertible(const CrossedModule& x, const FreeDerivation& s) {
    const XmodMorphism f = delta_morphism(x, s);
    const bool f1_bij = is_permutation(f.arr_map);
    const bool f2_bij = is_permutation(f.bun_map);
    if (f1_bij != f2_bij)
        throw Error(ErrorKind::internal_check,
                    "f1/f2 bijectivity disagree for a free derivation");
    return f1_bij;
}

FreeDerivation fder_inverse(const CrossedModule& x, const FreeDerivation& s) {
    if (!is_invertible(x, s))
        throw Error(ErrorKind::not_invertible, "free derivation is not invertible");
    const XmodMorphism f = delta_morphism(x, s);
    const std::vector<int> f0inv = invert_permutation(f.obj_map);
    const std::vector<int> f1inv = invert_permutation(f.arr_map);
    const FiniteGroupoid& g = x.groupoid();

    FreeDerivation r;
    r.s0.resize(x.object_count());
    for (int z = 0; z < x.object_count(); ++z) r.s0[z] = g.neg(s.s0[f0inv[z]]);
    r.s1.resize(g.arrow_count());
    for (int a = 0; a < g.arrow_count(); ++a) {
        const int acted = x.action.apply(s.s1[f1inv[a]], r.s0[g.tgt[a]]);
        r.s1[a] = x.bundle().minus(acted);
    }

    const FreeDerivation id = fder_identity(x);
    if (!(fder_multiply(x, s, r) == id) || !(fder_multiply(x, r, s) == id))
        throw Error(ErrorKind::internal_check, "inverse formulas produced a non-inverse");
    return r;
}

std::vector<FreeDerivation> enumerate_fder(const CrossedModule& x) {
    SearchBudget budget;
    std::vector<int> base_of(x.object_count());
    for (int i = 0; i < x.object_count(); ++i) base_of[i] = i;
    const auto sections = all_sections(x.groupoid(), base_of, budget);

    const XmodMorphism id = identity_xmod_morphism(x);
    const auto derivations = all_derivations(x, id.obj_map, id.arr_map, budget);

    std::vector<FreeDerivation> out;
    out.reserve(sections.size() * derivations.size());
    for (const auto& s0 : sections)
        for (const auto& s1 : derivations) out.push_back(FreeDerivation{s0, s1});
    return out;
}

int FDerStarGroup::index_of(const FreeDerivation& s) const {
    const auto it = std::lower_bound(elements.begin(), elements.end(), s);
    if (it == elements.end() || !(*it == s))
        throw Error(ErrorKind::not_invertible, "free derivation is not in FDer*");
    return static_cast<int>(it - elements.begin());
}

FDerStarGroup enumerate_fder_star(const CrossedModule& x) {
    FDerStarGroup out;
    for (const auto& s : enumerate_fder(x))
        if (is_invertible(x, s)) out.elements.push_back(s);

    const int n = static_cast<int>(out.elements.size());
    std::map<FreeDerivation, int> index;
    for (int i = 0; i < n; ++i) index[out.elements[i]] = i;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const FreeDerivation p = fder_multiply(x, out.elements[i], out.elements[j]);
            const auto it = index.find(p);
            if (it == index.end())
                throw Error(ErrorKind::internal_check, "FDer* not closed under *");
            table[i][j] = it->second;
        }
    out.group = FiniteGroup::from_table(std::move(table));
    return out;
}

std::vector<Homotopy> enumerate_homotopies(const CrossedModule& x, const XmodMorphism& g) {
    {
        ValidationReport r = validate_xmod_morphism(x, x, g);
        if (!r.ok()) throw Error(ErrorKind::domain_mismatch, "base is not an endomorphism");
    }
    SearchBudget budget;
    std::vector<int> base_of(x.object_count());
    for (int i = 0; i < x.object_count(); ++i) base_of[i] = g.obj_map[i];
    const auto sections = all_sections(x.groupoid(), base_of, budget);
    const auto derivations = all_derivations(x, g.obj_map, g.arr_map, budget);

    std::vector<Homotopy> out;
    out.reserve(sections.size() * derivations.size());
    for (const auto& s0 : sections)
        for (const auto& s1 : derivations) out.push_back(Homotopy{s0, s1, g});
    return out;
}

FreeDerivation aut_action(const CrossedModule& x, const FreeDerivation& s,
                          const XmodMorphism& f) {
    if (!is_xmod_automorphism(x, f))
        throw Error(ErrorKind::not_automorphism, "f is not an automorphism");
    if (!is_invertible(x, s))
        throw Error(ErrorKind::not_invertible, "the Aut action is defined on FDer* only");
    const XmodMorphism finv = invert_xmod_automorphism(x, f);
    FreeDerivation r;
    r.s0.resize(x.object_count());
    for (int z = 0; z < x.object_count(); ++z)
        r.s0[z] = finv.arr_map[s.s0[f.obj_map[z]]];
    r.s1.resize(x.groupoid().arrow_count());
    for (int a = 0; a < x.groupoid().arrow_count(); ++a)
        r.s1[a] = finv.bun_map[s.s1[f.arr_map[a]]];
    return r;
}

CoadmissibleSection msec_identity(const FiniteGroupoid& g) {
    CoadmissibleSection s;
    s.arrows.resize(g.object_count);
    for (int x = 0; x < g.object_count; ++x) s.arrows[x] = g.identity_at[x];
    return s;
}

CoadmissibleSection msec_multiply(const FiniteGroupoid& g, const CoadmissibleSection& s,
                                  const CoadmissibleSection& t) {
    CoadmissibleSection r;
    r.arrows.resize(g.object_count);
    for (int x = 0; x < g.object_count; ++x)
        r.arrows[x] = g.compose(s.arrows[g.src[t.arrows[x]]], t.arrows[x]);
    return r;
}

int MsecGroup::index_of(const CoadmissibleSection& s) const {
    const auto it = std::lower_bound(elements.begin(), elements.end(), s);
    if (it == elements.end() || !(*it == s))
        throw Error(ErrorKind::not_invertible, "section is not coadmissible");
    return static_cast<int>(it - elements.begin());
}

MsecGroup enumerate_msec(const FiniteGroupoid& g) {
    SearchBudget budget;
    std::vector<int> base_of(g.object_count);
    for (int i = 0; i < g.object_count; ++i) base_of[i] = i;
    MsecGroup out;
    for (const auto& arrows : all_sections(g, base_of, budget)) {
        CoadmissibleSection s{arrows};
        if (validate_section(g, s).ok()) out.elements.push_back(std::move(s));
    }
    const int n = static_cast<int>(out.elements.size());
    std::map<CoadmissibleSection, int> index;
    for (int i = 0; i < n; ++i) index[out.elements[i]] = i;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const CoadmissibleSection p = msec_multiply(g, out.elements[i], out.elements[j]);
            const auto it = index.find(p);
            if (it == index.end())
                throw Error(ErrorKind::internal_check, "M(G) not closed under *");
            table[i][j] = it->second;
        }
    out.group = FiniteGroup::from_table(std::move(table));
    return out;
}

PlainDerivation der_zero(const CrossedModule& x) {
    PlainDerivation d;
    d.values.resize(x.groupoid().arrow_count());
    for (int a = 0; a < x.groupoid().arrow_count(); ++a)
        d.values[a] = x.bundle().zero(x.groupoid().tgt[a]);
    return d;
}

PlainDerivation der_multiply(const CrossedModule& x, const PlainDerivation& s,
                             const PlainDerivation& t) {
    const FiniteGroupoid& g = x.groupoid();
    PlainDerivation r;
    r.values.resize(g.arrow_count());
    for (int a = 0; a < g.arrow_count(); ++a) {
        const int shifted = g.compose(a, x.delta[t.values[a]]);
        r.values[a] = x.bundle().plus(t.values[a], s.values[shifted]);
    }
    return r;
}

PlainDerivation msec_action_on_der(const CrossedModule& x, const PlainDerivation& s,
                                   const CoadmissibleSection& t) {
    const FiniteGroupoid& g = x.groupoid();
    PlainDerivation r;
    r.values.resize(g.arrow_count());
    for (int a = 0; a < g.arrow_count(); ++a) {
        int w = g.compose(t.arrows[g.src[a]], a);
        w = g.compose(w, g.neg(t.arrows[g.tgt[a]]));
        r.values[a] = x.action.apply(s.values[w], t.arrows[g.tgt[a]]);
    }
    return r;
}

bool der_is_invertible(const CrossedModule& x, const PlainDerivation& d) {
    FreeDerivation s;
    s.s0 = fder_identity(x).s0;
    s.s1 = d.values;
    return is_invertible(x, s);
}

int DerStarGroup::index_of(const PlainDerivation& d) const {
    const auto it = std::lower_bound(elements.begin(), elements.end(), d);
    if (it == elements.end() || !(*it == d))
        throw Error(ErrorKind::not_invertible, "derivation is not in Der*");
    return static_cast<int>(it - elements.begin());
}

DerStarGroup enumerate_der_star(const CrossedModule& x) {
    SearchBudget budget;
    const XmodMorphism id = identity_xmod_morphism(x);
    DerStarGroup out;
    for (const auto& values : all_derivations(x, id.obj_map, id.arr_map, budget)) {
        PlainDerivation d{values};
        if (der_is_invertible(x, d)) out.elements.push_back(std::move(d));
    }
    const int n = static_cast<int>(out.elements.size());
    std::map<PlainDerivation, int> index;
    for (int i = 0; i < n; ++i) index[out.elements[i]] = i;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const PlainDerivation p = der_multiply(x, out.elements[i], out.elements[j]);
            const auto it = index.find(p);
            if (it == index.end())
                throw Error(ErrorKind::internal_check, "Der* not closed under *");
            table[i][j] = it->second;
        }
    out.group = FiniteGroup::from_table(std::move(table));
    return out;
}

std::pair<CoadmissibleSection, PlainDerivation> split_fder(const CrossedModule& x,
                                                           const FreeDerivation& s) {
    if (!is_invertible(x, s))
        throw Error(ErrorKind::not_invertible, "split is defined on FDer* only");
    CoadmissibleSection sec{s.s0};
    if (!validate_section(x.groupoid(), sec).ok())
        throw Error(ErrorKind::internal_check, "invertible derivation with non-coadmissible s0");
    return {std::move(sec), PlainDerivation{s.s1}};
}

FreeDerivation merge_fder(const CrossedModule& x, const CoadmissibleSection& s0,
                          const PlainDerivation& s1) {
    (void)x;
    return FreeDerivation{s0.arrows, s1.values};
}

}  // namespace xmod
