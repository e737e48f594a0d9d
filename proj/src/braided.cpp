#include "xmod/braided.hpp"

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

bool HomotopyArrow::operator<(const HomotopyArrow& other) const {
    if (target != other.target) return target < other.target;
    if (s0 != other.s0) return s0 < other.s0;
    return s1 < other.s1;
}

bool SectionOverAut::operator<(const SectionOverAut& other) const {
    if (target != other.target) return target < other.target;
    return s2 < other.s2;
}

BraidedCheck validate_braided(const BraidedXmod& b) {
    BraidedCheck check;
    ValidationReport& report = check.report;

    const FiniteGroupoid& g = b.xmod.groupoid();
    const GroupBundle& bun = b.xmod.bundle();
    const int n0 = g.object_count;
    const int arrows = g.arrow_count();
    const int elems = bun.element_count();

    if (static_cast<int>(b.monoid.size()) != n0 ||
        static_cast<int>(b.left_on_arrows.size()) != n0 ||
        static_cast<int>(b.right_on_arrows.size()) != arrows ||
        static_cast<int>(b.left_on_elements.size()) != n0 ||
        static_cast<int>(b.right_on_elements.size()) != elems ||
        static_cast<int>(b.braiding.size()) != arrows)
        throw Error(ErrorKind::malformed_table, "braided structure tables have wrong shapes");
    for (const auto& row : b.monoid)
        if (static_cast<int>(row.size()) != n0)
            throw Error(ErrorKind::malformed_table, "monoid table is not square");

    report.merge(validate_crossed_module(b.xmod).report, "underlying");

    const auto mul = [&b](int x, int y) { return b.monoid[x][y]; };

    // 3.1 monoid
    for (int x = 0; x < n0; ++x) {
        if (mul(b.unit, x) != x || mul(x, b.unit) != x) report.add("3.1 unit", std::to_string(x));
        for (int y = 0; y < n0; ++y)
            for (int z = 0; z < n0; ++z)
                if (mul(mul(x, y), z) != mul(x, mul(y, z)))
                    report.add("3.1 associativity", triple(x, y, z));
    }

    check.regular = true;
    for (int x = 0; x < n0; ++x) {
        bool has_inverse = false;
        for (int y = 0; y < n0; ++y)
            if (mul(x, y) == b.unit && mul(y, x) == b.unit) has_inverse = true;
        if (!has_inverse) check.regular = false;
    }

    // 3.2 monoid actions on arrows
    for (int a = 0; a < arrows; ++a) {
        if (b.left_on_arrows[b.unit][a] != a || b.right_on_arrows[a][b.unit] != a)
            report.add("3.2 action unit", "arrow " + std::to_string(a));
        for (int x = 0; x < n0; ++x) {
            for (int y = 0; y < n0; ++y) {
                if (b.left_on_arrows[mul(x, y)][a] != b.left_on_arrows[x][b.left_on_arrows[y][a]])
                    report.add("3.2 left action composition", triple(x, y, a));
                if (b.right_on_arrows[b.right_on_arrows[a][x]][y] != b.right_on_arrows[a][mul(x, y)])
                    report.add("3.2 right action composition", triple(a, x, y));
                if (b.left_on_arrows[x][b.right_on_arrows[a][y]] !=
                    b.right_on_arrows[b.left_on_arrows[x][a]][y])
                    report.add("3.2 biaction commute", triple(x, a, y));
            }
            if (g.src[b.left_on_arrows[x][a]] != mul(x, g.src[a]) ||
                g.tgt[b.left_on_arrows[x][a]] != mul(x, g.tgt[a]))
                report.add("3.2 source/target equivariance", pair(x, a));
            if (g.src[b.right_on_arrows[a][x]] != mul(g.src[a], x) ||
                g.tgt[b.right_on_arrows[a][x]] != mul(g.tgt[a], x))
                report.add("3.2 source/target equivariance", pair(a, x));
        }
    }
    for (int x = 0; x < n0; ++x) {
        for (int a = 0; a < arrows; ++a)
            for (int c = 0; c < arrows; ++c) {
                if (g.comp[a][c] < 0) continue;
                const int left = g.comp[b.left_on_arrows[x][a]][b.left_on_arrows[x][c]];
                if (left < 0 || left != b.left_on_arrows[x][g.comp[a][c]])
                    report.add("3.2 action preserves composition", triple(x, a, c));
                const int right = g.comp[b.right_on_arrows[a][x]][b.right_on_arrows[c][x]];
                if (right < 0 || right != b.right_on_arrows[g.comp[a][c]][x])
                    report.add("3.2 action preserves composition", triple(a, c, x));
            }
        for (int y = 0; y < n0; ++y) {
            const int e = g.identity_at[y];
            if (e >= 0 && b.left_on_arrows[x][e] != g.identity_at[mul(x, y)])
                report.add("3.2 action preserves identities", pair(x, y));
            if (e >= 0 && b.right_on_arrows[e][x] != g.identity_at[mul(y, x)])
                report.add("3.2 action preserves identities", pair(y, x));
        }
    }

    // 3.2 monoid actions on bundle elements
    for (int c = 0; c < elems; ++c) {
        if (b.left_on_elements[b.unit][c] != c || b.right_on_elements[c][b.unit] != c)
            report.add("3.2 action unit", "element " + std::to_string(c));
        for (int x = 0; x < n0; ++x) {
            for (int y = 0; y < n0; ++y) {
                if (b.left_on_elements[mul(x, y)][c] !=
                    b.left_on_elements[x][b.left_on_elements[y][c]])
                    report.add("3.2 left action composition", triple(x, y, c));
                if (b.right_on_elements[b.right_on_elements[c][x]][y] !=
                    b.right_on_elements[c][mul(x, y)])
                    report.add("3.2 right action composition", triple(c, x, y));
                if (b.left_on_elements[x][b.right_on_elements[c][y]] !=
                    b.right_on_elements[b.left_on_elements[x][c]][y])
                    report.add("3.2 biaction commute", triple(x, c, y));
            }
            if (bun.base[b.left_on_elements[x][c]] != mul(x, bun.base[c]))
                report.add("3.2 base equivariance", pair(x, c));
            if (bun.base[b.right_on_elements[c][x]] != mul(bun.base[c], x))
                report.add("3.2 base equivariance", pair(c, x));
        }
    }
    for (int x = 0; x < n0; ++x)
        for (int c = 0; c < elems; ++c)
            for (int d = 0; d < elems; ++d) {
                if (bun.add[c][d] < 0) continue;
                const int left = bun.add[b.left_on_elements[x][c]][b.left_on_elements[x][d]];
                if (left < 0 || left != b.left_on_elements[x][bun.add[c][d]])
                    report.add("3.2 action preserves addition", triple(x, c, d));
                const int right = bun.add[b.right_on_elements[c][x]][b.right_on_elements[d][x]];
                if (right < 0 || right != b.right_on_elements[bun.add[c][d]][x])
                    report.add("3.2 action preserves addition", triple(c, d, x));
            }

    // 3.3 compatibility with the A1-action on A2
    for (int z = 0; z < n0; ++z)
        for (int c = 0; c < elems; ++c)
            for (int a = 0; a < arrows; ++a) {
                if (b.xmod.action.act[c][a] < 0) continue;
                const int ca = b.xmod.action.act[c][a];
                {
                    const int lhs = b.left_on_elements[z][ca];
                    const int rhs = b.xmod.action
                                        .act[b.left_on_elements[z][c]][b.left_on_arrows[z][a]];
                    if (rhs < 0 || lhs != rhs) report.add("3.3 left", triple(z, c, a));
                }
                {
                    const int lhs = b.right_on_elements[ca][z];
                    const int rhs = b.xmod.action
                                        .act[b.right_on_elements[c][z]][b.right_on_arrows[a][z]];
                    if (rhs < 0 || lhs != rhs) report.add("3.3 right", triple(c, a, z));
                }
            }

    // 3.4 delta equivariance
    for (int z = 0; z < n0; ++z)
        for (int c = 0; c < elems; ++c) {
            if (b.xmod.delta[b.left_on_elements[z][c]] != b.left_on_arrows[z][b.xmod.delta[c]])
                report.add("3.4 delta equivariant", pair(z, c));
            if (b.xmod.delta[b.right_on_elements[c][z]] != b.right_on_arrows[b.xmod.delta[c]][z])
                report.add("3.4 delta equivariant", pair(c, z));
        }

    // 3.5 braiding typing and unit laws
    for (int a = 0; a < arrows; ++a) {
        if (static_cast<int>(b.braiding[a].size()) != arrows)
            throw Error(ErrorKind::malformed_table, "braiding table has wrong shape");
        for (int c = 0; c < arrows; ++c) {
            const int v = b.braiding[a][c];
            if (v < 0 || v >= elems)
                throw Error(ErrorKind::malformed_table, "braiding value out of range");
            if (bun.base[v] != mul(g.tgt[a], g.tgt[c])) report.add("3.5 typing", pair(a, c));
        }
    }
    {
        const int oe = g.identity_at[b.unit];
        if (oe >= 0)
            for (int c = 0; c < arrows; ++c) {
                if (b.braiding[oe][c] != bun.zero_at[g.tgt[c]])
                    report.add("3.5 unit left", std::to_string(c));
                if (b.braiding[c][oe] != bun.zero_at[g.tgt[c]])
                    report.add("3.5 unit right", std::to_string(c));
            }
    }

    // 3.6  {a, b+b'} = {a,b}^{tgt(a).b'} + {a,b'}
    for (int a = 0; a < arrows; ++a)
        for (int p = 0; p < arrows; ++p)
            for (int q = 0; q < arrows; ++q) {
                if (g.comp[p][q] < 0) continue;
                const int lhs = b.braiding[a][g.comp[p][q]];
                const int acted =
                    b.xmod.action.act[b.braiding[a][p]][b.left_on_arrows[g.tgt[a]][q]];
                if (acted < 0 || bun.add[acted][b.braiding[a][q]] != lhs)
                    report.add("3.6", triple(a, p, q));
            }

    // 3.7  {a+a', b} = {a',b} + {a,b}^{a'.tgt(b)}
    for (int p = 0; p < arrows; ++p)
        for (int q = 0; q < arrows; ++q) {
            if (g.comp[p][q] < 0) continue;
            for (int c = 0; c < arrows; ++c) {
                const int lhs = b.braiding[g.comp[p][q]][c];
                const int acted =
                    b.xmod.action.act[b.braiding[p][c]][b.right_on_arrows[q][g.tgt[c]]];
                if (acted < 0 || bun.add[b.braiding[q][c]][acted] != lhs)
                    report.add("3.7", triple(p, q, c));
            }
        }

    // 3.8  delta{a,b} = -(tgt(a).b) - a.src(b) + src(a).b + a.tgt(b)
    for (int a = 0; a < arrows; ++a)
        for (int c = 0; c < arrows; ++c) {
            const int t1 = b.left_on_arrows[g.tgt[a]][c];
            const int t2 = b.right_on_arrows[a][g.src[c]];
            const int t3 = b.left_on_arrows[g.src[a]][c];
            const int t4 = b.right_on_arrows[a][g.tgt[c]];
            if (g.inverse[t1] < 0 || g.inverse[t2] < 0) {
                report.add("3.8", pair(a, c));
                continue;
            }
            int chain = g.comp[g.inverse[t1]][g.inverse[t2]];
            if (chain >= 0) chain = g.comp[chain][t3];
            if (chain >= 0) chain = g.comp[chain][t4];
            if (chain < 0 || chain != b.xmod.delta[b.braiding[a][c]])
                report.add("3.8", pair(a, c));
        }

    // 3.9  {a, delta c'} = -(tgt(a).c') + (src(a).c')^{a.base(c')}
    for (int a = 0; a < arrows; ++a)
        for (int c = 0; c < elems; ++c) {
            const int y = bun.base[c];
            const int lhs = b.braiding[a][b.xmod.delta[c]];
            const int acted =
                b.xmod.action.act[b.left_on_elements[g.src[a]][c]][b.right_on_arrows[a][y]];
            if (acted < 0) {
                report.add("3.9", pair(a, c));
                continue;
            }
            const int rhs = bun.add[bun.negate[b.left_on_elements[g.tgt[a]][c]]][acted];
            if (rhs < 0 || lhs != rhs) report.add("3.9", pair(a, c));
        }

    // 3.10  {delta c, b} = -(c.src(b))^{base(c).b} + c.tgt(b)
    for (int c = 0; c < elems; ++c)
        for (int a = 0; a < arrows; ++a) {
            const int x = bun.base[c];
            const int lhs = b.braiding[b.xmod.delta[c]][a];
            const int acted =
                b.xmod.action.act[b.right_on_elements[c][g.src[a]]][b.left_on_arrows[x][a]];
            if (acted < 0) {
                report.add("3.10", pair(c, a));
                continue;
            }
            const int rhs = bun.add[bun.negate[acted]][b.right_on_elements[c][g.tgt[a]]];
            if (rhs < 0 || lhs != rhs) report.add("3.10", pair(c, a));
        }

    // 3.11  x.{a,b} = {x.a, b},  {a,b}.x = {a, b.x},  {a.x, b} = {a, x.b}
    for (int x = 0; x < n0; ++x)
        for (int a = 0; a < arrows; ++a)
            for (int c = 0; c < arrows; ++c) {
                if (b.left_on_elements[x][b.braiding[a][c]] !=
                    b.braiding[b.left_on_arrows[x][a]][c])
                    report.add("3.11 left", triple(x, a, c));
                if (b.right_on_elements[b.braiding[a][c]][x] !=
                    b.braiding[a][b.right_on_arrows[c][x]])
                    report.add("3.11 right", triple(a, c, x));
                if (b.braiding[b.right_on_arrows[a][x]][c] !=
                    b.braiding[a][b.left_on_arrows[x][c]])
                    report.add("3.11 middle", triple(a, x, c));
            }

    return check;
}

namespace {

// all sections over an automorphism f: s2[x] in the fibre over f0(x)
std::vector<std::vector<int>> sections_over(const CrossedModule& x, const XmodMorphism& f,
                                            SearchBudget& budget) {
    std::vector<std::vector<int>> choices(x.object_count());
    for (int i = 0; i < x.object_count(); ++i)
        choices[i] = x.bundle().fibre(f.obj_map[i]);
    std::vector<std::vector<int>> out;
    std::vector<int> cur(x.object_count());
    std::vector<size_t> idx(x.object_count(), 0);
    if (x.object_count() == 0) {
        out.push_back({});
        return out;
    }
    int level = 0;
    while (level >= 0) {
        if (level == x.object_count()) {
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

AutBraided build_aut_braided(const CrossedModule& x) {
    AutBraided out;
    out.aut = enumerate_xmod_automorphisms(x);
    const int na = out.aut.group.order();
    const FiniteGroupoid& g = x.groupoid();
    const GroupBundle& bun = x.bundle();

    // A1: homotopies over automorphisms whose source endomorphism is
    // again an automorphism
    std::map<HomotopyArrow, int> arrow_index;
    std::vector<int> source_of;
    for (int f = 0; f < na; ++f) {
        for (const Homotopy& h : enumerate_homotopies(x, out.aut.elements[f])) {
            const XmodMorphism src = induced_morphism(x, x, h);
            if (!is_xmod_automorphism(x, src)) continue;
            HomotopyArrow arrow{h.s0, h.s1, f};
            arrow_index[arrow] = static_cast<int>(out.arrows.size());
            out.arrows.push_back(arrow);
            source_of.push_back(out.aut.index_of(src));
        }
    }
    const int arrows = static_cast<int>(out.arrows.size());
    const auto arrow_id = [&arrow_index](const HomotopyArrow& a) {
        const auto it = arrow_index.find(a);
        if (it == arrow_index.end())
            throw Error(ErrorKind::internal_check, "homotopy arrow missing from the carrier");
        return it->second;
    };

    std::vector<int> a_src = source_of;
    std::vector<int> a_tgt(arrows);
    for (int i = 0; i < arrows; ++i) a_tgt[i] = out.arrows[i].target;

    std::vector<std::vector<int>> comp(arrows, std::vector<int>(arrows, -1));
    for (int i = 0; i < arrows; ++i)
        for (int j = 0; j < arrows; ++j) {
            if (a_tgt[i] != a_src[j]) continue;
            const HomotopyArrow& a = out.arrows[i];
            const HomotopyArrow& b = out.arrows[j];
            HomotopyArrow c;
            c.target = b.target;
            c.s0.resize(x.object_count());
            for (int z = 0; z < x.object_count(); ++z)
                c.s0[z] = g.compose(a.s0[z], b.s0[z]);
            c.s1.resize(g.arrow_count());
            for (int z = 0; z < g.arrow_count(); ++z) {
                const int acted = x.action.apply(a.s1[z], b.s0[g.tgt[z]]);
                c.s1[z] = bun.plus(b.s1[z], acted);
            }
            comp[i][j] = arrow_id(c);
        }

    FiniteGroupoid g1 = FiniteGroupoid::from_tables(na, a_src, a_tgt, comp);

    // A2: sections over automorphisms, target-major
    std::map<SectionOverAut, int> elem_index;
    {
        SearchBudget budget;
        for (int f = 0; f < na; ++f)
            for (const auto& s2 : sections_over(x, out.aut.elements[f], budget)) {
                SectionOverAut e{s2, f};
                elem_index[e] = static_cast<int>(out.elements.size());
                out.elements.push_back(e);
            }
    }
    const int elems = static_cast<int>(out.elements.size());
    const auto elem_id = [&elem_index](const SectionOverAut& e) {
        const auto it = elem_index.find(e);
        if (it == elem_index.end())
            throw Error(ErrorKind::internal_check, "section missing from the carrier");
        return it->second;
    };

    GroupBundle b2;
    b2.object_count = na;
    b2.base.resize(elems);
    for (int i = 0; i < elems; ++i) b2.base[i] = out.elements[i].target;
    b2.zero_at.assign(na, -1);
    for (int f = 0; f < na; ++f) {
        SectionOverAut zero;
        zero.target = f;
        zero.s2.resize(x.object_count());
        for (int z = 0; z < x.object_count(); ++z)
            zero.s2[z] = bun.zero(out.aut.elements[f].obj_map[z]);
        b2.zero_at[f] = elem_id(zero);
    }
    b2.negate.resize(elems);
    b2.add.assign(elems, std::vector<int>(elems, -1));
    for (int i = 0; i < elems; ++i) {
        SectionOverAut neg = out.elements[i];
        for (int z = 0; z < x.object_count(); ++z) neg.s2[z] = bun.minus(neg.s2[z]);
        b2.negate[i] = elem_id(neg);
        for (int j = 0; j < elems; ++j) {
            if (out.elements[i].target != out.elements[j].target) continue;
            SectionOverAut sum = out.elements[i];
            for (int z = 0; z < x.object_count(); ++z)
                sum.s2[z] = bun.plus(out.elements[i].s2[z], out.elements[j].s2[z]);
            b2.add[i][j] = elem_id(sum);
        }
    }

    // delta(s2, f) = (x -> delta(s2 x), a -> -s2(src a)^{f1 a} + s2(tgt a), f)
    std::vector<int> delta2(elems);
    for (int i = 0; i < elems; ++i) {
        const SectionOverAut& e = out.elements[i];
        const XmodMorphism& f = out.aut.elements[e.target];
        HomotopyArrow d;
        d.target = e.target;
        d.s0.resize(x.object_count());
        for (int z = 0; z < x.object_count(); ++z) d.s0[z] = x.delta[e.s2[z]];
        d.s1.resize(g.arrow_count());
        for (int a = 0; a < g.arrow_count(); ++a) {
            const int moved = x.action.apply(e.s2[g.src[a]], f.arr_map[a]);
            d.s1[a] = bun.plus(bun.minus(moved), e.s2[g.tgt[a]]);
        }
        delta2[i] = arrow_id(d);
    }

    // (s2, f)^{(t0, t1, g')} = (x -> s2(x)^{t0 x}, g'), defined when the
    // arrow starts at f
    std::vector<std::vector<int>> act2(elems, std::vector<int>(arrows, -1));
    for (int i = 0; i < elems; ++i)
        for (int j = 0; j < arrows; ++j) {
            if (out.elements[i].target != a_src[j]) continue;
            SectionOverAut r;
            r.target = a_tgt[j];
            r.s2.resize(x.object_count());
            for (int z = 0; z < x.object_count(); ++z)
                r.s2[z] = x.action.apply(out.elements[i].s2[z], out.arrows[j].s0[z]);
            act2[i][j] = elem_id(r);
        }

    BraidedXmod& braided = out.braided;
    braided.xmod.action.bundle = std::move(b2);
    braided.xmod.action.g = std::move(g1);
    braided.xmod.action.act = std::move(act2);
    braided.xmod.delta = std::move(delta2);
    braided.monoid = out.aut.group.table();
    braided.unit = out.aut.group.unit();

    braided.left_on_arrows.assign(na, std::vector<int>(arrows));
    braided.right_on_arrows.assign(arrows, std::vector<int>(na));
    for (int h = 0; h < na; ++h) {
        const XmodMorphism& hm = out.aut.elements[h];
        for (int j = 0; j < arrows; ++j) {
            const HomotopyArrow& a = out.arrows[j];
            HomotopyArrow left;
            left.target = out.aut.group.mul(h, a.target);
            left.s0.resize(x.object_count());
            left.s1.resize(g.arrow_count());
            for (int z = 0; z < x.object_count(); ++z) left.s0[z] = hm.arr_map[a.s0[z]];
            for (int z = 0; z < g.arrow_count(); ++z) left.s1[z] = hm.bun_map[a.s1[z]];
            braided.left_on_arrows[h][j] = arrow_id(left);

            HomotopyArrow right;
            right.target = out.aut.group.mul(a.target, h);
            right.s0.resize(x.object_count());
            right.s1.resize(g.arrow_count());
            for (int z = 0; z < x.object_count(); ++z) right.s0[z] = a.s0[hm.obj_map[z]];
            for (int z = 0; z < g.arrow_count(); ++z) right.s1[z] = a.s1[hm.arr_map[z]];
            braided.right_on_arrows[j][h] = arrow_id(right);
        }
    }

    braided.left_on_elements.assign(na, std::vector<int>(elems));
    braided.right_on_elements.assign(elems, std::vector<int>(na));
    for (int h = 0; h < na; ++h) {
        const XmodMorphism& hm = out.aut.elements[h];
        for (int i = 0; i < elems; ++i) {
            const SectionOverAut& e = out.elements[i];
            SectionOverAut left;
            left.target = out.aut.group.mul(h, e.target);
            left.s2.resize(x.object_count());
            for (int z = 0; z < x.object_count(); ++z) left.s2[z] = hm.bun_map[e.s2[z]];
            braided.left_on_elements[h][i] = elem_id(left);

            SectionOverAut right;
            right.target = out.aut.group.mul(e.target, h);
            right.s2.resize(x.object_count());
            for (int z = 0; z < x.object_count(); ++z) right.s2[z] = e.s2[hm.obj_map[z]];
            braided.right_on_elements[i][h] = elem_id(right);
        }
    }

    // {(s0,s1,f), (t0,t1,f')} = (s1 o t0, f f')
    braided.braiding.assign(arrows, std::vector<int>(arrows));
    for (int i = 0; i < arrows; ++i)
        for (int j = 0; j < arrows; ++j) {
            SectionOverAut v;
            v.target = out.aut.group.mul(out.arrows[i].target, out.arrows[j].target);
            v.s2.resize(x.object_count());
            for (int z = 0; z < x.object_count(); ++z)
                v.s2[z] = out.arrows[i].s1[out.arrows[j].s0[z]];
            braided.braiding[i][j] = elem_id(v);
        }

    return out;
}

Braided2Crossed braided_to_2crossed(const BraidedXmod& b) {
    {
        const BraidedCheck check = validate_braided(b);
        if (!check.report.ok())
            throw Error(ErrorKind::malformed_table, "input braided structure fails validation");
        if (!check.regular)
            throw Error(ErrorKind::not_regular, "A0 is a monoid but not a group");
    }
    const FiniteGroupoid& g = b.xmod.groupoid();
    const GroupBundle& bun = b.xmod.bundle();
    const int e = b.unit;

    Braided2Crossed out;
    TwoCrossedModule& t = out.tcm;
    t.p = FiniteGroup::from_table(b.monoid);

    out.l_carrier = bun.fibre(e);
    std::map<int, int> l_local;
    for (size_t i = 0; i < out.l_carrier.size(); ++i)
        l_local[out.l_carrier[i]] = static_cast<int>(i);
    {
        const int nl = static_cast<int>(out.l_carrier.size());
        std::vector<std::vector<int>> table(nl, std::vector<int>(nl));
        for (int i = 0; i < nl; ++i)
            for (int j = 0; j < nl; ++j)
                table[i][j] = l_local.at(bun.plus(out.l_carrier[i], out.l_carrier[j]));
        t.l = FiniteGroup::from_table(std::move(table));
    }

    out.k_carrier = costar(g, e);
    std::map<int, int> k_local;
    for (size_t i = 0; i < out.k_carrier.size(); ++i)
        k_local[out.k_carrier[i]] = static_cast<int>(i);
    const int nk = static_cast<int>(out.k_carrier.size());
    {
        // K-product ab = (a.src b) + b; composable because
        // tgt(a.src b) = e.src(b) = src(b)
        std::vector<std::vector<int>> table(nk, std::vector<int>(nk));
        for (int i = 0; i < nk; ++i)
            for (int j = 0; j < nk; ++j) {
                const int shifted =
                    b.right_on_arrows[out.k_carrier[i]][g.src[out.k_carrier[j]]];
                table[i][j] = k_local.at(g.compose(shifted, out.k_carrier[j]));
            }
        t.m = FiniteGroup::from_table(std::move(table));
    }

    const int nl = t.l.order();
    t.d1.resize(nl);
    for (int i = 0; i < nl; ++i) t.d1[i] = k_local.at(b.xmod.delta[out.l_carrier[i]]);
    t.d2.resize(nk);
    for (int i = 0; i < nk; ++i) t.d2[i] = g.src[out.k_carrier[i]];

    t.p_on_m.assign(nk, std::vector<int>(t.p.order()));
    for (int i = 0; i < nk; ++i)
        for (int p = 0; p < t.p.order(); ++p) {
            const int shifted = b.left_on_arrows[t.p.inv(p)][out.k_carrier[i]];
            t.p_on_m[i][p] = k_local.at(b.right_on_arrows[shifted][p]);
        }

    t.p_on_l.assign(nl, std::vector<int>(t.p.order()));
    for (int i = 0; i < nl; ++i)
        for (int p = 0; p < t.p.order(); ++p) {
            const int shifted = b.left_on_elements[t.p.inv(p)][out.l_carrier[i]];
            t.p_on_l[i][p] = l_local.at(b.right_on_elements[shifted][p]);
        }

    // c!a = (c.src a)^a
    t.m_on_l.assign(nl, std::vector<int>(nk));
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nk; ++j) {
            const int a = out.k_carrier[j];
            const int shifted = b.right_on_elements[out.l_carrier[i]][g.src[a]];
            t.m_on_l[i][j] = l_local.at(b.xmod.action.apply(shifted, a));
        }

    // <a, c> = {a^-1, c}!a
    t.lift.assign(nk, std::vector<int>(nk));
    for (int i = 0; i < nk; ++i)
        for (int j = 0; j < nk; ++j) {
            const int ainv = out.k_carrier[t.m.inv(i)];
            const int braid = b.braiding[ainv][out.k_carrier[j]];
            const int a = out.k_carrier[i];
            const int shifted = b.right_on_elements[braid][g.src[a]];
            t.lift[i][j] = l_local.at(b.xmod.action.apply(shifted, a));
        }

    return out;
}

BraidedXmod twocrossed_to_braided(const TwoCrossedModule& t) {
    {
        const ValidationReport r = validate_2crossed(t);
        if (!r.ok())
            throw Error(ErrorKind::invalid_two_crossed,
                        "input fails 2-crossed validation: " + r.violations[0].axiom);
    }
    const int nm = t.m.order();
    const int np = t.p.order();
    const int nl = t.l.order();
    const auto arrow_of = [np](int m, int p) { return m * np + p; };
    const auto elem_of = [np](int l, int p) { return l * np + p; };

    BraidedXmod b;
    b.monoid = t.p.table();
    b.unit = t.p.unit();

    // A1 = M x P, alpha(g,p) = d2(g)p, beta(g,p) = p
    const int arrows = nm * np;
    std::vector<int> src(arrows), tgt(arrows);
    for (int m = 0; m < nm; ++m)
        for (int p = 0; p < np; ++p) {
            src[arrow_of(m, p)] = t.p.mul(t.d2[m], p);
            tgt[arrow_of(m, p)] = p;
        }
    std::vector<std::vector<int>> comp(arrows, std::vector<int>(arrows, -1));
    for (int m1 = 0; m1 < nm; ++m1)
        for (int p1 = 0; p1 < np; ++p1)
            for (int m2 = 0; m2 < nm; ++m2)
                for (int p2 = 0; p2 < np; ++p2) {
                    if (p1 != t.p.mul(t.d2[m2], p2)) continue;
                    comp[arrow_of(m1, p1)][arrow_of(m2, p2)] = arrow_of(t.m.mul(m1, m2), p2);
                }
    b.xmod.action.g = FiniteGroupoid::from_tables(np, std::move(src), std::move(tgt),
                                                  std::move(comp));

    // A2 = L x P fibrewise
    const int elems = nl * np;
    GroupBundle bun;
    bun.object_count = np;
    bun.base.resize(elems);
    bun.zero_at.assign(np, -1);
    bun.negate.resize(elems);
    bun.add.assign(elems, std::vector<int>(elems, -1));
    for (int l = 0; l < nl; ++l)
        for (int p = 0; p < np; ++p) {
            const int id = elem_of(l, p);
            bun.base[id] = p;
            bun.negate[id] = elem_of(t.l.inv(l), p);
            for (int l2 = 0; l2 < nl; ++l2) bun.add[id][elem_of(l2, p)] = elem_of(t.l.mul(l, l2), p);
        }
    for (int p = 0; p < np; ++p) bun.zero_at[p] = elem_of(t.l.unit(), p);
    b.xmod.action.bundle = std::move(bun);

    b.xmod.delta.resize(elems);
    for (int l = 0; l < nl; ++l)
        for (int p = 0; p < np; ++p) b.xmod.delta[elem_of(l, p)] = arrow_of(t.d1[l], p);

    // (l,p)^{(g,q)} = (l^g, q) when p = d2(g)q
    b.xmod.action.act.assign(elems, std::vector<int>(arrows, -1));
    for (int l = 0; l < nl; ++l)
        for (int p = 0; p < np; ++p)
            for (int m = 0; m < nm; ++m)
                for (int q = 0; q < np; ++q) {
                    if (p != t.p.mul(t.d2[m], q)) continue;
                    b.xmod.action.act[elem_of(l, p)][arrow_of(m, q)] =
                        elem_of(t.m_on_l[l][m], q);
                }

    // biactions: p.(g,q) = (g^{p^-1}, pq), (g,q).p = (g, qp), likewise on A2
    b.left_on_arrows.assign(np, std::vector<int>(arrows));
    b.right_on_arrows.assign(arrows, std::vector<int>(np));
    b.left_on_elements.assign(np, std::vector<int>(elems));
    b.right_on_elements.assign(elems, std::vector<int>(np));
    for (int p = 0; p < np; ++p) {
        for (int m = 0; m < nm; ++m)
            for (int q = 0; q < np; ++q) {
                b.left_on_arrows[p][arrow_of(m, q)] =
                    arrow_of(t.p_on_m[m][t.p.inv(p)], t.p.mul(p, q));
                b.right_on_arrows[arrow_of(m, q)][p] = arrow_of(m, t.p.mul(q, p));
            }
        for (int l = 0; l < nl; ++l)
            for (int q = 0; q < np; ++q) {
                b.left_on_elements[p][elem_of(l, q)] =
                    elem_of(t.p_on_l[l][t.p.inv(p)], t.p.mul(p, q));
                b.right_on_elements[elem_of(l, q)][p] = elem_of(l, t.p.mul(q, p));
            }
    }

    // {(g1,p1),(g2,p2)} = (<g1^-1, g2^{p1^-1}>^{g1}, p1 p2); the exponent
    // p1^-1 is forced by axiom 3.8 against the left action p.(g,q)
    b.braiding.assign(arrows, std::vector<int>(arrows));
    for (int m1 = 0; m1 < nm; ++m1)
        for (int p1 = 0; p1 < np; ++p1)
            for (int m2 = 0; m2 < nm; ++m2)
                for (int p2 = 0; p2 < np; ++p2) {
                    const int twisted = t.p_on_m[m2][t.p.inv(p1)];
                    const int lifted = t.lift[t.m.inv(m1)][twisted];
                    b.braiding[arrow_of(m1, p1)][arrow_of(m2, p2)] =
                        elem_of(t.m_on_l[lifted][m1], t.p.mul(p1, p2));
                }

    return b;
}

bool is_two_crossed_isomorphism(const TwoCrossedModule& a, const TwoCrossedModule& b,
                                const IsomorphismWitness& w) {
    const int nl = a.l.order();
    const int nm = a.m.order();
    const int np = a.p.order();
    if (b.l.order() != nl || b.m.order() != nm || b.p.order() != np) return false;
    if (static_cast<int>(w.l_map.size()) != nl || static_cast<int>(w.m_map.size()) != nm ||
        static_cast<int>(w.p_map.size()) != np)
        return false;

    const auto bijective = [](const std::vector<int>& v) {
        std::vector<bool> hit(v.size(), false);
        for (int x : v) {
            if (x < 0 || x >= static_cast<int>(v.size()) || hit[x]) return false;
            hit[x] = true;
        }
        return true;
    };
    if (!bijective(w.l_map) || !bijective(w.m_map) || !bijective(w.p_map)) return false;

    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nl; ++j)
            if (w.l_map[a.l.mul(i, j)] != b.l.mul(w.l_map[i], w.l_map[j])) return false;
    for (int i = 0; i < nm; ++i)
        for (int j = 0; j < nm; ++j)
            if (w.m_map[a.m.mul(i, j)] != b.m.mul(w.m_map[i], w.m_map[j])) return false;
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j)
            if (w.p_map[a.p.mul(i, j)] != b.p.mul(w.p_map[i], w.p_map[j])) return false;

    for (int i = 0; i < nl; ++i)
        if (w.m_map[a.d1[i]] != b.d1[w.l_map[i]]) return false;
    for (int i = 0; i < nm; ++i)
        if (w.p_map[a.d2[i]] != b.d2[w.m_map[i]]) return false;

    for (int i = 0; i < nl; ++i)
        for (int p = 0; p < np; ++p)
            if (w.l_map[a.p_on_l[i][p]] != b.p_on_l[w.l_map[i]][w.p_map[p]]) return false;
    for (int i = 0; i < nm; ++i)
        for (int p = 0; p < np; ++p)
            if (w.m_map[a.p_on_m[i][p]] != b.p_on_m[w.m_map[i]][w.p_map[p]]) return false;
    for (int i = 0; i < nl; ++i)
        for (int m = 0; m < nm; ++m)
            if (w.l_map[a.m_on_l[i][m]] != b.m_on_l[w.l_map[i]][w.m_map[m]]) return false;
    for (int i = 0; i < nm; ++i)
        for (int j = 0; j < nm; ++j)
            if (w.l_map[a.lift[i][j]] != b.lift[w.m_map[i]][w.m_map[j]]) return false;
    return true;
}

namespace {

void collect_group_isos(const FiniteGroup& a, const FiniteGroup& b, std::vector<int>& map,
                        std::vector<bool>& used, int next,
                        std::vector<std::vector<int>>& out) {
    const int n = a.order();
    if (next == n) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return;
        out.push_back(map);
        return;
    }
    if (map[next] >= 0) {
        collect_group_isos(a, b, map, used, next + 1, out);
        return;
    }
    for (int img = 0; img < n; ++img) {
        if (used[img]) continue;
        if (a.element_order(next) != b.element_order(img)) continue;
        map[next] = img;
        used[img] = true;
        bool consistent = true;
        for (int other = 0; other < n && consistent; ++other) {
            if (map[other] < 0) continue;
            const int p = a.mul(next, other);
            const int q = a.mul(other, next);
            if (map[p] >= 0 && map[p] != b.mul(img, map[other])) consistent = false;
            if (consistent && map[q] >= 0 && map[q] != b.mul(map[other], img))
                consistent = false;
        }
        if (consistent) collect_group_isos(a, b, map, used, next + 1, out);
        map[next] = -1;
        used[img] = false;
    }
}

std::vector<std::vector<int>> all_group_isos(const FiniteGroup& a, const FiniteGroup& b) {
    std::vector<std::vector<int>> out;
    if (a.order() != b.order()) return out;
    std::vector<int> map(a.order(), -1);
    std::vector<bool> used(a.order(), false);
    map[a.unit()] = b.unit();
    used[b.unit()] = true;
    collect_group_isos(a, b, map, used, 0, out);
    return out;
}

}  // namespace

IsomorphismWitness roundtrip_check(const TwoCrossedModule& t) {
    const Braided2Crossed back = braided_to_2crossed(twocrossed_to_braided(t));

    // canonical identification: (l, e) and (m, e) keep their indices
    IsomorphismWitness w;
    w.l_map.resize(t.l.order());
    w.m_map.resize(t.m.order());
    w.p_map.resize(t.p.order());
    for (int i = 0; i < t.l.order(); ++i) w.l_map[i] = i;
    for (int i = 0; i < t.m.order(); ++i) w.m_map[i] = i;
    for (int i = 0; i < t.p.order(); ++i) w.p_map[i] = i;
    if (is_two_crossed_isomorphism(t, back.tcm, w)) return w;

    // fallback: exhaustive search (reaching this indicates a library bug)
    for (const auto& p_map : all_group_isos(t.p, back.tcm.p)) {
        for (const auto& m_map : all_group_isos(t.m, back.tcm.m)) {
            bool compatible = true;
            for (int i = 0; i < t.m.order() && compatible; ++i)
                if (p_map[t.d2[i]] != back.tcm.d2[m_map[i]]) compatible = false;
            for (int i = 0; i < t.m.order() && compatible; ++i)
                for (int p = 0; p < t.p.order() && compatible; ++p)
                    if (m_map[t.p_on_m[i][p]] != back.tcm.p_on_m[m_map[i]][p_map[p]])
                        compatible = false;
            if (!compatible) continue;
            for (const auto& l_map : all_group_isos(t.l, back.tcm.l)) {
                const IsomorphismWitness cand{l_map, m_map, p_map};
                if (is_two_crossed_isomorphism(t, back.tcm, cand)) return cand;
            }
        }
    }
    throw Error(ErrorKind::no_isomorphism_found,
                "no isomorphism between t and its braided roundtrip");
}

ValidationReport compare_actor_braided(const CrossedModule& x) {
    ValidationReport report;
    const ActorTwoCrossed actor = build_actor_2crossed(x);
    const AutBraided ab = build_aut_braided(x);
    const Braided2Crossed viaK = braided_to_2crossed(ab.braided);

    const int identity = ab.aut.index_of(identity_xmod_morphism(x));

    // position of each FDer* element inside the costar carrier
    std::map<HomotopyArrow, int> k_pos;
    for (size_t i = 0; i < viaK.k_carrier.size(); ++i)
        k_pos[ab.arrows[viaK.k_carrier[i]]] = static_cast<int>(i);
    std::map<SectionOverAut, int> l_pos;
    for (size_t i = 0; i < viaK.l_carrier.size(); ++i)
        l_pos[ab.elements[viaK.l_carrier[i]]] = static_cast<int>(i);

    if (actor.tcm.m.order() != static_cast<int>(viaK.k_carrier.size())) {
        report.add("M identification", "sizes differ");
        return report;
    }
    if (actor.tcm.l.order() != static_cast<int>(viaK.l_carrier.size())) {
        report.add("L identification", "sizes differ");
        return report;
    }

    IsomorphismWitness w;
    w.m_map.resize(actor.tcm.m.order());
    for (int i = 0; i < actor.tcm.m.order(); ++i) {
        const FreeDerivation& s = actor.fder.elements[i];
        const auto it = k_pos.find(HomotopyArrow{s.s0, s.s1, identity});
        if (it == k_pos.end()) {
            report.add("M identification", "free derivation " + std::to_string(i) +
                                               " missing from the costar");
            return report;
        }
        w.m_map[i] = it->second;
    }
    w.l_map.resize(actor.tcm.l.order());
    for (int i = 0; i < actor.tcm.l.order(); ++i) {
        const auto it = l_pos.find(SectionOverAut{actor.m2.elements[i].values, identity});
        if (it == l_pos.end()) {
            report.add("L identification", "section " + std::to_string(i) +
                                               " missing from the vertex fibre");
            return report;
        }
        w.l_map[i] = it->second;
    }
    w.p_map.resize(actor.tcm.p.order());
    for (int i = 0; i < actor.tcm.p.order(); ++i) w.p_map[i] = i;

    const TwoCrossedModule& a = actor.tcm;
    const TwoCrossedModule& k = viaK.tcm;
    for (int i = 0; i < a.m.order(); ++i)
        for (int j = 0; j < a.m.order(); ++j)
            if (w.m_map[a.m.mul(i, j)] != k.m.mul(w.m_map[i], w.m_map[j]))
                report.add("FDer* product vs costar product", pair(i, j));
    for (int i = 0; i < a.l.order(); ++i)
        for (int j = 0; j < a.l.order(); ++j)
            if (w.l_map[a.l.mul(i, j)] != k.l.mul(w.l_map[i], w.l_map[j]))
                report.add("M2 addition vs vertex addition", pair(i, j));
    for (int i = 0; i < a.p.order(); ++i)
        for (int j = 0; j < a.p.order(); ++j)
            if (a.p.mul(i, j) != k.p.mul(i, j)) report.add("Aut products", pair(i, j));
    for (int i = 0; i < a.l.order(); ++i)
        if (w.m_map[a.d1[i]] != k.d1[w.l_map[i]]) report.add("zeta vs delta restriction",
                                                             std::to_string(i));
    for (int i = 0; i < a.m.order(); ++i)
        if (a.d2[i] != k.d2[w.m_map[i]]) report.add("Delta vs source restriction",
                                                    std::to_string(i));
    for (int i = 0; i < a.m.order(); ++i)
        for (int p = 0; p < a.p.order(); ++p)
            if (w.m_map[a.p_on_m[i][p]] != k.p_on_m[w.m_map[i]][p])
                report.add("Aut action on FDer* vs diagonal action", pair(i, p));
    for (int i = 0; i < a.l.order(); ++i)
        for (int p = 0; p < a.p.order(); ++p)
            if (w.l_map[a.p_on_l[i][p]] != k.p_on_l[w.l_map[i]][p])
                report.add("Aut action on M2 vs diagonal action", pair(i, p));
    for (int i = 0; i < a.l.order(); ++i)
        for (int j = 0; j < a.m.order(); ++j)
            if (w.l_map[a.m_on_l[i][j]] != k.m_on_l[w.l_map[i]][w.m_map[j]])
                report.add("FDer* action on M2 vs costar action", pair(i, j));
    for (int i = 0; i < a.m.order(); ++i)
        for (int j = 0; j < a.m.order(); ++j)
            if (w.l_map[a.lift[i][j]] != k.lift[w.m_map[i]][w.m_map[j]])
                report.add("Peiffer lifts agree", pair(i, j));
    return report;
}

}  // namespace xmod
