#include "xmod/groupoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace xmod {

namespace {

std::string triple(int a, int b, int c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::string pair(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

int FiniteGroupoid::compose(int a, int b) const {
    const int c = comp[a][b];
    if (c < 0)
        throw Error(ErrorKind::malformed_table,
                    "composition undefined for arrows " + pair(a, b));
    return c;
}

int FiniteGroupoid::neg(int a) const {
    const int r = inverse[a];
    if (r < 0)
        throw Error(ErrorKind::malformed_table, "arrow " + std::to_string(a) + " has no inverse");
    return r;
}

FiniteGroupoid FiniteGroupoid::from_tables(int object_count, std::vector<int> src,
                                           std::vector<int> tgt,
                                           std::vector<std::vector<int>> comp) {
    const int arrows = static_cast<int>(src.size());
    if (static_cast<int>(tgt.size()) != arrows || static_cast<int>(comp.size()) != arrows)
        throw Error(ErrorKind::malformed_table, "src/tgt/comp sizes disagree");
    for (int a = 0; a < arrows; ++a) {
        if (src[a] < 0 || src[a] >= object_count || tgt[a] < 0 || tgt[a] >= object_count)
            throw Error(ErrorKind::malformed_table,
                        "arrow " + std::to_string(a) + " references unknown object");
        if (static_cast<int>(comp[a].size()) != arrows)
            throw Error(ErrorKind::malformed_table, "comp row size mismatch");
        for (int v : comp[a])
            if (v < -1 || v >= arrows)
                throw Error(ErrorKind::malformed_table, "comp references unknown arrow id");
    }

    FiniteGroupoid g;
    g.object_count = object_count;
    g.src = std::move(src);
    g.tgt = std::move(tgt);
    g.comp = std::move(comp);

    // an identity at x is a loop e with e+a = a and b+e = b wherever defined
    g.identity_at.assign(object_count, -1);
    for (int e = 0; e < arrows; ++e) {
        if (g.src[e] != g.tgt[e]) continue;
        const int x = g.src[e];
        bool ok = true;
        for (int a = 0; a < arrows && ok; ++a) {
            if (g.src[a] == x && g.comp[e][a] != a) ok = false;
            if (g.tgt[a] == x && g.comp[a][e] != a) ok = false;
        }
        if (ok && g.identity_at[x] < 0) g.identity_at[x] = e;
    }

    g.inverse.assign(arrows, -1);
    for (int a = 0; a < arrows; ++a) {
        const int ex = g.identity_at[g.src[a]];
        const int ey = g.identity_at[g.tgt[a]];
        if (ex < 0 || ey < 0) continue;
        for (int b = 0; b < arrows; ++b) {
            if (g.comp[a][b] == ex && g.comp[b][a] == ey) {
                g.inverse[a] = b;
                break;
            }
        }
    }
    return g;
}

FiniteGroupoid FiniteGroupoid::discrete(int objects) {
    std::vector<int> src(objects), tgt(objects);
    std::iota(src.begin(), src.end(), 0);
    std::iota(tgt.begin(), tgt.end(), 0);
    std::vector<std::vector<int>> comp(objects, std::vector<int>(objects, -1));
    for (int x = 0; x < objects; ++x) comp[x][x] = x;
    return from_tables(objects, std::move(src), std::move(tgt), std::move(comp));
}

FiniteGroupoid FiniteGroupoid::indiscrete(int objects) {
    // one arrow x -> y for every pair, id = x*objects + y
    const int arrows = objects * objects;
    std::vector<int> src(arrows), tgt(arrows);
    for (int x = 0; x < objects; ++x)
        for (int y = 0; y < objects; ++y) {
            src[x * objects + y] = x;
            tgt[x * objects + y] = y;
        }
    std::vector<std::vector<int>> comp(arrows, std::vector<int>(arrows, -1));
    for (int a = 0; a < arrows; ++a)
        for (int b = 0; b < arrows; ++b)
            if (tgt[a] == src[b]) comp[a][b] = src[a] * objects + tgt[b];
    return from_tables(objects, std::move(src), std::move(tgt), std::move(comp));
}

FiniteGroupoid FiniteGroupoid::from_group(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<int> src(n, 0), tgt(n, 0);
    std::vector<std::vector<int>> comp(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) comp[a][b] = g.mul(a, b);
    return from_tables(1, std::move(src), std::move(tgt), std::move(comp));
}

ValidationReport validate_groupoid(const FiniteGroupoid& g) {
    ValidationReport report;
    const int arrows = g.arrow_count();

    if (g.object_count == 0) report.add("objects", "object set is empty");

    for (int a = 0; a < arrows; ++a)
        for (int b = 0; b < arrows; ++b) {
            const bool should = g.tgt[a] == g.src[b];
            const bool has = g.comp[a][b] >= 0;
            if (has && !should) report.add("composition domain", pair(a, b));
            if (!has && should) report.add("composition totality", pair(a, b));
            if (has && should) {
                const int c = g.comp[a][b];
                if (g.src[c] != g.src[a] || g.tgt[c] != g.tgt[b])
                    report.add("composition endpoints", triple(a, b, c));
            }
        }

    for (int a = 0; a < arrows; ++a)
        for (int b = 0; b < arrows; ++b) {
            if (g.comp[a][b] < 0) continue;
            for (int c = 0; c < arrows; ++c) {
                if (g.comp[b][c] < 0) continue;
                const int left = g.comp[g.comp[a][b]][c];
                const int right = g.comp[a][g.comp[b][c]];
                if (left != right || left < 0) report.add("associativity", triple(a, b, c));
            }
        }

    for (int x = 0; x < g.object_count; ++x)
        if (g.identity_at[x] < 0) report.add("identity", "object " + std::to_string(x));

    for (int a = 0; a < arrows; ++a) {
        const int b = g.inverse[a];
        if (b < 0) {
            report.add("inverse", "arrow " + std::to_string(a));
            continue;
        }
        if (g.src[b] != g.tgt[a] || g.tgt[b] != g.src[a])
            report.add("inverse endpoints", pair(a, b));
    }
    return report;
}

std::vector<int> costar(const FiniteGroupoid& g, int x) {
    if (x < 0 || x >= g.object_count)
        throw Error(ErrorKind::unknown_object, "object " + std::to_string(x));
    std::vector<int> out;
    for (int a = 0; a < g.arrow_count(); ++a)
        if (g.tgt[a] == x) out.push_back(a);
    return out;
}

int GroupBundle::plus(int c, int d) const {
    const int r = add[c][d];
    if (r < 0)
        throw Error(ErrorKind::malformed_table, "addition undefined for elements " + pair(c, d));
    return r;
}

int GroupBundle::minus(int c) const {
    const int r = negate[c];
    if (r < 0)
        throw Error(ErrorKind::malformed_table, "element " + std::to_string(c) + " has no negative");
    return r;
}

int GroupBundle::zero(int x) const {
    const int r = zero_at[x];
    if (r < 0)
        throw Error(ErrorKind::malformed_table, "fibre " + std::to_string(x) + " has no zero");
    return r;
}

std::vector<int> GroupBundle::fibre(int x) const {
    std::vector<int> out;
    for (int c = 0; c < element_count(); ++c)
        if (base[c] == x) out.push_back(c);
    return out;
}

GroupBundle GroupBundle::from_fibres(const std::vector<FiniteGroup>& fibres) {
    GroupBundle b;
    b.object_count = static_cast<int>(fibres.size());
    std::vector<int> offset(fibres.size() + 1, 0);
    for (size_t x = 0; x < fibres.size(); ++x)
        offset[x + 1] = offset[x] + fibres[x].order();
    const int total = offset.back();
    b.base.resize(total);
    b.negate.assign(total, -1);
    b.zero_at.assign(b.object_count, -1);
    b.add.assign(total, std::vector<int>(total, -1));
    for (int x = 0; x < b.object_count; ++x) {
        const FiniteGroup& f = fibres[x];
        for (int i = 0; i < f.order(); ++i) {
            const int gi = offset[x] + i;
            b.base[gi] = x;
            b.negate[gi] = offset[x] + f.inv(i);
            for (int j = 0; j < f.order(); ++j) b.add[gi][offset[x] + j] = offset[x] + f.mul(i, j);
        }
        b.zero_at[x] = offset[x] + f.unit();
    }
    return b;
}

FiniteGroupoid GroupBundle::to_groupoid() const {
    FiniteGroupoid g;
    g.object_count = object_count;
    g.src = base;
    g.tgt = base;
    g.identity_at = zero_at;
    g.inverse = negate;
    g.comp = add;
    return g;
}

GroupBundle GroupBundle::from_groupoid(const FiniteGroupoid& g) {
    for (int a = 0; a < g.arrow_count(); ++a)
        if (g.src[a] != g.tgt[a])
            throw Error(ErrorKind::malformed_table,
                        "arrow " + std::to_string(a) + " is not a loop; not totally intransitive");
    GroupBundle b;
    b.object_count = g.object_count;
    b.base = g.src;
    b.zero_at = g.identity_at;
    b.negate = g.inverse;
    b.add = g.comp;
    return b;
}

FiniteGroup GroupBundle::fibre_group(int x) const {
    const std::vector<int> elems = fibre(x);
    std::map<int, int> local;
    for (size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < elems.size(); ++j)
            table[i][j] = local.at(add[elems[i]][elems[j]]);
    return FiniteGroup::from_table(std::move(table));
}

ValidationReport validate_bundle(const GroupBundle& c) {
    ValidationReport report = validate_groupoid(c.to_groupoid());
    // base == src == tgt holds by construction; nothing extra to check
    return report;
}

ValidationReport validate_groupoid_morphism(const FiniteGroupoid& dom,
                                            const FiniteGroupoid& cod,
                                            const GroupoidMorphism& f) {
    ValidationReport report;
    if (static_cast<int>(f.obj_map.size()) != dom.object_count ||
        static_cast<int>(f.arr_map.size()) != dom.arrow_count()) {
        report.add("shape", "map tables do not cover the domain");
        return report;
    }
    for (int x : f.obj_map)
        if (x < 0 || x >= cod.object_count) {
            report.add("shape", "object image out of range");
            return report;
        }
    for (int a : f.arr_map)
        if (a < 0 || a >= cod.arrow_count()) {
            report.add("shape", "arrow image out of range");
            return report;
        }

    for (int a = 0; a < dom.arrow_count(); ++a) {
        if (cod.src[f.arr_map[a]] != f.obj_map[dom.src[a]])
            report.add("source preserved", "arrow " + std::to_string(a));
        if (cod.tgt[f.arr_map[a]] != f.obj_map[dom.tgt[a]])
            report.add("target preserved", "arrow " + std::to_string(a));
    }
    for (int a = 0; a < dom.arrow_count(); ++a)
        for (int b = 0; b < dom.arrow_count(); ++b) {
            if (dom.comp[a][b] < 0) continue;
            const int image = cod.comp[f.arr_map[a]][f.arr_map[b]];
            if (image < 0 || image != f.arr_map[dom.comp[a][b]])
                report.add("composition preserved", pair(a, b));
        }
    for (int x = 0; x < dom.object_count; ++x) {
        if (dom.identity_at[x] < 0) continue;
        if (f.arr_map[dom.identity_at[x]] != cod.identity_at[f.obj_map[x]])
            report.add("identities preserved", "object " + std::to_string(x));
    }
    return report;
}

GroupoidMorphism identity_groupoid_morphism(const FiniteGroupoid& g) {
    GroupoidMorphism m;
    m.obj_map.resize(g.object_count);
    m.arr_map.resize(g.arrow_count());
    std::iota(m.obj_map.begin(), m.obj_map.end(), 0);
    std::iota(m.arr_map.begin(), m.arr_map.end(), 0);
    return m;
}

GroupoidMorphism compose_groupoid_morphisms(const GroupoidMorphism& f,
                                            const GroupoidMorphism& g) {
    GroupoidMorphism r;
    r.obj_map.resize(g.obj_map.size());
    r.arr_map.resize(g.arr_map.size());
    for (size_t x = 0; x < g.obj_map.size(); ++x) {
        if (g.obj_map[x] >= static_cast<int>(f.obj_map.size()))
            throw Error(ErrorKind::domain_mismatch, "object image outside domain of outer map");
        r.obj_map[x] = f.obj_map[g.obj_map[x]];
    }
    for (size_t a = 0; a < g.arr_map.size(); ++a) {
        if (g.arr_map[a] >= static_cast<int>(f.arr_map.size()))
            throw Error(ErrorKind::domain_mismatch, "arrow image outside domain of outer map");
        r.arr_map[a] = f.arr_map[g.arr_map[a]];
    }
    return r;
}

namespace {

// backtracking over arrow images; obj_perm is fixed by the caller
void search_arrow_maps(const FiniteGroupoid& g, const std::vector<int>& obj_perm,
                       std::vector<int>& arr_map, std::vector<bool>& used, int next,
                       SearchBudget& budget, std::vector<GroupoidMorphism>& out) {
    const int arrows = g.arrow_count();
    if (next == arrows) {
        out.push_back(GroupoidMorphism{obj_perm, arr_map});
        return;
    }
    for (int img = 0; img < arrows; ++img) {
        if (used[img]) continue;
        if (g.src[img] != obj_perm[g.src[next]] || g.tgt[img] != obj_perm[g.tgt[next]]) continue;
        budget.charge();
        arr_map[next] = img;
        used[img] = true;
        bool ok = true;
        if (g.identity_at[g.src[next]] == next && g.identity_at[obj_perm[g.src[next]]] != img)
            ok = false;
        for (int a = 0; a <= next && ok; ++a) {
            if (arr_map[a] < 0) continue;
            const int ab = g.comp[a][next];
            if (ab >= 0 && ab <= next && arr_map[ab] >= 0 &&
                g.comp[arr_map[a]][img] != arr_map[ab])
                ok = false;
            const int ba = g.comp[next][a];
            if (ok && ba >= 0 && ba <= next && arr_map[ba] >= 0 &&
                g.comp[img][arr_map[a]] != arr_map[ba])
                ok = false;
        }
        if (ok) search_arrow_maps(g, obj_perm, arr_map, used, next + 1, budget, out);
        arr_map[next] = -1;
        used[img] = false;
    }
}

}  // namespace

GroupoidAutGroup enumerate_groupoid_automorphisms(const FiniteGroupoid& g) {
    {
        ValidationReport r = validate_groupoid(g);
        if (!r.ok())
            throw Error(ErrorKind::malformed_table, "not a groupoid: " + r.violations[0].axiom);
    }
    SearchBudget budget;
    std::vector<GroupoidMorphism> found;
    std::vector<int> obj_perm(g.object_count);
    std::iota(obj_perm.begin(), obj_perm.end(), 0);
    do {
        // object permutation must respect hom-set sizes
        bool feasible = true;
        std::vector<std::vector<int>> hom(g.object_count,
                                          std::vector<int>(g.object_count, 0));
        for (int a = 0; a < g.arrow_count(); ++a) ++hom[g.src[a]][g.tgt[a]];
        for (int x = 0; x < g.object_count && feasible; ++x)
            for (int y = 0; y < g.object_count && feasible; ++y)
                if (hom[x][y] != hom[obj_perm[x]][obj_perm[y]]) feasible = false;
        if (!feasible) continue;
        std::vector<int> arr_map(g.arrow_count(), -1);
        std::vector<bool> used(g.arrow_count(), false);
        search_arrow_maps(g, obj_perm, arr_map, used, 0, budget, found);
    } while (std::next_permutation(obj_perm.begin(), obj_perm.end()));

    // full validation of candidates; the incremental checks are partial
    std::vector<GroupoidMorphism> elements;
    for (const auto& m : found)
        if (validate_groupoid_morphism(g, g, m).ok()) elements.push_back(m);

    std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;
    for (size_t i = 0; i < elements.size(); ++i)
        index[{elements[i].obj_map, elements[i].arr_map}] = static_cast<int>(i);
    const int n = static_cast<int>(elements.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const GroupoidMorphism c = compose_groupoid_morphisms(elements[i], elements[j]);
            auto it = index.find({c.obj_map, c.arr_map});
            if (it == index.end())
                throw Error(ErrorKind::internal_check,
                            "automorphism set not closed under composition");
            table[i][j] = it->second;
        }
    return GroupoidAutGroup{std::move(elements), FiniteGroup::from_table(std::move(table))};
}

}  // namespace xmod
