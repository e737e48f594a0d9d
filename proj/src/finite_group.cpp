#include "xmod/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace xmod {

FiniteGroup::FiniteGroup() : table_{{0}}, inv_{0}, unit_(0) {}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw Error(ErrorKind::malformed_table, "empty multiplication table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw Error(ErrorKind::malformed_table, "multiplication table is not square");
        for (int v : row) {
            if (v < 0 || v >= n)
                throw Error(ErrorKind::malformed_table,
                            "table entry " + std::to_string(v) + " out of range");
        }
    }

    int unit = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
        if (ok) {
            unit = e;
            break;
        }
    }
    if (unit < 0) throw Error(ErrorKind::malformed_table, "no two-sided identity");

    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (table[a][b] == unit && table[b][a] == unit) {
                inv[a] = b;
                break;
            }
        }
        if (inv[a] < 0)
            throw Error(ErrorKind::malformed_table,
                        "element " + std::to_string(a) + " has no inverse");
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw Error(ErrorKind::malformed_table,
                                "associativity fails at (" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(c) + ")");

    FiniteGroup g;
    g.table_ = std::move(table);
    g.inv_ = std::move(inv);
    g.unit_ = unit;
    return g;
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(); }

FiniteGroup FiniteGroup::cyclic(int n) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    return from_table(std::move(table));
}

FiniteGroup FiniteGroup::symmetric(int n) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::map<std::vector<int>, int> index;
    for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;

    // mul(a, b) applies a first, then b.
    const int order = static_cast<int>(perms.size());
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i) c[i] = perms[b][perms[a][i]];
            table[a][b] = index.at(c);
        }
    }
    return from_table(std::move(table));
}

int FiniteGroup::element_order(int a) const {
    int k = 1;
    int cur = a;
    while (cur != unit_) {
        cur = mul(cur, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order(); ++a)
        for (int b = a + 1; b < order(); ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

bool FiniteGroup::contains_subgroup(const std::vector<int>& elems) const {
    std::vector<bool> in(order(), false);
    for (int e : elems) {
        if (e < 0 || e >= order()) return false;
        in[e] = true;
    }
    if (!in[unit_]) return false;
    for (int a : elems)
        for (int b : elems)
            if (!in[mul(a, b)]) return false;
    for (int a : elems)
        if (!in[inv(a)]) return false;
    return true;
}

bool FiniteGroup::is_normal_subgroup(const std::vector<int>& elems) const {
    if (!contains_subgroup(elems)) return false;
    std::vector<bool> in(order(), false);
    for (int e : elems) in[e] = true;
    for (int a : elems)
        for (int g = 0; g < order(); ++g)
            if (!in[conj(a, g)]) return false;
    return true;
}

bool is_right_action(const FiniteGroup& n, const FiniteGroup& h,
                     const std::vector<std::vector<int>>& act) {
    if (static_cast<int>(act.size()) != h.order()) return false;
    for (const auto& row : act)
        if (static_cast<int>(row.size()) != n.order()) return false;
    for (int x = 0; x < h.order(); ++x) {
        std::vector<bool> hit(n.order(), false);
        for (int a = 0; a < n.order(); ++a) {
            const int image = act[x][a];
            if (image < 0 || image >= n.order() || hit[image]) return false;
            hit[image] = true;
        }
        for (int a = 0; a < n.order(); ++a)
            for (int b = 0; b < n.order(); ++b)
                if (act[x][n.mul(a, b)] != n.mul(act[x][a], act[x][b])) return false;
    }
    for (int a = 0; a < n.order(); ++a) {
        if (act[h.unit()][a] != a) return false;
        for (int x = 0; x < h.order(); ++x)
            for (int y = 0; y < h.order(); ++y)
                if (act[h.mul(x, y)][a] != act[y][act[x][a]]) return false;
    }
    return true;
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<int>>& act) {
    if (!is_right_action(n, h, act))
        throw Error(ErrorKind::not_an_action, "act is not a right action of h on n");

    const int order = n.order() * h.order();
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int a1 = 0; a1 < n.order(); ++a1)
        for (int x1 = 0; x1 < h.order(); ++x1)
            for (int a2 = 0; a2 < n.order(); ++a2)
                for (int x2 = 0; x2 < h.order(); ++x2) {
                    const int lhs = semidirect_index(h, a1, x1);
                    const int rhs = semidirect_index(h, a2, x2);
                    table[lhs][rhs] =
                        semidirect_index(h, n.mul(act[x2][a1], a2), h.mul(x1, x2));
                }
    return FiniteGroup::from_table(std::move(table));
}

namespace {

bool full_homomorphism(const FiniteGroup& a, const FiniteGroup& b,
                       const std::vector<int>& map) {
    for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < a.order(); ++y)
            if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
    return true;
}

bool extend_isomorphism(const FiniteGroup& a, const FiniteGroup& b, std::vector<int>& map,
                        std::vector<bool>& used, int next) {
    const int n = a.order();
    if (next == n) return full_homomorphism(a, b, map);
    if (map[next] >= 0) return extend_isomorphism(a, b, map, used, next + 1);
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
        if (consistent && extend_isomorphism(a, b, map, used, next + 1)) return true;
        map[next] = -1;
        used[img] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_group_isomorphism(const FiniteGroup& a,
                                                       const FiniteGroup& b) {
    if (a.order() != b.order()) return std::nullopt;
    std::vector<int> orders_a, orders_b;
    for (int i = 0; i < a.order(); ++i) orders_a.push_back(a.element_order(i));
    for (int i = 0; i < b.order(); ++i) orders_b.push_back(b.element_order(i));
    auto sa = orders_a, sb = orders_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;

    std::vector<int> map(a.order(), -1);
    std::vector<bool> used(a.order(), false);
    map[a.unit()] = b.unit();
    used[b.unit()] = true;
    if (!extend_isomorphism(a, b, map, used, 0)) return std::nullopt;
    return map;
}

}  // namespace xmod
