#pragma once

#include <optional>
#include <vector>

#include "xmod/base.hpp"

namespace xmod {

/// Finite group given by its full multiplication table. Elements are dense
/// ids 0..order-1; the identity may sit at any id, so that groups built
/// from enumerated carriers (automorphisms, derivations, ...) keep the
/// carrier order.
class FiniteGroup {
public:
    FiniteGroup();  // trivial group

    /// Validates the group axioms on the whole table; throws
    /// ErrorKind::malformed_table when they fail.
    static FiniteGroup from_table(std::vector<std::vector<int>> table);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    static FiniteGroup symmetric(int n);  // permutations in lexicographic order

    int order() const noexcept { return static_cast<int>(table_.size()); }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int unit() const noexcept { return unit_; }

    int element_order(int a) const;
    bool is_abelian() const;
    bool contains_subgroup(const std::vector<int>& elems) const;
    bool is_normal_subgroup(const std::vector<int>& elems) const;

    /// Conjugate a by b: b^-1 * a * b.
    int conj(int a, int b) const { return mul(mul(inv(b), a), b); }

    const std::vector<std::vector<int>>& table() const noexcept { return table_; }

    bool operator==(const FiniteGroup& other) const = default;

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    int unit_ = 0;
};

/// Right action table of H on N: act[h][n] is n^h. Valid when every act[h]
/// is an automorphism of N, act[unit] = id and n^(h1 h2) = (n^h1)^h2.
bool is_right_action(const FiniteGroup& n, const FiniteGroup& h,
                     const std::vector<std::vector<int>>& act);

/// Semidirect product on pairs (n, h) with id n*|H|+h and multiplication
/// (n1,h1)(n2,h2) = (n1^h2 * n2, h1 h2). Throws NotAnAction.
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<int>>& act);

inline int semidirect_index(const FiniteGroup& h, int n_elem, int h_elem) {
    return n_elem * h.order() + h_elem;
}

/// Brute-force isomorphism search with element-order pruning. Returns the
/// image table a-element -> b-element, or nullopt.
std::optional<std::vector<int>> find_group_isomorphism(const FiniteGroup& a,
                                                       const FiniteGroup& b);

}  // namespace xmod
