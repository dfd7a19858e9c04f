#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orbisect {

inline constexpr int kDefaultGroupCap = 20000;

/// A permutation of {0..n-1}, stored as its image list.
using Perm = std::vector<int>;

Perm identity_perm(int degree);
Perm compose_perms(const Perm& p, const Perm& q);  // (p*q)(x) = p(q(x))
Perm invert_perm(const Perm& p);
bool is_permutation(const Perm& p, int degree);

/// Finite group as an explicit multiplication table. Element 0 is the
/// identity; every element is a product of the listed generators.
struct FiniteGroup {
    int order = 1;
    std::vector<std::uint16_t> mul_table;  // row-major, mul_table[a*order+b] = a*b
    std::vector<std::uint16_t> inv_table;
    std::vector<int> generators;  // element indices
    std::vector<std::string> labels;

    int mul(int a, int b) const { return mul_table[static_cast<std::size_t>(a) * order + b]; }
    int inv(int a) const { return inv_table[a]; }
    int conj(int h, int g) const { return mul(mul(h, g), inv(h)); }  // h g h^-1
    int element_order(int g) const;
    bool is_abelian() const;
    const std::string& label(int g) const { return labels[g]; }
};

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int m);
FiniteGroup dihedral_group(int m);  // order 2m, rotations at 0..m-1

/// Builds a FiniteGroup from a raw multiplication table. Checks identity,
/// inverse and latin-square structure plus generator span; associativity is
/// the job of kernels::check_group_table.
FiniteGroup group_from_table(int order, const std::vector<int>& table,
                             std::vector<int> generators,
                             std::vector<std::string> labels = {});

/// Enumerates the subgroup of Sym(degree) generated by the given
/// permutations. Indexing is breadth-first over generator words with
/// lexicographic tie-break, so two runs on the same input agree.
FiniteGroup closure_from_permutations(int degree, const std::vector<Perm>& generators,
                                      int cap = kDefaultGroupCap);

struct ConjugacyClass {
    int representative = 0;        // minimal element index in the class
    std::vector<int> members;      // ascending
    std::vector<int> centralizer;  // centralizer of the representative, ascending
};

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

std::vector<int> centralizer_of(const FiniteGroup& g, int x);

/// Subgroup generated by a set of elements, as parent indices (ascending).
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);

}  // namespace orbisect
