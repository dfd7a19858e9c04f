#pragma once

#include <cstdint>
#include <vector>

#include "orbisect/finite_group.hpp"

namespace orbisect {

/// A finite group with a homomorphism to {+1,-1}. Elements with sign -1 are
/// the odd (orientation reversing) ones; ker(eps) is the even subgroup.
struct GradedGroup {
    FiniteGroup group;
    std::vector<std::int8_t> epsilon;  // +1 or -1 per element
    std::vector<int> even_elements;    // ascending parent indices
    bool surjective = false;           // false means trivially graded

    int eps(int g) const { return epsilon[g]; }
    bool is_even(int g) const { return epsilon[g] > 0; }
};

/// Extends one sign per generator multiplicatively to the whole group.
/// Throws NotAHomomorphism when two generator words for the same element
/// disagree on the sign.
GradedGroup grade(const FiniteGroup& g, const std::vector<int>& generator_signs);

GradedGroup trivially_graded(const FiniteGroup& g);

/// All odd involutions: eps(t) = -1 and t^2 = e, ascending.
std::vector<int> odd_involutions(const GradedGroup& g);

/// The even subgroup reindexed as its own FiniteGroup; element k corresponds
/// to parent index even_elements[k].
FiniteGroup even_subgroup(const GradedGroup& g);

/// (G x G) extended by the factor swap. Element (g1,g2)*swap^s has index
/// s*|G|^2 + g1*|G| + g2, so the even part sits at indices 0..|G|^2-1 in
/// (g1,g2) row-major order.
struct DoubledGroup {
    GradedGroup graded;
    int base_order = 1;

    int encode(int g1, int g2, int s) const {
        return s * base_order * base_order + g1 * base_order + g2;
    }
    int swap_flag(int idx) const { return idx / (base_order * base_order); }
    int left(int idx) const { return (idx % (base_order * base_order)) / base_order; }
    int right(int idx) const { return idx % base_order; }

    /// The odd involution (g^-1, g)*swap whose fixed locus is the graph of g.
    int tau_of(int g, const FiniteGroup& base) const { return encode(base.inv(g), g, 1); }
    int tau_id() const { return encode(0, 0, 1); }
};

DoubledGroup semidirect_double(const FiniteGroup& base, int cap = kDefaultGroupCap);

}  // namespace orbisect
