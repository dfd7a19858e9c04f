#include "orbisect/graded_group.hpp"

#include <algorithm>

#include "orbisect/errors.hpp"

namespace orbisect {

GradedGroup grade(const FiniteGroup& g, const std::vector<int>& generator_signs) {
    if (generator_signs.size() != g.generators.size())
        fail(ErrorCode::inconsistent_blocks, "need exactly one sign per generator");
    for (int s : generator_signs)
        if (s != 1 && s != -1) fail(ErrorCode::schema_error, "signs must be +1 or -1");

    GradedGroup out;
    out.group = g;
    out.epsilon.assign(g.order, 0);
    out.epsilon[0] = 1;

    // Propagate along a spanning tree of the Cayley graph, then check every
    // edge; consistency on all edges makes the extension a homomorphism.
    std::vector<int> queue = {0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        for (std::size_t i = 0; i < g.generators.size(); ++i) {
            const int y = g.mul(x, g.generators[i]);
            const auto sign = static_cast<std::int8_t>(out.epsilon[x] * generator_signs[i]);
            if (out.epsilon[y] == 0) {
                out.epsilon[y] = sign;
                queue.push_back(y);
            }
        }
    }
    for (int x = 0; x < g.order; ++x) {
        for (std::size_t i = 0; i < g.generators.size(); ++i) {
            const int y = g.mul(x, g.generators[i]);
            if (out.epsilon[y] != out.epsilon[x] * generator_signs[i])
                fail(ErrorCode::not_a_homomorphism,
                     "sign extension is inconsistent at element " + g.label(y));
        }
    }

    for (int x = 0; x < g.order; ++x) {
        if (out.epsilon[x] > 0) out.even_elements.push_back(x);
        else out.surjective = true;
    }
    return out;
}

GradedGroup trivially_graded(const FiniteGroup& g) {
    GradedGroup out;
    out.group = g;
    out.epsilon.assign(g.order, 1);
    out.even_elements.resize(g.order);
    for (int x = 0; x < g.order; ++x) out.even_elements[x] = x;
    out.surjective = false;
    return out;
}

std::vector<int> odd_involutions(const GradedGroup& g) {
    std::vector<int> out;
    for (int t = 0; t < g.group.order; ++t)
        if (g.eps(t) < 0 && g.group.mul(t, t) == 0) out.push_back(t);
    return out;
}

FiniteGroup even_subgroup(const GradedGroup& g) {
    const int n = static_cast<int>(g.even_elements.size());
    std::vector<int> local_of(g.group.order, -1);
    for (int k = 0; k < n; ++k) local_of[g.even_elements[k]] = k;

    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<std::size_t>(a) * n + b] =
                local_of[g.group.mul(g.even_elements[a], g.even_elements[b])];

    std::vector<std::string> labels(n);
    for (int k = 0; k < n; ++k) labels[k] = g.group.label(g.even_elements[k]);
    std::vector<int> gens;
    for (int k = 1; k < n; ++k) gens.push_back(k);
    return group_from_table(n, table, std::move(gens), std::move(labels));
}

DoubledGroup semidirect_double(const FiniteGroup& base, int cap) {
    const long long order = 2LL * base.order * base.order;
    if (cap > 65535) cap = 65535;
    if (order > cap)
        fail(ErrorCode::cap_exceeded, "doubled group order " + std::to_string(order) +
                                          " exceeds cap " + std::to_string(cap));

    DoubledGroup d;
    d.base_order = base.order;
    const int n = base.order;
    const int total = static_cast<int>(order);

    FiniteGroup g;
    g.order = total;
    g.mul_table.resize(static_cast<std::size_t>(total) * total);
    g.inv_table.resize(total);
    g.labels.resize(total);

    for (int a = 0; a < total; ++a) {
        const int sa = d.swap_flag(a), a1 = d.left(a), a2 = d.right(a);
        g.inv_table[a] = static_cast<std::uint16_t>(
            sa == 0 ? d.encode(base.inv(a1), base.inv(a2), 0)
                    : d.encode(base.inv(a2), base.inv(a1), 1));
        g.labels[a] = "(" + base.label(a1) + "|" + base.label(a2) + ")" + (sa ? "t" : "");
        for (int b = 0; b < total; ++b) {
            const int sb = d.swap_flag(b), b1 = d.left(b), b2 = d.right(b);
            // (a1,a2)swap^sa * (b1,b2)swap^sb: the swap moves across (b1,b2)
            const int c1 = sa == 0 ? base.mul(a1, b1) : base.mul(a1, b2);
            const int c2 = sa == 0 ? base.mul(a2, b2) : base.mul(a2, b1);
            g.mul_table[static_cast<std::size_t>(a) * total + b] =
                static_cast<std::uint16_t>(d.encode(c1, c2, sa ^ sb));
        }
    }

    for (int s : base.generators) {
        g.generators.push_back(d.encode(s, 0, 0));
        g.generators.push_back(d.encode(0, s, 0));
    }
    g.generators.push_back(d.encode(0, 0, 1));  // the swap itself

    d.graded.group = std::move(g);
    d.graded.epsilon.assign(total, 1);
    for (int a = n * n; a < total; ++a) d.graded.epsilon[a] = -1;
    d.graded.even_elements.resize(n * n);
    for (int a = 0; a < n * n; ++a) d.graded.even_elements[a] = a;
    d.graded.surjective = true;
    return d;
}

}  // namespace orbisect
