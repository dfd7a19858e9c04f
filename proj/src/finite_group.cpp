#include "orbisect/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "orbisect/errors.hpp"

namespace orbisect {

Perm identity_perm(int degree) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose_perms(const Perm& p, const Perm& q) {
    Perm r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
}

Perm invert_perm(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

bool is_permutation(const Perm& p, int degree) {
    if (static_cast<int>(p.size()) != degree) return false;
    std::vector<char> seen(degree, 0);
    for (int v : p) {
        if (v < 0 || v >= degree || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

int FiniteGroup::element_order(int g) const {
    int m = 1;
    int x = g;
    while (x != 0) {
        x = mul(x, g);
        ++m;
    }
    return m;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

namespace {

std::vector<std::string> default_labels(int order) {
    std::vector<std::string> labels(order);
    labels[0] = "e";
    for (int i = 1; i < order; ++i) labels[i] = "g" + std::to_string(i);
    return labels;
}

std::string generator_name(int i) {
    std::string name(1, static_cast<char>('a' + i % 26));
    if (i >= 26) name += std::to_string(i / 26);
    return name;
}

}  // namespace

FiniteGroup trivial_group() {
    FiniteGroup g;
    g.order = 1;
    g.mul_table = {0};
    g.inv_table = {0};
    g.generators = {};
    g.labels = {"e"};
    return g;
}

FiniteGroup cyclic_group(int m) {
    FiniteGroup g;
    g.order = m;
    g.mul_table.resize(static_cast<std::size_t>(m) * m);
    g.inv_table.resize(m);
    for (int a = 0; a < m; ++a) {
        g.inv_table[a] = static_cast<std::uint16_t>((m - a) % m);
        for (int b = 0; b < m; ++b)
            g.mul_table[static_cast<std::size_t>(a) * m + b] = static_cast<std::uint16_t>((a + b) % m);
    }
    if (m > 1) g.generators = {1};
    g.labels = default_labels(m);
    for (int i = 1; i < m; ++i) g.labels[i] = "r" + std::to_string(i);
    return g;
}

FiniteGroup dihedral_group(int m) {
    // elements 0..m-1 are rotations r^k, m..2m-1 are reflections s r^k;
    // multiplication follows s r^k = r^-k s, so
    // (s^f1 r^k1)(s^f2 r^k2) = s^(f1 xor f2) r^(f2 ? k2-k1 : k1+k2).
    const int n = 2 * m;
    auto enc = [m](bool refl, int k) { return (refl ? m : 0) + ((k % m) + m) % m; };
    FiniteGroup g;
    g.order = n;
    g.mul_table.resize(static_cast<std::size_t>(n) * n);
    g.inv_table.resize(n);
    for (int a = 0; a < n; ++a) {
        const bool fa = a >= m;
        const int ka = fa ? a - m : a;
        g.inv_table[a] = static_cast<std::uint16_t>(fa ? a : enc(false, -ka));
        for (int b = 0; b < n; ++b) {
            const bool fb = b >= m;
            const int kb = fb ? b - m : b;
            g.mul_table[static_cast<std::size_t>(a) * n + b] =
                static_cast<std::uint16_t>(enc(fa != fb, fb ? kb - ka : ka + kb));
        }
    }
    g.generators = m > 1 ? std::vector<int>{1, m} : std::vector<int>{m};
    g.labels = default_labels(n);
    for (int k = 0; k < m; ++k) {
        g.labels[k] = k == 0 ? "e" : "r" + std::to_string(k);
        g.labels[m + k] = k == 0 ? "s" : "sr" + std::to_string(k);
    }
    return g;
}

FiniteGroup group_from_table(int order, const std::vector<int>& table,
                             std::vector<int> generators, std::vector<std::string> labels) {
    if (order < 1) fail(ErrorCode::schema_error, "group order must be positive");
    if (order > 65535) fail(ErrorCode::cap_exceeded, "group order exceeds table limit 65535");
    if (static_cast<std::size_t>(order) * order != table.size())
        fail(ErrorCode::schema_error, "multiplication table must have order^2 entries");
    for (int v : table)
        if (v < 0 || v >= order) fail(ErrorCode::schema_error, "table entry out of range");

    FiniteGroup g;
    g.order = order;
    g.mul_table.assign(table.begin(), table.end());
    g.inv_table.assign(order, 0);

    for (int a = 0; a < order; ++a) {
        if (g.mul(0, a) != a || g.mul(a, 0) != a)
            fail(ErrorCode::not_a_homomorphism, "element 0 is not a two-sided identity");
    }
    for (int a = 0; a < order; ++a) {
        int found = -1;
        for (int b = 0; b < order; ++b) {
            if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
                found = b;
                break;
            }
        }
        if (found < 0) fail(ErrorCode::not_a_homomorphism, "element has no two-sided inverse");
        g.inv_table[a] = static_cast<std::uint16_t>(found);
    }

    for (int x : generators)
        if (x < 0 || x >= order) fail(ErrorCode::schema_error, "generator index out of range");
    if (generators.empty() && order > 1) {
        generators.resize(order - 1);
        std::iota(generators.begin(), generators.end(), 1);
    }
    g.generators = std::move(generators);

    std::vector<int> span = generated_subgroup(g, g.generators);
    if (static_cast<int>(span.size()) != order)
        fail(ErrorCode::not_a_homomorphism, "generators do not span the group");

    g.labels = labels.empty() ? default_labels(order) : std::move(labels);
    if (static_cast<int>(g.labels.size()) != order)
        fail(ErrorCode::schema_error, "label list length must equal group order");
    return g;
}

FiniteGroup closure_from_permutations(int degree, const std::vector<Perm>& generators, int cap) {
    if (degree < 1) fail(ErrorCode::schema_error, "degree must be positive");
    for (const Perm& p : generators)
        if (!is_permutation(p, degree))
            fail(ErrorCode::not_a_bijection, "generator is not a permutation of the stated degree");
    if (cap > 65535) cap = 65535;  // table indices are 16-bit

    std::vector<Perm> elements;
    std::map<Perm, int> index_of;
    std::vector<std::string> labels;

    elements.push_back(identity_perm(degree));
    index_of[elements[0]] = 0;
    labels.emplace_back("e");

    // Breadth-first over generator words; queue order is discovery order, so
    // same-length words are visited lexicographically.
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (std::size_t gi = 0; gi < generators.size(); ++gi) {
            Perm next = compose_perms(elements[head], generators[gi]);
            if (index_of.emplace(next, static_cast<int>(elements.size())).second) {
                elements.push_back(std::move(next));
                labels.push_back(head == 0 ? generator_name(static_cast<int>(gi))
                                           : labels[head] + generator_name(static_cast<int>(gi)));
                if (static_cast<int>(elements.size()) > cap)
                    fail(ErrorCode::cap_exceeded,
                         "closure exceeds cap " + std::to_string(cap));
            }
        }
    }

    const int order = static_cast<int>(elements.size());
    FiniteGroup g;
    g.order = order;
    g.labels = std::move(labels);
    g.mul_table.resize(static_cast<std::size_t>(order) * order);
    g.inv_table.resize(order);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            Perm prod = compose_perms(elements[a], elements[b]);
            g.mul_table[static_cast<std::size_t>(a) * order + b] =
                static_cast<std::uint16_t>(index_of.at(prod));
        }
        g.inv_table[a] = static_cast<std::uint16_t>(index_of.at(invert_perm(elements[a])));
    }
    for (const Perm& p : generators) g.generators.push_back(index_of.at(p));
    return g;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
    std::vector<char> assigned(g.order, 0);
    std::vector<ConjugacyClass> classes;
    for (int r = 0; r < g.order; ++r) {
        if (assigned[r]) continue;
        ConjugacyClass c;
        c.representative = r;
        for (int h = 0; h < g.order; ++h) {
            const int x = g.conj(h, r);
            if (!assigned[x]) {
                assigned[x] = 1;
                c.members.push_back(x);
            }
        }
        std::sort(c.members.begin(), c.members.end());
        c.centralizer = centralizer_of(g, r);
        classes.push_back(std::move(c));
    }
    return classes;
}

std::vector<int> centralizer_of(const FiniteGroup& g, int x) {
    std::vector<int> z;
    for (int h = 0; h < g.order; ++h)
        if (g.mul(h, x) == g.mul(x, h)) z.push_back(h);
    return z;
}

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<char> in(g.order, 0);
    std::vector<int> queue = {0};
    in[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int s : gens) {
            const int y = g.mul(queue[head], s);
            if (!in[y]) {
                in[y] = 1;
                queue.push_back(y);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

}  // namespace orbisect
