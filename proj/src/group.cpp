#include "facekit/group.hpp"

#include <array>

#include "facekit/errors.hpp"

namespace facekit {

GroupPresentation::GroupPresentation(std::vector<std::string> names,
                                     std::vector<std::vector<int>> mul)
    : elems(std::move(names)), table(std::move(mul)) {
    int n = order();
    if (static_cast<int>(table.size()) != n)
        throw ValidationError("group table size mismatch");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw ValidationError("group table row size mismatch");
        for (int x : row)
            if (x < 0 || x >= n) throw ValidationError("group table entry out of range");
    }
    // identity
    identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = table[e][a] == a && table[a][e] == a;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw ValidationError("group has no identity element");
    // associativity
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw ValidationError("group multiplication not associative");
    // inverses
    inverse.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table[a][b] == identity && table[b][a] == identity) {
                inverse[a] = b;
                break;
            }
        if (inverse[a] < 0)
            throw ValidationError("group element '" + elems[a] + "' has no inverse");
    }
}

GroupPresentation GroupPresentation::cyclic(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
    return GroupPresentation(std::move(names), std::move(mul));
}

GroupPresentation GroupPresentation::symmetric3() {
    // permutations of {0,1,2}; composition (p*q)(x) = p(q(x))
    std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    std::vector<std::string> names = {"e", "r", "rr", "s", "sr", "srr"};
    int n = static_cast<int>(perms.size());
    std::vector<std::vector<int>> mul(n, std::vector<int>(n, -1));
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            std::array<int, 3> comp{};
            for (int x = 0; x < 3; ++x) comp[x] = perms[p][perms[q][x]];
            for (int k = 0; k < n; ++k)
                if (perms[k] == comp) {
                    mul[p][q] = k;
                    break;
                }
        }
    return GroupPresentation(std::move(names), std::move(mul));
}

Cocycle3::Cocycle3(const GroupPresentation& g, long cond,
                   std::vector<Cyclotomic> vals)
    : conductor(cond), order(g.order()), values(std::move(vals)) {
    std::size_t n = g.order();
    if (values.size() != n * n * n)
        throw ValidationError("cocycle value table has wrong size");
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            for (int c = 0; c < g.order(); ++c) {
                if (a == g.identity || b == g.identity || c == g.identity) {
                    if (!omega(a, b, c).is_one())
                        throw ValidationError("cocycle is not normalized at (" +
                                              g.elems[a] + "," + g.elems[b] + "," +
                                              g.elems[c] + ")");
                }
                for (int d = 0; d < g.order(); ++d) {
                    Cyclotomic lhs = omega(b, c, d) * omega(a, g.mul(b, c), d) *
                                     omega(a, b, c);
                    Cyclotomic rhs = omega(g.mul(a, b), c, d) *
                                     omega(a, b, g.mul(c, d));
                    if (lhs != rhs)
                        throw ValidationError("3-cocycle identity fails at (" +
                                              g.elems[a] + "," + g.elems[b] + "," +
                                              g.elems[c] + "," + g.elems[d] + ")");
                }
            }
}

Cocycle3 Cocycle3::trivial(const GroupPresentation& g) {
    std::size_t n = g.order();
    return Cocycle3(g, 1, std::vector<Cyclotomic>(n * n * n,
                                                  Cyclotomic(1, Rational(1))));
}

Cocycle3 Cocycle3::cyclic_twist(const GroupPresentation& zn, long p) {
    int n = zn.order();
    // requires the cyclic presentation with elements named 0..n-1
    for (int i = 0; i < n; ++i)
        if (zn.elems[i] != std::to_string(i))
            throw ValidationError("cyclic_twist needs the canonical Z_n presentation");
    std::vector<Cyclotomic> vals;
    vals.reserve(static_cast<std::size_t>(n) * n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                vals.push_back(Cyclotomic::root_power(n, p * a * ((b + c) / n)));
    return Cocycle3(zn, n, std::move(vals));
}

}  // namespace facekit
