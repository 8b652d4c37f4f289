#pragma once

#include <string>
#include <vector>

#include "facekit/cyclotomic.hpp"

namespace facekit {

/// Finite group as an explicit multiplication table; the group axioms are
/// checked on construction.
struct GroupPresentation {
    std::vector<std::string> elems;
    std::vector<std::vector<int>> table;  // table[a][b] = a*b
    std::vector<int> inverse;
    int identity = 0;

    GroupPresentation(std::vector<std::string> names,
                      std::vector<std::vector<int>> mul);

    int order() const { return static_cast<int>(elems.size()); }
    int mul(int a, int b) const { return table[a][b]; }

    static GroupPresentation cyclic(int n);
    static GroupPresentation symmetric3();
};

/// Normalized 3-cocycle on a finite group with root-of-unity values; the
/// cocycle identity and normalization are checked on construction.
struct Cocycle3 {
    long conductor = 1;
    int order = 0;
    std::vector<Cyclotomic> values;  // dense |G|^3

    Cocycle3(const GroupPresentation& g, long conductor,
             std::vector<Cyclotomic> vals);

    const Cyclotomic& omega(int a, int b, int c) const {
        return values[(static_cast<std::size_t>(a) * order + b) * order + c];
    }

    static Cocycle3 trivial(const GroupPresentation& g);
    /// On Z_n: omega(a,b,c) = zeta_n^{p * a * floor((b+c)/n)}, the standard
    /// nontrivial class representative.
    static Cocycle3 cyclic_twist(const GroupPresentation& zn, long p = 1);
};

}  // namespace facekit
