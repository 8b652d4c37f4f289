#pragma once

#include <vector>

#include "facekit/face_algebra.hpp"

namespace facekit {

/// One coaction summand: delta(m_a) = sum m_vec ox coeff * e_alg.
struct CoactTerm {
    int vec;
    int alg;
    Cyclotomic coeff;
};

/// Finite-dimensional right comodule with its R-bimodule face weights.
struct Comodule {
    int dim = 0;
    std::vector<std::vector<CoactTerm>> coaction;   // per basis vector
    std::vector<std::pair<int, int>> faces;         // (left, right) labels
};

/// Omega0(L_xi) with the coaction read off the coend blocks.
Comodule simple_comodule(const FaceAlgebra& alg, int xi);

/// The unit comodule Omega0(I).
Comodule unit_comodule(const FaceAlgebra& alg);

/// M ox_R N on face-matched basis pairs, coaction through the product
/// table. Throws ValidationError if a coaction term escapes the
/// face-matched basis (cannot happen for well-formed tables).
Comodule tensor_comodules(const FaceAlgebra& alg, const Comodule& M,
                          const Comodule& N);

/// Linear dual with coaction through the antipode; throws
/// UnsupportedOperationError when the algebra has no antipode table.
Comodule dual_comodule(const FaceAlgebra& alg, const Comodule& M);

/// Exact basis of comodule maps M -> N (dim N x dim M matrices).
std::vector<CycMatrix> intertwiner_space(const FaceAlgebra& alg,
                                         const Comodule& M, const Comodule& N);

/// Coassociativity, counit law and face-weight consistency; returns the
/// first violation description or empty string.
std::string check_comodule(const FaceAlgebra& alg, const Comodule& M);

/// True when `phi` intertwines the coactions of M and N.
bool is_comodule_map(const FaceAlgebra& alg, const Comodule& M,
                     const Comodule& N, const CycMatrix& phi);

}  // namespace facekit
