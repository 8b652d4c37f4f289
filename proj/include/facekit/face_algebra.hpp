#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "facekit/fusion_data.hpp"

namespace facekit {

/// Basis vector T^{lam xi}_{mu,i} of the fiber lam.Omega0(L_xi).mu =
/// Hom(L_mu, L_lam ox L_xi).
struct FiberVector {
    int object = 0;   // xi
    int left = 0;     // lam
    int right = 0;    // mu
    unsigned mult = 0;
    bool operator==(const FiberVector&) const = default;
};

/// Indexed fiber bases of Omega0(L_xi) for every simple xi, in the fixed
/// order (left label asc, right label asc, multiplicity index asc).
struct FiberBasis {
    std::vector<std::vector<FiberVector>> fibers;  // by object index

    const std::vector<FiberVector>& fiber(int xi) const { return fibers[xi]; }
    /// Position of (left,right,mult) within fiber(xi); -1 when absent.
    int position(int xi, int left, int right, unsigned mult) const;
    /// Multiplicity N(left, xi, right) recovered by counting.
    unsigned face_mult(int left, int xi, int right) const;
};

FiberBasis fiber_basis(const FusionData& fd);

/// Sparse linear combination of coend basis elements (global indices),
/// kept sorted with no explicit zeros.
class LinComb {
public:
    void add(int idx, const Cyclotomic& c);
    void add_scaled(const LinComb& o, const Cyclotomic& c);
    const std::vector<std::pair<int, Cyclotomic>>& terms() const { return t_; }
    bool empty() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    bool operator==(const LinComb&) const = default;

private:
    std::vector<std::pair<int, Cyclotomic>> t_;
};

/// One coproduct summand of a basis element: left ox right with an exact
/// coefficient.
struct CoTerm {
    int left;
    int right;
    Cyclotomic coeff;
    bool operator==(const CoTerm&) const = default;
};

/// The face algebra C(Omega0) as explicit basis-indexed structure-constant
/// tables. Basis element k = (xi; I; J) is kappa_xi(x^I ox x_J) over the
/// fiber basis of Omega0(L_xi); the block for xi is laid out I-major.
struct FaceAlgebra {
    long conductor = 1;
    std::vector<std::string> object_names;
    int unit_object = 0;
    FiberBasis fiber;
    std::vector<int> block_offset;  // per object
    int dim = 0;

    std::vector<LinComb> product;             // dim*dim, key u*dim+v
    std::vector<std::vector<CoTerm>> coproduct;
    std::vector<Cyclotomic> counit;
    std::vector<LinComb> eta;                 // |V|^2, key lam*|V|+mu
    LinComb unit_element;
    std::vector<LinComb> antipode;            // empty until built
    std::vector<Cyclotomic> cup_scale;        // per object; built algebras only

    std::optional<FusionData> fusion;         // present when built from data

    int objects() const { return static_cast<int>(object_names.size()); }
    int block_size(int xi) const {
        return static_cast<int>(fiber.fiber(xi).size());
    }
    int index_of(int xi, int ipos, int jpos) const {
        return block_offset[xi] + ipos * block_size(xi) + jpos;
    }
    /// (xi, I position, J position) of a global basis index.
    struct BasisId {
        int object;
        int ipos;
        int jpos;
    };
    BasisId split(int idx) const;
    const FiberVector& ivec(int idx) const;
    const FiberVector& jvec(int idx) const;

    const LinComb& mul(int u, int v) const {
        return product[static_cast<std::size_t>(u) * dim + v];
    }
    LinComb mul(const LinComb& a, const LinComb& b) const;
    LinComb apply_antipode(const LinComb& a) const;
    bool has_antipode() const { return !antipode.empty(); }

    const LinComb& eta_of(int lam, int mu) const {
        return eta[static_cast<std::size_t>(lam) * object_names.size() + mu];
    }
    /// Face idempotent "lam-dotted" = sum_mu eta(lam-dotted, mu).
    LinComb face_left(int lam) const;
    /// Face idempotent "mu" = sum_lam eta(lam-dotted, mu).
    LinComb face_right(int mu) const;

    /// Human-readable basis label, e.g. "k{t;(1,t,0);(t,1,0)}".
    std::string basis_name(int idx) const;

    Cyclotomic zero() const { return Cyclotomic(conductor); }
    Cyclotomic one() const { return Cyclotomic(conductor, Rational(1)); }
};

/// Basis, coproduct, counit of the coend; matrix-coalgebra blocks over the
/// fiber bases.
FaceAlgebra init_coalgebra(const FusionData& fd);

/// Multiplication, eta table and unit element via the F / F^{-1}
/// contraction over the chosen splittings of L_xi ox L_eta.
void build_product(FaceAlgebra& alg);

/// Solves ev normalization s_xi from the first zig-zag identity and checks
/// the second; throws DegenerateDualityError when unsolvable.
void compute_cup_scale(FaceAlgebra& alg);

/// Duality pairing blocks, their exact inverses, and the antipode table;
/// throws RigidityFailureError when a pairing block is singular.
void build_antipode(FaceAlgebra& alg);

/// Full construction: init_coalgebra + build_product + compute_cup_scale +
/// build_antipode.
FaceAlgebra build_face_algebra(const FusionData& fd);

/// Expansion terms of phi2(x ox_R y) over the splitting tree basis:
/// coefficient of (id ox Ttilde^{fused}_{xi eta, split}) applied to the
/// associated composite, expressed at the fiber vector `target`.
struct Phi2Term {
    int fused;        // zeta
    unsigned split;   // t
    FiberVector target;
    Cyclotomic coeff;
};
std::vector<Phi2Term> phi2_coeffs(const FusionData& fd, const FiberVector& x,
                                  const FiberVector& y);

}  // namespace facekit
