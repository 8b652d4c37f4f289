#include "facekit/face_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "facekit/errors.hpp"
#include "facekit/parallel.hpp"

namespace facekit {

int FiberBasis::position(int xi, int left, int right, unsigned mult) const {
    const auto& f = fibers[xi];
    for (std::size_t p = 0; p < f.size(); ++p)
        if (f[p].left == left && f[p].right == right && f[p].mult == mult)
            return static_cast<int>(p);
    return -1;
}

unsigned FiberBasis::face_mult(int left, int xi, int right) const {
    unsigned n = 0;
    for (const auto& v : fibers[xi])
        if (v.left == left && v.right == right) ++n;
    return n;
}

FiberBasis fiber_basis(const FusionData& fd) {
    FiberBasis out;
    out.fibers.resize(fd.count());
    for (int xi = 0; xi < fd.count(); ++xi)
        for (int lam = 0; lam < fd.count(); ++lam)
            for (int mu = 0; mu < fd.count(); ++mu)
                for (unsigned i = 0; i < fd.N(lam, xi, mu); ++i)
                    out.fibers[xi].push_back(FiberVector{xi, lam, mu, i});
    return out;
}

void LinComb::add(int idx, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(t_.begin(), t_.end(), idx,
                               [](const auto& p, int k) { return p.first < k; });
    if (it != t_.end() && it->first == idx) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    } else {
        t_.insert(it, {idx, c});
    }
}

void LinComb::add_scaled(const LinComb& o, const Cyclotomic& c) {
    if (c.is_zero()) return;
    for (const auto& [idx, x] : o.t_) add(idx, x * c);
}

FaceAlgebra::BasisId FaceAlgebra::split(int idx) const {
    int xi = 0;
    while (xi + 1 < objects() && block_offset[xi + 1] <= idx) ++xi;
    int off = idx - block_offset[xi];
    int f = block_size(xi);
    return BasisId{xi, off / f, off % f};
}

const FiberVector& FaceAlgebra::ivec(int idx) const {
    BasisId b = split(idx);
    return fiber.fiber(b.object)[b.ipos];
}

const FiberVector& FaceAlgebra::jvec(int idx) const {
    BasisId b = split(idx);
    return fiber.fiber(b.object)[b.jpos];
}

LinComb FaceAlgebra::mul(const LinComb& a, const LinComb& b) const {
    LinComb out;
    for (const auto& [u, ca] : a.terms())
        for (const auto& [v, cb] : b.terms())
            out.add_scaled(mul(u, v), ca * cb);
    return out;
}

LinComb FaceAlgebra::apply_antipode(const LinComb& a) const {
    LinComb out;
    for (const auto& [u, c] : a.terms()) out.add_scaled(antipode[u], c);
    return out;
}

LinComb FaceAlgebra::face_left(int lam) const {
    LinComb out;
    for (int mu = 0; mu < objects(); ++mu)
        out.add_scaled(eta_of(lam, mu), one());
    return out;
}

LinComb FaceAlgebra::face_right(int mu) const {
    LinComb out;
    for (int lam = 0; lam < objects(); ++lam)
        out.add_scaled(eta_of(lam, mu), one());
    return out;
}

std::string FaceAlgebra::basis_name(int idx) const {
    BasisId b = split(idx);
    const FiberVector& I = fiber.fiber(b.object)[b.ipos];
    const FiberVector& J = fiber.fiber(b.object)[b.jpos];
    std::ostringstream os;
    os << "k{" << object_names[b.object] << ";(" << object_names[I.left] << ","
       << object_names[I.right] << "," << I.mult << ");(" << object_names[J.left]
       << "," << object_names[J.right] << "," << J.mult << ")}";
    return os.str();
}

FaceAlgebra init_coalgebra(const FusionData& fd) {
    FaceAlgebra alg;
    alg.conductor = fd.conductor;
    alg.object_names = fd.labels;
    alg.unit_object = fd.unit;
    alg.fiber = fiber_basis(fd);
    alg.fusion = fd;
    alg.block_offset.resize(fd.count());
    int dim = 0;
    for (int xi = 0; xi < fd.count(); ++xi) {
        alg.block_offset[xi] = dim;
        int f = static_cast<int>(alg.fiber.fiber(xi).size());
        dim += f * f;
    }
    alg.dim = dim;
    alg.coproduct.resize(dim);
    alg.counit.assign(dim, alg.zero());
    for (int xi = 0; xi < fd.count(); ++xi) {
        int f = alg.block_size(xi);
        for (int I = 0; I < f; ++I)
            for (int J = 0; J < f; ++J) {
                int u = alg.index_of(xi, I, J);
                auto& cop = alg.coproduct[u];
                cop.reserve(f);
                for (int K = 0; K < f; ++K)
                    cop.push_back(CoTerm{alg.index_of(xi, I, K),
                                         alg.index_of(xi, K, J), alg.one()});
                if (I == J) alg.counit[u] = alg.one();
            }
    }
    return alg;
}

std::vector<Phi2Term> phi2_coeffs(const FusionData& fd, const FiberVector& x,
                                  const FiberVector& y) {
    std::vector<Phi2Term> out;
    if (x.right != y.left) return out;  // x ox_R y = 0
    for (int z = 0; z < fd.count(); ++z)
        for (unsigned t = 0; t < fd.N(x.object, y.object, z); ++t)
            for (unsigned b = 0; b < fd.N(x.left, z, y.right); ++b) {
                Cyclotomic c = fd.f_entry(x.left, x.object, y.object, y.right,
                                          Tree{x.right, x.mult, y.mult},
                                          Tree{z, t, b});
                if (!c.is_zero())
                    out.push_back(Phi2Term{z, t, FiberVector{z, x.left, y.right, b},
                                           std::move(c)});
            }
    return out;
}

void build_product(FaceAlgebra& alg) {
    const FusionData& fd = *alg.fusion;
    int V = fd.count();
    alg.product.assign(static_cast<std::size_t>(alg.dim) * alg.dim, LinComb());

    // independent work per (xi, eta) block pair
    std::vector<std::pair<int, int>> blocks;
    for (int xi = 0; xi < V; ++xi)
        for (int eta = 0; eta < V; ++eta) blocks.emplace_back(xi, eta);

    parallel_chunks(blocks.size(), [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
        for (std::uint64_t bi = lo; bi < hi; ++bi) {
            auto [xi, eta] = blocks[bi];
            const auto& fx = alg.fiber.fiber(xi);
            const auto& fy = alg.fiber.fiber(eta);
            for (std::size_t Ipos = 0; Ipos < fx.size(); ++Ipos) {
                const FiberVector& I = fx[Ipos];
                for (std::size_t Kpos = 0; Kpos < fy.size(); ++Kpos) {
                    const FiberVector& K = fy[Kpos];
                    if (I.right != K.left) continue;  // ox_E face mismatch
                    for (std::size_t Jpos = 0; Jpos < fx.size(); ++Jpos) {
                        const FiberVector& J = fx[Jpos];
                        for (std::size_t Lpos = 0; Lpos < fy.size(); ++Lpos) {
                            const FiberVector& L = fy[Lpos];
                            if (J.right != L.left) continue;
                            int u = alg.index_of(xi, Ipos, Jpos);
                            int v = alg.index_of(eta, Kpos, Lpos);
                            LinComb& out =
                                alg.product[static_cast<std::size_t>(u) * alg.dim + v];
                            // dual side pairs (I,K) through F^{-1}, plain
                            // side (J,L) through F, summed over the
                            // splitting (zeta, t)
                            for (int z = 0; z < V; ++z) {
                                for (unsigned t = 0; t < fd.N(xi, eta, z); ++t) {
                                    for (unsigned a = 0; a < fd.N(I.left, z, K.right); ++a) {
                                        Cyclotomic cInv = fd.finv_entry(
                                            I.left, xi, eta, K.right, Tree{z, t, a},
                                            Tree{I.right, I.mult, K.mult});
                                        if (cInv.is_zero()) continue;
                                        int Apos = alg.fiber.position(z, I.left, K.right, a);
                                        for (unsigned b = 0; b < fd.N(J.left, z, L.right); ++b) {
                                            Cyclotomic cF = fd.f_entry(
                                                J.left, xi, eta, L.right,
                                                Tree{J.right, J.mult, L.mult},
                                                Tree{z, t, b});
                                            if (cF.is_zero()) continue;
                                            int Bpos = alg.fiber.position(z, J.left, L.right, b);
                                            out.add(alg.index_of(z, Apos, Bpos), cInv * cF);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    });

    // eta table and unit element: kappa_unit at the diagonal fiber vectors
    int Vn = alg.objects();
    alg.eta.assign(static_cast<std::size_t>(Vn) * Vn, LinComb());
    LinComb unit;
    for (int lam = 0; lam < Vn; ++lam)
        for (int mu = 0; mu < Vn; ++mu) {
            int I = alg.fiber.position(fd.unit, lam, lam, 0);
            int J = alg.fiber.position(fd.unit, mu, mu, 0);
            LinComb e;
            e.add(alg.index_of(fd.unit, I, J), alg.one());
            unit.add_scaled(e, alg.one());
            alg.eta[static_cast<std::size_t>(lam) * Vn + mu] = std::move(e);
        }
    alg.unit_element = std::move(unit);
}

void compute_cup_scale(FaceAlgebra& alg) {
    const FusionData& fd = *alg.fusion;
    alg.cup_scale.assign(fd.count(), alg.zero());
    for (int xi = 0; xi < fd.count(); ++xi) {
        int xb = fd.dual[xi];
        // zig-zag 1: s_xi * F(xi,xb,xi,xi)[unit-tree, unit-tree] = 1
        Cyclotomic pivot = fd.f_entry(xi, xb, xi, xi, Tree{fd.unit, 0, 0},
                                      Tree{fd.unit, 0, 0});
        if (pivot.is_zero())
            throw DegenerateDualityError(
                "zig-zag normalization unsolvable for label " + fd.labels[xi] +
                ": unit-tree F entry is zero");
        alg.cup_scale[xi] = pivot.inverse();
        // zig-zag 2: s_xi * F^{-1}(xb,xi,xb,xb)[unit-tree, unit-tree] = 1
        Cyclotomic second = alg.cup_scale[xi] *
                            fd.finv_entry(xb, xi, xb, xb, Tree{fd.unit, 0, 0},
                                          Tree{fd.unit, 0, 0});
        if (!second.is_one())
            throw DegenerateDualityError(
                "second zig-zag identity fails for label " + fd.labels[xi] +
                ": got " + second.str());
    }
}

void build_antipode(FaceAlgebra& alg) {
    const FusionData& fd = *alg.fusion;
    int V = fd.count();
    alg.antipode.assign(alg.dim, LinComb());

    for (int xi = 0; xi < V; ++xi) {
        {
            int xb = fd.dual[xi];
            const auto& fx = alg.fiber.fiber(xi);
            const auto& fb = alg.fiber.fiber(xb);
            int d = static_cast<int>(fx.size());
            if (static_cast<int>(fb.size()) != d)
                throw RigidityFailureError("fiber of " + fd.labels[xi] +
                                           " and its dual differ in dimension");
            // duality pairing P(x, y) = s_xi * F(mu,xb,xi,mu)[(lam,j,i),(unit,0,0)]
            // for x = T^{lam xi}_{mu,i}, y = T^{mu xb}_{lam,j}
            CycMatrix P(d, d, fd.conductor);
            for (int xp = 0; xp < d; ++xp) {
                const FiberVector& x = fx[xp];
                for (int yp = 0; yp < d; ++yp) {
                    const FiberVector& y = fb[yp];
                    if (y.left != x.right || y.right != x.left) continue;
                    P.at(xp, yp) = alg.cup_scale[xi] *
                                   fd.f_entry(x.right, xb, xi, x.right,
                                              Tree{x.left, y.mult, x.mult},
                                              Tree{fd.unit, 0, 0});
                }
            }
            CycMatrix Pi(0, 0, fd.conductor);
            try {
                Pi = inverse(P);
            } catch (const SingularMatrixError&) {
                throw RigidityFailureError(
                    "duality pairing for label " + fd.labels[xi] +
                    " is singular; input is not rigid in this gauge");
            }
            // S(kappa_xi(x^A ox x_B)) =
            //   sum_{p,q} P[B,p] * P^{-1}[q,A] * kappa_xb(n^p ox n_q)
            for (int A = 0; A < d; ++A)
                for (int B = 0; B < d; ++B) {
                    LinComb& out = alg.antipode[alg.index_of(xi, A, B)];
                    for (int p = 0; p < d; ++p) {
                        if (P.at(B, p).is_zero()) continue;
                        for (int q = 0; q < d; ++q) {
                            Cyclotomic c = P.at(B, p) * Pi.at(q, A);
                            if (!c.is_zero()) out.add(alg.index_of(xb, p, q), c);
                        }
                    }
                }
        }
    }
}

FaceAlgebra build_face_algebra(const FusionData& fd) {
    FaceAlgebra alg = init_coalgebra(fd);
    build_product(alg);
    compute_cup_scale(alg);
    build_antipode(alg);
    return alg;
}

}  // namespace facekit
