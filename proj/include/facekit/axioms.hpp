#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "facekit/comodule.hpp"
#include "facekit/face_algebra.hpp"

namespace facekit {

enum class CheckLevel { Fast, Full };

struct CheckOptions {
    CheckLevel level = CheckLevel::Fast;
    /// Pairwise sweeps are exhaustive up to dim 256 and seeded samples of
    /// this size beyond; triple sweeps are exhaustive up to dim 64 at Fast
    /// level (always at Full) and sampled otherwise.
    std::uint64_t sample_size = 20000;
    std::uint32_t seed = 0xFACE17;
};

struct AxiomEntry {
    std::string axiom;
    bool pass = true;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::string first_fail;  // empty when pass
};

struct AxiomReport {
    std::vector<AxiomEntry> entries;
    bool all_pass() const;
    void append(const AxiomReport& o);
};

/// Text rendering, one line per axiom entry; deterministic byte-for-byte.
std::string report_text(const AxiomReport& rep);

/// Algebra / coalgebra / dressed-coalgebra axioms: unit and associativity
/// of the product, coassociativity and counit, multiplicativity of the
/// coproduct, the weak counit law, the E-image laws and the dressed
/// compatibility equations. Exhaustive pairwise; triple sweeps per level.
AxiomReport check_face_algebra(const FaceAlgebra& alg,
                               const CheckOptions& opt = {});

/// Antipode equations, anti-(co)multiplicativity and invertibility.
/// Throws UnsupportedOperationError when no antipode table is present.
AxiomReport check_antipode(const FaceAlgebra& alg,
                           const CheckOptions& opt = {});

/// Exact inverse of the antipode as a table (solved from the full S
/// matrix); throws when S is singular.
std::vector<LinComb> antipode_inverse(const FaceAlgebra& alg);

/// Comodule-side suite: dimension accounting, canonical simple comodules,
/// Schur dimensions, fusion-rule recovery against the fiber multiplicities
/// and the dual-evaluation morphism.
AxiomReport check_reconstruction(const FaceAlgebra& alg,
                                 const CheckOptions& opt = {});

/// All three suites in order.
AxiomReport check_all(const FaceAlgebra& alg, const CheckOptions& opt = {});

/// Recovered multiplicity table N'(xi,eta,zeta) =
/// dim Hom(Omega0(zeta), Omega0(xi) ox Omega0(eta)).
struct FusionRecovery {
    std::vector<unsigned> recovered;  // dense V^3
    bool matches = false;             // equals fiber multiplicities
};
FusionRecovery reconstruct_fusion(const FaceAlgebra& alg);

}  // namespace facekit
