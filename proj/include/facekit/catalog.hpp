#pragma once

#include <string>
#include <vector>

#include "facekit/face_algebra.hpp"
#include "facekit/fusion_data.hpp"
#include "facekit/group.hpp"

namespace facekit {

/// Pointed category Vec_G (optionally twisted by a normalized 3-cocycle):
/// labels G, N(a,b,c) = delta_{ab,c}, F(a,b,c,abc) = omega(a,b,c).
/// The result passes every fusion-data validator.
FusionData vec_g(const GroupPresentation& g, const Cocycle3* omega = nullptr);

/// The group face algebra on basis e^a_b[g] built from the closed-form
/// tables (product delta_{ag,c} delta_{bg,d} e^a_b[gh], matrix coproduct,
/// counit delta_{ab}, eta(a,b) = e^a_b[1], antipode e^a_b[g] ->
/// e^{bg}_{ag}[g^{-1}]), indexed exactly like the corresponding coend
/// basis so the tables can be compared entry by entry.
FaceAlgebra group_oracle(const GroupPresentation& g);

/// Embedded fixtures: fibonacci, ising, rep_s3, vec_z3_twisted.
FusionData fixture(const std::string& name);

/// Fixture names plus the untwisted group examples vec_z2 / vec_z3 /
/// vec_z4 / vec_s3.
std::vector<std::string> builtin_names();
bool is_builtin(const std::string& name);
FusionData builtin(const std::string& name);

/// Named groups available to oracle-diff: z2, z3, z4, s3.
GroupPresentation named_group(const std::string& name);

/// Table-for-table comparison; returns mismatch descriptions (at most
/// `limit`, plus a summary line when truncated). Empty means identical.
std::vector<std::string> diff_algebras(const FaceAlgebra& a,
                                       const FaceAlgebra& b,
                                       std::size_t limit = 50);

/// Relabels every basis element (xi; I; J) -> (xi; J; I); used as the
/// deliberately wrong dictionary in oracle-diff's negative control mode.
FaceAlgebra transpose_blocks(const FaceAlgebra& alg);

}  // namespace facekit
