#pragma once

// GL_n(F_q) as the type-A Chevalley group: root elements, the Weyl
// representatives n_i, torus elements, Borel/parabolic membership, and
// canonical keys for the cosets gP_k and gB.
//
// Matrix generator indices are 1-based to match s_1, ..., s_{n-1}.

#include <vector>

#include "schubert/matrix.hpp"
#include "schubert/rootsys.hpp"
#include "schubert/subspace.hpp"

namespace schubert::chevalley {

/// I + c E_{ij}; requires i != j.
MatrixGF x_root(const FieldPtr& field, int n, int i, int j, const FieldElement& c);

/// x_{alpha_i}(c) = I + c E_{i,i+1}.
MatrixGF x_simple(const FieldPtr& field, int n, int i, const FieldElement& c);

/// n_i = x_{alpha_i}(1) x_{-alpha_i}(-1) x_{alpha_i}(1).
MatrixGF n_simple(const FieldPtr& field, int n, int i);
MatrixGF n_simple_inv(const FieldPtr& field, int n, int i);

/// n_{i1} n_{i2} ... along the word.
MatrixGF weyl_representative(const FieldPtr& field, int n, const rootsys::Word& word);

/// diag(d^{l_1}, ..., d^{l_n}); d must be nonzero.
MatrixGF torus(const FieldPtr& field, const std::vector<int>& cocharacter, const FieldElement& d);

/// Upper triangular (and invertible).
bool is_in_borel(const MatrixGF& g);

/// Invertible and block upper triangular with blocks (i, n-i): g[r][c] = 0 for r > i >= c (1-based).
bool is_in_parabolic(const MatrixGF& g, int i);

/// Echelon key of the span of the first i columns of g; constant on gP_i.
SubspaceCanonical coset_key_parabolic(const MatrixGF& g, int i);

/// Keys of the first 1, ..., n-1 columns; constant on gB.
FlagCanonical coset_key_borel(const MatrixGF& g);

/// The standard flag span{e1} < span{e1,e2} < ...
FlagCanonical standard_flag(const FieldPtr& field, int n);

}  // namespace schubert::chevalley
