#pragma once

#include <array>
#include <optional>

#include "lgould/reps.hpp"

namespace lgould {

/// Display orderings used for the 16x16 change-of-basis matrices: columns
/// list v-indices, rows list (b,c) pairs for e_b (x) e_c^*.  Stored so the
/// comparison with the printed tables is positional.
const std::array<int, 16>& basis_col_order();                       // 1-based v index
const std::array<std::pair<int, int>, 16>& basis_row_order();       // 1-based pairs

/// natural index of e_b (x) e_c^* (0-based) for 1-based b, c.
inline int pair_index(int b, int c) { return (b - 1) * 4 + (c - 1); }

/// A 16x16 matrix over the scalar field together with the display metadata.
struct BasisChange {
    Mat<FracBi> natural;  // rows: natural pair index; cols: natural v index

    /// Entry by printed position (0-based positions in the display order).
    const FracBi& printed(size_t row_pos, size_t col_pos) const;
    Mat<FracBi> printed_matrix() const;
};

/// The sixteen vectors of the special basis of V_alpha (x) V_alpha^*,
/// obtained by applying the stated operator words to e_1 (x) e_1^*;
/// column k (0-based) is v_{k+1} in natural coordinates.
const std::vector<std::vector<FracBi>>& build_v_basis();

/// Change-of-basis matrix A (columns are the v_k).
const BasisChange& matrix_A();

/// The alpha-independent module W: every generator matrix of
/// A^-1 Pi_alpha(g) A has coefficients in Q(q); throws std::domain_error
/// if any entry has u-support (which would falsify the construction).
const Rep& theta_rep();

/// F: W -> W^*, built from the pivot map, the canonical pairing twist and
/// the induced dual isomorphism.
const Mat<FracBi>& matrix_F();

/// Atilde = A F^-1 (the matrix of the isomorphism W^* -> V (x) V^*).
const BasisChange& matrix_Atilde();

/// Action of a generator on W^* via conjugation, Atilde^-1 Pi_alpha(g) Atilde.
Mat<FracBi> theta_star(const Atom& g);

/// Entrywise degree reduction of a matrix: exponent of z (resp. t) of each
/// nonzero entry, in natural ordering.
struct DegMatrix {
    std::array<std::optional<mpq_class>, 256> exp;
    const std::optional<mpq_class>& at(size_t row, size_t col) const { return exp[row * 16 + col]; }
    std::optional<mpq_class>& at(size_t row, size_t col) { return exp[row * 16 + col]; }
};

struct Reductions {
    DegMatrix a_z, a_t;            // from A
    DegMatrix atilde_z, atilde_t;  // from q^alpha * Atilde (the rescaled table)
};

const Reductions& reductions();

/// The paper's four degree-graph facts restated as matrix checks on A_t and
/// the rescaled Atilde_t.
struct WeightGraphReport {
    bool b_c_graphs_equal = false;
    bool e2_e3_symmetric = false;
    bool weights_coherent = false;
    bool orientation_antisymmetric = false;
    bool all() const {
        return b_c_graphs_equal && e2_e3_symmetric && weights_coherent &&
               orientation_antisymmetric;
    }
};

WeightGraphReport weight_graph_report();

}  // namespace lgould
