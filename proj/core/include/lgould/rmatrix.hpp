#pragma once

#include <vector>

#include "lgould/reps.hpp"
#include "lgould/verify.hpp"

namespace lgould {

/// Braiding data on V_alpha (x) V_alpha: the R-matrix (composed with the
/// flip), its inverse, the four commutant idempotents and the eigenscalars
/// selected by the Yang-Baxter + kink + specialization constraints.
struct BraidingData {
    Mat<FracBi> r_matrix;      // 16x16
    Mat<FracBi> r_inverse;     // 16x16
    std::vector<Mat<FracBi>> idempotents;
    std::vector<FracBi> eigenscalars;
    size_t commutant_dim = 0;
    bool kink_plus_is_one = false;
    bool kink_minus_is_one = false;
};

/// Basis of the commutant of the tensor-square action; dimension must be 4.
std::vector<Mat<FracBi>> commutant();

/// The four idempotents projecting onto the summands of V (x) V.
std::vector<Mat<FracBi>> commutant_idempotents();

/// The braiding, constructed once and cached for the process lifetime.
const BraidingData& braiding();

bool yang_baxter_holds(const Mat<FracBi>& r);
bool braiding_inverse_ok(const BraidingData& b);

/// Crossing operators for all four strand-orientation patterns.  Colors:
/// 0 = V (downward strand), 1 = V^* (upward strand).  cross(a, b, sign) maps
/// the object (a, b) to (b, a).
const Mat<FracBi>& crossing(int left_color, int right_color, int sign);

/// All mixed-orientation Reidemeister II and rotation identities.
VerifyReport verify_rotated_crossings();

}  // namespace lgould
