#include "lgould/rmatrix.hpp"

#include <stdexcept>

namespace lgould {

std::vector<Mat<FracBi>> commutant() { throw std::logic_error("not implemented"); }
std::vector<Mat<FracBi>> commutant_idempotents() { throw std::logic_error("not implemented"); }
const BraidingData& braiding() { throw std::logic_error("not implemented"); }
bool yang_baxter_holds(const Mat<FracBi>&) { throw std::logic_error("not implemented"); }
bool braiding_inverse_ok(const BraidingData&) { throw std::logic_error("not implemented"); }
const Mat<FracBi>& crossing(int, int, int) { throw std::logic_error("not implemented"); }
VerifyReport verify_rotated_crossings() { throw std::logic_error("not implemented"); }

}  // namespace lgould
