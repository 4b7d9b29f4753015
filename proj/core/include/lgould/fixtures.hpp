#pragma once

#include <string>
#include <vector>

#include "lgould/basis.hpp"
#include "lgould/matrix.hpp"

namespace lgould::fixtures {

/// A transcribed matrix: sparse entries with 1-based positions.  When
/// `display_order` is set, the positions refer to the basis-change display
/// ordering (rows by (b,c) pairs, columns by v-index), otherwise to the
/// natural tensor ordering.
struct MatrixFixture {
    std::string name;
    size_t dim = 0;
    bool display_order = false;
    std::vector<std::tuple<int, int, std::string>> entries;
};

/// A transcribed degree-reduction table: exponent of z (or t) per nonzero
/// position, in the display ordering.
struct DegFixture {
    std::string name;
    std::vector<std::tuple<int, int, std::string>> entries;  // exponent as fraction text
};

const std::vector<MatrixFixture>& matrix_fixtures();
const std::vector<DegFixture>& deg_fixtures();

/// Build the transcribed matrix in natural ordering.
Mat<FracBi> build(const MatrixFixture& f);
/// Build the transcribed reduction in natural ordering.
DegMatrix build(const DegFixture& f);

/// The construction-path matrix with the given fixture name.
Mat<FracBi> computed(const std::string& name);
DegMatrix computed_deg(const std::string& name);

}  // namespace lgould::fixtures
