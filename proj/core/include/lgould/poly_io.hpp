#pragma once

#include <string>

#include "lgould/laurent.hpp"

namespace lgould {

/// Text styles for scalars.
///   qqa:  grouped by powers of q^alpha (written `qa`), coefficients in q
///   t0t1: integer polynomial in t0, t1 (requires lattice membership)
///   su:   raw form in the internal variables s = q^(1/2), u = q^(alpha/2)
enum class PolyStyle { QQA, T0T1, SU };

PolyStyle parse_style(const std::string& name);

std::string render(const LaurentBi& x, PolyStyle style);
std::string render(const FracBi& x, PolyStyle style);
std::string render(const T0T1Poly& x);

/// Parse any of the three styles (the variables used decide the style).
/// Accepted variables: s, u, q, qa, t0, t1; exponents may be integers or
/// parenthesized fractions such as qa^(1/2).  Throws std::invalid_argument
/// on syntax errors or non-integral internal exponents.
FracBi parse_poly(const std::string& text);

}  // namespace lgould
