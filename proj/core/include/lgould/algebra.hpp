#pragma once

#include <string>
#include <vector>

#include "lgould/laurent.hpp"

namespace lgould {

/// The ladder generators of U_q gl(2|1)^sigma together with the two derived
/// elements.  Writing Eab for the symbol printed E_a^b:
///   raising: E21, E32; lowering: E12, E23;
///   derived: E31 = E21*E32 - q^-1*E32*E21, E13 = E23*E12 - q*E12*E23.
enum class Ladder { E21, E12, E32, E23, E31, E13 };

constexpr int kLadderCount = 6;

/// Parity of a ladder generator (E32, E23, E31, E13 are odd).
int parity(Ladder g);
const char* name(Ladder g);

/// Monomial in the Cartan subalgebra, q^((a/2)E11 + (b/2)E22 + (c/2)E33)
/// with doubled integer coefficients so half powers stay integral.  The
/// square-root choice for q^(E_i^i/2) is the entrywise positive one.
struct CartanMono {
    int a2 = 0, b2 = 0, c2 = 0;
    bool is_identity() const { return a2 == 0 && b2 == 0 && c2 == 0; }
    CartanMono inverse() const { return {-a2, -b2, -c2}; }
    CartanMono times(const CartanMono& o) const { return {a2 + o.a2, b2 + o.b2, c2 + o.c2}; }
    bool operator==(const CartanMono& o) const = default;
};

/// q^E_i^i for i in 1..3.
CartanMono cartan_generator(int i);

struct Atom {
    enum Kind { CARTAN, LADDER, SIGMA } kind;
    CartanMono cartan;  // valid when kind == CARTAN
    Ladder ladder;      // valid when kind == LADDER

    static Atom make_cartan(const CartanMono& c) { return {CARTAN, c, Ladder::E21}; }
    static Atom make_ladder(Ladder g) { return {LADDER, {}, g}; }
    static Atom make_sigma() { return {SIGMA, {}, Ladder::E21}; }

    int parity_of() const { return kind == LADDER ? parity(ladder) : 0; }
    bool operator==(const Atom& o) const;
};

/// Formal product of atoms (read left to right).
using Word = std::vector<Atom>;

int parity(const Word& w);

/// Formal linear combination of words with FracBi scalars.
struct WordSum {
    std::vector<std::pair<FracBi, Word>> terms;

    static WordSum of(const FracBi& c, Word w) { return {{{c, std::move(w)}}}; }
    WordSum operator+(const WordSum& o) const;
    WordSum operator-(const WordSum& o) const;
    WordSum scaled(const FracBi& c) const;
};

/// Formal sum of scalar * (left word (x) right word) terms; the image type
/// of the bosonized coproduct.
struct TensorWord {
    struct Term {
        FracBi scalar;
        Word left, right;
    };
    std::vector<Term> terms;

    /// Componentwise product; valid in the bosonized (ordinary) algebra
    /// where no Koszul signs appear in the tensor square.
    TensorWord operator*(const TensorWord& o) const;
    TensorWord operator+(const TensorWord& o) const;
    TensorWord scaled(const FracBi& c) const;
    /// Merge equal (left, right) pairs and drop zero scalars.
    void normalize();
};

/// Bosonized coproduct of a generator atom.  For the derived elements E31
/// and E13 this returns the explicit three-term expressions (with the sigma
/// insertion on odd right factors).
TensorWord coproduct_sigma(const Atom& g);

/// Bosonized coproduct computed from the defining products for the derived
/// elements; used to cross-check the three-term expressions.
TensorWord coproduct_sigma_from_product(Ladder g);

/// Bosonized antipode of a generator atom.
WordSum antipode_sigma(const Atom& g);

/// Counit: 1 on Cartans and sigma, 0 on ladders.
FracBi counit(const Atom& g);
FracBi counit(const Word& w);

/// One defining relation, stored as a formal sum that must evaluate to zero.
struct Relation {
    std::string label;
    WordSum lhs_minus_rhs;
};

/// All defining relations of U_q gl(2|1)^sigma, including the half-power
/// square checks, the sigma commutations, and the derived-element
/// definitions.
std::vector<Relation> relation_set();

}  // namespace lgould
