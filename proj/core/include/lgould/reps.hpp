#pragma once

#include <array>
#include <string>
#include <vector>

#include "lgould/algebra.hpp"
#include "lgould/matrix.hpp"

namespace lgould {

/// A finite-dimensional module over U_q gl(2|1)^sigma with diagonal Cartan
/// action.  Cartan matrices are stored as exponent vectors (u-exp, s-exp)
/// per basis index so that arbitrary half powers can be formed exactly.
class Rep {
public:
    Rep() = default;

    const std::string& label() const { return label_; }
    size_t dim() const { return dim_; }
    const std::vector<int>& grading() const { return grading_; }
    const std::vector<int>& sigma_diag() const { return sigma_; }

    /// (u-exponent, s-exponent) of the diagonal entry of q^E_i^i, i in 1..3.
    const std::vector<std::pair<int, int>>& cartan_diag(int i) const { return cartan_[i - 1]; }

    const Mat<FracBi>& ladder(Ladder g) const { return ladder_[static_cast<int>(g)]; }

    Mat<FracBi> eval(const Atom& a) const;
    Mat<FracBi> eval(const Word& w) const;
    Mat<FracBi> eval(const WordSum& ws) const;
    Mat<FracBi> eval(Ladder g) const { return ladder_[static_cast<int>(g)]; }
    Mat<FracBi> sigma_matrix() const;
    Mat<FracBi> cartan_matrix(const CartanMono& c) const;

    /// Evaluate a coproduct image on this (x) other.
    Mat<FracBi> eval_tensor(const TensorWord& tw, const Rep& other) const;

    static Rep make(std::string label, size_t dim, std::vector<int> grading,
                    std::array<std::vector<std::pair<int, int>>, 3> cartan,
                    std::array<Mat<FracBi>, kLadderCount> ladders,
                    std::vector<int> sigma);

private:
    std::string label_;
    size_t dim_ = 0;
    std::vector<int> grading_;
    std::array<std::vector<std::pair<int, int>>, 3> cartan_;
    std::array<Mat<FracBi>, kLadderCount> ladder_;
    std::vector<int> sigma_;
};

/// The 4-dimensional typical module V_alpha with the printed matrices.
const Rep& v_alpha();

/// The one-dimensional counit module.
Rep counit_rep();

/// Dual module: generator matrices are transposes of the bosonized-antipode
/// images.
Rep dual(const Rep& r);

/// Tensor product via the bosonized coproduct.  The derived elements E31 and
/// E13 are taken from the matrix products of the tensor ladders.
Rep tensor(const Rep& r1, const Rep& r2);

/// V_alpha (x) V_alpha^* with the paper's basis ordering (e_i (x) e_j^*,
/// second index fast).
const Rep& pi_alpha_tensor();

/// V_alpha (x) V_alpha without dualization (used for the braiding).
const Rep& pi_alpha_square();

/// Result of evaluating the relation set on a module.
struct RelationReport {
    struct Entry {
        std::string label;
        bool pass;
        size_t row = 0, col = 0;  // first failing entry when !pass
        std::string residual;
    };
    std::vector<Entry> entries;
    bool all_pass() const;
};

RelationReport check_relations(const Rep& r);

/// Duality data: diagonal weights of the four cap/cup morphisms between
/// V_alpha and its dual.  The diagonal of the negative cap equals the pivot
/// matrix pi_alpha(K), K = q^-2E33 q^-2E22 sigma.
struct CapsCups {
    std::vector<FracBi> omega_minus;  // cap weights, pi_alpha(K)
    std::vector<FracBi> omega_plus;   // identity pairing
    std::vector<FracBi> mho_minus;    // cup weights, pi_alpha(K)^-1
    std::vector<FracBi> mho_plus;     // identity pairing
};

const CapsCups& caps_cups();

/// pi_alpha(g) for the pivot g = q^-E11 q^E22 q^E33 sigma.
Mat<FracBi> pivot_g_matrix();
/// pi_alpha(K) for K = q^-2E33 q^-2E22 sigma.
Mat<FracBi> pivot_k_matrix();

}  // namespace lgould
