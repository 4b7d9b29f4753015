#include "lgould/basis.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lgould {

const std::array<int, 16>& basis_col_order() {
    static const std::array<int, 16> order = {1, 8, 9, 16, 2, 5, 15, 12,
                                              3, 4, 14, 13, 6, 11, 10, 7};
    return order;
}

const std::array<std::pair<int, int>, 16>& basis_row_order() {
    static const std::array<std::pair<int, int>, 16> order = {
        std::pair{1, 1}, {2, 2}, {3, 3}, {4, 4}, {1, 2}, {2, 1}, {3, 4}, {4, 3},
        {1, 3}, {3, 1}, {2, 4}, {4, 2}, {1, 4}, {4, 1}, {2, 3}, {3, 2}};
    return order;
}

const FracBi& BasisChange::printed(size_t row_pos, size_t col_pos) const {
    auto [b, c] = basis_row_order()[row_pos];
    int col = basis_col_order()[col_pos] - 1;
    return natural(pair_index(b, c), col);
}

Mat<FracBi> BasisChange::printed_matrix() const {
    Mat<FracBi> m(16, 16);
    for (size_t i = 0; i < 16; ++i)
        for (size_t j = 0; j < 16; ++j) m(i, j) = printed(i, j);
    return m;
}

const std::vector<std::vector<FracBi>>& build_v_basis() {
    static const std::vector<std::vector<FracBi>> basis = [] {
        const Rep& pi = pi_alpha_tensor();
        // v = e_1 (x) e_1^*
        std::vector<FracBi> v(16);
        v[pair_index(1, 1)] = FracBi::one();
        auto apply_word = [&](std::initializer_list<Ladder> word) {
            // Words act operator-style: the rightmost factor acts first.
            std::vector<FracBi> x = v;
            std::vector<Ladder> w(word);
            for (auto it = w.rbegin(); it != w.rend(); ++it)
                x = pi.ladder(*it).apply(x);
            return x;
        };
        std::vector<std::vector<FracBi>> vs;
        vs.push_back(v);                                                   // v1
        vs.push_back(apply_word({Ladder::E32}));                           // v2
        vs.push_back(apply_word({Ladder::E31}));                           // v3
        vs.push_back(apply_word({Ladder::E13}));                           // v4
        vs.push_back(apply_word({Ladder::E23}));                           // v5
        vs.push_back(apply_word({Ladder::E32, Ladder::E31}));              // v6
        vs.push_back(apply_word({Ladder::E32, Ladder::E13}));              // v7
        vs.push_back(apply_word({Ladder::E32, Ladder::E23}));              // v8
        vs.push_back(apply_word({Ladder::E31, Ladder::E13}));              // v9
        vs.push_back(apply_word({Ladder::E31, Ladder::E23}));              // v10
        vs.push_back(apply_word({Ladder::E13, Ladder::E23}));              // v11
        vs.push_back(apply_word({Ladder::E31, Ladder::E13, Ladder::E23}));  // v12
        vs.push_back(apply_word({Ladder::E32, Ladder::E13, Ladder::E23}));  // v13
        vs.push_back(apply_word({Ladder::E32, Ladder::E31, Ladder::E23}));  // v14
        vs.push_back(apply_word({Ladder::E32, Ladder::E31, Ladder::E13}));  // v15
        vs.push_back(apply_word({Ladder::E32, Ladder::E31, Ladder::E13, Ladder::E23}));  // v16
        return vs;
    }();
    return basis;
}

const BasisChange& matrix_A() {
    static const BasisChange bc = [] {
        BasisChange r;
        r.natural = Mat<FracBi>(16, 16);
        const auto& vs = build_v_basis();
        for (size_t k = 0; k < 16; ++k)
            for (size_t i = 0; i < 16; ++i) r.natural(i, k) = vs[k][i];
        return r;
    }();
    return bc;
}

namespace {

// Diagonal (u-exp, s-exp) data recovered from a diagonal monomial matrix.
std::vector<std::pair<int, int>> diag_exponents(const Mat<FracBi>& m) {
    std::vector<std::pair<int, int>> d;
    for (size_t i = 0; i < m.rows(); ++i) {
        const FracBi& e = m(i, i);
        const LaurentBi& l = e.as_laurent();
        if (l.term_count() != 1) throw std::domain_error("diag_exponents: not a monomial");
        int ue = l.lo();
        const RatQ& c = l.coeff(ue);
        if (!c.is_monomial() || c.num().trail() != 1 || c.den().trail() != 1)
            throw std::domain_error("diag_exponents: not a positive unit monomial");
        d.push_back({ue, c.num().lo() - c.den().lo()});
    }
    return d;
}

}  // namespace

const Rep& theta_rep() {
    static const Rep theta = [] {
        const Rep& pi = pi_alpha_tensor();
        const Mat<FracBi>& a = matrix_A().natural;
        Mat<FracBi> ainv = a.inverse();

        auto conj = [&](const Mat<FracBi>& m) { return ainv * m * a; };
        auto require_u_free = [](const Mat<FracBi>& m, const char* what) {
            for (size_t i = 0; i < m.rows(); ++i)
                for (size_t j = 0; j < m.cols(); ++j) {
                    const FracBi& e = m(i, j);
                    if (e.is_zero()) continue;
                    bool ok = true;
                    if (!e.num().is_zero() && (e.num().lo() != 0 || e.num().hi() != 0)) ok = false;
                    if (e.den().lo() != 0 || e.den().hi() != 0) ok = false;
                    if (!ok) {
                        std::ostringstream os;
                        os << "theta entry (" << i << "," << j << ") of " << what
                           << " has u-support";
                        throw std::domain_error(os.str());
                    }
                }
        };

        std::array<Mat<FracBi>, kLadderCount> lad;
        for (int gi = 0; gi < kLadderCount; ++gi) {
            lad[gi] = conj(pi.ladder(static_cast<Ladder>(gi)));
            require_u_free(lad[gi], name(static_cast<Ladder>(gi)));
        }
        std::array<std::vector<std::pair<int, int>>, 3> cart;
        for (int i = 1; i <= 3; ++i) {
            Mat<FracBi> c = conj(pi.cartan_matrix(cartan_generator(i)));
            require_u_free(c, "cartan");
            for (size_t r = 0; r < 16; ++r)
                for (size_t s = 0; s < 16; ++s)
                    if (r != s && !c(r, s).is_zero())
                        throw std::domain_error("theta: cartan action is not diagonal");
            cart[i - 1] = diag_exponents(c);
            for (auto& [ue, se] : cart[i - 1])
                if (ue != 0) throw std::domain_error("theta: cartan exponent has u-support");
        }
        Mat<FracBi> sg = conj(pi.sigma_matrix());
        std::vector<int> sigma, grading;
        for (size_t i = 0; i < 16; ++i) {
            const FracBi& e = sg(i, i);
            int val = e == FracBi::one() ? 1 : (e == -FracBi::one() ? -1 : 0);
            if (val == 0) throw std::domain_error("theta: sigma is not +-1 diagonal");
            sigma.push_back(val);
            grading.push_back(val == 1 ? 0 : 1);
        }
        return Rep::make("W", 16, std::move(grading), std::move(cart), std::move(lad),
                         std::move(sigma));
    }();
    return theta;
}

const Mat<FracBi>& matrix_F() {
    static const Mat<FracBi> f = [] {
        const Mat<FracBi>& a = matrix_A().natural;
        // rho = pi(g) (x) id on V (x) V^*.
        Mat<FracBi> g4 = pivot_g_matrix();
        Mat<FracBi> rho(16, 16);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) rho(pair_index(i + 1, j + 1), pair_index(i + 1, j + 1)) = g4(i, i);
        // theta twist: e_{e_i} (x) e_j^* -> dual basis vector of e_j (x) e_i^*.
        Mat<FracBi> tw(16, 16);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) tw(pair_index(j, i), pair_index(i, j)) = FracBi::one();
        return a.transposed() * tw * rho * a;
    }();
    return f;
}

const BasisChange& matrix_Atilde() {
    static const BasisChange bc = [] {
        BasisChange r;
        r.natural = matrix_A().natural * matrix_F().inverse();
        return r;
    }();
    return bc;
}

Mat<FracBi> theta_star(const Atom& g) {
    const Mat<FracBi>& at = matrix_Atilde().natural;
    return at.inverse() * pi_alpha_tensor().eval(g) * at;
}

namespace {

DegMatrix reduce_matrix(const Mat<FracBi>& m, bool z_side) {
    DegMatrix d;
    for (size_t i = 0; i < 16; ++i)
        for (size_t j = 0; j < 16; ++j) {
            const FracBi& e = m(i, j);
            if (e.is_zero()) continue;
            d.at(i, j) = z_side ? deg_z(e) : deg_t(e);
        }
    return d;
}

}  // namespace

const Reductions& reductions() {
    static const Reductions red = [] {
        Reductions r;
        const Mat<FracBi>& a = matrix_A().natural;
        Mat<FracBi> at = matrix_Atilde().natural.scaled(FracBi(LaurentBi::qalpha_pow(1)));
        r.a_z = reduce_matrix(a, true);
        r.a_t = reduce_matrix(a, false);
        r.atilde_z = reduce_matrix(at, true);
        r.atilde_t = reduce_matrix(at, false);
        return r;
    }();
    return red;
}

WeightGraphReport weight_graph_report() {
    const Reductions& red = reductions();
    // Transition graph: entry at natural row (k,j) means state j -> state k.
    using Graph = std::map<std::pair<int, int>, std::set<mpq_class>>;
    auto graph_of = [](const DegMatrix& d) {
        Graph g;
        for (int k = 1; k <= 4; ++k)
            for (int j = 1; j <= 4; ++j)
                for (int col = 0; col < 16; ++col) {
                    const auto& e = d.at(pair_index(k, j), col);
                    if (e) g[{j, k}].insert(*e);
                }
        return g;
    };
    Graph gb = graph_of(red.a_t);
    Graph gc = graph_of(red.atilde_t);

    WeightGraphReport rep;
    rep.b_c_graphs_equal = (gb == gc);

    // Merge both graphs for the remaining checks.
    Graph g = gb;
    for (const auto& [k, v] : gc) g[k].insert(v.begin(), v.end());

    rep.weights_coherent = true;
    for (const auto& [edge, weights] : g)
        if (weights.size() != 1) rep.weights_coherent = false;

    auto weight = [&](int j, int k) -> std::optional<mpq_class> {
        auto it = g.find({j, k});
        if (it == g.end() || it->second.size() != 1) return std::nullopt;
        return *it->second.begin();
    };

    auto swap23 = [](int s) { return s == 2 ? 3 : (s == 3 ? 2 : s); };
    rep.e2_e3_symmetric = true;
    for (int j = 1; j <= 4; ++j)
        for (int k = 1; k <= 4; ++k) {
            auto w1 = weight(j, k);
            auto w2 = weight(swap23(j), swap23(k));
            if (w1.has_value() != w2.has_value() || (w1 && *w1 != *w2))
                rep.e2_e3_symmetric = false;
        }

    rep.orientation_antisymmetric = true;
    for (int j = 1; j <= 4; ++j)
        for (int k = 1; k <= 4; ++k) {
            auto w1 = weight(j, k);
            auto w2 = weight(k, j);
            if (w1 && w2 && *w1 != -*w2) rep.orientation_antisymmetric = false;
        }
    return rep;
}

}  // namespace lgould
