#include "lgould/reps.hpp"

#include <sstream>
#include <stdexcept>

namespace lgould {

namespace {
FracBi fb_q(int n) { return FracBi(LaurentBi(RatQ::q_pow(n))); }
FracBi fb_mono(int ue, int se) { return FracBi(LaurentBi::monomial(RatQ::s_pow(se), ue)); }
}  // namespace

Rep Rep::make(std::string label, size_t dim, std::vector<int> grading,
              std::array<std::vector<std::pair<int, int>>, 3> cartan,
              std::array<Mat<FracBi>, kLadderCount> ladders, std::vector<int> sigma) {
    Rep r;
    r.label_ = std::move(label);
    r.dim_ = dim;
    r.grading_ = std::move(grading);
    r.cartan_ = std::move(cartan);
    r.ladder_ = std::move(ladders);
    r.sigma_ = std::move(sigma);
    for (size_t j = 0; j < r.dim_; ++j) {
        if (r.sigma_[j] != (r.grading_[j] ? -1 : 1))
            throw std::logic_error("Rep: sigma diagonal does not match the grading");
    }
    return r;
}

Mat<FracBi> Rep::sigma_matrix() const {
    Mat<FracBi> m(dim_, dim_);
    for (size_t j = 0; j < dim_; ++j) m(j, j) = FracBi(sigma_[j]);
    return m;
}

Mat<FracBi> Rep::cartan_matrix(const CartanMono& c) const {
    Mat<FracBi> m(dim_, dim_);
    for (size_t j = 0; j < dim_; ++j) {
        long ue2 = static_cast<long>(c.a2) * cartan_[0][j].first +
                   static_cast<long>(c.b2) * cartan_[1][j].first +
                   static_cast<long>(c.c2) * cartan_[2][j].first;
        long se2 = static_cast<long>(c.a2) * cartan_[0][j].second +
                   static_cast<long>(c.b2) * cartan_[1][j].second +
                   static_cast<long>(c.c2) * cartan_[2][j].second;
        if (ue2 % 2 || se2 % 2)
            throw std::domain_error("Rep: half power is not integral on this module");
        m(j, j) = fb_mono(static_cast<int>(ue2 / 2), static_cast<int>(se2 / 2));
    }
    return m;
}

Mat<FracBi> Rep::eval(const Atom& a) const {
    switch (a.kind) {
        case Atom::CARTAN: return cartan_matrix(a.cartan);
        case Atom::SIGMA: return sigma_matrix();
        case Atom::LADDER: return ladder_[static_cast<int>(a.ladder)];
    }
    throw std::logic_error("Rep::eval: unreachable");
}

Mat<FracBi> Rep::eval(const Word& w) const {
    Mat<FracBi> m = Mat<FracBi>::identity(dim_);
    for (const auto& a : w) m = m * eval(a);
    return m;
}

Mat<FracBi> Rep::eval(const WordSum& ws) const {
    Mat<FracBi> m(dim_, dim_);
    for (const auto& [c, w] : ws.terms) m = m + eval(w).scaled(c);
    return m;
}

Mat<FracBi> Rep::eval_tensor(const TensorWord& tw, const Rep& other) const {
    Mat<FracBi> m(dim_ * other.dim_, dim_ * other.dim_);
    for (const auto& t : tw.terms)
        m = m + eval(t.left).kron(other.eval(t.right)).scaled(t.scalar);
    return m;
}

const Rep& v_alpha() {
    static const Rep rep = [] {
        const FracBi al = qbracket_alpha(0);   // [alpha]_q
        const FracBi al1 = qbracket_alpha(1);  // [alpha+1]_q

        // Cartan diagonals as (u-exp, s-exp):
        // q^E11 = diag(1, 1, q^-1, q^-1), q^E22 = diag(1, q^-1, 1, q^-1),
        // q^E33 = diag(q^a, q^(a+1), q^(a+1), q^(a+2)).
        std::array<std::vector<std::pair<int, int>>, 3> cart;
        cart[0] = {{0, 0}, {0, 0}, {0, -2}, {0, -2}};
        cart[1] = {{0, 0}, {0, -2}, {0, 0}, {0, -2}};
        cart[2] = {{2, 0}, {2, 2}, {2, 2}, {2, 4}};

        std::array<Mat<FracBi>, kLadderCount> lad;
        for (auto& m : lad) m = Mat<FracBi>(4, 4);
        lad[static_cast<int>(Ladder::E21)](1, 2) = -FracBi::one();
        lad[static_cast<int>(Ladder::E12)](2, 1) = -FracBi::one();
        lad[static_cast<int>(Ladder::E32)](0, 1) = FracBi::one();
        lad[static_cast<int>(Ladder::E32)](2, 3) = FracBi::one();
        lad[static_cast<int>(Ladder::E23)](1, 0) = al;
        lad[static_cast<int>(Ladder::E23)](3, 2) = al1;
        lad[static_cast<int>(Ladder::E31)](0, 2) = fb_q(-1);
        lad[static_cast<int>(Ladder::E31)](1, 3) = -FracBi::one();
        lad[static_cast<int>(Ladder::E13)](2, 0) = fb_q(1) * al;
        lad[static_cast<int>(Ladder::E13)](3, 1) = -al1;

        return Rep::make("V_alpha", 4, {0, 1, 1, 0}, std::move(cart), std::move(lad),
                         {1, -1, -1, 1});
    }();
    return rep;
}

Rep counit_rep() {
    std::array<std::vector<std::pair<int, int>>, 3> cart;
    for (auto& c : cart) c = {{0, 0}};
    std::array<Mat<FracBi>, kLadderCount> lad;
    for (auto& m : lad) m = Mat<FracBi>(1, 1);
    return Rep::make("trivial", 1, {0}, std::move(cart), std::move(lad), {1});
}

Rep dual(const Rep& r) {
    std::array<std::vector<std::pair<int, int>>, 3> cart;
    for (int i = 0; i < 3; ++i) {
        cart[i].reserve(r.dim());
        for (const auto& [ue, se] : r.cartan_diag(i + 1)) cart[i].push_back({-ue, -se});
    }
    std::array<Mat<FracBi>, kLadderCount> lad;
    for (int gi = 0; gi < kLadderCount; ++gi) {
        Ladder g = static_cast<Ladder>(gi);
        lad[gi] = r.eval(antipode_sigma(Atom::make_ladder(g))).transposed();
    }
    return Rep::make(r.label() + "^*", r.dim(), r.grading(), std::move(cart), std::move(lad),
                     r.sigma_diag());
}

Rep tensor(const Rep& r1, const Rep& r2) {
    size_t d = r1.dim() * r2.dim();
    std::vector<int> grading(d), sigma(d);
    std::array<std::vector<std::pair<int, int>>, 3> cart;
    for (int i = 0; i < 3; ++i) cart[i].resize(d);
    for (size_t i1 = 0; i1 < r1.dim(); ++i1) {
        for (size_t i2 = 0; i2 < r2.dim(); ++i2) {
            size_t j = i1 * r2.dim() + i2;
            grading[j] = (r1.grading()[i1] + r2.grading()[i2]) % 2;
            sigma[j] = r1.sigma_diag()[i1] * r2.sigma_diag()[i2];
            for (int i = 0; i < 3; ++i) {
                cart[i][j] = {r1.cartan_diag(i + 1)[i1].first + r2.cartan_diag(i + 1)[i2].first,
                              r1.cartan_diag(i + 1)[i1].second + r2.cartan_diag(i + 1)[i2].second};
            }
        }
    }
    std::array<Mat<FracBi>, kLadderCount> lad;
    for (Ladder g : {Ladder::E21, Ladder::E12, Ladder::E32, Ladder::E23}) {
        lad[static_cast<int>(g)] =
            r1.eval_tensor(coproduct_sigma(Atom::make_ladder(g)), r2);
    }
    // Derived elements from the defining products in the tensor module.
    const auto& l21 = lad[static_cast<int>(Ladder::E21)];
    const auto& l12 = lad[static_cast<int>(Ladder::E12)];
    const auto& l32 = lad[static_cast<int>(Ladder::E32)];
    const auto& l23 = lad[static_cast<int>(Ladder::E23)];
    lad[static_cast<int>(Ladder::E31)] = l21 * l32 - (l32 * l21).scaled(fb_q(-1));
    lad[static_cast<int>(Ladder::E13)] = l23 * l12 - (l12 * l23).scaled(fb_q(1));
    return Rep::make(r1.label() + "(x)" + r2.label(), d, std::move(grading), std::move(cart),
                     std::move(lad), std::move(sigma));
}

const Rep& pi_alpha_tensor() {
    static const Rep rep = tensor(v_alpha(), dual(v_alpha()));
    return rep;
}

const Rep& pi_alpha_square() {
    static const Rep rep = tensor(v_alpha(), v_alpha());
    return rep;
}

bool RelationReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

RelationReport check_relations(const Rep& r) {
    RelationReport rep;
    for (const auto& rel : relation_set()) {
        Mat<FracBi> m = r.eval(rel.lhs_minus_rhs);
        RelationReport::Entry e;
        e.label = rel.label;
        e.pass = true;
        for (size_t i = 0; i < m.rows() && e.pass; ++i) {
            for (size_t j = 0; j < m.cols(); ++j) {
                if (!m(i, j).is_zero()) {
                    e.pass = false;
                    e.row = i;
                    e.col = j;
                    std::ostringstream os;
                    os << "nonzero residual at (" << i << "," << j << ")";
                    e.residual = os.str();
                    break;
                }
            }
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

Mat<FracBi> pivot_g_matrix() {
    // g = q^-E11 q^E22 q^E33 sigma
    const Rep& v = v_alpha();
    Word w = {Atom::make_cartan({-2, 2, 2}), Atom::make_sigma()};
    return v.eval(w);
}

Mat<FracBi> pivot_k_matrix() {
    // K = q^-2E33 q^-2E22 sigma
    const Rep& v = v_alpha();
    Word w = {Atom::make_cartan({0, -4, -4}), Atom::make_sigma()};
    return v.eval(w);
}

const CapsCups& caps_cups() {
    static const CapsCups cc = [] {
        CapsCups c;
        Mat<FracBi> k = pivot_k_matrix();
        for (size_t i = 0; i < 4; ++i) {
            c.omega_minus.push_back(k(i, i));
            c.omega_plus.push_back(FracBi::one());
            c.mho_minus.push_back(k(i, i).inverse());
            c.mho_plus.push_back(FracBi::one());
        }
        return c;
    }();
    return cc;
}

}  // namespace lgould
