#include "lgould/fixtures.hpp"

#include <stdexcept>

#include "lgould/poly_io.hpp"
#include "lgould/reps.hpp"

namespace lgould::fixtures {

namespace {

// [alpha]_q and [alpha+1]_q in parseable form; u = q^(alpha/2).
const char* kB0 = "((qa - qa^-1)/(q - q^-1))";
const char* kB1 = "((qa*q - qa^-1*q^-1)/(q - q^-1))";

std::string b0() { return kB0; }
std::string b1() { return kB1; }

using E = std::tuple<int, int, std::string>;

std::vector<MatrixFixture> make_matrix_fixtures() {
    std::vector<MatrixFixture> fs;

    // ---- pi_alpha on V_alpha (Definition of V_alpha) ----
    fs.push_back({"pi.qE11", 4, false,
                  {E{1, 1, "1"}, E{2, 2, "1"}, E{3, 3, "q^-1"}, E{4, 4, "q^-1"}}});
    fs.push_back({"pi.qE22", 4, false,
                  {E{1, 1, "1"}, E{2, 2, "q^-1"}, E{3, 3, "1"}, E{4, 4, "q^-1"}}});
    fs.push_back({"pi.qE33", 4, false,
                  {E{1, 1, "qa"}, E{2, 2, "qa*q"}, E{3, 3, "qa*q"}, E{4, 4, "qa*q^2"}}});
    fs.push_back({"pi.E21", 4, false, {E{2, 3, "-1"}}});
    fs.push_back({"pi.E12", 4, false, {E{3, 2, "-1"}}});
    fs.push_back({"pi.E32", 4, false, {E{1, 2, "1"}, E{3, 4, "1"}}});
    fs.push_back({"pi.E23", 4, false, {E{2, 1, b0()}, E{4, 3, b1()}}});
    fs.push_back({"pi.E31", 4, false, {E{1, 3, "q^-1"}, E{2, 4, "-1"}}});
    fs.push_back({"pi.E13", 4, false, {E{3, 1, "q*" + b0()}, E{4, 2, "-" + b1()}}});
    fs.push_back({"pi.sigma", 4, false,
                  {E{1, 1, "1"}, E{2, 2, "-1"}, E{3, 3, "-1"}, E{4, 4, "1"}}});

    // ---- pi_alpha^* on the dual ----
    fs.push_back({"pistar.qE11", 4, false,
                  {E{1, 1, "1"}, E{2, 2, "1"}, E{3, 3, "q"}, E{4, 4, "q"}}});
    fs.push_back({"pistar.qE22", 4, false,
                  {E{1, 1, "1"}, E{2, 2, "q"}, E{3, 3, "1"}, E{4, 4, "q"}}});
    fs.push_back({"pistar.qE33", 4, false,
                  {E{1, 1, "qa^-1"}, E{2, 2, "qa^-1*q^-1"}, E{3, 3, "qa^-1*q^-1"},
                   E{4, 4, "qa^-1*q^-2"}}});
    fs.push_back({"pistar.E21", 4, false, {E{3, 2, "q^-1"}}});
    fs.push_back({"pistar.E12", 4, false, {E{2, 3, "q"}}});
    fs.push_back({"pistar.E32", 4, false, {E{2, 1, "-1"}, E{4, 3, "1"}}});
    fs.push_back({"pistar.E23", 4, false, {E{1, 2, b0()}, E{3, 4, "-" + b1()}}});
    fs.push_back({"pistar.E31", 4, false, {E{3, 1, "-q^-1"}, E{4, 2, "-q^-2"}}});
    fs.push_back({"pistar.E13", 4, false,
                  {E{1, 3, "q*" + b0()}, E{2, 4, "q^2*" + b1()}}});
    fs.push_back({"pistar.sigma", 4, false,
                  {E{1, 1, "1"}, E{2, 2, "-1"}, E{3, 3, "-1"}, E{4, 4, "1"}}});

    // ---- Pi_alpha on V_alpha (x) V_alpha^* ----
    {
        const char* d11 = "1,1,q,q,1,1,q,q,q^-1,q^-1,1,1,q^-1,q^-1,1,1";
        const char* d22 = "1,q,1,q,q^-1,1,q^-1,1,1,q,1,q,q^-1,1,q^-1,1";
        const char* d33 = "1,q^-1,q^-1,q^-2,q,1,1,q^-1,q,1,1,q^-1,q^2,q,q,1";
        const char* dsg = "1,-1,-1,1,-1,1,1,-1,-1,1,1,-1,1,-1,-1,1";
        auto diag_fixture = [&](std::string nm, const char* csv) {
            MatrixFixture f{std::move(nm), 16, false, {}};
            std::string s(csv);
            int idx = 1;
            size_t pos = 0;
            while (pos != std::string::npos) {
                size_t c = s.find(',', pos);
                std::string tok = s.substr(pos, c == std::string::npos ? c : c - pos);
                f.entries.push_back(E{idx, idx, tok});
                ++idx;
                pos = c == std::string::npos ? c : c + 1;
            }
            return f;
        };
        fs.push_back(diag_fixture("Pi.qE11", d11));
        fs.push_back(diag_fixture("Pi.qE22", d22));
        fs.push_back(diag_fixture("Pi.qE33", d33));
        fs.push_back(diag_fixture("Pi.sigma", dsg));
    }
    fs.push_back({"Pi.E21", 16, false,
                  {E{3, 2, "q^-1"}, E{5, 9, "-1"}, E{6, 10, "-q^(1/2)"},
                   E{7, 6, "q^(-1/2)"}, E{7, 11, "-q^(-1/2)"}, E{8, 12, "-1"},
                   E{11, 10, "q^(-3/2)"}, E{15, 14, "q^-1"}}});
    fs.push_back({"Pi.E12", 16, false,
                  {E{2, 3, "q"}, E{6, 7, "q^(3/2)"}, E{9, 5, "-1"},
                   E{10, 6, "-q^(1/2)"}, E{10, 11, "q^(1/2)"}, E{11, 7, "-q^(-1/2)"},
                   E{12, 8, "-1"}, E{14, 15, "q"}}});
    fs.push_back({"Pi.E32", 16, false,
                  {E{1, 5, "u"}, E{2, 1, "-u"}, E{2, 6, "u"}, E{3, 7, "u*q^(1/2)"},
                   E{4, 3, "u"}, E{4, 8, "u*q^(1/2)"}, E{6, 5, "u"}, E{8, 7, "-u"},
                   E{9, 13, "u"}, E{10, 9, "u*q^(1/2)"}, E{10, 14, "u"},
                   E{11, 15, "u*q^(1/2)"}, E{12, 11, "-u*q^(1/2)"}, E{12, 16, "u*q^(1/2)"},
                   E{14, 13, "-u*q^(1/2)"}, E{16, 15, "u*q^(1/2)"}}});
    fs.push_back({"Pi.E23", 16, false,
                  {E{1, 2, "u*" + b0()}, E{3, 4, "-u*" + b1()}, E{5, 1, "u*" + b0()},
                   E{5, 6, "-u*" + b0()}, E{6, 2, "u*" + b0()},
                   E{7, 3, "u*q^(1/2)*" + b0()}, E{7, 8, "u*" + b1()},
                   E{8, 4, "u*q^(1/2)*" + b0()}, E{9, 10, "-u*q^(1/2)*" + b0()},
                   E{11, 12, "u*q^(1/2)*" + b1()}, E{13, 9, "u*" + b1()},
                   E{13, 14, "u*q^(1/2)*" + b0()}, E{14, 10, "u*" + b1()},
                   E{15, 11, "u*q^(1/2)*" + b1()}, E{15, 16, "-u*q^(1/2)*" + b1()},
                   E{16, 12, "u*q^(1/2)*" + b1()}}});
    fs.push_back({"Pi.E31", 16, false,
                  {E{1, 9, "q^-1*u"}, E{2, 10, "q^-1*u*q^(1/2)"}, E{3, 1, "-q^-1*u"},
                   E{3, 11, "q^-1*u"}, E{4, 2, "-q^-2*u"}, E{4, 12, "q^-1*u*q^(1/2)"},
                   E{5, 13, "-u"}, E{6, 9, "-u*(q - q^-1)"}, E{6, 14, "-u*q^(1/2)"},
                   E{7, 5, "q^-1*u*q^(1/2)"}, E{7, 15, "-u"},
                   E{8, 6, "q^-2*u*q^(1/2)"}, E{8, 11, "q^(-1/2)*u*(q - q^-1)"},
                   E{8, 16, "-u*q^(1/2)"}, E{11, 9, "q^-1*u"}, E{12, 10, "q^-2*u"},
                   E{15, 13, "-q^-1*u*q^(1/2)"}, E{16, 14, "-q^-2*u*q^(1/2)"}}});
    fs.push_back({"Pi.E13", 16, false,
                  {E{1, 3, "q*u*" + b0()}, E{2, 4, "q^2*u*" + b1()},
                   E{5, 7, "-q*u*q^(1/2)*" + b0()},
                   E{6, 3, "(q^-1 - q)*q^(3/2)*u*q^(1/2)*" + b0()},
                   E{6, 8, "-q^2*u*q^(1/2)*" + b1()}, E{9, 1, "q*u*" + b0()},
                   E{9, 11, "-q*u*" + b0()}, E{10, 2, "q*u*q^(1/2)*" + b0()},
                   E{10, 12, "-q^2*u*" + b1()}, E{11, 3, "q*u*" + b0()},
                   E{12, 4, "q*u*q^(1/2)*" + b0()}, E{13, 5, "-u*" + b1()},
                   E{13, 15, "q*u*q^(1/2)*" + b0()}, E{14, 6, "-u*q^(1/2)*" + b1()},
                   E{14, 11, "(q^-1 - q)*q*u*q^(1/2)*" + b1()},
                   E{14, 16, "q^2*u*q^(1/2)*" + b1()}, E{15, 7, "-u*" + b1()},
                   E{16, 8, "-u*q^(1/2)*" + b1()}}});

    // ---- pivots, caps and cups ----
    fs.push_back({"pivot.g", 4, false,
                  {E{1, 1, "qa"}, E{2, 2, "-qa"}, E{3, 3, "-qa*q^2"}, E{4, 4, "qa*q^2"}}});
    fs.push_back({"pivot.K", 4, false,
                  {E{1, 1, "qa^-2"}, E{2, 2, "-qa^-2"}, E{3, 3, "-qa^-2*q^-2"},
                   E{4, 4, "qa^-2*q^-2"}}});
    fs.push_back({"cap.omega_minus", 4, false,
                  {E{1, 1, "qa^-2"}, E{2, 2, "-qa^-2"}, E{3, 3, "-qa^-2*q^-2"},
                   E{4, 4, "qa^-2*q^-2"}}});
    fs.push_back({"cup.mho_minus", 4, false,
                  {E{1, 1, "qa^2"}, E{2, 2, "-qa^2"}, E{3, 3, "-qa^2*q^2"},
                   E{4, 4, "qa^2*q^2"}}});

    // ---- change of basis matrix A (display ordering) ----
    {
        MatrixFixture f{"A", 16, true, {}};
        auto& e = f.entries;
        std::string B0B1 = b0() + "*" + b1();
        // row (1,1)
        e.push_back(E{1, 1, "1"});
        e.push_back(E{1, 2, "qa*" + b0()});
        e.push_back(E{1, 3, "qa*" + b0()});
        e.push_back(E{1, 4, "qa^2*" + B0B1});
        // row (2,2)
        e.push_back(E{2, 2, "qa*" + b0()});
        e.push_back(E{2, 3, "-qa*" + b0() + "*(q^2 - 1)"});
        e.push_back(E{2, 4, "qa^2*" + B0B1});
        // row (3,3)
        e.push_back(E{3, 3, "qa*" + b0()});
        e.push_back(E{3, 4, "qa^2*" + B0B1});
        // row (4,4)
        e.push_back(E{4, 4, "qa^2*" + B0B1});
        // row (1,2)
        e.push_back(E{5, 5, "-u"});
        e.push_back(E{5, 7, "-q^2*u^3*" + b0()});
        // row (2,1)
        e.push_back(E{6, 6, "u*" + b0()});
        e.push_back(E{6, 8, "u^3*" + B0B1});
        // row (3,4)
        e.push_back(E{7, 7, "-q^(1/2)*u^3*" + b0()});
        // row (4,3)
        e.push_back(E{8, 8, "q^(-1/2)*u^3*" + B0B1});
        // row (1,3)
        e.push_back(E{9, 9, "-q^-1*u"});
        e.push_back(E{9, 11, "u^3*" + b0()});
        // row (3,1)
        e.push_back(E{10, 10, "q*u*" + b0()});
        e.push_back(E{10, 12, "-u^3*" + B0B1});
        // row (2,4)
        e.push_back(E{11, 11, "-q^(-1/2)*u^3*" + b0()});
        // row (4,2)
        e.push_back(E{12, 12, "q^(1/2)*u^3*" + B0B1});
        // row (1,4)
        e.push_back(E{13, 13, "-q^-1*qa"});
        // row (4,1)
        e.push_back(E{14, 14, "-qa*" + B0B1});
        // row (2,3)
        e.push_back(E{15, 15, "q^(-1/2)*qa*" + b0()});
        // row (3,2)
        e.push_back(E{16, 16, "q^(3/2)*qa*" + b0()});
        fs.push_back(std::move(f));
    }

    // ---- Atilde (display ordering) ----
    {
        MatrixFixture f{"Atilde", 16, true, {}};
        auto& e = f.entries;
        std::string iB0 = "(1/" + b0() + ")";
        std::string iB1 = "(1/" + b1() + ")";
        std::string iB0B1 = "(1/(" + b0() + "*" + b1() + "))";
        // row (1,1)
        e.push_back(E{1, 1, "qa^-1"});
        // row (2,2)
        e.push_back(E{2, 1, "qa^-1"});
        e.push_back(E{2, 2, "-qa^-2*" + iB0});
        // row (3,3)
        e.push_back(E{3, 1, "qa^-1"});
        e.push_back(E{3, 2, "(q^-2 - 1)*qa^-2*" + iB0});
        e.push_back(E{3, 3, "-q^-2*qa^-2*" + iB0});
        // row (4,4)
        e.push_back(E{4, 1, "qa^-1"});
        e.push_back(E{4, 2, "-qa^-2*" + iB0});
        e.push_back(E{4, 3, "-q^-2*qa^-2*" + iB0});
        e.push_back(E{4, 4, "q^-2*qa^-3*" + iB0B1});
        // row (1,2)
        e.push_back(E{5, 6, "u^-3*" + iB0});
        // row (2,1)
        e.push_back(E{6, 5, "u^-3"});
        // row (3,4)
        e.push_back(E{7, 6, "q^(-3/2)*u^-3*" + iB0});
        e.push_back(E{7, 8, "-q^(-3/2)*u^-5*" + iB0B1});
        // row (4,3)
        e.push_back(E{8, 5, "q^(-1/2)*u^-3"});
        e.push_back(E{8, 7, "-q^(-5/2)*u^-5*" + iB0});
        // row (1,3)
        e.push_back(E{9, 10, "q^-1*u^-3*" + iB0});
        // row (3,1)
        e.push_back(E{10, 9, "q^-1*u^-3"});
        // row (2,4)
        e.push_back(E{11, 10, "-q^(-3/2)*u^-3*" + iB0});
        e.push_back(E{11, 12, "-q^(-1/2)*u^-5*" + iB0B1});
        // row (4,2)
        e.push_back(E{12, 9, "-q^(-1/2)*u^-3"});
        e.push_back(E{12, 11, "-q^(-3/2)*u^-5*" + iB0});
        // row (1,4)
        e.push_back(E{13, 14, "-qa^-2*" + iB0B1});
        // row (4,1)
        e.push_back(E{14, 13, "-q^-1*qa^-2"});
        // row (2,3)
        e.push_back(E{15, 16, "-q^(-3/2)*qa^-2*" + iB1});
        // row (3,2)
        e.push_back(E{16, 15, "-q^(3/2)*qa^-2*" + iB1});
        fs.push_back(std::move(f));
    }

    return fs;
}

std::vector<DegFixture> make_deg_fixtures() {
    std::vector<DegFixture> fs;
    using D = std::tuple<int, int, std::string>;
    {
        DegFixture f{"A_z", {}};
        auto& e = f.entries;
        e = {D{1, 1, "0"},  D{1, 2, "2"},    D{1, 3, "2"},    D{1, 4, "4"},
             D{2, 2, "2"},  D{2, 3, "2"},    D{2, 4, "4"},    D{3, 3, "2"},
             D{3, 4, "4"},  D{4, 4, "4"},    D{5, 5, "1/2"},  D{5, 7, "5/2"},
             D{6, 6, "3/2"}, D{6, 8, "7/2"}, D{7, 7, "5/2"},  D{8, 8, "7/2"},
             D{9, 9, "1/2"}, D{9, 11, "5/2"}, D{10, 10, "3/2"}, D{10, 12, "7/2"},
             D{11, 11, "5/2"}, D{12, 12, "7/2"}, D{13, 13, "1"}, D{14, 14, "3"},
             D{15, 15, "2"}, D{16, 16, "2"}};
        fs.push_back(std::move(f));
    }
    {
        DegFixture f{"A_t", {}};
        auto& e = f.entries;
        e = {D{1, 1, "0"},  D{1, 2, "0"},    D{1, 3, "0"},    D{1, 4, "0"},
             D{2, 2, "0"},  D{2, 3, "0"},    D{2, 4, "0"},    D{3, 3, "0"},
             D{3, 4, "0"},  D{4, 4, "0"},    D{5, 5, "-1/2"}, D{5, 7, "-1/2"},
             D{6, 6, "1/2"}, D{6, 8, "1/2"}, D{7, 7, "-1/2"}, D{8, 8, "1/2"},
             D{9, 9, "-1/2"}, D{9, 11, "-1/2"}, D{10, 10, "1/2"}, D{10, 12, "1/2"},
             D{11, 11, "-1/2"}, D{12, 12, "1/2"}, D{13, 13, "-1"}, D{14, 14, "1"},
             D{15, 15, "0"}, D{16, 16, "0"}};
        fs.push_back(std::move(f));
    }
    {
        DegFixture f{"Atilde_z", {}};
        auto& e = f.entries;
        e = {D{1, 1, "0"},   D{2, 1, "0"},    D{2, 2, "-2"},   D{3, 1, "0"},
             D{3, 2, "-2"},  D{3, 3, "-2"},   D{4, 1, "0"},    D{4, 2, "-2"},
             D{4, 3, "-2"},  D{4, 4, "-4"},   D{5, 6, "-3/2"}, D{6, 5, "-1/2"},
             D{7, 6, "-3/2"}, D{7, 8, "-7/2"}, D{8, 5, "-1/2"}, D{8, 7, "-5/2"},
             D{9, 10, "-3/2"}, D{10, 9, "-1/2"}, D{11, 10, "-3/2"}, D{11, 12, "-7/2"},
             D{12, 9, "-1/2"}, D{12, 11, "-5/2"}, D{13, 14, "-3"}, D{14, 13, "-1"},
             D{15, 16, "-2"}, D{16, 15, "-2"}};
        fs.push_back(std::move(f));
    }
    {
        DegFixture f{"Atilde_t", {}};
        auto& e = f.entries;
        e = {D{1, 1, "0"},   D{2, 1, "0"},    D{2, 2, "0"},    D{3, 1, "0"},
             D{3, 2, "0"},   D{3, 3, "0"},    D{4, 1, "0"},    D{4, 2, "0"},
             D{4, 3, "0"},   D{4, 4, "0"},    D{5, 6, "-1/2"}, D{6, 5, "1/2"},
             D{7, 6, "-1/2"}, D{7, 8, "-1/2"}, D{8, 5, "1/2"}, D{8, 7, "1/2"},
             D{9, 10, "-1/2"}, D{10, 9, "1/2"}, D{11, 10, "-1/2"}, D{11, 12, "-1/2"},
             D{12, 9, "1/2"}, D{12, 11, "1/2"}, D{13, 14, "-1"}, D{14, 13, "1"},
             D{15, 16, "0"}, D{16, 15, "0"}};
        fs.push_back(std::move(f));
    }
    return fs;
}

}  // namespace

const std::vector<MatrixFixture>& matrix_fixtures() {
    static const std::vector<MatrixFixture> fs = make_matrix_fixtures();
    return fs;
}

const std::vector<DegFixture>& deg_fixtures() {
    static const std::vector<DegFixture> fs = make_deg_fixtures();
    return fs;
}

Mat<FracBi> build(const MatrixFixture& f) {
    Mat<FracBi> m(f.dim, f.dim);
    for (const auto& [r, c, expr] : f.entries) {
        FracBi val = parse_poly(expr);
        if (f.display_order) {
            auto [b, cc] = basis_row_order()[r - 1];
            int col = basis_col_order()[c - 1] - 1;
            m(pair_index(b, cc), col) = val;
        } else {
            m(r - 1, c - 1) = val;
        }
    }
    return m;
}

DegMatrix build(const DegFixture& f) {
    DegMatrix d;
    for (const auto& [r, c, expr] : f.entries) {
        auto [b, cc] = basis_row_order()[r - 1];
        int col = basis_col_order()[c - 1] - 1;
        size_t pos = std::string(expr).find('/');
        mpq_class v;
        if (pos == std::string::npos) v = mpq_class(mpz_class(expr));
        else v = mpq_class(mpz_class(expr.substr(0, pos)), mpz_class(expr.substr(pos + 1)));
        v.canonicalize();
        d.at(pair_index(b, cc), col) = v;
    }
    return d;
}

Mat<FracBi> computed(const std::string& name) {
    auto dot = name.find('.');
    std::string group = name.substr(0, dot);
    std::string item = dot == std::string::npos ? "" : name.substr(dot + 1);

    auto gen_matrix = [&](const Rep& r) -> Mat<FracBi> {
        if (item == "qE11") return r.cartan_matrix(cartan_generator(1));
        if (item == "qE22") return r.cartan_matrix(cartan_generator(2));
        if (item == "qE33") return r.cartan_matrix(cartan_generator(3));
        if (item == "sigma") return r.sigma_matrix();
        if (item == "E21") return r.ladder(Ladder::E21);
        if (item == "E12") return r.ladder(Ladder::E12);
        if (item == "E32") return r.ladder(Ladder::E32);
        if (item == "E23") return r.ladder(Ladder::E23);
        if (item == "E31") return r.ladder(Ladder::E31);
        if (item == "E13") return r.ladder(Ladder::E13);
        throw std::invalid_argument("unknown generator item: " + item);
    };

    if (group == "pi") return gen_matrix(v_alpha());
    if (group == "pistar") return gen_matrix(dual(v_alpha()));
    if (group == "Pi") return gen_matrix(pi_alpha_tensor());
    if (group == "pivot") {
        if (item == "g") return pivot_g_matrix();
        if (item == "K") return pivot_k_matrix();
    }
    if (group == "cap" || group == "cup") {
        const CapsCups& cc = caps_cups();
        const std::vector<FracBi>* w = nullptr;
        if (name == "cap.omega_minus") w = &cc.omega_minus;
        if (name == "cup.mho_minus") w = &cc.mho_minus;
        if (w) {
            Mat<FracBi> m(4, 4);
            for (int i = 0; i < 4; ++i) m(i, i) = (*w)[i];
            return m;
        }
    }
    if (name == "A") return matrix_A().natural;
    if (name == "Atilde") return matrix_Atilde().natural;
    throw std::invalid_argument("unknown fixture name: " + name);
}

DegMatrix computed_deg(const std::string& name) {
    const Reductions& r = reductions();
    if (name == "A_z") return r.a_z;
    if (name == "A_t") return r.a_t;
    if (name == "Atilde_z") return r.atilde_z;
    if (name == "Atilde_t") return r.atilde_t;
    throw std::invalid_argument("unknown reduction fixture: " + name);
}

}  // namespace lgould::fixtures
