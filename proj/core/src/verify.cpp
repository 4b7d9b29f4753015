#include "lgould/verify.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "lgould/basis.hpp"
#include "lgould/fixtures.hpp"
#include "lgould/poly_io.hpp"
#include "lgould/reps.hpp"
#include "lgould/rmatrix.hpp"

namespace lgould {

namespace {

CheckResult compare_matrices(const std::string& name, const Mat<FracBi>& got,
                             const Mat<FracBi>& want) {
    CheckResult r{name, true, ""};
    if (got.rows() != want.rows() || got.cols() != want.cols()) {
        r.pass = false;
        r.detail = "dimension mismatch";
        return r;
    }
    for (size_t i = 0; i < got.rows(); ++i)
        for (size_t j = 0; j < got.cols(); ++j) {
            if (got(i, j) != want(i, j)) {
                r.pass = false;
                std::ostringstream os;
                os << "first mismatch at (" << i + 1 << "," << j + 1 << "): computed "
                   << render(got(i, j), PolyStyle::SU) << ", printed "
                   << render(want(i, j), PolyStyle::SU);
                r.detail = os.str();
                return r;
            }
        }
    return r;
}

}  // namespace

VerifyReport verify_matrices() {
    VerifyReport rep;
    for (const auto& f : fixtures::matrix_fixtures()) {
        try {
            rep.checks.push_back(
                compare_matrices(f.name, fixtures::computed(f.name), fixtures::build(f)));
        } catch (const std::exception& e) {
            rep.checks.push_back({f.name, false, e.what()});
        }
    }
    for (const auto& f : fixtures::deg_fixtures()) {
        CheckResult r{f.name, true, ""};
        try {
            DegMatrix got = fixtures::computed_deg(f.name);
            DegMatrix want = fixtures::build(f);
            for (size_t i = 0; i < 16 && r.pass; ++i)
                for (size_t j = 0; j < 16; ++j) {
                    const auto& g = got.at(i, j);
                    const auto& w = want.at(i, j);
                    if (g.has_value() != w.has_value() || (g && *g != *w)) {
                        r.pass = false;
                        std::ostringstream os;
                        os << "first mismatch at natural (" << i + 1 << "," << j + 1 << ")";
                        r.detail = os.str();
                        break;
                    }
                }
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        rep.checks.push_back(std::move(r));
    }
    return rep;
}

VerifyReport verify_relations() {
    VerifyReport rep;
    auto run = [&](const std::string& label, const Rep& r) {
        RelationReport rr = check_relations(r);
        CheckResult c{label, rr.all_pass(), ""};
        if (!c.pass) {
            for (const auto& e : rr.entries)
                if (!e.pass) {
                    c.detail = e.label + ": " + e.residual;
                    break;
                }
        }
        rep.checks.push_back(std::move(c));
    };
    run("relations.pi_alpha", v_alpha());
    run("relations.pi_alpha_dual", dual(v_alpha()));
    run("relations.Pi_alpha", pi_alpha_tensor());
    run("relations.pi_square", pi_alpha_square());
    try {
        run("relations.theta", theta_rep());
    } catch (const std::exception& e) {
        rep.checks.push_back({"relations.theta", false, e.what()});
    }
    return rep;
}

VerifyReport verify_degrees() {
    VerifyReport rep;
    for (const auto& f : fixtures::deg_fixtures()) {
        CheckResult r{std::string("deg.") + f.name, true, ""};
        try {
            DegMatrix got = fixtures::computed_deg(f.name);
            DegMatrix want = fixtures::build(f);
            for (size_t i = 0; i < 16 && r.pass; ++i)
                for (size_t j = 0; j < 16; ++j) {
                    const auto& g = got.at(i, j);
                    const auto& w = want.at(i, j);
                    if (g.has_value() != w.has_value() || (g && *g != *w)) {
                        r.pass = false;
                        r.detail = "mismatch";
                        break;
                    }
                }
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        rep.checks.push_back(std::move(r));
    }
    WeightGraphReport wg = weight_graph_report();
    rep.checks.push_back({"graph.b_c_equal", wg.b_c_graphs_equal, ""});
    rep.checks.push_back({"graph.e2_e3_symmetric", wg.e2_e3_symmetric, ""});
    rep.checks.push_back({"graph.weights_coherent", wg.weights_coherent, ""});
    rep.checks.push_back({"graph.orientation_antisymmetric", wg.orientation_antisymmetric, ""});
    return rep;
}

VerifyReport verify_braiding() {
    VerifyReport rep;
    try {
        const BraidingData& b = braiding();
        rep.checks.push_back({"braiding.commutant_dim", b.commutant_dim == 4, ""});
        rep.checks.push_back({"braiding.yang_baxter", yang_baxter_holds(b.r_matrix), ""});
        rep.checks.push_back({"braiding.inverse", braiding_inverse_ok(b), ""});
        rep.checks.push_back({"braiding.kink_plus", b.kink_plus_is_one, ""});
        rep.checks.push_back({"braiding.kink_minus", b.kink_minus_is_one, ""});
        VerifyReport r2 = verify_rotated_crossings();
        rep.checks.insert(rep.checks.end(), r2.checks.begin(), r2.checks.end());
    } catch (const std::exception& e) {
        rep.checks.push_back({"braiding.construction", false, e.what()});
    }
    return rep;
}

VerifyReport run_suite(const std::string& name) {
    if (name == "matrices") return verify_matrices();
    if (name == "relations") return verify_relations();
    if (name == "braiding") return verify_braiding();
    if (name == "degrees") return verify_degrees();
    throw std::invalid_argument("unknown verify suite: " + name +
                                " (expected matrices, relations, braiding or degrees)");
}

void dump_fixtures_json(const std::string& dir) {
    namespace fsys = std::filesystem;
    fsys::create_directories(dir);
    for (const auto& f : fixtures::matrix_fixtures()) {
        Mat<FracBi> m = fixtures::computed(f.name);
        nlohmann::json j;
        j["name"] = f.name;
        j["dim"] = f.dim;
        nlohmann::json entries = nlohmann::json::array();
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t jj = 0; jj < m.cols(); ++jj) {
                if (m(i, jj).is_zero()) continue;
                entries.push_back({{"row", i + 1},
                                   {"col", jj + 1},
                                   {"value", render(m(i, jj), PolyStyle::SU)}});
            }
        j["entries"] = entries;
        std::ofstream out(fsys::path(dir) / (f.name + ".json"));
        out << j.dump(2) << "\n";
    }
}

}  // namespace lgould
