#include "hermicode/io.hpp"

#include <ostream>

#include <json.hpp>

namespace hermicode {

namespace {

nlohmann::json tower_json(const FieldTower& tw) {
    return nlohmann::json{{"characteristic", tw.p()},
                          {"r", tw.r()},
                          {"m", tw.m()},
                          {"q", tw.q()},
                          {"q2", tw.q2()},
                          {"modulus", tw.modulus()}};
}

}  // namespace

void write_points_csv(std::ostream& os, const HermitianCurve& curve) {
    os << "# " << curve.tower().describe() << "\n";
    os << "index,x,y\n";
    for (const AffinePoint& p : curve.points())
        os << p.index << "," << p.x.value << "," << p.y.value << "\n";
}

void write_matrix_text(std::ostream& os, const MatrixGF& m) {
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.raw(i, j);
        os << "\n";
    }
}

std::string matrix_sidecar_json(const MatrixGF& m) {
    nlohmann::json j{{"field", m.field()},
                     {"rows", m.rows()},
                     {"cols", m.cols()},
                     {"tower", tower_json(m.tower())}};
    return j.dump(2) + "\n";
}

std::string code_params_json(const LinearCode& code) {
    nlohmann::json j{{"n", code.n}, {"k", code.dimension}};
    if (code.provenance) {
        const Provenance& p = *code.provenance;
        j["provenance"] = nlohmann::json{{"q", p.q}, {"s", p.s}, {"kind", p.kind}};
        if (p.kind == "hermitian") {
            const uint64_t g = uint64_t(p.q) * (p.q - 1) / 2;
            const int64_t twog2 = int64_t(2 * g) - 2;
            if (p.s > twog2 && p.s < int64_t(code.n))
                j["d"] = designed_min_distance(p.q, uint64_t(p.s));
        }
    }
    return j.dump(2) + "\n";
}

void write_sweep_csv(std::ostream& os, const SweepReport& report) {
    os << "q,r,s,n,k,k0,k1_dual,boundLow,theorem_expected,pass\n";
    for (const SweepRow& row : report.rows) {
        os << row.q << "," << row.r << "," << row.s << "," << row.n << "," << row.k << ","
           << row.k0 << "," << row.k1_dual << "," << row.bound_low << ",";
        if (row.theorem_expected >= 0) os << row.theorem_expected;
        os << "," << (row.pass ? "1" : "0") << "\n";
    }
}

void write_dim_csv(std::ostream& os, const SweepReport& report) {
    os << "s,dim_subcode,dim_parent\n";
    for (const SweepRow& row : report.rows)
        os << row.s << "," << row.k0 << "," << row.k << "\n";
}

std::string dim_rows_json(const SweepReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const SweepRow& row : report.rows)
        rows.push_back(nlohmann::json{{"s", row.s},
                                      {"dim_subcode", row.k0},
                                      {"dim_parent", row.k},
                                      {"pass", row.pass}});
    return rows.dump(2) + "\n";
}

}  // namespace hermicode
