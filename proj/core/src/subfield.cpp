#include "hermicode/subfield.hpp"

#include <sstream>

#include "hermicode/parallel.hpp"

namespace hermicode {

namespace {

std::string dump_matrix(const MatrixGF& m, size_t max_rows = 16) {
    std::ostringstream os;
    os << m.rows() << "x" << m.cols() << " over GF(" << m.field() << ")\n";
    for (size_t i = 0; i < std::min(m.rows(), max_rows); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.raw(i, j);
        os << "\n";
    }
    if (m.rows() > max_rows) os << "...\n";
    return os.str();
}

// h GF(r) rows per parity row, entry (i*h+t, j) = coords(H[i][j])[t].
MatrixGF expand_parity(const MatrixGF& parity, const FieldTower& tower,
                       const RBasisCoords& basis) {
    const size_t rows = parity.rows(), n = parity.cols();
    const uint32_t h = basis.h();
    MatrixGF expanded(tower, tower.r(), rows * h, n);
    for (size_t i = 0; i < rows; ++i) {
        const uint16_t* src = parity.row_data(i);
        for (size_t j = 0; j < n; ++j) {
            const uint16_t* co = basis.raw_coords(src[j]);
            for (uint32_t t = 0; t < h; ++t) expanded.set_raw(i * h + t, j, co[t]);
        }
    }
    return expanded;
}

// Trace rows tr(b_t * g_i) of the given generators, h rows per generator.
MatrixGF trace_rows(const MatrixGF& gens, const FieldTower& tower, const RBasisCoords& basis) {
    const size_t rows = gens.rows(), n = gens.cols();
    const uint32_t h = basis.h();
    MatrixGF traced(tower, tower.r(), rows * h, n);
    for (size_t i = 0; i < rows; ++i) {
        const uint16_t* src = gens.row_data(i);
        for (uint32_t t = 0; t < h; ++t) {
            const uint32_t b = basis.basis()[t].value;
            uint16_t* dst = traced.row_data(i * h + t);
            for (size_t j = 0; j < n; ++j)
                dst[j] = uint16_t(tower.trace_raw(tower.mul_raw(b, src[j])));
        }
    }
    return traced;
}

void check_parent(const LinearCode& parent, const FieldTower& tower) {
    if (parent.field != tower.q2())
        throw FieldMismatch("parent code must live over the tower's GF(q^2)");
}

}  // namespace

SubfieldAnalysis analyze_subfield(const LinearCode& parent, const FieldTower& tower,
                                  const RBasisCoords* basis, bool check_delsarte) {
    check_parent(parent, tower);
    const RBasisCoords& rb = basis ? *basis : tower.r_basis_coords();
    const size_t n = parent.n, k = parent.dimension;
    const uint32_t h = tower.h();

    SubfieldAnalysis out{
        n, k, 0, 0, int64_t(n) - int64_t(h) * int64_t(n - k), 0, false, false, "",
        LinearCode{tower.r(), n, MatrixGF(tower, tower.r(), 0, n), 0, std::nullopt}};

    const MatrixGF parity = dual_basis(parent.generators);
    const MatrixGF expanded = expand_parity(parity, tower, rb);
    MatrixGF sub_gens = kernel_basis(expanded);
    out.k0 = sub_gens.rows();

    // Each subcode generator, re-embedded into GF(q^2), must satisfy the
    // parent parity checks.
    for (size_t i = 0; i < out.k0; ++i) {
        const uint16_t* row = sub_gens.row_data(i);
        for (size_t pi = 0; pi < parity.rows(); ++pi) {
            const uint16_t* prow = parity.row_data(pi);
            uint32_t acc = 0;
            for (size_t j = 0; j < n; ++j)
                if (prow[j] && row[j]) acc = tower.add_raw(acc, tower.mul_raw(prow[j], row[j]));
            if (acc != 0)
                throw std::logic_error("subfield subcode generator is not a parent codeword");
        }
    }

    if (out.k0 > k || int64_t(out.k0) < out.bound_low)
        throw std::logic_error("subfield subcode dimension violates the sandwich bounds");

    // Veron route: the trace code of the dual. The dual has dimension n-k,
    // so the trace map on it has kernel of GF(r)-dimension h(n-k) - k1.
    const MatrixGF traced_dual = trace_rows(parity, tower, rb);
    out.k1_dual = rank(traced_dual);
    out.veron_k0 =
        size_t(int64_t(n) - int64_t(h) * int64_t(n - k) +
               (int64_t(h) * int64_t(n - k) - int64_t(out.k1_dual)));

    std::optional<Provenance> prov;
    if (parent.provenance)
        prov = Provenance{parent.provenance->q, parent.provenance->s,
                          "subfield " + std::to_string(tower.r())};
    out.subcode = LinearCode{tower.r(), n, std::move(sub_gens), out.k0, std::move(prov)};

    if (check_delsarte) {
        out.delsarte_checked = true;
        const MatrixGF lhs = kernel_basis(out.subcode.generators);  // dual of the subcode
        const MatrixGF lhs_basis = canonical_row_basis(lhs);
        const MatrixGF rhs_basis = canonical_row_basis(traced_dual);
        out.delsarte_holds = lhs_basis == rhs_basis;
        if (!out.delsarte_holds) {
            std::ostringstream os;
            os << "(C|F_r)^dual:\n" << dump_matrix(lhs_basis)
               << "tr(C^dual):\n" << dump_matrix(rhs_basis);
            out.delsarte_diagnostics = os.str();
        }
    }
    return out;
}

SubfieldSubcodeResult subfield_subcode(const LinearCode& parent, const FieldTower& tower,
                                       const RBasisCoords* basis) {
    SubfieldAnalysis a = analyze_subfield(parent, tower, basis, false);
    return SubfieldSubcodeResult{std::move(a.subcode), a.k0, a.bound_low, a.veron_k0,
                                 parent.provenance};
}

TraceCodeResult trace_code(const LinearCode& parent, const FieldTower& tower,
                           const RBasisCoords* basis) {
    check_parent(parent, tower);
    const RBasisCoords& rb = basis ? *basis : tower.r_basis_coords();
    MatrixGF traced = trace_rows(parent.generators, tower, rb);
    std::optional<Provenance> prov;
    if (parent.provenance)
        prov = Provenance{parent.provenance->q, parent.provenance->s,
                          "trace " + std::to_string(tower.r())};
    LinearCode code = make_code(std::move(traced), std::move(prov));
    const size_t k1 = code.dimension;
    if (parent.dimension > 0 &&
        (k1 < parent.dimension || k1 > size_t(tower.h()) * parent.dimension))
        throw std::logic_error("trace code dimension violates k <= k1 <= hk");
    return TraceCodeResult{std::move(code), k1};
}

DelsarteReport delsarte_check(const LinearCode& parent, const FieldTower& tower) {
    SubfieldAnalysis a = analyze_subfield(parent, tower, nullptr, true);
    return DelsarteReport{a.delsarte_holds, a.delsarte_diagnostics};
}

size_t veron_dimension(const LinearCode& parent, const FieldTower& tower) {
    return analyze_subfield(parent, tower, nullptr, false).veron_k0;
}

std::vector<FieldElement> f_d_alpha_codeword(const FieldTower& tower, const HermitianCurve& curve,
                                             const FieldElement& d, const FieldElement& alpha) {
    if (d.field != tower.r()) throw FieldMismatch("d must be a GF(r) element");
    if (alpha.field != tower.q2()) throw FieldMismatch("alpha must be a GF(q^2) element");
    const std::vector<AffinePoint>& pts = curve.points();
    std::vector<FieldElement> out(pts.size(), FieldElement{0, tower.r()});
    for (size_t i = 0; i < pts.size(); ++i)
        out[i].value = tower.add_raw(d.value, tower.trace_raw(tower.mul_raw(alpha.value,
                                                                            pts[i].x.value)));
    return out;
}

std::vector<FieldElement> y_trace_codeword(const FieldTower& tower, const HermitianCurve& curve,
                                           const FieldElement& alpha) {
    if (alpha.field != tower.q2()) throw FieldMismatch("alpha must be a GF(q^2) element");
    const std::vector<AffinePoint>& pts = curve.points();
    std::vector<FieldElement> out(pts.size(), FieldElement{0, tower.r()});
    for (size_t i = 0; i < pts.size(); ++i)
        out[i].value = tower.trace_raw(tower.mul_raw(alpha.value, pts[i].y.value));
    return out;
}

SweepReport dimension_sweep(const FieldTower& tower, const HermitianCurve& curve,
                            const std::vector<int64_t>& s_values, unsigned jobs,
                            bool with_theorem_expectation) {
    const int64_t s_theorem = int64_t(curve.n_affine() / tower.r());
    const int64_t dim_at_theorem = 2 * int64_t(tower.m()) + 1;

    SweepReport report;
    report.rows.resize(s_values.size());
    parallel_for(s_values.size(), jobs, [&](size_t idx) {
        const int64_t s = s_values[idx];
        const LinearCode parent = build_hermitian_code(curve, uint64_t(s));
        const SubfieldAnalysis a = analyze_subfield(parent, tower, nullptr, true);
        SweepRow row;
        row.q = tower.q();
        row.r = tower.r();
        row.s = s;
        row.n = a.n;
        row.k = a.k;
        row.k0 = a.k0;
        row.k1_dual = a.k1_dual;
        row.bound_low = a.bound_low;
        row.delsarte_ok = a.delsarte_holds;
        row.veron_ok = a.veron_k0 == a.k0;
        row.sandwich_ok = int64_t(a.k0) >= a.bound_low && a.k0 <= a.k;
        if (with_theorem_expectation && s <= s_theorem)
            row.theorem_expected = s < s_theorem ? 1 : dim_at_theorem;
        const bool theorem_ok =
            row.theorem_expected < 0 || int64_t(row.k0) == row.theorem_expected;
        row.pass = theorem_ok && row.delsarte_ok && row.veron_ok && row.sandwich_ok;
        report.rows[idx] = row;
    });

    for (const SweepRow& row : report.rows) {
        if (row.pass) continue;
        report.all_pass = false;
        std::ostringstream os;
        os << "q=" << row.q << " r=" << row.r << " s=" << row.s << ": k0=" << row.k0;
        if (row.theorem_expected >= 0 && int64_t(row.k0) != row.theorem_expected)
            os << " expected=" << row.theorem_expected;
        if (!row.delsarte_ok) os << " delsarte-failed";
        if (!row.veron_ok) os << " veron-mismatch";
        if (!row.sandwich_ok) os << " bounds-violated";
        report.violations.push_back(os.str());
    }
    return report;
}

SweepReport main_theorem_sweep(const FieldTower& tower, const HermitianCurve& curve,
                               unsigned jobs) {
    const int64_t s_max = int64_t(curve.n_affine() / tower.r());
    std::vector<int64_t> s_values;
    s_values.reserve(size_t(s_max) + 1);
    for (int64_t s = 0; s <= s_max; ++s) s_values.push_back(s);
    return dimension_sweep(tower, curve, s_values, jobs, true);
}

}  // namespace hermicode
