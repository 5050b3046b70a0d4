#ifndef HERMICODE_SUBFIELD_HPP
#define HERMICODE_SUBFIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hermicode/linear_code.hpp"

namespace hermicode {

struct SubfieldSubcodeResult {
    LinearCode code;  // over GF(r)
    size_t k0 = 0;
    int64_t bound_low = 0;  // n - h(n-k); may be negative
    size_t veron_k0 = 0;    // n - h(n-k) + dim ker(tr restricted to the dual)
    std::optional<Provenance> parent;
};

struct TraceCodeResult {
    LinearCode code;  // over GF(r)
    size_t k1 = 0;
};

struct DelsarteReport {
    bool holds = false;
    std::string diagnostics;  // both canonical bases, filled only on failure
};

// Everything the sweeps need about one parent code, computed off a single
// parity matrix: the subcode by parity expansion + kernel, the trace code
// of the dual, the Veron dimension, and the Delsarte identity.
struct SubfieldAnalysis {
    size_t n = 0, k = 0;
    size_t k0 = 0;          // kernel-route subcode dimension
    size_t k1_dual = 0;     // dim tr(C^dual)
    int64_t bound_low = 0;  // n - h(n-k)
    size_t veron_k0 = 0;
    bool delsarte_checked = false;
    bool delsarte_holds = false;
    std::string delsarte_diagnostics;
    LinearCode subcode;
};

SubfieldAnalysis analyze_subfield(const LinearCode& parent, const FieldTower& tower,
                                  const RBasisCoords* basis = nullptr,
                                  bool check_delsarte = true);

// C | GF(r): parity rows of the parent are expanded into h GF(r) rows each
// via the basis coordinates; the subcode is the kernel of the expanded
// matrix. Every returned generator, re-embedded into GF(q^2), is verified
// to be a parent codeword.
SubfieldSubcodeResult subfield_subcode(const LinearCode& parent, const FieldTower& tower,
                                       const RBasisCoords* basis = nullptr);

// tr(C), generated over GF(r) by the componentwise traces of the
// basis-scaled generator rows tr(b_t * g_i).
TraceCodeResult trace_code(const LinearCode& parent, const FieldTower& tower,
                           const RBasisCoords* basis = nullptr);

// (C|GF(r))^dual = tr(C^dual) as row spaces. This is a theorem; a false
// report signals an implementation bug and carries both canonical bases.
DelsarteReport delsarte_check(const LinearCode& parent, const FieldTower& tower);

// n - h(n-k) + dim ker(tr restricted to the dual code). Must agree with
// the kernel-route subcode dimension.
size_t veron_dimension(const LinearCode& parent, const FieldTower& tower);

// Evaluation vector of d + tr(alpha * x) at the canonical points, over
// GF(r). Lies in the subfield subcode at s = q^3/r.
std::vector<FieldElement> f_d_alpha_codeword(const FieldTower& tower, const HermitianCurve& curve,
                                             const FieldElement& d, const FieldElement& alpha);

// Evaluation vector of tr(alpha * y); lies in the subfield subcode at
// s = (q+1)q^2/r.
std::vector<FieldElement> y_trace_codeword(const FieldTower& tower, const HermitianCurve& curve,
                                           const FieldElement& alpha);

struct SweepRow {
    uint32_t q = 0, r = 0;
    int64_t s = 0;
    size_t n = 0, k = 0, k0 = 0, k1_dual = 0;
    int64_t bound_low = 0;
    int64_t theorem_expected = -1;  // -1 when no expectation applies
    bool pass = false;
    bool delsarte_ok = false;
    bool veron_ok = false;
    bool sandwich_ok = false;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    bool all_pass = true;
    std::vector<std::string> violations;
};

// Subfield dimensions for each requested s; rows come back ordered as
// given. When with_theorem_expectation is set, rows below q^3/r expect
// dimension 1 and the row at q^3/r expects 2m+1.
SweepReport dimension_sweep(const FieldTower& tower, const HermitianCurve& curve,
                            const std::vector<int64_t>& s_values, unsigned jobs = 0,
                            bool with_theorem_expectation = false);

// The full sweep 0 <= s <= q^3/r asserting dim = 1 below q^3/r and 2m+1 at
// q^3/r.
SweepReport main_theorem_sweep(const FieldTower& tower, const HermitianCurve& curve,
                               unsigned jobs = 0);

}  // namespace hermicode

#endif
