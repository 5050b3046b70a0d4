#ifndef HERMICODE_IO_HPP
#define HERMICODE_IO_HPP

#include <iosfwd>
#include <string>

#include "hermicode/hermitian_curve.hpp"
#include "hermicode/linear_code.hpp"
#include "hermicode/subfield.hpp"

namespace hermicode {

// index,x,y rows in the field element encoding, with a header naming the
// modulus.
void write_points_csv(std::ostream& os, const HermitianCurve& curve);

// Space-separated element encodings, one row per line.
void write_matrix_text(std::ostream& os, const MatrixGF& m);

// JSON sidecar for a matrix export: field, dims, characteristic, modulus.
std::string matrix_sidecar_json(const MatrixGF& m);

// n, k, designed d (only when 2g-2 < s < n) and provenance.
std::string code_params_json(const LinearCode& code);

// q,r,s,n,k,k0,k1_dual,boundLow,theorem_expected,pass; expectation is
// empty when none applies.
void write_sweep_csv(std::ostream& os, const SweepReport& report);

// s,dim_subcode,dim_parent rows.
void write_dim_csv(std::ostream& os, const SweepReport& report);

std::string dim_rows_json(const SweepReport& report);

}  // namespace hermicode

#endif
