#ifndef HERMICODE_LINEAR_CODE_HPP
#define HERMICODE_LINEAR_CODE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "hermicode/hermitian_curve.hpp"
#include "hermicode/matrix.hpp"

namespace hermicode {

class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Provenance {
    uint32_t q = 0;
    int64_t s = 0;
    std::string kind;  // "hermitian" | "subfield r" | "trace r" | "dual"
};

// A linear code given by spanning rows; the rows need not be independent,
// the dimension is their rank.
struct LinearCode {
    uint32_t field = 0;
    size_t n = 0;
    MatrixGF generators;
    size_t dimension = 0;
    std::optional<Provenance> provenance;
};

LinearCode make_code(MatrixGF generators, std::optional<Provenance> provenance = std::nullopt);

// Rows are the evaluations of the monomials at the given points, in order.
MatrixGF evaluation_matrix(const FieldTower& tower, std::span<const Monomial> monomials,
                           std::span<const AffinePoint> points);

// The 1-point code of length q^3 evaluating the monomial basis of pole
// order <= s at the canonical affine points. For 2g-2 < s < q^3 the
// dimension equals s + 1 - g; outside that window it is the evaluation
// rank.
LinearCode build_hermitian_code(const HermitianCurve& curve, uint64_t s);

// n - s, only asserted for 2g-2 < s < q^3.
uint64_t designed_min_distance(uint32_t q, uint64_t s);

// Exhaustive minimum weight over all nonzero codewords. Refuses when
// field^dimension exceeds the budget; zero-dimensional codes are a domain
// error.
uint64_t brute_force_min_distance(const LinearCode& code, uint64_t budget = uint64_t(1) << 24);

// The s parameter of the dual 1-point code: q^3 + q^2 - q - 2 - s.
int64_t dual_hermitian_s(uint32_t q, int64_t s);

LinearCode dual_code(const LinearCode& code);

MatrixGF parity_check(const LinearCode& code);

// Membership via parity: dual_basis(generators) * v^T == 0. A precomputed
// parity matrix can be supplied to amortize bulk checks.
bool is_codeword(const LinearCode& code, const std::vector<FieldElement>& v,
                 const MatrixGF* parity = nullptr);

// True iff the row space of inner is contained in the row space of outer.
bool is_subcode(const LinearCode& inner, const LinearCode& outer);

}  // namespace hermicode

#endif
