#include "hermicode/linear_code.hpp"

#include <cstring>

namespace hermicode {

LinearCode make_code(MatrixGF generators, std::optional<Provenance> provenance) {
    const size_t dim = rank(generators);
    const uint32_t field = generators.field();
    const size_t n = generators.cols();
    return LinearCode{field, n, std::move(generators), dim, std::move(provenance)};
}

MatrixGF evaluation_matrix(const FieldTower& tower, std::span<const Monomial> monomials,
                           std::span<const AffinePoint> points) {
    MatrixGF g(tower, tower.q2(), monomials.size(), points.size());
    for (size_t i = 0; i < monomials.size(); ++i)
        for (size_t j = 0; j < points.size(); ++j)
            g.set_raw(i, j, uint16_t(evaluate_monomial(tower, monomials[i], points[j]).value));
    return g;
}

LinearCode build_hermitian_code(const HermitianCurve& curve, uint64_t s) {
    const std::vector<Monomial> basis = monomial_basis(curve, s);
    MatrixGF g = evaluation_matrix(curve.tower(), basis, curve.points());
    LinearCode code = make_code(std::move(g), Provenance{curve.q(), int64_t(s), "hermitian"});
    const uint64_t twog2 = 2 * curve.genus() >= 2 ? 2 * curve.genus() - 2 : 0;
    if (s > twog2 && s < curve.n_affine() && code.dimension != s + 1 - curve.genus())
        throw std::logic_error("dimension disagrees with Riemann-Roch in the exact window");
    return code;
}

uint64_t designed_min_distance(uint32_t q, uint64_t s) {
    const uint64_t g = uint64_t(q) * (q - 1) / 2;
    const uint64_t n = uint64_t(q) * q * q;
    const uint64_t twog2 = 2 * g >= 2 ? 2 * g - 2 : 0;
    if (!(s > twog2 && s < n))
        throw std::invalid_argument("designed distance is asserted only for 2g-2 < s < q^3");
    return n - s;
}

uint64_t brute_force_min_distance(const LinearCode& code, uint64_t budget) {
    if (code.dimension == 0)
        throw std::domain_error("minimum distance of a zero-dimensional code is undefined");

    uint64_t words = 1;
    for (size_t i = 0; i < code.dimension; ++i) {
        if (words > budget / code.field)
            throw BudgetExceeded("message space " + std::to_string(code.field) + "^" +
                                 std::to_string(code.dimension) + " exceeds budget " +
                                 std::to_string(budget));
        words *= code.field;
    }
    if (words > budget)
        throw BudgetExceeded("message space exceeds budget");

    const FieldTower& tw = code.generators.tower();
    const MatrixGF basis = canonical_row_basis(code.generators);
    const size_t k = basis.rows(), n = basis.cols();
    const std::vector<uint32_t> scalars = tw.elements_of(code.field);

    // DFS over message digits, keeping partial sums per level.
    std::vector<std::vector<uint16_t>> partial(k + 1, std::vector<uint16_t>(n, 0));
    std::vector<size_t> digit(k, 0);
    uint64_t best = n + 1;
    size_t level = 0;
    while (true) {
        if (level == k) {
            bool nonzero = false;
            for (size_t t = 0; t < k; ++t)
                if (digit[t]) nonzero = true;
            if (nonzero) {
                uint64_t w = 0;
                for (size_t j = 0; j < n; ++j)
                    if (partial[k][j]) ++w;
                best = std::min(best, w);
            }
            // backtrack to the deepest level with digits left
            while (level > 0 && digit[level - 1] + 1 == scalars.size()) {
                digit[level - 1] = 0;
                --level;
            }
            if (level == 0) break;
            ++digit[level - 1];
            // recompute the partial sum at level-1's child
            const size_t t = level - 1;
            const uint32_t c = scalars[digit[t]];
            const uint16_t* row = basis.row_data(t);
            uint16_t* dst = partial[t + 1].data();
            const uint16_t* src = partial[t].data();
            if (c == 0)
                std::memcpy(dst, src, n * sizeof(uint16_t));
            else
                for (size_t j = 0; j < n; ++j)
                    dst[j] = uint16_t(tw.add_raw(src[j], tw.mul_raw(c, row[j])));
            continue;
        }
        // descend with the current digit (starts at 0 = zero scalar)
        const uint32_t c = scalars[digit[level]];
        const uint16_t* row = basis.row_data(level);
        uint16_t* dst = partial[level + 1].data();
        const uint16_t* src = partial[level].data();
        if (c == 0)
            std::memcpy(dst, src, n * sizeof(uint16_t));
        else
            for (size_t j = 0; j < n; ++j)
                dst[j] = uint16_t(tw.add_raw(src[j], tw.mul_raw(c, row[j])));
        ++level;
    }
    return best;
}

int64_t dual_hermitian_s(uint32_t q, int64_t s) {
    const int64_t q64 = q;
    return q64 * q64 * q64 + q64 * q64 - q64 - 2 - s;
}

LinearCode dual_code(const LinearCode& code) {
    MatrixGF d = dual_basis(code.generators);
    std::optional<Provenance> prov;
    if (code.provenance)
        prov = Provenance{code.provenance->q, code.provenance->s, "dual"};
    LinearCode out = make_code(std::move(d), std::move(prov));
    if (out.dimension != code.n - code.dimension)
        throw std::logic_error("dual dimension violates rank-nullity");
    return out;
}

MatrixGF parity_check(const LinearCode& code) { return dual_basis(code.generators); }

bool is_codeword(const LinearCode& code, const std::vector<FieldElement>& v,
                 const MatrixGF* parity) {
    if (v.size() != code.n) throw std::invalid_argument("is_codeword: length mismatch");
    for (const FieldElement& x : v)
        if (x.field != code.field) throw FieldMismatch("is_codeword: field mismatch");
    if (parity) return is_zero(mul_vec(*parity, v));
    return is_zero(mul_vec(parity_check(code), v));
}

bool is_subcode(const LinearCode& inner, const LinearCode& outer) {
    return rank(vstack(inner.generators, outer.generators)) == outer.dimension;
}

}  // namespace hermicode
