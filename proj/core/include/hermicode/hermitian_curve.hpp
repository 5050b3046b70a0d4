#ifndef HERMICODE_HERMITIAN_CURVE_HPP
#define HERMICODE_HERMITIAN_CURVE_HPP

#include <cstdint>
#include <vector>

#include "hermicode/field_tower.hpp"

namespace hermicode {

// A rational affine point (x, y) of y^q + y = x^(q+1), both coordinates in
// GF(q^2); index is the position in the canonical ordering.
struct AffinePoint {
    FieldElement x, y;
    uint32_t index = 0;
};

// x^i y^j together with its pole order q*i + (q+1)*j at the place at
// infinity. Distinct (i, j) with j <= q-1 have distinct pole orders.
struct Monomial {
    uint32_t i = 0, j = 0;
    uint64_t pole = 0;
};

uint64_t pole_order(uint32_t q, uint64_t i, uint64_t j);

// The curve y^q + y = x^(q+1) over GF(q^2) with q the tower's intermediate
// order. Affine rational points are enumerated at construction in the
// canonical order (by encoding of x, then encoding of y). The point at
// infinity never materializes; it only enters through pole orders.
class HermitianCurve {
  public:
    explicit HermitianCurve(const FieldTower& tower);

    const FieldTower& tower() const { return *tower_; }
    uint32_t q() const { return q_; }
    uint64_t genus() const { return uint64_t(q_) * (q_ - 1) / 2; }
    uint64_t n_affine() const { return points_.size(); }
    const std::vector<AffinePoint>& points() const { return points_; }

  private:
    const FieldTower* tower_;
    uint32_t q_;
    std::vector<AffinePoint> points_;
};

// Monomials x^i y^j with 0 <= i <= q^2-1, 0 <= j <= q-1 and pole order at
// most s, sorted by strictly increasing pole order. The cap on i loses
// nothing on rational points, where x^(q^2) = x.
std::vector<Monomial> monomial_basis(const HermitianCurve& curve, uint64_t s);

// Number of basis monomials with pole order <= s. Agrees with s + 1 - genus
// for 2g-2 < s < q^3.
uint64_t riemann_roch_dim(const HermitianCurve& curve, uint64_t s);

FieldElement evaluate_monomial(const FieldTower& tower, const Monomial& mon,
                               const AffinePoint& pt);

}  // namespace hermicode

#endif
