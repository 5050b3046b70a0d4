#include "hermicode/hermitian_curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermicode {

uint64_t pole_order(uint32_t q, uint64_t i, uint64_t j) {
    return uint64_t(q) * i + uint64_t(q + 1) * j;
}

HermitianCurve::HermitianCurve(const FieldTower& tower) : tower_(&tower), q_(tower.q()) {
    const uint32_t q2 = tower.q2();
    points_.reserve(uint64_t(q_) * q_ * q_);
    for (uint32_t xe = 0; xe < q2; ++xe) {
        const uint32_t rhs = tower.pow_raw(xe, q_ + 1);
        for (uint32_t ye = 0; ye < q2; ++ye) {
            if (tower.add_raw(tower.pow_raw(ye, q_), ye) != rhs) continue;
            points_.push_back(AffinePoint{{xe, q2}, {ye, q2}, uint32_t(points_.size())});
        }
    }
    if (points_.size() != uint64_t(q_) * q_ * q_)
        throw std::logic_error("affine point count is not q^3");
}

std::vector<Monomial> monomial_basis(const HermitianCurve& curve, uint64_t s) {
    const uint32_t q = curve.q();
    const uint32_t q2 = curve.tower().q2();
    std::vector<Monomial> basis;
    for (uint32_t j = 0; j < q; ++j) {
        for (uint32_t i = 0; i < q2; ++i) {
            const uint64_t pole = pole_order(q, i, j);
            if (pole <= s) basis.push_back(Monomial{i, j, pole});
        }
    }
    std::sort(basis.begin(), basis.end(),
              [](const Monomial& a, const Monomial& b) { return a.pole < b.pole; });
    for (size_t t = 1; t < basis.size(); ++t)
        if (basis[t].pole == basis[t - 1].pole)
            throw std::logic_error("duplicate pole order in monomial basis");
    return basis;
}

uint64_t riemann_roch_dim(const HermitianCurve& curve, uint64_t s) {
    return monomial_basis(curve, s).size();
}

FieldElement evaluate_monomial(const FieldTower& tower, const Monomial& mon,
                               const AffinePoint& pt) {
    const uint32_t xi = tower.pow_raw(pt.x.value, mon.i);
    const uint32_t yj = tower.pow_raw(pt.y.value, mon.j);
    return {tower.mul_raw(xi, yj), tower.q2()};
}

}  // namespace hermicode
