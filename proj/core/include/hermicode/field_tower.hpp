#ifndef HERMICODE_FIELD_TOWER_HPP
#define HERMICODE_FIELD_TOWER_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hermicode {

// An element of one field in the tower GF(p) <= GF(r) <= GF(q) <= GF(q^2).
// `value` is the encoding inside the ambient GF(q^2) tables (the base-p
// integer of the polynomial coefficient vector); `field` is the order of
// the field the element is tagged with. Operands of different tags are
// rejected, an explicit embed/restrict is required.
struct FieldElement {
    uint32_t value = 0;
    uint32_t field = 0;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

class FieldMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class FieldTower;

// Coordinate expansion of GF(q^2) in a chosen GF(r)-basis of h = 2m elements.
// Construction enumerates all r^h combinations and fails if they do not hit
// every element exactly once, which verifies independence and spanning.
class RBasisCoords {
  public:
    RBasisCoords(const FieldTower& tower, std::vector<FieldElement> basis);

    const std::vector<FieldElement>& basis() const { return basis_; }
    uint32_t h() const { return h_; }

    // h coordinates of a in GF(r), recombining to a.
    std::vector<FieldElement> coords(const FieldElement& a) const;

    // Pointer to the h raw GF(r) encodings of the element with encoding enc.
    const uint16_t* raw_coords(uint32_t enc) const { return table_.data() + size_t(enc) * h_; }

  private:
    std::vector<FieldElement> basis_;
    std::vector<uint16_t> table_;  // q2 * h GF(r) encodings
    uint32_t h_ = 0;
    uint32_t r_ = 0;
    uint32_t q2_ = 0;
};

// Exact arithmetic in GF(p) <= GF(r) <= GF(q) <= GF(q^2) with q = r^m,
// backed by discrete-log tables over GF(q^2). Immutable after construction
// and safe to share across threads; all operations are pure.
class FieldTower {
  public:
    // Largest supported top field; the exp/log/trace tables are O(q^2).
    static constexpr uint32_t kMaxQ2 = 1u << 16;

    // Builds the tower for q = (p^e)^m, searching for the lexicographically
    // smallest monic modulus of degree 2me over GF(p) for which x generates
    // the multiplicative group.
    static FieldTower make(uint32_t p, uint32_t e, uint32_t m);

    // Same, with an explicit modulus (coefficients low-to-high, monic,
    // degree 2me). The modulus is verified irreducible by trial division;
    // the generator is x when x is primitive, otherwise the first primitive
    // element in encoding order.
    static FieldTower make(uint32_t p, uint32_t e, uint32_t m, std::vector<uint32_t> modulus);

    uint32_t p() const { return p_; }
    uint32_t r() const { return r_; }
    uint32_t q() const { return q_; }
    uint32_t q2() const { return q2_; }
    uint32_t e() const { return e_; }
    uint32_t m() const { return m_; }
    uint32_t h() const { return h_; }  // extension degree of GF(q^2) over GF(r), 2m
    uint32_t ext_degree() const { return deg_; }  // degree over GF(p), 2me
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    bool is_tower_order(uint32_t order) const;

    // --- element constructors ---
    FieldElement zero(uint32_t order) const;
    FieldElement one(uint32_t order) const;
    // From an encoding, with subfield membership verified.
    FieldElement element(uint32_t encoding, uint32_t order) const;
    // Generator of GF(q^2)^*.
    FieldElement generator() const;
    // Canonical generator of GF(order)^*: g^((q^2-1)/(order-1)).
    FieldElement subfield_generator(uint32_t order) const;
    // All encodings of GF(order) members: 0 followed by the powers of the
    // canonical subfield generator.
    std::vector<uint32_t> elements_of(uint32_t order) const;

    bool in_field(uint32_t encoding, uint32_t order) const;
    // Retags a into a larger tower field (the encoding is unchanged).
    FieldElement embed(const FieldElement& a, uint32_t order) const;
    // Retags a into a smaller tower field; membership is checked.
    FieldElement restrict_to(const FieldElement& a, uint32_t order) const;

    // --- arithmetic (operands must carry the same field tag) ---
    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement inv(const FieldElement& a) const;  // throws std::domain_error on 0
    FieldElement pow(const FieldElement& a, int64_t exponent) const;

    // a^r for a in GF(q^2); in log form this multiplies the exponent by r.
    FieldElement frobenius_r(const FieldElement& a) const;
    // Relative trace GF(q^2) -> GF(r): a + a^r + ... + a^(r^(h-1)).
    FieldElement trace_to_r(const FieldElement& a) const;
    // The unique alpha with alpha^(r^(2m-1)) = beta. The map is the
    // (2m-1)-th Frobenius power, so its inverse is one more Frobenius.
    FieldElement rth_root_preimage(const FieldElement& beta) const;

    // Default GF(r)-basis of GF(q^2): {1, g, g^2, ..., g^(h-1)}.
    std::vector<FieldElement> r_basis() const;
    const RBasisCoords& r_basis_coords() const { return *rcoords_; }
    std::vector<FieldElement> coords_in_r_basis(const FieldElement& a) const;

    // characteristic, r, m and modulus coefficients low-to-high.
    std::string describe() const;

    // --- raw-encoding arithmetic for hot loops (no tag checks) ---
    uint32_t add_raw(uint32_t a, uint32_t b) const {
        if (p_ == 2) return a ^ b;
        if (!add_.empty()) return add_[size_t(a) * q2_ + b];
        return add_digitwise(a, b);
    }
    uint32_t sub_raw(uint32_t a, uint32_t b) const { return add_raw(a, neg_[b]); }
    uint32_t neg_raw(uint32_t a) const { return neg_[a]; }
    uint32_t mul_raw(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[size_t(log_[a]) + size_t(log_[b])];
    }
    uint32_t inv_raw(uint32_t a) const;
    uint32_t pow_raw(uint32_t a, int64_t exponent) const;
    uint32_t frobenius_raw(uint32_t a) const {
        if (a == 0) return 0;
        return exp_[(uint64_t(log_[a]) * r_) % (q2_ - 1)];
    }
    uint32_t trace_raw(uint32_t a) const { return trace_[a]; }

    const uint16_t* exp_data() const { return exp_.data(); }
    const int32_t* log_data() const { return log_.data(); }
    const uint16_t* neg_data() const { return neg_.data(); }
    const uint16_t* trace_data() const { return trace_.data(); }

    FieldTower(FieldTower&&) = default;
    FieldTower& operator=(FieldTower&&) = default;
    FieldTower(const FieldTower&) = delete;
    FieldTower& operator=(const FieldTower&) = delete;

  private:
    FieldTower() = default;

    static FieldTower build(uint32_t p, uint32_t e, uint32_t m,
                            const std::vector<uint32_t>* explicit_modulus);
    void build_tables(uint32_t generator_encoding);
    uint32_t add_digitwise(uint32_t a, uint32_t b) const;
    void check_same(const FieldElement& a, const FieldElement& b) const;
    void check_order(uint32_t order) const;

    uint32_t p_ = 0, r_ = 0, q_ = 0, q2_ = 0;
    uint32_t e_ = 0, m_ = 0, h_ = 0, deg_ = 0;
    std::vector<uint32_t> modulus_;
    uint32_t gen_ = 0;  // encoding of the table generator

    std::vector<uint16_t> exp_;    // 2*(q2-1) entries, doubled to skip a mod
    std::vector<int32_t> log_;     // q2 entries, log_[0] = -1
    std::vector<uint16_t> neg_;    // q2 entries
    std::vector<uint16_t> trace_;  // q2 entries, values are GF(r) encodings
    std::vector<uint16_t> add_;    // q2*q2 entries when p > 2 and q2 is small
    std::unique_ptr<RBasisCoords> rcoords_;
};

}  // namespace hermicode

#endif
