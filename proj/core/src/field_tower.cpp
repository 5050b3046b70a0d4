#include "hermicode/field_tower.hpp"

#include <algorithm>
#include <sstream>

namespace hermicode {

namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint32_t> to_digits(uint32_t enc, uint32_t p, uint32_t len) {
    std::vector<uint32_t> d(len, 0);
    for (uint32_t i = 0; i < len && enc; ++i) {
        d[i] = enc % p;
        enc /= p;
    }
    return d;
}

uint32_t from_digits(const std::vector<uint32_t>& d, uint32_t p) {
    uint64_t enc = 0;
    for (size_t i = d.size(); i-- > 0;) enc = enc * p + d[i];
    return uint32_t(enc);
}

// a*b mod modulus, all monic-modulus polynomial arithmetic over GF(p) on
// digit vectors; modulus has degree deg = mod.size()-1 with mod[deg] == 1.
uint32_t poly_mul_mod(uint32_t a, uint32_t b, uint32_t p, const std::vector<uint32_t>& mod) {
    const uint32_t deg = uint32_t(mod.size()) - 1;
    std::vector<uint32_t> da = to_digits(a, p, deg), db = to_digits(b, p, deg);
    std::vector<uint32_t> t(2 * deg - 1, 0);
    for (uint32_t i = 0; i < deg; ++i) {
        if (!da[i]) continue;
        for (uint32_t j = 0; j < deg; ++j) t[i + j] = (t[i + j] + da[i] * db[j]) % p;
    }
    for (uint32_t i = 2 * deg - 2; i + 1 > deg; --i) {
        const uint32_t c = t[i];
        if (!c) continue;
        t[i] = 0;
        for (uint32_t j = 0; j < deg; ++j)
            t[i - deg + j] = (t[i - deg + j] + (p - mod[j]) * c) % p;
    }
    t.resize(deg);
    return from_digits(t, p);
}

// Remainder of f by the monic divisor g, both digit vectors low-to-high.
std::vector<uint32_t> poly_rem(std::vector<uint32_t> f, const std::vector<uint32_t>& g, uint32_t p) {
    const size_t dg = g.size() - 1;
    for (size_t i = f.size(); i-- > dg;) {
        const uint32_t c = f[i];
        if (!c) continue;
        f[i] = 0;
        for (size_t j = 0; j < dg; ++j) f[i - dg + j] = (f[i - dg + j] + (p - g[j]) * c) % p;
    }
    f.resize(dg);
    return f;
}

bool is_irreducible(const std::vector<uint32_t>& mod, uint32_t p) {
    const uint32_t deg = uint32_t(mod.size()) - 1;
    if (deg == 0 || mod[deg] != 1) return false;
    if (mod[0] == 0) return deg == 1;  // divisible by x
    std::vector<uint32_t> f(mod.begin(), mod.end());
    for (uint32_t d = 1; 2 * d <= deg; ++d) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= p;
        for (uint64_t c = 0; c < count; ++c) {
            std::vector<uint32_t> g = to_digits(uint32_t(c), p, d);
            g.push_back(1);  // monic x^d + ...
            std::vector<uint32_t> rem = poly_rem(f, g, p);
            if (std::all_of(rem.begin(), rem.end(), [](uint32_t x) { return x == 0; }))
                return false;
        }
    }
    return true;
}

// Multiplicative order walk of gamma; fills powers[k] = gamma^k while
// walking. Returns the order, or 0 if a zero product shows up (modulus not
// irreducible).
uint32_t order_walk(uint32_t gamma, uint32_t p, const std::vector<uint32_t>& mod, uint32_t q2,
                    std::vector<uint16_t>& powers) {
    powers.clear();
    powers.push_back(1);
    uint32_t acc = 1;
    for (uint32_t k = 1; k < q2; ++k) {
        acc = poly_mul_mod(acc, gamma, p, mod);
        if (acc == 0) return 0;
        if (acc == 1) return k;
        powers.push_back(uint16_t(acc));
    }
    return 0;
}

}  // namespace

FieldTower FieldTower::make(uint32_t p, uint32_t e, uint32_t m) {
    return build(p, e, m, nullptr);
}

FieldTower FieldTower::make(uint32_t p, uint32_t e, uint32_t m, std::vector<uint32_t> modulus) {
    return build(p, e, m, &modulus);
}

FieldTower FieldTower::build(uint32_t p, uint32_t e, uint32_t m,
                             const std::vector<uint32_t>* explicit_modulus) {
    if (!is_prime(p)) throw std::invalid_argument("tower characteristic must be prime");
    if (e < 1 || m < 1) throw std::invalid_argument("tower exponents must be >= 1");

    const uint32_t deg = 2 * m * e;
    uint64_t q2 = 1;
    for (uint32_t i = 0; i < deg; ++i) {
        q2 *= p;
        if (q2 > kMaxQ2)
            throw std::invalid_argument("q^2 exceeds the table bound 2^16");
    }

    FieldTower tw;
    tw.p_ = p;
    tw.e_ = e;
    tw.m_ = m;
    tw.deg_ = deg;
    tw.q2_ = uint32_t(q2);
    tw.h_ = 2 * m;
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) r *= p;
    tw.r_ = uint32_t(r);
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) q *= r;
    tw.q_ = uint32_t(q);

    std::vector<uint16_t> powers;
    if (explicit_modulus) {
        const std::vector<uint32_t>& mod = *explicit_modulus;
        if (mod.size() != size_t(deg) + 1 || mod[deg] != 1)
            throw std::invalid_argument("modulus must be monic of degree 2me");
        for (uint32_t c : mod)
            if (c >= p) throw std::invalid_argument("modulus coefficients must lie in GF(p)");
        if (!is_irreducible(mod, p))
            throw std::invalid_argument("modulus is not irreducible over GF(p)");
        tw.modulus_ = mod;
        if (order_walk(p, p, mod, tw.q2_, powers) == tw.q2_ - 1) {
            tw.gen_ = p;  // the class of x is primitive
        } else {
            for (uint32_t cand = 2; cand < tw.q2_ && tw.gen_ == 0; ++cand) {
                if (cand == p) continue;
                if (order_walk(cand, p, mod, tw.q2_, powers) == tw.q2_ - 1) tw.gen_ = cand;
            }
        }
        if (tw.gen_ == 0)
            throw std::invalid_argument("no generator found; modulus rejected");
    } else {
        for (uint32_t c = 1; c < tw.q2_; ++c) {
            if (c % p == 0) continue;  // constant term zero, divisible by x
            std::vector<uint32_t> mod = to_digits(c, p, deg);
            mod.push_back(1);
            if (!is_irreducible(mod, p)) continue;
            if (order_walk(p, p, mod, tw.q2_, powers) == tw.q2_ - 1) {
                tw.modulus_ = mod;
                tw.gen_ = p;  // the class of x
                break;
            }
        }
        if (tw.gen_ == 0)
            throw std::invalid_argument("no primitive modulus found");
    }

    tw.exp_.assign(size_t(2) * (tw.q2_ - 1), 0);
    for (uint32_t k = 0; k < tw.q2_ - 1; ++k) {
        tw.exp_[k] = powers[k];
        tw.exp_[k + tw.q2_ - 1] = powers[k];
    }
    tw.log_.assign(tw.q2_, -1);
    for (uint32_t k = 0; k < tw.q2_ - 1; ++k) {
        if (tw.log_[powers[k]] != -1)
            throw std::logic_error("generator power collision");
        tw.log_[powers[k]] = int32_t(k);
    }
    for (uint32_t v = 1; v < tw.q2_; ++v)
        if (tw.log_[v] == -1) throw std::logic_error("encoding not reached by generator");

    tw.neg_.assign(tw.q2_, 0);
    for (uint32_t v = 0; v < tw.q2_; ++v) {
        std::vector<uint32_t> d = to_digits(v, p, deg);
        for (uint32_t& x : d) x = (p - x) % p;
        tw.neg_[v] = uint16_t(from_digits(d, p));
    }

    if (p > 2 && tw.q2_ <= 1024) {
        tw.add_.assign(size_t(tw.q2_) * tw.q2_, 0);
        for (uint32_t a = 0; a < tw.q2_; ++a)
            for (uint32_t b = 0; b < tw.q2_; ++b)
                tw.add_[size_t(a) * tw.q2_ + b] = uint16_t(tw.add_digitwise(a, b));
    }

    tw.trace_.assign(tw.q2_, 0);
    for (uint32_t v = 0; v < tw.q2_; ++v) {
        uint32_t acc = v, t = v;
        for (uint32_t k = 1; k < tw.h_; ++k) {
            t = tw.frobenius_raw(t);
            acc = tw.add_raw(acc, t);
        }
        if (tw.pow_raw(acc, tw.r_) != acc) throw std::logic_error("trace left GF(r)");
        tw.trace_[v] = uint16_t(acc);
    }

    std::vector<FieldElement> basis;
    basis.reserve(tw.h_);
    for (uint32_t t = 0; t < tw.h_; ++t)
        basis.push_back(FieldElement{tw.pow_raw(tw.gen_, t), tw.q2_});
    tw.rcoords_ = std::make_unique<RBasisCoords>(tw, std::move(basis));
    return tw;
}

uint32_t FieldTower::add_digitwise(uint32_t a, uint32_t b) const {
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < deg_; ++i) {
        out += mult * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

uint32_t FieldTower::inv_raw(uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return exp_[(q2_ - 1) - uint32_t(log_[a])];
}

uint32_t FieldTower::pow_raw(uint32_t a, int64_t exponent) const {
    if (a == 0) {
        if (exponent == 0) return 1;
        if (exponent < 0) throw std::domain_error("negative power of zero");
        return 0;
    }
    const int64_t M = q2_ - 1;
    int64_t em = exponent % M;
    if (em < 0) em += M;
    return exp_[(uint64_t(log_[a]) * uint64_t(em)) % uint64_t(M)];
}

bool FieldTower::is_tower_order(uint32_t order) const {
    return order == p_ || order == r_ || order == q_ || order == q2_;
}

void FieldTower::check_order(uint32_t order) const {
    if (!is_tower_order(order))
        throw std::invalid_argument("field order " + std::to_string(order) + " not in tower");
}

void FieldTower::check_same(const FieldElement& a, const FieldElement& b) const {
    if (a.field != b.field)
        throw FieldMismatch("mixed-field operands: GF(" + std::to_string(a.field) + ") vs GF(" +
                            std::to_string(b.field) + ")");
    check_order(a.field);
}

FieldElement FieldTower::zero(uint32_t order) const {
    check_order(order);
    return {0, order};
}

FieldElement FieldTower::one(uint32_t order) const {
    check_order(order);
    return {1, order};
}

FieldElement FieldTower::element(uint32_t encoding, uint32_t order) const {
    check_order(order);
    if (encoding >= q2_) throw std::invalid_argument("encoding out of range");
    if (!in_field(encoding, order))
        throw std::invalid_argument("encoding " + std::to_string(encoding) + " not in GF(" +
                                    std::to_string(order) + ")");
    return {encoding, order};
}

FieldElement FieldTower::generator() const { return {gen_, q2_}; }

FieldElement FieldTower::subfield_generator(uint32_t order) const {
    check_order(order);
    const uint32_t step = (q2_ - 1) / (order - 1);
    return {exp_[step % (q2_ - 1)], order};
}

std::vector<uint32_t> FieldTower::elements_of(uint32_t order) const {
    check_order(order);
    std::vector<uint32_t> out;
    out.reserve(order);
    out.push_back(0);
    const uint32_t s = subfield_generator(order).value;
    uint32_t cur = 1;
    for (uint32_t k = 0; k + 1 < order; ++k) {
        out.push_back(cur);
        cur = mul_raw(cur, s);
    }
    return out;
}

bool FieldTower::in_field(uint32_t encoding, uint32_t order) const {
    return pow_raw(encoding, order) == encoding;
}

FieldElement FieldTower::embed(const FieldElement& a, uint32_t order) const {
    check_order(a.field);
    check_order(order);
    // The tower is a linear chain, so any larger tower order contains a.field.
    if (order < a.field)
        throw FieldMismatch("embed target smaller than source; use restrict_to");
    return {a.value, order};
}

FieldElement FieldTower::restrict_to(const FieldElement& a, uint32_t order) const {
    check_order(a.field);
    check_order(order);
    if (order > a.field) throw FieldMismatch("restrict target larger than source; use embed");
    if (!in_field(a.value, order))
        throw FieldMismatch("element not a member of GF(" + std::to_string(order) + ")");
    return {a.value, order};
}

FieldElement FieldTower::add(const FieldElement& a, const FieldElement& b) const {
    check_same(a, b);
    return {add_raw(a.value, b.value), a.field};
}

FieldElement FieldTower::sub(const FieldElement& a, const FieldElement& b) const {
    check_same(a, b);
    return {sub_raw(a.value, b.value), a.field};
}

FieldElement FieldTower::mul(const FieldElement& a, const FieldElement& b) const {
    check_same(a, b);
    return {mul_raw(a.value, b.value), a.field};
}

FieldElement FieldTower::neg(const FieldElement& a) const {
    check_order(a.field);
    return {neg_[a.value], a.field};
}

FieldElement FieldTower::inv(const FieldElement& a) const {
    check_order(a.field);
    return {inv_raw(a.value), a.field};
}

FieldElement FieldTower::pow(const FieldElement& a, int64_t exponent) const {
    check_order(a.field);
    return {pow_raw(a.value, exponent), a.field};
}

FieldElement FieldTower::frobenius_r(const FieldElement& a) const {
    if (a.field != q2_) throw FieldMismatch("frobenius_r expects a GF(q^2) element");
    return {frobenius_raw(a.value), q2_};
}

FieldElement FieldTower::trace_to_r(const FieldElement& a) const {
    if (a.field != q2_) throw FieldMismatch("trace_to_r expects a GF(q^2) element");
    return {trace_[a.value], r_};
}

FieldElement FieldTower::rth_root_preimage(const FieldElement& beta) const {
    if (beta.field != q2_) throw FieldMismatch("rth_root_preimage expects a GF(q^2) element");
    // x -> x^(r^(2m-1)) composed with one more Frobenius is x^(r^(2m)) = x.
    return {frobenius_raw(beta.value), q2_};
}

std::vector<FieldElement> FieldTower::r_basis() const { return rcoords_->basis(); }

std::vector<FieldElement> FieldTower::coords_in_r_basis(const FieldElement& a) const {
    return rcoords_->coords(a);
}

std::string FieldTower::describe() const {
    std::ostringstream os;
    os << "p=" << p_ << " r=" << r_ << " m=" << m_ << " q=" << q_ << " q2=" << q2_
       << " modulus=[";
    for (size_t i = 0; i < modulus_.size(); ++i) {
        if (i) os << ",";
        os << modulus_[i];
    }
    os << "]";
    return os.str();
}

RBasisCoords::RBasisCoords(const FieldTower& tower, std::vector<FieldElement> basis)
    : basis_(std::move(basis)), h_(tower.h()), r_(tower.r()), q2_(tower.q2()) {
    if (basis_.size() != h_)
        throw std::invalid_argument("basis must have h = 2m elements");
    for (const FieldElement& b : basis_)
        if (b.field != q2_) throw FieldMismatch("basis elements must be tagged GF(q^2)");

    table_.assign(size_t(q2_) * h_, 0);
    std::vector<bool> seen(q2_, false);
    const std::vector<uint32_t> sub = tower.elements_of(r_);

    for (uint32_t combo = 0; combo < q2_; ++combo) {
        uint32_t enc = 0, rest = combo;
        for (uint32_t t = 0; t < h_; ++t) {
            const uint32_t digit = rest % r_;
            rest /= r_;
            enc = tower.add_raw(enc, tower.mul_raw(sub[digit], basis_[t].value));
        }
        if (seen[enc])
            throw std::invalid_argument("basis elements are not GF(r)-linearly independent");
        seen[enc] = true;
        uint32_t rest2 = combo;
        for (uint32_t t = 0; t < h_; ++t) {
            table_[size_t(enc) * h_ + t] = uint16_t(sub[rest2 % r_]);
            rest2 /= r_;
        }
    }
}

std::vector<FieldElement> RBasisCoords::coords(const FieldElement& a) const {
    if (a.field != q2_) throw FieldMismatch("coords expect a GF(q^2) element");
    std::vector<FieldElement> out(h_);
    const uint16_t* row = raw_coords(a.value);
    for (uint32_t t = 0; t < h_; ++t) out[t] = {row[t], r_};
    return out;
}

}  // namespace hermicode
