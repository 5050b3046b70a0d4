#include "hermicode/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hermicode {

MatrixGF::MatrixGF(const FieldTower& tower, uint32_t field_order, size_t rows, size_t cols)
    : tower_(&tower), field_(field_order), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!tower.is_tower_order(field_order))
        throw std::invalid_argument("matrix field order not in tower");
}

MatrixGF MatrixGF::identity(const FieldTower& tower, uint32_t field_order, size_t n) {
    MatrixGF m(tower, field_order, n, n);
    for (size_t i = 0; i < n; ++i) m.set_raw(i, i, 1);
    return m;
}

void MatrixGF::set(size_t i, size_t j, const FieldElement& v) {
    if (v.field != field_)
        throw FieldMismatch("entry tagged GF(" + std::to_string(v.field) + ") in a GF(" +
                            std::to_string(field_) + ") matrix");
    if (!tower_->in_field(v.value, field_))
        throw FieldMismatch("entry encoding is not a member of the matrix field");
    data_[i * cols_ + j] = uint16_t(v.value);
}

std::vector<FieldElement> MatrixGF::row(size_t i) const {
    std::vector<FieldElement> out(cols_);
    for (size_t j = 0; j < cols_; ++j) out[j] = {data_[i * cols_ + j], field_};
    return out;
}

void MatrixGF::set_row(size_t i, const std::vector<FieldElement>& v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    for (size_t j = 0; j < cols_; ++j) set(i, j, v[j]);
}

namespace detail {

bool packed_gf2_applicable(const MatrixGF& m) { return m.field() == 2; }

bool bytes_prime_applicable(const MatrixGF& m) {
    return m.field() == m.tower().p() && m.field() > 2 && m.field() < 256;
}

Elimination rref_generic(const MatrixGF& m) {
    Elimination out{m, 0, {}};
    MatrixGF& r = out.rref;
    const FieldTower& tw = m.tower();
    const size_t rows = m.rows(), cols = m.cols();

    for (size_t col = 0; col < cols && out.rank < rows; ++col) {
        size_t pr = out.rank;
        while (pr < rows && r.raw(pr, col) == 0) ++pr;
        if (pr == rows) continue;
        if (pr != out.rank)
            for (size_t c = col; c < cols; ++c)
                std::swap(r.row_data(out.rank)[c], r.row_data(pr)[c]);

        uint16_t* prow = r.row_data(out.rank);
        const uint32_t lead = prow[col];
        if (lead != 1) {
            const uint32_t s = tw.inv_raw(lead);
            for (size_t c = col; c < cols; ++c)
                if (prow[c]) prow[c] = uint16_t(tw.mul_raw(prow[c], s));
        }
        for (size_t i = 0; i < rows; ++i) {
            if (i == out.rank) continue;
            uint16_t* trow = r.row_data(i);
            const uint32_t f = trow[col];
            if (!f) continue;
            // rows other than earlier pivot rows are zero left of col, and
            // the pivot row itself is zero left of col, so start at col.
            for (size_t c = col; c < cols; ++c) {
                const uint32_t a = prow[c];
                if (a) trow[c] = uint16_t(tw.sub_raw(trow[c], tw.mul_raw(f, a)));
            }
        }
        out.pivots.push_back(col);
        ++out.rank;
    }
    return out;
}

Elimination rref_packed_gf2(const MatrixGF& m) {
    const size_t rows = m.rows(), cols = m.cols();
    const size_t words = (cols + 63) / 64;
    std::vector<uint64_t> bits(rows * words, 0);
    for (size_t i = 0; i < rows; ++i) {
        const uint16_t* src = m.row_data(i);
        uint64_t* dst = bits.data() + i * words;
        for (size_t j = 0; j < cols; ++j) {
            assert(src[j] <= 1);
            if (src[j]) dst[j / 64] |= uint64_t(1) << (j % 64);
        }
    }

    Elimination out{MatrixGF(m.tower(), 2, rows, cols), 0, {}};
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        const size_t w = col / 64;
        const uint64_t mask = uint64_t(1) << (col % 64);
        size_t pr = rank;
        while (pr < rows && !(bits[pr * words + w] & mask)) ++pr;
        if (pr == rows) continue;
        if (pr != rank)
            for (size_t k = w; k < words; ++k)
                std::swap(bits[rank * words + k], bits[pr * words + k]);
        const uint64_t* prow = bits.data() + rank * words;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            uint64_t* trow = bits.data() + i * words;
            if (!(trow[w] & mask)) continue;
            for (size_t k = w; k < words; ++k) trow[k] ^= prow[k];
        }
        out.pivots.push_back(col);
        ++rank;
    }
    out.rank = rank;
    for (size_t i = 0; i < rank; ++i) {
        const uint64_t* src = bits.data() + i * words;
        uint16_t* dst = out.rref.row_data(i);
        for (size_t j = 0; j < cols; ++j)
            dst[j] = uint16_t((src[j / 64] >> (j % 64)) & 1);
    }
    return out;
}

namespace {

inline void row_addmul_mod3(uint8_t* t, const uint8_t* p, uint32_t g, size_t from, size_t to) {
    for (size_t c = from; c < to; ++c) {
        uint32_t v = t[c] + g * p[c];
        v = v >= 3 ? v - 3 : v;
        v = v >= 3 ? v - 3 : v;
        t[c] = uint8_t(v);
    }
}

inline void row_addmul_modp(uint8_t* t, const uint8_t* p, uint32_t g, uint32_t mod, size_t from,
                            size_t to) {
    for (size_t c = from; c < to; ++c) t[c] = uint8_t((t[c] + g * p[c]) % mod);
}

}  // namespace

Elimination rref_bytes_prime(const MatrixGF& m) {
    const FieldTower& tw = m.tower();
    const uint32_t p = m.field();
    const size_t rows = m.rows(), cols = m.cols();

    // GF(p) members encode as the integers 0..p-1, so the copy is direct.
    std::vector<uint8_t> a(rows * cols);
    for (size_t i = 0; i < rows * cols; ++i) {
        assert(m.row_data(0)[i] < p);
        a[i] = uint8_t(m.row_data(0)[i]);
    }

    std::vector<uint8_t> inv_mod(p, 0);
    for (uint32_t x = 1; x < p; ++x)
        for (uint32_t y = 1; y < p; ++y)
            if (x * y % p == 1) inv_mod[x] = uint8_t(y);

    Elimination out{MatrixGF(tw, p, rows, cols), 0, {}};
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pr = rank;
        while (pr < rows && a[pr * cols + col] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != rank)
            for (size_t c = col; c < cols; ++c)
                std::swap(a[rank * cols + c], a[pr * cols + c]);
        uint8_t* prow = a.data() + rank * cols;
        if (prow[col] != 1) {
            const uint32_t s = inv_mod[prow[col]];
            for (size_t c = col; c < cols; ++c) prow[c] = uint8_t(prow[c] * s % p);
        }
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            uint8_t* trow = a.data() + i * cols;
            const uint32_t f = trow[col];
            if (!f) continue;
            const uint32_t g = p - f;  // subtract f*prow as an addition
            if (p == 3)
                row_addmul_mod3(trow, prow, g, col, cols);
            else
                row_addmul_modp(trow, prow, g, p, col, cols);
        }
        out.pivots.push_back(col);
        ++rank;
    }
    out.rank = rank;
    for (size_t i = 0; i < rank; ++i)
        for (size_t j = 0; j < cols; ++j) out.rref.set_raw(i, j, a[i * cols + j]);
    return out;
}

}  // namespace detail

Elimination rref(const MatrixGF& m) {
    if (detail::packed_gf2_applicable(m)) return detail::rref_packed_gf2(m);
    if (detail::bytes_prime_applicable(m)) return detail::rref_bytes_prime(m);
    return detail::rref_generic(m);
}

size_t rank(const MatrixGF& m) { return rref(m).rank; }

MatrixGF kernel_basis(const MatrixGF& m) {
    const Elimination e = rref(m);
    const FieldTower& tw = m.tower();
    const size_t cols = m.cols();

    std::vector<bool> is_pivot(cols, false);
    for (size_t c : e.pivots) is_pivot[c] = true;

    MatrixGF k(tw, m.field(), cols - e.rank, cols);
    size_t idx = 0;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        k.set_raw(idx, f, 1);
        for (size_t t = 0; t < e.rank; ++t) {
            const uint16_t v = e.rref.raw(t, f);
            if (v) k.set_raw(idx, e.pivots[t], uint16_t(tw.neg_raw(v)));
        }
        ++idx;
    }
    return k;
}

MatrixGF dual_basis(const MatrixGF& g) { return kernel_basis(g); }

MatrixGF canonical_row_basis(const MatrixGF& m) {
    const Elimination e = rref(m);
    MatrixGF b(m.tower(), m.field(), e.rank, m.cols());
    for (size_t i = 0; i < e.rank; ++i)
        for (size_t j = 0; j < m.cols(); ++j) b.set_raw(i, j, e.rref.raw(i, j));
    return b;
}

bool row_space_equal(const MatrixGF& a, const MatrixGF& b) {
    if (a.field() != b.field()) throw FieldMismatch("row_space_equal: field mismatch");
    if (a.cols() != b.cols()) throw std::invalid_argument("row_space_equal: column mismatch");
    return canonical_row_basis(a) == canonical_row_basis(b);
}

MatrixGF transpose(const MatrixGF& m) {
    MatrixGF t(m.tower(), m.field(), m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) t.set_raw(j, i, m.raw(i, j));
    return t;
}

MatrixGF vstack(const MatrixGF& a, const MatrixGF& b) {
    if (a.field() != b.field()) throw FieldMismatch("vstack: field mismatch");
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    MatrixGF s(a.tower(), a.field(), a.rows() + b.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) s.set_raw(i, j, a.raw(i, j));
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) s.set_raw(a.rows() + i, j, b.raw(i, j));
    return s;
}

std::vector<FieldElement> mul_vec(const MatrixGF& m, const std::vector<FieldElement>& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("mul_vec: length mismatch");
    const FieldTower& tw = m.tower();
    for (const FieldElement& x : v)
        if (x.field != m.field()) throw FieldMismatch("mul_vec: field mismatch");
    std::vector<FieldElement> out(m.rows(), FieldElement{0, m.field()});
    for (size_t i = 0; i < m.rows(); ++i) {
        const uint16_t* row = m.row_data(i);
        uint32_t acc = 0;
        for (size_t j = 0; j < m.cols(); ++j)
            if (row[j] && v[j].value) acc = tw.add_raw(acc, tw.mul_raw(row[j], v[j].value));
        out[i].value = acc;
    }
    return out;
}

bool is_zero(const std::vector<FieldElement>& v) {
    return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.value == 0; });
}

}  // namespace hermicode
