#ifndef HERMICODE_MATRIX_HPP
#define HERMICODE_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "hermicode/field_tower.hpp"

namespace hermicode {

// Dense matrix over one field of a tower. Entries are stored as raw
// GF(q^2) encodings; the field tag lives on the matrix. The tower must
// outlive the matrix.
class MatrixGF {
  public:
    MatrixGF(const FieldTower& tower, uint32_t field_order, size_t rows, size_t cols);

    static MatrixGF identity(const FieldTower& tower, uint32_t field_order, size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    uint32_t field() const { return field_; }
    const FieldTower& tower() const { return *tower_; }

    FieldElement at(size_t i, size_t j) const { return {data_[i * cols_ + j], field_}; }
    // Field tag and subfield membership are checked.
    void set(size_t i, size_t j, const FieldElement& v);

    uint16_t raw(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    void set_raw(size_t i, size_t j, uint16_t enc) { data_[i * cols_ + j] = enc; }
    const uint16_t* row_data(size_t i) const { return data_.data() + i * cols_; }
    uint16_t* row_data(size_t i) { return data_.data() + i * cols_; }

    std::vector<FieldElement> row(size_t i) const;
    void set_row(size_t i, const std::vector<FieldElement>& v);

    bool operator==(const MatrixGF& other) const {
        return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
               data_ == other.data_;
    }

  private:
    const FieldTower* tower_;
    uint32_t field_;
    size_t rows_, cols_;
    std::vector<uint16_t> data_;
};

struct Elimination {
    MatrixGF rref;                // same shape as the input, zero rows at the bottom
    size_t rank = 0;              // number of nonzero rows of rref
    std::vector<size_t> pivots;   // pivot column of each of the first `rank` rows
};

// Reduced row echelon form; deterministic (first nonzero entry in column
// order is the pivot). Dispatches to a bit-packed GF(2) path or a byte
// mod-p path when the field allows; all paths produce the identical RREF.
Elimination rref(const MatrixGF& m);

// Rows spanning { v : m v^T = 0 }; row count is cols - rank(m).
MatrixGF kernel_basis(const MatrixGF& m);

// Rows spanning the dual of the row space of g (same computation as
// kernel_basis; named separately because callers mean a code's dual).
MatrixGF dual_basis(const MatrixGF& g);

size_t rank(const MatrixGF& m);

// True iff the row spaces coincide; compares canonical RREFs.
bool row_space_equal(const MatrixGF& a, const MatrixGF& b);

// RREF rows with zero rows dropped: the canonical basis of the row space.
MatrixGF canonical_row_basis(const MatrixGF& m);

MatrixGF transpose(const MatrixGF& m);
MatrixGF vstack(const MatrixGF& a, const MatrixGF& b);

std::vector<FieldElement> mul_vec(const MatrixGF& m, const std::vector<FieldElement>& v);
bool is_zero(const std::vector<FieldElement>& v);

namespace detail {

// The individual elimination paths, exposed so tests can pin them against
// each other bit for bit.
Elimination rref_generic(const MatrixGF& m);
Elimination rref_packed_gf2(const MatrixGF& m);
Elimination rref_bytes_prime(const MatrixGF& m);

bool packed_gf2_applicable(const MatrixGF& m);
bool bytes_prime_applicable(const MatrixGF& m);

}  // namespace detail

}  // namespace hermicode

#endif
