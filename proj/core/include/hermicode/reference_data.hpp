#ifndef HERMICODE_REFERENCE_DATA_HPP
#define HERMICODE_REFERENCE_DATA_HPP

#include <cstdint>
#include <span>

namespace hermicode {

// One row of the known dimension table for the binary subfield subcodes of
// the q = 8 one-point Hermitian code: the subcode dimension and the parent
// dimension at the given s. Used as the regression fixture the verify
// command and the acceptance suite diff against.
struct ReferenceRow {
    int64_t s;
    size_t dim_subcode;
    size_t dim_parent;
};

std::span<const ReferenceRow> c82_reference_table();

}  // namespace hermicode

#endif
