#ifndef HERMICODE_HERMICODE_HPP
#define HERMICODE_HERMICODE_HPP

#include "hermicode/field_tower.hpp"
#include "hermicode/hermitian_curve.hpp"
#include "hermicode/io.hpp"
#include "hermicode/linear_code.hpp"
#include "hermicode/matrix.hpp"
#include "hermicode/parallel.hpp"
#include "hermicode/reference_data.hpp"
#include "hermicode/subfield.hpp"

#endif
