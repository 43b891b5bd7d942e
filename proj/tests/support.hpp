#pragma once

#include "cubicdisc/scalar.hpp"
#include "oracle/golden.hpp"

inline cubicdisc::ExactScalar from_golden(const golden::FieldCoordinates& g) {
  return cubicdisc::ExactScalar(mpq_class(g[0]), mpq_class(g[1]), mpq_class(g[2]), mpq_class(g[3]));
}
