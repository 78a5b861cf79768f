#pragma once

#include <vector>

#include "qjt/ring.hpp"
#include "qjt/shapes.hpp"

namespace qjt {

using RingMatrix = std::vector<std::vector<RingElem>>;

RingElem determinant(const RingMatrix &m);

RingMatrix jt_matrix_h(const AlgType &t, const SkewShape &s, int a);
RingMatrix jt_matrix_e(const AlgType &t, const SkewShape &s, int a);
RingElem chi_h(const AlgType &t, const SkewShape &s, int a);
RingElem chi_e(const AlgType &t, const SkewShape &s, int a);

} // namespace qjt
