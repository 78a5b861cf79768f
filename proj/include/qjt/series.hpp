#pragma once

#include <vector>

#include "qjt/ring.hpp"

namespace qjt {

// truncated power series in X with X z_{i,a} = z_{i,a-2 delta} X
struct Series {
    std::vector<RingElem> coeffs; // degrees 0..trunc
    int delta = 1;

    Series() = default;
    Series(int trunc, int delta_);
    static Series one(int trunc, int delta_);

    int trunc() const { return static_cast<int>(coeffs.size()) - 1; }
    const RingElem &operator[](int k) const { return coeffs.at(k); }
    Series operator*(const Series &o) const;
    bool is_one() const;
};

// 1 + c q X^d
Series poly_factor(const RingElem &q, int d, long c, int trunc, int delta);
// (1 - q X^d)^{-1}
Series geom_inverse(const RingElem &q, int d, int trunc, int delta);

Series E_series(const AlgType &t, int trunc);
Series H_series(const AlgType &t, int trunc);
// substitute X -> -X
Series negate_X(const Series &s);

// memoized coefficients; h_{r,a+offset}
RingElem h_coeff(const AlgType &t, int r, int offset);
RingElem e_coeff(const AlgType &t, int r, int offset);

bool check_HE(const AlgType &t, int trunc);

} // namespace qjt
