#include <doctest.h>

#include "qjt/jacobitrudi.hpp"
#include "qjt/series.hpp"
#include "qjt/shapes.hpp"

using namespace qjt;

namespace {

SkewShape sh(std::vector<int> l, std::vector<int> m = {}) { return SkewShape(Partition(std::move(l)), Partition(std::move(m))); }

} // namespace

TEST_CASE("small determinants") {
    RingElem x = RingElem::Y(1, 0), y = RingElem::Y(2, 1), z = RingElem::Y(1, 4, -1), w = RingElem(3);
    CHECK(determinant(RingMatrix{}) == RingElem(1));
    CHECK(determinant(RingMatrix{{x, RingElem()}, {RingElem(), y}}) == x * y);
    CHECK(determinant(RingMatrix{{x, y}, {z, w}}) == x * w - y * z);
}

TEST_CASE("trivial shapes") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        AlgType t(f, 3);
        CHECK(chi_h(t, sh({}), 0) == RingElem(1));
        CHECK(chi_e(t, sh({}), 0) == RingElem(1));
        CHECK(chi_h(t, sh({1}), 4) == h_coeff(t, 1, 4));
        CHECK(chi_h(t, sh({3}), 0) == h_coeff(t, 3, 4 * t.delta()));
        CHECK(chi_e(t, sh({1, 1}), 2) == e_coeff(t, 2, 2));
        CHECK(chi_h(t, sh({1, 1, 1}), 0) == e_coeff(t, 3, 0));
    }
    CHECK(chi_h(AlgType(Family::A, 2), sh({1}), 0) ==
          RingElem::Y(1, 0) + RingElem::Y(1, 2, -1) * RingElem::Y(2, 1) + RingElem::Y(2, 3, -1));
}

TEST_CASE("h and e forms agree") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
        for (const auto &s : {sh({2, 1}), sh({2, 2}), sh({3, 2, 1}, {1}), sh({2, 2, 1}, {1, 1})}) {
            AlgType t(f, 2);
            CHECK(chi_h(t, s, 0) == chi_e(t, s, 0));
        }
}

TEST_CASE("spectral shift") {
    AlgType t(Family::C, 2);
    CHECK(chi_h(t, sh({2, 1}), 3) == shift_spectral(chi_h(t, sh({2, 1}), 0), 3));
}

TEST_CASE("disconnected shape factorizes") {
    AlgType c2(Family::C, 2);
    CHECK(chi_h(c2, sh({3, 1}, {2}), 2) == h_coeff(c2, 1, 0) * h_coeff(c2, 1, 6));
}

TEST_CASE("monomial count of the first fundamental") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(chi_h(AlgType(Family::A, n), sh({1}), 0).size() == static_cast<std::size_t>(n + 1));
        CHECK(chi_h(AlgType(Family::B, n), sh({1}), 0).size() == static_cast<std::size_t>(2 * n + 1));
        CHECK(chi_h(AlgType(Family::C, n), sh({1}), 0).size() == static_cast<std::size_t>(2 * n));
    }
}

TEST_CASE("A2 (2,1) has dimension 8") {
    CHECK(beta(chi_h(AlgType(Family::A, 2), sh({2, 1}), 0), 2).eval_at_one() == 8);
}

TEST_CASE("beta of the C2 first fundamental") {
    ClassicalPoly y1 = ClassicalPoly::var(2, 1), y1i = ClassicalPoly::var(2, 1, -1), y2 = ClassicalPoly::var(2, 2),
                  y2i = ClassicalPoly::var(2, 2, -1);
    CHECK(beta(chi_h(AlgType(Family::C, 2), sh({1}), 0), 2) == y1 + y1i * y2 + y1 * y2i + y1i);
}
