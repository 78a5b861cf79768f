#include <doctest.h>

#include "qjt/jacobitrudi.hpp"
#include "qjt/paths.hpp"
#include "qjt/series.hpp"

using namespace qjt;

namespace {

SkewShape sh(std::vector<int> l, std::vector<int> m = {}) { return SkewShape(Partition(std::move(l)), Partition(std::move(m))); }

} // namespace

TEST_CASE("path geometry") {
    Path p({0, 0}, "NEENEENN");
    CHECK(p.end() == Point{4, 4});
    CHECK(p.num_east() == 4);
    CHECK(p.leftmost_at(1) == Point{0, 1});
    CHECK(p.rightmost_at(1) == Point{2, 1});
    CHECK_FALSE(p.leftmost_at(5).has_value());
    CHECK(p.contains({3, 2}));
    CHECK_FALSE(p.contains({3, 1}));
    CHECK(Path::parse(p.str()) == p);
    CHECK_THROWS(Path({0, 0}, "NX"));
}

TEST_CASE("h-path counts") {
    CHECK(enumerate_hpaths(AlgType(Family::A, 2), {0, 0}, {0, 2}).size() == 1);
    CHECK(enumerate_hpaths(AlgType(Family::A, 1), {0, 0}, {1, 1}).size() == 2);
    CHECK(enumerate_hpaths(AlgType(Family::C, 2), {5, -2}, {7, 2}).size() == 11);
    // single paths generate the one-row determinants
    for (Family f : {Family::A, Family::B, Family::C}) {
        AlgType t(f, 3);
        for (int r = 1; r <= 3; ++r) {
            auto ps = enumerate_hpaths(t, {0, band_bottom(t)}, {r, band_top(t)});
            RingElem sum;
            for (const auto &p : ps) sum += path_weight(t, p, 0);
            CHECK(sum == chi_h(t, sh({r}), 0));
            CHECK(static_cast<long>(ps.size()) == h_coeff(t, r, 0).coefficient_sum());
        }
    }
}

TEST_CASE("type A labelling") {
    AlgType t(Family::A, 4);
    Path p({0, 0}, "NEENEENN");
    RingElem want = f_hom(t, {Letter(2), 0}) * f_hom(t, {Letter(2), 2}) * f_hom(t, {Letter(3), 4}) * f_hom(t, {Letter(3), 6});
    CHECK(path_weight(t, p, 0) == want);
    CHECK(path_weight(t, Path({0, 0}, "NNNN"), 0) == RingElem(1));
}

TEST_CASE("type C labelling and a transposed special pair") {
    AlgType t(Family::C, 2);
    Path q({-1, -2}, "ENENEEEENEN");
    Path p({3, -2}, "NENNN");
    std::vector<Letter> want = {Letter(1), Letter(2), Letter(-2), Letter(2), Letter(-2), Letter(2), Letter(-2)};
    auto ls = labeled_steps(t, q);
    REQUIRE(ls.size() == want.size());
    for (std::size_t k = 0; k < want.size(); ++k) CHECK(ls[k].label == want[k]);
    CHECK(labeled_steps(t, p).front().label == Letter(2));
    CHECK(classify_pair(t, p, q) == PairClass::Special);
    CHECK(is_transposed(p, q));
    CHECK_FALSE(is_valid_hpath(t, Path({0, -2}, "NNENN")));
}

TEST_CASE("pair classification") {
    AlgType c(Family::C, 2);
    CHECK(classify_pair(c, Path({0, -2}, "NNNN"), Path({1, -2}, "NNNN")) == PairClass::Disjoint);
    CHECK_FALSE(is_transposed(Path({0, -2}, "NNNN"), Path({1, -2}, "NNNN")));
    // shared point off height 0
    CHECK(classify_pair(c, Path({0, -2}, "NENNN"), Path({1, -2}, "NNNNE")) == PairClass::Ordinary);
    AlgType b(Family::B, 2);
    CHECK(classify_pair(b, Path({0, -2}, "NNENN"), Path({1, -2}, "NNENN")) == PairClass::Special);
    CHECK(classify_pair(b, Path({0, -2}, "NNENN"), Path({1, -2}, "NNNN")) == PairClass::Ordinary);
}

TEST_CASE("tuple enumeration edge cases") {
    AlgType t(Family::C, 2);
    auto empty = enumerate_tuples(t, sh({}), TupleClass::All);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].size() == 0);
    for (const auto &p : enumerate_tuples(t, sh({3}), TupleClass::All)) CHECK(p.pi == std::vector<int>{0});
    CHECK(signed_path_sum(t, sh({3}), 0) == chi_h(t, sh({3}), 0));
    // for two rows the tilde class is the identity-permutation class
    for (const auto &s : skew_shapes_of(Partition({3, 2}))) {
        auto a = enumerate_tuples(t, s, TupleClass::PTilde);
        std::size_t p0 = 0;
        for (const auto &p : enumerate_tuples(t, s, TupleClass::NoOrdinary))
            if (count_transposed(t, p) == 0) ++p0;
        CHECK(a.size() == p0);
    }
}

TEST_CASE("signed path sums equal determinants") {
    CHECK(signed_path_sum(AlgType(Family::C, 2), sh({2, 2}), 0) == chi_h(AlgType(Family::C, 2), sh({2, 2}), 0));
    CHECK(signed_path_sum(AlgType(Family::A, 2), sh({2, 1}), 0) == chi_h(AlgType(Family::A, 2), sh({2, 1}), 0));
    CHECK(signed_path_sum(AlgType(Family::B, 2), sh({2, 2, 1}, {1}), 3) == chi_h(AlgType(Family::B, 2), sh({2, 2, 1}, {1}), 3));
    CHECK(full_signed_sum(AlgType(Family::C, 2), sh({2, 1}), 0) == chi_h(AlgType(Family::C, 2), sh({2, 1}), 0));
}

TEST_CASE("tuple JSON round trip") {
    AlgType t(Family::C, 2);
    for (const auto &p : enumerate_tuples(t, sh({2, 1}), TupleClass::NoOrdinary)) {
        auto j = p.to_json();
        std::string once = j.dump();
        CHECK(nlohmann::json::parse(once).dump() == once);
    }
}
