#include <doctest.h>

#include "qjt/jacobitrudi.hpp"
#include "qjt/tableaux.hpp"

using namespace qjt;

namespace {

SkewShape sh(std::vector<int> l, std::vector<int> m = {}) { return SkewShape(Partition(std::move(l)), Partition(std::move(m))); }

Tableau make(const SkewShape &s, const std::vector<std::vector<std::string>> &rows) { return Tableau::from_json(s, nlohmann::json(rows)); }

} // namespace

TEST_CASE("ruleset names") {
    for (const char *s : {"A", "B", "HV", "HV+E-2R", "HV+E-2R+E-3R", "HV+E-1C", "HV+E-2C"}) CHECK(Ruleset::parse(s).str() == s);
    CHECK_THROWS(Ruleset::parse("HV+E-9Z"));
    AlgType c(Family::C, 3);
    CHECK(default_ruleset(c, sh({1, 1, 1})).str() == "HV+E-1C");
    CHECK(default_ruleset(c, sh({2, 2, 1})).str() == "HV+E-2C");
    CHECK(default_ruleset(c, sh({3, 1})).str() == "HV+E-2R");
    CHECK(default_ruleset(c, sh({3, 3, 1})).str() == "HV+E-2R+E-3R");
    CHECK(default_ruleset(AlgType(Family::B, 2), sh({3, 1})).str() == "B");
}

TEST_CASE("type A validity") {
    AlgType a(Family::A, 2);
    CHECK(is_valid_A(a, make(sh({1}), {{"1"}})));
    CHECK_FALSE(is_valid_A(a, make(sh({1, 1}), {{"2"}, {"1"}})));
    CHECK_FALSE(is_valid_A(a, make(sh({2}), {{"2", "1"}})));
    CHECK(is_valid_A(a, make(sh({2, 1}), {{"1", "1"}, {"3"}})));
}

TEST_CASE("type B validity") {
    AlgType b(Family::B, 2);
    CHECK(is_valid_B(b, make(sh({3, 2}), {{"1", "0", "1b"}, {"0", "2b"}})));
    CHECK_FALSE(is_valid_B(b, make(sh({2}), {{"0", "0"}})));
    CHECK(is_valid_B(b, make(sh({1, 1}), {{"0"}, {"0"}})));
}

TEST_CASE("type C HV validity") {
    AlgType c(Family::C, 2);
    CHECK(is_valid_HV_C(c, make(sh({2, 2, 2}), {{"2b", "2"}, {"2b", "2"}, {"2b", "2"}})));
    CHECK_FALSE(is_valid_HV_C(c, make(sh({3}), {{"2b", "2b", "2"}})));
    CHECK_FALSE(is_valid_HV_C(c, make(sh({1, 1}), {{"2"}, {"2"}})));
}

TEST_CASE("extra rules") {
    AlgType c(Family::C, 2);
    CHECK(extra_rule_1C(c, make(sh({1, 1}), {{"1"}, {"1b"}})));
    CHECK_FALSE(extra_rule_1C(c, make(sh({1, 1}), {{"2"}, {"2b"}})));
    CHECK(extra_rule_1C(c, make(sh({1, 1}), {{"1"}, {"2"}})));
    CHECK(extra_rule_2R(c, make(sh({2, 2}), {{"2", "2"}, {"2b", "2b"}})));
    CHECK_FALSE(extra_rule_2R(c, make(sh({1, 1}), {{"2"}, {"2b"}})));
    // a right neighbour n rescues the block
    CHECK(extra_rule_2R(c, make(sh({2, 1}), {{"2", "2"}, {"2b"}})));
    CHECK(extra_rule_3R(c, make(sh({}), {})));
    // E-2C reduces to E-1C on a single column
    for (const auto &T : enumerate_tableaux(c, sh({1, 1, 1}), Ruleset::parse("HV")))
        CHECK(extra_rule_2C(c, T) == extra_rule_1C(c, T));
}

TEST_CASE("tableau counts") {
    CHECK(enumerate_tableaux(AlgType(Family::A, 2), sh({2, 1}), Ruleset::parse("A")).size() == 8);
    CHECK(enumerate_tableaux(AlgType(Family::B, 2), sh({1}), Ruleset::parse("B")).size() == 5);
    CHECK(enumerate_tableaux(AlgType(Family::C, 2), sh({1}), Ruleset::parse("HV")).size() == 4);
    // C2 e_2 has dimension 5 once the (2, 2b) column is removed
    CHECK(enumerate_tableaux(AlgType(Family::C, 2), sh({1, 1}), Ruleset::parse("HV+E-1C")).size() == 5);
}

TEST_CASE("highest weight monomial") {
    SkewShape s = sh({4, 3, 2}, {2});
    for (Family f : {Family::A, Family::B, Family::C}) {
        AlgType t(f, 3);
        CHECK(hw_monomial(t, s, 0) == tableau_weight(t, highest_weight_tableau(s), 0));
    }
    CHECK(hw_monomial(AlgType(Family::A, 2), sh({1}), 0) == RingElem::Y(1, 0));
    CHECK(hw_monomial(AlgType(Family::C, 2), sh({1, 1}), 0) == RingElem::Y(2, -1));
    CHECK(hw_monomial(AlgType(Family::B, 2), sh({1, 1}), 0) == RingElem::Y(2, -3) * RingElem::Y(2, -1));
}

TEST_CASE("highest weight monomial matches the direct product") {
    for (Family f : {Family::A, Family::B, Family::C})
        for (int n = 1; n <= 3; ++n) {
            AlgType t(f, n);
            for (int m = 0; m <= 6; ++m)
                for (const auto &l : partitions_of(m))
                    for (const auto &s : skew_shapes_of(l))
                        if (depth(s) <= n) CHECK(hw_monomial(t, s, 2) == tableau_weight(t, highest_weight_tableau(s), 2));
        }
}

TEST_CASE("tableau sums equal determinants") {
    AlgType c(Family::C, 2);
    CHECK(tableau_sum(c, sh({2, 2}), 0, Ruleset::parse("HV+E-2R")) == chi_h(c, sh({2, 2}), 0));
    CHECK(tableau_sum(c, sh({1, 1, 1}), 0, Ruleset::parse("HV+E-1C")) == chi_h(c, sh({1, 1, 1}), 0));
    CHECK(tableau_sum(c, sh({2, 2, 2}, {1}), 0, Ruleset::parse("HV+E-2R+E-3R")) == chi_h(c, sh({2, 2, 2}, {1}), 0));
    CHECK(tableau_sum(AlgType(Family::B, 2), sh({2, 1}), 0, Ruleset::parse("B")) == chi_h(AlgType(Family::B, 2), sh({2, 1}), 0));
    // without the extra rule the sum is wrong
    CHECK(tableau_sum(c, sh({1, 1}), 0, Ruleset::parse("HV")) != chi_h(c, sh({1, 1}), 0));
}

TEST_CASE("tableaux and path tuples correspond") {
    AlgType c(Family::C, 2);
    Tableau t = make(sh({2, 2, 2}), {{"2b", "2"}, {"2b", "2"}, {"2b", "2"}});
    PathTuple p = tableau_to_path_tuple(c, t);
    CHECK(path_tuple_to_tableau(c, p) == t);
    CHECK(tuple_weight(c, p, 0) == tableau_weight(c, t, 0));

    AlgType b(Family::B, 2);
    Tableau tb = make(sh({3, 2}), {{"1", "0", "1b"}, {"0", "2b"}});
    CHECK(path_tuple_to_tableau(b, tableau_to_path_tuple(b, tb)) == tb);

    auto one = enumerate_tuples(c, sh({1}), TupleClass::All);
    CHECK(one.size() == 4);
    for (const auto &q : one) CHECK(tableau_to_path_tuple(c, path_tuple_to_tableau(c, q)) == q);

    for (Family f : {Family::A, Family::B, Family::C})
        for (const auto &s : skew_shapes_of(Partition({3, 2, 1}))) {
            AlgType t3(f, 3);
            Ruleset r;
            r.base = f;
            for (const auto &T : enumerate_tableaux(t3, s, r)) {
                PathTuple q = tableau_to_path_tuple(t3, T);
                CHECK(path_tuple_to_tableau(t3, q) == T);
                CHECK(tuple_weight(t3, q, 1) == tableau_weight(t3, T, 1));
            }
        }
}
