#include <doctest.h>

#include <set>

#include "qjt/resolutions.hpp"
#include "qjt/tableaux.hpp"

using namespace qjt;

namespace {

SkewShape sh(std::vector<int> l, std::vector<int> m = {}) { return SkewShape(Partition(std::move(l)), Partition(std::move(m))); }

RingElem pair_weight(const AlgType &t, const Path &p, const Path &q) { return path_weight(t, p, 0) * path_weight(t, q, 0); }

std::vector<Letter> letters(std::initializer_list<const char *> s) {
    std::vector<Letter> out;
    for (const char *c : s) out.push_back(Letter::parse(c));
    return out;
}

} // namespace

TEST_CASE("r_1 splices a pair meeting the condition at height 1") {
    AlgType t(Family::C, 2);
    Path p1({0, -2}, "NEEEENNN"), p2({-3, -2}, "NNNEEEEN");
    CHECK(condition_R(t, p1, p2, 1));
    auto r = r_y(t, p1, p2, 1);
    REQUIRE(r);
    CHECK(r->first == Path({0, -2}, "EEENENNN"));
    CHECK(r->second == Path({-3, -2}, "NNNENEEE"));
    CHECK(pair_weight(t, p1, p2) == pair_weight(t, r->first, r->second));
}

TEST_CASE("r_0 on a transposed special pair") {
    AlgType t(Family::C, 2);
    Path p1({1, -2}, "NNEENN"), p2({-2, -2}, "NNEEEEEEEENN");
    REQUIRE(classify_pair(t, p1, p2) == PairClass::Special);
    auto r = r_y(t, p1, p2, 0);
    REQUIRE(r);
    CHECK(r->first == Path({1, -2}, "NEEENEENN"));
    CHECK(r->second == Path({-2, -2}, "NNEENEEEN"));
    CHECK(r->first.end() == p2.end());
    CHECK(r->second.end() == p1.end());
    CHECK(pair_weight(t, p1, p2) == pair_weight(t, r->first, r->second));
}

TEST_CASE("r_y is not applicable without its condition") {
    AlgType t(Family::C, 2);
    Path p1({0, -2}, "NNNN"), p2({-1, -2}, "NNNN");
    CHECK_FALSE(r_y(t, p1, p2, 0).has_value());
    CHECK_FALSE(r_y(t, p1, p2, 1).has_value());
}

TEST_CASE("g on a doubly transposed tuple") {
    AlgType t(Family::C, 2);
    PathTuple p;
    p.shape = sh({8, 8, 7});
    p.paths = {Path({0, -2}, "NEEEEENEENN"), Path({-1, -2}, "NNEENEEEEN"), Path({-2, -2}, "NNEEEEEEEEEENN")};
    p.pi = {1, 2, 0};
    REQUIRE(in_P2_cross(t, p));
    Trace tr;
    auto q = g_map(t, p, &tr);
    REQUIRE(q);
    CHECK(q->paths[0] == Path({0, -2}, "NEENEEEEEENN"));
    CHECK(q->paths[1] == Path({-1, -2}, "NNEEEEEEEENN"));
    CHECK(q->paths[2] == Path({-2, -2}, "NNEEEEEENEN"));
    CHECK(q->pi == std::vector<int>{0, 1, 2});
    CHECK(tuple_weight(t, *q, 0) == tuple_weight(t, p, 0));
    CHECK(in_p_tilde(t, *q));
    REQUIRE(tr.size() == 1);
    CHECK(tr[0].kind == ResolutionStep::Kind::G);
    // the image tableau carries the 3x2 block of (nb, n) rows
    Tableau T = path_tuple_to_tableau(t, *q);
    int blocks = 0;
    for (int j = 1; j + 1 <= 7; ++j) {
        bool all = true;
        for (int i = 1; i <= 3; ++i) all = all && T.at(i, j) == Letter(-2) && T.at(i, j + 1) == Letter(2);
        blocks += all;
    }
    CHECK(blocks >= 1);
}

TEST_CASE("omega is an involution") {
    AlgType t(Family::C, 2);
    for (const auto &s : {sh({3, 2, 1}), sh({3, 3, 1}, {1}), sh({2, 1, 1})})
        for (const auto &p : enumerate_tuples(t, s, TupleClass::NoOrdinary)) {
            PathTuple w = omega(p);
            CHECK(omega(w, s.lambda[1]) == p);
            CHECK(tuple_weight(t, w, 0).size() == tuple_weight(t, p, 0).size());
        }
    PathTuple row = enumerate_tuples(t, sh({3}, {1}), TupleClass::All).front();
    PathTuple w = omega(row);
    CHECK(w.shape == sh({2}));
    CHECK(w.size() == 1);
}

TEST_CASE("untouched components are kept by r_y^ij") {
    AlgType t(Family::C, 2);
    for (const auto &p : enumerate_tuples(t, sh({3, 3, 3}, {1}), TupleClass::NoOrdinary))
        for (int y = 0; y < 2; ++y)
            if (auto q = r_y_ij(t, p, 1, 2, y)) {
                CHECK(q->paths[2] == p.paths[2]);
                CHECK(tuple_weight(t, *q, 0) == tuple_weight(t, p, 0));
            }
}

TEST_CASE("three-row maps on a full box") {
    AlgType t(Family::C, 2);
    SkewShape s = sh({3, 3, 3});
    std::set<PathTuple> p0;
    for (const auto &p : enumerate_tuples(t, s, TupleClass::NoOrdinary))
        if (in_P(t, p, 0)) p0.insert(p);
    int used = 0;
    for (const auto &p : enumerate_tuples(t, s, TupleClass::NoOrdinary)) {
        if (in_P1_ij(t, p, 1, 2)) {
            auto q = f1_12(t, p);
            REQUIRE(q);
            CHECK(p0.count(*q));
            CHECK(tuple_weight(t, *q, 0) == tuple_weight(t, p, 0));
            ++used;
        }
        if (in_P2_circ(t, p)) {
            auto q = f2_13(t, p);
            REQUIRE(q);
            CHECK(in_P1_ij(t, *q, 2, 3));
            CHECK((condition_F(t, *q, FCondition::F2_13a) || condition_F(t, *q, FCondition::F2_13b)));
            ++used;
        }
    }
    CHECK(used > 0);
}

TEST_CASE("condition names") {
    for (FCondition c : {FCondition::F2_13a, FCondition::F1_12b2, FCondition::F1_23b})
        CHECK(parse_fcondition(fcondition_name(c)) == c);
    CHECK_FALSE(parse_fcondition("F9").has_value());
}

TEST_CASE("one-column f_1 on the eight-row example") {
    AlgType t(Family::C, 7);
    SkewShape s(Partition(std::vector<int>(8, 1)));
    PathTuple p;
    p.shape = s;
    p.pi = {0, 1, 3, 2, 4, 5, 6, 7};
    int heights[8] = {-4, -1, 0, 0, 2, 3, 4, 6};
    for (int i = 1; i <= 8; ++i) {
        std::string st;
        if (i == 3) st = std::string(14, 'N');
        else if (i == 4) st = std::string(7, 'N') + "EE" + std::string(7, 'N');
        else st = std::string(heights[i - 1] + 7, 'N') + "E" + std::string(7 - heights[i - 1], 'N');
        p.paths.push_back(Path(start_point(t, s, i), st));
    }
    REQUIRE(in_P(t, p, 1));
    Trace tr;
    auto q = f1_one_column(t, p, &tr);
    REQUIRE(q);
    std::vector<std::string> steps;
    for (const auto &st : tr)
        if (st.kind == ResolutionStep::Kind::RY) steps.push_back(st.str());
    CHECK(steps == std::vector<std::string>{"r_0^34", "r_1^24", "r_2^25", "r_3^26", "r_4^27", "r_4^16", "r_5^17", "r_6^18"});
    std::vector<Letter> column;
    for (const auto &row : path_tuple_to_tableau(t, *q).rows) column.push_back(row[0]);
    CHECK(column == letters({"1", "3", "7", "6b", "5b", "3b", "2b", "1b"}));
    CHECK_FALSE(extra_rule_1C(t, path_tuple_to_tableau(t, *q)));
    CHECK(tuple_weight(t, *q, 0) == tuple_weight(t, p, 0));
}

TEST_CASE("one-column f_1 for two rows is r_0") {
    AlgType t(Family::C, 2);
    for (const auto &p : enumerate_tuples(t, sh({1, 1}), TupleClass::NoOrdinary)) {
        if (!in_P(t, p, 1)) continue;
        Trace tr;
        auto q = f1_one_column(t, p, &tr);
        REQUIRE(q);
        CHECK(*q == *r_y_ij(t, p, 1, 2, 0));
    }
}

TEST_CASE("f_1 images are the E-1C violations on (1,1,1) for C2") {
    AlgType t(Family::C, 2);
    std::set<PathTuple> img, bad;
    for (const auto &p : enumerate_tuples(t, sh({1, 1, 1}), TupleClass::NoOrdinary)) {
        if (in_P(t, p, 1)) img.insert(*f1_one_column(t, p));
        else if (!extra_rule_1C(t, path_tuple_to_tableau(t, p))) bad.insert(p);
    }
    CHECK(!img.empty());
    CHECK(img == bad);
}

TEST_CASE("d-vectors of the small blocks") {
    for (int n = 3; n <= 5; ++n) {
        auto L = [n](int k, bool bar) { return Letter(bar ? -(n + 1 - k) : n + 1 - k); };
        // k = 1 is n, k = 2 is n-1, k = 3 is n-2
        CHECK(d_vector(n, {L(1, false), L(1, true)}) == std::vector<Letter>{L(1, true), L(1, false)});
        CHECK(d_vector(n, {L(2, false), L(1, false), L(2, true)}) == std::vector<Letter>{L(1, false), L(1, true), L(1, false)});
        CHECK(d_vector(n, {L(2, false), L(1, true), L(2, true)}) == std::vector<Letter>{L(1, true), L(1, false), L(1, true)});
        CHECK(d_vector(n, {L(3, false), L(2, false), L(1, false), L(3, true)}) ==
              std::vector<Letter>{L(2, false), L(1, false), L(1, true), L(1, false)});
        CHECK(d_vector(n, {L(3, false), L(2, false), L(1, true), L(3, true)}) ==
              std::vector<Letter>{L(2, false), L(1, true), L(1, false), L(1, true)});
        CHECK(d_vector(n, {L(3, false), L(2, false), L(2, true), L(3, true)}) ==
              std::vector<Letter>{L(1, false), L(1, true), L(1, false), L(1, true)});
        CHECK(d_vector(n, {L(3, false), L(1, false), L(2, true), L(3, true)}) ==
              std::vector<Letter>{L(1, false), L(1, true), L(1, false), L(2, true)});
        CHECK(d_vector(n, {L(3, false), L(1, true), L(2, true), L(3, true)}) ==
              std::vector<Letter>{L(1, true), L(1, false), L(1, true), L(2, true)});
        CHECK(d_blocks(n, 2).size() == 1);
        CHECK(d_blocks(n, 3).size() == 2);
        CHECK(d_blocks(n, 4).size() == 5);
    }
    CHECK_FALSE(d_vector(3, letters({"1", "2", "3"})).has_value());
}
