#include "qjt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "qjt/classical.hpp"
#include "qjt/jacobitrudi.hpp"
#include "qjt/paths.hpp"
#include "qjt/resolutions.hpp"
#include "qjt/series.hpp"
#include "qjt/tableaux.hpp"

namespace qjt {

void SuiteResult::fail(const std::string &what) {
    passed = false;
    if (failures.size() < 10) failures.push_back(what);
}

nlohmann::json SuiteResult::to_json() const {
    return {{"suite", name}, {"passed", passed}, {"checked", checked}, {"failures", failures}, {"notes", notes}, {"seconds", seconds}};
}

namespace {

class Timer {
public:
    explicit Timer(SuiteResult &r) : r_(r), t0_(std::chrono::steady_clock::now()) {}
    ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

private:
    SuiteResult &r_;
    std::chrono::steady_clock::time_point t0_;
};

std::string where(const AlgType &t, const SkewShape &s) { return t.name() + " " + s.str(); }

} // namespace

std::vector<SkewShape> shapes_in_box(int max_rows, int max_part) {
    std::vector<SkewShape> out;
    for (const auto &l : partitions_in_box(max_rows, max_part))
        for (const auto &s : skew_shapes_of(l)) out.push_back(s);
    return out;
}

std::vector<SkewShape> shapes_up_to_size(int max_size, int max_depth) {
    std::vector<SkewShape> out;
    for (int m = 0; m <= max_size; ++m)
        for (const auto &l : partitions_of(m))
            for (const auto &s : skew_shapes_of(l))
                if (depth(s) <= max_depth) out.push_back(s);
    return out;
}

std::vector<SkewShape> shapes_with_rows(int rows, int max_part) {
    std::vector<SkewShape> out;
    for (const auto &l : partitions_in_box(rows, max_part))
        if (l.length() == rows)
            for (const auto &s : skew_shapes_of(l)) out.push_back(s);
    return out;
}

std::vector<SkewShape> shapes_one_column(int max_len) {
    std::vector<SkewShape> out;
    for (int l = 1; l <= max_len; ++l)
        for (const auto &s : skew_shapes_of(Partition(std::vector<int>(l, 1)))) out.push_back(s);
    return out;
}

std::vector<SkewShape> shapes_two_column(int len_min, int len_max) {
    std::vector<SkewShape> out;
    for (const auto &l : partitions_in_box(len_max, 2))
        if (l[1] == 2 && l.length() >= len_min)
            for (const auto &s : skew_shapes_of(l)) out.push_back(s);
    return out;
}

std::vector<SkewShape> random_shapes(int count, int max_rows, int max_part, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto lams = partitions_in_box(max_rows, max_part);
    lams.erase(std::remove_if(lams.begin(), lams.end(), [](const Partition &p) { return p.empty(); }), lams.end());
    std::vector<SkewShape> out;
    for (int k = 0; k < count; ++k) {
        const Partition &l = lams[rng() % lams.size()];
        auto mus = skew_shapes_of(l);
        out.push_back(mus[rng() % mus.size()]);
    }
    return out;
}

SuiteResult suite_he(int max_rank, int trunc) {
    SuiteResult r{"he"};
    Timer timer(r);
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
        for (int n = 1; n <= max_rank; ++n) {
            if (f == Family::D && n < 2) continue;
            AlgType t(f, n);
            ++r.checked;
            if (!check_HE(t, trunc)) r.fail(t.name() + " H*E(-X) != 1 up to X^" + std::to_string(trunc));
        }
    return r;
}

SuiteResult suite_det(const std::vector<Family> &fams, const std::vector<int> &ranks, int samples, int max_rows, int max_part,
                      std::uint64_t seed) {
    SuiteResult r{"det"};
    Timer timer(r);
    for (Family f : fams)
        for (int n : ranks) {
            AlgType t(f, n);
            for (const auto &s : random_shapes(samples, max_rows, max_part, seed + 1000 * static_cast<int>(f) + n)) {
                ++r.checked;
                if (chi_h(t, s, 0) != chi_e(t, s, 0)) r.fail("chi_h != chi_e for " + where(t, s));
            }
        }
    return r;
}

SuiteResult suite_paths(const std::vector<Family> &fams, const std::vector<int> &ranks, int max_rows, int max_part) {
    SuiteResult r{"paths"};
    Timer timer(r);
    for (Family f : fams)
        for (int n : ranks) {
            AlgType t(f, n);
            for (const auto &s : shapes_in_box(max_rows, max_part)) {
                ++r.checked;
                if (signed_path_sum(t, s, 0) != chi_h(t, s, 0)) r.fail("path sum != chi_h for " + where(t, s));
            }
        }
    return r;
}

namespace {

void check_tableau_sum(SuiteResult &r, const AlgType &t, const SkewShape &s, const Ruleset &rules) {
    ++r.checked;
    if (tableau_sum(t, s, 0, rules) != chi_h(t, s, 0)) r.fail("tableau sum (" + rules.str() + ") != chi_h for " + where(t, s));
}

} // namespace

SuiteResult suite_tableaux_A(int max_size, int max_rank) {
    SuiteResult r{"tableaux-A"};
    Timer timer(r);
    for (int n = 1; n <= max_rank; ++n)
        for (const auto &s : shapes_up_to_size(max_size, n)) check_tableau_sum(r, AlgType(Family::A, n), s, Ruleset::parse("A"));
    return r;
}

SuiteResult suite_tableaux_B(const std::vector<int> &ranks, int max_rows, int max_part) {
    SuiteResult r{"tableaux-B"};
    Timer timer(r);
    for (int n : ranks)
        for (const auto &s : shapes_in_box(max_rows, max_part)) check_tableau_sum(r, AlgType(Family::B, n), s, Ruleset::parse("B"));
    return r;
}

SuiteResult suite_tableaux_C(const std::vector<int> &ranks, int two_column_rank) {
    SuiteResult r{"tableaux-C"};
    Timer timer(r);
    for (int n : ranks) {
        AlgType t(Family::C, n);
        for (const auto &s : shapes_with_rows(2, 4)) check_tableau_sum(r, t, s, Ruleset::parse("HV+E-2R"));
        for (const auto &s : shapes_with_rows(3, 3)) check_tableau_sum(r, t, s, Ruleset::parse("HV+E-2R+E-3R"));
        for (const auto &s : shapes_one_column(n + 1)) check_tableau_sum(r, t, s, Ruleset::parse("HV+E-1C"));
    }
    if (two_column_rank > 0) {
        AlgType t(Family::C, two_column_rank);
        for (const auto &s : shapes_two_column(1, 4)) check_tableau_sum(r, t, s, Ruleset::parse("HV+E-2C"));
    }
    return r;
}

SuiteResult suite_two_column_e2c(int n, int len, int min_shapes) {
    SuiteResult r{"two-column-e2c"};
    Timer timer(r);
    AlgType t(Family::C, n);
    int mismatches = 0;
    for (const auto &s : shapes_two_column(len, len)) {
        ++r.checked;
        if (tableau_sum(t, s, 0, Ruleset::parse("HV+E-2C")) != chi_h(t, s, 0)) {
            ++mismatches;
            r.notes.push_back("mismatch at " + where(t, s));
        }
    }
    r.notes.push_back(std::to_string(r.checked) + " shapes checked, " + std::to_string(mismatches) + " mismatches");
    if (r.checked < min_shapes) r.fail("fewer than " + std::to_string(min_shapes) + " shapes available");
    return r;
}

namespace {

void check_bijection(SuiteResult &r, const AlgType &t, const SkewShape &s) {
    Ruleset base;
    base.base = t.family;
    TupleClass cls = t.family == Family::C ? TupleClass::PTilde : TupleClass::NoOrdinary;
    auto tabs = enumerate_tableaux(t, s, base);
    auto tuples = enumerate_tuples(t, s, cls);
    ++r.checked;
    if (tabs.size() != tuples.size()) {
        r.fail("cardinality mismatch for " + where(t, s));
        return;
    }
    for (const auto &T : tabs)
        if (path_tuple_to_tableau(t, tableau_to_path_tuple(t, T)) != T) r.fail("T -> p -> T differs for " + where(t, s) + " " + T.str());
    for (const auto &p : tuples)
        if (tableau_to_path_tuple(t, path_tuple_to_tableau(t, p)) != p) r.fail("p -> T -> p differs for " + where(t, s) + " " + p.str());
}

} // namespace

SuiteResult suite_bijection(int max_size_A, int max_rank_A, const std::vector<int> &ranks_BC, int two_column_rank) {
    SuiteResult r{"bijection"};
    Timer timer(r);
    for (int n = 1; n <= max_rank_A; ++n)
        for (const auto &s : shapes_up_to_size(max_size_A, n)) check_bijection(r, AlgType(Family::A, n), s);
    for (int n : ranks_BC) {
        for (const auto &s : shapes_in_box(3, 3)) check_bijection(r, AlgType(Family::B, n), s);
        AlgType c(Family::C, n);
        std::vector<SkewShape> cs = shapes_with_rows(2, 4);
        for (auto v : {shapes_with_rows(3, 3), shapes_one_column(n + 1)}) cs.insert(cs.end(), v.begin(), v.end());
        for (const auto &s : cs) check_bijection(r, c, s);
    }
    if (two_column_rank > 0)
        for (const auto &s : shapes_two_column(1, 4)) check_bijection(r, AlgType(Family::C, two_column_rank), s);
    return r;
}

SuiteResult suite_resolutions(int n, int max_part) {
    SuiteResult r{"resolutions"};
    Timer timer(r);
    AlgType t(Family::C, n);
    using Set = std::set<PathTuple>;
    auto same_weight = [&](const PathTuple &a, const PathTuple &b) { return tuple_monomial(t, a, 0) == tuple_monomial(t, b, 0); };
    for (const auto &s : shapes_with_rows(3, max_part)) {
        std::string at = where(t, s);
        auto all = enumerate_tuples(t, s, TupleClass::NoOrdinary);
        Set P0, P1_12, P1_23, P2x, P2o, Pt;
        for (const auto &p : all) {
            auto tp = transposed_pairs(t, p);
            if (tp.empty()) P0.insert(p);
            else if (tp.size() == 1 && tp[0] == std::make_pair(1, 2)) P1_12.insert(p);
            else if (tp.size() == 1 && tp[0] == std::make_pair(2, 3)) P1_23.insert(p);
            else if (tp.size() == 2) (in_P2_cross(t, p) ? P2x : P2o).insert(p);
            else r.fail("tuple outside P_0, P_1^12, P_1^23, P_2: " + p.str());
        }
        for (const auto &p : enumerate_tuples(t, s, TupleClass::PTilde)) Pt.insert(p);

        // r_y^{ij} and omega on every tuple of P
        for (const auto &p : all) {
            for (int y = 0; y < n; ++y)
                for (int i = 1; i <= 3; ++i)
                    for (int j = i + 1; j <= 3; ++j)
                        if (auto q = r_y_ij(t, p, i, j, y)) {
                            ++r.checked;
                            if (!same_weight(p, *q)) r.fail("r_" + std::to_string(y) + "^" + std::to_string(i) + std::to_string(j) + " changes weight: " + p.str());
                        }
            ++r.checked;
            if (omega(omega(p), s.lambda[1]) != p) r.fail("omega is not an involution: " + p.str());
        }

        // g: P_2^x -> P-tilde, Im g and P_0 partition P-tilde
        Set img_g;
        for (const auto &p : P2x) {
            ++r.checked;
            auto q = g_map(t, p);
            if (!q) { r.fail("g undefined on " + p.str()); continue; }
            if (!same_weight(p, *q)) r.fail("g changes weight: " + p.str());
            if (q->sign() != p.sign()) r.fail("g changes sign: " + p.str());
            if (!Pt.count(*q) || P0.count(*q)) r.fail("g leaves P-tilde minus P_0: " + p.str());
            if (!img_g.insert(*q).second) r.fail("g not injective at " + p.str());
        }
        ++r.checked;
        if (img_g.size() + P0.size() != Pt.size()) r.fail("|Im g| + |P_0| != |P-tilde| for " + at);

        // f_2 maps and their image characterizations
        Set i13, i23;
        for (const auto &p : P2o) {
            for (int which = 0; which < 2; ++which) {
                ++r.checked;
                auto q = which == 0 ? f2_13(t, p) : f2_23(t, p);
                const Set &cod = which == 0 ? P1_23 : P1_12;
                Set &img = which == 0 ? i13 : i23;
                std::string nm = which == 0 ? "f_2^13" : "f_2^23";
                if (!q) { r.fail(nm + " undefined on " + p.str()); continue; }
                if (!same_weight(p, *q)) r.fail(nm + " changes weight: " + p.str());
                if (q->sign() == p.sign()) r.fail(nm + " keeps sign: " + p.str());
                if (!cod.count(*q)) r.fail(nm + " leaves its codomain: " + p.str());
                if (!img.insert(*q).second) r.fail(nm + " not injective at " + p.str());
            }
        }
        for (const auto &p : P1_23) {
            ++r.checked;
            bool c = condition_F(t, p, FCondition::F2_13a) || condition_F(t, p, FCondition::F2_13b);
            if (c != (i13.count(p) > 0)) r.fail("Im f_2^13 characterization fails at " + p.str());
        }
        for (const auto &p : P1_12) {
            ++r.checked;
            bool c = condition_F(t, p, FCondition::F2_23a) || condition_F(t, p, FCondition::F2_23b);
            if (c != (i23.count(p) > 0)) r.fail("Im f_2^23 characterization fails at " + p.str());
        }

        // f_1 maps
        Set j12, j23;
        for (int which = 0; which < 2; ++which)
            for (const auto &p : which == 0 ? P1_12 : P1_23) {
                ++r.checked;
                auto q = which == 0 ? f1_12(t, p) : f1_23(t, p);
                Set &img = which == 0 ? j12 : j23;
                std::string nm = which == 0 ? "f_1^12" : "f_1^23";
                if (!q) { r.fail(nm + " undefined on " + p.str()); continue; }
                if (!same_weight(p, *q)) r.fail(nm + " changes weight: " + p.str());
                if (q->sign() == p.sign()) r.fail(nm + " keeps sign: " + p.str());
                if (!P0.count(*q)) r.fail(nm + " leaves P_0: " + p.str());
                if (!img.insert(*q).second) r.fail(nm + " not injective at " + p.str());
            }
        for (const auto &p : P0) {
            ++r.checked;
            bool c12 = condition_F(t, p, FCondition::F1_12a) || condition_F(t, p, FCondition::F1_12b1) ||
                       condition_F(t, p, FCondition::F1_12b2);
            bool c23 = condition_F(t, p, FCondition::F1_23a) || condition_F(t, p, FCondition::F1_23b1) ||
                       condition_F(t, p, FCondition::F1_23b2);
            if (c12 != (j12.count(p) > 0)) r.fail("Im f_1^12 characterization fails at " + p.str());
            if (c23 != (j23.count(p) > 0)) r.fail("Im f_1^23 characterization fails at " + p.str());
        }

        // Im f_1^12 cap Im f_1^23 = Im(f_1^23 f_2^13) = Im(f_1^12 f_2^23)
        Set cap, via13, via23;
        for (const auto &p : j12)
            if (j23.count(p)) cap.insert(p);
        for (const auto &p : P2o) {
            if (auto q = f2_13(t, p))
                if (auto w = f1_23(t, *q)) via13.insert(*w);
            if (auto q = f2_23(t, p))
                if (auto w = f1_12(t, *q)) via23.insert(*w);
        }
        ++r.checked;
        if (cap != via13 || via13 != via23) r.fail("image intersection identity fails for " + at);

        // on P-tilde: in Im f_1^12 or Im f_1^23 iff the tableau breaks E-2R or E-3R
        for (const auto &p : Pt) {
            ++r.checked;
            Tableau T = path_tuple_to_tableau(t, p);
            bool prohibited = !(extra_rule_2R(t, T) && extra_rule_3R(t, T));
            bool in_image = j12.count(p) || j23.count(p);
            if (prohibited != in_image) r.fail("extra-rule equivalence fails at " + p.str());
        }
    }
    return r;
}

SuiteResult suite_one_column_f1(int max_rank) {
    SuiteResult r{"one-column-f1"};
    Timer timer(r);
    long resolved = 0;
    for (int n = 1; n <= max_rank; ++n) {
        AlgType t(Family::C, n);
        for (const auto &s : shapes_one_column(n + 1)) {
            std::set<PathTuple> img, prohibited;
            for (const auto &p : enumerate_tuples(t, s, TupleClass::NoOrdinary)) {
                if (in_P(t, p, 0)) {
                    if (!extra_rule_1C(t, path_tuple_to_tableau(t, p))) prohibited.insert(p);
                    continue;
                }
                ++r.checked;
                auto q = f1_one_column(t, p);
                if (!q) { r.fail("f_1 undefined on " + p.str()); continue; }
                if (tuple_monomial(t, *q, 0) != tuple_monomial(t, p, 0)) r.fail("f_1 changes weight: " + p.str());
                if (q->sign() == p.sign()) r.fail("f_1 keeps sign: " + p.str());
                if (!img.insert(*q).second) r.fail("f_1 not injective at " + p.str());
            }
            ++r.checked;
            if (img != prohibited) r.fail("Im f_1 differs from the E-1C violations for " + where(t, s));
            resolved += static_cast<long>(img.size());
        }
    }
    r.notes.push_back(std::to_string(resolved) + " tuples with a transposed pair resolved");
    return r;
}

SuiteResult suite_classical(int max_size_A, int max_rank_A, int max_size_C, const std::vector<int> &ranks_C) {
    SuiteResult r{"classical"};
    Timer timer(r);
    for (int n = 1; n <= max_rank_A; ++n)
        for (int m = 0; m <= max_size_A; ++m)
            for (const auto &l : partitions_of(m)) {
                ++r.checked;
                if (!verify_decomposition_A(l, n).equal) r.fail("A" + std::to_string(n) + " decomposition fails for " + l.str());
            }
    for (int n : ranks_C)
        for (int m = 0; m <= max_size_C; ++m)
            for (const auto &l : partitions_of(m)) {
                if (l.length() > n) continue;
                ++r.checked;
                if (!verify_decomposition_C(l, n).equal) r.fail("C" + std::to_string(n) + " decomposition fails for " + l.str());
            }
    return r;
}

} // namespace qjt
