// One PASS/FAIL line per acceptance criterion; exit status is nonzero if a gating criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qjt/jacobitrudi.hpp"
#include "qjt/resolutions.hpp"
#include "qjt/series.hpp"
#include "qjt/verify.hpp"

using namespace qjt;

namespace {

int failed_gating = 0;

void report(int id, const std::string &what, const SuiteResult &r, bool gating = true) {
    std::printf("criterion %2d: %s  %s (%ld checks, %.1f s)%s\n", id, r.passed ? "PASS" : "FAIL", what.c_str(), r.checked, r.seconds,
                gating ? "" : " [non-gating]");
    for (const auto &n : r.notes) std::printf("    note: %s\n", n.c_str());
    for (const auto &f : r.failures) std::printf("    counterexample: %s\n", f.c_str());
    std::fflush(stdout);
    if (gating && !r.passed) ++failed_gating;
}

std::vector<Letter> col(int n, std::initializer_list<int> offsets) {
    // k > 0 means the letter n+1-k, k < 0 its bar
    std::vector<Letter> out;
    for (int k : offsets) out.push_back(k > 0 ? Letter(n + 1 - k) : Letter(-(n + 1 + k)));
    return out;
}

std::map<std::vector<Letter>, std::vector<Letter>> expected_blocks(int n, int l) {
    // letters written as offsets: 1 = n, 2 = n-1, 3 = n-2, negative = barred
    std::vector<std::pair<std::vector<Letter>, std::vector<Letter>>> rows = {
        {col(n, {1, -1}), col(n, {-1, 1})},
        {col(n, {2, 1, -2}), col(n, {1, -1, 1})},
        {col(n, {2, -1, -2}), col(n, {-1, 1, -1})},
        {col(n, {3, 2, 1, -3}), col(n, {2, 1, -1, 1})},
        {col(n, {3, 2, -1, -3}), col(n, {2, -1, 1, -1})},
        {col(n, {3, 2, -2, -3}), col(n, {1, -1, 1, -1})},
        {col(n, {3, 1, -2, -3}), col(n, {1, -1, 1, -2})},
        {col(n, {3, -1, -2, -3}), col(n, {-1, 1, -1, -2})},
    };
    std::map<std::vector<Letter>, std::vector<Letter>> out;
    for (auto &[c, d] : rows)
        if (static_cast<int>(c.size()) == l) out.emplace(c, d);
    return out;
}

SuiteResult pinned_values() {
    SuiteResult r("pinned");
    auto t0 = std::chrono::steady_clock::now();
    AlgType c2(Family::C, 2);
    ++r.checked;
    if (chi_h(c2, SkewShape(Partition({3, 1}), Partition({2})), 2) != h_coeff(c2, 1, 0) * h_coeff(c2, 1, 6))
        r.fail("C2 chi_{(3,1)/(2),a+2} != h_{1,a} h_{1,a+6}");
    for (int n = 1; n <= 4; ++n) {
        std::map<Family, long> want = {{Family::A, n + 1}, {Family::B, 2 * n + 1}, {Family::C, 2 * n}};
        for (auto [f, w] : want) {
            AlgType t(f, n);
            RingElem x = chi_h(t, SkewShape(Partition({1})), 0);
            ++r.checked;
            if (static_cast<long>(x.size()) != w || x.coefficient_sum() != w)
                r.fail(t.name() + " chi_{(1)} has " + std::to_string(x.size()) + " monomials, expected " + std::to_string(w));
        }
    }
    for (int n = 3; n <= 5; ++n)
        for (int l = 2; l <= 4; ++l) {
            ++r.checked;
            if (d_blocks(n, l) != expected_blocks(n, l))
                r.fail("d-vectors of C" + std::to_string(n) + " blocks of length " + std::to_string(l) + " differ from the table");
        }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace

int main() {
    const std::vector<Family> abc = {Family::A, Family::B, Family::C};
    report(1, "H(X) E(-X) = 1 up to X^8, types A-D, n <= 3", suite_he(3, 8));
    report(2, "chi_h = chi_e on 25 seeded random shapes per type A/B/C and n = 2, 3", suite_det(abc, {2, 3}, 25, 4, 4, 20240607));
    report(3, "signed path sum = chi_h, l(lambda), lambda_1 <= 3, A/B/C, n = 2, 3", suite_paths(abc, {2, 3}, 3, 3));
    report(4, "type A tableau sum = chi_h, |lambda| <= 8, depth <= n <= 3", suite_tableaux_A(8, 3));
    report(5, "type B tableau sum = chi_h, l(lambda), lambda_1 <= 3, n = 2, 3", suite_tableaux_B({2, 3}, 3, 3));
    report(6, "type C tableau sums with extra rules on the covered shape classes", suite_tableaux_C({2, 3}, 3));
    report(7, "two-column E-2C sums, l(lambda) = 5, n = 4", suite_two_column_e2c(4, 5, 5), false);
    report(8, "tableau <-> path tuple round trip on the shapes of criteria 4-6", suite_bijection(8, 3, {2, 3}, 3));
    report(9, "resolution maps on 3-row shapes, lambda_1 <= 3, n = 2", suite_resolutions(2, 3));
    report(10, "pinned values: C2 product, chi_(1) monomial counts, d-vector table", pinned_values());
    report(11, "classical decompositions, A: |lambda| <= 5, n <= 3; C: |lambda| <= 4, n = 2, 3",
           suite_classical(5, 3, 4, {2, 3}));
    std::printf("%s\n", failed_gating == 0 ? "ALL GATING CRITERIA PASS" : "SOME GATING CRITERIA FAIL");
    return failed_gating == 0 ? 0 : 1;
}
