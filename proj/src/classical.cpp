#include "qjt/classical.hpp"

#include <functional>
#include <stdexcept>

#include "qjt/jacobitrudi.hpp"

namespace qjt {

long lr_coeff(const Partition &lambda, const Partition &mu, const Partition &nu) {
    if (!lambda.contains(mu) || lambda.size() != mu.size() + nu.size()) return 0;
    SkewShape s(lambda, mu);
    // reading order: rows top to bottom, each row right to left
    std::vector<Box> order;
    for (int i = 1; i <= s.rows(); ++i)
        for (int j = lambda[i]; j > mu[i]; --j) order.push_back({i, j});
    int k = nu.length();
    std::vector<int> used(k + 1, 0);
    Tableau T(s);
    long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == order.size()) {
            ++count;
            return;
        }
        auto [i, j] = order[idx];
        int hi = k, lo = 1;
        if (s.has(i, j + 1)) hi = std::min(hi, T.at(i, j + 1).v);
        if (s.has(i - 1, j)) lo = std::max(lo, T.at(i - 1, j).v + 1);
        for (int c = lo; c <= hi; ++c) {
            if (used[c] == nu[c]) continue;
            if (c > 1 && used[c] + 1 > used[c - 1]) continue; // lattice word
            ++used[c];
            T.at(i, j) = Letter(c);
            rec(idx + 1);
            --used[c];
        }
    };
    rec(0);
    return count;
}

ClassicalPoly sp_character(const Partition &mu, int n) {
    ClassicalPoly out(n);
    if (mu.length() > n) return out;
    SkewShape s(mu);
    // King order 1 < 1b < 2 < 2b < ...: letter k -> 2k-1, kb -> 2k
    std::vector<std::vector<int>> t(mu.length());
    for (int i = 1; i <= mu.length(); ++i) t[i - 1].assign(mu[i], 0);
    std::vector<Box> boxes = s.boxes();
    ClassicalPoly::Exps e(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == boxes.size()) {
            out.add_term(e, 1);
            return;
        }
        auto [i, j] = boxes[idx];
        int lo = 2 * i - 1;
        if (j > 1) lo = std::max(lo, t[i - 1][j - 2]);
        if (i > 1) lo = std::max(lo, t[i - 2][j - 1] + 1);
        for (int c = lo; c <= 2 * n; ++c) {
            int k = (c + 1) / 2, d = c % 2 == 1 ? 1 : -1;
            t[i - 1][j - 1] = c;
            e[k - 1] += d;
            rec(idx + 1);
            e[k - 1] -= d;
        }
    };
    rec(0);
    return out;
}

namespace {

ClassicalPoly complete_h(int k, int m) {
    ClassicalPoly out(m);
    if (k < 0) return out;
    ClassicalPoly::Exps e(m, 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == m - 1) {
            e[var] = left;
            out.add_term(e, 1);
            e[var] = 0;
            return;
        }
        for (int a = 0; a <= left; ++a) {
            e[var] = a;
            rec(var + 1, left - a);
        }
        e[var] = 0;
    };
    if (m == 0) return k == 0 ? ClassicalPoly::constant(0, 1) : out;
    rec(0, k);
    return out;
}

ClassicalPoly det(const std::vector<std::vector<ClassicalPoly>> &m, int nvars) {
    int sz = static_cast<int>(m.size());
    if (sz == 0) return ClassicalPoly::constant(nvars, 1);
    ClassicalPoly out(nvars);
    for (int c = 0; c < sz; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<ClassicalPoly>> minor;
        for (int r = 1; r < sz; ++r) {
            std::vector<ClassicalPoly> row;
            for (int cc = 0; cc < sz; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(row);
        }
        ClassicalPoly term = m[0][c] * det(minor, nvars);
        out += c % 2 == 0 ? term : term.scaled(-1);
    }
    return out;
}

} // namespace

ClassicalPoly schur_polynomial(const Partition &lambda, int m) {
    int l = lambda.length();
    std::vector<std::vector<ClassicalPoly>> mat(l, std::vector<ClassicalPoly>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) mat[i - 1][j - 1] = complete_h(lambda[i] - i + j, m);
    return det(mat, m);
}

ClassicalPoly z_to_y_C(const ClassicalPoly &p, int n) {
    std::vector<ClassicalPoly::Exps> images(n, ClassicalPoly::Exps(n, 0));
    for (int i = 1; i <= n; ++i) {
        images[i - 1][i - 1] = 1;
        if (i > 1) images[i - 1][i - 2] = -1;
    }
    return p.substitute(images, n);
}

ClassicalPoly z_to_y_A(const ClassicalPoly &p, int n) {
    std::vector<ClassicalPoly::Exps> images(n + 1, ClassicalPoly::Exps(n, 0));
    for (int i = 1; i <= n; ++i) {
        images[i - 1][i - 1] = 1;
        if (i > 1) images[i - 1][i - 2] = -1;
    }
    images[n][n - 1] = -1;
    return p.substitute(images, n);
}

nlohmann::json DecompositionReport::to_json() const {
    nlohmann::json ts = nlohmann::json::array();
    for (const auto &t : terms)
        ts.push_back({{"lambda", t.lambda.parts}, {"two_kappa", t.mu.parts}, {"mu", t.nu.parts}, {"coeff", t.coeff}});
    return {{"type", type.name()}, {"lambda", lambda.parts}, {"n", n},          {"equal", equal},
            {"lhs_terms", lhs.to_json()["terms"]}, {"rhs_terms", rhs.to_json()["terms"]}, {"lr", ts}};
}

DecompositionReport verify_decomposition_C(const Partition &lambda, int n) {
    if (lambda.length() > n) throw std::invalid_argument("verify_decomposition_C needs l(lambda) <= n");
    DecompositionReport r;
    r.lambda = lambda;
    r.n = n;
    r.type = AlgType(Family::C, n);
    r.lhs = beta(chi_h(r.type, SkewShape(lambda), 0), n);
    ClassicalPoly rhs(n);
    for (int size = 0; size <= lambda.size(); size += 2)
        for (const auto &kappa : partitions_of(size / 2)) {
            std::vector<int> twice;
            for (int k : kappa.parts) twice.push_back(2 * k);
            Partition two_kappa(twice);
            if (!lambda.contains(two_kappa)) continue;
            for (const auto &mu : partitions_of(lambda.size() - size)) {
                long c = lr_coeff(lambda, two_kappa, mu);
                if (c == 0) continue;
                r.terms.push_back({lambda, two_kappa, mu, c});
                rhs += sp_character(mu, n).scaled(c);
            }
        }
    r.rhs = z_to_y_C(rhs, n);
    r.equal = r.lhs == r.rhs;
    return r;
}

DecompositionReport verify_decomposition_A(const Partition &lambda, int n) {
    DecompositionReport r;
    r.lambda = lambda;
    r.n = n;
    r.type = AlgType(Family::A, n);
    r.lhs = beta(chi_h(r.type, SkewShape(lambda), 0), n);
    r.rhs = z_to_y_A(schur_polynomial(lambda, n + 1), n);
    r.equal = r.lhs == r.rhs;
    return r;
}

} // namespace qjt
