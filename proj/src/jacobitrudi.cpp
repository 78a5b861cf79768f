#include "qjt/jacobitrudi.hpp"

#include <stdexcept>
#include <unordered_map>

#include "qjt/series.hpp"

namespace qjt {

namespace {

// expansion along row k using the columns in mask; minors memoized per mask
struct Expander {
    const RingMatrix &m;
    std::size_t l;
    std::unordered_map<std::uint32_t, RingElem> memo;

    RingElem minor(std::size_t row, std::uint32_t mask) {
        if (row == l) return RingElem(1);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        RingElem acc;
        int sign = 1;
        for (std::size_t c = 0; c < l; ++c) {
            if (!(mask & (1u << c))) continue;
            if (!m[row][c].is_zero()) {
                RingElem sub = minor(row + 1, mask & ~(1u << c));
                if (!sub.is_zero()) {
                    RingElem p = m[row][c] * sub;
                    if (sign > 0) acc += p;
                    else acc -= p;
                }
            }
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    }
};

} // namespace

RingElem determinant(const RingMatrix &m) {
    std::size_t l = m.size();
    for (const auto &row : m)
        if (row.size() != l) throw std::invalid_argument("matrix is not square");
    if (l > 30) throw std::invalid_argument("matrix too large");
    Expander e{m, l, {}};
    return e.minor(0, l == 0 ? 0u : ((1u << l) - 1));
}

RingMatrix jt_matrix_h(const AlgType &t, const SkewShape &s, int a) {
    int l = std::max(s.lambda.length(), s.mu.length());
    int d = t.delta();
    RingMatrix m(l, std::vector<RingElem>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            m[i - 1][j - 1] = h_coeff(t, s.lambda[i] - s.mu[j] - i + j, a + 2 * (s.lambda[i] - i) * d);
    return m;
}

RingMatrix jt_matrix_e(const AlgType &t, const SkewShape &s, int a) {
    Partition lc = conjugate(s.lambda), mc = conjugate(s.mu);
    int l = std::max(lc.length(), mc.length());
    int d = t.delta();
    RingMatrix m(l, std::vector<RingElem>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            m[i - 1][j - 1] = e_coeff(t, lc[i] - mc[j] - i + j, a - 2 * (mc[j] - j + 1) * d);
    return m;
}

RingElem chi_h(const AlgType &t, const SkewShape &s, int a) { return determinant(jt_matrix_h(t, s, a)); }
RingElem chi_e(const AlgType &t, const SkewShape &s, int a) { return determinant(jt_matrix_e(t, s, a)); }

} // namespace qjt
