#include "qjt/series.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qjt {

Series::Series(int trunc, int delta_) : coeffs(trunc + 1), delta(delta_) {
    if (trunc < 0) throw std::invalid_argument("negative truncation");
}

Series Series::one(int trunc, int delta_) {
    Series s(trunc, delta_);
    s.coeffs[0] = RingElem(1);
    return s;
}

Series Series::operator*(const Series &o) const {
    int N = std::min(trunc(), o.trunc());
    Series r(N, delta);
    for (int i = 0; i <= N; ++i) {
        if (coeffs[i].is_zero()) continue;
        for (int j = 0; i + j <= N; ++j) {
            if (o.coeffs[j].is_zero()) continue;
            r.coeffs[i + j] += coeffs[i] * shift_spectral(o.coeffs[j], -2 * delta * i);
        }
    }
    return r;
}

bool Series::is_one() const {
    if (coeffs.empty() || !(coeffs[0] == RingElem(1))) return false;
    for (int k = 1; k <= trunc(); ++k)
        if (!coeffs[k].is_zero()) return false;
    return true;
}

Series poly_factor(const RingElem &q, int d, long c, int trunc, int delta) {
    Series s = Series::one(trunc, delta);
    if (d <= trunc) s.coeffs[d] = q.scaled(c);
    return s;
}

Series geom_inverse(const RingElem &q, int d, int trunc, int delta) {
    Series s = Series::one(trunc, delta);
    RingElem cur(1);
    for (int k = 1; k * d <= trunc; ++k) {
        // (q X^d)^k = q (X^d q X^-d) ... , each factor shifted by -2 delta d
        cur = cur * shift_spectral(q, -2 * delta * d * (k - 1));
        s.coeffs[k * d] = cur;
    }
    return s;
}

namespace {

RingElem z(const AlgType &t, Letter c, int shift = 0) { return f_hom(t, {c, shift}); }

// z_{c1,a} X z_{c2,a} X = z_{c1,a} z_{c2,a-2 delta} X^2
RingElem quad(const AlgType &t, Letter c1, Letter c2) { return z(t, c1) * z(t, c2, -2 * t.delta()); }

} // namespace

Series E_series(const AlgType &t, int trunc) {
    int n = t.rank, d = t.delta();
    Series s = Series::one(trunc, d);
    auto U = [](int k) { return Letter::unbarred(k); };
    auto B = [](int k) { return Letter::barred(k); };
    if (t.family == Family::A) {
        for (int k = 1; k <= n + 1; ++k) s = s * poly_factor(z(t, U(k)), 1, 1, trunc, d);
        return s;
    }
    for (int k = 1; k <= n; ++k) s = s * poly_factor(z(t, U(k)), 1, 1, trunc, d);
    if (t.family == Family::B) s = s * geom_inverse(z(t, Letter::zero()), 1, trunc, d);
    if (t.family == Family::C) s = s * poly_factor(quad(t, U(n), B(n)), 2, -1, trunc, d);
    if (t.family == Family::D) s = s * geom_inverse(quad(t, B(n), U(n)), 2, trunc, d);
    for (int k = n; k >= 1; --k) s = s * poly_factor(z(t, B(k)), 1, 1, trunc, d);
    return s;
}

Series H_series(const AlgType &t, int trunc) {
    int n = t.rank, d = t.delta();
    Series s = Series::one(trunc, d);
    auto U = [](int k) { return Letter::unbarred(k); };
    auto B = [](int k) { return Letter::barred(k); };
    if (t.family == Family::A) {
        for (int k = n + 1; k >= 1; --k) s = s * geom_inverse(z(t, U(k)), 1, trunc, d);
        return s;
    }
    for (int k = 1; k <= n; ++k) s = s * geom_inverse(z(t, B(k)), 1, trunc, d);
    if (t.family == Family::B) s = s * poly_factor(z(t, Letter::zero()), 1, 1, trunc, d);
    if (t.family == Family::C) s = s * geom_inverse(quad(t, U(n), B(n)), 2, trunc, d);
    if (t.family == Family::D) s = s * poly_factor(quad(t, B(n), U(n)), 2, -1, trunc, d);
    for (int k = n; k >= 1; --k) s = s * geom_inverse(z(t, U(k)), 1, trunc, d);
    return s;
}

Series negate_X(const Series &s) {
    Series r = s;
    for (int k = 1; k <= r.trunc(); k += 2) r.coeffs[k] = -r.coeffs[k];
    return r;
}

namespace {

struct MemoKey {
    int family, rank;
    bool operator<(const MemoKey &o) const { return std::tie(family, rank) < std::tie(o.family, o.rank); }
};

std::mutex memo_mutex;
std::map<MemoKey, Series> h_memo, e_memo;

RingElem memo_coeff(std::map<MemoKey, Series> &memo, Series (*build)(const AlgType &, int), const AlgType &t, int r) {
    MemoKey key{static_cast<int>(t.family), t.rank};
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it == memo.end() || it->second.trunc() < r) {
        int trunc = std::max(r, it == memo.end() ? 8 : 2 * it->second.trunc());
        it = memo.insert_or_assign(key, build(t, trunc)).first;
    }
    return it->second[r];
}

} // namespace

RingElem h_coeff(const AlgType &t, int r, int offset) {
    if (r < 0) return {};
    if (r == 0) return RingElem(1);
    return shift_spectral(memo_coeff(h_memo, H_series, t, r), offset);
}

RingElem e_coeff(const AlgType &t, int r, int offset) {
    if (r < 0) return {};
    if (r == 0) return RingElem(1);
    return shift_spectral(memo_coeff(e_memo, E_series, t, r), offset);
}

bool check_HE(const AlgType &t, int trunc) {
    Series H = H_series(t, trunc);
    Series Em = negate_X(E_series(t, trunc));
    return (H * Em).is_one() && (Em * H).is_one();
}

} // namespace qjt
