#include "qjt/tableaux.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "qjt/resolutions.hpp"

namespace qjt {

std::string Ruleset::str() const {
    if (base == Family::A) return "A";
    if (base == Family::B) return "B";
    std::string s = "HV";
    if (e2r) s += "+E-2R";
    if (e3r) s += "+E-3R";
    if (e1c) s += "+E-1C";
    if (e2c) s += "+E-2C";
    return s;
}

Ruleset Ruleset::parse(const std::string &s) {
    Ruleset r;
    std::stringstream ss(s);
    std::string part;
    bool first = true;
    while (std::getline(ss, part, '+')) {
        if (first) {
            if (part == "A") r.base = Family::A;
            else if (part == "B") r.base = Family::B;
            else if (part == "HV" || part == "C") r.base = Family::C;
            else throw std::invalid_argument("bad ruleset: " + s);
            first = false;
            continue;
        }
        if (r.base != Family::C) throw std::invalid_argument("extra rules apply to HV only: " + s);
        if (part == "E-2R") r.e2r = true;
        else if (part == "E-3R") r.e3r = true;
        else if (part == "E-1C") r.e1c = true;
        else if (part == "E-2C") r.e2c = true;
        else throw std::invalid_argument("bad extra rule: " + part);
    }
    if (first) throw std::invalid_argument("empty ruleset");
    return r;
}

Ruleset default_ruleset(const AlgType &t, const SkewShape &s) {
    Ruleset r;
    r.base = t.family;
    if (t.family == Family::D) throw std::invalid_argument("no tableau rules for type D");
    if (t.family != Family::C) return r;
    int cols = s.lambda[1];
    if (cols <= 1) r.e1c = true;
    else if (cols == 2) r.e2c = true;
    else if (s.rows() <= 2) r.e2r = true;
    else {
        r.e2r = true;
        r.e3r = true;
    }
    return r;
}

bool covered_shape(const AlgType &t, const SkewShape &s) {
    if (t.family == Family::A || t.family == Family::B) return true;
    if (t.family != Family::C) return false;
    if (s.rows() <= 3) return true;
    return s.lambda[1] <= 2 && s.rows() <= 4 && s.rows() <= t.rank + 1;
}

RingElem tableau_weight(const AlgType &t, const Tableau &T, int a) {
    Monomial m;
    int d = t.delta();
    for (auto [i, j] : T.shape.boxes()) m = mono_mul(m, f_mono(t, T.at(i, j), a + 2 * (j - i) * d));
    return RingElem::monomial(m);
}

namespace {

// checks every rule between (i,j) and boxes before it in row-major order
bool local_ok(const AlgType &t, const Tableau &T, Family base, int i, int j) {
    const SkewShape &s = T.shape;
    Letter c = T.at(i, j);
    int n = t.rank;
    Letter N = Letter::unbarred(n), NB = Letter::barred(n);
    if (s.has(i, j - 1)) {
        Letter l = T.at(i, j - 1);
        switch (base) {
        case Family::A:
            if (l.v > c.v) return false;
            break;
        case Family::B:
            if (precedes(t, c, l) || (l.is_zero() && c.is_zero())) return false;
            break;
        default:
            if (precedes(t, c, l) && !(l == NB && c == N)) return false;
            if (s.has(i, j - 2) && T.at(i, j - 2) == NB && c == N && (l == NB || l == N)) return false;
            break;
        }
    }
    if (s.has(i - 1, j)) {
        Letter up = T.at(i - 1, j);
        switch (base) {
        case Family::A:
            if (up.v >= c.v) return false;
            break;
        case Family::B:
            if (!precedes(t, up, c) && !(up.is_zero() && c.is_zero())) return false;
            break;
        default:
            if (!precedes(t, up, c)) {
                bool ok_n = up == N && c == N && s.has(i, j - 1) && T.at(i, j - 1) == NB;
                bool ok_nb = up == NB && c == NB && s.has(i - 1, j + 1) && T.at(i - 1, j + 1) == N;
                if (!ok_n && !ok_nb) return false;
            }
            break;
        }
    }
    return true;
}

bool valid_with(const AlgType &t, const Tableau &T, Family base) {
    for (auto [i, j] : T.shape.boxes()) {
        if (!in_alphabet(t, T.at(i, j))) return false;
        if (!local_ok(t, T, base, i, j)) return false;
    }
    return true;
}

} // namespace

bool is_valid_A(const AlgType &t, const Tableau &T) { return t.family == Family::A && valid_with(t, T, Family::A); }
bool is_valid_B(const AlgType &t, const Tableau &T) { return t.family == Family::B && valid_with(t, T, Family::B); }
bool is_valid_HV_C(const AlgType &t, const Tableau &T) { return t.family == Family::C && valid_with(t, T, Family::C); }

bool extra_rule_2R(const AlgType &t, const Tableau &T) {
    int n = t.rank;
    Letter N = Letter::unbarred(n), NB = Letter::barred(n);
    const SkewShape &s = T.shape;
    auto block_col = [&](int i, int j) { return s.has(i, j) && s.has(i + 1, j) && T.at(i, j) == N && T.at(i + 1, j) == NB; };
    for (int i = 1; i < s.rows(); ++i) {
        for (int j1 = 1; j1 <= s.lambda[i]; ++j1) {
            for (int j2 = j1; block_col(i, j2); ++j2) {
                if ((j2 - j1 + 1) % 2 == 0) continue;
                bool right = s.has(i, j2 + 1) && T.at(i, j2 + 1) == N;
                bool left = s.has(i + 1, j1 - 1) && T.at(i + 1, j1 - 1) == NB;
                if (!right && !left) return false;
            }
        }
    }
    return true;
}

namespace {

// a column of a three-row template; v == INT_MIN marks a row outside the template
constexpr int FREE = -1000000;
struct TCol {
    int top, mid, bot;
};

bool col_matches(const Tableau &T, int i, int j, const TCol &c) {
    const int want[3] = {c.top, c.mid, c.bot};
    for (int r = 0; r < 3; ++r) {
        if (want[r] == FREE) continue;
        if (!T.has(i + r, j) || T.at(i + r, j).v != want[r]) return false;
    }
    return true;
}

bool cols_match(const Tableau &T, int i, int j0, const std::vector<TCol> &cols) {
    for (std::size_t k = 0; k < cols.size(); ++k)
        if (!col_matches(T, i, j0 + static_cast<int>(k), cols[k])) return false;
    return true;
}

} // namespace

bool extra_rule_3R(const AlgType &t, const Tableau &T) {
    int n = t.rank;
    if (n < 2) return true;
    const SkewShape &s = T.shape;
    const int N = n, NB = -n, M = n - 1, MB = -(n - 1);
    const TCol c1{FREE, N, NB}, c2{M, N, MB}, c3a{M, NB, MB}, c3b{M, N, MB}, c4{M, NB, MB}, c5{N, NB, FREE};
    const TCol head32{FREE, NB, NB}, tail33{N, N, FREE};
    int width = s.lambda[1];
    auto lt = [&](Letter a, Letter b) { return precedes(t, a, b); };
    for (int i = 1; i + 2 <= s.rows(); ++i) {
        for (int j0 = 1; j0 <= width; ++j0) {
            int room = width - j0 + 1;
            for (int k1 = 0; k1 <= room; ++k1)
                for (int k2 = 0; k1 + k2 <= room; ++k2)
                    for (int k3 = 0; k1 + k2 + 2 * k3 <= room; ++k3)
                        for (int k4 = 0; k1 + k2 + 2 * k3 + k4 <= room; ++k4)
                            for (int k5 = 0; k1 + k2 + 2 * k3 + k4 + k5 <= room; ++k5) {
                                auto build_mid = [&](std::vector<TCol> &v) {
                                    for (int q = 0; q < k3; ++q) {
                                        v.push_back(c3a);
                                        v.push_back(c3b);
                                    }
                                    v.insert(v.end(), k4, c4);
                                    v.insert(v.end(), k5, c5);
                                };
                                // arr-3-1
                                if ((k1 + k2 + k4 + k5) % 2 == 1 && (k2 != 0 || k4 != 0)) {
                                    std::vector<TCol> cols(k1, c1);
                                    cols.insert(cols.end(), k2, c2);
                                    build_mid(cols);
                                    if (cols_match(T, i, j0, cols)) {
                                        int jr = j0 + static_cast<int>(cols.size()) - 1;
                                        bool a_ok = T.has(i, jr + 1) && lt(T.at(i, jr + 1), T.at(i + 1, jr));
                                        bool b_ok = T.has(i + 2, j0 - 1) && lt(T.at(i + 1, j0), T.at(i + 2, j0 - 1));
                                        if (!a_ok && !b_ok) return false;
                                    }
                                }
                                // arr-3-2: head column then (n-1,n,n-1b); k1, k2 unused
                                if (k1 == 0 && k2 == 0 && (k4 + k5) % 2 == 1 && k4 != 0) {
                                    std::vector<TCol> cols{head32, c2};
                                    build_mid(cols);
                                    if (static_cast<int>(cols.size()) <= room && cols_match(T, i, j0, cols)) {
                                        int jr = j0 + static_cast<int>(cols.size()) - 1;
                                        bool a_ok = T.has(i, jr + 1) && lt(T.at(i, jr + 1), T.at(i + 1, jr));
                                        if (!a_ok) return false;
                                    }
                                }
                                // arr-3-3: k1, k2, pairs, then (n-1,nb,n-1b) and (n,n,.); k4, k5 unused
                                if (k4 == 0 && k5 == 0 && (k1 + k2) % 2 == 1 && k2 != 0) {
                                    std::vector<TCol> cols(k1, c1);
                                    cols.insert(cols.end(), k2, c2);
                                    for (int q = 0; q < k3; ++q) {
                                        cols.push_back(c3a);
                                        cols.push_back(c3b);
                                    }
                                    cols.push_back(c4);
                                    cols.push_back(tail33);
                                    if (static_cast<int>(cols.size()) <= room && cols_match(T, i, j0, cols)) {
                                        bool b_ok = T.has(i + 2, j0 - 1) && lt(T.at(i + 1, j0), T.at(i + 2, j0 - 1));
                                        if (!b_ok) return false;
                                    }
                                }
                            }
        }
    }
    return true;
}

namespace {

bool segment_violates_1C(const AlgType &t, const std::vector<Letter> &seg) {
    int l = static_cast<int>(seg.size());
    if (l < 2) return false;
    Letter c = seg.front();
    if (c.is_barred() || c.is_zero() || !(seg.back() == c.bar())) return false;
    return l - 1 > t.rank - c.k();
}

std::vector<Letter> column_segment(const Tableau &T, int j, int r1, int r2) {
    std::vector<Letter> seg;
    for (int r = r1; r <= r2; ++r) seg.push_back(T.at(r, j));
    return seg;
}

// maximal runs of rows in column j
std::vector<std::pair<int, int>> column_runs(const SkewShape &s, int j) {
    std::vector<std::pair<int, int>> runs;
    for (int i = 1; i <= s.rows(); ++i) {
        if (!s.has(i, j)) continue;
        if (!runs.empty() && runs.back().second == i - 1) runs.back().second = i;
        else runs.push_back({i, i});
    }
    return runs;
}

} // namespace

bool extra_rule_1C(const AlgType &t, const Tableau &T) {
    const SkewShape &s = T.shape;
    for (int j = 1; j <= s.lambda[1]; ++j)
        for (auto [lo, hi] : column_runs(s, j))
            for (int r1 = lo; r1 <= hi; ++r1)
                for (int r2 = r1 + 1; r2 <= hi; ++r2)
                    if (segment_violates_1C(t, column_segment(T, j, r1, r2))) return false;
    return true;
}

bool extra_rule_2C(const AlgType &t, const Tableau &T) {
    int n = t.rank;
    const SkewShape &s = T.shape;
    for (int j = 1; j <= s.lambda[1]; ++j)
        for (auto [lo, hi] : column_runs(s, j))
            for (int r1 = lo; r1 <= hi; ++r1)
                for (int r2 = r1 + 1; r2 <= hi; ++r2) {
                    int l = r2 - r1 + 1;
                    int c = n + 2 - l;
                    if (c < 1) continue;
                    auto seg = column_segment(T, j, r1, r2);
                    if (!(seg.front() == Letter::unbarred(c)) || !(seg.back() == Letter::barred(c))) continue;
                    int k = 0;
                    while (k < l && !seg[k].is_barred()) ++k;
                    bool split = k >= 1 && k < l;
                    for (int q = k; q < l && split; ++q)
                        if (!seg[q].is_barred()) split = false;
                    if (!split) continue;
                    bool proper_ok = true;
                    for (int a = 0; a < l && proper_ok; ++a)
                        for (int b = a + 1; b < l && proper_ok; ++b)
                            if (!(a == 0 && b == l - 1) && segment_violates_1C(t, {seg.begin() + a, seg.begin() + b + 1}))
                                proper_ok = false;
                    if (!proper_ok) continue;
                    auto d = d_vector(n, seg);
                    if (!d) continue;
                    bool allowed = false;
                    for (int q = 1; q <= l && !allowed; ++q) {
                        int row = r1 + q - 1;
                        if (q <= k && s.has(row, j + 1) && precedes(t, T.at(row, j + 1), (*d)[q - 1])) allowed = true;
                        if (q > k && s.has(row, j - 1) && precedes(t, (*d)[q - 1], T.at(row, j - 1))) allowed = true;
                    }
                    if (!allowed) return false;
                }
    return true;
}

bool satisfies(const AlgType &t, const Tableau &T, const Ruleset &r) {
    if (r.base != t.family) return false;
    if (!valid_with(t, T, r.base)) return false;
    if (r.e2r && !extra_rule_2R(t, T)) return false;
    if (r.e3r && !extra_rule_3R(t, T)) return false;
    if (r.e1c && !extra_rule_1C(t, T)) return false;
    if (r.e2c && !extra_rule_2C(t, T)) return false;
    return true;
}

void for_each_tableau(const AlgType &t, const SkewShape &s, const Ruleset &r, const std::function<void(const Tableau &)> &fn) {
    if (r.base != t.family) throw std::invalid_argument("ruleset " + r.str() + " does not match type " + t.name());
    std::vector<Box> boxes = s.boxes();
    std::vector<Letter> letters = alphabet(t);
    Tableau T(s);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == boxes.size()) {
            if ((!r.e2r || extra_rule_2R(t, T)) && (!r.e3r || extra_rule_3R(t, T)) && (!r.e1c || extra_rule_1C(t, T)) &&
                (!r.e2c || extra_rule_2C(t, T)))
                fn(T);
            return;
        }
        auto [i, j] = boxes[k];
        for (Letter c : letters) {
            T.at(i, j) = c;
            if (local_ok(t, T, r.base, i, j)) rec(k + 1);
        }
    };
    rec(0);
}

std::vector<Tableau> enumerate_tableaux(const AlgType &t, const SkewShape &s, const Ruleset &r) {
    std::vector<Tableau> out;
    for_each_tableau(t, s, r, [&](const Tableau &T) { out.push_back(T); });
    return out;
}

RingElem tableau_sum(const AlgType &t, const SkewShape &s, int a, const Ruleset &r) {
    std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
    for_each_tableau(t, s, r, [&](const Tableau &T) {
        auto w = tableau_weight(t, T, a);
        auto [it, fresh] = acc.try_emplace(w.terms()[0].first, 1);
        if (!fresh) it->second += 1;
    });
    std::vector<RingElem::Term> raw;
    for (auto &kv : acc) raw.push_back({kv.first, kv.second});
    return RingElem::from_terms(std::move(raw));
}

std::vector<int> row_heights(const AlgType &t, const std::vector<Letter> &row) {
    int n = t.rank;
    std::vector<int> h(row.size());
    for (std::size_t q = 0; q < row.size(); ++q) {
        Letter c = row[q];
        if (!in_alphabet(t, c)) throw std::invalid_argument("letter outside alphabet");
        if (t.family == Family::A) h[q] = c.v - 1;
        else if (c.is_zero()) h[q] = 0;
        else if (!c.is_barred()) h[q] = c.k() - n - 1;
        else h[q] = n + 1 - c.k();
    }
    if (t.family == Family::C) {
        // n and nb may also sit at height 0, as consecutive (nb, n) pairs
        std::size_t q = 0;
        while (q < row.size() && !(row[q] == Letter::barred(n))) ++q;
        while (q + 1 < row.size() && row[q] == Letter::barred(n) && row[q + 1] == Letter::unbarred(n)) {
            h[q] = h[q + 1] = 0;
            q += 2;
        }
    }
    for (std::size_t q = 1; q < h.size(); ++q)
        if (h[q] < h[q - 1]) throw std::invalid_argument("row is not spelled by an h-path");
    return h;
}

Tableau path_tuple_to_tableau(const AlgType &t, const PathTuple &pt) {
    for (int i = 0; i < pt.size(); ++i)
        if (pt.pi[i] != i) throw std::invalid_argument("tuple has a nontrivial permutation");
    Tableau T(pt.shape);
    for (int i = 1; i <= pt.size(); ++i)
        for (const auto &st : labeled_steps(t, pt.paths[i - 1])) T.at(i, st.x + i) = st.label;
    return T;
}

PathTuple tableau_to_path_tuple(const AlgType &t, const Tableau &T) {
    PathTuple pt;
    pt.shape = T.shape;
    int top = band_top(t);
    for (int i = 1; i <= T.shape.rows(); ++i) {
        Point u = start_point(t, T.shape, i);
        auto h = row_heights(t, T.rows[i - 1]);
        std::string steps;
        int y = u.y;
        for (int hq : h) {
            steps.append(hq - y, 'N');
            y = hq;
            steps.push_back('E');
        }
        steps.append(top - y, 'N');
        pt.paths.emplace_back(u, steps);
        pt.pi.push_back(i - 1);
    }
    return pt;
}

} // namespace qjt
