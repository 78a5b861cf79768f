#include "qjt/resolutions.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "qjt/tableaux.hpp"

namespace qjt {

namespace {

// builds a path piece by piece; any illegal move poisons the result
class Splice {
public:
    explicit Splice(Point s) : start_(s), cur_(s) {}

    Splice &along(const Path &p, Point q) {
        if (!ok_) return *this;
        if (!p.contains(cur_) || !p.contains(q) || p.index_of(q) < p.index_of(cur_)) {
            ok_ = false;
            return *this;
        }
        steps_ += p.segment(cur_, q);
        cur_ = q;
        return *this;
    }
    Splice &to_end(const Path &p) { return along(p, p.end()); }
    Splice &to(Point q) {
        if (!ok_) return *this;
        if (q.x == cur_.x && q.y >= cur_.y) steps_.append(q.y - cur_.y, 'N');
        else if (q.y == cur_.y && q.x >= cur_.x) steps_.append(q.x - cur_.x, 'E');
        else ok_ = false;
        cur_ = q;
        return *this;
    }
    std::optional<Path> done() const {
        if (!ok_) return std::nullopt;
        return Path(start_, steps_);
    }

private:
    Point start_, cur_;
    std::string steps_;
    bool ok_ = true;
};

bool on(const Path &p, const std::optional<Point> &q) { return q && p.contains(*q); }

void require_C(const AlgType &t) {
    if (t.family != Family::C) throw std::invalid_argument("resolution maps are defined for type C");
}

void record(Trace *trace, ResolutionStep::Kind k, int i = 0, int j = 0, int y = 0) {
    if (trace) trace->push_back({k, i, j, y});
}

std::optional<Point> leftmost_intersection(const Path &p, const Path &q) {
    auto pts = intersection_points(p, q);
    if (pts.empty()) return std::nullopt;
    return *std::min_element(pts.begin(), pts.end(), [](Point a, Point b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); });
}

std::optional<Point> rightmost_intersection(const Path &p, const Path &q) {
    auto pts = intersection_points(p, q);
    if (pts.empty()) return std::nullopt;
    return *std::max_element(pts.begin(), pts.end(), [](Point a, Point b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); });
}

int lambda1_of(const PathTuple &pt) { return pt.shape.lambda[1]; }

} // namespace

std::string ResolutionStep::str() const {
    auto ij = std::to_string(i) + std::to_string(j);
    switch (kind) {
    case Kind::RY: return "r_" + std::to_string(y) + "^" + ij;
    case Kind::Omega: return "omega";
    case Kind::G: return "g";
    case Kind::F1_12: return "f_1^12";
    case Kind::F1_23: return "f_1^23";
    case Kind::F2_13: return "f_2^13";
    case Kind::F2_23: return "f_2^23";
    case Kind::F1Generic: return "f_1";
    }
    return "?";
}

bool on_tuple(const PathTuple &pt, Point q) {
    return std::any_of(pt.paths.begin(), pt.paths.end(), [&](const Path &p) { return p.contains(q); });
}

namespace {

// the splice of r_y without checking (R_y); y = 0 with transposed uses the exchanging form
std::optional<std::pair<Path, Path>> splice_r(const AlgType &t, const Path &p1, const Path &p2, int y, bool transposed) {
    std::optional<Path> a, b;
    if (y == 0 && transposed) {
        auto u = leftmost_intersection(p1, p2), v = rightmost_intersection(p1, p2);
        if (!u || !v) return std::nullopt;
        a = Splice(p1.start()).along(p1, *u - Point{0, 1}).to(*v + Point{1, -1}).to(*v + Point{1, 0}).to_end(p2).done();
        b = Splice(p2.start()).along(p2, *u - Point{1, 0}).to(*u + Point{-1, 1}).to(*v + Point{0, 1}).to_end(p1).done();
    } else {
        auto w1 = p1.leftmost_at(-y), w2 = p2.rightmost_at(y);
        if (!w1 || !w2) return std::nullopt;
        Point w1s = *w1 + Point{-y - 1, 2 * y}, w2s = *w2 + Point{y + 1, -2 * y};
        if (!p2.contains(w1s) || !p1.contains(w2s)) return std::nullopt;
        a = Splice(p1.start()).along(p1, *w1 - Point{0, 1}).to(w2s - Point{0, 1}).to(w2s).to_end(p1).done();
        b = Splice(p2.start()).along(p2, w1s).to(w1s + Point{0, 1}).to(*w2 + Point{0, 1}).to_end(p2).done();
    }
    if (!a || !b || !is_valid_hpath(t, *a) || !is_valid_hpath(t, *b)) return std::nullopt;
    return std::make_pair(*a, *b);
}

PathTuple replace_pair(const PathTuple &pt, int i, int j, const std::pair<Path, Path> &r) {
    PathTuple out = pt;
    out.paths[i - 1] = r.first;
    out.paths[j - 1] = r.second;
    if (r.first.end() != pt.paths[i - 1].end()) std::swap(out.pi[i - 1], out.pi[j - 1]);
    return out;
}

} // namespace

std::optional<std::pair<Path, Path>> r_y(const AlgType &t, const Path &p1, const Path &p2, int y) {
    require_C(t);
    if (y < 0 || y >= t.rank) return std::nullopt;
    if (y == 0 && classify_pair(t, p1, p2) != PairClass::Special) return std::nullopt;
    return splice_r(t, p1, p2, y, y == 0 && is_transposed(p1, p2));
}

bool condition_R(const AlgType &t, const Path &p1, const Path &p2, int y) { return r_y(t, p1, p2, y).has_value(); }

std::optional<PathTuple> r_y_ij(const AlgType &t, const PathTuple &pt, int i, int j, int y, Trace *trace) {
    if (i < 1 || j <= i || j > pt.size()) throw std::invalid_argument("r_y^{ij} needs 1 <= i < j <= l");
    const Path &p = pt.paths[i - 1], &q = pt.paths[j - 1];
    auto r = r_y(t, p, q, y);
    if (!r) return std::nullopt;
    record(trace, ResolutionStep::Kind::RY, i, j, y);
    return replace_pair(pt, i, j, *r);
}

PathTuple omega(const PathTuple &pt, int N) {
    int l = pt.size();
    if (N < lambda1_of(pt)) throw std::invalid_argument("omega: N must be at least lambda_1");
    int twox = N - l + 1;
    std::vector<int> lam(l), mu(l);
    for (int k = 1; k <= l; ++k) {
        lam[k - 1] = N - pt.shape.mu[l + 1 - k];
        mu[k - 1] = N - pt.shape.lambda[l + 1 - k];
    }
    PathTuple out;
    out.shape = SkewShape(Partition(lam), Partition(mu));
    out.paths.resize(l);
    out.pi.resize(l);
    for (int i = 0; i < l; ++i) {
        const Path &p = pt.paths[i];
        std::string steps(p.steps().rbegin(), p.steps().rend());
        int j = l - 1 - pt.pi[i];
        out.paths[j] = Path({twox - p.end().x, -p.end().y}, steps);
        out.pi[j] = l - 1 - i;
    }
    return out;
}

PathTuple omega(const PathTuple &pt) { return omega(pt, lambda1_of(pt)); }

std::vector<std::pair<int, int>> transposed_pairs(const AlgType &t, const PathTuple &pt) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < pt.size(); ++i)
        for (int j = i + 1; j < pt.size(); ++j)
            if (is_transposed(pt.paths[i], pt.paths[j]) && classify_pair(t, pt.paths[i], pt.paths[j]) != PairClass::Ordinary)
                out.push_back({i + 1, j + 1});
    return out;
}

bool in_P(const AlgType &t, const PathTuple &pt, int k) {
    return !has_ordinary_pair(t, pt) && static_cast<int>(transposed_pairs(t, pt).size()) == k;
}

bool in_P1_ij(const AlgType &t, const PathTuple &pt, int i, int j) {
    if (has_ordinary_pair(t, pt)) return false;
    auto tp = transposed_pairs(t, pt);
    return tp.size() == 1 && tp[0] == std::make_pair(i, j);
}

bool in_P2_cross(const AlgType &t, const PathTuple &pt) {
    if (pt.size() != 3 || !in_P(t, pt, 2)) return false;
    auto u = leftmost_intersection(pt.paths[0], pt.paths[2]);
    auto v = rightmost_intersection(pt.paths[1], pt.paths[2]);
    if (!u || !v) return false;
    return on_tuple(pt, *u + Point{-1, 1}) && on_tuple(pt, *v + Point{1, -1});
}

bool in_P2_circ(const AlgType &t, const PathTuple &pt) { return pt.size() == 3 && in_P(t, pt, 2) && !in_P2_cross(t, pt); }

std::optional<PathTuple> g_map(const AlgType &t, const PathTuple &pt, Trace *trace) {
    require_C(t);
    if (!in_P2_cross(t, pt)) return std::nullopt;
    const Path &p1 = pt.paths[0], &p2 = pt.paths[1], &p3 = pt.paths[2];
    Point u = *leftmost_intersection(p1, p3), v = *rightmost_intersection(p2, p3);
    Point u1 = u + Point{-1, 1}, v1 = v + Point{1, -1};
    auto q1 = Splice(p1.start()).along(p1, v1).to(v1 + Point{0, 1}).to_end(p3).done();
    auto q2 = Splice(p2.start()).along(p2, v).to(u).to_end(p1).done();
    auto q3 = Splice(p3.start()).along(p3, u1 - Point{0, 1}).to(u1).to_end(p2).done();
    if (!q1 || !q2 || !q3) return std::nullopt;
    PathTuple out = pt;
    out.paths = {*q1, *q2, *q3};
    out.pi = {pt.pi[2], pt.pi[0], pt.pi[1]};
    record(trace, ResolutionStep::Kind::G);
    return out;
}

std::optional<PathTuple> f2_13(const AlgType &t, const PathTuple &pt, Trace *trace) {
    require_C(t);
    if (!in_P2_circ(t, pt)) return std::nullopt;
    Point u = *leftmost_intersection(pt.paths[0], pt.paths[2]);
    Trace local;
    auto p1 = r_y_ij(t, pt, 1, 3, 0, &local);
    if (!p1) return std::nullopt;
    if (on_tuple(pt, u + Point{-1, 1})) {
        p1 = r_y_ij(t, *p1, 1, 2, 1, &local);
        if (!p1) return std::nullopt;
    }
    if (trace) {
        record(trace, ResolutionStep::Kind::F2_13);
        trace->insert(trace->end(), local.begin(), local.end());
    }
    return p1;
}

std::optional<PathTuple> f1_12(const AlgType &t, const PathTuple &pt, Trace *trace) {
    require_C(t);
    if (pt.size() != 3 || !in_P1_ij(t, pt, 1, 2)) return std::nullopt;
    const Path &p1 = pt.paths[0], &p3 = pt.paths[2];
    auto w1 = p1.leftmost_at(-1);
    Point u = *leftmost_intersection(p1, pt.paths[1]);
    Trace local;
    auto q = r_y_ij(t, pt, 1, 2, 0, &local);
    if (!q) return std::nullopt;
    if (on_tuple(pt, u + Point{-1, 1})) {
        if (!(w1 && p3.contains(*w1 + Point{-2, 2}))) {
            // (R_0) is required of the original (p_2, p_3); the splice acts on (p'_2, p'_3)
            if (!condition_R(t, pt.paths[1], p3, 0)) return std::nullopt;
            auto r = splice_r(t, q->paths[1], q->paths[2], 0, false);
            if (!r) return std::nullopt;
            record(&local, ResolutionStep::Kind::RY, 2, 3, 0);
            q = replace_pair(*q, 2, 3, *r);
        }
        q = r_y_ij(t, *q, 1, 3, 1, &local);
        if (!q) return std::nullopt;
    }
    if (trace) {
        record(trace, ResolutionStep::Kind::F1_12);
        trace->insert(trace->end(), local.begin(), local.end());
    }
    return q;
}

namespace {

// conjugate a three-row map by omega, keeping the rotation centre fixed
template <class F>
std::optional<PathTuple> conjugated(const PathTuple &pt, F f, Trace *trace, ResolutionStep::Kind kind) {
    int N = lambda1_of(pt);
    Trace local;
    auto r = f(omega(pt, N), trace ? &local : nullptr);
    if (!r) return std::nullopt;
    PathTuple back = omega(*r, N);
    back.shape = pt.shape;
    if (trace) {
        record(trace, kind);
        record(trace, ResolutionStep::Kind::Omega);
        trace->insert(trace->end(), local.begin(), local.end());
        record(trace, ResolutionStep::Kind::Omega);
    }
    return back;
}

} // namespace

std::optional<PathTuple> f2_23(const AlgType &t, const PathTuple &pt, Trace *trace) {
    if (pt.size() != 3) return std::nullopt;
    return conjugated(pt, [&](const PathTuple &p, Trace *tr) { return f2_13(t, p, tr); }, trace, ResolutionStep::Kind::F2_23);
}

std::optional<PathTuple> f1_23(const AlgType &t, const PathTuple &pt, Trace *trace) {
    if (pt.size() != 3) return std::nullopt;
    return conjugated(pt, [&](const PathTuple &p, Trace *tr) { return f1_12(t, p, tr); }, trace, ResolutionStep::Kind::F1_23);
}

const char *fcondition_name(FCondition c) {
    switch (c) {
    case FCondition::F2_13a: return "F2_13-a";
    case FCondition::F2_13b: return "F2_13-b";
    case FCondition::F2_23a: return "F2_23-a";
    case FCondition::F2_23b: return "F2_23-b";
    case FCondition::F1_12a: return "F1_12-a";
    case FCondition::F1_12b: return "F1_12-b";
    case FCondition::F1_12b1: return "F1_12-b1";
    case FCondition::F1_12b2: return "F1_12-b2";
    case FCondition::F1_23a: return "F1_23-a";
    case FCondition::F1_23b: return "F1_23-b";
    case FCondition::F1_23b1: return "F1_23-b1";
    case FCondition::F1_23b2: return "F1_23-b2";
    }
    return "?";
}

std::optional<FCondition> parse_fcondition(const std::string &s) {
    for (int c = 0; c <= static_cast<int>(FCondition::F1_23b2); ++c)
        if (s == fcondition_name(static_cast<FCondition>(c))) return static_cast<FCondition>(c);
    return std::nullopt;
}

namespace {

struct FPoints {
    bool a = false, b = false;
    std::optional<Point> s3;
};

// s_1 on x, s_2 and s_4 on p1, s_3 on y; k counts steps of x between s_1 and s'_2
FPoints f_points(const Path &p1, const Path &x, const Path &y) {
    auto s1 = x.leftmost_at(1), s2 = p1.rightmost_at(-1), s3 = y.leftmost_at(2), s4 = p1.rightmost_at(-2);
    auto prime = [](std::optional<Point> s) -> std::optional<Point> {
        if (!s) return std::nullopt;
        return *s + Point{s->y, -2 * s->y};
    };
    auto s1p = prime(s1), s2p = prime(s2), s3p = prime(s3), s4p = prime(s4);
    bool k_odd = false;
    if (s1 && on(x, s2p)) k_odd = std::abs(x.index_of(*s2p) - x.index_of(*s1)) % 2 == 1;
    bool s1_on = on(p1, s1p);
    FPoints f;
    f.a = s1_on && k_odd;
    f.b = !s1_on && k_odd && on(p1, s3p) && on(y, s4p);
    f.s3 = s3;
    return f;
}

bool f1_12_variant(const PathTuple &pt, int variant) {
    const Path &p1 = pt.paths[0], &p2 = pt.paths[1], &p3 = pt.paths[2];
    FPoints f = f_points(p1, p2, p3);
    if (variant == 0) return f.a;
    if (variant == 1) return f.b;
    if (!f.b) return false;
    bool s3pp_on = on(p2, f.s3 ? std::optional<Point>(*f.s3 + Point{2, -3}) : std::nullopt);
    if (variant == 2) return !s3pp_on;
    auto tt = p3.leftmost_at(1);
    auto u = p2.rightmost_at(-1);
    if (!tt || !u || !s3pp_on) return false;
    Point tp = *tt + Point{1, -2};
    if (!p2.contains(tp)) return false;
    return std::abs(p2.index_of(*u) - p2.index_of(tp)) % 2 == 0;
}

} // namespace

bool condition_F(const AlgType &t, const PathTuple &pt, FCondition c) {
    require_C(t);
    if (pt.size() != 3) return false;
    switch (c) {
    case FCondition::F2_13a: return f_points(pt.paths[0], pt.paths[2], pt.paths[1]).a;
    case FCondition::F2_13b: return f_points(pt.paths[0], pt.paths[2], pt.paths[1]).b;
    case FCondition::F2_23a: return condition_F(t, omega(pt), FCondition::F2_13a);
    case FCondition::F2_23b: return condition_F(t, omega(pt), FCondition::F2_13b);
    case FCondition::F1_12a: return f1_12_variant(pt, 0);
    case FCondition::F1_12b: return f1_12_variant(pt, 1);
    case FCondition::F1_12b1: return f1_12_variant(pt, 2);
    case FCondition::F1_12b2: return f1_12_variant(pt, 3);
    case FCondition::F1_23a: return f1_12_variant(omega(pt), 0);
    case FCondition::F1_23b: return f1_12_variant(omega(pt), 1);
    case FCondition::F1_23b1: return f1_12_variant(omega(pt), 2);
    case FCondition::F1_23b2: return f1_12_variant(omega(pt), 3);
    }
    return false;
}

std::optional<PathTuple> f1_one_column(const AlgType &t, const PathTuple &pt, Trace *trace) {
    require_C(t);
    int l = pt.size(), n = t.rank;
    if (pt.shape.lambda[1] > 1 || l > n + 1 || !in_P(t, pt, 1)) return std::nullopt;
    auto [i0, j0] = transposed_pairs(t, pt).front();
    Trace local;
    auto cur = r_y_ij(t, pt, i0, j0, 0, &local);
    if (!cur) return std::nullopt;
    for (int guard = 0; has_ordinary_pair(t, *cur); ++guard) {
        if (guard > l * l) return std::nullopt;
        std::optional<PathTuple> next;
        // smallest y first, then the largest i; r_y can act as the identity, which is skipped
        for (int y = 0; y < n && !next; ++y)
            for (int i = l - y - 1; i >= 1 && !next; --i) {
                int j = i + y + 1;
                auto cand = r_y_ij(t, *cur, i, j, y);
                if (cand && cand->paths != cur->paths) {
                    record(&local, ResolutionStep::Kind::RY, i, j, y);
                    next = std::move(cand);
                }
            }
        if (!next) return std::nullopt;
        cur = next;
    }
    if (!in_P(t, *cur, 0)) return std::nullopt;
    if (trace) {
        record(trace, ResolutionStep::Kind::F1Generic);
        trace->insert(trace->end(), local.begin(), local.end());
    }
    return cur;
}

const std::map<std::vector<Letter>, std::vector<Letter>> &d_table(int n, int l) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::map<std::vector<Letter>, std::vector<Letter>>> memo;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, l);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    AlgType t{Family::C, n};
    std::map<std::vector<Letter>, std::vector<Letter>> table;
    if (l >= 1 && l <= n + 1) {
        SkewShape s(Partition(std::vector<int>(l, 1)));
        for_each_tuple(t, s, TupleClass::NoOrdinary, [&](const PathTuple &pt) {
            if (!in_P(t, pt, 1)) return;
            auto img = f1_one_column(t, pt);
            if (!img) return;
            std::vector<Letter> column, d;
            for (const auto &row : path_tuple_to_tableau(t, *img).rows) column.push_back(row.at(0));
            for (const Path &p : pt.paths) {
                int e = p.num_east();
                if (e == 0) d.push_back(Letter::barred(n));
                else if (e == 2) d.push_back(Letter::unbarred(n));
                else d.push_back(labeled_steps(t, p).front().label);
            }
            table.emplace(std::move(column), std::move(d));
        });
    }
    return memo.emplace(key, std::move(table)).first->second;
}

std::map<std::vector<Letter>, std::vector<Letter>> d_blocks(int n, int l) {
    std::map<std::vector<Letter>, std::vector<Letter>> out;
    for (const auto &[col, d] : d_table(n, l)) {
        if (col.front() != Letter(n + 2 - l) || col.back() != Letter(-(n + 2 - l))) continue;
        bool minimal = true;
        for (int a = 0; a < l && minimal; ++a)
            for (int b = a + 1; b < l && minimal; ++b) {
                if (a == 0 && b == l - 1) continue;
                if (d_table(n, b - a + 1).count({col.begin() + a, col.begin() + b + 1})) minimal = false;
            }
        if (minimal) out.emplace(col, d);
    }
    return out;
}

std::optional<std::vector<Letter>> d_vector(int n, const std::vector<Letter> &column) {
    const auto &table = d_table(n, static_cast<int>(column.size()));
    auto it = table.find(column);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

} // namespace qjt
