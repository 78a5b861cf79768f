#include "qjt/paths.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qjt {

Path::Path(Point start, std::string steps) : start_(start), end_(start), steps_(std::move(steps)) {
    lo_.push_back(start.x);
    hi_.push_back(start.x);
    for (char c : steps_) {
        if (c == 'E') {
            ++end_.x;
            hi_.back() = end_.x;
        } else if (c == 'N') {
            ++end_.y;
            lo_.push_back(end_.x);
            hi_.push_back(end_.x);
        } else {
            throw std::invalid_argument(std::string("bad step '") + c + "'");
        }
    }
}

std::optional<Point> Path::leftmost_at(int y) const {
    if (!covers_height(y)) return std::nullopt;
    return Point{lo(y), y};
}

std::optional<Point> Path::rightmost_at(int y) const {
    if (!covers_height(y)) return std::nullopt;
    return Point{hi(y), y};
}

std::string Path::segment(Point from, Point to) const {
    if (!contains(from) || !contains(to)) throw std::invalid_argument("segment endpoints not on path");
    int a = index_of(from), b = index_of(to);
    if (a > b) throw std::invalid_argument("segment endpoints out of order");
    return steps_.substr(a, b - a);
}

std::vector<Point> Path::points() const {
    std::vector<Point> pts{start_};
    Point p = start_;
    for (char c : steps_) {
        if (c == 'E') ++p.x;
        else ++p.y;
        pts.push_back(p);
    }
    return pts;
}

std::string Path::str() const { return start_.str() + ":" + steps_; }

Path Path::parse(const std::string &s) {
    int x, y;
    char rest[2];
    auto colon = s.find(':');
    if (colon == std::string::npos || std::sscanf(s.substr(0, colon).c_str(), "(%d,%d%1[)]", &x, &y, rest) != 3)
        throw std::invalid_argument("bad path: " + s);
    return Path({x, y}, s.substr(colon + 1));
}

int band_bottom(const AlgType &t) { return t.family == Family::A ? 0 : -t.rank; }
int band_top(const AlgType &t) { return t.rank; }

bool is_valid_hpath(const AlgType &t, const Path &p) {
    if (t.family == Family::D) return false;
    if (p.start().y != band_bottom(t) || p.end().y != band_top(t)) return false;
    if (t.family == Family::A) return true;
    int e0 = p.hi(0) - p.lo(0);
    if (t.family == Family::B) return e0 <= 1;
    return e0 % 2 == 0;
}

std::vector<LabeledStep> labeled_steps(const AlgType &t, const Path &p) {
    int n = t.rank;
    std::vector<LabeledStep> out;
    int x = p.start().x, y = p.start().y, zero_count = 0;
    for (char c : p.steps()) {
        if (c == 'N') {
            ++y;
            continue;
        }
        Letter l;
        if (t.family == Family::A) l = Letter::unbarred(y + 1);
        else if (y < 0) l = Letter::unbarred(n + 1 + y);
        else if (y > 0) l = Letter::barred(n + 1 - y);
        else if (t.family == Family::B) l = Letter::zero();
        else l = (zero_count++ % 2 == 0) ? Letter::barred(n) : Letter::unbarred(n);
        out.push_back({x, y, l});
        ++x;
    }
    return out;
}

Monomial path_monomial(const AlgType &t, const Path &p, int a) {
    Monomial m;
    int unit = 2 * t.delta();
    for (const auto &s : labeled_steps(t, p)) m = mono_mul(m, f_mono(t, s.label, a + unit * s.x));
    return m;
}

RingElem path_weight(const AlgType &t, const Path &p, int a) {
    if (!is_valid_hpath(t, p)) throw std::invalid_argument("invalid h-path " + p.str() + " for " + t.name());
    return RingElem::monomial(path_monomial(t, p, a));
}

std::vector<Path> enumerate_hpaths(const AlgType &t, Point from, Point to) {
    std::vector<Path> out;
    if (to.x < from.x || to.y < from.y) return out;
    if (from.y != band_bottom(t) || to.y != band_top(t)) return out;
    std::string cur;
    int ne = to.x - from.x, nn = to.y - from.y;
    // choose steps greedily with the height-0 constraint checked at the end
    std::function<void(int, int)> rec = [&](int e, int nsteps) {
        if (e == ne && nsteps == nn) {
            Path p(from, cur);
            if (is_valid_hpath(t, p)) out.push_back(std::move(p));
            return;
        }
        if (e < ne) {
            cur.push_back('E');
            rec(e + 1, nsteps);
            cur.pop_back();
        }
        if (nsteps < nn) {
            cur.push_back('N');
            rec(e, nsteps + 1);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

const char *pair_class_name(PairClass c) {
    switch (c) {
    case PairClass::Disjoint: return "disjoint";
    case PairClass::Special: return "specially";
    case PairClass::Ordinary: return "ordinarily";
    }
    return "?";
}

std::vector<Point> intersection_points(const Path &p, const Path &q) {
    std::vector<Point> out;
    int y0 = std::max(p.start().y, q.start().y), y1 = std::min(p.end().y, q.end().y);
    for (int y = y0; y <= y1; ++y)
        for (int x = std::max(p.lo(y), q.lo(y)); x <= std::min(p.hi(y), q.hi(y)); ++x) out.push_back({x, y});
    return out;
}

PairClass classify_pair(const AlgType &t, const Path &p, const Path &q) {
    int y0 = std::max(p.start().y, q.start().y), y1 = std::min(p.end().y, q.end().y);
    bool any = false, off_zero = false;
    for (int y = y0; y <= y1; ++y) {
        if (std::max(p.lo(y), q.lo(y)) <= std::min(p.hi(y), q.hi(y))) {
            any = true;
            if (y != 0) {
                off_zero = true;
                break;
            }
        }
    }
    if (!any) return PairClass::Disjoint;
    if (off_zero || t.family == Family::A) return PairClass::Ordinary;
    if (t.family == Family::B) return PairClass::Special;
    int bracket = std::abs(p.lo(0) - q.lo(0));
    return bracket % 2 == 1 ? PairClass::Special : PairClass::Ordinary;
}

bool is_transposed(const Path &p, const Path &q) {
    long d0 = p.start().x - q.start().x, d1 = p.end().x - q.end().x;
    return d0 * d1 < 0;
}

int PathTuple::sign() const {
    int s = 1;
    for (std::size_t i = 0; i < pi.size(); ++i)
        for (std::size_t j = i + 1; j < pi.size(); ++j)
            if (pi[i] > pi[j]) s = -s;
    return s;
}

std::string PathTuple::str() const {
    std::ostringstream os;
    os << "pi=(";
    for (std::size_t i = 0; i < pi.size(); ++i) os << (i ? "," : "") << pi[i] + 1;
    os << ")";
    for (std::size_t i = 0; i < paths.size(); ++i) os << " p" << i + 1 << "=" << paths[i].str();
    return os.str();
}

nlohmann::json PathTuple::to_json() const {
    nlohmann::json ps = nlohmann::json::array();
    for (const auto &p : paths) ps.push_back(p.str());
    std::vector<int> p1;
    for (int x : pi) p1.push_back(x + 1);
    return {{"lambda", shape.lambda.parts}, {"mu", shape.mu.parts}, {"pi", p1}, {"paths", ps}};
}

Point start_point(const AlgType &t, const SkewShape &s, int i) { return {s.mu[i] + 1 - i, band_bottom(t)}; }
Point end_point(const AlgType &t, const SkewShape &s, int i) { return {s.lambda[i] + 1 - i, band_top(t)}; }

Monomial tuple_monomial(const AlgType &t, const PathTuple &pt, int a) {
    Monomial m;
    for (const auto &p : pt.paths) m = mono_mul(m, path_monomial(t, p, a));
    return m;
}

RingElem tuple_weight(const AlgType &t, const PathTuple &pt, int a) { return RingElem::monomial(tuple_monomial(t, pt, a)); }

int count_transposed(const AlgType &t, const PathTuple &pt) {
    int k = 0;
    for (int i = 0; i < pt.size(); ++i)
        for (int j = i + 1; j < pt.size(); ++j)
            if (classify_pair(t, pt.paths[i], pt.paths[j]) != PairClass::Ordinary && is_transposed(pt.paths[i], pt.paths[j]))
                ++k;
    return k;
}

bool has_ordinary_pair(const AlgType &t, const PathTuple &pt) {
    for (int i = 0; i < pt.size(); ++i)
        for (int j = i + 1; j < pt.size(); ++j)
            if (classify_pair(t, pt.paths[i], pt.paths[j]) == PairClass::Ordinary) return true;
    return false;
}

bool in_p_tilde(const AlgType &t, const PathTuple &pt) {
    for (int i = 0; i + 1 < pt.size(); ++i) {
        const Path &p = pt.paths[i], &q = pt.paths[i + 1];
        if (classify_pair(t, p, q) == PairClass::Ordinary || is_transposed(p, q)) return false;
    }
    return true;
}

void for_each_tuple(const AlgType &t, const SkewShape &s, TupleClass cls, const std::function<void(const PathTuple &)> &fn,
                    int rows) {
    int l = rows < 0 ? s.rows() : rows;
    std::vector<Point> u(l), v(l);
    for (int i = 1; i <= l; ++i) {
        u[i - 1] = start_point(t, s, i);
        v[i - 1] = end_point(t, s, i);
    }
    std::map<std::pair<int, int>, std::vector<Path>> cache;
    auto paths_between = [&](int i, int j) -> const std::vector<Path> & {
        auto it = cache.find({i, j});
        if (it == cache.end()) it = cache.emplace(std::make_pair(i, j), enumerate_hpaths(t, u[i], v[j])).first;
        return it->second;
    };
    std::vector<int> pi(l);
    std::iota(pi.begin(), pi.end(), 0);
    PathTuple pt;
    pt.shape = s;
    pt.paths.resize(l);
    do {
        bool ok = true;
        for (int i = 0; i < l && ok; ++i)
            if (paths_between(i, pi[i]).empty()) ok = false;
        if (!ok) continue;
        pt.pi = pi;
        std::function<void(int)> rec = [&](int i) {
            if (i == l) {
                fn(pt);
                return;
            }
            for (const Path &p : paths_between(i, pi[i])) {
                bool good = true;
                if (cls == TupleClass::NoOrdinary) {
                    for (int k = 0; k < i && good; ++k)
                        if (classify_pair(t, pt.paths[k], p) == PairClass::Ordinary) good = false;
                } else if (cls == TupleClass::PTilde && i > 0) {
                    good = classify_pair(t, pt.paths[i - 1], p) != PairClass::Ordinary && !is_transposed(pt.paths[i - 1], p);
                }
                if (!good) continue;
                pt.paths[i] = p;
                rec(i + 1);
            }
        };
        rec(0);
        if (cls == TupleClass::PTilde) break; // adjacent non-transposed pairs force pi = id
    } while (std::next_permutation(pi.begin(), pi.end()));
}

std::vector<PathTuple> enumerate_tuples(const AlgType &t, const SkewShape &s, TupleClass cls, int rows) {
    std::vector<PathTuple> out;
    for_each_tuple(t, s, cls, [&](const PathTuple &pt) { out.push_back(pt); }, rows);
    return out;
}

namespace {

struct Accumulator {
    std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
    void add(Monomial m, int sign) {
        auto [it, fresh] = acc.try_emplace(std::move(m), sign);
        if (!fresh) it->second += sign;
    }
    RingElem result() {
        std::vector<RingElem::Term> raw;
        for (auto &kv : acc) raw.push_back({kv.first, kv.second});
        return RingElem::from_terms(std::move(raw));
    }
};

} // namespace

RingElem signed_path_sum(const AlgType &t, const SkewShape &s, int a) {
    if (t.family == Family::D) throw std::invalid_argument("no path model for type D");
    Accumulator acc;
    for_each_tuple(t, s, TupleClass::NoOrdinary, [&](const PathTuple &pt) {
        int sign = pt.sign();
        if (t.family == Family::C) {
            int k = count_transposed(t, pt);
            if ((k % 2 == 0 ? 1 : -1) != sign) throw std::logic_error("transposed count disagrees with sgn(pi): " + pt.str());
        }
        acc.add(tuple_monomial(t, pt, a), sign);
    });
    return acc.result();
}

RingElem full_signed_sum(const AlgType &t, const SkewShape &s, int a) {
    Accumulator acc;
    for_each_tuple(t, s, TupleClass::All, [&](const PathTuple &pt) { acc.add(tuple_monomial(t, pt, a), pt.sign()); });
    return acc.result();
}

std::vector<PathTuple> p_tilde(const AlgType &t, const SkewShape &s) {
    if (t.family != Family::C) throw std::invalid_argument("P-tilde is defined for type C");
    return enumerate_tuples(t, s, TupleClass::PTilde);
}

} // namespace qjt
