#include "qjt/ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qjt {

AlgType::AlgType(Family f, int n) : family(f), rank(n) {
    if (n < 1 || (f == Family::D && n < 2))
        throw std::invalid_argument("rank out of range for " + name());
}

std::string AlgType::name() const {
    static const char *names[] = {"A", "B", "C", "D"};
    return std::string(names[static_cast<int>(family)]) + std::to_string(rank);
}

AlgType AlgType::parse(const std::string &family, int rank) {
    if (family.size() != 1)
        throw std::invalid_argument("bad type: " + family);
    switch (family[0]) {
    case 'A': case 'a': return {Family::A, rank};
    case 'B': case 'b': return {Family::B, rank};
    case 'C': case 'c': return {Family::C, rank};
    case 'D': case 'd': return {Family::D, rank};
    }
    throw std::invalid_argument("bad type: " + family);
}

std::string Letter::str() const {
    if (v == 0) return "0";
    if (v < 0) return std::to_string(-v) + "b";
    return std::to_string(v);
}

Letter Letter::parse(const std::string &s) {
    if (s.empty()) throw std::invalid_argument("empty letter");
    bool has_bar = s.back() == 'b';
    std::string digits = has_bar ? s.substr(0, s.size() - 1) : s;
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
        throw std::invalid_argument("bad letter: " + s);
    int k = std::stoi(digits);
    if (k == 0) {
        if (has_bar) throw std::invalid_argument("bad letter: " + s);
        return zero();
    }
    return has_bar ? barred(k) : unbarred(k);
}

bool in_alphabet(const AlgType &t, Letter c) {
    int n = t.rank;
    switch (t.family) {
    case Family::A: return c.v >= 1 && c.v <= n + 1;
    case Family::B: return c.k() <= n;
    case Family::C:
    case Family::D: return c.v != 0 && c.k() <= n;
    }
    return false;
}

int order_key(const AlgType &t, Letter c) {
    if (!c.is_barred()) return c.v == 0 ? t.rank + 1 : c.v;
    return 2 * t.rank + 2 - c.k();
}

std::vector<Letter> alphabet(const AlgType &t) {
    std::vector<Letter> out;
    int n = t.rank;
    if (t.family == Family::A) {
        for (int k = 1; k <= n + 1; ++k) out.push_back(Letter::unbarred(k));
        return out;
    }
    for (int k = 1; k <= n; ++k) out.push_back(Letter::unbarred(k));
    if (t.family == Family::B) out.push_back(Letter::zero());
    for (int k = n; k >= 1; --k) out.push_back(Letter::barred(k));
    return out;
}

// ---- monomials ----

Monomial mono_mul(const Monomial &a, const Monomial &b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && std::tie(a[i].i, a[i].s) < std::tie(b[j].i, b[j].s))) {
            r.push_back(a[i++]);
        } else if (i == a.size() || std::tie(b[j].i, b[j].s) < std::tie(a[i].i, a[i].s)) {
            r.push_back(b[j++]);
        } else {
            int e = a[i].e + b[j].e;
            if (e != 0) r.push_back({a[i].i, a[i].s, e});
            ++i, ++j;
        }
    }
    return r;
}

Monomial mono_shift(const Monomial &a, int d) {
    Monomial r = a;
    for (auto &f : r) f.s += d;
    return r;
}

Monomial mono_inv(const Monomial &a) {
    Monomial r = a;
    for (auto &f : r) f.e = -f.e;
    return r;
}

std::size_t MonomialHash::operator()(const Monomial &m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (const auto &f : m) {
        std::uint64_t x = (std::uint64_t(std::uint32_t(f.i)) << 40) ^ (std::uint64_t(std::uint32_t(f.s)) << 16) ^
                          std::uint64_t(std::uint16_t(f.e));
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

// ---- ring elements ----

RingElem::RingElem(long c) {
    if (c != 0) terms_.push_back({Monomial{}, mpz_class(c)});
}

RingElem RingElem::monomial(Monomial m, mpz_class c) {
    RingElem r;
    if (c != 0) r.terms_.push_back({std::move(m), std::move(c)});
    return r;
}

RingElem RingElem::Y(int i, int s, int e) {
    if (e == 0) return RingElem(1);
    return monomial(Monomial{{i, s, e}});
}

RingElem RingElem::from_terms(std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(), [](const Term &x, const Term &y) { return x.first < y.first; });
    RingElem r;
    for (auto &t : raw) {
        if (!r.terms_.empty() && r.terms_.back().first == t.first) {
            r.terms_.back().second += t.second;
            if (r.terms_.back().second == 0) r.terms_.pop_back();
        } else if (t.second != 0) {
            r.terms_.push_back(std::move(t));
        }
    }
    return r;
}

mpz_class RingElem::coefficient_sum() const {
    mpz_class s = 0;
    for (const auto &t : terms_) s += t.second;
    return s;
}

RingElem RingElem::operator-() const {
    RingElem r = *this;
    for (auto &t : r.terms_) t.second = -t.second;
    return r;
}

RingElem &RingElem::operator+=(const RingElem &o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            out.push_back(o.terms_[j++]);
        } else {
            mpz_class c = terms_[i].second + o.terms_[j].second;
            if (c != 0) out.push_back({std::move(terms_[i].first), c});
            ++i, ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

RingElem &RingElem::operator-=(const RingElem &o) { return *this += -o; }

RingElem operator*(const RingElem &a, const RingElem &b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    if (a.terms_.size() == 1 && a.terms_[0].first.empty()) return b.scaled(a.terms_[0].second);
    if (b.terms_.size() == 1 && b.terms_[0].first.empty()) return a.scaled(b.terms_[0].second);
    std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto &x : a.terms_)
        for (const auto &y : b.terms_) {
            auto [it, fresh] = acc.try_emplace(mono_mul(x.first, y.first), x.second * y.second);
            if (!fresh) it->second += x.second * y.second;
        }
    std::vector<RingElem::Term> raw;
    raw.reserve(acc.size());
    for (auto &kv : acc)
        if (kv.second != 0) raw.push_back({kv.first, std::move(kv.second)});
    return RingElem::from_terms(std::move(raw));
}

RingElem RingElem::scaled(const mpz_class &c) const {
    if (c == 0) return {};
    RingElem r = *this;
    for (auto &t : r.terms_) t.second *= c;
    return r;
}

std::string RingElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        mpz_class a = abs(c);
        os << a.get_str();
        for (const auto &f : m) {
            os << " * Y[" << f.i << "," << f.s << "]";
            if (f.e != 1) os << "^" << f.e;
        }
    }
    return os.str();
}

nlohmann::json RingElem::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[m, c] : terms_) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto &f : m) factors.push_back({{"i", f.i}, {"s", f.s}, {"e", f.e}});
        terms.push_back({{"coef", c.get_str()}, {"factors", factors}});
    }
    return {{"terms", terms}};
}

RingElem RingElem::from_json(const nlohmann::json &j) {
    std::vector<Term> raw;
    for (const auto &t : j.at("terms")) {
        Monomial m;
        for (const auto &f : t.at("factors")) m.push_back({f.at("i").get<int>(), f.at("s").get<int>(), f.at("e").get<int>()});
        std::sort(m.begin(), m.end());
        const auto &c = t.at("coef");
        raw.push_back({m, c.is_string() ? mpz_class(c.get<std::string>()) : mpz_class(c.get<long>())});
    }
    return from_terms(std::move(raw));
}

RingElem shift_spectral(const RingElem &e, int d) {
    if (d == 0) return e;
    std::vector<RingElem::Term> raw;
    raw.reserve(e.size());
    for (const auto &[m, c] : e.terms()) raw.push_back({mono_shift(m, d), c});
    // shifting preserves the order of monomials with the same index pattern, but not in general
    return RingElem::from_terms(std::move(raw));
}

// ---- f and g ----

namespace {

struct MonoBuilder {
    int rank;
    Monomial m;
    void add(int i, int s, int e) {
        if (i < 1 || i > rank) return;
        m = mono_mul(m, Monomial{{i, s, e}});
    }
};

} // namespace

Monomial f_mono(const AlgType &t, Letter c, int a) {
    if (!in_alphabet(t, c)) throw std::invalid_argument("letter " + c.str() + " not in alphabet of " + t.name());
    int n = t.rank;
    int i = c.k();
    MonoBuilder b{n, {}};
    switch (t.family) {
    case Family::A:
        b.add(i, a + i - 1, 1);
        b.add(i - 1, a + i, -1);
        break;
    case Family::B:
        if (c.is_zero()) {
            Monomial m;
            for (int k = 1; k <= n; ++k) {
                m = mono_mul(m, f_mono(t, Letter::unbarred(k), a + 4 * n - 4 * k));
                m = mono_mul(m, f_mono(t, Letter::barred(k), a - 4 * n + 4 * k));
            }
            return m;
        }
        if (!c.is_barred()) {
            if (i < n) {
                b.add(i, a + 2 * i - 2, 1);
                b.add(i - 1, a + 2 * i, -1);
            } else {
                b.add(n, a + 2 * n - 3, 1);
                b.add(n, a + 2 * n - 1, 1);
                b.add(n - 1, a + 2 * n, -1);
            }
        } else {
            if (i < n) {
                b.add(i - 1, a + 4 * n - 2 * i - 2, 1);
                b.add(i, a + 4 * n - 2 * i, -1);
            } else {
                b.add(n - 1, a + 2 * n - 2, 1);
                b.add(n, a + 2 * n - 1, -1);
                b.add(n, a + 2 * n + 1, -1);
            }
        }
        break;
    case Family::C:
        if (!c.is_barred()) {
            b.add(i, a + i - 1, 1);
            b.add(i - 1, a + i, -1);
        } else {
            b.add(i - 1, a + 2 * n - i + 2, 1);
            b.add(i, a + 2 * n - i + 3, -1);
        }
        break;
    case Family::D:
        if (!c.is_barred()) {
            if (i <= n - 2) {
                b.add(i, a + i - 1, 1);
                b.add(i - 1, a + i, -1);
            } else if (i == n - 1) {
                b.add(n, a + n - 2, 1);
                b.add(n - 1, a + n - 2, 1);
                b.add(n - 2, a + n - 1, -1);
            } else {
                b.add(n, a + n - 2, 1);
                b.add(n - 1, a + n, -1);
            }
        } else {
            if (i <= n - 2) {
                b.add(i - 1, a + 2 * n - i - 2, 1);
                b.add(i, a + 2 * n - i - 1, -1);
            } else if (i == n - 1) {
                b.add(n - 2, a + n - 1, 1);
                b.add(n - 1, a + n, -1);
                b.add(n, a + n, -1);
            } else {
                b.add(n - 1, a + n - 2, 1);
                b.add(n, a + n, -1);
            }
        }
        break;
    }
    return b.m;
}

RingElem f_hom(const AlgType &t, const ZVar &v) { return RingElem::monomial(f_mono(t, v.letter, v.shift)); }

RingElem f_word(const AlgType &t, const ZWord &w) {
    Monomial m;
    for (const auto &z : w) m = mono_mul(m, f_mono(t, z.letter, z.shift));
    return RingElem::monomial(m);
}

ZWord g_word(const AlgType &t, int i, int a, int e) {
    int n = t.rank;
    if (i < 1 || i > n) throw std::invalid_argument("Y index out of range");
    if (e != 1 && e != -1) throw std::invalid_argument("exponent must be +1 or -1");
    ZWord w;
    auto U = [](int k) { return Letter::unbarred(k); };
    auto B = [](int k) { return Letter::barred(k); };
    switch (t.family) {
    case Family::A:
        if (e > 0)
            for (int k = 1; k <= i; ++k) w.push_back({U(k), a + i - 2 * k + 1});
        else
            for (int k = i + 1; k <= n + 1; ++k) w.push_back({U(k), a + i - 2 * k + 1});
        break;
    case Family::B:
        if (i == n) throw std::invalid_argument("B: Y_n only through the composite generator");
        for (int k = 1; k <= i; ++k) {
            if (e > 0) w.push_back({U(k), a + 2 * i - 4 * k + 2});
            else w.push_back({B(k), a - 4 * n - 2 * i + 4 * k});
        }
        break;
    case Family::C:
        for (int k = 1; k <= i; ++k) {
            if (e > 0) w.push_back({U(k), a + i - 2 * k + 1});
            else w.push_back({B(k), a - 2 * n - i + 2 * k - 3});
        }
        break;
    case Family::D:
        if (i >= n - 1) throw std::invalid_argument("D: Y_{n-1}, Y_n only through composite generators");
        for (int k = 1; k <= i; ++k) {
            if (e > 0) w.push_back({U(k), a + i - 2 * k + 1});
            else w.push_back({B(k), a - 2 * n - i + 2 * k + 1});
        }
        break;
    }
    return w;
}

ZWord g_word_pair_n(const AlgType &t, int a, int e) {
    int n = t.rank;
    ZWord w;
    if (t.family == Family::B) {
        for (int k = 1; k <= n; ++k) {
            if (e > 0) w.push_back({Letter::unbarred(k), a + 2 * n - 4 * k + 2});
            else w.push_back({Letter::barred(k), a - 6 * n + 4 * k});
        }
    } else if (t.family == Family::D) {
        for (int k = 1; k <= n; ++k) {
            if (e > 0) w.push_back({Letter::unbarred(k), a + n - 2 * k + 1});
            else w.push_back({Letter::barred(k), a - 3 * n + 2 * k + 1});
        }
    } else {
        throw std::invalid_argument("composite generator Y_{n,a-1}Y_{n,a+1} exists for B and D only");
    }
    return w;
}

ZWord g_word_pair_n1n(const AlgType &t, int a, int e) {
    if (t.family != Family::D) throw std::invalid_argument("composite generator Y_{n-1,a}Y_{n,a} exists for D only");
    int n = t.rank;
    ZWord w;
    for (int k = 1; k <= n - 1; ++k) {
        if (e > 0) w.push_back({Letter::unbarred(k), a + n - 2 * k});
        else w.push_back({Letter::barred(k), a - 3 * n + 2 * k + 2});
    }
    return w;
}

RingElem g_hom(const AlgType &t, int index, int shift, int exponent) {
    return f_word(t, g_word(t, index, shift, exponent));
}

// ---- classical polynomials ----

ClassicalPoly ClassicalPoly::constant(int nvars, long c) {
    ClassicalPoly p(nvars);
    p.add_term(Exps(nvars, 0), c);
    return p;
}

ClassicalPoly ClassicalPoly::var(int nvars, int i, int e) {
    ClassicalPoly p(nvars);
    Exps x(nvars, 0);
    x.at(i - 1) = e;
    p.add_term(x, 1);
    return p;
}

void ClassicalPoly::add_term(const Exps &e, const mpz_class &c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ClassicalPoly &ClassicalPoly::operator+=(const ClassicalPoly &o) {
    if (n_ == 0) n_ = o.n_;
    for (const auto &[e, c] : o.terms_) add_term(e, c);
    return *this;
}

ClassicalPoly operator*(const ClassicalPoly &a, const ClassicalPoly &b) {
    ClassicalPoly r(std::max(a.n_, b.n_));
    for (const auto &[ea, ca] : a.terms_)
        for (const auto &[eb, cb] : b.terms_) {
            ClassicalPoly::Exps e(r.n_, 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

ClassicalPoly ClassicalPoly::scaled(const mpz_class &c) const {
    ClassicalPoly r(n_);
    for (const auto &[e, x] : terms_) r.add_term(e, x * c);
    return r;
}

mpz_class ClassicalPoly::eval_at_one() const {
    mpz_class s = 0;
    for (const auto &[e, c] : terms_) s += c;
    return s;
}

ClassicalPoly ClassicalPoly::substitute(const std::vector<Exps> &images, int target) const {
    ClassicalPoly r(target);
    for (const auto &[e, c] : terms_) {
        Exps x(target, 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < target; ++k) x[k] += e[i] * images.at(i).at(k);
        r.add_term(x, c);
    }
    return r;
}

std::string ClassicalPoly::str(const std::string &var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        mpz_class a = abs(c);
        os << a.get_str();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << " * " << var << (i + 1);
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

nlohmann::json ClassicalPoly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[e, c] : terms_) terms.push_back({{"coef", c.get_str()}, {"exps", e}});
    return {{"nvars", n_}, {"terms", terms}};
}

ClassicalPoly beta(const RingElem &e, int rank) {
    ClassicalPoly r(rank);
    for (const auto &[m, c] : e.terms()) {
        ClassicalPoly::Exps x(rank, 0);
        for (const auto &f : m) x.at(f.i - 1) += f.e;
        r.add_term(x, c);
    }
    return r;
}

} // namespace qjt
