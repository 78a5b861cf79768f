#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace qjt {

enum class Family { A, B, C, D };

struct AlgType {
    Family family = Family::A;
    int rank = 1;

    AlgType() = default;
    AlgType(Family f, int n);

    // 1 for A, C, D and 2 for B
    int delta() const { return family == Family::B ? 2 : 1; }
    std::string name() const;
    static AlgType parse(const std::string &family, int rank);
    bool operator==(const AlgType &) const = default;
};

// unbarred k is stored as +k, the letter 0 as 0, barred k as -k
struct Letter {
    int v = 1;

    Letter() = default;
    constexpr explicit Letter(int value) : v(value) {}
    static constexpr Letter unbarred(int k) { return Letter(k); }
    static constexpr Letter barred(int k) { return Letter(-k); }
    static constexpr Letter zero() { return Letter(0); }

    bool is_barred() const { return v < 0; }
    bool is_zero() const { return v == 0; }
    int k() const { return v < 0 ? -v : v; }
    Letter bar() const { return Letter(-v); }

    std::string str() const;
    static Letter parse(const std::string &s);
    bool operator==(const Letter &) const = default;
    // storage order, for use as a container key; not the alphabet order
    auto operator<=>(const Letter &) const = default;
};

bool in_alphabet(const AlgType &t, Letter c);
std::vector<Letter> alphabet(const AlgType &t); // sorted by the type's order
// position of c in the total order of the alphabet
int order_key(const AlgType &t, Letter c);
inline bool precedes(const AlgType &t, Letter a, Letter b) { return order_key(t, a) < order_key(t, b); }

struct ZVar {
    Letter letter;
    int shift = 0;
};

struct YFactor {
    int i = 1;
    int s = 0;
    int e = 1;
    auto operator<=>(const YFactor &) const = default;
};

// canonical: sorted by (i, s), no zero exponents
using Monomial = std::vector<YFactor>;

Monomial mono_mul(const Monomial &a, const Monomial &b);
Monomial mono_shift(const Monomial &a, int d);
Monomial mono_inv(const Monomial &a);

struct MonomialHash {
    std::size_t operator()(const Monomial &m) const noexcept;
};

class RingElem {
public:
    using Term = std::pair<Monomial, mpz_class>;

    RingElem() = default;
    RingElem(long c);
    static RingElem monomial(Monomial m, mpz_class c = 1);
    static RingElem Y(int i, int s, int e = 1);

    const std::vector<Term> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    // sum of coefficients, i.e. the number of monomials counted with multiplicity
    mpz_class coefficient_sum() const;

    RingElem operator-() const;
    RingElem &operator+=(const RingElem &o);
    RingElem &operator-=(const RingElem &o);
    friend RingElem operator+(RingElem a, const RingElem &b) { return a += b; }
    friend RingElem operator-(RingElem a, const RingElem &b) { return a -= b; }
    friend RingElem operator*(const RingElem &a, const RingElem &b);
    RingElem &operator*=(const RingElem &o) { return *this = *this * o; }
    RingElem scaled(const mpz_class &c) const;
    bool operator==(const RingElem &o) const { return terms_ == o.terms_; }

    std::string str() const;
    nlohmann::json to_json() const;
    static RingElem from_json(const nlohmann::json &j);

    // build from unsorted terms; merges duplicates and drops zeros
    static RingElem from_terms(std::vector<Term> raw);

private:
    std::vector<Term> terms_;
};

RingElem shift_spectral(const RingElem &e, int d);

// image of z_{letter, shift} in Y-variables
Monomial f_mono(const AlgType &t, Letter c, int shift);
RingElem f_hom(const AlgType &t, const ZVar &v);

// z-monomial as a list of variables, image of a Y-generator under g
using ZWord = std::vector<ZVar>;
ZWord g_word(const AlgType &t, int index, int shift, int exponent);
// composite generators: B_n and D_n Y_{n,a-1}Y_{n,a+1}; D_n Y_{n-1,a}Y_{n,a}
ZWord g_word_pair_n(const AlgType &t, int shift, int exponent);
ZWord g_word_pair_n1n(const AlgType &t, int shift, int exponent);
RingElem f_word(const AlgType &t, const ZWord &w);
RingElem g_hom(const AlgType &t, int index, int shift, int exponent);

// Laurent polynomial in y_1..y_n (or any n commuting variables)
class ClassicalPoly {
public:
    using Exps = std::vector<int>;

    ClassicalPoly() = default;
    explicit ClassicalPoly(int nvars) : n_(nvars) {}
    static ClassicalPoly constant(int nvars, long c);
    static ClassicalPoly var(int nvars, int i, int e = 1);

    int nvars() const { return n_; }
    const std::map<Exps, mpz_class> &terms() const { return terms_; }
    void add_term(const Exps &e, const mpz_class &c);
    bool is_zero() const { return terms_.empty(); }

    ClassicalPoly &operator+=(const ClassicalPoly &o);
    friend ClassicalPoly operator+(ClassicalPoly a, const ClassicalPoly &b) { return a += b; }
    friend ClassicalPoly operator*(const ClassicalPoly &a, const ClassicalPoly &b);
    ClassicalPoly scaled(const mpz_class &c) const;
    bool operator==(const ClassicalPoly &o) const { return n_ == o.n_ && terms_ == o.terms_; }

    mpz_class eval_at_one() const;
    // substitute variable i by the monomial images[i]
    ClassicalPoly substitute(const std::vector<Exps> &images, int target_nvars) const;
    std::string str(const std::string &var = "y") const;
    nlohmann::json to_json() const;

private:
    int n_ = 0;
    std::map<Exps, mpz_class> terms_;
};

ClassicalPoly beta(const RingElem &e, int rank);

} // namespace qjt
