#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qjt/paths.hpp"
#include "qjt/ring.hpp"
#include "qjt/shapes.hpp"

namespace qjt {

struct Ruleset {
    Family base = Family::A; // A: semistandard, B: KOS rules, C: HV-tableaux
    bool e2r = false, e3r = false, e1c = false, e2c = false;

    std::string str() const;
    // "A", "B", "HV", "HV+E-2R", "HV+E-2R+E-3R", "HV+E-1C", "HV+E-2C"
    static Ruleset parse(const std::string &s);
    bool operator==(const Ruleset &) const = default;
};

// the ruleset whose tableau sum is known to equal the determinant for this shape
// (C: one column -> E-1C, two columns -> E-2C, two rows -> E-2R, three rows -> E-2R+E-3R)
Ruleset default_ruleset(const AlgType &t, const SkewShape &s);
bool covered_shape(const AlgType &t, const SkewShape &s);

RingElem tableau_weight(const AlgType &t, const Tableau &T, int a);

bool is_valid_A(const AlgType &t, const Tableau &T);
bool is_valid_B(const AlgType &t, const Tableau &T);
bool is_valid_HV_C(const AlgType &t, const Tableau &T);

bool extra_rule_2R(const AlgType &t, const Tableau &T);
bool extra_rule_3R(const AlgType &t, const Tableau &T);
bool extra_rule_1C(const AlgType &t, const Tableau &T);
bool extra_rule_2C(const AlgType &t, const Tableau &T);

bool satisfies(const AlgType &t, const Tableau &T, const Ruleset &r);

void for_each_tableau(const AlgType &t, const SkewShape &s, const Ruleset &r, const std::function<void(const Tableau &)> &fn);
std::vector<Tableau> enumerate_tableaux(const AlgType &t, const SkewShape &s, const Ruleset &r);
RingElem tableau_sum(const AlgType &t, const SkewShape &s, int a, const Ruleset &r);

// heights of the east steps that spell a row; throws if no h-path spells it
std::vector<int> row_heights(const AlgType &t, const std::vector<Letter> &row);
Tableau path_tuple_to_tableau(const AlgType &t, const PathTuple &pt);
PathTuple tableau_to_path_tuple(const AlgType &t, const Tableau &T);

} // namespace qjt
