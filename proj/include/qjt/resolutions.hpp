#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qjt/paths.hpp"

// Weight-preserving splicing maps on type C path tuples.
// Every map returns std::nullopt when its input lies outside the domain.

namespace qjt {

struct ResolutionStep {
    enum class Kind { RY, Omega, G, F1_12, F1_23, F2_13, F2_23, F1Generic };
    Kind kind = Kind::RY;
    int i = 0, j = 0, y = 0; // 1-based path indices

    std::string str() const;
    bool operator==(const ResolutionStep &) const = default;
};
using Trace = std::vector<ResolutionStep>;

bool on_tuple(const PathTuple &pt, Point q);

// (R_y) for y >= 1, or special intersection for y = 0
bool condition_R(const AlgType &t, const Path &p1, const Path &p2, int y);
// the spliced pair; for y = 0 and a transposed pair the endpoints are exchanged
std::optional<std::pair<Path, Path>> r_y(const AlgType &t, const Path &p1, const Path &p2, int y);
std::optional<PathTuple> r_y_ij(const AlgType &t, const PathTuple &pt, int i, int j, int y, Trace *trace = nullptr);

// 180 degree rotation; N >= lambda_1 fixes the centre (2x = N - l + 1)
PathTuple omega(const PathTuple &pt, int N);
PathTuple omega(const PathTuple &pt);

// transposed, non-ordinarily intersecting pairs (i < j, 1-based)
std::vector<std::pair<int, int>> transposed_pairs(const AlgType &t, const PathTuple &pt);
// P_k: no ordinarily intersecting pair and exactly k transposed pairs
bool in_P(const AlgType &t, const PathTuple &pt, int k);
bool in_P1_ij(const AlgType &t, const PathTuple &pt, int i, int j);
bool in_P2_cross(const AlgType &t, const PathTuple &pt);
bool in_P2_circ(const AlgType &t, const PathTuple &pt);

// three-row maps
std::optional<PathTuple> g_map(const AlgType &t, const PathTuple &pt, Trace *trace = nullptr);
std::optional<PathTuple> f2_13(const AlgType &t, const PathTuple &pt, Trace *trace = nullptr);
std::optional<PathTuple> f2_23(const AlgType &t, const PathTuple &pt, Trace *trace = nullptr);
std::optional<PathTuple> f1_12(const AlgType &t, const PathTuple &pt, Trace *trace = nullptr);
std::optional<PathTuple> f1_23(const AlgType &t, const PathTuple &pt, Trace *trace = nullptr);

enum class FCondition { F2_13a, F2_13b, F2_23a, F2_23b, F1_12a, F1_12b, F1_12b1, F1_12b2, F1_23a, F1_23b, F1_23b1, F1_23b2 };
const char *fcondition_name(FCondition c);
std::optional<FCondition> parse_fcondition(const std::string &s);
bool condition_F(const AlgType &t, const PathTuple &pt, FCondition c);

// one-column shapes with l <= n+1: resolve the single transposed pair by r_y^{ij} steps
std::optional<PathTuple> f1_one_column(const AlgType &t, const PathTuple &pt, Trace *trace = nullptr);

// (d_1..d_l) for a column in Im f_1 (a column breaking E-1C); nullopt otherwise
std::optional<std::vector<Letter>> d_vector(int n, const std::vector<Letter> &column);
// every column of length l in Im f_1 with its d-vector
const std::map<std::vector<Letter>, std::vector<Letter>> &d_table(int n, int l);
// the entries of d_table with c_1 = n+2-l, c_l its bar and every proper subcolumn obeying E-1C
std::map<std::vector<Letter>, std::vector<Letter>> d_blocks(int n, int l);

} // namespace qjt
