#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qjt/ring.hpp"
#include "qjt/shapes.hpp"

// Exhaustive and sampled consistency suites shared by the CLI and the acceptance binary.

namespace qjt {

struct SuiteResult {
    std::string name;
    bool passed = true;
    long checked = 0;
    std::vector<std::string> failures; // first few counterexamples
    std::vector<std::string> notes;
    double seconds = 0;

    SuiteResult() = default;
    explicit SuiteResult(std::string n) : name(std::move(n)) {}

    void fail(const std::string &what);
    nlohmann::json to_json() const;
};

// shape families used by the suites
std::vector<SkewShape> shapes_in_box(int max_rows, int max_part);
std::vector<SkewShape> shapes_up_to_size(int max_size, int max_depth);
std::vector<SkewShape> shapes_with_rows(int rows, int max_part);
std::vector<SkewShape> shapes_one_column(int max_len);
std::vector<SkewShape> shapes_two_column(int len_min, int len_max);
std::vector<SkewShape> random_shapes(int count, int max_rows, int max_part, std::uint64_t seed);

SuiteResult suite_he(int max_rank, int trunc);
SuiteResult suite_det(const std::vector<Family> &fams, const std::vector<int> &ranks, int samples, int max_rows, int max_part,
                      std::uint64_t seed);
SuiteResult suite_paths(const std::vector<Family> &fams, const std::vector<int> &ranks, int max_rows, int max_part);
SuiteResult suite_tableaux_A(int max_size, int max_rank);
SuiteResult suite_tableaux_B(const std::vector<int> &ranks, int max_rows, int max_part);
// the four covered type C classes
SuiteResult suite_tableaux_C(const std::vector<int> &ranks, int two_column_rank);
// two-column shapes with l(lambda) = len under E-2C; mismatches are notes, never failures
SuiteResult suite_two_column_e2c(int n, int len, int min_shapes);
SuiteResult suite_bijection(int max_size_A, int max_rank_A, const std::vector<int> &ranks_BC, int two_column_rank);
SuiteResult suite_resolutions(int n, int max_part);
SuiteResult suite_one_column_f1(int max_rank);
SuiteResult suite_classical(int max_size_A, int max_rank_A, int max_size_C, const std::vector<int> &ranks_C);

} // namespace qjt
