#pragma once

#include <string>
#include <vector>

#include "qjt/ring.hpp"

namespace qjt {

struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::vector<int> p);
    Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

    int length() const { return static_cast<int>(parts.size()); }
    int size() const;
    // 1-indexed, zero past the end
    int operator[](int i) const { return i >= 1 && i <= length() ? parts[i - 1] : 0; }
    bool empty() const { return parts.empty(); }
    bool contains(const Partition &mu) const;
    std::string str() const;
    static Partition parse(const std::string &s);
    bool operator==(const Partition &) const = default;
    auto operator<=>(const Partition &) const = default;
};

Partition conjugate(const Partition &p);
std::vector<Partition> partitions_of(int n);
// partitions with at most max_len parts, each at most max_part
std::vector<Partition> partitions_in_box(int max_len, int max_part);

struct Box {
    int i, j;
    bool operator==(const Box &) const = default;
};

struct SkewShape {
    Partition lambda, mu;

    SkewShape() = default;
    SkewShape(Partition l, Partition m = {});

    int rows() const { return lambda.length(); }
    bool has(int i, int j) const { return i >= 1 && i <= rows() && j > mu[i] && j <= lambda[i]; }
    std::vector<Box> boxes() const; // row-major
    int num_boxes() const { return lambda.size() - mu.size(); }
    std::string str() const;
    bool operator==(const SkewShape &) const = default;
};

int depth(const SkewShape &s);
// every mu inside lambda, including mu = lambda
std::vector<SkewShape> skew_shapes_of(const Partition &lambda);

// rows[i-1] lists T(i, mu_i+1) ... T(i, lambda_i)
struct Tableau {
    SkewShape shape;
    std::vector<std::vector<Letter>> rows;

    Tableau() = default;
    explicit Tableau(SkewShape s);

    Letter at(int i, int j) const { return rows[i - 1][j - shape.mu[i] - 1]; }
    Letter &at(int i, int j) { return rows[i - 1][j - shape.mu[i] - 1]; }
    bool has(int i, int j) const { return shape.has(i, j); }
    std::string str() const;
    nlohmann::json to_json() const;
    static Tableau from_json(const SkewShape &s, const nlohmann::json &j);
    bool operator==(const Tableau &) const = default;
};

Tableau highest_weight_tableau(const SkewShape &s);
RingElem hw_monomial(const AlgType &t, const SkewShape &s, int a);

} // namespace qjt
