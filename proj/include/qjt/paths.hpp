#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qjt/ring.hpp"
#include "qjt/shapes.hpp"

namespace qjt {

struct Point {
    int x = 0, y = 0;
    Point operator+(Point o) const { return {x + o.x, y + o.y}; }
    Point operator-(Point o) const { return {x - o.x, y - o.y}; }
    auto operator<=>(const Point &) const = default;
    std::string str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

class Path {
public:
    Path() = default;
    Path(Point start, std::string steps);

    Point start() const { return start_; }
    Point end() const { return end_; }
    const std::string &steps() const { return steps_; }
    int num_east() const { return end_.x - start_.x; }

    bool covers_height(int y) const { return y >= start_.y && y <= end_.y; }
    // x-range occupied at height y; requires covers_height(y)
    int lo(int y) const { return lo_[y - start_.y]; }
    int hi(int y) const { return hi_[y - start_.y]; }
    bool contains(Point p) const { return covers_height(p.y) && p.x >= lo(p.y) && p.x <= hi(p.y); }
    std::optional<Point> leftmost_at(int y) const;
    std::optional<Point> rightmost_at(int y) const;
    // steps taken from the start to reach p; requires contains(p)
    int index_of(Point p) const { return (p.x - start_.x) + (p.y - start_.y); }
    std::string segment(Point from, Point to) const;
    std::vector<Point> points() const;

    std::string str() const;
    static Path parse(const std::string &s);
    bool operator==(const Path &o) const { return start_ == o.start_ && steps_ == o.steps_; }
    bool operator<(const Path &o) const { return std::tie(start_, steps_) < std::tie(o.start_, o.steps_); }

private:
    Point start_, end_;
    std::string steps_;
    std::vector<int> lo_, hi_;
};

int band_bottom(const AlgType &t);
int band_top(const AlgType &t);
bool is_valid_hpath(const AlgType &t, const Path &p);

struct LabeledStep {
    int x, y;
    Letter label;
};
std::vector<LabeledStep> labeled_steps(const AlgType &t, const Path &p);
Monomial path_monomial(const AlgType &t, const Path &p, int a);
RingElem path_weight(const AlgType &t, const Path &p, int a);

std::vector<Path> enumerate_hpaths(const AlgType &t, Point from, Point to);

enum class PairClass { Disjoint, Special, Ordinary };
const char *pair_class_name(PairClass c);
std::vector<Point> intersection_points(const Path &p, const Path &q);
PairClass classify_pair(const AlgType &t, const Path &p, const Path &q);
bool is_transposed(const Path &p, const Path &q);

struct PathTuple {
    SkewShape shape;
    std::vector<Path> paths; // paths[i] starts at u_{i+1}
    std::vector<int> pi;     // paths[i] ends at v_{pi[i]+1}

    int size() const { return static_cast<int>(paths.size()); }
    int sign() const;
    bool operator==(const PathTuple &o) const { return paths == o.paths && pi == o.pi; }
    bool operator<(const PathTuple &o) const { return std::tie(paths, pi) < std::tie(o.paths, o.pi); }
    std::string str() const;
    nlohmann::json to_json() const;
};

// endpoints for a tuple with l rows (partitions padded by zeros)
Point start_point(const AlgType &t, const SkewShape &s, int i);
Point end_point(const AlgType &t, const SkewShape &s, int i);

Monomial tuple_monomial(const AlgType &t, const PathTuple &pt, int a);
RingElem tuple_weight(const AlgType &t, const PathTuple &pt, int a);
int count_transposed(const AlgType &t, const PathTuple &pt);
bool has_ordinary_pair(const AlgType &t, const PathTuple &pt);
bool in_p_tilde(const AlgType &t, const PathTuple &pt);

enum class TupleClass {
    All,        // every permutation and every choice of valid h-paths
    NoOrdinary, // no ordinarily intersecting pair (A: no intersecting pair)
    PTilde      // type C: no adjacent pair that is ordinarily intersecting or transposed
};

void for_each_tuple(const AlgType &t, const SkewShape &s, TupleClass cls, const std::function<void(const PathTuple &)> &fn,
                    int rows = -1);
std::vector<PathTuple> enumerate_tuples(const AlgType &t, const SkewShape &s, TupleClass cls, int rows = -1);

RingElem signed_path_sum(const AlgType &t, const SkewShape &s, int a);
// sum of sgn(pi) * weight over every tuple, including intersecting ones
RingElem full_signed_sum(const AlgType &t, const SkewShape &s, int a);
std::vector<PathTuple> p_tilde(const AlgType &t, const SkewShape &s);

} // namespace qjt
