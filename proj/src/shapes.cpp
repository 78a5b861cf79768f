#include "qjt/shapes.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qjt {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition must be weakly decreasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

bool Partition::contains(const Partition &mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu[i] > (*this)[i]) return false;
    return true;
}

std::string Partition::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s;
}

Partition Partition::parse(const std::string &s) {
    std::vector<int> p;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) continue;
        if (!std::all_of(item.begin(), item.end(), ::isdigit)) throw std::invalid_argument("bad partition: " + s);
        p.push_back(std::stoi(item));
    }
    return Partition(p);
}

Partition conjugate(const Partition &p) {
    std::vector<int> c;
    for (int j = 1; j <= p[1]; ++j) {
        int cnt = 0;
        for (int x : p.parts) cnt += x >= j;
        c.push_back(cnt);
    }
    return Partition(c);
}

std::vector<Partition> partitions_in_box(int max_len, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int bound) {
        out.push_back(Partition(cur));
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int x = 1; x <= bound; ++x) {
            cur.push_back(x);
            rec(x);
            cur.pop_back();
        }
    };
    rec(max_part);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for (auto &p : partitions_in_box(n, n))
        if (p.size() == n) out.push_back(p);
    return out;
}

SkewShape::SkewShape(Partition l, Partition m) : lambda(std::move(l)), mu(std::move(m)) {
    if (!lambda.contains(mu)) throw std::invalid_argument("mu is not contained in lambda");
}

std::vector<Box> SkewShape::boxes() const {
    std::vector<Box> b;
    for (int i = 1; i <= rows(); ++i)
        for (int j = mu[i] + 1; j <= lambda[i]; ++j) b.push_back({i, j});
    return b;
}

std::string SkewShape::str() const { return "(" + lambda.str() + ")/(" + mu.str() + ")"; }

int depth(const SkewShape &s) {
    Partition lc = conjugate(s.lambda), mc = conjugate(s.mu);
    int d = 0;
    for (int j = 1; j <= lc.length(); ++j) d = std::max(d, lc[j] - mc[j]);
    return d;
}

std::vector<SkewShape> skew_shapes_of(const Partition &lambda) {
    std::vector<SkewShape> out;
    for (auto &mu : partitions_in_box(lambda.length(), lambda[1]))
        if (lambda.contains(mu)) out.emplace_back(lambda, mu);
    return out;
}

Tableau::Tableau(SkewShape s) : shape(std::move(s)) {
    for (int i = 1; i <= shape.rows(); ++i) rows.emplace_back(shape.lambda[i] - shape.mu[i], Letter(1));
}

std::string Tableau::str() const {
    std::ostringstream os;
    for (int i = 1; i <= shape.rows(); ++i) {
        for (int j = 1; j <= shape.mu[i]; ++j) os << "  . ";
        for (Letter c : rows[i - 1]) {
            std::string s = c.str();
            os << std::string(4 - std::min<std::size_t>(4, s.size()), ' ') << s;
        }
        os << "\n";
    }
    return os.str();
}

nlohmann::json Tableau::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto &r : rows) {
        nlohmann::json row = nlohmann::json::array();
        for (Letter c : r) row.push_back(c.str());
        j.push_back(row);
    }
    return j;
}

Tableau Tableau::from_json(const SkewShape &s, const nlohmann::json &j) {
    Tableau t(s);
    if (j.size() != t.rows.size()) throw std::invalid_argument("row count mismatch");
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (j[i].size() != t.rows[i].size()) throw std::invalid_argument("row length mismatch");
        for (std::size_t k = 0; k < t.rows[i].size(); ++k) t.rows[i][k] = Letter::parse(j[i][k].get<std::string>());
    }
    return t;
}

Tableau highest_weight_tableau(const SkewShape &s) {
    Tableau t(s);
    Partition mc = conjugate(s.mu);
    for (auto [i, j] : s.boxes()) t.at(i, j) = Letter::unbarred(i - mc[j]);
    return t;
}

RingElem hw_monomial(const AlgType &t, const SkewShape &s, int a) {
    int n = t.rank;
    if (depth(s) > n) throw std::invalid_argument("depth exceeds rank");
    Partition lc = conjugate(s.lambda), mc = conjugate(s.mu);
    int d = t.delta();
    Monomial m;
    auto mul = [&](int i, int sh, int e) {
        if (i >= 1 && i <= n && e != 0) m = mono_mul(m, Monomial{{i, sh, e}});
    };
    for (int j = 1; j <= lc.length(); ++j) {
        int h = lc[j] - mc[j];
        if (h == 0) continue;
        int aj = a + (2 * j - lc[j] - mc[j] - 1) * d;
        bool bd = t.family == Family::B || t.family == Family::D;
        int alpha = (t.family == Family::D && h == n - 1) ? 1 : 0;
        int beta_ = (bd && h == n) ? 1 : 0;
        mul(h, aj, 1 - beta_);
        mul(n, aj, alpha);
        mul(n, aj - 1, beta_);
        mul(n, aj + 1, beta_);
    }
    return RingElem::monomial(m);
}

} // namespace qjt
