#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <stdexcept>

#include "qjt/classical.hpp"
#include "qjt/jacobitrudi.hpp"
#include "qjt/paths.hpp"
#include "qjt/resolutions.hpp"
#include "qjt/series.hpp"
#include "qjt/tableaux.hpp"
#include "qjt/verify.hpp"

using namespace qjt;

namespace {

struct Common {
    std::string type = "A";
    int rank = 1;
    std::string lambda, mu;
    int offset = 0;
    std::string output = "text";

    void add_to(CLI::App *cmd, bool shape = true) {
        cmd->add_option("--type", type, "algebra type")->check(CLI::IsMember({"A", "B", "C", "D"}));
        cmd->add_option("--rank", rank, "rank n")->check(CLI::PositiveNumber);
        if (shape) {
            cmd->add_option("--lambda", lambda, "outer partition, e.g. 3,1")->required();
            cmd->add_option("--mu", mu, "inner partition");
            cmd->add_option("--offset", offset, "spectral offset a");
        }
        cmd->add_option("--output", output)->check(CLI::IsMember({"text", "json"}));
    }
    AlgType alg() const { return AlgType::parse(type, rank); }
    SkewShape shape() const {
        SkewShape s(Partition::parse(lambda), mu.empty() ? Partition() : Partition::parse(mu));
        return s;
    }
    bool json() const { return output == "json"; }
};

// "1:0,1:6" -> h_{1,a+0} h_{1,a+6}
RingElem parse_h_product(const AlgType &t, const std::string &spec) {
    RingElem out(1);
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("bad factor '" + item + "', expected r:s");
        out *= h_coeff(t, std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    }
    return out;
}

int report_suite(const SuiteResult &r, bool json) {
    if (json) {
        std::cout << r.to_json().dump(2) << "\n";
    } else {
        std::cout << r.name << ": " << (r.passed ? "ok" : "FAILED") << " (" << r.checked << " checks, " << r.seconds << " s)\n";
        for (const auto &n : r.notes) std::cout << "  note: " << n << "\n";
        for (const auto &f : r.failures) std::cout << "  counterexample: " << f << "\n";
    }
    return r.passed ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"q-characters from Jacobi-Trudi determinants, lattice paths and tableaux"};
    app.require_subcommand(1);

    Common qc;
    std::string form = "h", expect_product;
    auto *qchar = app.add_subcommand("qchar", "compute the determinant chi_{lambda/mu,a}");
    qc.add_to(qchar);
    qchar->add_option("--form", form, "h, e or both")->check(CLI::IsMember({"h", "e", "both"}));
    qchar->add_option("--expect-product", expect_product, "exit 1 unless the result equals prod h_{r,a+s}, given as r:s,...");

    Common tc;
    std::string ruleset;
    bool count = false, list = false;
    long expect_count = -1;
    auto *tab = app.add_subcommand("tableaux", "enumerate tableaux under a ruleset");
    tc.add_to(tab);
    tab->add_option("--ruleset", ruleset, "A, B, HV, HV+E-2R, HV+E-2R+E-3R, HV+E-1C, HV+E-2C");
    tab->add_flag("--count", count, "print only the number of tableaux");
    tab->add_flag("--list", list, "print every tableau");
    tab->add_option("--expect-count", expect_count, "exit 1 unless the count matches");

    Common pc;
    std::string cls = "all";
    auto *paths = app.add_subcommand("paths", "list path tuples with their pair classification");
    pc.add_to(paths);
    paths->add_option("--class", cls)->check(CLI::IsMember({"all", "no-ordinary", "ptilde"}));

    Common vc;
    std::string suite;
    int max_rank = 0, trunc = 8, max_size = 0, samples = 25;
    std::uint64_t seed = 20240607;
    auto *verify = app.add_subcommand("verify", "run a consistency suite");
    verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"he", "det", "paths", "tableaux-A", "tableaux-B", "tableaux-C", "resolutions", "appendixB", "classical",
                               "bijection", "one-column-f1"}));
    verify->add_option("--max-rank", max_rank, "largest rank (suite default if omitted)");
    verify->add_option("--trunc", trunc, "series truncation for he");
    verify->add_option("--max-size", max_size, "largest |lambda| for tableaux-A and classical");
    verify->add_option("--samples", samples, "random shapes per type and rank for det");
    verify->add_option("--seed", seed, "seed for random shape selection");
    verify->add_option("--output", vc.output)->check(CLI::IsMember({"text", "json"}));

    Common cc;
    auto *classical = app.add_subcommand("classical", "compare beta(chi_lambda) with the classical decomposition");
    cc.add_to(classical);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    AlgType t;
    SkewShape s;
    Common *cur = qchar->parsed() ? &qc : tab->parsed() ? &tc : paths->parsed() ? &pc : classical->parsed() ? &cc : nullptr;
    try {
        if (cur) {
            t = cur->alg();
            s = cur->shape();
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (qchar->parsed()) {
            RingElem h = chi_h(t, s, qc.offset);
            RingElem e = form == "h" ? RingElem() : chi_e(t, s, qc.offset);
            if (qc.json()) {
                nlohmann::json j = {{"type", t.name()}, {"lambda", s.lambda.parts}, {"mu", s.mu.parts}, {"offset", qc.offset}};
                if (form != "e") j["h"] = h.to_json();
                if (form != "h") j["e"] = e.to_json();
                std::cout << j.dump(2) << "\n";
            } else {
                if (form != "e") std::cout << (form == "both" ? "h: " : "") << h.str() << "\n";
                if (form != "h") std::cout << (form == "both" ? "e: " : "") << e.str() << "\n";
            }
            if (form == "both" && h != e) {
                std::cerr << "h-form and e-form differ for " << t.name() << " " << s.str() << "\n";
                return 1;
            }
            if (!expect_product.empty()) {
                RingElem want = parse_h_product(t, expect_product);
                if (want != h) {
                    std::cerr << "mismatch: expected " << want.str() << "\n";
                    return 1;
                }
            }
            return 0;
        }

        if (tab->parsed()) {
            Ruleset r = ruleset.empty() ? default_ruleset(t, s) : Ruleset::parse(ruleset);
            auto all = enumerate_tableaux(t, s, r);
            RingElem sum;
            for (const auto &T : all) sum += tableau_weight(t, T, tc.offset);
            if (tc.json()) {
                nlohmann::json j = {{"type", t.name()}, {"ruleset", r.str()}, {"count", all.size()}};
                if (!count) j["sum"] = sum.to_json();
                if (list) {
                    j["tableaux"] = nlohmann::json::array();
                    for (const auto &T : all) j["tableaux"].push_back(T.to_json());
                }
                std::cout << j.dump(2) << "\n";
            } else if (count) {
                std::cout << all.size() << "\n";
            } else {
                if (list)
                    for (const auto &T : all) std::cout << T.str() << "\n";
                std::cout << "ruleset " << r.str() << ", " << all.size() << " tableaux\n" << sum.str() << "\n";
            }
            if (expect_count >= 0 && static_cast<long>(all.size()) != expect_count) {
                std::cerr << "mismatch: expected " << expect_count << " tableaux, found " << all.size() << "\n";
                return 1;
            }
            return 0;
        }

        if (paths->parsed()) {
            TupleClass c = cls == "all" ? TupleClass::All : cls == "no-ordinary" ? TupleClass::NoOrdinary : TupleClass::PTilde;
            auto tuples = enumerate_tuples(t, s, c);
            RingElem sum;
            nlohmann::json arr = nlohmann::json::array();
            for (const auto &p : tuples) {
                RingElem w = tuple_weight(t, p, pc.offset);
                sum += p.sign() > 0 ? w : -w;
                std::vector<std::string> pairs;
                for (int i = 0; i < p.size(); ++i)
                    for (int j = i + 1; j < p.size(); ++j) {
                        std::string tag = pair_class_name(classify_pair(t, p.paths[i], p.paths[j]));
                        if (is_transposed(p.paths[i], p.paths[j])) tag += ",transposed";
                        pairs.push_back(std::to_string(i + 1) + std::to_string(j + 1) + ":" + tag);
                    }
                if (pc.json()) {
                    auto j = p.to_json();
                    j["sign"] = p.sign();
                    j["pairs"] = pairs;
                    arr.push_back(j);
                } else {
                    std::cout << (p.sign() > 0 ? "+ " : "- ") << p.str();
                    for (const auto &q : pairs) std::cout << " " << q;
                    std::cout << "\n";
                }
            }
            if (pc.json())
                std::cout << nlohmann::json{{"type", t.name()}, {"tuples", arr}, {"sum", sum.to_json()}}.dump(2) << "\n";
            else
                std::cout << tuples.size() << " tuples, signed sum " << sum.str() << "\n";
            return 0;
        }

        if (verify->parsed()) {
            auto ranks = [&](int lo, int dflt) {
                std::vector<int> v;
                for (int n = lo; n <= (max_rank ? max_rank : dflt); ++n) v.push_back(n);
                return v;
            };
            std::vector<Family> abc = {Family::A, Family::B, Family::C};
            SuiteResult r;
            if (suite == "he") r = suite_he(max_rank ? max_rank : 3, trunc);
            else if (suite == "det") r = suite_det(abc, ranks(2, 3), samples, 4, 4, seed);
            else if (suite == "paths") r = suite_paths(abc, ranks(2, 3), 3, 3);
            else if (suite == "tableaux-A") r = suite_tableaux_A(max_size ? max_size : 8, max_rank ? max_rank : 3);
            else if (suite == "tableaux-B") r = suite_tableaux_B(ranks(2, 3), 3, 3);
            else if (suite == "tableaux-C") r = suite_tableaux_C(ranks(2, 3), (max_rank ? max_rank : 3) >= 3 ? 3 : 0);
            else if (suite == "bijection") r = suite_bijection(8, 3, ranks(2, 3), 3);
            else if (suite == "resolutions" || suite == "appendixB") {
                r.name = "resolutions";
                for (int n : ranks(2, 2)) {
                    auto one = suite_resolutions(n, 3);
                    r.checked += one.checked;
                    r.seconds += one.seconds;
                    for (const auto &f : one.failures) r.fail(f);
                }
            } else if (suite == "one-column-f1") r = suite_one_column_f1(max_rank ? max_rank : 4);
            else r = suite_classical(max_size ? max_size : 5, max_rank ? max_rank : 3, max_size ? max_size : 4, ranks(2, 3));
            return report_suite(r, vc.json());
        }

        if (classical->parsed()) {
            if (t.family != Family::A && t.family != Family::C) throw std::invalid_argument("classical supports types A and C");
            if (!s.mu.empty()) throw std::invalid_argument("classical takes a straight shape");
            auto rep = t.family == Family::A ? verify_decomposition_A(s.lambda, t.rank) : verify_decomposition_C(s.lambda, t.rank);
            if (cc.json()) {
                std::cout << rep.to_json().dump(2) << "\n";
            } else {
                std::cout << (rep.equal ? "equal" : "NOT equal") << "\n  lhs: " << rep.lhs.str() << "\n  rhs: " << rep.rhs.str() << "\n";
                for (const auto &tr : rep.terms)
                    std::cout << "  c(" << tr.lambda.str() << "; " << tr.mu.str() << ", " << tr.nu.str() << ") = " << tr.coeff << "\n";
            }
            return rep.equal ? 0 : 1;
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
