#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "sqg/construct.hpp"
#include "sqg/document.hpp"
#include "sqg/errors.hpp"
#include "sqg/graphs.hpp"
#include "sqg/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

// Wall-clock limits would break byte-identical reruns, so a "second" buys a
// fixed number of search nodes instead.
constexpr long long kNodesPerSecond = 200000;

long long budget_from_seconds(double secs) {
    if (secs < 0) return -1;
    return static_cast<long long>(secs * kNodesPerSecond);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sqg::parameter_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw sqg::parameter_error("cannot write " + path);
    out << text;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int cmd_build(int n, int k, const std::string& out_path) {
    sqg::Builder b;
    const sqg::Complex& c = b.sphere(n, k);
    std::string text = sqg::document_to_string(sqg::to_document(c, n, k));
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return kExitPass;
}

int cmd_verify(const std::string& path, const std::string& checks, bool deep) {
    sqg::ParsedDocument p = sqg::parse_document_string(read_file(path));
    sqg::Report report = sqg::verify_sphere(p.complex, p.n, p.k, deep);

    std::vector<sqg::CheckResult> selected;
    if (checks.empty()) {
        selected = report.checks;
    } else {
        for (const std::string& sel : split_csv(checks)) {
            bool hit = false;
            for (const sqg::CheckResult& c : report.checks) {
                bool match = c.name == sel ||
                             (sel == "sphere" && c.name.rfind("sphere_d", 0) == 0);
                if (match) {
                    selected.push_back(c);
                    hit = true;
                }
            }
            if (!hit) throw sqg::parameter_error("unknown check '" + sel + "'");
        }
    }
    int failed = 0;
    for (const sqg::CheckResult& c : selected) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << "\n";
        if (!c.pass) ++failed;
    }
    std::cout << "verify: " << selected.size() - failed << "/" << selected.size()
              << " checks passed\n";
    return failed == 0 ? kExitPass : kExitFail;
}

sqg::SimpleGraph graph_for(const std::string& kind, const sqg::Complex* c, int n, int k) {
    if (kind == "qg") {
        if (c) return sqg::quotient_complex(*c).graph;
        sqg::Builder b;
        return sqg::quotient_complex(b.sphere(n, k)).graph;
    }
    if (kind == "sg") return sqg::schrijver_graph(n, k);
    return sqg::kneser_graph(n, k);
}

int cmd_chromatic(const std::string& path, int n, int k, const std::string& kind,
                  double timeout) {
    sqg::ParsedDocument p;
    const sqg::Complex* c = nullptr;
    if (!path.empty()) {
        p = sqg::parse_document_string(read_file(path));
        n = p.n;
        k = p.k;
        c = &p.complex;
    } else if (n <= 0 || k <= 0) {
        throw sqg::parameter_error("chromatic: need a document path or --n and --k");
    }
    sqg::SimpleGraph g = graph_for(kind, c, n, k);
    const int expected = n - 2 * k + 2;
    sqg::ChromaticResult res = sqg::chromatic_number(g, budget_from_seconds(timeout));
    if (!res.exact()) {
        std::cout << "chi in [" << res.lower << "," << res.upper
                  << "] expected=" << expected << " (inconclusive)\n";
        return kExitInconclusive;
    }
    std::cout << "chi=" << res.lower << " expected=" << expected << "\n";
    return res.lower == expected ? kExitPass : kExitFail;
}

int cmd_critical(const std::string& path, double timeout) {
    sqg::ParsedDocument p = sqg::parse_document_string(read_file(path));
    sqg::SimpleGraph g = sqg::quotient_complex(p.complex).graph;
    sqg::CriticalityResult res =
        sqg::check_edge_critical(g, budget_from_seconds(timeout));
    if (!res.conclusive) {
        std::cout << "critical: inconclusive within budget\n";
        return kExitInconclusive;
    }
    std::cout << "chi=" << res.chi << " edges=" << g.edges.size()
              << " critical=" << (res.critical ? "yes" : "no");
    if (!res.critical) std::cout << " robust_edges=" << res.robust_edges.size();
    std::cout << "\n";
    return res.critical ? kExitPass : kExitFail;
}

int cmd_export(const std::string& path, const std::string& format,
               const std::string& out_path) {
    sqg::ParsedDocument p = sqg::parse_document_string(read_file(path));
    if (format == "json") {
        write_file(out_path,
                   sqg::document_to_string(sqg::to_document(p.complex, p.n, p.k)));
    } else if (format == "dimacs") {
        sqg::SimpleGraph g = sqg::quotient_complex(p.complex).graph;
        write_file(out_path, sqg::to_dimacs(g));
        write_file(out_path + ".labels", sqg::dimacs_label_map(g));
    } else {
        write_file(out_path, sqg::facets_text(p.complex));
    }
    return kExitPass;
}

int cmd_stats(const std::string& path) {
    sqg::ParsedDocument p = sqg::parse_document_string(read_file(path));
    const sqg::Complex& c = p.complex;
    std::cout << "n=" << p.n << " k=" << p.k << " dim=" << c.dim() << "\n";
    std::cout << "vertices=" << c.vertex_count() << " facets=" << c.facets().size()
              << "\n";
    std::cout << "f_vector=";
    auto fv = c.f_vector();
    int chi = 0, sign = 1;
    for (size_t i = 0; i < fv.size(); ++i) {
        std::cout << (i ? "," : "") << fv[i];
        chi += sign * static_cast<int>(fv[i]);
        sign = -sign;
    }
    std::cout << "\neuler=" << chi << "\n";
    std::cout << "antipode_pairs=" << (c.has_antipode() ? c.vertex_count() / 2 : 0)
              << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"antisymmetric sphere complexes and their quotient graphs"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "build the (n,k) sphere complex");
    int n = 0, k = 0;
    std::string out_path;
    build->add_option("--n", n, "circuit length")->required();
    build->add_option("--k", k, "independent set size")->required();
    build->add_option("--out", out_path, "output path (stdout when omitted)");

    auto* verify = app.add_subcommand("verify", "run structural checks on a document");
    std::string in_path, checks;
    bool deep = false;
    verify->add_option("path", in_path, "document to verify")->required();
    verify->add_option("--checks", checks, "comma-separated check names");
    verify->add_flag("--deep-links", deep, "recurse into all vertex links");

    auto* chromatic = app.add_subcommand("chromatic", "chromatic number of a quotient");
    std::string cpath, graph_kind = "qg";
    int cn = 0, ck = 0;
    double ctimeout = 60;
    chromatic->add_option("path", cpath, "document (alternative to --n/--k)");
    chromatic->add_option("--n", cn, "circuit length");
    chromatic->add_option("--k", ck, "independent set size");
    chromatic->add_option("--graph", graph_kind, "qg, sg or kg")
        ->check(CLI::IsMember({"qg", "sg", "kg"}));
    chromatic->add_option("--timeout", ctimeout, "search budget in seconds");

    auto* critical = app.add_subcommand("critical", "edge-criticality sweep");
    std::string kpath;
    double ktimeout = 600;
    critical->add_option("path", kpath, "document to sweep")->required();
    critical->add_option("--timeout", ktimeout, "per-sweep budget in seconds");

    auto* exp = app.add_subcommand("export", "convert a document to another format");
    std::string epath, format, eout;
    exp->add_option("path", epath, "document to export")->required();
    exp->add_option("--format", format, "json, dimacs or facets")
        ->required()
        ->check(CLI::IsMember({"json", "dimacs", "facets"}));
    exp->add_option("--out", eout, "output path")->required();

    auto* stats = app.add_subcommand("stats", "summarise a document");
    std::string spath;
    stats->add_option("path", spath, "document to summarise")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (build->parsed()) return cmd_build(n, k, out_path);
        if (verify->parsed()) return cmd_verify(in_path, checks, deep);
        if (chromatic->parsed())
            return cmd_chromatic(cpath, cn, ck, graph_kind, ctimeout);
        if (critical->parsed()) return cmd_critical(kpath, ktimeout);
        if (exp->parsed()) return cmd_export(epath, format, eout);
        if (stats->parsed()) return cmd_stats(spath);
    } catch (const sqg::parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sqg::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
