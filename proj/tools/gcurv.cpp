// gcurv: command-line front end for the graph curvature library.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gcurv/classification.hpp"
#include "gcurv/families.hpp"
#include "gcurv/report.hpp"
#include "gcurv/service.hpp"
#include "gcurv/spectral.hpp"

namespace {

constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;

struct InputFlags {
  std::string file;
  std::string adjacency;
  std::string family;
  int n = 0;

  void attach(CLI::App* app) {
    app->add_option("--file", file, "File containing the adjacency text form");
    app->add_option("--adjacency", adjacency, "Inline adjacency text, e.g. [[0,1],[1,0]]");
    app->add_option("--family", family, "Named family: prism, mobius, cycle, ladder, complete, complete_bipartite, petersen");
    app->add_option("--n", n, "Family parameter");
  }

  gcurv::Graph load() const {
    const int sources = !file.empty() + !adjacency.empty() + !family.empty();
    if (sources != 1)
      throw CLI::ValidationError("input", "give exactly one of --file, --adjacency, --family");
    if (!family.empty()) return gcurv::generate({gcurv::parse_family(family), n});
    if (!adjacency.empty()) return gcurv::parse_adjacency(adjacency);
    std::ifstream in(file);
    if (!in) throw CLI::ValidationError("--file", "cannot read " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    return gcurv::parse_adjacency(ss.str());
  }
};

std::string fixed3(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << (v == 0.0 ? 0.0 : v);
  return os.str();
}

void print_curvature_table(const gcurv::Json& doc) {
  std::cout << "notion: " << doc["notion"].get<std::string>();
  for (const auto& [k, v] : doc["params"].items()) std::cout << "  " << k << "=" << v.get<std::string>();
  std::cout << "\n";
  if (doc.contains("edges")) {
    std::cout << std::left << std::setw(10) << "edge" << std::setw(14) << "fraction" << "decimal\n";
    for (const auto& [k, v] : doc["edges"].items())
      std::cout << std::setw(10) << k << std::setw(14) << v["fraction"].get<std::string>()
                << fixed3(v["decimal"].get<double>()) << "\n";
  } else {
    std::cout << std::left << std::setw(10) << "vertex" << std::setw(12) << "decimal" << "sign\n";
    for (const auto& [k, v] : doc["vertices"].items()) {
      std::cout << std::setw(10) << k;
      std::cout << std::setw(12) << (v.contains("decimal") ? fixed3(v["decimal"].get<double>()) : "-");
      std::cout << v["sign"].get<std::string>() << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph curvature calculator: Ollivier-Ricci, Lin-Lu-Yau and Bakry-Emery curvature"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));

  InputFlags curv_in, cls_in, spec_in;
  std::string notion = "ollivier", idleness, dimension;
  auto* curvature = app.add_subcommand("curvature", "Per-edge or per-vertex curvature");
  curv_in.attach(curvature);
  curvature->add_option("--notion", notion, "ollivier | ollivier_idleness | lly | bakry_emery | bakry_emery_dimension | bakry_emery_sign");
  curvature->add_option("--idleness", idleness, "Idleness p as a fraction or decimal");
  curvature->add_option("--dimension", dimension, "Dimension N (positive number or inf)");

  auto* classify = app.add_subcommand("classify", "Prism / Moebius ladder recognition of a cubic graph");
  cls_in.attach(classify);

  int max_n = 10;
  bool skip_bisection = false;
  auto* verify = app.add_subcommand("verify", "Check the cubic classification equivalence exhaustively");
  verify->add_option("--max-n", max_n, "Largest vertex count (even, <= 12)");
  verify->add_flag("--skip-bisection", skip_bisection, "Do not cross-check the pencil solver");

  auto* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum and spectral gap");
  spec_in.attach(spectrum);

  auto* census = app.add_subcommand("census", "Cubic 2-ball classes and their centre curvature");

  gcurv::ServiceConfig svc;
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--host", svc.host, "Bind address");
  serve->add_option("--port", svc.port, "Port");
  serve->add_option("--max-vertices", svc.max_vertices, "Largest accepted graph");
  serve->add_option("--workers", svc.workers, "Worker threads");

  // Subcommand flags may come before or after --format.
  for (auto* sub : {curvature, classify, verify, spectrum, census})
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  const bool json = format == "json";

  try {
    if (*curvature) {
      gcurv::CurvatureRequest req;
      req.graph = curv_in.load();
      auto parsed = gcurv::parse_notion(notion);
      if (!parsed) throw CLI::ValidationError("--notion", "unknown notion '" + notion + "'");
      req.notion = *parsed;
      if (!idleness.empty()) req.idleness = gcurv::parse_rational(idleness);
      if (!dimension.empty()) req.dimension = gcurv::Dimension::parse(dimension);
      const gcurv::Json doc = gcurv::curvature_document(req);
      if (json)
        std::cout << doc.dump() << "\n";
      else
        print_curvature_table(doc);
    } else if (*classify) {
      const auto verdict = gcurv::classify_cubic(cls_in.load());
      if (json) {
        std::cout << gcurv::verdict_document(verdict).dump() << "\n";
      } else {
        std::cout << verdict.name();
        if (verdict.witness_edge)
          std::cout << "  witness edge " << verdict.witness_edge->key()
                    << " kappa0=" << gcurv::to_string(*verdict.witness_kappa)
                    << "  witness vertex " << *verdict.witness_vertex
                    << " K=" << fixed3(*verdict.witness_curvature);
        std::cout << "\n";
      }
    } else if (*verify) {
      gcurv::SweepOptions opt;
      opt.cross_check_bisection = !skip_bisection;
      const auto report = gcurv::verify_equivalence(max_n, opt);
      if (json) {
        std::cout << gcurv::equivalence_document(report).dump() << "\n";
      } else {
        for (const auto& row : report.rows)
          std::cout << std::left << std::setw(4) << row.order << std::setw(24)
                    << (row.recognised ? row.verdict.name() : "-") << "CD(0,inf)="
                    << (row.cd_nonnegative ? "yes" : "no ") << "  kappa0>=0="
                    << (row.ollivier_nonnegative ? "yes" : "no ") << "  minK=" << std::setw(8)
                    << fixed3(row.min_curvature) << " min kappa0=" << gcurv::to_string(row.min_kappa0)
                    << (row.agree() ? "" : "  MISMATCH") << "\n";
        std::cout << report.rows.size() << " classes checked, equivalence "
                  << (report.holds() ? "holds" : "FAILS (" + std::to_string(report.exceptions()) + " exceptions)")
                  << ", positive set:";
        for (const auto& name : report.positive_set) std::cout << " " << name;
        std::cout << "\n";
      }
      if (!report.holds()) return kExitVerifyFailed;
    } else if (*spectrum) {
      const auto s = gcurv::laplacian_spectrum(spec_in.load());
      if (json) {
        std::cout << gcurv::spectrum_document(s).dump() << "\n";
      } else {
        std::cout << "eigenvalues:";
        for (double v : s.eigenvalues) std::cout << " " << std::setprecision(10) << (std::abs(v) < 1e-12 ? 0.0 : v);
        std::cout << "\nlambda1: " << std::setprecision(10) << s.lambda1
                  << "\nzero multiplicity: " << s.zero_multiplicity << "\n";
      }
    } else if (*census) {
      const auto rows = gcurv::enumerate_cubic_two_balls();
      if (json) {
        std::cout << gcurv::census_document(rows).dump() << "\n";
      } else {
        int negative = 0;
        for (const auto& c : rows) {
          negative += c.sign == gcurv::Sign::negative;
          std::cout << std::left << std::setw(8) << c.label << "triangles=" << c.triangles
                    << "  |S2|=" << c.structure.order() - 4 << "  K=" << std::setw(8)
                    << fixed3(c.centre_curvature) << std::setw(10) << gcurv::sign_name(c.sign)
                    << (c.complete_cubic ? "complete cubic graph" : "") << "\n";
        }
        std::cout << rows.size() << " classes, " << negative << " with negative centre curvature\n";
      }
    } else if (*serve) {
      std::cerr << "gcurv service listening on " << svc.host << ":" << svc.port << "\n";
      if (!gcurv::serve(svc)) {
        std::cerr << "error: could not bind " << svc.host << ":" << svc.port << "\n";
        return kExitComputation;
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gcurv::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return 0;
}
