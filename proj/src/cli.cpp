#include "gamma/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gamma/codes.hpp"
#include "gamma/verify.hpp"

namespace cli {

namespace {

using gf2::BitMatrix;
using gf2::SymMatrix;
using gf2::Vertex;
using nlohmann::json;

struct Options {
  std::string format = "human";
  int max_n = 5;
  int workers = 1;
  std::uint64_t seed = 1;

  bool json_mode() const { return format == "json"; }
  gammagraph::GraphConfig graph_config() const { return {max_n, workers}; }
};

// Blank-line-separated blocks from standard input, consumed in order when
// several inputs name "-".
class StdinBlocks {
 public:
  explicit StdinBlocks(std::istream& in) : in_(in) {}

  std::string next() {
    std::string block, line;
    bool seen = false;
    while (std::getline(in_, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) {
        if (seen) return block;
        continue;
      }
      seen = true;
      block += line;
      block += '\n';
    }
    gf2::require(seen, gf2::Errc::ParseError, "expected a matrix block on standard input");
    return block;
  }

 private:
  std::istream& in_;
};

std::string read_input(const std::string& path, StdinBlocks& blocks) {
  if (path == "-") return blocks.next();
  std::ifstream file(path);
  gf2::require(file.good(), gf2::Errc::Io, "cannot open " + path);
  std::ostringstream text;
  text << file.rdbuf();
  return text.str();
}

Vertex read_vertex(const std::string& path, StdinBlocks& blocks) {
  SymMatrix m = SymMatrix::parse(read_input(path, blocks));
  return Vertex(m);
}

json matrix_rows(const BitMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i).to_string());
  return rows;
}

std::string matrix_inline(const BitMatrix& m) {
  std::string s;
  for (int i = 0; i < m.rows(); ++i) {
    if (i) s += '/';
    s += m.row(i).to_string();
  }
  return s;
}

void emit(const Options& opt, std::ostream& out, const std::string& command, json inputs,
          json result, json details, const std::string& human) {
  if (opt.json_mode()) {
    json doc;
    doc["schema"] = "gamma.cli/1";
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["result"] = std::move(result);
    doc["details"] = std::move(details);
    out << doc.dump(2) << "\n";
  } else {
    out << human;
  }
}

struct SuiteSpec {
  std::string suite = "all";
  int n = 3;
  std::uint64_t iters = 1000;
  int pairs = 100;
};

int run_verify(const Options& opt, const SuiteSpec& spec, std::ostream& out) {
  std::vector<verify::SuiteResult> results;
  gammagraph::GraphConfig cfg = opt.graph_config();
  bool all = spec.suite == "all";

  if (all || spec.suite == "gamma") {
    std::uint64_t samples = spec.n >= 5 ? 1000 : 0;
    results.push_back(verify::oracle_equivalence(spec.n, samples, opt.seed, cfg));
  }
  if (all || spec.suite == "identities") results.push_back(verify::identities(spec.iters, opt.seed));
  if (all || spec.suite == "diameter") results.push_back(verify::diameter(6, cfg));
  if (all || spec.suite == "geodesics")
    results.push_back(verify::geodesics(spec.n, spec.pairs, opt.seed, cfg));
  if (all || spec.suite == "codes") results.push_back(verify::codes(spec.n % 2 == 1 ? spec.n : 3, cfg));
  if (all || spec.suite == "extremal") results.push_back(verify::extremal_pairs(6));

  bool ok = true;
  if (opt.json_mode()) {
    json arr = json::array();
    for (const verify::SuiteResult& r : results) {
      ok = ok && r.ok();
      json item;
      item["suite"] = r.name;
      item["checks"] = r.checks;
      item["failures"] = r.failures;
      item["messages"] = r.messages;
      arr.push_back(item);
    }
    json doc;
    doc["schema"] = "gamma.cli/1";
    doc["command"] = "verify";
    doc["inputs"] = {{"suite", spec.suite}, {"n", spec.n}, {"iters", spec.iters}};
    doc["result"] = ok ? "pass" : "fail";
    doc["details"] = arr;
    out << doc.dump(2) << "\n";
  } else {
    for (const verify::SuiteResult& r : results) {
      ok = ok && r.ok();
      out << "suite " << r.name << ": " << r.checks << " checks, " << r.failures
          << " failures (" << r.seconds << " s)\n";
      for (const std::string& m : r.messages) out << "  " << m << "\n";
    }
    out << (ok ? "verify: PASS\n" : "verify: FAIL\n");
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  StdinBlocks blocks(in);

  CLI::App app{"distance and self-dual-code toolkit for the rank-one graph on invertible "
               "symmetric binary matrices"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  app.add_option("--max-n", opt.max_n, "enumeration cap (<= 8)")
      ->envname("GAMMA_MAX_N")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  app.add_option("--workers", opt.workers, "worker threads for sharded scans")
      ->envname("GAMMA_WORKERS")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for randomized suites")->capture_default_str();

  std::string a_path, b_path, out_path = "-", code_path;
  int n = 3;
  int length = 4;
  SuiteSpec suite;

  CLI::App* dist = app.add_subcommand("dist", "distance between two vertices")->fallthrough();
  dist->add_option("--a", a_path, "first matrix (path or -)")->required();
  dist->add_option("--b", b_path, "second matrix (path or -)")->required();

  CLI::App* classify = app.add_subcommand("classify", "distance case of a vertex pair")->fallthrough();
  classify->add_option("--a", a_path, "first matrix (path or -)")->required();
  classify->add_option("--b", b_path, "second matrix (path or -)")->required();

  CLI::App* neigh = app.add_subcommand("neighbors", "neighbors of a vertex")->fallthrough();
  neigh->add_option("--a", a_path, "matrix (path or -)")->required();

  CLI::App* geo = app.add_subcommand("geodesic", "shortest path between two vertices")->fallthrough();
  geo->add_option("--a", a_path, "first matrix (path or -)")->required();
  geo->add_option("--b", b_path, "second matrix (path or -)")->required();

  CLI::App* diam = app.add_subcommand("diameter", "closed-form diameter")->fallthrough();
  diam->add_option("--n", n, "dimension")->required();

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "count the vertices")->fallthrough();
  enum_cmd->add_option("--n", n, "dimension")->required();

  CLI::App* export_cmd = app.add_subcommand("export-graph", "write the vertex/edge list")->fallthrough();
  export_cmd->add_option("--n", n, "dimension")->required();
  export_cmd->add_option("--out", out_path, "output path or - for stdout")
      ->capture_default_str();

  CLI::App* codes_list = app.add_subcommand("codes-list", "enumerate self-dual codes")->fallthrough();
  codes_list->add_option("--length", length, "code length (even)")->required();

  CLI::App* codes_family = app.add_subcommand("codes-family", "matrix family of a self-dual code")->fallthrough();
  codes_family->add_option("--code", code_path, "generator matrix (path or -)")->required();

  CLI::App* codes_witness =
      app.add_subcommand("codes-witness", "orthogonal equivalence witness for two codes")->fallthrough();
  codes_witness->add_option("--a", a_path, "first code (path or -)")->required();
  codes_witness->add_option("--b", b_path, "second code (path or -)")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites")->fallthrough();
  verify_cmd->add_option("--suite", suite.suite, "suite to run")
      ->check(CLI::IsMember({"all", "gamma", "identities", "diameter", "geodesics", "codes",
                             "extremal"}))
      ->capture_default_str();
  verify_cmd->add_option("--n", suite.n, "dimension for graph/codes/geodesic suites")
      ->capture_default_str();
  verify_cmd->add_option("--iters", suite.iters, "iterations per identity battery")
      ->capture_default_str();
  verify_cmd->add_option("--pairs", suite.pairs, "pairs for the geodesic suite")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*dist || *classify) {
      Vertex a = read_vertex(a_path, blocks);
      Vertex b = read_vertex(b_path, blocks);
      gammagraph::PairClass cls = gammagraph::classify_pair(a, b);
      int d = cls.distance();
      int ambient = gammagraph::distance_ambient(a.mat(), b.mat());
      json details{{"case", gammagraph::pair_case_name(cls.kind)},
                   {"r", cls.r},
                   {"ambient", ambient}};
      json inputs{{"a", matrix_rows(a.mat().mat())}, {"b", matrix_rows(b.mat().mat())}};
      if (*dist) {
        emit(opt, out, "dist", inputs, d, details, std::to_string(d) + "\n");
      } else {
        std::string human = std::string(gammagraph::pair_case_name(cls.kind)) + " r=" +
                            std::to_string(cls.r) + " distance=" + std::to_string(d) + "\n";
        emit(opt, out, "classify", inputs, gammagraph::pair_case_name(cls.kind), details, human);
      }
      return 0;
    }

    if (*neigh) {
      Vertex a = read_vertex(a_path, blocks);
      std::vector<Vertex> nb = gammagraph::neighbors(a);
      std::string human = std::to_string(nb.size()) + "\n";
      json list = json::array();
      for (const Vertex& v : nb) {
        list.push_back(matrix_rows(v.mat().mat()));
        human += matrix_inline(v.mat().mat()) + "\n";
      }
      emit(opt, out, "neighbors", {{"a", matrix_rows(a.mat().mat())}}, nb.size(),
           {{"neighbors", list}}, human);
      return 0;
    }

    if (*geo) {
      Vertex a = read_vertex(a_path, blocks);
      Vertex b = read_vertex(b_path, blocks);
      std::vector<Vertex> path = gammagraph::geodesic(a, b);
      std::string human = "length " + std::to_string(path.size() - 1) + "\n";
      json list = json::array();
      for (const Vertex& v : path) {
        list.push_back(matrix_rows(v.mat().mat()));
        human += matrix_inline(v.mat().mat()) + "\n";
      }
      emit(opt, out, "geodesic",
           {{"a", matrix_rows(a.mat().mat())}, {"b", matrix_rows(b.mat().mat())}},
           path.size() - 1, {{"path", list}}, human);
      return 0;
    }

    if (*diam) {
      int d = gammagraph::diameter_closed(n);
      emit(opt, out, "diameter", {{"n", n}}, d, json::object(), std::to_string(d) + "\n");
      return 0;
    }

    if (*enum_cmd) {
      std::uint64_t count = gammagraph::count_vertices(n, opt.graph_config());
      double ratio = static_cast<double>(count) /
                     static_cast<double>(std::uint64_t{1} << (n * (n + 1) / 2));
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", ratio);
      std::string human = std::to_string(count) + "\nratio " + buf + "\n";
      emit(opt, out, "enumerate", {{"n", n}}, count, {{"ratio", std::string(buf)}}, human);
      return 0;
    }

    if (*export_cmd) {
      if (out_path == "-") {
        gammagraph::export_graph(n, out, opt.graph_config());
      } else {
        std::ofstream file(out_path);
        gf2::require(file.good(), gf2::Errc::Io, "cannot open " + out_path);
        gammagraph::export_graph(n, file, opt.graph_config());
      }
      return 0;
    }

    if (*codes_list) {
      std::vector<sdcodes::SelfDualCode> codes = sdcodes::enumerate_selfdual_codes(length);
      std::string human;
      json list = json::array();
      for (size_t i = 0; i < codes.size(); ++i) {
        if (i) human += "\n";
        human += codes[i].to_string();
        list.push_back(matrix_rows(codes[i].code().generator()));
      }
      emit(opt, out, "codes-list", {{"length", length}}, codes.size(), {{"codes", list}}, human);
      return 0;
    }

    if (*codes_family) {
      sdcodes::SelfDualCode code{sdcodes::LinearCode::parse(read_input(code_path, blocks))};
      sdcodes::CodeFamily family = sdcodes::family_from_code(code);
      bool closed = sdcodes::family_inverse_closed(family);
      std::string human = "code\n" + code.to_string() + "members " +
                          std::to_string(family.members.size()) + "\n";
      json members = json::array();
      for (const Vertex& v : family.members) {
        human += matrix_inline(v.mat().mat()) + " sd=1\n";
        members.push_back(matrix_rows(v.mat().mat()));
      }
      human += std::string("inverse-closed ") + (closed ? "1" : "0") + "\n";
      emit(opt, out, "codes-family", {{"code", matrix_rows(code.code().generator())}},
           family.members.size(), {{"members", members}, {"inverse_closed", closed}}, human);
      return 0;
    }

    if (*codes_witness) {
      sdcodes::SelfDualCode ca{sdcodes::LinearCode::parse(read_input(a_path, blocks))};
      sdcodes::SelfDualCode cb{sdcodes::LinearCode::parse(read_input(b_path, blocks))};
      BitMatrix p = sdcodes::orthogonal_witness(ca, cb);
      std::string human = p.to_string() + "verified\n";
      emit(opt, out, "codes-witness",
           {{"a", matrix_rows(ca.code().generator())}, {"b", matrix_rows(cb.code().generator())}},
           matrix_rows(p), {{"verified", true}}, human);
      return 0;
    }

    if (*verify_cmd) return run_verify(opt, suite, out);
  } catch (const gf2::Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace cli
