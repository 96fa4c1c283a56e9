#include "ame/cli.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ame/bounds.hpp"
#include "ame/code.hpp"
#include "ame/error.hpp"
#include "ame/io.hpp"
#include "ame/latin.hpp"
#include "ame/rs.hpp"
#include "ame/search.hpp"
#include "ame/state.hpp"

namespace ame {
namespace {

std::string slurp(std::istream& in) {
  std::ostringstream oss;
  oss << in.rdbuf();
  return oss.str();
}

std::string error_payload(const std::string& code, const std::string& message) {
  nlohmann::json j;
  j["error"] = {{"code", code}, {"message", message}};
  return j.dump() + "\n";
}

/// Every data-consuming subcommand reads --in (default "-" = standard
/// input) and writes --out (default "-" = standard output).
struct Pipe {
  std::string in_path = "-";
  std::string out_path = "-";

  void attach(CLI::App* cmd, bool with_in = true) {
    if (with_in)
      cmd->add_option("--in", in_path, "input file, - for standard input");
    cmd->add_option("--out", out_path, "output file, - for standard output");
  }

  std::string read(std::istream& stdin_stream) const {
    return in_path == "-" ? slurp(stdin_stream) : io::read_file(in_path);
  }

  void write(std::ostream& stdout_stream, const std::string& payload) const {
    if (out_path == "-")
      stdout_stream << payload;
    else
      io::write_file(out_path, payload);
  }
};

RsExtension parse_extension(const std::string& s) {
  if (s == "none") return RsExtension::none;
  if (s == "single") return RsExtension::single;
  return RsExtension::double_;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal-support AME states, MDS codes and orthogonal latin "
               "hypercubes"};
  app.require_subcommand(1);
  long long seed = 0;
  app.add_option("--seed", seed,
                 "seed for randomized test-data generation (no shipped "
                 "subcommand randomizes; accepted for interface stability)");

  int rc = 0;

  // construct ------------------------------------------------------------
  auto* construct =
      app.add_subcommand("construct", "build codes and states");
  construct->require_subcommand(1);

  auto* c_rs = construct->add_subcommand(
      "rs", "Reed-Solomon code over GF(d), optionally extended");
  int rs_d = 0, rs_k = 0;
  std::string rs_ext = "none";
  Pipe rs_pipe;
  c_rs->add_option("--d", rs_d, "alphabet size, a prime power")->required();
  c_rs->add_option("--k", rs_k, "dimension")->required();
  c_rs->add_option("--extended", rs_ext, "extension")
      ->check(CLI::IsMember({"none", "single", "double"}));
  rs_pipe.attach(c_rs, false);
  c_rs->callback([&] {
    Code code = rs_code(rs_d, rs_k, parse_extension(rs_ext));
    rs_pipe.write(out, io::code_to_json(code));
  });

  auto* c_ghz = construct->add_subcommand("ghz", "GHZ/Bell support state");
  int ghz_d = 0, ghz_n = 3;
  Pipe ghz_pipe;
  c_ghz->add_option("--d", ghz_d, "local dimension")->required();
  c_ghz->add_option("--n", ghz_n, "number of sites, 2 or 3");
  ghz_pipe.attach(c_ghz, false);
  c_ghz->callback([&] {
    AmeState state = state_from_code(ghz_code(ghz_n, ghz_d));
    ghz_pipe.write(out, io::state_to_json(state));
  });

  auto* c_ame = construct->add_subcommand(
      "ame", "verified minimal-support AME(n,d) state");
  int ame_d = 0, ame_n = 0;
  Pipe ame_pipe;
  c_ame->add_option("--d", ame_d, "local dimension")->required();
  c_ame->add_option("--n", ame_n, "number of sites (default d+1)");
  ame_pipe.attach(c_ame, false);
  c_ame->callback([&] {
    int n = ame_n > 0 ? ame_n : ame_d + 1;
    AmeState state = construct_ame_state(n, ame_d);
    ame_pipe.write(out, io::state_to_json(state));
  });

  // convert ----------------------------------------------------------------
  auto* convert = app.add_subcommand(
      "convert", "move between state, code and hypercube forms");
  convert->require_subcommand(1);

  auto* v_c2s = convert->add_subcommand("code-to-state", "code -> state");
  Pipe c2s;
  c2s.attach(v_c2s);
  v_c2s->callback([&] {
    Code code = io::code_from_any(c2s.read(in));
    c2s.write(out, io::state_to_json(state_from_code(code)));
  });

  auto* v_s2c = convert->add_subcommand("state-to-code", "state -> code");
  Pipe s2c;
  s2c.attach(v_s2c);
  v_s2c->callback([&] {
    AmeState state = io::state_from_json(s2c.read(in));
    s2c.write(out, io::code_to_json(code_from_state(state)));
  });

  auto* v_c2h = convert->add_subcommand("code-to-cubes",
                                        "MDS code -> orthogonal hypercubes");
  Pipe c2h;
  c2h.attach(v_c2h);
  v_c2h->callback([&] {
    Code code = io::code_from_any(c2h.read(in));
    c2h.write(out, io::cubeset_to_json(code_to_hypercubes(code)));
  });

  auto* v_h2c = convert->add_subcommand("cubes-to-code",
                                        "orthogonal hypercubes -> MDS code");
  Pipe h2c;
  h2c.attach(v_h2c);
  v_h2c->callback([&] {
    HypercubeSet set = io::cubeset_from_json(h2c.read(in));
    h2c.write(out, io::code_to_json(hypercubes_to_code(set)));
  });

  // verify -----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "check a given object");
  verify->require_subcommand(1);

  auto* y_mds = verify->add_subcommand("mds", "minimum distance vs Singleton");
  Pipe mds_pipe;
  int mds_workers = 0;
  mds_pipe.attach(y_mds);
  y_mds->add_option("--workers", mds_workers, "threads, 0 = hardware");
  y_mds->callback([&] {
    MdsReport report = is_mds(io::code_from_any(mds_pipe.read(in)),
                              mds_workers);
    mds_pipe.write(out, io::mds_report_to_json(report));
    rc = report.is_mds ? 0 : 1;
  });

  auto* y_ame = verify->add_subcommand("ame", "AME property of a state");
  Pipe amev_pipe;
  std::string method = "comb";
  amev_pipe.attach(y_ame);
  y_ame->add_option("--method", method,
                    "comb (minimal support only) or trace (exact oracle)")
      ->check(CLI::IsMember({"comb", "trace"}));
  y_ame->callback([&] {
    AmeState state = io::state_from_json(amev_pipe.read(in));
    AmeVerdict verdict = method == "comb" ? verify_ame_combinatorial(state)
                                          : verify_ame_partial_trace(state);
    amev_pipe.write(out, io::verdict_to_json(verdict));
    rc = verdict.is_ame ? 0 : 1;
  });

  auto* y_latin = verify->add_subcommand("latin", "latin property of a cube");
  Pipe latin_pipe;
  latin_pipe.attach(y_latin);
  y_latin->callback([&] {
    LatinHypercube cube = io::cube_from_json(latin_pipe.read(in));
    bool ok = is_latin(cube);
    nlohmann::json j;
    j["d"] = cube.d;
    j["is_latin"] = ok;
    j["k"] = cube.k;
    latin_pipe.write(out, j.dump(2) + "\n");
    rc = ok ? 0 : 1;
  });

  auto* y_mols = verify->add_subcommand("mols", "mutual orthogonality of a "
                                                "cube set");
  Pipe mols_pipe;
  mols_pipe.attach(y_mols);
  y_mols->callback([&] {
    HypercubeSet set = io::cubeset_from_json(mols_pipe.read(in));
    bool ok = mols_check(set);
    nlohmann::json j;
    j["cubes"] = set.cubes.size();
    j["d"] = set.d;
    j["is_mols"] = ok;
    j["k"] = set.k;
    mols_pipe.write(out, j.dump(2) + "\n");
    rc = ok ? 0 : 1;
  });

  // search -----------------------------------------------------------------
  auto* search = app.add_subcommand("search", "exhaustive existence searches");
  search->require_subcommand(1);

  auto* s_mate = search->add_subcommand(
      "mate", "orthogonal mate over all reduced squares of an order");
  int order = 0, mate_workers = 0;
  std::string cert_path;
  Pipe mate_pipe;
  s_mate->add_option("--order", order, "square order, 1..7")->required();
  s_mate->add_option("--workers", mate_workers, "threads, 0 = hardware");
  s_mate->add_option("--certificate", cert_path,
                     "also write the certificate to this file");
  mate_pipe.attach(s_mate, false);
  s_mate->callback([&] {
    err << "order " << order << ": scanning reduced squares for an "
        << "orthogonal mate...\n";
    SearchCertificate cert = orthogonal_pair_exists(order, mate_workers);
    err << "examined " << cert.squares_examined << " squares ("
        << cert.squares_with_mate << " with mate) in " << cert.elapsed_seconds
        << " s\n";
    std::string payload = io::certificate_to_json(cert);
    if (!cert_path.empty()) io::write_file(cert_path, payload);
    mate_pipe.write(out, payload);
    rc = cert.verdict == "exists" ? 0 : 1;
  });

  auto* s_exists = search->add_subcommand(
      "ame-exists", "does a minimal-support AME(n,d) state exist");
  int ex_n = 0, ex_d = 0, ex_workers = 0;
  Pipe exists_pipe;
  s_exists->add_option("--n", ex_n, "number of sites")->required();
  s_exists->add_option("--d", ex_d, "local dimension")->required();
  s_exists->add_option("--workers", ex_workers, "threads, 0 = hardware");
  exists_pipe.attach(s_exists, false);
  s_exists->callback([&] {
    AmeExistsResult result = ame_minimal_exists(ex_n, ex_d, ex_workers);
    exists_pipe.write(out, io::ame_exists_to_json(result));
    rc = result.verdict == "yes" ? 0 : 1;
  });

  // bounds -----------------------------------------------------------------
  auto* bounds = app.add_subcommand("bounds", "N(d) interval with provenance");
  int b_d = 0, b_workers = 0;
  bool b_trace = false, b_assume = false;
  Pipe bounds_pipe;
  bounds->add_option("--d", b_d, "local dimension")->required();
  bounds->add_flag("--trace", b_trace, "include the full derivation trace");
  bounds->add_flag("--assume-mds-conjecture", b_assume,
                   "add the conditional value under the general MDS "
                   "conjecture (d >= 8, prime power)");
  bounds->add_option("--workers", b_workers, "threads, 0 = hardware");
  bounds->add_option("--in", bounds_pipe.in_path,
                     "external fact file replacing the built-in rows, - for "
                     "standard input");
  bounds_pipe.in_path.clear();  // default: built-in facts, no input read
  bounds->add_option("--out", bounds_pipe.out_path,
                     "output file, - for standard output");
  bounds->callback([&] {
    std::vector<BoundFact> facts = bounds_pipe.in_path.empty()
                                       ? builtin_external_facts()
                                       : io::facts_from_json(
                                             bounds_pipe.read(in));
    BoundReport report = n_report(b_d, facts, b_workers, b_assume);
    bounds_pipe.write(out, io::bound_report_to_json(report, b_trace));
  });

  // ------------------------------------------------------------------------
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("ame");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    return rc;
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, err, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, err, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_payload("usage", e.what());
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    out << error_payload(e.code(), e.what());
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    out << error_payload("internal", e.what());
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ame
