// Command-line front end: index computations, per-pair GNIB sweeps, named
// reproductions, and the height-4 excess certificates.
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "indexlab/gnib.hpp"
#include "indexlab/json_io.hpp"

using namespace indexlab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct CliOptions {
  std::string mode = "auto";
  std::uint64_t seed = 0;
  unsigned trials = 3;
  std::uint64_t box = 1'000'000'000ULL;
  std::string format = "json";
  std::size_t max_symbolic_dim = 64;
  std::string data;
};

RunConfig make_config(const CliOptions& o) {
  RunConfig cfg;
  if (o.mode == "montecarlo")
    cfg.mode = Mode::montecarlo;
  else if (o.mode == "symbolic")
    cfg.mode = Mode::symbolic;
  else if (o.mode == "auto")
    cfg.mode = Mode::automatic;
  else
    throw error("unknown mode: " + o.mode);
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.box = o.box;
  cfg.guard.max_dim = o.max_symbolic_dim;
  if (!o.data.empty()) set_data_dir(o.data);
  return cfg;
}

// "gl5/so5", "gl6/sp6", "sp6/gl3", "so8/gl4", "gl7/gl3xgl4", "so7/so3xso4",
// "sp12/sp6xsp6"
std::tuple<PairFamily, std::size_t, std::size_t> parse_family_string(
    const std::string& s) {
  auto num_after = [&](const std::string& text, const std::string& prefix,
                       std::size_t& pos) {
    check(text.compare(pos, prefix.size(), prefix) == 0,
          "malformed family string: " + s);
    pos += prefix.size();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(text[pos])) ++pos;
    check(pos > start, "malformed family string: " + s);
    return static_cast<std::size_t>(std::stoul(text.substr(start, pos - start)));
  };
  std::size_t slash = s.find('/');
  check(slash != std::string::npos, "malformed family string: " + s);
  std::string amb = s.substr(0, slash), sub = s.substr(slash + 1);
  std::size_t pos = 0;
  std::string amb_type = amb.substr(0, 2);
  std::size_t n = num_after(amb, amb_type, pos);

  if (sub.find('x') == std::string::npos) {
    pos = 0;
    std::string sub_type = sub.substr(0, 2);
    std::size_t m = num_after(sub, sub_type, pos);
    if (amb_type == "gl" && sub_type == "so") {
      check(m == n, "so block must match the ambient size");
      return {PairFamily::gl_so, n, 0};
    }
    if (amb_type == "gl" && sub_type == "sp") {
      check(m == n && n % 2 == 0, "sp block must match an even ambient size");
      return {PairFamily::gl_sp, n / 2, 0};
    }
    if (amb_type == "sp" && sub_type == "gl") {
      check(n == 2 * m, "sp ambient must be twice the gl block");
      return {PairFamily::sp_gl, m, 0};
    }
    if (amb_type == "so" && sub_type == "gl") {
      check(n == 2 * m, "so ambient must be twice the gl block");
      return {PairFamily::so_gl, m, 0};
    }
    throw error("unsupported family string: " + s);
  }

  std::size_t xpos = sub.find('x');
  std::string left = sub.substr(0, xpos), right = sub.substr(xpos + 1);
  pos = 0;
  std::size_t p = num_after(left, left.substr(0, 2), pos);
  pos = 0;
  std::size_t q = num_after(right, right.substr(0, 2), pos);
  std::string block_type = left.substr(0, 2);
  check(block_type == right.substr(0, 2), "mixed block types: " + s);
  if (amb_type == "gl" && block_type == "gl") {
    check(p + q == n, "gl blocks must fill the ambient size");
    return {PairFamily::gl_glpq, p, q};
  }
  if (amb_type == "so" && block_type == "so") {
    check(p + q == n, "so blocks must fill the ambient size");
    return {PairFamily::so_sopq, p, q};
  }
  if (amb_type == "sp" && block_type == "sp") {
    check(p + q == n && p % 2 == 0 && q % 2 == 0, "sp blocks must fill the ambient size");
    return {PairFamily::sp_sppq, p / 2, q / 2};
  }
  throw error("unsupported family string: " + s);
}

Representation rep_from_spec(const std::string& spec) {
  if (spec.rfind("coadjoint:", 0) == 0) {
    std::string name = spec.substr(10);
    MatrixLieAlgebra alg;
    if (name == "borel-gl4")
      alg = borel_gl(4);
    else if (name.rfind("borel-gl", 0) == 0)
      alg = borel_gl(std::stoul(name.substr(8)));
    else if (name.rfind("gl", 0) == 0)
      alg = gl(std::stoul(name.substr(2)));
    else if (name.rfind("sl", 0) == 0)
      alg = sl(std::stoul(name.substr(2)));
    else if (name.rfind("so", 0) == 0)
      alg = so(antidiag_symmetric(std::stoul(name.substr(2))));
    else if (name.rfind("sp", 0) == 0)
      alg = sp(antidiag_skew(std::stoul(name.substr(2))));
    else
      throw error("unknown algebra: " + name);
    return adjoint_rep(alg);
  }
  if (spec.rfind("isotropy:", 0) == 0) {
    auto [family, p, q] = parse_family_string(spec.substr(9));
    return isotropy_rep(make_pair(family, p, q));
  }
  throw error("unknown representation spec: " + spec);
}

void emit(const json& j, const std::string& format, const std::string& md,
          const std::string& csv) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else if (format == "md")
    std::cout << md;
  else if (format == "csv")
    std::cout << csv;
  else
    throw error("unknown format: " + format);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact index computations for matrix Lie algebras and "
               "GNIB verdicts for classical symmetric pairs"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  CliOptions opt;
  if (const char* env_seed = std::getenv("INDEXLAB_SEED"))
    opt.seed = std::strtoull(env_seed, nullptr, 10);
  app.add_option("--mode", opt.mode, "montecarlo | symbolic | auto")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for all randomized computation")
      ->capture_default_str();
  app.add_option("--trials", opt.trials, "Monte-Carlo trials")->capture_default_str();
  app.add_option("--box", opt.box, "Monte-Carlo sample box radius")
      ->capture_default_str();
  app.add_option("--format", opt.format, "json | md | csv")->capture_default_str();
  app.add_option("--max-symbolic-dim", opt.max_symbolic_dim,
                 "symbolic elimination size guard");
  app.add_option("--data", opt.data, "directory holding expected.json");

  auto* cmd_index = app.add_subcommand("index", "index of a representation");
  std::string rep_spec, rep_file;
  cmd_index->add_option("spec", rep_spec,
                        "coadjoint:<algebra> or isotropy:<family>");
  cmd_index->add_option("--file", rep_file, "representation as JSON");

  auto* cmd_pair = app.add_subcommand("pair-check", "GNIB sweep over all orbits");
  std::string family_code_str, expect;
  std::size_t opt_n = 0, opt_p = 0, opt_q = 0;
  cmd_pair->add_option("family", family_code_str,
                       "gl/so, gl/sp, sp/gln, so/gln, gl/glpq, so/sopq, sp/sppq")
      ->required();
  cmd_pair->add_option("--n", opt_n, "size parameter");
  cmd_pair->add_option("--p", opt_p, "first block");
  cmd_pair->add_option("--q", opt_q, "second block");
  cmd_pair->add_option("--expect", expect, "GNIB | no-GNIB (sets the exit code)");

  auto* cmd_repro = app.add_subcommand("reproduce", "named reproductions");
  std::string repro_id;
  std::size_t table_max = 6;
  cmd_repro->add_option("id", repro_id, "reproduction id or 'all'")->required();
  cmd_repro->add_option("--max", table_max, "largest n for sl-n-table");

  auto* cmd_delta = app.add_subcommand("delta", "height-4 excess certificate");
  std::string delta_type, delta_partition;
  cmd_delta->add_option("type", delta_type, "gl | so | sp")->required();
  cmd_delta->add_option("--partition", delta_partition, "e.g. 3,3,1")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg = make_config(opt);

    if (cmd_index->parsed()) {
      Representation rep;
      if (!rep_file.empty()) {
        std::ifstream in(rep_file);
        check(in.good(), "cannot open " + rep_file);
        json j;
        in >> j;
        rep = representation_from_json(j);
      } else {
        check(!rep_spec.empty(), "index needs a spec or --file");
        rep = rep_from_spec(rep_spec);
      }
      IndexReport r = index_of(rep, cfg);
      json j = to_json(r);
      j["algebra"] = rep.algebra.label();
      emit(j, opt.format, "index " + std::to_string(r.index) + "\n",
           "index\n" + std::to_string(r.index) + "\n");
      return kExitPass;
    }

    if (cmd_pair->parsed()) {
      PairFamily family = family_from_code(family_code_str);
      std::size_t p = opt_p, q = opt_q;
      if (opt_n) {
        if (family == PairFamily::gl_glpq || family == PairFamily::so_sopq ||
            family == PairFamily::sp_sppq)
          check(p || q, "block families need --p/--q");
        else
          p = family == PairFamily::gl_sp ? opt_n / 2 : opt_n;
      }
      check(p > 0, "missing size parameters");
      PairReport r = gnib_check(family, p, q, cfg);
      emit(to_json(r), opt.format, to_markdown(r), to_csv(r));
      if (!expect.empty()) {
        if (overall_name(r.overall) != expect)
          return r.overall == PairReport::Overall::inconclusive ? kExitInconclusive
                                                                : kExitMismatch;
      } else if (r.overall == PairReport::Overall::inconclusive) {
        return kExitInconclusive;
      }
      return kExitPass;
    }

    if (cmd_repro->parsed()) {
      if (repro_id == "all") {
        json j = reproduce_all(cfg, table_max);
        std::string line = std::string("reproduce all: ") +
                           (j.at("pass").get<bool>() ? "pass" : "FAIL") + "\n";
        emit(j, opt.format, line, line);
        return j.at("pass").get<bool>() ? kExitPass : kExitMismatch;
      }
      ReproduceResult r = reproduce(repro_id, cfg, table_max);
      json j{{"id", r.id}, {"pass", r.pass}, {"details", r.details}};
      std::string line = r.id + ": " + (r.pass ? "pass" : "FAIL") + "\n";
      emit(j, opt.format, line, line);
      return r.pass ? kExitPass : kExitMismatch;
    }

    if (cmd_delta->parsed()) {
      ClassicalType type;
      if (delta_type == "gl")
        type = ClassicalType::gl;
      else if (delta_type == "so")
        type = ClassicalType::so;
      else if (delta_type == "sp")
        type = ClassicalType::sp;
      else
        throw error("unknown type: " + delta_type);
      DeltaCertificate c = delta_certificate(type, Partition::parse(delta_partition), cfg);
      std::string line = "delta " + std::to_string(c.report.delta) + "\n";
      emit(to_json(c), opt.format, line, line);
      return kExitPass;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
