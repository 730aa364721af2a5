// endprox: exterior-loop statistics, limit laws, exact tables, samplers and
// shuffles from the command line.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "endprox/error.hpp"
#include "endprox/exact_models.hpp"
#include "endprox/limit_dists.hpp"
#include "endprox/pipeline.hpp"
#include "endprox/records.hpp"
#include "endprox/rng.hpp"
#include "endprox/samplers.hpp"
#include "endprox/shuffle.hpp"

namespace fs = std::filesystem;
using namespace endprox;

namespace {

struct Globals {
  EteModel ete;
  std::string pfold_file;
  std::uint64_t seed = 1;
  std::string format = "csv";
  int jobs = 1;

  OutputFormat output() const {
    return format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  }
  PfoldParams pfold() const {
    if (pfold_file.empty()) return {};
    return parse_pfold_params(read_text(pfold_file));
  }
  int threads() const {
    return jobs > 0 ? jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }

  static std::string read_text(const std::string& path) {
    if (path == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

bool looks_like_bpseq(const std::string& path, std::string_view text) {
  if (fs::path(path).extension() == ".bpseq") return true;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    long index = 0, partner = 0;
    std::string base;
    return static_cast<bool>(fields >> index >> base >> partner);
  }
  return false;
}

// Records from every input in order; the group defaults to the file stem.
std::vector<StructureRecord> load_structures(const std::vector<std::string>& inputs) {
  std::vector<StructureRecord> all;
  for (const auto& path : inputs) {
    const std::string text = Globals::read_text(path);
    const std::string stem = path == "-" ? "stdin" : fs::path(path).stem().string();
    if (looks_like_bpseq(path, text)) {
      all.push_back(read_bpseq_record(text, stem, stem));
    } else {
      for (auto& r : read_dot_bracket_records(text, stem, stem)) all.push_back(std::move(r));
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) all[i].index = i;
  return all;
}

StatsReport measure(const Globals& g, const std::vector<std::string>& inputs) {
  auto report = run_stats(load_structures(inputs), g.ete, g.threads());
  for (const auto& e : report.errors) {
    std::cerr << "skipped record " << e.index << " (" << e.id << "): " << e.message << '\n';
  }
  return report;
}

void add_inputs(CLI::App* cmd, std::vector<std::string>& inputs) {
  cmd->add_option("inputs", inputs, "structure files (dot-bracket or bpseq); - for stdin")
      ->default_val(std::vector<std::string>{"-"});
}

int run(int argc, char** argv) {
  CLI::App app{"Exterior-loop statistics and end-to-end distance of RNA secondary structures"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--ete-b", g.ete.b_nm, "hydrogen bridge step in nm")->capture_default_str();
  app.add_option("--ete-c", g.ete.c_nm, "covalent step in nm")->capture_default_str();
  app.add_option("--ete-exp", g.ete.exponent, "chain exponent")->capture_default_str();
  app.add_option("--ete-a", g.ete.a_nm, "average step for the RMS estimate, nm")
      ->capture_default_str();
  app.add_option("--pfold-params", g.pfold_file,
                 "file with \"p1 p2 p3\" or a JSON object {p1, p2, p3}");
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads, 0 for all cores")->capture_default_str();

  std::string model_name, stat_name;
  int n = 0, count = 1, k = 2;
  double tol = 1e-4;
  bool summary = false;
  std::vector<std::string> inputs;

  auto* stats = app.add_subcommand(
      "stats", "per-structure statistics; --summary gives per-group means and population variances");
  add_inputs(stats, inputs);
  stats->add_flag("--summary", summary, "print group summaries instead of rows");

  auto* limits = app.add_subcommand("limits", "limiting law, mean and variance");
  limits->add_option("--model", model_name, "dyck, motzkin or pfold")->required();
  limits->add_option("--stat", stat_name,
                     "DEG, UNP, CHN, LEN, HEL, STM, StemHelices, JOINT or ETE")
      ->required();
  limits->add_option("--tol", tol, "error bound for ETE moments")->capture_default_str();

  auto* exact = app.add_subcommand("exact", "exact distribution at a fixed size");
  exact->add_option("--model", model_name, "dyck, motzkin or pfold")->required();
  exact->add_option("--n", n, "length (semilength for dyck)")->required();
  exact->add_option("--stat", stat_name, "statistic")->required();

  auto* sample = app.add_subcommand("sample", "random structures as dot-bracket lines");
  sample->add_option("--model", model_name, "dyck, motzkin or pfold")->required();
  sample->add_option("--n", n, "length (semilength for dyck)")->required();
  sample->add_option("--count", count, "number of structures")->capture_default_str();

  auto* shuffle = app.add_subcommand("shuffle", "k-let preserving shuffles of sequences");
  shuffle->add_option("inputs", inputs, "FASTA-like sequence files; - for stdin")
      ->default_val(std::vector<std::string>{"-"});
  shuffle->add_option("--k", k, "length of preserved substrings")->capture_default_str();
  shuffle->add_option("--count", count, "shuffles per sequence")->capture_default_str();

  auto* compare_cmd = app.add_subcommand("compare", "empirical statistic against its limit law");
  add_inputs(compare_cmd, inputs);
  compare_cmd->add_option("--model", model_name, "dyck, motzkin or pfold")->required();
  compare_cmd->add_option("--stat", stat_name, "statistic")->required();

  auto* heat = app.add_subcommand("heatmap", "share of structures at each (DEG, UNP)");
  add_inputs(heat, inputs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  g.ete.validate();
  const OutputFormat fmt = g.output();

  if (stats->parsed()) {
    const auto report = measure(g, inputs);
    if (summary) {
      write_summaries(std::cout, report.summaries, fmt);
    } else {
      write_rows(std::cout, report.rows, fmt);
    }
  } else if (limits->parsed()) {
    const Model model = parse_model(model_name);
    const Stat stat = parse_stat(stat_name);
    const PfoldParams p = g.pfold();
    if (stat == Stat::ETE) {
      write_limit(std::cout, model, stat, joint_law(model, p),
                  ete_limit_moments(model, g.ete, tol, p), fmt);
    } else {
      const LimitDist d = limit_of(model, stat, p);
      write_limit(std::cout, model, stat, d, moments(d), fmt);
    }
  } else if (exact->parsed()) {
    const Model model = parse_model(model_name);
    const Stat stat = parse_stat(stat_name);
    if (model == Model::Pfold) {
      write_table(std::cout, pfold_table(n, stat, g.pfold()), fmt);
    } else {
      write_table(std::cout, exact_counts(model, n, stat), fmt);
    }
  } else if (sample->parsed()) {
    const Model model = parse_model(model_name);
    if (count < 0) throw Error(Errc::InvalidArgument, "count must be nonnegative");
    Rng rng(g.seed);
    if (model == Model::Dyck) {
      for (int i = 0; i < count; ++i) std::cout << to_dot_bracket(sample_dyck(n, rng)) << '\n';
    } else if (model == Model::Motzkin) {
      const MotzkinSampler sampler(n);
      for (int i = 0; i < count; ++i) std::cout << to_dot_bracket(sampler(rng)) << '\n';
    } else {
      const PfoldSampler sampler(n, g.pfold());
      for (int i = 0; i < count; ++i) std::cout << to_dot_bracket(sampler(rng)) << '\n';
    }
  } else if (shuffle->parsed()) {
    Rng rng(g.seed);
    for (const auto& path : inputs) {
      for (const auto& rec : read_sequence_records(Globals::read_text(path))) {
        const std::string rest = rec.header.substr(std::min(rec.header.size(), rec.id.size()));
        for (int i = 1; i <= count; ++i) {
          std::cout << '>' << rec.id << "_shuf" << i << rest << '\n'
                    << klet_shuffle(rec.sequence, k, rng) << '\n';
        }
      }
    }
  } else if (compare_cmd->parsed()) {
    const Model model = parse_model(model_name);
    const Stat stat = parse_stat(stat_name);
    const PfoldParams p = g.pfold();
    limit_of(model, stat, p);  // reject unsupported pairs before reading input
    write_compare(std::cout, compare(measure(g, inputs).rows, model, stat, p), fmt);
  } else if (heat->parsed()) {
    write_heatmap(std::cout, heatmap(measure(g, inputs).rows, g.ete), fmt);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "endprox: " << e.what() << '\n';
    return e.code() == Errc::UnsupportedCombination ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "endprox: " << e.what() << '\n';
    return 1;
  }
}
