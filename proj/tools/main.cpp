#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pcwkit/batch.hpp"
#include "pcwkit/codegen.hpp"
#include "pcwkit/cone.hpp"
#include "pcwkit/gaussian.hpp"
#include "pcwkit/io.hpp"
#include "pcwkit/pcw.hpp"
#include "pcwkit/subsets.hpp"

namespace {

using namespace pcwkit;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitContract = 2;
constexpr int kExitBudget = 3;

std::vector<std::string> split_any(const std::string& text, const std::string& seps) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    if (seps.find(ch) != std::string::npos) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

ColumnSubset parse_subset_arg(const std::string& text) {
  std::vector<std::size_t> indices;
  for (const auto& tok : split_any(text, " ,")) {
    if (tok.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("subset entry '" + tok + "' is not an index");
    }
    indices.push_back(std::stoull(tok));
  }
  return ColumnSubset(indices);
}

IntVector parse_vector_arg(const std::string& text) {
  IntVector v;
  for (const auto& tok : split_any(text, " ,")) {
    try {
      v.emplace_back(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("vector entry '" + tok + "' is not an integer");
    }
  }
  if (v.empty()) {
    throw std::invalid_argument("vector must have at least one entry");
  }
  return v;
}

std::vector<double> parse_edges_arg(const std::string& text) {
  std::vector<double> edges;
  const auto colon_parts = split_any(text, ":");
  if (colon_parts.size() == 3) {
    const double lo = std::stod(colon_parts[0]);
    const double hi = std::stod(colon_parts[1]);
    const double step = std::stod(colon_parts[2]);
    if (!(step > 0) || hi < lo) {
      throw std::invalid_argument("edge range must satisfy step > 0 and hi >= lo");
    }
    for (double e = lo; e <= hi + step * 1e-9; e += step) edges.push_back(e);
  } else if (colon_parts.size() == 1) {
    for (const auto& tok : split_any(text, " ,")) edges.push_back(std::stod(tok));
  } else {
    throw std::invalid_argument("edges must be 'lo:hi:step' or a comma list");
  }
  if (edges.empty()) {
    throw std::invalid_argument("edge list must be nonempty");
  }
  return edges;
}

std::vector<double> parse_eps_arg(const std::string& text) {
  std::vector<double> eps;
  for (const auto& tok : split_any(text, " ,")) eps.push_back(std::stod(tok));
  return eps;
}

VectorKind parse_kind(const std::string& name) {
  if (name == "det") return VectorKind::kDet;
  if (name == "absdet") return VectorKind::kAbsdet;
  if (name == "perm") return VectorKind::kPerm;
  throw std::invalid_argument("kind must be det, absdet, or perm");
}

void write_text_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open '" + path + "' for writing");
  }
  out << text;
}

struct GenerateConfig {
  std::string family;
  std::size_t k = 3;
  std::size_t n = 20;
  std::size_t dv = 3;
  std::size_t dc = 4;
  std::uint64_t seed = 1;
  std::uint64_t max_iters = 10000;
  std::string matrix_path;
  std::string out_base;
};

int run_generate(const GenerateConfig& cfg) {
  BinaryMatrix h;
  bool budget_failure = false;
  if (cfg.family == "h422") {
    h = example_h422();
  } else if (cfg.family == "dumbbell") {
    h = dumbbell(cfg.k);
  } else if (cfg.family == "regular") {
    h = random_regular_ldpc({cfg.n, cfg.dv, cfg.dc, cfg.seed});
  } else if (cfg.family == "remove-four-cycles") {
    if (cfg.matrix_path.empty()) {
      throw std::invalid_argument("remove-four-cycles needs --matrix");
    }
    const BinaryMatrix input = read_matrix_file(cfg.matrix_path);
    FourCycleRemoval removal = remove_four_cycles(input, cfg.seed, cfg.max_iters);
    h = removal.matrix;
    if (!removal.success) {
      std::cerr << "four-cycle removal exhausted " << removal.iterations
                << " iterations with " << removal.remaining_four_cycles
                << " four-cycles left; writing the best matrix found\n";
      budget_failure = true;
    }
  } else {
    throw std::invalid_argument(
        "family must be h422, dumbbell, regular, or remove-four-cycles");
  }

  write_text_output(cfg.out_base + ".alist", write_alist(h));
  write_text_output(cfg.out_base + ".txt", write_dense(h));
  std::cerr << "wrote " << cfg.out_base << ".alist and " << cfg.out_base << ".txt ("
            << h.rows() << "x" << h.cols() << ")\n";
  return budget_failure ? kExitBudget : kExitOk;
}

struct ComputeConfig {
  std::string matrix_path;
  std::string kind = "absdet";
  std::vector<std::string> subset_args;
  bool all_subsets = false;
  bool dedupe = false;
  bool with_minimal = false;
  unsigned threads = 1;
  std::string out_path;
};

std::vector<ComputeRow> run_compute_rows(const BinaryMatrix& h, const ComputeConfig& cfg) {
  ComputeOptions opt;
  opt.kind = parse_kind(cfg.kind);
  opt.dedupe = cfg.dedupe;
  opt.with_minimal = cfg.with_minimal;
  opt.threads = cfg.threads;
  for (const auto& arg : cfg.subset_args) {
    opt.subsets.push_back(parse_subset_arg(arg));
  }
  return compute_vectors(h, opt);
}

int run_compute(const ComputeConfig& cfg) {
  const BinaryMatrix h = read_matrix_file(cfg.matrix_path);
  const auto rows = run_compute_rows(h, cfg);
  write_text_output(cfg.out_path, rows_to_csv(rows, cfg.with_minimal));
  return kExitOk;
}

struct HistogramConfig {
  ComputeConfig compute;
  std::string from_path;
  std::string edges_arg;
  std::string gnuplot_path;
  std::string out_path;
};

int run_histogram(const HistogramConfig& cfg) {
  const std::vector<double> edges = parse_edges_arg(cfg.edges_arg);
  std::vector<PseudoWeight> weights;
  if (!cfg.from_path.empty()) {
    std::ifstream in(cfg.from_path, std::ios::binary);
    if (!in) {
      throw std::invalid_argument("cannot open '" + cfg.from_path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    weights = parse_compute_csv(buffer.str());
  } else {
    if (cfg.compute.matrix_path.empty()) {
      throw std::invalid_argument("histogram needs --matrix or --from");
    }
    const BinaryMatrix h = read_matrix_file(cfg.compute.matrix_path);
    for (const ComputeRow& row : run_compute_rows(h, cfg.compute)) {
      weights.push_back(row.weight);
    }
  }
  const WeightHistogram hist = cumulative_histogram(weights, edges);

  std::ostringstream csv;
  write_histogram_csv(csv, hist);
  write_text_output(cfg.out_path, csv.str());
  if (!cfg.gnuplot_path.empty()) {
    std::ostringstream plot;
    write_histogram_gnuplot(plot, hist);
    write_text_output(cfg.gnuplot_path, plot.str());
  }
  return kExitOk;
}

struct CheckConfig {
  std::string matrix_path;
  std::string vector_arg;
  std::string out_path;
};

int run_check(const CheckConfig& cfg) {
  const BinaryMatrix h = read_matrix_file(cfg.matrix_path);
  const IntVector w = parse_vector_arg(cfg.vector_arg);
  const ConeReport report = in_fundamental_cone(h, w);

  bool nonneg = true;
  bool zero = true;
  for (const BigInt& x : w) {
    if (x < 0) nonneg = false;
    if (x != 0) zero = false;
  }
  const bool unscaled = is_unscaled_pcw(h, w);
  std::optional<PseudoWeight> weight;
  if (nonneg) weight = awgnc_pseudoweight(w);
  std::optional<bool> minimal;
  if (report.member && !zero) minimal = is_minimal_pcw(h, w);
  const bool codeword_multiple = is_codeword_scalar_multiple(h, w);

  auto constraint_text = [](const ConstraintRef& c) {
    std::ostringstream out;
    if (c.is_nonnegativity()) {
      out << "bit" << c.bit << ">=0";
    } else {
      out << "check" << c.check << ":bit" << c.bit;
    }
    return out.str();
  };

  std::ostringstream text;
  text << "member: " << (report.member ? "yes" : "no") << "\n";
  text << "violated:";
  if (report.violated.empty()) {
    text << " none";
  } else {
    for (const auto& c : report.violated) text << " " << constraint_text(c);
  }
  text << "\n";
  text << "active: " << report.active.size() << " tight constraint"
       << (report.active.size() == 1 ? "" : "s");
  if (!report.active.empty()) {
    text << " (";
    for (std::size_t k = 0; k < report.active.size(); ++k) {
      if (k > 0) text << " ";
      text << constraint_text(report.active[k]);
    }
    text << ")";
  }
  text << "\n";
  text << "unscaled_pseudo_codeword: " << (unscaled ? "yes" : "no") << "\n";
  text << "pseudo_weight: ";
  if (!weight.has_value()) {
    text << "n/a (negative entries)";
  } else if (weight->zero_vector) {
    text << "0 (zero vector)";
  } else {
    text << format_weight(weight->as_double());
  }
  text << "\n";
  text << "minimal: " << (minimal.has_value() ? (*minimal ? "yes" : "no") : "n/a") << "\n";
  text << "codeword_multiple: " << (codeword_multiple ? "yes" : "no") << "\n";
  std::cout << text.str();

  if (!cfg.out_path.empty()) {
    std::ostringstream csv;
    csv << "member,violated,active,is_unscaled_pcw,pseudo_weight,is_zero,is_minimal,"
           "codeword_multiple\n";
    csv << (report.member ? 1 : 0) << ",\"";
    for (std::size_t k = 0; k < report.violated.size(); ++k) {
      if (k > 0) csv << " ";
      csv << constraint_text(report.violated[k]);
    }
    csv << "\",\"";
    for (std::size_t k = 0; k < report.active.size(); ++k) {
      if (k > 0) csv << " ";
      csv << constraint_text(report.active[k]);
    }
    csv << "\"," << (unscaled ? 1 : 0) << ",";
    if (weight.has_value() && !weight->zero_vector) {
      csv << format_weight(weight->as_double());
    }
    csv << "," << (zero ? 1 : 0) << ",";
    if (minimal.has_value()) csv << (*minimal ? 1 : 0);
    csv << "," << (codeword_multiple ? 1 : 0) << "\n";
    write_text_output(cfg.out_path, csv.str());
  }
  return kExitOk;
}

struct GaussianConfig {
  std::string matrix_path;
  std::string subset_arg;
  std::string eps_arg = "0.1,0.01,0.001,0.0001";
  double tol = 1e-6;
  std::string out_path;
};

int run_gaussian(const GaussianConfig& cfg) {
  const BinaryMatrix h = read_matrix_file(cfg.matrix_path);
  ColumnSubset s;
  if (!cfg.subset_arg.empty()) {
    s = parse_subset_arg(cfg.subset_arg);
  } else if (h.cols() == h.rows() + 1) {
    std::vector<std::size_t> all(h.cols());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    s = ColumnSubset(all);
  } else {
    throw std::invalid_argument("--subset is required when n != m+1");
  }
  const std::vector<double> schedule = parse_eps_arg(cfg.eps_arg);
  GaussianTolerance tol;
  tol.relative = cfg.tol;
  tol.zero_absolute = cfg.tol;
  const GaussianLimitReport report = verify_gaussian_limit(h, s, schedule, tol);

  std::ostringstream csv;
  write_gaussian_csv(csv, report);
  write_text_output(cfg.out_path, csv.str());
  if (!report.all_converged) {
    std::cerr << "limit check failed: max relative error "
              << format_weight(report.max_rel_error) << ", max zero-target error "
              << format_weight(report.max_zero_error) << "\n";
    return kExitContract;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudo-codeword constructions and fundamental-cone analysis"};
  app.require_subcommand(1);

  GenerateConfig gen;
  CLI::App* generate = app.add_subcommand("generate", "write an example or random matrix");
  generate->add_option("--family", gen.family, "h422 | dumbbell | regular | remove-four-cycles")
      ->required();
  generate->add_option("--k", gen.k, "cycle size for dumbbell");
  generate->add_option("--n", gen.n, "block length for regular");
  generate->add_option("--dv", gen.dv, "bit degree for regular");
  generate->add_option("--dc", gen.dc, "check degree for regular");
  generate->add_option("--seed", gen.seed, "generator seed");
  generate->add_option("--max-iters", gen.max_iters, "swap budget for remove-four-cycles");
  generate->add_option("--matrix", gen.matrix_path, "input matrix for remove-four-cycles");
  generate->add_option("--out", gen.out_base, "output base path (.alist and .txt)")
      ->required();

  ComputeConfig comp;
  CLI::App* compute = app.add_subcommand("compute", "pseudo-codewords over column subsets");
  compute->add_option("--matrix", comp.matrix_path, "matrix file (.alist or dense)")
      ->required();
  compute->add_option("--kind", comp.kind, "det | absdet | perm")->required();
  CLI::Option* subset_opt = compute->add_option(
      "--subset", comp.subset_args, "explicit subset, e.g. \"0 1 2\" (repeatable)");
  compute->add_flag("--all-subsets", comp.all_subsets, "every size-(m+1) subset (default)")
      ->excludes(subset_opt);
  compute->add_flag("--dedupe", comp.dedupe, "keep the first row per distinct vector");
  compute->add_flag("--with-minimal", comp.with_minimal, "add the is_minimal column");
  compute->add_option("--threads", comp.threads, "worker threads");
  compute->add_option("--out", comp.out_path, "output CSV path (default stdout)");

  HistogramConfig histo;
  CLI::App* histogram = app.add_subcommand("histogram", "cumulative pseudo-weight histogram");
  CLI::Option* histo_matrix =
      histogram->add_option("--matrix", histo.compute.matrix_path, "matrix file");
  histogram->add_option("--kind", histo.compute.kind, "det | absdet | perm");
  histogram->add_option("--threads", histo.compute.threads, "worker threads");
  histogram->add_option("--from", histo.from_path, "reuse a compute CSV instead of a matrix")
      ->excludes(histo_matrix);
  histogram->add_option("--edges", histo.edges_arg, "'lo:hi:step' or comma list")->required();
  histogram->add_option("--gnuplot", histo.gnuplot_path, "extra two-column export path");
  histogram->add_option("--out", histo.out_path, "output CSV path (default stdout)");

  CheckConfig check;
  CLI::App* check_cmd = app.add_subcommand("check", "fundamental-cone report for one vector");
  check_cmd->add_option("--matrix", check.matrix_path, "matrix file")->required();
  check_cmd->add_option("--vector", check.vector_arg, "integer entries, e.g. \"2 1 1 0\"")
      ->required();
  check_cmd->add_option("--out", check.out_path, "also write a CSV verdict");

  GaussianConfig gauss;
  CLI::App* gaussian = app.add_subcommand("gaussian", "limit products along an eps schedule");
  gaussian->add_option("--matrix", gauss.matrix_path, "matrix file")->required();
  gaussian->add_option("--subset", gauss.subset_arg,
                       "column subset (defaults to all columns when n = m+1)");
  gaussian->add_option("--eps", gauss.eps_arg, "decreasing schedule, comma separated");
  gaussian->add_option("--tol", gauss.tol, "convergence tolerance");
  gaussian->add_option("--out", gauss.out_path, "output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (generate->parsed()) return run_generate(gen);
    if (compute->parsed()) return run_compute(comp);
    if (histogram->parsed()) return run_histogram(histo);
    if (check_cmd->parsed()) return run_check(check);
    if (gaussian->parsed()) return run_gaussian(gauss);
  } catch (const ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return kExitContract;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
