#include "polyspec/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polyspec/a_series.hpp"
#include "polyspec/error.hpp"
#include "polyspec/invariants.hpp"
#include "polyspec/oracle.hpp"
#include "polyspec/roots.hpp"
#include "polyspec/spectrum.hpp"

namespace polyspec::cli {

namespace {

// Exact tree counts are printed only up to this many vertices; beyond it the
// count has too many digits to be useful and only its logarithm is reported.
constexpr long kTreeDigitsVertexLimit = 200000;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open " + path);
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out + '"';
}

std::string json_bool(bool b) { return b ? "true" : "false"; }

std::string json_number(double v) {
  return std::isfinite(v) ? format_double(v) : "null";
}

std::string meta_json(const RunConfig& config, const SpectrumContext& ctx) {
  std::ostringstream o;
  o << "{\"n\": " << config.n << ", \"g\": " << config.g << ", \"N\": " << quoted(to_string(ctx.vertices))
    << ", \"E\": " << quoted(to_string(ctx.edges)) << ", \"bipartite\": " << json_bool(ctx.bipartite)
    << "}";
  return o.str();
}

void require_generation_count(const RunConfig& config) {
  if (config.n < 2) {
    throw InputError("--n must be >= 2");
  }
  if (config.g < 0) {
    throw InputError("--g must be >= 0");
  }
  if (!(config.tolerance > 0.0)) {
    throw InputError("--tol must be positive");
  }
}

Graph load_graph(const std::string& text) {
  if (looks_like_json(text)) {
    throw InputError("this command needs an edge list, not a JSON spectrum");
  }
  return parse_edge_list(text);
}

// --- spectrum -------------------------------------------------------------

SpectrumResult parse_spectrum_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("spectrum JSON: ") + e.what());
  }
  try {
    const auto& meta = doc.at("meta");
    SpectrumContext ctx{BigInt(meta.at("N").get<std::string>()),
                        BigInt(meta.at("E").get<std::string>()), meta.at("bipartite").get<bool>()};
    std::vector<SpectrumEntry> entries;
    for (const auto& item : doc.at("spectrum")) {
      const auto source = parse_source(item.at("source").get<std::string>());
      if (!source) {
        throw InputError("spectrum JSON: unknown source " + item.at("source").dump());
      }
      entries.push_back({item.at("value").get<double>(),
                         BigInt(item.at("multiplicity").get<std::string>()), *source});
    }
    SpectrumResult result{Spectrum(std::move(entries)), ctx};
    result.spectrum.validate(result.context);
    return result;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("spectrum JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    // mpz_class rejects malformed decimal strings this way.
    if (dynamic_cast<const InputError*>(&e) != nullptr) {
      throw;
    }
    throw InputError(std::string("spectrum JSON: bad integer: ") + e.what());
  }
}

void write_spectrum(const RunConfig& config, const SpectrumResult& result, std::ostream& out) {
  const auto rows = result.spectrum.merged();
  if (config.output_format == Format::Csv) {
    out << "value,multiplicity,source\n";
    for (const auto& r : rows) {
      out << format_double(r.value) << ',' << to_string(r.multiplicity) << ',' << r.source << '\n';
    }
    return;
  }
  out << "{\n  \"meta\": " << meta_json(config, result.context) << ",\n  \"spectrum\": [";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << (i == 0 ? "\n" : ",\n") << "    {\"value\": " << format_double(rows[i].value)
        << ", \"multiplicity\": " << quoted(to_string(rows[i].multiplicity))
        << ", \"source\": " << quoted(rows[i].source) << "}";
  }
  out << (rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

int run_spectrum(const RunConfig& config, const std::string& text, std::ostream& out) {
  const SpectrumResult base =
      looks_like_json(text) ? parse_spectrum_json(text) : base_spectrum(parse_edge_list(text));
  write_spectrum(config, iterate_spectrum(base.spectrum, base.context, config.n, config.g), out);
  return kExitOk;
}

// --- transform ------------------------------------------------------------

int run_transform(const RunConfig& config, const std::string& text, std::ostream& out) {
  const Graph graph = load_graph(text);
  out << format_edge_list(iterate_transform(graph, config.n, config.g, config.explicit_cap));
  return kExitOk;
}

// --- invariants -----------------------------------------------------------

struct InvariantRow {
  int generation = 0;
  Method method = Method::ClosedForm;
  SpectrumContext context;
  InvariantReport report;
};

std::string value_field(double value, const std::optional<Rational>& exact, bool exact_mode) {
  if (exact_mode && exact) {
    return quoted(to_string(*exact));
  }
  return json_number(value);
}

std::string csv_value(double value, const std::optional<Rational>& exact, bool exact_mode) {
  if (exact_mode && exact) {
    return to_string(*exact);
  }
  return format_double(value);
}

void write_invariant_rows(const RunConfig& config, const std::vector<InvariantRow>& rows,
                          std::ostream& out) {
  bool first = true;
  for (const auto& row : rows) {
    const auto& r = row.report;
    out << (first ? "\n" : ",\n") << "      {\"generation\": " << row.generation
        << ", \"N\": " << quoted(to_string(row.context.vertices))
        << ", \"E\": " << quoted(to_string(row.context.edges))
        << ", \"kirchhoff\": " << value_field(r.kirchhoff, r.kirchhoff_exact, config.exact_mode)
        << ", \"kemeny\": " << value_field(r.kemeny, r.kemeny_exact, config.exact_mode)
        << ", \"spanning_trees\": "
        << (r.spanning_trees ? quoted(to_string(*r.spanning_trees)) : std::string("null"))
        << ", \"log_spanning_trees\": " << json_number(r.log_spanning_trees) << "}";
    first = false;
  }
}

int run_invariants(const RunConfig& config, const std::string& text, std::ostream& out) {
  const Graph graph = load_graph(text);
  const SpectrumResult base = base_spectrum(graph);
  const BigInt n0 = base.context.vertices;
  const BigInt e0 = base.context.edges;
  const BigInt degrees0 = degree_product(graph);

  InvariantReport base_report = invariants_from_spectrum(base.spectrum, base.context, degrees0);
  if (graph.vertex_count() <= oracle::kDefaultTreeCountCap) {
    base_report.spanning_trees = oracle::matrix_tree_count(graph);
    base_report.log_spanning_trees = log_of(*base_report.spanning_trees);
  } else {
    // The spectral estimate is not exact enough to seed exact closed forms.
    base_report.spanning_trees.reset();
  }
  if (config.exact_mode) {
    base_report.kemeny_exact = kemeny_exact(graph);
    base_report.kirchhoff_exact = 2 * Rational(e0) * *base_report.kemeny_exact;
    base_report.kirchhoff_exact->canonicalize();
  }

  std::vector<InvariantRow> closed;
  closed.push_back({0, Method::ClosedForm, base.context, base_report});
  for (int k = 1; k <= config.g; ++k) {
    const GrowthCounts counts = predict_counts(n0, e0, config.n, k);
    InvariantReport base_without_trees = base_report;
    const bool materialize = counts.vertices <= kTreeDigitsVertexLimit;
    if (!materialize) {
      base_without_trees.spanning_trees.reset();
    }
    InvariantReport r = closed_form_report(base_without_trees, n0, e0, config.n, k);
    r.log_spanning_trees =
        log_spanning_trees_closed(base_report.log_spanning_trees, n0, e0, config.n, k);
    closed.push_back({k, Method::ClosedForm,
                      {counts.vertices, counts.edges, base.context.bipartite && config.n % 2 == 1},
                      r});
  }

  std::vector<InvariantRow> spectral;
  SpectrumResult current = base;
  for (int k = 0; k <= config.g; ++k) {
    if (k > 0) {
      current = transform_spectrum(current.spectrum, current.context, config.n);
    }
    if (current.context.vertices > BigInt(static_cast<unsigned long>(config.explicit_cap))) {
      break;
    }
    const double log_degrees = log_degree_product_iterated(degrees0, n0, e0, config.n, k);
    InvariantReport r = invariants_from_spectrum_log(current.spectrum, current.context, log_degrees);
    r.generation = k;
    spectral.push_back({k, Method::FromSpectrum, current.context, r});
  }

  if (config.output_format == Format::Csv) {
    out << "generation,method,N,E,kirchhoff,kemeny,spanning_trees,log_spanning_trees\n";
    for (const auto* rows : {&closed, &spectral}) {
      for (const auto& row : *rows) {
        const auto& r = row.report;
        out << row.generation << ',' << to_string(row.method) << ','
            << to_string(row.context.vertices) << ',' << to_string(row.context.edges) << ','
            << csv_value(r.kirchhoff, r.kirchhoff_exact, config.exact_mode) << ','
            << csv_value(r.kemeny, r.kemeny_exact, config.exact_mode) << ','
            << (r.spanning_trees ? to_string(*r.spanning_trees) : std::string()) << ','
            << format_double(r.log_spanning_trees) << '\n';
      }
    }
    return kExitOk;
  }
  out << "{\n  \"meta\": " << meta_json(config, closed.back().context)
      << ",\n  \"invariants\": {\n    \"closed_form\": [";
  write_invariant_rows(config, closed, out);
  out << "\n    ],\n    \"from_spectrum\": [";
  write_invariant_rows(config, spectral, out);
  out << (spectral.empty() ? "]\n  }\n}\n" : "\n    ]\n  }\n}\n");
  return kExitOk;
}

// --- verify ---------------------------------------------------------------

int run_verify(const RunConfig& config, const std::string& text, std::ostream& out) {
  const Graph graph = load_graph(text);
  const GrowthCounts counts = predict_counts(graph.vertex_count(), graph.edge_count(), config.n, config.g);
  if (counts.vertices > BigInt(static_cast<unsigned long>(config.oracle_cap))) {
    throw CapExceeded("verify: " + to_string(counts.vertices) +
                      " vertices exceeds the eigensolver cap " + std::to_string(config.oracle_cap));
  }
  const Graph explicit_graph = iterate_transform(graph, config.n, config.g, config.explicit_cap);
  const SpectrumResult base = base_spectrum(graph);
  const SpectrumResult theory = iterate_spectrum(base.spectrum, base.context, config.n, config.g);

  const auto oracle_values = oracle::eig_sym(oracle::normalized_laplacian(explicit_graph));
  const auto comparison =
      oracle::compare_spectra(theory.spectrum.expanded(config.explicit_cap), oracle_values, config.tolerance);
  const bool ledger_ok = theory.spectrum.total_multiplicity() == counts.vertices;

  bool trees_checked = false;
  bool trees_ok = true;
  BigInt trees_closed;
  BigInt trees_oracle;
  if (config.g >= 1 && explicit_graph.vertex_count() <= oracle::kDefaultTreeCountCap) {
    trees_checked = true;
    trees_closed = spanning_trees_closed(oracle::matrix_tree_count(graph), graph.vertex_count(),
                                         graph.edge_count(), config.n, config.g);
    trees_oracle = oracle::matrix_tree_count(explicit_graph);
    trees_ok = trees_closed == trees_oracle;
  }

  const bool ok = comparison.matched && ledger_ok && trees_ok;
  if (config.output_format == Format::Csv) {
    out << "check,value\n"
        << "max_abs_deviation," << format_double(comparison.max_abs_deviation) << '\n'
        << "spectrum_matched," << json_bool(comparison.matched) << '\n'
        << "theory_size," << comparison.size_a << '\n'
        << "oracle_size," << comparison.size_b << '\n'
        << "ledger_matched," << json_bool(ledger_ok) << '\n';
    if (trees_checked) {
      out << "spanning_trees_closed_form," << to_string(trees_closed) << '\n'
          << "spanning_trees_matrix_tree," << to_string(trees_oracle) << '\n'
          << "spanning_trees_matched," << json_bool(trees_ok) << '\n';
    }
    out << "passed," << json_bool(ok) << '\n';
  } else {
    out << "{\n  \"meta\": " << meta_json(config, theory.context) << ",\n  \"comparison\": {"
        << "\"max_abs_deviation\": " << format_double(comparison.max_abs_deviation)
        << ", \"tolerance\": " << format_double(config.tolerance)
        << ", \"matched\": " << json_bool(comparison.matched)
        << ", \"theory_size\": " << comparison.size_a << ", \"oracle_size\": " << comparison.size_b
        << "},\n  \"ledger\": {\"total_multiplicity\": "
        << quoted(to_string(theory.spectrum.total_multiplicity()))
        << ", \"expected\": " << quoted(to_string(counts.vertices))
        << ", \"matched\": " << json_bool(ledger_ok) << "},\n  \"spanning_trees\": ";
    if (trees_checked) {
      out << "{\"checked\": true, \"closed_form\": " << quoted(to_string(trees_closed))
          << ", \"matrix_tree\": " << quoted(to_string(trees_oracle))
          << ", \"matched\": " << json_bool(trees_ok) << "}";
    } else {
      out << "{\"checked\": false}";
    }
    out << ",\n  \"passed\": " << json_bool(ok) << "\n}\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

// --- lift -----------------------------------------------------------------

struct EigenpairFile {
  double lambda = 0.0;
  std::vector<double> vector;
  std::optional<double> mu;
};

EigenpairFile read_eigenpair(const std::string& path) {
  if (path.empty()) {
    throw InputError("lift needs --eigenpair FILE");
  }
  try {
    const auto doc = nlohmann::json::parse(read_input(path));
    EigenpairFile out;
    out.lambda = doc.at("lambda").get<double>();
    out.vector = doc.at("vector").get<std::vector<double>>();
    if (doc.contains("mu") && !doc.at("mu").is_null()) {
      out.mu = doc.at("mu").get<double>();
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("eigenpair JSON: ") + e.what());
  }
}

int run_lift(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.g != 1) {
    throw InputError("lift works on one polygon step; use --g 1");
  }
  const Graph graph = load_graph(text);
  const EigenpairFile pair = read_eigenpair(config.eigenpair_path);

  std::vector<double> mus;
  if (pair.mu) {
    mus.push_back(*pair.mu);
  } else {
    for (double mu : solve_lambda_equation(config.n, pair.lambda).roots) {
      if (std::abs(eval_a(config.n - 1, mu)) >= 1e-12) {
        mus.push_back(mu);
      }
    }
  }
  std::vector<LiftedVector> lifts;
  bool ok = true;
  for (double mu : mus) {
    lifts.push_back(lift_eigenvector(graph, config.n, pair.lambda, pair.vector, mu));
    ok = ok && lifts.back().residual <= config.tolerance;
  }

  if (config.output_format == Format::Csv) {
    out << "mu,residual,index,value\n";
    for (std::size_t k = 0; k < lifts.size(); ++k) {
      for (std::size_t i = 0; i < lifts[k].values.size(); ++i) {
        out << format_double(mus[k]) << ',' << format_double(lifts[k].residual) << ',' << i << ','
            << format_double(lifts[k].values[i]) << '\n';
      }
    }
  } else {
    SpectrumContext ctx = transform_context(SpectrumContext::of(graph), config.n);
    out << "{\n  \"meta\": " << meta_json(config, ctx) << ",\n  \"lambda\": "
        << format_double(pair.lambda) << ",\n  \"lifts\": [";
    for (std::size_t k = 0; k < lifts.size(); ++k) {
      out << (k == 0 ? "\n" : ",\n") << "    {\"mu\": " << format_double(mus[k])
          << ", \"residual\": " << format_double(lifts[k].residual) << ", \"vector\": [";
      for (std::size_t i = 0; i < lifts[k].values.size(); ++i) {
        out << (i == 0 ? "" : ", ") << format_double(lifts[k].values[i]);
      }
      out << "]}";
    }
    out << (lifts.empty() ? "]\n}\n" : "\n  ]\n}\n");
  }
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    require_generation_count(config);
    const std::string text = read_input(config.input_path);
    // Reports are assembled in memory so a failing run prints nothing partial.
    std::ostringstream buffer;
    int status = kExitOk;
    switch (config.command) {
      case Command::Transform: status = run_transform(config, text, buffer); break;
      case Command::Spectrum: status = run_spectrum(config, text, buffer); break;
      case Command::Invariants: status = run_invariants(config, text, buffer); break;
      case Command::Verify: status = run_verify(config, text, buffer); break;
      case Command::Lift: status = run_lift(config, text, buffer); break;
    }
    out << buffer.str();
    if (status == kExitMismatch) {
      err << "polyspec: verification mismatch\n";
    }
    return status;
  } catch (const CapExceeded& e) {
    err << "polyspec: " << e.what() << '\n';
    return kExitCap;
  } catch (const InputError& e) {
    err << "polyspec: " << e.what() << '\n';
    return kExitInput;
  } catch (const InternalError& e) {
    err << "polyspec: internal check failed: " << e.what() << '\n';
    return kExitMismatch;
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normalized-Laplacian spectra and invariants of iterated polygon graphs"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";

  struct Spec {
    const char* name;
    Command command;
    const char* help;
  };
  const Spec specs[] = {
      {"transform", Command::Transform, "Write the edge list of the g-th iterate"},
      {"spectrum", Command::Spectrum, "Spectrum of the g-th iterate from the base spectrum"},
      {"invariants", Command::Invariants,
       "Kirchhoff index, Kemeny constant and spanning trees for generations 0..g"},
      {"verify", Command::Verify, "Check the predicted spectrum against the explicit graph"},
      {"lift", Command::Lift, "Lift a base eigenvector to the polygon graph"},
  };
  for (const auto& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("input", config.input_path, "Edge list file, or - for stdin")->required();
    sub->add_option("--n", config.n, "Polygon parameter (edges become (n+1)-cycles)")
        ->check(CLI::Range(2, 1 << 20));
    sub->add_option("--g", config.g, "Number of iterations")->check(CLI::NonNegativeNumber);
    sub->add_option("--tol", config.tolerance, "Comparison tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--cap", config.explicit_cap, "Largest explicit graph or expanded spectrum");
    sub->add_flag("--exact", config.exact_mode, "Report exact rationals where available");
    if (spec.command == Command::Lift) {
      sub->add_option("--eigenpair", config.eigenpair_path, "JSON file with lambda, vector, mu")
          ->required();
    }
    if (spec.command == Command::Verify) {
      sub->add_option("--oracle-cap", config.oracle_cap, "Largest graph given to the eigensolver");
    }
    sub->callback([&config, command = spec.command] { config.command = command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  config.output_format = format == "csv" ? Format::Csv : Format::Json;
  return run(config, out, err);
}

}  // namespace polyspec::cli
