#include "polyspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polyspec/a_series.hpp"
#include "polyspec/error.hpp"
#include "polyspec/oracle.hpp"
#include "polyspec/roots.hpp"

namespace polyspec {

const char* to_string(Source source) {
  switch (source) {
    case Source::Zero: return "zero";
    case Source::Two: return "two";
    case Source::FamilyZero: return "family_zero";
    case Source::FamilyPlus: return "family_plus";
    case Source::FamilyMinus: return "family_minus";
    case Source::Lifted: return "lifted";
    case Source::Base: return "base";
  }
  return "unknown";
}

std::optional<Source> parse_source(std::string_view text) {
  // Merged export labels look like "family_minus+lifted"; the first part wins.
  text = text.substr(0, text.find('+'));
  for (Source s : {Source::Zero, Source::Two, Source::FamilyZero, Source::FamilyPlus,
                   Source::FamilyMinus, Source::Lifted, Source::Base}) {
    if (text == to_string(s)) {
      return s;
    }
  }
  return std::nullopt;
}

SpectrumContext SpectrumContext::of(const Graph& graph) {
  return {BigInt(static_cast<unsigned long>(graph.vertex_count())),
          BigInt(static_cast<unsigned long>(graph.edge_count())), graph.bipartite()};
}

Spectrum::Spectrum(std::vector<SpectrumEntry> entries) : entries_(std::move(entries)) {
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) {
                     if (a.value != b.value) {
                       return a.value < b.value;
                     }
                     return a.source < b.source;
                   });
}

BigInt Spectrum::total_multiplicity() const {
  BigInt total(0);
  for (const auto& e : entries_) {
    total += e.multiplicity;
  }
  return total;
}

BigInt Spectrum::multiplicity_of(Source source) const {
  BigInt total(0);
  for (const auto& e : entries_) {
    if (e.source == source) {
      total += e.multiplicity;
    }
  }
  return total;
}

std::vector<double> Spectrum::expanded(std::size_t cap) const {
  const BigInt total = total_multiplicity();
  if (total > BigInt(static_cast<unsigned long>(cap))) {
    throw CapExceeded("spectrum: " + to_string(total) + " eigenvalues exceeds expansion cap " +
                      std::to_string(cap));
  }
  std::vector<double> out;
  out.reserve(total.get_ui());
  for (const auto& e : entries_) {
    out.insert(out.end(), e.multiplicity.get_ui(), e.value);
  }
  return out;
}

std::vector<ExportEntry> Spectrum::merged(double tol) const {
  std::vector<ExportEntry> out;
  double group_start = 0.0;
  for (const auto& e : entries_) {
    if (!out.empty() && e.value - group_start <= tol) {
      auto& last = out.back();
      last.multiplicity += e.multiplicity;
      const std::string label = to_string(e.source);
      if (("+" + last.source + "+").find("+" + label + "+") == std::string::npos) {
        last.source += "+" + label;
      }
      continue;
    }
    group_start = e.value;
    out.push_back({e.value, e.multiplicity, to_string(e.source)});
  }
  return out;
}

void Spectrum::validate(const SpectrumContext& ctx) const {
  BigInt zeros(0);
  BigInt twos(0);
  for (const auto& e : entries_) {
    if (!(e.value >= 0.0 && e.value <= 2.0)) {
      throw InputError("spectrum: value " + format_double(e.value) + " outside [0, 2]");
    }
    if (sgn(e.multiplicity) <= 0) {
      throw InputError("spectrum: non-positive multiplicity");
    }
    if (e.value == 0.0) {
      zeros += e.multiplicity;
    }
    if (e.value == 2.0) {
      twos += e.multiplicity;
    }
  }
  if (zeros != 1) {
    throw InputError("spectrum: eigenvalue 0 must have multiplicity 1 (found " +
                     to_string(zeros) + ")");
  }
  if (total_multiplicity() != ctx.vertices) {
    throw InputError("spectrum: total multiplicity " + to_string(total_multiplicity()) +
                     " differs from vertex count " + to_string(ctx.vertices));
  }
  if (ctx.bipartite ? twos != 1 : twos != 0) {
    throw InputError(ctx.bipartite ? "spectrum: bipartite graph needs eigenvalue 2 once"
                                   : "spectrum: non-bipartite graph cannot have eigenvalue 2");
  }
}

bool Spectrum::reflection_symmetric(double tol) const {
  const auto view = merged(tol);
  for (std::size_t i = 0; i < view.size(); ++i) {
    const std::size_t j = view.size() - 1 - i;
    if (std::abs(view[i].value - (2.0 - view[j].value)) > tol ||
        view[i].multiplicity != view[j].multiplicity) {
      return false;
    }
  }
  return true;
}

double correspondence_lambda(int n, double mu) {
  return 1.0 - eval_a(n, mu) / (1.0 + eval_a(n - 1, mu));
}

SpectrumContext transform_context(const SpectrumContext& ctx, int n) {
  if (n < 2) {
    throw InputError("transform: n must be >= 2");
  }
  return {ctx.vertices + BigInt(n - 1) * ctx.edges, BigInt(n + 1) * ctx.edges,
          ctx.bipartite && (n % 2 == 1)};
}

namespace {

void append_family(std::vector<SpectrumEntry>& out, const RootFamily& family, Source source,
                   const BigInt& multiplicity) {
  if (sgn(multiplicity) < 0) {
    throw InputError("transform: negative family multiplicity; context is inconsistent");
  }
  if (sgn(multiplicity) == 0) {
    return;
  }
  for (double root : roots_of_family(family).roots) {
    out.push_back({root, multiplicity, source});
  }
}

}  // namespace

SpectrumResult transform_spectrum(const Spectrum& spectrum, const SpectrumContext& ctx, int n) {
  if (n < 2) {
    throw InputError("transform: n must be >= 2");
  }
  if (ctx.vertices < 2 || ctx.edges < 1) {
    throw InputError("transform: context needs N >= 2 and E >= 1");
  }
  if (!ctx.bipartite && ctx.edges < ctx.vertices) {
    throw InputError("transform: a non-bipartite graph needs E >= N");
  }
  spectrum.validate(ctx);

  SpectrumResult result;
  result.context = transform_context(ctx, n);
  const bool odd = (n % 2) == 1;

  std::vector<SpectrumEntry> out;
  out.push_back({0.0, BigInt(1), Source::Zero});
  if (result.context.bipartite) {
    out.push_back({2.0, BigInt(1), Source::Two});
  }

  const BigInt cycle_rank = ctx.edges - ctx.vertices + 1;
  const BigInt minus_multiplicity = ctx.bipartite ? cycle_rank : cycle_rank - 1;
  if (odd) {
    append_family(out, {FamilyKind::OddZero, n}, Source::FamilyZero, ctx.vertices);
    append_family(out, {FamilyKind::OddPlus, n}, Source::FamilyPlus, cycle_rank);
    append_family(out, {FamilyKind::OddMinus, n}, Source::FamilyMinus, minus_multiplicity);
  } else {
    append_family(out, {FamilyKind::EvenPlus, n}, Source::FamilyPlus, ctx.vertices);
    append_family(out, {FamilyKind::EvenZero, n}, Source::FamilyZero, cycle_rank);
    append_family(out, {FamilyKind::EvenMinus, n}, Source::FamilyMinus, minus_multiplicity);
  }

  for (const auto& entry : spectrum.entries()) {
    if (entry.value == 0.0 || entry.value == 2.0) {
      continue;
    }
    for (double root : solve_lambda_equation(n, entry.value).roots) {
      out.push_back({root, entry.multiplicity, Source::Lifted, entry.value});
    }
  }

  result.spectrum = Spectrum(std::move(out));
  const BigInt total = result.spectrum.total_multiplicity();
  if (total != result.context.vertices) {
    throw InternalError("transform: multiplicity ledger " + to_string(total) +
                        " differs from N + (n-1)E = " + to_string(result.context.vertices));
  }
  return result;
}

SpectrumResult iterate_spectrum(const Spectrum& spectrum, const SpectrumContext& ctx, int n, int g) {
  if (g < 0) {
    throw InputError("iterate_spectrum: g must be >= 0");
  }
  SpectrumResult current{spectrum, ctx};
  for (int step = 0; step < g; ++step) {
    current = transform_spectrum(current.spectrum, current.context, n);
  }
  return current;
}

SpectrumResult base_spectrum(const Graph& graph) {
  graph.require_connected();
  const std::vector<double> values = oracle::eig_sym(oracle::normalized_laplacian(graph));

  std::vector<SpectrumEntry> entries;
  std::size_t start = 0;
  while (start < values.size()) {
    std::size_t stop = start + 1;
    double sum = values[start];
    while (stop < values.size() && values[stop] - values[stop - 1] <= kClusterTolerance) {
      sum += values[stop];
      ++stop;
    }
    const std::size_t count = stop - start;
    double value = sum / static_cast<double>(count);
    Source source = Source::Base;
    if (std::abs(value) <= kSnapTolerance) {
      value = 0.0;
      source = Source::Zero;
    } else if (std::abs(value - 2.0) <= kSnapTolerance) {
      value = 2.0;
      source = Source::Two;
    }
    entries.push_back({value, BigInt(static_cast<unsigned long>(count)), source});
    start = stop;
  }

  SpectrumResult result{Spectrum(std::move(entries)), SpectrumContext::of(graph)};
  try {
    result.spectrum.validate(result.context);
  } catch (const InputError& e) {
    throw InternalError(std::string("base_spectrum: eigensolver output failed validation: ") +
                        e.what());
  }
  return result;
}

std::vector<double> apply_normalized_laplacian(const Graph& graph, std::span<const double> x) {
  const std::size_t n = graph.vertex_count();
  if (x.size() != n) {
    throw InputError("apply_normalized_laplacian: vector length differs from vertex count");
  }
  std::vector<double> inv_sqrt(n);
  for (std::size_t v = 0; v < n; ++v) {
    inv_sqrt[v] = 1.0 / std::sqrt(static_cast<double>(graph.degree(static_cast<Vertex>(v))));
  }
  std::vector<double> y(x.begin(), x.end());
  for (std::size_t v = 0; v < n; ++v) {
    double acc = 0.0;
    for (Vertex w : graph.neighbors(static_cast<Vertex>(v))) {
      acc += inv_sqrt[w] * x[w];
    }
    y[v] -= inv_sqrt[v] * acc;
  }
  return y;
}

namespace {

double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) {
    s += v * v;
  }
  return std::sqrt(s);
}

double relative_residual(const Graph& graph, std::span<const double> x, double eigenvalue) {
  const auto y = apply_normalized_laplacian(graph, x);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - eigenvalue * x[i];
    s += r * r;
  }
  return std::sqrt(s) / norm2(x);
}

constexpr double kEigenpairTolerance = 1e-8;
constexpr double kSingularTolerance = 1e-12;

}  // namespace

LiftedVector lift_eigenvector(const Graph& graph, int n, double lambda, std::span<const double> v,
                              double mu) {
  if (n < 2) {
    throw InputError("lift: n must be >= 2");
  }
  graph.require_connected();
  if (v.size() != graph.vertex_count()) {
    throw InputError("lift: vector length differs from vertex count");
  }
  if (!(lambda > 0.0 && lambda < 2.0)) {
    throw InputError("lift: lambda must lie strictly inside (0, 2)");
  }
  if (norm2(v) == 0.0) {
    throw InputError("lift: zero vector");
  }
  if (relative_residual(graph, v, lambda) > kEigenpairTolerance) {
    throw InputError("lift: (lambda, v) is not an eigenpair of the normalized Laplacian");
  }
  const double a_prev = eval_a(n - 1, mu);
  if (std::abs(a_prev) < kSingularTolerance) {
    throw InputError("lift: a_{n-1}(mu) vanishes; mu is a family root, not a lifted eigenvalue");
  }
  if (std::abs(correspondence_lambda(n, mu) - lambda) > kEigenpairTolerance) {
    throw InputError("lift: mu does not correspond to lambda");
  }
  const double a_prev2 = eval_a(n - 2, mu);
  const double beta = 2.0 * (1.0 - mu);

  const std::size_t base_n = graph.vertex_count();
  const auto path_len = static_cast<std::size_t>(n - 1);
  LiftedVector out;
  out.values.assign(base_n + path_len * graph.edge_count(), 0.0);
  std::copy(v.begin(), v.end(), out.values.begin());

  std::size_t e = 0;
  for (auto [i, j] : graph.edges()) {
    const double scaled_i = v[i] / std::sqrt(static_cast<double>(graph.degree(i)));
    const double scaled_j = v[j] / std::sqrt(static_cast<double>(graph.degree(j)));
    double* path = out.values.data() + base_n + e * path_len;
    path[0] = (a_prev2 * scaled_i + scaled_j) / a_prev;
    if (path_len > 1) {
      path[1] = beta * path[0] - scaled_i;
    }
    for (std::size_t k = 2; k < path_len; ++k) {
      path[k] = beta * path[k - 1] - path[k - 2];
    }
    ++e;
  }

  out.residual = relative_residual(polygon_transform(graph, n), out.values, mu);
  return out;
}

}  // namespace polyspec
