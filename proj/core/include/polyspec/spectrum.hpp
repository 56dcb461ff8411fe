#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyspec/graph.hpp"
#include "polyspec/numeric.hpp"

namespace polyspec {

/// Where a spectrum entry came from.
enum class Source { Zero, Two, FamilyZero, FamilyPlus, FamilyMinus, Lifted, Base };

const char* to_string(Source source);
std::optional<Source> parse_source(std::string_view text);

struct SpectrumEntry {
  double value = 0.0;
  BigInt multiplicity{1};
  Source source = Source::Base;
  /// Base eigenvalue a Lifted entry was solved from; NaN otherwise.
  double parent = std::numeric_limits<double>::quiet_NaN();
};

/// Vertex count, edge count and bipartiteness of the graph a spectrum
/// describes. Counts are exact so iterates far beyond explicit construction
/// can be tracked.
struct SpectrumContext {
  BigInt vertices;
  BigInt edges;
  bool bipartite = false;

  static SpectrumContext of(const Graph& graph);
};

/// One line of the exported multiset: entries closer than the merge
/// tolerance are combined and their sources joined with '+'.
struct ExportEntry {
  double value = 0.0;
  BigInt multiplicity;
  std::string source;
};

/// Normalized-Laplacian spectrum as (value, multiplicity, source) entries,
/// kept sorted by value. Multiplicities are exact and never expanded unless
/// asked for, so spectra of astronomically large iterates stay small.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<SpectrumEntry> entries);

  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  std::size_t distinct_count() const { return entries_.size(); }
  BigInt total_multiplicity() const;
  BigInt multiplicity_of(Source source) const;

  /// Every value repeated by multiplicity, ascending. Throws CapExceeded when
  /// the total multiplicity is above `cap`.
  std::vector<double> expanded(std::size_t cap = kDefaultExplicitCap) const;

  /// Export view with entries within `tol` merged.
  std::vector<ExportEntry> merged(double tol = 1e-9) const;

  /// Throws InputError unless: 0 has multiplicity 1, all values lie in
  /// [0, 2], multiplicities sum to ctx.vertices, and 2 is present exactly
  /// when ctx.bipartite.
  void validate(const SpectrumContext& ctx) const;

  /// lambda and 2 - lambda occur with equal multiplicity (within tol).
  bool reflection_symmetric(double tol = 1e-9) const;

 private:
  std::vector<SpectrumEntry> entries_;
};

/// lambda = 1 - a_n(mu) / (1 + a_{n-1}(mu)).
double correspondence_lambda(int n, double mu);

/// Context of tau_n(G) given the context of G.
SpectrumContext transform_context(const SpectrumContext& ctx, int n);

struct SpectrumResult {
  Spectrum spectrum;
  SpectrumContext context;
};

/// Spectrum of tau_n(G) from the spectrum of G.
///
/// Odd n (m = (n-1)/2): 0 once; 2 once iff G bipartite; OddZero roots with
/// multiplicity N; OddPlus roots with E-N+1; OddMinus roots with E-N, or
/// E-N+1 when G is bipartite; and for each eigenvalue lambda of G other
/// than 0 and 2 the (n+1)/2 lambda-equation roots, each with lambda's
/// multiplicity. Even n is the same with EvenPlus (N), EvenZero (E-N+1),
/// EvenMinus (E-N or E-N+1), n/2 roots per lambda, and never 2.
///
/// Throws InputError for an inconsistent input spectrum and InternalError
/// if the multiplicities do not add up to N + (n-1)E.
SpectrumResult transform_spectrum(const Spectrum& spectrum, const SpectrumContext& ctx, int n);

/// g-fold transform_spectrum; g = 0 returns the input.
SpectrumResult iterate_spectrum(const Spectrum& spectrum, const SpectrumContext& ctx, int n, int g);

inline constexpr double kClusterTolerance = 1e-7;
inline constexpr double kSnapTolerance = 1e-9;

/// Spectrum of a connected graph from the oracle eigensolver. Eigenvalues
/// within kClusterTolerance merge into one entry; values within
/// kSnapTolerance of 0 or 2 snap to exactly 0 or 2.
SpectrumResult base_spectrum(const Graph& graph);

/// y = (I - D^{-1/2} A D^{-1/2}) x, applied from the adjacency lists.
std::vector<double> apply_normalized_laplacian(const Graph& graph, std::span<const double> x);

struct LiftedVector {
  std::vector<double> values;
  /// ||L w - mu w|| / ||w|| on the explicitly built tau_n(G).
  double residual = 0.0;
};

/// Extends an eigenvector v of L_G for lambda (not 0 or 2) to an
/// eigenvector of L_{tau_n(G)} for a root mu of the lambda equation.
/// Original vertices keep v; the path of edge {i, j} (i < j) is filled from
/// the i side:
///   w_1     = (a_{n-2}(mu) v_i / sqrt(d_i) + v_j / sqrt(d_j)) / a_{n-1}(mu)
///   w_2     = 2(1-mu) w_1 - v_i / sqrt(d_i)
///   w_{k+1} = 2(1-mu) w_k - w_{k-1}
/// Throws InputError if (lambda, v) is not an eigenpair to 1e-8, if mu does
/// not correspond to lambda, or if |a_{n-1}(mu)| < 1e-12.
LiftedVector lift_eigenvector(const Graph& graph, int n, double lambda,
                              std::span<const double> v, double mu);

}  // namespace polyspec
