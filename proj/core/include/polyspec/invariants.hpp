#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>

#include "polyspec/graph.hpp"
#include "polyspec/numeric.hpp"
#include "polyspec/polynomial.hpp"
#include "polyspec/spectrum.hpp"

namespace polyspec {

enum class Method { FromSpectrum, ClosedForm };

const char* to_string(Method method);

/// Multiplicative degree-Kirchhoff index Kf', Kemeny's constant K and the
/// spanning-tree count of one graph (generation `generation` of an iterate).
struct InvariantReport {
  double kirchhoff = 0.0;
  double kemeny = 0.0;
  std::optional<Rational> kirchhoff_exact;
  std::optional<Rational> kemeny_exact;
  /// Exact count when known. From a spectrum it is the rounded estimate,
  /// present only while the estimate is below 1e9.
  std::optional<BigInt> spanning_trees;
  /// ln of the spectral estimate prod(d) prod(lambda) / 2E; NaN for closed forms.
  double log_spanning_trees = std::numeric_limits<double>::quiet_NaN();
  Method method = Method::FromSpectrum;
  int generation = 0;
};

/// Kf' = 2E sum mult/lambda, K = sum mult/lambda over nonzero eigenvalues,
/// N_st from the degree product and the eigenvalue product.
/// Throws InputError unless 0 has multiplicity exactly 1.
InvariantReport invariants_from_spectrum(const Spectrum& spectrum, const SpectrumContext& ctx,
                                         std::span<const std::size_t> degrees);
InvariantReport invariants_from_spectrum(const Spectrum& spectrum, const SpectrumContext& ctx,
                                         const BigInt& degree_product);
InvariantReport invariants_from_spectrum_log(const Spectrum& spectrum, const SpectrumContext& ctx,
                                             double log_degree_product);

BigInt degree_product(const Graph& graph);

/// ln prod(d) of tau_n^g(G) from the degree law: every generation doubles
/// all existing degrees and adds degree-2 vertices, so the product gains a
/// factor 2^{N_k} at generation k.
double log_degree_product_iterated(const BigInt& base_product, const BigInt& n0,
                                   const BigInt& e0, int n, int g);
BigInt degree_product_iterated(const BigInt& base_product, const BigInt& n0, const BigInt& e0,
                               int n, int g);

// One polygon step (Kf', K, N_st of tau_n(G) from those of G).
Rational kirchhoff_step(const Rational& kf, const BigInt& n0, const BigInt& e0, int n);
Rational kemeny_step(const Rational& k, const BigInt& n0, const BigInt& e0, int n);
BigInt spanning_trees_step(const BigInt& nst, const BigInt& n0, const BigInt& e0, int n);

// Closed forms for tau_n^g(G), g >= 1.
Rational kirchhoff_iterated(const Rational& kf0, const BigInt& n0, const BigInt& e0, int n, int g);
Rational kemeny_iterated(const Rational& k0, const BigInt& n0, const BigInt& e0, int n, int g);
BigInt spanning_trees_iterated(const BigInt& nst0, const BigInt& n0, const BigInt& e0, int n,
                               int g);

/// The step formula when g == 1, the iterated formula otherwise. The double
/// overloads evaluate exactly and round once. Throw InputError for g < 1.
Rational kirchhoff_closed(const Rational& kf0, const BigInt& n0, const BigInt& e0, int n, int g);
double kirchhoff_closed(double kf0, const BigInt& n0, const BigInt& e0, int n, int g);
Rational kemeny_closed(const Rational& k0, const BigInt& n0, const BigInt& e0, int n, int g);
double kemeny_closed(double k0, const BigInt& n0, const BigInt& e0, int n, int g);
BigInt spanning_trees_closed(const BigInt& nst0, const BigInt& n0, const BigInt& e0, int n, int g);

/// ln N_st of tau_n^g(G) from ln N_st(G), without materializing the count.
double log_spanning_trees_closed(double log_nst0, const BigInt& n0, const BigInt& e0, int n,
                                 int g);

/// Report for generation g from a generation-0 report: doubles always,
/// exact fields when the base carries them.
InvariantReport closed_form_report(const InvariantReport& base, const BigInt& n0,
                                   const BigInt& e0, int n, int g);

inline constexpr std::size_t kDefaultExactCap = 200;

/// Characteristic polynomial of I - D^{-1} A (similar to the normalized
/// Laplacian) over the rationals, by Hessenberg reduction.
Polynomial walk_laplacian_charpoly(const Graph& graph, std::size_t vertex_cap = kDefaultExactCap);

/// Exact Kemeny's constant: with p(x) = x q(x) the characteristic
/// polynomial, sum 1/lambda over nonzero roots is -q_1 / q_0.
Rational kemeny_exact(const Graph& graph, std::size_t vertex_cap = kDefaultExactCap);

}  // namespace polyspec
