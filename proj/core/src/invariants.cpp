#include "polyspec/invariants.hpp"

#include <cmath>
#include <string>

#include "polyspec/error.hpp"

namespace polyspec {

const char* to_string(Method method) {
  return method == Method::FromSpectrum ? "from_spectrum" : "closed_form";
}

namespace {

const double kLog2 = std::log(2.0);
// Eigenvalue products carry ~1e-12 relative error, so rounding is trusted below 1e9.
const double kExactIntegerLimit = 9.0 * std::log(10.0);

Rational big(const BigInt& v) { return Rational(v); }

BigInt ipow(long base, unsigned long exponent) { return pow_big(BigInt(base), exponent); }

unsigned long exponent_of(const BigInt& value, const char* what) {
  if (sgn(value) < 0) {
    throw InternalError(std::string(what) + ": negative exponent");
  }
  if (!value.fits_ulong_p()) {
    throw CapExceeded(std::string(what) + ": exponent too large to materialize");
  }
  return value.get_ui();
}

void require_generation(int n, int g) {
  if (n < 2) {
    throw InputError("closed form: n must be >= 2");
  }
  if (g < 1) {
    throw InputError("closed form: g must be >= 1 (g = 0 is the identity)");
  }
}

}  // namespace

InvariantReport invariants_from_spectrum_log(const Spectrum& spectrum, const SpectrumContext& ctx,
                                             double log_degree_product) {
  BigInt zeros(0);
  for (const auto& e : spectrum.entries()) {
    if (e.value == 0.0) {
      zeros += e.multiplicity;
    }
  }
  if (zeros != 1) {
    throw InputError("invariants: eigenvalue 0 must have multiplicity exactly 1");
  }
  long double reciprocal = 0.0L;
  long double log_product = 0.0L;
  for (const auto& e : spectrum.entries()) {
    if (e.value == 0.0) {
      continue;
    }
    const long double mult = e.multiplicity.get_d();
    reciprocal += mult / static_cast<long double>(e.value);
    log_product += mult * std::log(static_cast<long double>(e.value));
  }
  InvariantReport report;
  report.method = Method::FromSpectrum;
  report.kemeny = static_cast<double>(reciprocal);
  report.kirchhoff = static_cast<double>(2.0L * static_cast<long double>(ctx.edges.get_d()) * reciprocal);
  const long double log_nst = static_cast<long double>(log_degree_product) + log_product -
                              std::log(2.0L * static_cast<long double>(ctx.edges.get_d()));
  report.log_spanning_trees = static_cast<double>(log_nst);
  if (log_nst < kExactIntegerLimit) {
    report.spanning_trees = BigInt(static_cast<long>(std::llround(std::exp(log_nst))));
  }
  return report;
}

InvariantReport invariants_from_spectrum(const Spectrum& spectrum, const SpectrumContext& ctx,
                                         const BigInt& degree_product) {
  return invariants_from_spectrum_log(spectrum, ctx, log_of(degree_product));
}

InvariantReport invariants_from_spectrum(const Spectrum& spectrum, const SpectrumContext& ctx,
                                         std::span<const std::size_t> degrees) {
  BigInt product(1);
  for (std::size_t d : degrees) {
    product *= static_cast<unsigned long>(d);
  }
  return invariants_from_spectrum(spectrum, ctx, product);
}

BigInt degree_product(const Graph& graph) {
  BigInt product(1);
  for (std::size_t d : graph.degrees()) {
    product *= static_cast<unsigned long>(d);
  }
  return product;
}

namespace {

BigInt doubling_exponent(const BigInt& n0, const BigInt& e0, int n, int g) {
  BigInt exponent(0);
  for (int k = 1; k <= g; ++k) {
    exponent += predict_counts(n0, e0, n, k).vertices;
  }
  return exponent;
}

}  // namespace

double log_degree_product_iterated(const BigInt& base_product, const BigInt& n0, const BigInt& e0,
                                   int n, int g) {
  return log_of(base_product) + doubling_exponent(n0, e0, n, g).get_d() * kLog2;
}

BigInt degree_product_iterated(const BigInt& base_product, const BigInt& n0, const BigInt& e0,
                               int n, int g) {
  const BigInt exponent = doubling_exponent(n0, e0, n, g);
  BigInt out;
  mpz_mul_2exp(out.get_mpz_t(), base_product.get_mpz_t(),
               exponent_of(exponent, "degree_product_iterated"));
  return out;
}

Rational kirchhoff_step(const Rational& kf, const BigInt& n0, const BigInt& e0, int n) {
  require_generation(n, 1);
  const Rational nn(n);
  const Rational sq = nn * nn - 1;  // n^2 - 1
  const Rational e = big(e0);
  const Rational v = big(n0);
  Rational out = (nn * nn + nn) * kf + Rational(2, 3) * (nn + 1) * sq * e * e -
                 Rational(2, 3) * sq * e * v - Rational(1, 3) * sq * (nn - 2) * e;
  out.canonicalize();
  return out;
}

Rational kemeny_step(const Rational& k, const BigInt& n0, const BigInt& e0, int n) {
  require_generation(n, 1);
  const Rational nn(n);
  Rational out = nn * k + Rational(1, 3) * (nn * nn - 1) * big(e0) -
                 Rational(1, 3) * (nn - 1) * big(n0) - Rational(1, 6) * (nn - 1) * (nn - 2);
  out.canonicalize();
  return out;
}

BigInt spanning_trees_step(const BigInt& nst, const BigInt& n0, const BigInt& e0, int n) {
  require_generation(n, 1);
  const unsigned long a = exponent_of(n0 - 1, "spanning_trees_step");
  const unsigned long b = exponent_of(e0 - n0 + 1, "spanning_trees_step");
  return ipow(n + 1, a) * ipow(n, b) * nst;
}

Rational kirchhoff_iterated(const Rational& kf0, const BigInt& n0, const BigInt& e0, int n, int g) {
  require_generation(n, g);
  const auto ug = static_cast<unsigned long>(g);
  const Rational nn(n);
  const Rational grow = big(ipow(n + 1, ug));  // (n+1)^g
  const Rational ng = big(ipow(n, ug));        // n^g
  const Rational e = big(e0);
  Rational out = big(ipow(static_cast<long>(n) * n + n, ug)) * kf0 -
                 Rational(1, 3) * (nn - 2) * grow * (ng - 1) * e +
                 Rational(2 * (n - 1), 3 * n) * grow *
                     (grow * (nn * nn + 1) - big(ipow(n, ug + 2)) - 1) * e * e -
                 Rational(2, 3) * grow * (ng - 1) * e * big(n0);
  out.canonicalize();
  return out;
}

Rational kemeny_iterated(const Rational& k0, const BigInt& n0, const BigInt& e0, int n, int g) {
  require_generation(n, g);
  const auto ug = static_cast<unsigned long>(g);
  const Rational nn(n);
  const Rational grow = big(ipow(n + 1, ug));
  const Rational ng = big(ipow(n, ug));
  const Rational ng1 = big(ipow(n, ug - 1));
  const Rational bracket = Rational((n - 1) * (n * n + 1), 3 * n) * grow +
                           Rational(1, 3) * (-nn * nn * nn + nn * nn) * ng1 -
                           Rational(n - 1, 3 * n);
  Rational out = ng * k0 - Rational(1, 3) * (ng - 1) * big(n0) -
                 Rational(1, 6) * (nn - 2) * (ng - 1) + bracket * big(e0);
  out.canonicalize();
  return out;
}

namespace {

// N_st(tau^g) = (n+1)^first n^second N_st(G).
struct TreeExponents {
  BigInt first;
  BigInt second;
};

TreeExponents tree_exponents(const BigInt& n0, const BigInt& e0, int n, int g) {
  const auto ug = static_cast<unsigned long>(g);
  const BigInt grow = ipow(n + 1, ug);
  const BigInt n_sq(static_cast<long>(n) * n);
  BigInt first = BigInt(n - 1) * (grow - BigInt(n) * g - 1) * e0;
  BigInt second = (grow + BigInt(n - 1) * n * g - 1) * e0;
  if (!mpz_divisible_p(first.get_mpz_t(), n_sq.get_mpz_t()) ||
      !mpz_divisible_p(second.get_mpz_t(), n_sq.get_mpz_t())) {
    throw InternalError("spanning-tree closed form: exponent not divisible by n^2");
  }
  return {first / n_sq + BigInt(g) * n0 - g, second / n_sq - BigInt(g) * n0 + g};
}

BigInt trees_from_exponents(const BigInt& nst0, const TreeExponents& x, int n, const char* what) {
  return ipow(n + 1, exponent_of(x.first, what)) * ipow(n, exponent_of(x.second, what)) * nst0;
}

}  // namespace

BigInt spanning_trees_iterated(const BigInt& nst0, const BigInt& n0, const BigInt& e0, int n,
                               int g) {
  require_generation(n, g);
  return trees_from_exponents(nst0, tree_exponents(n0, e0, n, g), n, "spanning_trees_iterated");
}

double log_spanning_trees_closed(double log_nst0, const BigInt& n0, const BigInt& e0, int n,
                                 int g) {
  require_generation(n, g);
  const TreeExponents x = tree_exponents(n0, e0, n, g);
  return log_nst0 + x.first.get_d() * std::log(static_cast<double>(n + 1)) +
         x.second.get_d() * std::log(static_cast<double>(n));
}

Rational kirchhoff_closed(const Rational& kf0, const BigInt& n0, const BigInt& e0, int n, int g) {
  require_generation(n, g);
  return g == 1 ? kirchhoff_step(kf0, n0, e0, n) : kirchhoff_iterated(kf0, n0, e0, n, g);
}

double kirchhoff_closed(double kf0, const BigInt& n0, const BigInt& e0, int n, int g) {
  return kirchhoff_closed(to_rational(kf0), n0, e0, n, g).get_d();
}

Rational kemeny_closed(const Rational& k0, const BigInt& n0, const BigInt& e0, int n, int g) {
  require_generation(n, g);
  return g == 1 ? kemeny_step(k0, n0, e0, n) : kemeny_iterated(k0, n0, e0, n, g);
}

double kemeny_closed(double k0, const BigInt& n0, const BigInt& e0, int n, int g) {
  return kemeny_closed(to_rational(k0), n0, e0, n, g).get_d();
}

BigInt spanning_trees_closed(const BigInt& nst0, const BigInt& n0, const BigInt& e0, int n, int g) {
  require_generation(n, g);
  return g == 1 ? spanning_trees_step(nst0, n0, e0, n)
                : spanning_trees_iterated(nst0, n0, e0, n, g);
}

InvariantReport closed_form_report(const InvariantReport& base, const BigInt& n0,
                                   const BigInt& e0, int n, int g) {
  InvariantReport out;
  out.method = Method::ClosedForm;
  out.generation = base.generation + g;
  out.kirchhoff = kirchhoff_closed(base.kirchhoff, n0, e0, n, g);
  out.kemeny = kemeny_closed(base.kemeny, n0, e0, n, g);
  if (base.kirchhoff_exact) {
    out.kirchhoff_exact = kirchhoff_closed(*base.kirchhoff_exact, n0, e0, n, g);
  }
  if (base.kemeny_exact) {
    out.kemeny_exact = kemeny_closed(*base.kemeny_exact, n0, e0, n, g);
  }
  if (base.spanning_trees) {
    out.spanning_trees = spanning_trees_closed(*base.spanning_trees, n0, e0, n, g);
  }
  return out;
}

Polynomial walk_laplacian_charpoly(const Graph& graph, std::size_t vertex_cap) {
  graph.require_connected();
  const std::size_t n = graph.vertex_count();
  if (n > vertex_cap) {
    throw CapExceeded("exact characteristic polynomial: " + std::to_string(n) +
                      " vertices exceeds cap " + std::to_string(vertex_cap));
  }
  std::vector<Rational> h(n * n, Rational(0));
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return h[i * n + j]; };
  for (std::size_t v = 0; v < n; ++v) {
    at(v, v) = 1;
    const Rational step(1, static_cast<long>(graph.degree(static_cast<Vertex>(v))));
    for (Vertex w : graph.neighbors(static_cast<Vertex>(v))) {
      at(v, w) = -step;
    }
  }

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t pivot = m;
    while (pivot < n && sgn(at(pivot, m - 1)) == 0) {
      ++pivot;
    }
    if (pivot == n) {
      continue;
    }
    if (pivot != m) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(at(pivot, j), at(m, j));
      }
      for (std::size_t i = 0; i < n; ++i) {
        std::swap(at(i, pivot), at(i, m));
      }
    }
    for (std::size_t i = m + 1; i < n; ++i) {
      if (sgn(at(i, m - 1)) == 0) {
        continue;
      }
      const Rational t = at(i, m - 1) / at(m, m - 1);
      for (std::size_t j = 0; j < n; ++j) {
        at(i, j) -= t * at(m, j);
      }
      for (std::size_t r = 0; r < n; ++r) {
        at(r, m) += t * at(r, i);
      }
    }
  }

  // p_k = (x - h_kk) p_{k-1} - sum_i h_ik (prod_j h_{j,j-1}) p_{i-1}
  std::vector<Polynomial> p;
  p.reserve(n + 1);
  p.emplace_back(std::vector<Rational>{Rational(1)});
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial next = p[k - 1] * Polynomial(std::vector<Rational>{-at(k - 1, k - 1), Rational(1)});
    Rational t(1);
    for (std::size_t i = k - 1; i >= 1; --i) {
      t *= at(i, i - 1);
      if (sgn(t) == 0) {
        break;
      }
      next -= p[i - 1] * (t * at(i - 1, k - 1));
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

Rational kemeny_exact(const Graph& graph, std::size_t vertex_cap) {
  const Polynomial p = walk_laplacian_charpoly(graph, vertex_cap);
  // p(0) = 0 (zero eigenvalue); nonzero roots are those of p(x) / x.
  if (sgn(p.coeff(0)) != 0 || sgn(p.coeff(1)) == 0) {
    throw InternalError("kemeny_exact: zero eigenvalue must be simple");
  }
  Rational k = -p.coeff(2) / p.coeff(1);
  k.canonicalize();
  return k;
}

}  // namespace polyspec
