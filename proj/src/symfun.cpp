#include "ctkit/symfun.hpp"

#include <stdexcept>

namespace ctkit {

namespace {

void require_alphabet(const TablePtr& table, std::span<const int> a) {
  if (table->n_x() < static_cast<int>(a.size())) throw std::invalid_argument("alphabet larger than the x-group");
  for (int ai : a)
    if (ai < 0) throw std::invalid_argument("alphabet multiplicities must be nonnegative");
}

int sign_of(const Permutation& w) { return length(w) % 2 ? -1 : 1; }

}  // namespace

MPoly x_monomial(const TablePtr& table, const Composition& v) {
  if (static_cast<int>(v.size()) > table->n_x()) throw std::invalid_argument("x_monomial: too many exponents");
  Monomial m(table->size());
  for (std::size_t i = 0; i < v.size(); ++i) m.set(table->x(static_cast<int>(i) + 1), v[i]);
  return MPoly::monomial(table, m);
}

MPoly complete_h(int m, const TablePtr& table, std::span<const int> a) {
  require_alphabet(table, a);
  if (m < 0) return MPoly(table);
  // series[d] = h_d of the letters processed so far.
  std::vector<MPoly> series(static_cast<std::size_t>(m) + 1, MPoly(table));
  series[0] = MPoly::constant(table, 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int k = 0; k < a[i]; ++k) {
      Monomial letter(table->size());
      letter.set(0, k);
      letter.set(table->x(static_cast<int>(i) + 1), 1);
      const MPoly l = MPoly::monomial(table, letter);
      std::vector<MPoly> powers{MPoly::constant(table, 1)};
      for (int c = 1; c <= m; ++c) powers.push_back(powers.back() * l);
      std::vector<MPoly> next(series.size(), MPoly(table));
      for (int d = 0; d <= m; ++d)
        for (int c = 0; c <= d; ++c) next[static_cast<std::size_t>(d)] += series[static_cast<std::size_t>(d - c)] * powers[static_cast<std::size_t>(c)];
      series = std::move(next);
    }
  return series[static_cast<std::size_t>(m)];
}

MPoly complete_h_oracle(int m, const TablePtr& table, std::span<const int> a) {
  require_alphabet(table, a);
  MPoly r(table);
  if (m < 0) return r;
  for (const auto& c : compositions_of(static_cast<int>(a.size()), m)) {
    IntPoly coeff(1);
    for (std::size_t i = 0; i < a.size(); ++i) coeff *= a[i] == 0 ? IntPoly(c[i] == 0 ? 1 : 0) : qbinom(a[i] + c[i] - 1, c[i]);
    r += scale_by_intpoly(x_monomial(table, c), coeff);
  }
  return r;
}

MPoly schur_principal(const Composition& lambda, const TablePtr& table, std::span<const int> a) {
  if (!is_partition(lambda)) throw std::invalid_argument("schur_principal: not a partition");
  int len = 0;
  while (len < static_cast<int>(lambda.size()) && lambda[static_cast<std::size_t>(len)] > 0) ++len;
  if (len == 0) return MPoly::constant(table, 1);
  // h_k for every index appearing in the determinant.
  const int top = lambda.front() + len;
  std::vector<MPoly> h;
  for (int k = 0; k <= top; ++k) h.push_back(complete_h(k, table, a));
  auto entry = [&](int i, int j) {
    const int k = lambda[static_cast<std::size_t>(i - 1)] - i + j;
    return k < 0 ? MPoly(table) : h[static_cast<std::size_t>(k)];
  };
  MPoly det(table);
  for (const auto& w : all_permutations(len)) {
    MPoly term = MPoly::constant(table, sign_of(w));
    for (int i = 1; i <= len && !term.is_zero(); ++i) term = term * entry(i, w(i));
    det += term;
  }
  return det;
}

MPoly schur_principal(const Composition& lambda, std::span<const int> a) {
  return schur_principal(lambda, make_table({.x = static_cast<int>(a.size())}), a);
}

MPoly schur_bialternant(const Composition& lambda, const TablePtr& table, int n) {
  if (!is_partition(lambda) || static_cast<int>(lambda.size()) > n) throw std::invalid_argument("schur_bialternant: bad partition");
  Composition e(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = (i < static_cast<int>(lambda.size()) ? lambda[static_cast<std::size_t>(i)] : 0) + n - 1 - i;
  MPoly f = x_monomial(table, e);
  // Reduced word of the longest element: (1..n-1)(1..n-2)...(1).
  for (int top = n - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) f = divided_difference(i, f);
  return f;
}

IntPoly hook_content(const Composition& lambda, int a) {
  if (!is_partition(lambda)) throw std::invalid_argument("hook_content: not a partition");
  if (a < 0) throw std::invalid_argument("hook_content: negative a");
  const Composition conj = conjugate(lambda);
  QRat r(1);
  int nl = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    nl += static_cast<int>(i) * lambda[i];
    for (int j = 0; j < lambda[i]; ++j) {
      const int content = j - static_cast<int>(i);
      const int hook = (lambda[i] - j) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i)) - 1;
      r *= QRat(IntPoly::one_minus_q_power(a + content), IntPoly::one_minus_q_power(hook));
    }
  }
  return r.to_poly("hook_content").shifted(nl);
}

MPoly swap_x(int i, const MPoly& f) {
  const VarTable& t = *f.table();
  if (i < 1 || i >= t.n_x()) throw std::out_of_range("swap_x index");
  const int xi = t.x(i), xj = t.x(i + 1);
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& term : f.terms()) {
    Monomial m = term.mono;
    m.set(xi, term.mono[xj]);
    m.set(xj, term.mono[xi]);
    out.push_back({m, term.coeff});
  }
  return MPoly::from_terms(f.table(), std::move(out));
}

MPoly divided_difference(int i, const MPoly& f) {
  const VarTable& t = *f.table();
  if (i < 1 || i >= t.n_x()) throw std::out_of_range("divided_difference index");
  const int xi = t.x(i), xj = t.x(i + 1);
  std::vector<Term> out;
  for (const auto& term : f.terms()) {
    const int p = term.mono[xi], r = term.mono[xj];
    // (x_i^p x_j^r - x_i^r x_j^p) / (x_i - x_j) as a geometric sum.
    const int lo = std::min(p, r), hi = std::max(p, r);
    const mpz_class c = p >= r ? term.coeff : mpz_class(-term.coeff);
    for (int k = 0; k < hi - lo; ++k) {
      Monomial m = term.mono;
      m.set(xi, hi - 1 - k);
      m.set(xj, lo + k);
      out.push_back({m, c});
    }
  }
  return MPoly::from_terms(f.table(), std::move(out));
}

MPoly isobaric_pi(int i, const MPoly& f) {
  return divided_difference(i, f * MPoly::variable(f.table(), f.table()->x(i)));
}

MPoly isobaric_pihat(int i, const MPoly& f) { return isobaric_pi(i, f) - f; }

namespace {

MPoly key_impl(const Composition& v, const TablePtr& table, SwapOrder order, bool hat) {
  int ascent = -1;
  for (int i = 1; i < static_cast<int>(v.size()); ++i)
    if (v[static_cast<std::size_t>(i - 1)] < v[static_cast<std::size_t>(i)]) {
      ascent = i;
      if (order == SwapOrder::leftmost) break;
    }
  if (ascent < 0) return x_monomial(table, v);
  Composition sv = v;
  std::swap(sv[static_cast<std::size_t>(ascent - 1)], sv[static_cast<std::size_t>(ascent)]);
  const MPoly inner = key_impl(sv, table, order, hat);
  return hat ? isobaric_pihat(ascent, inner) : isobaric_pi(ascent, inner);
}

}  // namespace

MPoly key_poly(const Composition& v, const TablePtr& table, SwapOrder order) { return key_impl(v, table, order, false); }

MPoly keyhat_poly(const Composition& v, const TablePtr& table, SwapOrder order) { return key_impl(v, table, order, true); }

MPoly reverse_invert(const MPoly& g) {
  const VarTable& t = *g.table();
  const int n = t.n_x();
  std::vector<std::optional<Monomial>> images(static_cast<std::size_t>(t.size()));
  for (int k = 0; k < t.size(); ++k) {
    Monomial m(t.size());
    const VarDesc& d = t.desc(k);
    if (d.family == Family::x)
      m.set(t.x(n + 1 - d.i), -1);
    else
      m.set(k, 1);
    images[static_cast<std::size_t>(k)] = m;
  }
  return substitute(g, g.table(), images);
}

IntPoly scalar_product(const MPoly& f, const MPoly& g) {
  require_same_table(f, g);
  const TablePtr& t = f.table();
  const int n = t->n_x();
  std::vector<MPoly> factors{f, reverse_invert(g)};
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) factors.push_back(poch_factor(t, i, j, 0, 1));
  std::vector<int> zero(static_cast<std::size_t>(n), 0);
  return coeff_x_of_product(factors, zero).to_intpoly();
}

}  // namespace ctkit
