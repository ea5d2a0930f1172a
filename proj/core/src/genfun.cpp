#include "tvalue/genfun.hpp"

#include <array>
#include <string>

#include "tvalue/error.hpp"
#include "tvalue/extrapolation.hpp"
#include "tvalue/indices.hpp"
#include "tvalue/summation.hpp"

namespace tvalue::genfun {

namespace {

using S = TruncatedSeries;

}  // namespace

RecurrenceState init_state(bool star, int degree_cap) {
  const S u = S::u(degree_cap);
  const S v = S::v(degree_cap);
  const S w = S::w(degree_cap);
  const S uv = u * v;
  RecurrenceState st;
  st.star = star;
  st.degree_cap = degree_cap;
  if (!star) {
    st.e1 = 1.0 - 0.5 * u + 0.5 * v;
    st.e2 = 0.25 * (1.0 - u + v - uv + w);
    st.c_current = inverse(1.0 - u);
  } else {
    st.e1 = 3.0 - 0.5 * u - 0.5 * v;
    st.e2 = 0.25 * (9.0 - 3.0 * u - 3.0 * v + uv - w);
    st.c_current = inverse(1.0 - u - v + uv - w);
  }
  st.n = 0;
  return st;
}

TruncatedSeries shifted_root_product(const TruncatedSeries& e1, const TruncatedSeries& e2,
                                     double m) {
  return m * m + m * (e1 - 2.0) + (1.0 - e1 + e2);
}

RecurrenceState step(RecurrenceState state) {
  const double m = static_cast<double>(state.n + 1);
  const int cap = state.degree_cap;
  const S u = S::u(cap);
  if (!state.star) {
    const S num = shifted_root_product(state.e1, state.e2, m);
    const S den = (m + 0.5) * ((m + 0.5) - 0.5 * u);
    state.c_current = divide(state.c_current * num, den);
  } else {
    const S num = (m - 0.5) * ((m - 0.5) - 0.5 * u);
    const S den = shifted_root_product(state.e1, state.e2, m);
    state.c_current = divide(state.c_current * num, den);
  }
  ++state.n;
  return state;
}

TruncatedSeries raw_ratio(bool star, int degree_cap, long long m) {
  const S u = S::u(degree_cap);
  const S v = S::v(degree_cap);
  const S w = S::w(degree_cap);
  const S uv = u * v;
  const double mm = static_cast<double>(m);
  if (!star) {
    // a_{j+1} (j+1)(j+1-u) = [(j-1)(j-2) + (1-u+v)(j-1) - (uv-w)] a_{j-1}, j = 2m.
    const double j = 2.0 * mm;
    const S num = (j - 1.0) * (j - 2.0) + (j - 1.0) * (1.0 - u + v) - (uv - w);
    const S den = (j + 1.0) * ((j + 1.0) - u);
    return divide(num, den);
  }
  // a*_j [j(j-1) + j(1-u-v) + uv - w] = (j-2)(j-2-u) a*_{j-2}, j = 2m+1.
  const double j = 2.0 * mm + 1.0;
  const S num = (j - 2.0) * ((j - 2.0) - u);
  const S den = j * (j - 1.0) + j * (1.0 - u - v) + uv - w;
  return divide(num, den);
}

SeriesEstimate phi0_at_one(bool star, int degree_cap, long long n_terms, int log_degree) {
  // c_m ~ C(u,v,w) m^{-2+v/2} in both variants, so the tail of the v^b
  // coefficient is N^-1 times a degree-b polynomial in log N.
  const bool per_coefficient = log_degree < 0;
  const int widest = per_coefficient ? degree_cap : log_degree;
  const auto points = geometric_checkpoints(n_terms, TailModel{1.0, widest, 0}.unknowns() + 1, false);

  RecurrenceState st = init_state(star, degree_cap);
  CompensatedVectorSum acc(st.c_current.size());
  acc.add(st.c_current.data());
  // points are descending; record from the back.
  std::vector<std::vector<double>> partial(points.size());
  std::size_t next = points.size();
  while (st.n < n_terms) {
    st = step(std::move(st));
    acc.add(st.c_current.data());
    while (next > 0 && points[next - 1] == st.n) partial[--next] = acc.value();
  }

  const std::vector<double> ns(points.begin(), points.end());
  std::vector<TailFit> fits;
  for (int j = 0; j <= widest; ++j) {
    if (per_coefficient || j == widest) fits.emplace_back(ns, TailModel{1.0, j, 0});
  }
  SeriesEstimate out{S(degree_cap), S(degree_cap), n_terms, widest};
  std::vector<double> column(points.size());
  for (std::size_t i = 0; i < out.value.size(); ++i) {
    for (std::size_t p = 0; p < points.size(); ++p) column[p] = partial[p][i];
    const TailFit& fit = per_coefficient ? fits[static_cast<std::size_t>(out.value.monomial_at(i).b)] : fits.front();
    const Extrapolated e = fit.apply(column);
    out.value.data()[i] = e.value;
    out.err.data()[i] = e.err_bound;
  }
  return out;
}

Monomial g0_exponent(int k, int n, int s) { return {k - n - s, n - s, s - 1}; }

Estimate extract_g0(const SeriesEstimate& series, int k, int n, int s) {
  if (!admissible_set_nonempty(k, n, s)) {
    throw Error(ErrorKind::invalid_index, "I0(" + std::to_string(k) + "," + std::to_string(n) +
                                              "," + std::to_string(s) + ") is empty");
  }
  const Monomial m = g0_exponent(k, n, s);
  if (m.degree() > series.value.degree_cap()) {
    throw Error(ErrorKind::out_of_range, "G0(" + std::to_string(k) + "," + std::to_string(n) +
                                             "," + std::to_string(s) + ") needs degree cap " +
                                             std::to_string(m.degree()));
  }
  return {series.value.coeff(m), series.err.coeff(m), series.n_terms, series.extrap_order};
}

ZSeries build_z_series(bool star, int degree_cap, int z_len) {
  if (z_len < 3 || z_len % 2 == 0) throw Error(ErrorKind::domain, "z_len must be odd and >= 3");
  ZSeries f(z_len, degree_cap);
  RecurrenceState st = init_state(star, degree_cap);
  for (int j = 1; j < z_len; j += 2) {
    f[j] = st.c_current;
    st = step(std::move(st));
  }
  return f;
}

ZSeries ode_residual(const ZSeries& f, bool star) {
  const int cap = f.degree_cap();
  const S zero(cap);
  const S u = S::u(cap);
  const S v = S::v(cap);
  const S w = S::w(cap);
  const S uv_w = u * v - w;
  const ZSeries d1 = z_differentiate(f);
  const ZSeries d2 = z_differentiate(d1);
  ZSeries r(f.length(), cap);
  if (!star) {
    const std::array<double, 4> p2{0.0, 1.0, 0.0, -1.0};
    const std::array<S, 3> p1{1.0 - u, zero, (u - 1.0) - v};
    const std::array<S, 2> p0{zero, uv_w};
    r = z_shift_multiply(d2, p2) + z_shift_multiply(d1, p1) + z_shift_multiply(f, p0);
    r[0] -= S::constant(cap, 1.0);
  } else {
    const std::array<double, 5> p2{0.0, 0.0, 1.0, 0.0, -1.0};
    const std::array<S, 4> p1{zero, (1.0 - u) - v, zero, u - 1.0};
    const std::array<S, 1> p0{uv_w};
    r = z_shift_multiply(d2, p2) + z_shift_multiply(d1, p1) + z_shift_multiply(f, p0);
    if (r.length() > 1) r[1] -= S::constant(cap, 1.0);
  }
  return r;
}

ZSeries recover_phi(const ZSeries& f0, bool /*star*/) {
  // The first equation of the coupled system has the same form in both cases.
  const int cap = f0.degree_cap();
  const S u = S::u(cap);
  const S v = S::v(cap);
  const S w = S::w(cap);
  const std::array<S, 2> vz{S(cap), v};
  ZSeries phi = f0.scaled(w - u * v) + z_shift_multiply(z_differentiate(f0), vz);
  phi[0] += S::constant(cap, 1.0);
  return phi;
}

ZSeries coupled_residual(const ZSeries& f0, const ZSeries& phi, bool star) {
  const int cap = f0.degree_cap();
  const S v = S::v(cap);
  const S w = S::w(cap);
  const ZSeries dg = z_differentiate(phi - f0.scaled(w));
  ZSeries r(f0.length(), cap);
  if (!star) {
    const std::array<double, 3> p{1.0, 0.0, -1.0};
    const std::array<S, 2> vz{S(cap), v};
    r = z_shift_multiply(dg, p) - z_shift_multiply(phi, vz);
    r[0] -= v;
    if (r.length() > 1) r[1] += v;
  } else {
    const std::array<double, 4> p{0.0, 1.0, 0.0, -1.0};
    r = z_shift_multiply(dg, p) - phi.scaled(v);
    r[0] += v;
    if (r.length() > 1) r[1] -= v;
  }
  return r;
}

}  // namespace tvalue::genfun
