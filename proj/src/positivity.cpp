#include "sgm/positivity.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "sgm/parallel.hpp"

namespace sgm {

namespace {

int sign_of(const Rational& r) { return sgn(r); }

Rational quad_form(const RatMatrix& q, const RatVector& w) {
  Rational s = 0;
  for (size_t i = 0; i < q.rows(); ++i) {
    if (w[i] == 0) continue;
    for (size_t j = 0; j < q.cols(); ++j)
      if (w[j] != 0 && q(i, j) != 0) s += w[i] * q(i, j) * w[j];
  }
  return s;
}

PsdResult not_psd(const RatMatrix& q, RatVector w) {
  PsdResult r;
  r.witness_value = quad_form(q, w);
  if (r.witness_value >= 0) throw std::logic_error("PSD witness fails exact verification");
  r.witness = std::move(w);
  return r;
}

// Monomials of total degree k in m variables, lex-descending.
std::vector<Exponent> monomials_of_degree(int m, int k) {
  std::vector<Exponent> out;
  Exponent e(m, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == m - 1) {
      e[var] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[var] = a;
      self(self, var + 1, left - a);
    }
  };
  if (m == 0) {
    if (k == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, k);
  return out;
}

Exponent add_exp(const Exponent& a, const Exponent& b) {
  Exponent s(a.size());
  for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

Rational eval_monomial(const Exponent& e, const std::vector<Rational>& z) {
  Rational v = 1;
  for (size_t i = 0; i < e.size(); ++i)
    for (int p = 0; p < e[i]; ++p) v *= z[i];
  return v;
}

Poly gram_polynomial(const std::vector<Exponent>& v, const RatMatrix& q, int n_vars) {
  Poly g(n_vars);
  for (size_t a = 0; a < v.size(); ++a)
    for (size_t b = 0; b < v.size(); ++b)
      if (q(a, b) != 0) g.add_term(add_exp(v[a], v[b]), q(a, b));
  return g;
}

// Integer points of [-r, r]^m, r as large as possible with at most `cap` points.
std::vector<std::vector<Rational>> zero_search_grid(int m) {
  int r = 2;
  while (r > 1 && std::pow(2.0 * r + 1, m) > 20000) --r;
  std::vector<std::vector<Rational>> pts;
  std::vector<int> cur(m, -r);
  while (true) {
    pts.emplace_back(cur.begin(), cur.end());
    int i = 0;
    while (i < m && cur[i] == r) cur[i++] = -r;
    if (i == m) break;
    ++cur[i];
  }
  return pts;
}

Rational round_to(double x, int log2_den) {
  double s = std::ldexp(x, log2_den);
  Integer num;
  mpz_set_d(num.get_mpz_t(), std::nearbyint(s));
  Integer den = 1;
  den <<= log2_den;
  return make_rational(num, den);
}

}  // namespace

PsdResult psd_check(const RatMatrix& q) {
  if (!q.is_symmetric()) throw std::invalid_argument("psd_check needs a symmetric matrix");
  const size_t n = q.rows();
  for (size_t i = 0; i < n; ++i)
    if (q(i, i) < 0) {
      RatVector w(n);
      w[i] = 1;
      return not_psd(q, std::move(w));
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (q(i, j) == 0 || q(i, i) * q(j, j) >= q(i, j) * q(i, j)) continue;
      RatVector w(n);
      w[i] = 1;
      w[j] = -sign_of(q(i, j));
      if (quad_form(q, w) < 0) return not_psd(q, std::move(w));
      if (q(j, j) > 0) {
        w[i] = q(j, j);
        w[j] = -q(i, j);
      } else {
        w[i] = -q(i, j);
        w[j] = q(i, i);
      }
      return not_psd(q, std::move(w));
    }

  RatMatrix a = q;
  LdlFactor f;
  f.perm.resize(n);
  for (size_t i = 0; i < n; ++i) f.perm[i] = i;
  f.l = RatMatrix::identity(n);
  f.d.assign(n, 0);

  // Witness for a Schur-complement vector u supported on positions >= s.
  auto lift = [&](const RatVector& u) {
    RatVector z = u;
    for (size_t i = n; i-- > 0;)
      for (size_t j = i + 1; j < n; ++j)
        if (f.l(j, i) != 0 && z[j] != 0) z[i] -= f.l(j, i) * z[j];
    RatVector w(n);
    for (size_t i = 0; i < n; ++i) w[f.perm[i]] = z[i];
    return w;
  };

  for (size_t s = 0; s < n; ++s) {
    size_t p = s;
    for (size_t i = s + 1; i < n; ++i)
      if (a(i, i) > a(p, p)) p = i;
    if (a(p, p) < 0) {
      RatVector u(n);
      u[p] = 1;
      return not_psd(q, lift(u));
    }
    if (a(p, p) == 0) {
      for (size_t i = s; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            RatVector u(n);
            u[i] = 1;
            u[j] = -sign_of(a(i, j));
            return not_psd(q, lift(u));
          }
      break;
    }
    if (p != s) {
      for (size_t k = 0; k < n; ++k) std::swap(a(s, k), a(p, k));
      for (size_t k = 0; k < n; ++k) std::swap(a(k, s), a(k, p));
      for (size_t k = 0; k < s; ++k) std::swap(f.l(s, k), f.l(p, k));
      std::swap(f.perm[s], f.perm[p]);
    }
    f.d[s] = a(s, s);
    for (size_t i = s + 1; i < n; ++i) f.l(i, s) = a(i, s) / f.d[s];
    for (size_t i = s + 1; i < n; ++i) {
      if (f.l(i, s) == 0) continue;
      for (size_t j = s + 1; j < n; ++j)
        if (a(s, j) != 0) a(i, j) -= f.l(i, s) * a(s, j);
    }
    for (size_t i = s + 1; i < n; ++i) a(i, s) = a(s, i) = 0;
  }
  PsdResult r;
  r.psd = true;
  r.ldl = std::move(f);
  return r;
}

SosCheck verify_sos(const SymPoly& target, const SosCertificate& cert) {
  SosCheck out;
  const size_t size = cert.v.size();
  if (cert.q.rows() != size || cert.q.cols() != size) {
    out.reason = "Gram matrix size does not match the monomial vector";
    return out;
  }
  if (!cert.q.is_symmetric()) {
    out.reason = "Gram matrix is not symmetric";
    return out;
  }
  if (cert.scale < 0) {
    out.reason = "negative scale";
    return out;
  }
  int nv = size == 0 ? target.n_vars() : static_cast<int>(cert.v.front().size());
  for (const auto& e : cert.v)
    if (static_cast<int>(e.size()) != nv || 2 * exponent_degree(e) != target.degree()) {
      out.reason = "monomial vector has inconsistent length or degree";
      return out;
    }
  if (nv > target.n_vars()) {
    out.reason = "certificate uses more variables than the target";
    return out;
  }
  Poly g = gram_polynomial(cert.v, cert.q, nv);
  SymPoly s(target.n_vars(), target.degree());
  bool direct = false;
  if (nv == target.n_vars()) {
    try {
      s = from_symmetric_poly(g);
      direct = true;
    } catch (const std::invalid_argument&) {
    }
  }
  if (!direct) s = symmetrize_poly(g, target.n_vars());
  if (s.is_zero() || target.is_zero()) {
    if (s.is_zero() != target.is_zero()) {
      out.reason = "polynomial identity fails";
      return out;
    }
    out.scale = 1;
  } else {
    const auto& [lambda, c] = *target.terms().begin();
    Rational sc = s.m_coeff(lambda);
    if (sc == 0 || c / sc <= 0 || s * (c / sc) != target) {
      out.reason = "polynomial identity fails";
      return out;
    }
    out.scale = c / sc;
  }
  if (cert.scale != 0 && cert.scale != out.scale) {
    out.reason = "stated scale " + to_string(cert.scale) + " differs from " + to_string(out.scale);
    return out;
  }
  if (!psd_check(cert.q).psd) {
    out.reason = "Gram matrix is not positive semidefinite";
    return out;
  }
  out.ok = true;
  return out;
}

std::optional<SymPoly> restrict_symmetrization(const SymPoly& target, int m) {
  const int n = target.n_vars();
  if (m < 1 || m > n)
    throw std::invalid_argument("restriction to " + std::to_string(m) + " of " + std::to_string(n) + " variables");
  SymPoly s(m, target.degree());
  const Rational mf(factorial(static_cast<unsigned>(m)));
  for (const auto& [lambda, c] : target.terms()) {
    if (static_cast<int>(lambda.size()) > m) return std::nullopt;
    s.add_term(lambda, c * Rational(padded_multiplicity_factorial(lambda, m)) /
                           (mf * Rational(padded_multiplicity_factorial(lambda, n))));
  }
  return s;
}

std::optional<SosCertificate> find_sos(const SymPoly& target, int n_active, const SosSearchOptions& opts) {
  if (target.degree() % 2 != 0)
    throw std::invalid_argument("SOS search needs even degree, got " + std::to_string(target.degree()));
  const int k = target.degree() / 2;
  auto restricted = restrict_symmetrization(target, n_active);
  if (!restricted) return std::nullopt;
  if (target.is_zero()) return SosCertificate{{}, RatMatrix(0, 0), 1};

  Poly full = restricted->expand();
  Rational top = 0;
  for (const auto& [e, c] : full.terms()) top = std::max(top, Rational(abs(c)));
  full *= 1 / top;

  // Translation invariance lets the last variable be set to zero.
  const bool reduce = n_active >= 2 && is_translation_invariant(*restricted);
  const int m = reduce ? n_active - 1 : n_active;
  Poly f(m);
  for (const auto& [e, c] : full.terms()) {
    if (reduce && e.back() != 0) continue;
    f.add_term(Exponent(e.begin(), e.begin() + m), c);
  }

  const auto basis_monos = monomials_of_degree(m, k);
  const size_t nv = basis_monos.size();

  // Every real zero z of f forces v(z) into the kernel of any Gram matrix.
  std::vector<RatVector> kernel_rows;
  {
    auto grid = zero_search_grid(m);
    std::vector<char> is_zero(grid.size(), 0);
    parallel_for(grid.size(), [&](size_t i) {
      bool origin = std::all_of(grid[i].begin(), grid[i].end(), [](const Rational& x) { return x == 0; });
      is_zero[i] = !origin && f.evaluate(grid[i]) == 0;
    });
    for (size_t i = 0; i < grid.size(); ++i) {
      if (!is_zero[i]) continue;
      RatVector row(nv);
      for (size_t a = 0; a < nv; ++a) row[a] = eval_monomial(basis_monos[a], grid[i]);
      kernel_rows.push_back(std::move(row));
    }
  }
  std::vector<RatVector> face;
  if (kernel_rows.empty()) {
    for (size_t a = 0; a < nv; ++a) {
      RatVector e(nv);
      e[a] = 1;
      face.push_back(std::move(e));
    }
  } else {
    RatMatrix km = RatMatrix::from_rows(kernel_rows);
    row_reduce(km);
    face = nullspace(std::move(km));
  }
  const size_t r = face.size();
  if (r == 0) return std::nullopt;

  // Unknowns: upper triangle of R with Q = B R B^T, B having the face vectors
  // as columns.
  const size_t nx = r * (r + 1) / 2;
  auto xi = [r](size_t i, size_t j) {
    if (i > j) std::swap(i, j);
    return i * r - i * (i - 1) / 2 + (j - i);
  };
  std::map<Exponent, size_t> row_of;
  for (size_t a = 0; a < nv; ++a)
    for (size_t b = a; b < nv; ++b) row_of.emplace(add_exp(basis_monos[a], basis_monos[b]), 0);
  for (const auto& [e, c] : f.terms())
    if (!row_of.contains(e)) return std::nullopt;
  {
    size_t idx = 0;
    for (auto& [e, i] : row_of) i = idx++;
  }
  RatMatrix lin(row_of.size(), nx);
  RatVector rhs(row_of.size());
  for (const auto& [e, c] : f.terms()) rhs[row_of.at(e)] = c;
  for (size_t a = 0; a < nv; ++a)
    for (size_t b = 0; b < nv; ++b) {
      size_t row = row_of.at(add_exp(basis_monos[a], basis_monos[b]));
      for (size_t i = 0; i < r; ++i) {
        if (face[i][a] == 0) continue;
        for (size_t j = 0; j < r; ++j)
          if (face[j][b] != 0) lin(row, xi(i, j)) += face[i][a] * face[j][b];
      }
    }
  auto x0 = solve(lin, rhs);
  if (!x0) return std::nullopt;
  auto dirs = nullspace(lin);
  const size_t p = dirs.size();

  auto to_matrix = [&](const Eigen::VectorXd& x) {
    Eigen::MatrixXd m2(r, r);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = i; j < r; ++j) m2(i, j) = m2(j, i) = x[xi(i, j)];
    return m2;
  };
  Eigen::VectorXd x0d(nx), weight(nx);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = i; j < r; ++j) weight[xi(i, j)] = i == j ? 1.0 : 2.0;
  for (size_t t = 0; t < nx; ++t) x0d[t] = (*x0)[t].get_d();
  Eigen::MatrixXd nd(nx, p);
  for (size_t l = 0; l < p; ++l)
    for (size_t t = 0; t < nx; ++t) nd(t, l) = dirs[l][t].get_d();
  Eigen::MatrixXd gram = nd.transpose() * weight.asDiagonal() * nd;
  Eigen::LDLT<Eigen::MatrixXd> solver(gram);
  auto project = [&](const Eigen::MatrixXd& target_r) {
    Eigen::VectorXd y(nx);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = i; j < r; ++j) y[xi(i, j)] = target_r(i, j);
    if (p == 0) return Eigen::VectorXd(Eigen::VectorXd::Zero(0));
    Eigen::VectorXd rhs_d = nd.transpose() * weight.asDiagonal() * (y - x0d);
    return Eigen::VectorXd(solver.solve(rhs_d));
  };

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> noise(0.0, 1e-3);
  Eigen::MatrixXd start = Eigen::MatrixXd::Identity(r, r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = i; j < r; ++j) start(i, j) = start(j, i) = start(i, j) + noise(rng);
  Eigen::VectorXd t = project(start);

  auto current = [&]() { return to_matrix(p == 0 ? x0d : Eigen::VectorXd(x0d + nd * t)); };

  auto try_round = [&]() -> std::optional<SosCertificate> {
    for (int j = 0; j <= opts.max_denominator_log2; ++j) {
      RatVector x = *x0;
      for (size_t l = 0; l < p; ++l) {
        Rational tl = round_to(t[l], j);
        if (tl == 0) continue;
        for (size_t s = 0; s < nx; ++s)
          if (dirs[l][s] != 0) x[s] += tl * dirs[l][s];
      }
      RatMatrix rr(r, r);
      for (size_t i = 0; i < r; ++i)
        for (size_t jj = i; jj < r; ++jj) rr(i, jj) = rr(jj, i) = x[xi(i, jj)];
      if (!psd_check(rr).psd) continue;
      // Q_y = B R B^T over the reduced monomials.
      RatMatrix bmat(nv, r);
      for (size_t i = 0; i < r; ++i)
        for (size_t a = 0; a < nv; ++a) bmat(a, i) = face[i][a];
      RatMatrix qy = bmat * rr * bmat.transpose();
      SosCertificate cert;
      if (reduce) {
        // y_i = x_i - x_last: expand every reduced monomial in x.
        std::vector<Poly> images;
        for (int i = 0; i < m; ++i) images.push_back(Poly::variable(n_active, i) - Poly::variable(n_active, m));
        std::map<Exponent, size_t> col_of;
        std::vector<Poly> expanded;
        for (const auto& e : basis_monos) {
          expanded.push_back(Poly::monomial(e, 1).substitute(images));
          for (const auto& [xe, c] : expanded.back().terms()) col_of.emplace(xe, 0);
        }
        size_t idx = 0;
        for (auto& [e, i] : col_of) {
          i = idx++;
          cert.v.push_back(e);
        }
        RatMatrix mm(nv, col_of.size());
        for (size_t a = 0; a < nv; ++a)
          for (const auto& [xe, c] : expanded[a].terms()) mm(a, col_of.at(xe)) = c;
        cert.q = mm.transpose() * qy * mm;
      } else {
        cert.v = basis_monos;
        cert.q = qy;
      }
      // Drop monomials whose Gram row vanishes.
      std::vector<size_t> keep;
      for (size_t a = 0; a < cert.v.size(); ++a)
        for (size_t b = 0; b < cert.v.size(); ++b)
          if (cert.q(a, b) != 0) {
            keep.push_back(a);
            break;
          }
      SosCertificate slim;
      for (size_t a : keep) slim.v.push_back(cert.v[a]);
      slim.q = RatMatrix(keep.size(), keep.size());
      for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = 0; b < keep.size(); ++b) slim.q(a, b) = cert.q(keep[a], keep[b]);
      slim.scale = 0;
      auto check = verify_sos(target, slim);
      if (check.ok) {
        slim.scale = check.scale;
        return slim;
      }
    }
    return std::nullopt;
  };

  const double delta = 1e-3;
  for (int it = 1; it <= opts.iterations; ++it) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(current());
    Eigen::VectorXd lam = eig.eigenvalues();
    if (lam.minCoeff() > 0 && (it == 1 || it % 50 == 0 || it == opts.iterations))
      if (auto cert = try_round()) return cert;
    if (p == 0) break;
    for (Eigen::Index i = 0; i < lam.size(); ++i) lam[i] = std::max(lam[i], delta);
    t = project(eig.eigenvectors() * lam.asDiagonal() * eig.eigenvectors().transpose());
  }
  return std::nullopt;
}

std::vector<std::vector<Rational>> sign_battery(int n, uint64_t seed) {
  std::vector<std::vector<Rational>> pts;
  // Sorted multisets of {0, ..., top}.
  int top = 6;
  while (top > 1 && binomial(static_cast<unsigned>(n + top), static_cast<unsigned>(top)) > 8000) --top;
  std::vector<int> cur(n, 0);
  while (true) {
    pts.emplace_back(cur.begin(), cur.end());
    int i = n - 1;
    while (i >= 0 && cur[i] == top) --i;
    if (i < 0) break;
    int v = cur[i] + 1;
    for (int j = i; j < n; ++j) cur[j] = v;
  }
  // Three-value collapse patterns 0^a 1^b t^c with fractional t.
  const Rational extra[] = {Rational(-5, 2), Rational(-1, 2), Rational(1, 2), Rational(3, 2), Rational(5, 2),
                            Rational(10)};
  for (const auto& tv : extra)
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        std::vector<Rational> pt;
        pt.insert(pt.end(), a, Rational(0));
        pt.insert(pt.end(), b, Rational(1));
        pt.insert(pt.end(), n - a - b, tv);
        pts.push_back(std::move(pt));
      }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6);
  for (int k = 0; k < 2000; ++k) {
    std::vector<Rational> pt;
    for (int i = 0; i < n; ++i) {
      int a = num(rng);
      pt.push_back(make_rational(a, den(rng)));
    }
    pts.push_back(std::move(pt));
  }
  return pts;
}

SignSearchResult sign_witness_search(const SymPoly& target, uint64_t seed) {
  SignSearchResult out;
  auto pts = sign_battery(target.n_vars(), seed);
  out.points_tried = pts.size();
  if (target.is_zero()) return out;
  std::vector<int> sign(pts.size());
  std::vector<Rational> vals(pts.size());
  parallel_for(pts.size(), [&](size_t i) {
    vals[i] = target.evaluate(pts[i]);
    sign[i] = sign_of(vals[i]);
  });
  std::optional<size_t> neg, pos;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (sign[i] < 0 && !neg) neg = i;
    if (sign[i] > 0 && !pos) pos = i;
  }
  if (neg) out.negative_point = pts[*neg];
  if (pos) out.positive_point = pts[*pos];
  if (neg && pos)
    out.witness = SignWitness{pts[*neg], vals[*neg], pts[*pos], vals[*pos]};
  return out;
}

}  // namespace sgm
