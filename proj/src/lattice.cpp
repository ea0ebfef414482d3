#include "lvo/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lvo {

std::string Charge::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ")";
  return os.str();
}

linalg::SVec Lattice::chiral_weight(const Charge& l) const {
  linalg::SVec w(space.d_plus, Scalar::zero(backend));
  for (int i = 0; i < rank(); ++i) {
    if (l.c[i] == 0) continue;
    for (int k = 0; k < space.d_plus; ++k) w[k] += gens[i].plus[k].times_int(l.c[i]);
  }
  return w;
}

linalg::SVec Lattice::antichiral_weight(const Charge& l) const {
  linalg::SVec w(space.d_minus, Scalar::zero(backend));
  for (int i = 0; i < rank(); ++i) {
    if (l.c[i] == 0) continue;
    for (int k = 0; k < space.d_minus; ++k) w[k] += gens[i].minus[k].times_int(l.c[i]);
  }
  return w;
}

linalg::SVec Lattice::ambient(const Charge& l) const {
  linalg::SVec w = chiral_weight(l);
  linalg::SVec m = antichiral_weight(l);
  w.insert(w.end(), m.begin(), m.end());
  return w;
}

Scalar Lattice::pairing_plus(const Charge& a, const Charge& b) const {
  Scalar s = Scalar::zero(backend);
  for (int i = 0; i < rank(); ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (b.c[j] == 0) continue;
      s += gram_plus[i][j].times_int(a.c[i] * b.c[j]);
    }
  }
  return s;
}

Scalar Lattice::pairing_minus(const Charge& a, const Charge& b) const {
  Scalar s = Scalar::zero(backend);
  for (int i = 0; i < rank(); ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (b.c[j] == 0) continue;
      s += gram_minus[i][j].times_int(a.c[i] * b.c[j]);
    }
  }
  return s;
}

Lattice build_lattice(const SplitSpace& space, const std::vector<Generator>& gens,
                      const Backend& bk) {
  Lattice L;
  L.space = space;
  L.backend = bk;
  L.gens = gens;
  int n0 = (int)gens.size();
  if (n0 > space.dim()) {
    throw Error(Err::DependentGenerators, "more generators than ambient dimensions");
  }
  for (const auto& g : gens) {
    if ((int)g.plus.size() != space.d_plus || (int)g.minus.size() != space.d_minus) {
      throw Error(Err::ConfigError, "generator has wrong split dimensions");
    }
    for (const Scalar& s : g.plus)
      if (!s.backend().compatible(bk)) throw Error(Err::BackendMismatch, "generator entry backend");
    for (const Scalar& s : g.minus)
      if (!s.backend().compatible(bk)) throw Error(Err::BackendMismatch, "generator entry backend");
  }

  auto dot = [&](const linalg::SVec& x, const linalg::SVec& y) {
    Scalar s = Scalar::zero(bk);
    for (size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
    return s;
  };
  L.gram_plus.assign(n0, linalg::SVec(n0, Scalar::zero(bk)));
  L.gram_minus.assign(n0, linalg::SVec(n0, Scalar::zero(bk)));
  for (int i = 0; i < n0; ++i) {
    for (int j = 0; j < n0; ++j) {
      L.gram_plus[i][j] = dot(gens[i].plus, gens[j].plus);
      L.gram_minus[i][j] = dot(gens[i].minus, gens[j].minus);
    }
  }

  L.gram_indef.assign(n0, std::vector<long long>(n0, 0));
  for (int i = 0; i < n0; ++i) {
    for (int j = 0; j < n0; ++j) {
      Scalar d = L.gram_plus[i][j] - L.gram_minus[i][j];
      if (!d.is_integer()) {
        throw Error(Err::NonIntegralPairing, "pairing (g" + std::to_string(i) + "|g" +
                                                 std::to_string(j) + ") = " + d.str() +
                                                 " is not an integer");
      }
      L.gram_indef[i][j] = (long long)d.to_integer().get_si();
    }
  }
  for (int i = 0; i < n0; ++i) {
    if (L.gram_indef[i][i] % 2 != 0) {
      throw Error(Err::OddNorm, "generator g" + std::to_string(i) + " has odd norm " +
                                    std::to_string(L.gram_indef[i][i]));
    }
  }

  // Linear independence: g+ (+) g- Gram must be positive definite.
  if (n0 > 0) {
    linalg::SMat total(n0, linalg::SVec(n0, Scalar::zero(bk)));
    for (int i = 0; i < n0; ++i)
      for (int j = 0; j < n0; ++j) total[i][j] = L.gram_plus[i][j] + L.gram_minus[i][j];
    if (!linalg::positive_definite(total)) {
      throw Error(Err::DependentGenerators, "generators are linearly dependent");
    }
  }
  return L;
}

long long indef_pairing(const Lattice& L, const Charge& a, const Charge& b) {
  long long s = 0;
  for (int i = 0; i < L.rank(); ++i)
    for (int j = 0; j < L.rank(); ++j) s += a.c[i] * L.gram_indef[i][j] * b.c[j];
  return s;
}

std::pair<Scalar, Scalar> chiral_norms(const Lattice& L, const Charge& l) {
  return {L.pairing_plus(l, l), L.pairing_minus(l, l)};
}

long long spin_of(const Lattice& L, const Charge& l) {
  long long n = indef_pairing(L, l, l);
  return n / 2;  // even for validated lattices
}

std::vector<Charge> enumerate_box(int rank, int radius) {
  std::vector<Charge> out;
  if (rank == 0) {
    out.push_back(Charge::zero(0));
    return out;
  }
  std::vector<long> c(rank, -radius);
  while (true) {
    out.push_back(Charge(std::vector<long>(c.begin(), c.end())));
    int i = rank - 1;
    while (i >= 0 && c[i] == radius) {
      c[i] = -radius;
      --i;
    }
    if (i < 0) break;
    ++c[i];
  }
  return out;
}

namespace {

// Rational inverse of the integer Gram (adjugate over determinant).
std::vector<linalg::QVec> rational_inverse(const std::vector<std::vector<long long>>& g,
                                           const mpz_class& detg) {
  int n = (int)g.size();
  linalg::ZMat z(n, std::vector<mpz_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z[i][j] = (long)g[i][j];
  std::vector<linalg::QVec> inv(n, linalg::QVec(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      linalg::ZMat minor(n - 1, std::vector<mpz_class>(n - 1));
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor[rr][cc] = z[r][c];
          ++cc;
        }
        ++rr;
      }
      mpz_class cof = (n == 1) ? mpz_class(1) : linalg::det_z(minor);
      if ((i + j) % 2) cof = -cof;
      mpq_class q(cof, detg);
      q.canonicalize();
      inv[j][i] = q;
    }
  }
  return inv;
}

mpq_class mod_2z(const mpq_class& q) {
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class twice_den = 2 * den, r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), twice_den.get_mpz_t());
  mpq_class out(r, den);
  out.canonicalize();
  return out;
}

}  // namespace

DiscriminantData discriminant_data(const Lattice& L) {
  int n = L.rank();
  linalg::ZMat g(n, std::vector<mpz_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = (long)L.gram_indef[i][j];
  mpz_class detg = linalg::det_z(g);
  if (n == 0 || detg == 0) {
    throw Error(Err::DegenerateForm, "gram matrix of (.|.) is degenerate");
  }
  auto snf = linalg::smith_normal_form(g);
  DiscriminantData out;
  out.invariant_factors = snf.diag;

  linalg::ZMat uinv = linalg::inverse_unimodular(snf.u);
  auto ginv = rational_inverse(L.gram_indef, detg);

  // Coset classes of Z^n / G Z^n are the tuples k (mod invariant factors),
  // with representative x = U^{-1} k; the dual coset vector is y = G^{-1} x.
  std::vector<mpz_class> k(n, 0);
  while (true) {
    std::vector<mpq_class> x(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x[i] += mpq_class(uinv[i][j]) * mpq_class(k[j]);
    linalg::QVec y(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) y[i] += ginv[i][j] * x[j];
    mpq_class norm = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) norm += x[i] * ginv[i][j] * x[j];
    out.reps.push_back(y);
    out.norms_mod2.push_back(mod_2z(norm));
    int i = n - 1;
    while (i >= 0) {
      k[i] += 1;
      if (k[i] < snf.diag[i]) break;
      k[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

MaximalityVerdict is_maximal_even(const Lattice& L) {
  DiscriminantData d = discriminant_data(L);
  MaximalityVerdict v;
  v.maximal = true;
  for (size_t i = 0; i < d.reps.size(); ++i) {
    bool zero_coset = true;
    for (const mpq_class& q : d.reps[i]) {
      if (q.get_den() != 1) zero_coset = false;
    }
    if (zero_coset) continue;  // element of Q itself
    if (d.norms_mod2[i] == 0) {
      v.maximal = false;
      v.witness = d.reps[i];
      return v;
    }
  }
  return v;
}

RationalFamilyVector rational_sublattice_vector(const Lattice& L, long p, long q) {
  if (!L.backend.exact()) {
    throw Error(Err::NotRational, "membership certificate requires an exact backend");
  }
  if (p <= 0 || q <= 0 || mpz_class(gcd(mpz_class(p), mpz_class(q))) != 1) {
    throw Error(Err::ConfigError, "R^2 = p/q must be in lowest terms with p, q > 0");
  }
  RationalFamilyVector out;
  out.coords = Charge({q, p});
  Scalar xplus = L.gens[0].plus[0].times_int(q) + L.gens[1].plus[0].times_int(p);
  Scalar xminus = L.gens[0].minus[0].times_int(q) + L.gens[1].minus[0].times_int(p);
  out.chiral_value = xplus;
  out.antichiral_value = xminus;

  // Certificate: the ambient target sqrt(2pq) (+) 0 solves the generator
  // system with exactly the integer coordinates (q, p).
  Backend bk = L.backend;
  mpz_class f, d;
  squarefree_split(mpz_class(2) * p * q, f, d);
  Scalar target;
  if (d == 1) {
    target = Scalar::rational(mpq_class(f), bk);
  } else if (bk.kind == BackendKind::quadratic && bk.quad_d == d.get_si()) {
    target = Scalar::quad(0, mpq_class(f), d.get_si());
  } else {
    throw Error(Err::NotRational,
                "sqrt(" + mpz_class(2 * p * q).get_str() + ") is outside the declared backend");
  }
  linalg::SMat a(2, linalg::SVec(2, Scalar::zero(bk)));
  a[0][0] = L.gens[0].plus[0];
  a[0][1] = L.gens[1].plus[0];
  a[1][0] = L.gens[0].minus[0];
  a[1][1] = L.gens[1].minus[0];
  linalg::SVec b{target, Scalar::zero(bk)};
  auto x = linalg::solve(a, b);
  out.membership_ok = x.has_value() && (*x)[0] == Scalar::integer(q, bk) &&
                      (*x)[1] == Scalar::integer(p, bk) && xplus == target && xminus.is_zero();
  return out;
}

Lattice RecognizedLattice::to_lattice() const { return build_lattice(space, gens, backend); }

std::optional<RecognizedLattice> recognize_lattice(const SplitSpace& space,
                                                   const std::vector<linalg::SVec>& samples_in) {
  if (samples_in.empty()) return std::nullopt;
  Backend bk = samples_in[0][0].backend();
  int dim = space.dim();

  // Deduplicate, order deterministically by (norm, coordinates).
  auto norm2 = [&](const linalg::SVec& v) {
    Scalar s = Scalar::zero(bk);
    for (const Scalar& x : v) s += x * x;
    return s;
  };
  std::vector<linalg::SVec> samples = samples_in;
  std::sort(samples.begin(), samples.end(), [&](const linalg::SVec& a, const linalg::SVec& b) {
    Scalar na = norm2(a), nb = norm2(b);
    if (na != nb) return na.exactly_less(nb);
    for (int k = 0; k < dim; ++k) {
      if (a[k] != b[k]) return a[k].exactly_less(b[k]);
    }
    return false;
  });
  auto eq_vec = [&](const linalg::SVec& a, const linalg::SVec& b) {
    for (int k = 0; k < dim; ++k)
      if (a[k] != b[k]) return false;
    return true;
  };
  samples.erase(std::unique(samples.begin(), samples.end(), eq_vec), samples.end());

  bool all_zero = true;
  for (const auto& s : samples)
    if (!norm2(s).is_zero()) all_zero = false;
  if (all_zero) {
    RecognizedLattice r;
    r.space = space;
    r.backend = bk;
    r.sample_coords.assign(samples_in.size(), Charge::zero(0));
    return r;
  }

  // Discreteness heuristic: minimal pairwise gap vs diameter/64.
  size_t n = samples.size();
  std::optional<Scalar> min_gap2, max_diam2;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      linalg::SVec d(dim, Scalar::zero(bk));
      for (int k = 0; k < dim; ++k) d[k] = samples[i][k] - samples[j][k];
      Scalar g = norm2(d);
      if (!max_diam2 || max_diam2->exactly_less(g)) max_diam2 = g;
      if (g.is_zero()) continue;
      if (!min_gap2 || g.exactly_less(*min_gap2)) min_gap2 = g;
    }
  }
  if (min_gap2 && max_diam2) {
    // gap >= diam/64  <=>  4096*gap^2 >= diam^2
    if (min_gap2->times_int(4096).exactly_less(*max_diam2)) return std::nullopt;
  }

  // Maximal independent subset, in sample order.
  std::vector<linalg::SVec> indep;
  for (const auto& s : samples) {
    if (norm2(s).is_zero()) continue;
    std::vector<linalg::SVec> trial = indep;
    trial.push_back(s);
    linalg::SMat m;
    for (const auto& row : trial) m.push_back(row);
    if (linalg::rank(m) == (int)trial.size()) indep = trial;
    if ((int)indep.size() == dim) break;
  }
  int r = (int)indep.size();

  // Coordinates of every sample w.r.t. the independent subset must be rational.
  linalg::SMat a(dim, linalg::SVec(r, Scalar::zero(bk)));
  for (int k = 0; k < dim; ++k)
    for (int j = 0; j < r; ++j) a[k][j] = indep[j][k];
  std::vector<linalg::QVec> coords;
  mpz_class den_lcm = 1;
  for (const auto& s : samples) {
    auto x = linalg::solve(a, s);
    if (!x) return std::nullopt;
    linalg::QVec q(r);
    for (int j = 0; j < r; ++j) {
      if (!(*x)[j].is_rational_value()) return std::nullopt;
      q[j] = (*x)[j].to_rational();
      mpz_class den = q[j].get_den();
      mpz_class g = gcd(den_lcm, den);
      den_lcm = den_lcm / g * den;
    }
    coords.push_back(q);
  }

  // Hermite basis of the integer span of the scaled coordinates.
  linalg::ZMat zrows;
  for (const auto& q : coords) {
    std::vector<mpz_class> row(r);
    for (int j = 0; j < r; ++j) row[j] = q[j].get_num() * (den_lcm / q[j].get_den());
    zrows.push_back(row);
  }
  linalg::ZMat h = linalg::hnf_row_basis(zrows);
  if ((int)h.size() != r) return std::nullopt;

  RecognizedLattice out;
  out.space = space;
  out.backend = bk;
  for (int i = 0; i < r; ++i) {
    Generator g;
    g.plus.assign(space.d_plus, Scalar::zero(bk));
    g.minus.assign(space.d_minus, Scalar::zero(bk));
    for (int j = 0; j < r; ++j) {
      mpq_class w(h[i][j], den_lcm);
      w.canonicalize();
      Scalar f = Scalar::rational(w, bk);
      for (int k = 0; k < space.d_plus; ++k) g.plus[k] += f * indep[j][k];
      for (int k = 0; k < space.d_minus; ++k) g.minus[k] += f * indep[j][space.d_plus + k];
    }
    out.gens.push_back(g);
  }

  // Integer coordinates of the original (unsorted) samples in the new basis.
  linalg::SMat basis_cols(dim, linalg::SVec(r, Scalar::zero(bk)));
  for (int j = 0; j < r; ++j) {
    for (int k = 0; k < space.d_plus; ++k) basis_cols[k][j] = out.gens[j].plus[k];
    for (int k = 0; k < space.d_minus; ++k)
      basis_cols[space.d_plus + k][j] = out.gens[j].minus[k];
  }
  for (const auto& s : samples_in) {
    auto x = linalg::solve(basis_cols, s);
    if (!x) return std::nullopt;
    Charge c = Charge::zero(r);
    for (int j = 0; j < r; ++j) {
      if (!(*x)[j].is_integer()) return std::nullopt;
      c.c[j] = (long)(*x)[j].to_integer().get_si();
    }
    out.sample_coords.push_back(c);
  }

  auto dot = [&](const linalg::SVec& x, const linalg::SVec& y) {
    Scalar s = Scalar::zero(bk);
    for (size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
    return s;
  };
  out.gram_plus.assign(r, linalg::SVec(r, Scalar::zero(bk)));
  out.gram_minus.assign(r, linalg::SVec(r, Scalar::zero(bk)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      out.gram_plus[i][j] = dot(out.gens[i].plus, out.gens[j].plus);
      out.gram_minus[i][j] = dot(out.gens[i].minus, out.gens[j].minus);
    }
  return out;
}

Lattice example_lattice(const mpq_class& R2) {
  if (R2 <= 0) throw Error(Err::ConfigError, "R^2 must be positive");
  mpz_class p = R2.get_num(), q = R2.get_den();
  mpz_class f, d;
  squarefree_split(2 * p * q, f, d);
  Backend bk = (d == 1) ? Backend::rational_backend() : Backend::quadratic_backend(d.get_si());
  auto value = [&](const mpz_class& den) {
    // f*sqrt(d) / (2*den)
    mpq_class coeff(f, 2 * den);
    coeff.canonicalize();
    if (d == 1) return Scalar::rational(coeff, bk);
    return Scalar::quad(0, coeff, d.get_si());
  };
  Scalar v1 = value(q);  // R/sqrt2   = sqrt(2pq)/(2q)
  Scalar v2 = value(p);  // 1/(R*sqrt2) = sqrt(2pq)/(2p)
  Generator g1{{v1}, {v1}};
  Generator g2{{v2}, {-v2}};
  return build_lattice(SplitSpace{1, 1}, {g1, g2}, bk);
}

Lattice example_lattice_float(double R2, double tol) {
  if (R2 <= 0) throw Error(Err::ConfigError, "R^2 must be positive");
  Backend bk = Backend::float_backend(tol);
  mpf_class r2(R2, kFloatPrecBits);
  mpf_class r(0, kFloatPrecBits), s2(2.0, kFloatPrecBits), sq2(0, kFloatPrecBits);
  mpf_sqrt(r.get_mpf_t(), r2.get_mpf_t());
  mpf_sqrt(sq2.get_mpf_t(), s2.get_mpf_t());
  Scalar v1 = Scalar::flt(mpf_class(r / sq2), tol);
  Scalar v2 = Scalar::flt(mpf_class(1 / (r * sq2)), tol);
  Generator g1{{v1}, {v1}};
  Generator g2{{v2}, {-v2}};
  return build_lattice(SplitSpace{1, 1}, {g1, g2}, bk);
}

Lattice isotropic_lattice(int d) {
  Backend bk = Backend::rational_backend();
  std::vector<Generator> gens;
  for (int i = 0; i < d; ++i) {
    Generator g;
    g.plus.assign(d, Scalar::zero(bk));
    g.minus.assign(d, Scalar::zero(bk));
    g.plus[i] = Scalar::one(bk);
    g.minus[i] = Scalar::one(bk);
    gens.push_back(g);
  }
  return build_lattice(SplitSpace{d, d}, gens, bk);
}

}  // namespace lvo
