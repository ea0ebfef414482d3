#include "lvo/vertex.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace lvo::vertex {

HalfSeries exp_minus(const fock::Module& m, const linalg::SVec& alpha, int order) {
  HalfSeries s;
  s.coeff.push_back(fock::identity_op(m));
  for (int k = 1; k <= order; ++k) {
    fock::Op acc = fock::zero_op(m);
    for (int j = 1; j <= k; ++j) {
      fock::Op term = fock::compose(fock::mode_op(m, alpha, -j), s.coeff[k - j],
                                    par::Exec::serial);
      fock::accumulate(acc, term);
    }
    acc = fock::scale(acc, Scalar::rational(mpq_class(1, k), m.bk));
    acc.band = k;  // pure creation raising by k
    s.coeff.push_back(std::move(acc));
  }
  return s;
}

HalfSeries exp_plus(const fock::Module& m, const linalg::SVec& alpha, int order) {
  HalfSeries s;
  s.coeff.push_back(fock::identity_op(m));
  for (int k = 1; k <= order; ++k) {
    fock::Op acc = fock::zero_op(m);
    for (int j = 1; j <= k; ++j) {
      fock::Op term = fock::compose(fock::scale(fock::mode_op(m, alpha, j),
                                                Scalar::integer(-1, m.bk)),
                                    s.coeff[k - j], par::Exec::serial);
      fock::accumulate(acc, term);
    }
    acc = fock::scale(acc, Scalar::rational(mpq_class(1, k), m.bk));
    acc.band = 0;  // pure annihilation
    s.coeff.push_back(std::move(acc));
  }
  return s;
}

PreVertex pre_vertex(const fock::Module& m, const linalg::SVec& alpha, int order,
                     par::Exec ex) {
  PreVertex pv;
  pv.mod = &m;
  pv.alpha = alpha;
  pv.offset = m.weight_dot(alpha);
  pv.order = order;
  HalfSeries minus = exp_minus(m, alpha, m.cutoff);
  HalfSeries plus = exp_plus(m, alpha, m.cutoff);
  std::vector<int> ks;
  for (int k = -order; k <= order; ++k) ks.push_back(k);
  std::vector<fock::Op> out(ks.size());
  par::for_range(
      ks.size(),
      [&](size_t t) {
        int k = ks[t];
        fock::Op acc = fock::zero_op(m);
        for (int b = std::max(0, -k); b <= m.cutoff; ++b) {
          int a = k + b;
          if (a > m.cutoff) break;
          fock::accumulate(acc, fock::compose(minus.at(a), plus.at(b), par::Exec::serial));
        }
        acc.band = std::max(0, k);
        out[t] = std::move(acc);
      },
      ex);
  for (size_t t = 0; t < ks.size(); ++t) pv.coeff[ks[t]] = std::move(out[t]);
  return pv;
}

Report verify_comm_E(const fock::Module& m, const linalg::SVec& alpha,
                     const linalg::SVec& beta, int order, par::Exec ex) {
  Report rep("vertex");
  Backend bk = m.bk;
  Scalar e = Scalar::zero(bk);
  for (int j = 0; j < m.dim; ++j) e += alpha[j] * beta[j];

  HalfSeries plus = exp_plus(m, alpha, order);
  HalfSeries minus = exp_minus(m, beta, order);

  // (1-u)^{-e} = sum_n binom(-e, n) (-u)^n
  std::vector<Scalar> c;
  for (int n = 0; n <= order; ++n) {
    Scalar b = binomial(-e, n);
    if (n % 2) b = -b;
    c.push_back(b);
  }

  std::vector<std::pair<int, int>> degs;
  for (int r = 0; r <= order; ++r)
    for (int s = 0; s <= order; ++s) degs.push_back({r, s});
  std::vector<std::string> fails(degs.size());
  par::for_range(
      degs.size(),
      [&](size_t t) {
        auto [r, s] = degs[t];
        fock::Op lhs = fock::zero_op(m);
        for (int n = 0; n <= std::min(r, s); ++n) {
          fock::Op term =
              fock::compose(plus.at(r - n), minus.at(s - n), par::Exec::serial);
          fock::accumulate(lhs, term, &c[n]);
        }
        fock::Op rhs = fock::compose(minus.at(s), plus.at(r), par::Exec::serial);
        auto w = fock::equal_on_window(lhs, rhs);
        if (w)
          fails[t] = "bidegree (w^-" + std::to_string(r) + ", z^" + std::to_string(s) +
                     "): " + *w;
      },
      ex);
  std::string w;
  for (const auto& f : fails)
    if (!f.empty()) {
      w = f;
      break;
    }
  rep.add("vertex.exp-reorder.e=" + e.str() + ".K" + std::to_string(order),
          laws::vertex_exp_reorder, w.empty(), w);
  return rep;
}

Report verify_primary_modes(const fock::Module& m, const linalg::SVec& alpha,
                            const std::vector<int>& modes, int order, par::Exec ex) {
  Report rep("vertex");
  Backend bk = m.bk;
  PreVertex pv = pre_vertex(m, alpha, order, ex);
  Scalar a2 = Scalar::zero(bk);
  for (int j = 0; j < m.dim; ++j) a2 += alpha[j] * alpha[j];
  Scalar h = a2.div_int(2);

  for (int mode : modes) {
    fock::Op L = fock::sugawara_op(m, mode);
    fock::Op amode = fock::mode_op(m, alpha, mode);
    // sector-shifted Virasoro acting after the field
    fock::Op Lshift = fock::add(L, amode);
    if (mode == 0) Lshift = fock::add(Lshift, fock::scale(fock::identity_op(m), h));

    std::vector<int> js;
    for (int j = -order + std::max(0, mode); j <= order + std::min(0, mode); ++j)
      js.push_back(j);
    std::vector<std::string> fails(js.size());
    par::for_range(
        js.size(),
        [&](size_t t) {
          int j = js[t];
          fock::Op lhs = fock::sub(fock::compose(Lshift, pv.at(j), par::Exec::serial),
                                   fock::compose(pv.at(j), L, par::Exec::serial));
          Scalar factor = pv.offset + Scalar::integer(j - mode, bk) + h.times_int(mode + 1);
          fock::Op rhs = fock::scale(pv.at(j - mode), factor);
          auto w = fock::equal_on_window(lhs, rhs);
          if (w) fails[t] = "coefficient z^{off+" + std::to_string(j) + "}: " + *w;
        },
        ex);
    std::string w;
    for (const auto& f : fails)
      if (!f.empty()) {
        w = f;
        break;
      }
    rep.add("vertex.primary.m" + std::to_string(mode) + ".off" + pv.offset.str(),
            laws::vertex_primary, w.empty(), w);
  }
  return rep;
}

Report verify_primary(const fock::Module& m, const linalg::SVec& alpha, int mode, int order,
                      par::Exec ex) {
  return verify_primary_modes(m, alpha, {mode}, order, ex);
}

Report verify_locality_chiral(const fock::Module& m, const linalg::SVec& alpha,
                              const linalg::SVec& beta, int order, par::Exec ex) {
  Report rep("vertex");
  Backend bk = m.bk;
  Scalar e = Scalar::zero(bk);
  for (int j = 0; j < m.dim; ++j) e += alpha[j] * beta[j];

  bool same_charge = true;
  for (int j = 0; j < m.dim; ++j)
    if (!(alpha[j] == beta[j])) same_charge = false;
  PreVertex ya = pre_vertex(m, alpha, m.cutoff, ex);
  PreVertex yb = same_charge ? ya : pre_vertex(m, beta, m.cutoff, ex);

  int nmax = 2 * m.cutoff;
  std::vector<Scalar> c;
  for (int n = 0; n <= nmax; ++n) {
    Scalar b = binomial(-e, n);
    if (n % 2) b = -b;
    c.push_back(b);
  }

  // memoize the pairwise products; they are shared across bidegrees
  int span = 2 * m.cutoff + 1;
  auto grid_index = [&](int i, int j) {
    return (size_t)(i + m.cutoff) * span + (size_t)(j + m.cutoff);
  };
  std::vector<fock::Op> prod_ab(span * span), prod_ba(span * span);
  par::for_range(
      (size_t)span * span,
      [&](size_t t) {
        int i = (int)(t / span) - m.cutoff;
        int j = (int)(t % span) - m.cutoff;
        if (std::abs(i + j) > 2 * order) return;  // never reached by a bidegree
        // every consumer's window stops at E - max(0, i+j): higher source
        // grades are never compared
        int limit = m.cutoff - std::max(0, i + j);
        prod_ab[t] = fock::compose(ya.at(i), yb.at(j), par::Exec::serial, limit);
        if (!same_charge)
          prod_ba[t] = fock::compose(yb.at(j), ya.at(i), par::Exec::serial, limit);
      },
      ex);
  auto prod_rhs = [&](int ib, int ia) -> const fock::Op& {
    // yb.at(ib) after ya.at(ia); for a single charge this is the mirrored slot
    return same_charge ? prod_ab[grid_index(ib, ia)] : prod_ba[grid_index(ia, ib)];
  };

  std::vector<std::pair<int, int>> degs;
  for (int a = -order; a <= order; ++a)
    for (int b = -order; b <= order; ++b) degs.push_back({a, b});
  std::vector<std::string> fails(degs.size());
  par::for_range(
      degs.size(),
      [&](size_t t) {
        auto [a, b] = degs[t];
        fock::Op lhs = fock::zero_op(m);
        for (int n = 0; n <= nmax; ++n) {
          int ia = a + n, ib = b - n;
          if (ia > m.cutoff) break;
          if (ib < -m.cutoff) break;
          fock::accumulate(lhs, prod_ab[grid_index(ia, ib)], &c[n]);
        }
        fock::Op rhs = fock::zero_op(m);
        for (int n = 0; n <= nmax; ++n) {
          int ib = b + n, ia = a - n;
          if (ib > m.cutoff) break;
          if (ia < -m.cutoff) break;
          fock::accumulate(rhs, prod_rhs(ib, ia), &c[n]);
        }
        auto w = fock::equal_on_window(lhs, rhs);
        if (w)
          fails[t] = "bidegree (w^" + std::to_string(a) + ", z^" + std::to_string(b) +
                     "): " + *w;
      },
      ex);
  std::string w;
  for (const auto& f : fails)
    if (!f.empty()) {
      w = f;
      break;
    }
  rep.add("vertex.locality-chiral.e=" + e.str() + ".K" + std::to_string(order),
          laws::vertex_locality, w.empty(), w);
  return rep;
}

}  // namespace lvo::vertex
