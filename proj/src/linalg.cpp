#include "lvo/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace lvo::linalg {

int rank(SMat a) {
  if (a.empty()) return 0;
  int n = (int)a.size(), m = (int)a[0].size();
  int r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i) {
      if (!a[i][c].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (int i = r + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      Scalar f = a[i][c] / a[r][c];
      for (int j = c; j < m; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

Scalar det(SMat a) {
  int n = (int)a.size();
  assert(n > 0 && (int)a[0].size() == n);
  Backend bk = a[0][0].backend();
  Scalar d = Scalar::one(bk);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i) {
      if (!a[i][c].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return Scalar::zero(bk);
    if (piv != c) {
      std::swap(a[c], a[piv]);
      d = -d;
    }
    d *= a[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      Scalar f = a[i][c] / a[c][c];
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

bool positive_definite(const SMat& a0) {
  SMat a = a0;
  int n = (int)a.size();
  // Cholesky-style elimination without pivoting: the pivots are the ratios of
  // consecutive leading minors, so PD <=> all pivots positive.
  for (int c = 0; c < n; ++c) {
    if (a[c][c].sign() <= 0) return false;
    for (int i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      Scalar f = a[i][c] / a[c][c];
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return true;
}

std::optional<SVec> solve(const SMat& a0, const SVec& b0) {
  SMat a = a0;
  SVec b = b0;
  int n = (int)a.size();
  if (n == 0) return SVec{};
  int m = (int)a[0].size();
  Backend bk = a[0][0].backend();
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i) {
      if (!a[i][c].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    std::swap(b[r], b[piv]);
    for (int i = 0; i < n; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar f = a[i][c] / a[r][c];
      for (int j = c; j < m; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < n; ++i) {
    if (!b[i].is_zero()) return std::nullopt;
  }
  SVec x(m, Scalar::zero(bk));
  for (int k = 0; k < r; ++k) x[pivot_col[k]] = b[k] / a[k][pivot_col[k]];
  return x;
}

mpz_class det_z(const ZMat& a0) {
  // Bareiss fraction-free elimination.
  ZMat a = a0;
  int n = (int)a.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (int c = 0; c < n - 1; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i) {
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(a[c], a[piv]);
      sign = -sign;
    }
    for (int i = c + 1; i < n; ++i) {
      for (int j = c + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  return sign * a[n - 1][n - 1];
}

ZMat identity_z(int n) {
  ZMat u(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < n; ++i) u[i][i] = 1;
  return u;
}

ZMat mul_z(const ZMat& a, const ZMat& b) {
  int n = (int)a.size(), k = (int)b.size(), m = (int)b[0].size();
  ZMat c(n, std::vector<mpz_class>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (int j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

ZMat inverse_unimodular(const ZMat& u) {
  int n = (int)u.size();
  mpz_class d = det_z(u);
  assert(d == 1 || d == -1);
  // Adjugate via cofactors; fine at the small sizes used here.
  ZMat inv(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ZMat minor(n - 1, std::vector<mpz_class>(n - 1, 0));
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor[rr][cc] = u[r][c];
          ++cc;
        }
        ++rr;
      }
      mpz_class cof = (n == 1) ? mpz_class(1) : det_z(minor);
      if ((i + j) % 2) cof = -cof;
      inv[j][i] = cof * d;  // d = 1/det
    }
  }
  return inv;
}

SmithResult smith_normal_form(ZMat a) {
  int n = (int)a.size();
  int m = n == 0 ? 0 : (int)a[0].size();
  SmithResult res;
  res.u = identity_z(n);
  res.v = identity_z(m);
  auto row_add = [&](int dst, int src, const mpz_class& f) {
    for (int j = 0; j < m; ++j) a[dst][j] += f * a[src][j];
    for (int j = 0; j < n; ++j) res.u[dst][j] += f * res.u[src][j];
  };
  auto col_add = [&](int dst, int src, const mpz_class& f) {
    for (int i = 0; i < n; ++i) a[i][dst] += f * a[i][src];
    for (int i = 0; i < m; ++i) res.v[i][dst] += f * res.v[i][src];
  };
  auto row_swap = [&](int i1, int i2) {
    std::swap(a[i1], a[i2]);
    std::swap(res.u[i1], res.u[i2]);
  };
  auto col_swap = [&](int j1, int j2) {
    for (int i = 0; i < n; ++i) std::swap(a[i][j1], a[i][j2]);
    for (int i = 0; i < m; ++i) std::swap(res.v[i][j1], res.v[i][j2]);
  };
  auto row_neg = [&](int i) {
    for (int j = 0; j < m; ++j) a[i][j] = -a[i][j];
    for (int j = 0; j < n; ++j) res.u[i][j] = -res.u[i][j];
  };

  int t = 0;
  while (t < n && t < m) {
    // locate smallest nonzero entry in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < n; ++i)
      for (int j = t; j < m; ++j)
        if (a[i][j] != 0 &&
            (pi < 0 || abs(a[i][j]) < abs(a[pi][pj])))
          pi = i, pj = j;
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    if (a[t][t] < 0) row_neg(t);

    bool clean = true;
    for (int i = t + 1; i < n; ++i) {
      if (a[i][t] == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
      row_add(i, t, -q);
      if (a[i][t] != 0) clean = false;
    }
    for (int j = t + 1; j < m; ++j) {
      if (a[t][j] == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
      col_add(j, t, -q);
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared, redo pivot selection

    // enforce divisibility of the rest of the block by a[t][t]
    bool divides_all = true;
    for (int i = t + 1; i < n && divides_all; ++i)
      for (int j = t + 1; j < m && divides_all; ++j)
        if (a[i][j] % a[t][t] != 0) {
          row_add(t, i, 1);
          divides_all = false;
        }
    if (!divides_all) continue;
    ++t;
  }
  for (int i = 0; i < std::min(n, m); ++i) res.diag.push_back(a[i][i]);
  return res;
}

ZMat hnf_row_basis(ZMat rows) {
  int n = (int)rows.size();
  if (n == 0) return {};
  int m = (int)rows[0].size();
  int r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    // gcd-reduce column c below row r
    while (true) {
      int piv = -1;
      for (int i = r; i < n; ++i)
        if (rows[i][c] != 0 && (piv < 0 || abs(rows[i][c]) < abs(rows[piv][c]))) piv = i;
      if (piv < 0) break;
      std::swap(rows[r], rows[piv]);
      bool done = true;
      for (int i = r + 1; i < n; ++i) {
        if (rows[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (int j = 0; j < m; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (int j = 0; j < m; ++j) rows[r][j] = -rows[r][j];
    // reduce entries above the pivot
    for (int i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q != 0)
        for (int j = 0; j < m; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

}  // namespace lvo::linalg
