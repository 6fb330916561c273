#include "qlie/qgroup.hpp"

#include <sstream>
#include <stdexcept>

namespace qlie {

static QMat qmat_zero(int n) { return QMat(n, std::vector<QScalar>(n)); }

static QMat qmat_mul(const QMat& a, const QMat& b) {
  int n = static_cast<int>(a.size());
  QMat c = qmat_zero(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        c[i][j] = c[i][j] + a[i][k] * b[k][j];
      }
    }
  return c;
}

static QMat qmat_sub(const QMat& a, const QMat& b) {
  QMat c = a;
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c.size(); ++j) c[i][j] = c[i][j] - b[i][j];
  return c;
}

static QMat qmat_scale(const QScalar& s, const QMat& a) {
  QMat c = a;
  for (auto& row : c)
    for (auto& e : row) e = s * e;
  return c;
}

std::vector<std::vector<LaurentPoly>> q_cartan(const LieType& t) {
  IntMat a = cartan_matrix(t);
  int n = static_cast<int>(a.size());
  std::vector<std::vector<LaurentPoly>> out(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = q_number(a[i][j]);
  return out;
}

QuantumRep build_sl2_rep(int dim) {
  if (dim < 1) throw std::invalid_argument("sl2 rep dimension must be >= 1");
  QuantumRep rep;
  rep.cartan = {{2}};
  rep.sym = {2};
  rep.dimension = dim;
  QMat x = qmat_zero(dim), y = qmat_zero(dim), z = qmat_zero(dim);
  rep.weights.assign(dim, std::vector<int>(1));
  for (int k = 0; k < dim; ++k) {
    int w = 2 * (dim - 1 - 2 * k);
    rep.weights[k][0] = w;
    z[k][k] = QScalar(LaurentPoly::monomial(1, w));
    if (k >= 1) x[k - 1][k] = QScalar(q_number(k));
    if (k + 1 < dim) y[k + 1][k] = QScalar(q_number(dim - 1 - k));
  }
  rep.X = {x};
  rep.Y = {y};
  rep.Z = {z};
  return rep;
}

QuantumRep build_sln_fundamental(int n) {
  if (n < 2) throw std::invalid_argument("sln fundamental needs n >= 2");
  QuantumRep rep;
  LieType t{Family::A, n - 1};
  rep.cartan = cartan_matrix(t);
  rep.sym.assign(n - 1, 2);
  rep.dimension = n;
  rep.weights.assign(n, std::vector<int>(n - 1, 0));
  for (int i = 0; i < n - 1; ++i) {
    QMat x = qmat_zero(n), y = qmat_zero(n), z = qmat_zero(n);
    x[i][i + 1] = QScalar(LaurentPoly(1));
    y[i + 1][i] = QScalar(LaurentPoly(1));
    for (int k = 0; k < n; ++k) {
      int w = (k == i) ? 2 : (k == i + 1 ? -2 : 0);
      rep.weights[k][i] = w;
      z[k][k] = QScalar(LaurentPoly::monomial(1, w));
    }
    rep.X.push_back(x);
    rep.Y.push_back(y);
    rep.Z.push_back(z);
  }
  return rep;
}

bool RelationReport::all_pass() const {
  if (!structural_ok) return false;
  for (const auto& it : items)
    if (!it.pass) return false;
  return true;
}

std::string RelationReport::first_failure() const {
  if (!structural_ok) return "structural: " + structural_error;
  for (const auto& it : items)
    if (!it.pass) return it.relation + " at " + it.witness;
  return "";
}

namespace {

// One relation-checking engine shared by the exact path and the evaluation
// path: Ctx supplies the scalar/matrix types and the primitive values.
struct ExactCtx {
  using Mat = QMat;
  const QuantumRep& rep;
  QMat x(int i) const { return rep.X[i]; }
  QMat y(int i) const { return rep.Y[i]; }
  QMat z(int i) const { return rep.Z[i]; }
  QMat zinv(int i) const {
    QMat m = qmat_zero(rep.dimension);
    for (int k = 0; k < rep.dimension; ++k) m[k][k] = rep.Z[i][k][k].inverse();
    return m;
  }
  QMat zero() const { return qmat_zero(rep.dimension); }
  QMat identity() const {
    QMat m = qmat_zero(rep.dimension);
    for (int k = 0; k < rep.dimension; ++k) m[k][k] = QScalar(LaurentPoly(1));
    return m;
  }
  QScalar monomial(int vexp) const { return QScalar(LaurentPoly::monomial(1, vexp)); }
  QScalar qbinom(long nn, long kk, int lsq) const {
    return QScalar(q_binomial(nn, kk, lsq));
  }
  QScalar recip_qi_minus_inv(int i) const {
    return QScalar(LaurentPoly(1)) /
           QScalar(LaurentPoly::monomial(1, rep.sym[i]) -
                   LaurentPoly::monomial(1, -rep.sym[i]));
  }
  QScalar neg(const QScalar& s) const { return QScalar() - s; }
  Mat mul(const Mat& a, const Mat& b) const { return qmat_mul(a, b); }
  Mat sub(const Mat& a, const Mat& b) const { return qmat_sub(a, b); }
  Mat scale(const QScalar& s, const Mat& a) const { return qmat_scale(s, a); }
  bool entries_equal(const QScalar& a, const QScalar& b) const { return a == b; }
  std::string entry_str(const QScalar& s) const { return s.str(); }
};

struct EvalCtx {
  using Mat = RatMat;
  const QuantumRep& rep;
  Rational v;
  RatMat conv(const QMat& m) const {
    int n = rep.dimension;
    RatMat r(n, RatVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r[i][j] = m[i][j].eval_v(v);
    return r;
  }
  RatMat x(int i) const { return conv(rep.X[i]); }
  RatMat y(int i) const { return conv(rep.Y[i]); }
  RatMat z(int i) const { return conv(rep.Z[i]); }
  RatMat zinv(int i) const {
    int n = rep.dimension;
    RatMat r(n, RatVec(n, Rational(0)));
    for (int k = 0; k < n; ++k) r[k][k] = 1 / rep.Z[i][k][k].eval_v(v);
    return r;
  }
  RatMat zero() const {
    return RatMat(rep.dimension, RatVec(rep.dimension, Rational(0)));
  }
  RatMat identity() const { return mat_identity(rep.dimension); }
  Rational pow(int e) const {
    Rational r = 1;
    for (int k = 0; k < (e >= 0 ? e : -e); ++k) r *= v;
    return e >= 0 ? r : Rational(1) / r;
  }
  Rational monomial(int vexp) const { return pow(vexp); }
  Rational qbinom(long nn, long kk, int lsq) const {
    return q_binomial(nn, kk, lsq).eval_v(v);
  }
  Rational recip_qi_minus_inv(int i) const {
    return Rational(1) / (pow(rep.sym[i]) - pow(-rep.sym[i]));
  }
  Rational neg(const Rational& s) const { return -s; }
  Mat mul(const Mat& a, const Mat& b) const { return mat_mul(a, b); }
  Mat sub(const Mat& a, const Mat& b) const {
    Mat c = a;
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < c.size(); ++j) c[i][j] -= b[i][j];
    return c;
  }
  Mat scale(const Rational& s, const Mat& a) const {
    Mat c = a;
    for (auto& row : c)
      for (auto& e : row) e *= s;
    return c;
  }
  bool entries_equal(const Rational& a, const Rational& b) const { return a == b; }
  std::string entry_str(const Rational& s) const { return s.get_str(); }
};

template <typename Ctx>
void run_relations(const Ctx& ctx, const QuantumRep& rep, RelationReport& rpt,
                   bool record) {
  int nodes = static_cast<int>(rep.X.size());
  int dim = rep.dimension;
  auto compare = [&](const std::string& name, const typename Ctx::Mat& lhs,
                     const typename Ctx::Mat& rhs) {
    std::string witness;
    bool pass = true;
    for (int r = 0; r < dim && pass; ++r)
      for (int c = 0; c < dim && pass; ++c)
        if (!ctx.entries_equal(lhs[r][c], rhs[r][c])) {
          pass = false;
          std::ostringstream os;
          os << "(" << r << "," << c << "): " << ctx.entry_str(lhs[r][c])
             << " != " << ctx.entry_str(rhs[r][c]);
          witness = os.str();
        }
    if (record) {
      rpt.items.push_back({name, pass, witness});
    } else if (!pass) {
      for (auto& it : rpt.items)
        if (it.relation == name && it.pass) {
          it.pass = false;
          it.witness = witness;
        }
    }
  };

  for (int j = 0; j < nodes; ++j)
    for (int i = 0; i < nodes; ++i) {
      int p = rep.cartan[j][i] * rep.sym[i];
      compare("Z" + std::to_string(j) + " X" + std::to_string(i) + " conjugation",
              ctx.mul(ctx.z(j), ctx.x(i)),
              ctx.scale(ctx.monomial(p), ctx.mul(ctx.x(i), ctx.z(j))));
      compare("Z" + std::to_string(j) + " Y" + std::to_string(i) + " conjugation",
              ctx.mul(ctx.z(j), ctx.y(i)),
              ctx.scale(ctx.monomial(-p), ctx.mul(ctx.y(i), ctx.z(j))));
    }

  for (int i = 0; i < nodes; ++i)
    for (int j = 0; j < nodes; ++j) {
      auto lhs = ctx.sub(ctx.mul(ctx.x(i), ctx.y(j)), ctx.mul(ctx.y(j), ctx.x(i)));
      auto rhs = (i == j) ? ctx.scale(ctx.recip_qi_minus_inv(i),
                                      ctx.sub(ctx.z(i), ctx.zinv(i)))
                          : ctx.zero();
      compare("[X" + std::to_string(i) + ", Y" + std::to_string(j) + "] commutator",
              lhs, rhs);
    }

  for (int i = 0; i < nodes; ++i)
    for (int j = 0; j < nodes; ++j) {
      if (i == j) continue;
      long s = 1 - rep.cartan[i][j];
      std::vector<typename Ctx::Mat> xp{ctx.identity()}, yp{ctx.identity()};
      for (long m = 1; m <= s; ++m) {
        xp.push_back(ctx.mul(xp.back(), ctx.x(i)));
        yp.push_back(ctx.mul(yp.back(), ctx.y(i)));
      }
      typename Ctx::Mat sx = ctx.zero(), sy = ctx.zero();
      for (long m = 0; m <= s; ++m) {
        auto coef = ctx.qbinom(s, m, rep.sym[i]);
        if (m % 2 == 1) coef = ctx.neg(coef);
        sx = ctx.sub(sx, ctx.scale(ctx.neg(coef),
                                   ctx.mul(xp[m], ctx.mul(ctx.x(j), xp[s - m]))));
        sy = ctx.sub(sy, ctx.scale(ctx.neg(coef),
                                   ctx.mul(yp[m], ctx.mul(ctx.y(j), yp[s - m]))));
      }
      compare("Serre X (" + std::to_string(i) + "," + std::to_string(j) + ")", sx,
              ctx.zero());
      compare("Serre Y (" + std::to_string(i) + "," + std::to_string(j) + ")", sy,
              ctx.zero());
    }
}

}  // namespace

RelationReport check_relations(const QuantumRep& rep, bool fast) {
  RelationReport rpt;
  int nodes = static_cast<int>(rep.X.size());
  int dim = rep.dimension;
  auto structural = [&](const std::string& msg) {
    rpt.structural_ok = false;
    rpt.structural_error = msg;
  };
  if (rep.Y.size() != rep.X.size() || rep.Z.size() != rep.X.size()) {
    structural("X/Y/Z node counts differ");
    return rpt;
  }
  if (static_cast<int>(rep.cartan.size()) != nodes ||
      static_cast<int>(rep.sym.size()) != nodes) {
    structural("Cartan/symmetrizer size mismatch");
    return rpt;
  }
  for (int i = 0; i < nodes; ++i) {
    if (rep.sym[i] <= 0) {
      structural("nonpositive symmetrizer at node " + std::to_string(i));
      return rpt;
    }
    if (rep.cartan[i][i] != 2) {
      structural("Cartan diagonal entry != 2 at node " + std::to_string(i));
      return rpt;
    }
    for (int j = 0; j < nodes; ++j) {
      if (i != j && rep.cartan[i][j] > 0) {
        structural("positive off-diagonal Cartan entry");
        return rpt;
      }
      if (rep.sym[i] * rep.cartan[i][j] != rep.sym[j] * rep.cartan[j][i]) {
        structural("Cartan matrix not symmetrizable by given symmetrizers");
        return rpt;
      }
    }
  }
  for (int i = 0; i < nodes; ++i) {
    const QMat* mats[3] = {&rep.X[i], &rep.Y[i], &rep.Z[i]};
    for (const QMat* m : mats)
      if (static_cast<int>(m->size()) != dim) {
        structural("matrix size != dimension at node " + std::to_string(i));
        return rpt;
      }
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c)
        if (r != c && !rep.Z[i][r][c].is_zero()) {
          structural("Z" + std::to_string(i) + " not diagonal");
          return rpt;
        }
    for (int r = 0; r < dim; ++r)
      if (rep.Z[i][r][r].is_zero()) {
        structural("Z" + std::to_string(i) + " singular at slot " +
                   std::to_string(r));
        return rpt;
      }
  }

  if (!fast) {
    ExactCtx ctx{rep};
    run_relations(ctx, rep, rpt, true);
    return rpt;
  }

  // Degree bound for the evaluation path: every checked identity, after
  // clearing denominators, is a Laurent polynomial in v whose exponent span
  // is at most bound; bound+1 evaluation points decide it.
  long span = 1, maxsym = 2, maxs = 1;
  auto upd = [&](const QScalar& e) {
    long s = e.span();
    if (s > span) span = s;
  };
  for (int i = 0; i < nodes; ++i) {
    for (const QMat* m : {&rep.X[i], &rep.Y[i], &rep.Z[i]})
      for (const auto& row : *m)
        for (const auto& e : row) upd(e);
    if (rep.sym[i] > maxsym) maxsym = rep.sym[i];
    for (int j = 0; j < nodes; ++j)
      if (i != j && 1 - rep.cartan[i][j] > maxs) maxs = 1 - rep.cartan[i][j];
  }
  long chain = maxs + 2;
  long bound = 2 * chain * (span + 2 * maxsym + 4) + 8;

  bool first = true;
  long used = 0;
  for (long pt = 2; used <= bound; ++pt) {
    Rational v(pt);
    bool pole = false;
    for (int i = 0; i < nodes && !pole; ++i)
      for (const QMat* m : {&rep.X[i], &rep.Y[i], &rep.Z[i]})
        for (const auto& row : *m)
          for (const auto& e : row)
            if (e.den_eval_zero(v)) pole = true;
    if (pole) continue;
    EvalCtx ctx{rep, v};
    run_relations(ctx, rep, rpt, first);
    first = false;
    ++used;
  }
  return rpt;
}

void validate_partition(const std::vector<long>& partition, int N) {
  if (static_cast<int>(partition.size()) > N)
    throw std::invalid_argument("partition longer than N");
  for (size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] < 0)
      throw std::invalid_argument("partition entries must be nonnegative");
    if (i + 1 < partition.size() && partition[i] < partition[i + 1])
      throw std::invalid_argument("partition must be weakly decreasing");
  }
}

LaurentPoly qdim_typeA(const std::vector<long>& partition, int N) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  validate_partition(partition, N);
  std::vector<long> r(partition);
  r.resize(N, 0);
  LaurentPoly num(1), den(1);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      num = num * q_number(r[i] - r[j] + j - i);
      den = den * q_number(j - i);
    }
  return divide_exact(num, den);
}

RatMat fundamental_weights(const LieType& t) {
  RootSystem rs = generate_roots(t);
  int n = t.rank;
  RatMat a(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rational(rs.cartan[i][j]);
  RatMat ainv = mat_inverse(a);
  RatMat w(n, RatVec(rs.ambient, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int c = 0; c < rs.ambient; ++c)
        w[i][c] += ainv[i][k] * rs.simple_roots[k][c];
  return w;
}

LaurentPoly qdim_roots(const std::vector<long>& hw_coeffs, const LieType& t) {
  RootSystem rs = generate_roots(t);
  int n = t.rank;
  if (static_cast<int>(hw_coeffs.size()) != n)
    throw std::invalid_argument("highest weight needs " + std::to_string(n) +
                                " coefficients");
  for (long c : hw_coeffs)
    if (c < 0) throw std::invalid_argument("highest weight must be dominant");
  RatMat fw = fundamental_weights(t);
  RatVec lam(rs.ambient, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < rs.ambient; ++c) lam[c] += hw_coeffs[i] * fw[i][c];
  RatVec lam_rho = lam;
  for (int c = 0; c < rs.ambient; ++c) lam_rho[c] += rs.weyl_vector[c];

  auto bracket_factor = [](const Rational& x) {
    Rational two_x = 2 * x;
    if (two_x.get_den() != 1)
      throw std::logic_error("pairing not half-integral in qdim_roots");
    long e = two_x.get_num().get_si();
    return LaurentPoly::monomial(1, e) - LaurentPoly::monomial(1, -e);
  };
  LaurentPoly num(1), den(1);
  for (const auto& alpha : rs.positive_roots) {
    num = num * bracket_factor(dot(alpha, lam_rho));
    den = den * bracket_factor(dot(alpha, rs.weyl_vector));
  }
  return divide_exact(num, den);
}

}  // namespace qlie
