#include "qlie/exalg.hpp"

#include <array>
#include <stdexcept>

namespace qlie {

RatVec AlgebraTensor::multiply(const RatVec& a, const RatVec& b) const {
  RatVec r(dim, Rational(0));
  for (int i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      Rational c = a[i] * b[j];
      for (int k = 0; k < dim; ++k)
        if (mul[i][j][k] != 0) r[k] += c * mul[i][j][k];
    }
  }
  return r;
}

bool AlgebraTensor::is_commutative() const {
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (mul[i][j] != mul[j][i]) return false;
  return true;
}

AlgebraTensor real_algebra() {
  AlgebraTensor a;
  a.dim = 1;
  a.mul.assign(1, std::vector<RatVec>(1, RatVec(1, Rational(1))));
  a.unit_index = 0;
  return a;
}

std::vector<int> conjugation_signs(int dim) {
  std::vector<int> s(dim, -1);
  s[0] = 1;
  return s;
}

AlgebraTensor cayley_dickson_double(const AlgebraTensor& alg,
                                    const std::vector<int>& conj_signs) {
  int d = alg.dim;
  AlgebraTensor out;
  out.dim = 2 * d;
  out.unit_index = alg.unit_index;
  out.mul.assign(2 * d, std::vector<RatVec>(2 * d, RatVec(2 * d, Rational(0))));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const Rational& m = alg.mul[i][j][k];
        if (m == 0) continue;
        // (a,0)(c,0) = (ac, 0)
        out.mul[i][j][k] += m;
        // (a,0)(0,d) = (0, da): e_i * (0,e_j) -> coefficient of e_j*e_i
        out.mul[j][d + i][d + k] += m;
        // (0,b)(c,0) = (0, b c*)
        out.mul[d + i][j][d + k] += conj_signs[j] * m;
        // (0,b)(0,d) = (-d* b, 0): (0,e_j)(0,e_i) -> -e_i* e_j
        out.mul[d + j][d + i][k] -= conj_signs[i] * m;
      }
  return out;
}

AlgebraTensor complex_algebra() {
  return cayley_dickson_double(real_algebra(), conjugation_signs(1));
}

AlgebraTensor quaternion_algebra() {
  return cayley_dickson_double(complex_algebra(), conjugation_signs(2));
}

AlgebraTensor octonion_algebra() {
  return cayley_dickson_double(quaternion_algebra(), conjugation_signs(4));
}

namespace {

using OctMat = std::array<std::array<RatVec, 3>, 3>;

RatVec oct_conj(const RatVec& x) {
  RatVec r = x;
  for (int t = 1; t < 8; ++t) r[t] = -r[t];
  return r;
}

OctMat oct_zero_mat() {
  OctMat m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = RatVec(8, Rational(0));
  return m;
}

OctMat oct_mat_mul(const AlgebraTensor& o, const OctMat& a, const OctMat& b) {
  OctMat m = oct_zero_mat();
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      for (int s = 0; s < 3; ++s) {
        RatVec p = o.multiply(a[r][s], b[s][c]);
        for (int t = 0; t < 8; ++t) m[r][c][t] += p[t];
      }
  return m;
}

constexpr int kOffPos[3][2] = {{0, 1}, {0, 2}, {1, 2}};

OctMat jordan_basis_element(int idx) {
  OctMat m = oct_zero_mat();
  if (idx < 3) {
    m[idx][idx][0] = 1;
    return m;
  }
  int pos = (idx - 3) / 8, t = (idx - 3) % 8;
  int p = kOffPos[pos][0], q = kOffPos[pos][1];
  m[p][q][t] = 1;
  m[q][p] = oct_conj(m[p][q]);
  return m;
}

RatVec jordan_coords(const OctMat& m) {
  RatVec c(27, Rational(0));
  for (int p = 0; p < 3; ++p) {
    for (int t = 1; t < 8; ++t)
      if (m[p][p][t] != 0)
        throw std::logic_error("Jordan product left a non-real diagonal");
    c[p] = m[p][p][0];
  }
  for (int pos = 0; pos < 3; ++pos) {
    int p = kOffPos[pos][0], q = kOffPos[pos][1];
    RatVec conj_back = oct_conj(m[p][q]);
    if (conj_back != m[q][p])
      throw std::logic_error("Jordan product left a non-Hermitian matrix");
    for (int t = 0; t < 8; ++t) c[3 + pos * 8 + t] = m[p][q][t];
  }
  return c;
}

}  // namespace

AlgebraTensor jordan_h3o() {
  AlgebraTensor oct = octonion_algebra();
  AlgebraTensor j;
  j.dim = 27;
  j.mul.assign(27, std::vector<RatVec>(27));
  std::vector<OctMat> basis;
  for (int i = 0; i < 27; ++i) basis.push_back(jordan_basis_element(i));
  for (int i = 0; i < 27; ++i)
    for (int k = 0; k < 27; ++k) {
      OctMat ab = oct_mat_mul(oct, basis[i], basis[k]);
      OctMat ba = oct_mat_mul(oct, basis[k], basis[i]);
      OctMat sym = oct_zero_mat();
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          for (int t = 0; t < 8; ++t)
            sym[r][c][t] = (ab[r][c][t] + ba[r][c][t]) / 2;
      j.mul[i][k] = jordan_coords(sym);
    }
  return j;
}

long derivation_dimension(const AlgebraTensor& alg) {
  int n = alg.dim;
  bool comm = alg.is_commutative();
  SparseRankAccumulator acc;
  std::map<int, Rational> row;
  for (int i = 0; i < n; ++i)
    for (int j = comm ? i : 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        row.clear();
        for (int m = 0; m < n; ++m)
          if (alg.mul[i][j][m] != 0) row[k * n + m] += alg.mul[i][j][m];
        for (int a = 0; a < n; ++a)
          if (alg.mul[a][j][k] != 0) row[a * n + i] -= alg.mul[a][j][k];
        for (int b = 0; b < n; ++b)
          if (alg.mul[i][b][k] != 0) row[b * n + j] -= alg.mul[i][b][k];
        acc.add_rational(row);
      }
  return static_cast<long>(n) * n - acc.rank();
}

static AlgebraTensor algebra_by_tag(char tag) {
  switch (tag) {
    case 'R': return real_algebra();
    case 'C': return complex_algebra();
    case 'H': return quaternion_algebra();
    case 'O': return octonion_algebra();
  }
  throw std::invalid_argument(std::string("unknown division algebra tag: ") + tag);
}

long triality_dimension(char tag) {
  AlgebraTensor alg = algebra_by_tag(tag);
  int d = alg.dim;
  int npairs = d * (d - 1) / 2;
  auto pidx = [d](int r, int c) { return r * d - r * (r + 1) / 2 + (c - r - 1); };
  SparseRankAccumulator acc;
  std::map<int, Rational> row;
  auto skew_add = [&](int t, int r, int c, const Rational& coef) {
    if (r == c || coef == 0) return;
    if (r < c)
      row[t * npairs + pidx(r, c)] += coef;
    else
      row[t * npairs + pidx(c, r)] -= coef;
  };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        row.clear();
        for (int m = 0; m < d; ++m) skew_add(0, k, m, alg.mul[i][j][m]);
        for (int a = 0; a < d; ++a) skew_add(1, a, i, -alg.mul[a][j][k]);
        for (int b = 0; b < d; ++b) skew_add(2, b, j, -alg.mul[i][b][k]);
        acc.add_rational(row);
      }
  return 3L * npairs - acc.rank();
}

std::vector<MagicCell> magic_square_check() {
  const char tags[4] = {'R', 'C', 'H', 'O'};
  const long dims[4] = {1, 2, 4, 8};
  const char* labels[4][4] = {{"A1", "A2", "C3", "F4"},
                              {"A2", "A2+A2", "A5", "E6"},
                              {"C3", "A5", "B6", "E7"},
                              {"F4", "E6", "E7", "E8"}};
  long tri[4];
  for (int i = 0; i < 4; ++i) tri[i] = triality_dimension(tags[i]);
  std::vector<MagicCell> cells;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      MagicCell cell;
      cell.row = tags[r];
      cell.col = tags[c];
      cell.label = labels[r][c];
      cell.formula_dim = tri[r] + tri[c] + 3 * dims[r] * dims[c];
      cell.label_dim = cell.label == "A2+A2"
                           ? 2 * lie_dimension(parse_lie_type("A2"))
                           : lie_dimension(parse_lie_type(cell.label));
      cell.consistent = cell.formula_dim == cell.label_dim;
      cells.push_back(cell);
    }
  return cells;
}

namespace {

using IntDense = std::vector<std::vector<int>>;

IntDense int_mat_mul(const IntDense& a, const IntDense& b) {
  int n = static_cast<int>(a.size());
  IntDense c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

IntDense int_identity(int n) {
  IntDense m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

CliffordTower clifford_tower(int n) {
  if (n < 0 || n > 8)
    throw std::invalid_argument("clifford_tower supports 0 <= n <= 8");
  CliffordTower tw;
  tw.n = n;
  if (n == 0) {
    tw.size = 1;
    tw.span_dim = 1;
    return tw;
  }
  if (n <= 2) {
    tw.size = 2;
    tw.generators.push_back({{1, 0}, {0, -1}});
    if (n == 2) tw.generators.push_back({{0, 1}, {1, 0}});
  } else {
    AlgebraTensor alg = n <= 4 ? quaternion_algebra() : octonion_algebra();
    int d = alg.dim;
    std::vector<int> cs = conjugation_signs(d);
    tw.size = 2 * d;
    for (int t = 0; t < n; ++t) {
      IntDense g(2 * d, std::vector<int>(2 * d, 0));
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          Rational m = alg.mul[j][t][k];  // e_j * e_t
          if (m == 0) continue;
          int v = static_cast<int>(m.get_num().get_si());
          g[d + k][j] = v;            // lower-left: R_{e_t}
          g[k][d + j] = cs[t] * v;    // upper-right: R_{e_t*}
        }
      tw.generators.push_back(g);
    }
  }

  SparseRankAccumulator acc;
  std::map<int, Rational> row;
  int sz = tw.size;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    IntDense p = int_identity(sz);
    for (int b = 0; b < n; ++b)
      if (mask & (1u << b)) p = int_mat_mul(p, tw.generators[b]);
    row.clear();
    for (int r = 0; r < sz; ++r)
      for (int c = 0; c < sz; ++c)
        if (p[r][c] != 0) row[r * sz + c] = Rational(p[r][c]);
    acc.add_rational(row);
  }
  tw.span_dim = acc.rank();
  return tw;
}

std::string bott_homotopy(long n) {
  if (n < 0) throw std::invalid_argument("bott_homotopy: n must be >= 0");
  static const char* table[8] = {"Z2", "Z2", "0", "Z", "0", "0", "0", "Z"};
  return table[n % 8];
}

}  // namespace qlie
