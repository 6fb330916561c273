#include "qlie/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qlie {

std::string LieType::str() const {
  static const char* names = "ABCDEFG";
  return std::string(1, names[static_cast<int>(family)]) + std::to_string(rank);
}

LieType parse_lie_type(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad Lie type: " + s);
  char f = static_cast<char>(toupper(static_cast<unsigned char>(s[0])));
  if (f < 'A' || f > 'G') throw std::invalid_argument("bad Lie family: " + s);
  for (size_t i = 1; i < s.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("bad Lie rank: " + s);
  long r = std::stol(s.substr(1));
  if (r < 1 || r > 1000) throw std::invalid_argument("bad Lie rank: " + s);
  LieType t{static_cast<Family>(f - 'A'), static_cast<int>(r)};
  validate_lie_type(t);
  return t;
}

void validate_lie_type(const LieType& t) {
  int r = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = r >= 1; break;
    case Family::B: ok = r >= 2; break;
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 3; break;
    case Family::E: ok = r == 6 || r == 7 || r == 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid rank for family: " + t.str());
}

static RatVec basis_vec(int dim, int i, const Rational& c = 1) {
  RatVec v(dim, Rational(0));
  v[i] = c;
  return v;
}

std::vector<RatVec> simple_roots(const LieType& t) {
  validate_lie_type(t);
  int n = t.rank;
  std::vector<RatVec> s;
  auto chain = [&](int dim, int count) {
    for (int i = 0; i < count; ++i) {
      RatVec v(dim, Rational(0));
      v[i] = 1;
      v[i + 1] = -1;
      s.push_back(v);
    }
  };
  switch (t.family) {
    case Family::A:
      chain(n + 1, n);
      break;
    case Family::B:
      chain(n, n - 1);
      s.push_back(basis_vec(n, n - 1));
      break;
    case Family::C:
      chain(n, n - 1);
      s.push_back(basis_vec(n, n - 1, 2));
      break;
    case Family::D:
      chain(n, n - 1);
      {
        RatVec v(n, Rational(0));
        v[n - 2] = 1;
        v[n - 1] = 1;
        s.push_back(v);
      }
      break;
    case Family::E: {
      Rational h(1, 2);
      RatVec a1(8, -h);
      a1[0] = h;
      a1[7] = h;
      s.push_back(a1);
      RatVec a2(8, Rational(0));
      a2[0] = 1;
      a2[1] = 1;
      s.push_back(a2);
      for (int i = 0; i < 6; ++i) {
        RatVec v(8, Rational(0));
        v[i] = -1;
        v[i + 1] = 1;
        s.push_back(v);
      }
      s.resize(n);
      break;
    }
    case Family::F: {
      RatVec a1(4, Rational(0)), a2(4, Rational(0));
      a1[1] = 1;
      a1[2] = -1;
      a2[2] = 1;
      a2[3] = -1;
      s.push_back(a1);
      s.push_back(a2);
      s.push_back(basis_vec(4, 3));
      Rational h(1, 2);
      s.push_back({h, -h, -h, -h});
      break;
    }
    case Family::G: {
      s.push_back({Rational(1), Rational(-1), Rational(0)});
      s.push_back({Rational(-2), Rational(1), Rational(1)});
      break;
    }
  }
  return s;
}

IntMat cartan_matrix(const LieType& t) {
  auto s = simple_roots(t);
  int n = static_cast<int>(s.size());
  IntMat a(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational c = 2 * dot(s[i], s[j]) / dot(s[j], s[j]);
      if (c.get_den() != 1)
        throw std::logic_error("non-integral Cartan entry for " + t.str());
      a[i][j] = c.get_num().get_si();
    }
  return a;
}

bool vec_less(const RatVec& a, const RatVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

static RatVec reflect(const RatVec& x, const RatVec& alpha) {
  Rational c = 2 * dot(x, alpha) / dot(alpha, alpha);
  RatVec r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= c * alpha[i];
  return r;
}

RatMat reflection_matrix(const RatVec& alpha) {
  int d = static_cast<int>(alpha.size());
  RatMat m = mat_identity(d);
  for (int j = 0; j < d; ++j) {
    RatVec col = reflect(basis_vec(d, j), alpha);
    for (int i = 0; i < d; ++i) m[i][j] = col[i];
  }
  return m;
}

RootSystem generate_roots(const LieType& t) {
  validate_lie_type(t);
  if (t.rank > 8)
    throw std::invalid_argument("root generation capped at rank 8: " + t.str());
  RootSystem rs;
  rs.type = t;
  rs.simple_roots = simple_roots(t);
  rs.ambient = static_cast<int>(rs.simple_roots[0].size());
  rs.cartan = cartan_matrix(t);
  int n = t.rank;

  std::map<std::string, RatVec> seen;
  std::vector<RatVec> queue = rs.simple_roots;
  for (const auto& v : queue) seen[vec_key(v)] = v;
  while (!queue.empty()) {
    RatVec x = queue.back();
    queue.pop_back();
    for (const auto& a : rs.simple_roots) {
      RatVec y = reflect(x, a);
      std::string k = vec_key(y);
      if (!seen.count(k)) {
        seen[k] = y;
        queue.push_back(y);
      }
    }
  }
  for (auto& [k, v] : seen) rs.roots.push_back(v);
  std::sort(rs.roots.begin(), rs.roots.end(), vec_less);

  // Simple-basis coordinates: p_j = 2(b,a_j)/(a_j,a_j) = sum_i c_i A[i][j],
  // so c = p A^{-1}.
  RatMat at(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) at[i][j] = Rational(rs.cartan[j][i]);
  RatMat ainv = mat_inverse(at);
  for (const auto& b : rs.roots) {
    RatVec p(n);
    for (int j = 0; j < n; ++j)
      p[j] = 2 * dot(b, rs.simple_roots[j]) / dot(rs.simple_roots[j], rs.simple_roots[j]);
    RatVec c = mat_apply(ainv, p);
    std::vector<long> ci(n);
    bool pos = true, neg = true;
    for (int i = 0; i < n; ++i) {
      if (c[i].get_den() != 1)
        throw std::logic_error("non-integral root coordinate in " + t.str());
      ci[i] = c[i].get_num().get_si();
      if (ci[i] > 0) neg = false;
      if (ci[i] < 0) pos = false;
    }
    if (pos == neg)
      throw std::logic_error("root with mixed signs in " + t.str());
    rs.root_coords.push_back(ci);
    if (pos) rs.positive_roots.push_back(b);
  }
  if (2 * rs.positive_roots.size() != rs.roots.size())
    throw std::logic_error("positive roots are not half of all roots");

  rs.weyl_vector.assign(rs.ambient, Rational(0));
  for (const auto& b : rs.positive_roots)
    for (int i = 0; i < rs.ambient; ++i) rs.weyl_vector[i] += b[i] / 2;
  for (const auto& a : rs.simple_roots) {
    Rational c = 2 * dot(rs.weyl_vector, a) / dot(a, a);
    if (c != 1)
      throw std::logic_error("Weyl vector pairing != 1 in " + t.str());
  }
  return rs;
}

static long height(const std::vector<long>& coords) {
  long h = 0;
  for (long c : coords) h += c;
  return h;
}

std::pair<int, int> coxeter_numbers(const LieType& t) {
  RootSystem rs = generate_roots(t);
  int n = t.rank;
  long best = 0;
  int best_idx = -1;
  int best_count = 0;
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    long h = height(rs.root_coords[i]);
    if (h > best) {
      best = h;
      best_idx = static_cast<int>(i);
      best_count = 1;
    } else if (h == best) {
      ++best_count;
    }
  }
  if (best_count != 1)
    throw std::logic_error("highest root not unique in " + t.str());
  const RatVec& theta = rs.roots[best_idx];

  // Coroot of theta in the simple-coroot basis: theta_v = sum_i d_i a_i_v
  // where d_i = c_i (a_i,a_i)/(theta,theta).
  Rational tt = dot(theta, theta);
  long hd = 0;
  for (int i = 0; i < n; ++i) {
    Rational d = rs.root_coords[best_idx][i] *
                 dot(rs.simple_roots[i], rs.simple_roots[i]) / tt;
    if (d.get_den() != 1)
      throw std::logic_error("non-integral dual height term in " + t.str());
    hd += d.get_num().get_si();
  }
  return {static_cast<int>(best) + 1, static_cast<int>(hd) + 1};
}

int diagram_automorphism_count(const LieType& t) {
  IntMat a = cartan_matrix(t);
  int n = static_cast<int>(a.size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  int count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (a[perm[i]][perm[j]] != a[i][j]) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

long lie_dimension(const LieType& t) {
  RootSystem rs = generate_roots(t);
  return static_cast<long>(rs.roots.size()) + t.rank;
}

}  // namespace qlie
