#include "qlie/weyl.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace qlie {

std::vector<int> fundamental_degrees(const LieType& t) {
  validate_lie_type(t);
  int n = t.rank;
  std::vector<int> d;
  switch (t.family) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case Family::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F:
      d = {2, 6, 8, 12};
      break;
    case Family::G:
      d = {2, 6};
      break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

WeylGroup weyl_group(const LieType& t) {
  WeylGroup w;
  w.type = t;
  for (const auto& a : simple_roots(t)) w.generators.push_back(reflection_matrix(a));
  w.degrees = fundamental_degrees(t);
  return w;
}

BigInt weyl_order(const LieType& t) {
  BigInt n = 1;
  for (int d : fundamental_degrees(t)) n *= d;
  return n;
}

std::vector<RatMat> weyl_elements(const LieType& t) {
  if (t.rank > 4)
    throw std::invalid_argument("matrix enumeration capped at rank 4: " + t.str());
  WeylGroup w = weyl_group(t);
  int d = static_cast<int>(w.generators[0].size());
  std::map<std::string, RatMat> seen;
  std::deque<RatMat> queue;
  RatMat id = mat_identity(d);
  seen[mat_key(id)] = id;
  queue.push_back(id);
  while (!queue.empty()) {
    RatMat m = queue.front();
    queue.pop_front();
    for (const auto& g : w.generators) {
      RatMat p = mat_mul(g, m);
      std::string k = mat_key(p);
      if (!seen.count(k)) {
        seen[k] = p;
        queue.push_back(p);
      }
    }
  }
  std::vector<RatMat> out;
  for (auto& [k, m] : seen) out.push_back(m);
  return out;
}

BigInt weyl_order_enumerated(const LieType& t) {
  return BigInt(static_cast<unsigned long>(weyl_elements(t).size()));
}

// |W(set)| for a finite set of roots closed under its own reflections.
static BigInt order_of_root_set(const std::vector<RatVec>& set) {
  if (set.empty()) return 1;
  std::set<std::string> members;
  for (const auto& r : set) members.insert(vec_key(r));

  // Deterministic seed: maximal squared length, then lexicographically last.
  size_t pick = 0;
  for (size_t i = 1; i < set.size(); ++i) {
    Rational li = dot(set[i], set[i]), lp = dot(set[pick], set[pick]);
    int c = cmp(li, lp);
    if (c > 0 || (c == 0 && vec_less(set[pick], set[i]))) pick = i;
  }
  const RatVec theta = set[pick];

  std::map<std::string, RatVec> orbit;
  std::deque<RatVec> queue;
  orbit[vec_key(theta)] = theta;
  queue.push_back(theta);
  while (!queue.empty()) {
    RatVec x = queue.front();
    queue.pop_front();
    for (const auto& b : set) {
      Rational c = 2 * dot(x, b) / dot(b, b);
      RatVec y = x;
      for (size_t i = 0; i < y.size(); ++i) y[i] -= c * b[i];
      std::string k = vec_key(y);
      if (!members.count(k))
        throw std::logic_error("root set not closed under its reflections");
      if (!orbit.count(k)) {
        orbit[k] = y;
        queue.push_back(y);
      }
    }
  }

  std::vector<RatVec> perp;
  for (const auto& b : set)
    if (dot(b, theta) == 0) perp.push_back(b);
  return BigInt(static_cast<unsigned long>(orbit.size())) * order_of_root_set(perp);
}

BigInt weyl_order_orbit_stabilizer(const LieType& t) {
  RootSystem rs = generate_roots(t);
  return order_of_root_set(rs.roots);
}

OrbitResult weyl_orbit(const LieType& t, const RatVec& seed, bool with_words,
                       size_t max_size) {
  WeylGroup w = weyl_group(t);
  size_t d = w.generators[0].size();
  if (seed.size() != d)
    throw std::invalid_argument("seed dimension " + std::to_string(seed.size()) +
                                " != ambient dimension " + std::to_string(d));
  struct Node {
    RatVec v;
    std::vector<int> word;
  };
  std::map<std::string, Node> seen;
  std::deque<std::string> queue;
  std::string k0 = vec_key(seed);
  seen[k0] = {seed, {}};
  queue.push_back(k0);
  while (!queue.empty()) {
    Node cur = seen[queue.front()];
    queue.pop_front();
    for (size_t gi = 0; gi < w.generators.size(); ++gi) {
      RatVec y = mat_apply(w.generators[gi], cur.v);
      std::string k = vec_key(y);
      if (!seen.count(k)) {
        if (seen.size() >= max_size)
          throw std::invalid_argument("orbit exceeds size cap " +
                                      std::to_string(max_size));
        std::vector<int> word;
        if (with_words) {
          word = cur.word;
          word.push_back(static_cast<int>(gi));
        }
        seen[k] = {y, word};
        queue.push_back(k);
      }
    }
  }
  std::vector<Node> nodes;
  for (auto& [k, n] : seen) nodes.push_back(n);
  std::sort(nodes.begin(), nodes.end(),
            [](const Node& a, const Node& b) { return vec_less(a.v, b.v); });
  OrbitResult res;
  res.seed = seed;
  for (auto& n : nodes) {
    res.elements.push_back(n.v);
    if (with_words) res.words.push_back(n.word);
  }
  return res;
}

BigInt catalan(long k) {
  if (k < 0) throw std::invalid_argument("catalan: negative index");
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * static_cast<unsigned long>(k),
               static_cast<unsigned long>(k));
  BigInt r;
  mpz_divexact_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(k) + 1);
  return r;
}

BigInt weyl_catalan(const LieType& t) {
  auto [h, hd] = coxeter_numbers(t);
  (void)hd;
  BigInt num = 1, den = 1;
  for (int d : fundamental_degrees(t)) {
    num *= h + d;
    den *= d;
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("W-Catalan number not integral for " + t.str());
  BigInt r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

BigInt lattice_automorphism_order(const LieType& t) {
  return weyl_order(t) * diagram_automorphism_count(t);
}

BigInt lattice_automorphism_enumerated(const LieType& t) {
  if (t.rank > 4)
    throw std::invalid_argument("isometry search capped at rank 4: " + t.str());
  RootSystem rs = generate_roots(t);
  int n = t.rank;

  // Candidate images sorted by squared length then lexicographic coordinates.
  std::vector<RatVec> cand = rs.roots;
  std::sort(cand.begin(), cand.end(), [](const RatVec& a, const RatVec& b) {
    int c = cmp(dot(a, a), dot(b, b));
    if (c != 0) return c < 0;
    return vec_less(a, b);
  });

  RatMat gram(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gram[i][j] = dot(rs.simple_roots[i], rs.simple_roots[j]);

  long count = 0;
  std::vector<const RatVec*> img(n, nullptr);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      ++count;
      return;
    }
    for (const auto& b : cand) {
      if (dot(b, b) != gram[i][i]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (dot(b, *img[j]) != gram[i][j]) ok = false;
      if (!ok) continue;
      img[i] = &b;
      rec(i + 1);
    }
  };
  rec(0);
  return BigInt(count);
}

}  // namespace qlie
