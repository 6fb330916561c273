// Command-line frontend: one subcommand per public library operation, JSON
// output by default (csv/text selectable), machine-readable errors, and
// byte-identical reproducibility for identical arguments and seed.
#include <complex>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qlie/exalg.hpp"
#include "qlie/laurent.hpp"
#include "qlie/matmodel.hpp"
#include "qlie/partition.hpp"
#include "qlie/qgroup.hpp"
#include "qlie/rootsys.hpp"
#include "qlie/weyl.hpp"

using json = nlohmann::ordered_json;
using namespace qlie;

namespace {

// ---------------------------------------------------------------- parsing

long parse_long(const std::string& s) {
  size_t pos = 0;
  long v = std::stol(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
  return v;
}

double parse_double(const std::string& s) {
  size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad number: " + s);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  if (s.empty()) return out;
  for (const std::string& part : split(s, ',')) out.push_back(parse_long(part));
  return out;
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  if (s.empty()) return out;
  for (const std::string& part : split(s, ','))
    out.push_back(parse_double(part));
  return out;
}

// "a" or "a,b" -> a + bi.
Cplx parse_complex(const std::string& s) {
  std::vector<std::string> parts = split(s, ',');
  if (parts.size() == 1) return Cplx(parse_double(parts[0]), 0.0);
  if (parts.size() == 2)
    return Cplx(parse_double(parts[0]), parse_double(parts[1]));
  throw std::invalid_argument("bad complex value: " + s);
}

struct QMode {
  bool symbolic = true;
  Cplx value;
};

QMode parse_qmode(const std::string& s) {
  QMode m;
  if (s == "symbolic") return m;
  m.symbolic = false;
  m.value = parse_complex(s);
  if (m.value == Cplx(0.0, 0.0))
    throw std::invalid_argument("q must be nonzero");
  return m;
}

// "=1;1=2;2,1=0.5,-0.5": semicolon-separated partition=coefficient entries,
// empty partition text for the trivial rep, complex values as re or re,im.
TopCoefficients parse_coeffs(const std::string& s) {
  TopCoefficients out;
  for (const std::string& entry : split(s, ';')) {
    if (entry.empty()) continue;
    size_t eq = entry.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("coefficient entry needs '=': " + entry);
    std::vector<long> label = parse_longs(entry.substr(0, eq));
    out[label] = parse_complex(entry.substr(eq + 1));
  }
  return out;
}

// -------------------------------------------------------------- rendering

json complex_json(Cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json ratvec_json(const RatVec& v) {
  json arr = json::array();
  for (const Rational& x : v) arr.push_back(x.get_str());
  return arr;
}

std::string json_scalar_str(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_cell(const json& v) {
  std::string s = json_scalar_str(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void render_csv(const json& result, std::ostream& out) {
  const json& rows = result.is_array() ? result : json::array({result});
  if (rows.empty()) return;
  bool first = true;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
    if (!first) out << ',';
    out << csv_cell(it.key());
    first = false;
  }
  out << '\n';
  for (const json& row : rows) {
    first = true;
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (!first) out << ',';
      out << csv_cell(it.value());
      first = false;
    }
    out << '\n';
  }
}

void render_text(const json& result, std::ostream& out) {
  if (result.is_array()) {
    for (const json& row : result) out << row.dump() << '\n';
    return;
  }
  for (auto it = result.begin(); it != result.end(); ++it)
    out << it.key() << ": " << json_scalar_str(it.value()) << '\n';
}

void render(const json& result, const std::string& format) {
  if (format == "json")
    std::cout << result.dump(2) << '\n';
  else if (format == "csv")
    render_csv(result, std::cout);
  else
    render_text(result, std::cout);
}

int emit_error(const std::string& code, const std::string& message,
               const std::string& format, int exit_code) {
  json err{{"error", json{{"code", code}, {"message", message}}}};
  render(err, format);
  return exit_code;
}

// ------------------------------------------------------------ subcommands

json laurent_json(const LaurentPoly& p, const QMode& q) {
  if (q.symbolic) return p.str();
  return complex_json(p.eval_q(q.value));
}

AlgebraTensor algebra_by_tag(const std::string& tag) {
  if (tag == "R") return real_algebra();
  if (tag == "C") return complex_algebra();
  if (tag == "H") return quaternion_algebra();
  if (tag == "O") return octonion_algebra();
  if (tag == "jordan") return jordan_h3o();
  throw std::invalid_argument("unknown algebra: " + tag);
}

ModelSpec parse_model(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] != '{') {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot read model file: " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json j = json::parse(text);
  ModelSpec m;
  m.type = parse_lie_type(j.at("type").get<std::string>());
  m.node_sizes = j.at("node_sizes").get<std::vector<long>>();
  m.potentials = j.at("potentials").get<std::vector<std::vector<double>>>();
  m.g = j.value("g", 1.0);
  m.epsilon = j.value("epsilon", 0.0);
  m.use_cartan_exponents = j.value("use_cartan_exponents", false);
  return m;
}

struct SelftestGroup {
  std::string name;
  std::function<bool()> run;
};

std::vector<SelftestGroup> selftest_groups() {
  std::vector<SelftestGroup> groups;
  groups.push_back({"q-arithmetic", [] {
    Rational factorial = 1;
    for (long m = 0; m <= 8; ++m) {
      if (m > 1) factorial *= m;
      LaurentPoly qm = q_number(m);
      if (!(qm.bar() == qm)) return false;
      if (!(q_number(-m) == qm * LaurentPoly(-1))) return false;
      if (q_factorial(m).at_one() != factorial) return false;
    }
    for (long n = 0; n <= 12; ++n)
      for (long k = 0; k <= n; ++k) {
        LaurentPoly b = q_binomial(n, k);
        if (!(b.bar() == b)) return false;
      }
    return true;
  }});
  groups.push_back({"weyl-enumeration", [] {
    for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
      LieType t = parse_lie_type(name);
      if (weyl_order_enumerated(t) != weyl_order(t)) return false;
    }
    return true;
  }});
  groups.push_back({"qdim-agreement", [] {
    for (int n = 2; n <= 4; ++n)
      for (const std::vector<long>& lam : all_partitions(3, n)) {
        std::vector<long> padded = lam;
        padded.resize(n, 0);
        std::vector<long> hw(n - 1);
        for (int i = 0; i + 1 < n; ++i) hw[i] = padded[i] - padded[i + 1];
        LieType t{Family::A, n - 1};
        if (!(qdim_typeA(lam, n) == qdim_roots(hw, t))) return false;
      }
    return true;
  }});
  groups.push_back({"magic-square", [] {
    int flagged = 0;
    for (const MagicCell& c : magic_square_check())
      if (!c.consistent) {
        ++flagged;
        if (c.row != 'H' || c.col != 'H') return false;
        if (c.formula_dim != 66 || c.label_dim != 78) return false;
      }
    return flagged == 1;
  }});
  groups.push_back({"octonion-derivations", [] {
    if (derivation_dimension(quaternion_algebra()) != 3) return false;
    return derivation_dimension(octonion_algebra()) == 14;
  }});
  return groups;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-deformed Lie theory toolkit"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();

  std::string type_s = "A1", q_s = "symbolic", partition_s, theta_s, weight_s;
  std::string algebra_s = "O", model_s, method_s = "mc", beta_s = "0,1";
  std::string entropies_s, r1_s, r2_s;
  std::vector<std::string> coeffs_v;
  long n_l = 2, k_l = 0, cutoff_l = 4, samples_l = 100000, grid_l = 128;
  long kmax_l = 1, length_sq = 2;
  int dim_i = 0, threads_i = 0, nn_i = 2;
  std::uint64_t seed_u = 0;
  double epsilon_d = 0.0;
  bool fast_b = false, words_b = false, check_b = false;

  std::function<json()> runner;
  int exit_override = 0;

  auto* c_roots = app.add_subcommand("roots", "Root system data");
  c_roots->add_option("--type", type_s, "Lie type, e.g. E8")->required();
  c_roots->callback([&] {
    runner = [&]() -> json {
      LieType t = parse_lie_type(type_s);
      RootSystem rs = generate_roots(t);
      auto [h, hd] = coxeter_numbers(t);
      json simple = json::array();
      for (const RatVec& a : rs.simple_roots) simple.push_back(ratvec_json(a));
      return json{{"type", t.str()},
                  {"rank", t.rank},
                  {"ambient_dim", rs.ambient},
                  {"num_roots", rs.roots.size()},
                  {"num_positive", rs.positive_roots.size()},
                  {"lie_dimension", lie_dimension(t)},
                  {"coxeter_number", h},
                  {"dual_coxeter_number", hd},
                  {"simple_roots", simple},
                  {"weyl_vector", ratvec_json(rs.weyl_vector)}};
    };
  });

  auto* c_cartan = app.add_subcommand("cartan", "Cartan matrix");
  c_cartan->add_option("--type", type_s)->required();
  c_cartan->callback([&] {
    runner = [&]() -> json {
      LieType t = parse_lie_type(type_s);
      return json{{"type", t.str()},
                  {"rank", t.rank},
                  {"cartan", cartan_matrix(t)}};
    };
  });

  auto* c_qcartan = app.add_subcommand("qcartan", "q-deformed Cartan matrix");
  c_qcartan->add_option("--type", type_s)->required();
  c_qcartan->add_option("--q", q_s, "symbolic or numeric re[,im]");
  c_qcartan->callback([&] {
    runner = [&]() -> json {
      LieType t = parse_lie_type(type_s);
      QMode qm = parse_qmode(q_s);
      json rows = json::array();
      for (const auto& row : q_cartan(t)) {
        json r = json::array();
        for (const LaurentPoly& p : row) r.push_back(laurent_json(p, qm));
        rows.push_back(r);
      }
      return json{{"type", t.str()}, {"qcartan", rows}};
    };
  });

  auto* c_worder = app.add_subcommand("weyl-order", "Weyl group order");
  c_worder->add_option("--type", type_s)->required();
  c_worder->callback([&] {
    runner = [&]() -> json {
      LieType t = parse_lie_type(type_s);
      return json{{"type", t.str()},
                  {"order", weyl_order(t).get_str()},
                  {"degrees", fundamental_degrees(t)}};
    };
  });

  auto* c_orbit = app.add_subcommand("orbit", "Weyl orbit of a weight");
  c_orbit->add_option("--type", type_s)->required();
  c_orbit
      ->add_option("--weight", weight_s,
                   "Fundamental-weight coefficients c1,c2,...")
      ->required();
  c_orbit->add_flag("--words", words_b, "Include reflection words");
  c_orbit->callback([&] {
    runner = [&]() -> json {
      LieType t = parse_lie_type(type_s);
      std::vector<long> coeffs = parse_longs(weight_s);
      if (coeffs.size() != static_cast<size_t>(t.rank))
        throw std::invalid_argument("weight needs one coefficient per node");
      RatMat omega = fundamental_weights(t);
      RatVec seed(omega[0].size(), Rational(0));
      for (size_t i = 0; i < coeffs.size(); ++i)
        for (size_t k = 0; k < seed.size(); ++k)
          seed[k] += Rational(coeffs[i]) * omega[i][k];
      OrbitResult orbit = weyl_orbit(t, seed, words_b);
      BigInt order = weyl_order(t);
      BigInt size(static_cast<unsigned long>(orbit.elements.size()));
      if (!mpz_divisible_p(order.get_mpz_t(), size.get_mpz_t()))
        throw std::logic_error("orbit size does not divide the group order");
      json out{{"type", t.str()},
               {"weight", coeffs},
               {"seed", ratvec_json(orbit.seed)},
               {"orbit_size", orbit.elements.size()},
               {"weyl_order", order.get_str()},
               {"stabilizer_order", BigInt(order / size).get_str()}};
      if (orbit.elements.size() <= 200) {
        json elems = json::array();
        for (const RatVec& v : orbit.elements) elems.push_back(ratvec_json(v));
        out["elements"] = elems;
        if (words_b) out["words"] = orbit.words;
      }
      return out;
    };
  });

  auto* c_catalan = app.add_subcommand("catalan", "Catalan number C_n");
  c_catalan->add_option("--n", n_l)->required();
  c_catalan->callback([&] {
    runner = [&]() -> json {
      return json{{"n", n_l}, {"catalan", catalan(n_l).get_str()}};
    };
  });

  auto* c_wcat = app.add_subcommand("weyl-catalan", "Generalized Catalan Cat(W)");
  c_wcat->add_option("--type", type_s)->required();
  c_wcat->callback([&] {
    runner = [&]() -> json {
      LieType t = parse_lie_type(type_s);
      return json{{"type", t.str()},
                  {"weyl_catalan", weyl_catalan(t).get_str()}};
    };
  });

  auto* c_laut = app.add_subcommand("lattice-aut", "Root lattice automorphisms");
  c_laut->add_option("--type", type_s)->required();
  c_laut->callback([&] {
    runner = [&]() -> json {
      LieType t = parse_lie_type(type_s);
      json out{{"type", t.str()},
               {"weyl_order", weyl_order(t).get_str()},
               {"diagram_automorphisms", diagram_automorphism_count(t)},
               {"order", lattice_automorphism_order(t).get_str()}};
      if (t.rank <= 4)
        out["enumerated"] = lattice_automorphism_enumerated(t).get_str();
      return out;
    };
  });

  auto* c_qnum = app.add_subcommand("qnum", "Quantum integer [n]");
  c_qnum->add_option("--n", n_l)->required();
  c_qnum->add_option("--q", q_s);
  c_qnum->add_option("--length-sq", length_sq, "Root length square for q_i");
  c_qnum->callback([&] {
    runner = [&]() -> json {
      QMode qm = parse_qmode(q_s);
      return json{{"n", n_l},
                  {"qnum", laurent_json(q_number(n_l, length_sq), qm)}};
    };
  });

  auto* c_qfact = app.add_subcommand("qfact", "Quantum factorial [n]!");
  c_qfact->add_option("--n", n_l)->required();
  c_qfact->add_option("--q", q_s);
  c_qfact->add_option("--length-sq", length_sq);
  c_qfact->callback([&] {
    runner = [&]() -> json {
      QMode qm = parse_qmode(q_s);
      return json{{"n", n_l},
                  {"qfact", laurent_json(q_factorial(n_l, length_sq), qm)}};
    };
  });

  auto* c_qbinom = app.add_subcommand("qbinom", "Quantum binomial [n choose k]");
  c_qbinom->add_option("--n", n_l)->required();
  c_qbinom->add_option("--k", k_l)->required();
  c_qbinom->add_option("--q", q_s);
  c_qbinom->add_option("--length-sq", length_sq);
  c_qbinom->callback([&] {
    runner = [&]() -> json {
      QMode qm = parse_qmode(q_s);
      return json{{"n", n_l},
                  {"k", k_l},
                  {"qbinom", laurent_json(q_binomial(n_l, k_l, length_sq), qm)}};
    };
  });

  auto* c_qdim = app.add_subcommand("qdim", "Quantum dimension");
  c_qdim->add_option("--type", type_s, "A for partitions; else any type with "
                                       "fundamental-weight coefficients");
  c_qdim->add_option("--n", n_l, "Number of rows N for type A");
  c_qdim->add_option("--partition", partition_s)->required();
  c_qdim->add_option("--q", q_s);
  c_qdim->callback([&] {
    runner = [&]() -> json {
      QMode qm = parse_qmode(q_s);
      std::vector<long> label = parse_longs(partition_s);
      LaurentPoly d(1);
      json out;
      if (type_s == "A" || type_s == "a") {
        d = qdim_typeA(label, static_cast<int>(n_l));
        out["type"] = "A";
        out["n"] = n_l;
      } else {
        LieType t = parse_lie_type(type_s);
        d = qdim_roots(label, t);
        out["type"] = t.str();
      }
      out["partition"] = label;
      out["qdim"] = laurent_json(d, qm);
      out["classical_dim"] = d.at_one().get_str();
      return out;
    };
  });

  auto* c_uqcheck = app.add_subcommand("uq-check", "Defining-relation check");
  c_uqcheck->add_option("--n", nn_i, "n of the type A_{n-1} presentation")
      ->check(CLI::Range(2, 16));
  c_uqcheck->add_option("--dim", dim_i,
                        "Module dimension for the one-node presentation");
  c_uqcheck->add_flag("--fast", fast_b, "Evaluation-based relation check");
  c_uqcheck->callback([&] {
    runner = [&]() -> json {
      if (dim_i != 0 && nn_i != 2)
        throw std::invalid_argument("--dim only applies to --n 2");
      QuantumRep rep =
          nn_i == 2 ? build_sl2_rep(dim_i == 0 ? 2 : dim_i)
                    : build_sln_fundamental(nn_i);
      RelationReport rep_report = check_relations(rep, fast_b);
      json items = json::array();
      for (const auto& item : rep_report.items) {
        json it{{"relation", item.relation}, {"pass", item.pass}};
        if (!item.pass) it["witness"] = item.witness;
        items.push_back(it);
      }
      return json{{"algebra", "sl" + std::to_string(nn_i)},
                  {"module_dim", rep.dimension},
                  {"mode", fast_b ? "fast" : "exact"},
                  {"structural_ok", rep_report.structural_ok},
                  {"all_pass", rep_report.all_pass()},
                  {"relations", items}};
    };
  });

  auto* c_char = app.add_subcommand("character", "Schur character");
  c_char->add_option("--partition", partition_s)->required();
  c_char->add_option("--theta", theta_s, "Eigenvalue angles t1,t2,...")
      ->required();
  c_char->callback([&] {
    runner = [&]() -> json {
      std::vector<long> label = parse_longs(partition_s);
      Spectrum spec;
      for (double th : parse_doubles(theta_s))
        spec.push_back(Cplx(std::cos(th), std::sin(th)));
      if (spec.empty()) throw std::invalid_argument("need at least one angle");
      Cplx jt = schur_jacobi_trudi(label, spec);
      json out{{"partition", label},
               {"theta", parse_doubles(theta_s)},
               {"value", complex_json(jt)}};
      try {
        Cplx bi = schur_bialternant(label, spec);
        out["route_difference"] = std::abs(jt - bi);
      } catch (const std::invalid_argument&) {
        out["route_difference"] = nullptr;  // repeated eigenvalues
      }
      return out;
    };
  });

  auto* c_zqym = app.add_subcommand("zqym", "Truncated qYM/qCS sum");
  c_zqym->add_option("--n", nn_i, "Holonomy group rank N")->required();
  c_zqym->add_option("--q", q_s, "Numeric re[,im] (symbolic unsupported)");
  c_zqym->add_option("--theta", theta_s, "N eigenvalue angles")->required();
  c_zqym->add_option("--cutoff", cutoff_l)->required();
  c_zqym->callback([&] {
    runner = [&]() -> json {
      QMode qm = parse_qmode(q_s);
      if (qm.symbolic)
        throw std::invalid_argument("zqym needs a numeric --q value");
      Spectrum spec;
      for (double th : parse_doubles(theta_s))
        spec.push_back(Cplx(std::cos(th), std::sin(th)));
      ZqymResult r = z_qym(nn_i, qm.value, spec, cutoff_l);
      return json{{"n", nn_i},
                  {"q", complex_json(qm.value)},
                  {"z_qym", complex_json(r.value)},
                  {"terms", r.terms},
                  {"cutoff", r.cutoff}};
    };
  });

  auto* c_zbh = app.add_subcommand("zbh", "Black-hole norm square");
  c_zbh->add_option("--coeffs", coeffs_v,
                    "Per-stack map \"p1,p2=re[,im];...\" (empty p = trivial)")
      ->required();
  c_zbh->callback([&] {
    runner = [&]() -> json {
      std::vector<TopCoefficients> stacks;
      json reps = json::array();
      for (const std::string& s : coeffs_v) {
        stacks.push_back(parse_coeffs(s));
        reps.push_back(stacks.back().size());
      }
      return json{{"z_blackhole", z_blackhole_stacks(stacks)},
                  {"stacks", stacks.size()},
                  {"reps_per_stack", reps}};
    };
  });

  auto* c_haar = app.add_subcommand("haar-mc", "Haar character overlap (MC)");
  c_haar->add_option("--r1", r1_s, "First partition");
  c_haar->add_option("--r2", r2_s, "Second partition");
  c_haar->add_option("--n", nn_i, "Unitary group size (only 2)");
  c_haar->add_option("--samples", samples_l);
  c_haar->add_option("--seed", seed_u)->required();
  c_haar->callback([&] {
    runner = [&]() -> json {
      McEstimate e = haar_mc_overlap(parse_longs(r1_s), parse_longs(r2_s),
                                     nn_i, samples_l, seed_u);
      return json{{"r1", parse_longs(r1_s)},
                  {"r2", parse_longs(r2_s)},
                  {"n", nn_i},
                  {"estimate", complex_json(e.value)},
                  {"stderr", e.stderr_},
                  {"samples", e.samples},
                  {"seed", e.seed}};
    };
  });

  auto* c_multi = app.add_subcommand("multicenter", "Catalan multi-center sum");
  c_multi->add_option("--entropies", entropies_s, "S values s1,s2,...")
      ->required();
  c_multi->add_option("--kmax", kmax_l)->required();
  c_multi->callback([&] {
    runner = [&]() -> json {
      std::vector<double> entropies = parse_doubles(entropies_s);
      double single = 0.0;
      for (double s : entropies) single += std::exp(s);
      return json{{"value", multicenter_sum(entropies, kmax_l)},
                  {"k_max", kmax_l},
                  {"num_charges", entropies.size()},
                  {"single_center_sum", single}};
    };
  });

  auto* c_coup = app.add_subcommand("coupling-q", "Coupling map g, q");
  c_coup->add_option("--beta-eta", beta_s, "Complex re[,im]")->required();
  c_coup->callback([&] {
    runner = [&]() -> json {
      Cplx be = parse_complex(beta_s);
      auto [g, q] = coupling_to_q(be);
      return json{{"beta_eta", complex_json(be)},
                  {"g", complex_json(g)},
                  {"q", complex_json(q)},
                  {"q_modulus", std::abs(q)}};
    };
  });

  auto* c_mm = app.add_subcommand("matrix-model", "Eigenvalue integral");
  c_mm->add_option("--model", model_s, "ModelSpec JSON (inline or file path)")
      ->required();
  c_mm->add_option("--method", method_s, "mc or quadrature")
      ->check(CLI::IsMember({"mc", "quadrature"}));
  c_mm->add_option("--samples", samples_l);
  auto* mm_seed = c_mm->add_option("--seed", seed_u);
  c_mm->add_option("--grid", grid_l, "Grid points per dimension");
  c_mm->add_option("--threads", threads_i);
  c_mm->callback([&] {
    runner = [&]() -> json {
      ModelSpec m = parse_model(model_s);
      Estimate e;
      if (method_s == "mc") {
        if (mm_seed->count() == 0)
          throw std::invalid_argument(
              "matrix-model --method mc requires --seed");
        e = z_matrix_model(m, samples_l, seed_u, threads_i);
      } else {
        e = quadrature_oracle(m, grid_l);
      }
      json out{{"value", e.value},
               {"stderr", e.stderr_},
               {"samples", e.samples},
               {"method", e.method}};
      if (method_s == "mc") out["seed"] = e.seed;
      return out;
    };
  });

  auto* c_oct = app.add_subcommand("octonion", "Octonion multiplication table");
  c_oct->callback([&] {
    runner = [&]() -> json {
      AlgebraTensor oct = octonion_algebra();
      json table = json::array();
      for (int i = 0; i < oct.dim; ++i) {
        json row = json::array();
        for (int j = 0; j < oct.dim; ++j) {
          std::string cell;
          for (int k = 0; k < oct.dim; ++k) {
            Rational c = oct.mul[i][j][k];
            if (c == 0) continue;
            cell = (c < 0 ? "-e" : "e") + std::to_string(k);
          }
          row.push_back(cell);
        }
        table.push_back(row);
      }
      return json{{"dim", oct.dim},
                  {"unit_index", oct.unit_index},
                  {"table", table}};
    };
  });

  auto* c_der = app.add_subcommand("derivations", "Derivation algebra dimension");
  c_der->add_option("--algebra", algebra_s, "R, C, H, O, or jordan")
      ->required()
      ->check(CLI::IsMember({"R", "C", "H", "O", "jordan"}));
  c_der->callback([&] {
    runner = [&]() -> json {
      AlgebraTensor alg = algebra_by_tag(algebra_s);
      return json{{"algebra", algebra_s},
                  {"dim", alg.dim},
                  {"derivation_dimension", derivation_dimension(alg)}};
    };
  });

  auto* c_tri = app.add_subcommand("triality", "Triality algebra dimension");
  c_tri->add_option("--algebra", algebra_s, "R, C, H, or O")
      ->required()
      ->check(CLI::IsMember({"R", "C", "H", "O"}));
  c_tri->callback([&] {
    runner = [&]() -> json {
      return json{{"algebra", algebra_s},
                  {"triality_dimension", triality_dimension(algebra_s[0])}};
    };
  });

  auto* c_magic = app.add_subcommand("magic-square", "Magic square table");
  c_magic->add_flag("--check", check_b, "Run consistency checks (always on)");
  c_magic->callback([&] {
    runner = [&]() -> json {
      json cells = json::array();
      for (const MagicCell& c : magic_square_check())
        cells.push_back(json{{"row", std::string(1, c.row)},
                             {"col", std::string(1, c.col)},
                             {"label", c.label},
                             {"formula_dim", c.formula_dim},
                             {"label_dim", c.label_dim},
                             {"consistent", c.consistent}});
      return cells;
    };
  });

  auto* c_cliff = app.add_subcommand("clifford", "Clifford generator tower");
  c_cliff->add_option("--n", nn_i)->required()->check(CLI::Range(0, 8));
  c_cliff->callback([&] {
    runner = [&]() -> json {
      CliffordTower tower = clifford_tower(nn_i);
      return json{{"n", tower.n},
                  {"matrix_size", tower.size},
                  {"span_dim", tower.span_dim},
                  {"generators", tower.generators}};
    };
  });

  auto* c_bott = app.add_subcommand("bott", "Stable homotopy of O(inf)");
  c_bott->add_option("--n", n_l)->required()->check(CLI::NonNegativeNumber);
  c_bott->callback([&] {
    runner = [&]() -> json {
      return json{{"n", n_l}, {"pi_n", bott_homotopy(n_l)}};
    };
  });

  auto* c_self = app.add_subcommand("selftest", "Fast invariant suite");
  c_self->callback([&] {
    runner = [&]() -> json {
      json out = json::array();
      for (const SelftestGroup& g : selftest_groups()) {
        bool ok = false;
        try {
          ok = g.run();
        } catch (const std::exception&) {
          ok = false;
        }
        out.push_back(json{{"group", g.name}, {"pass", ok}});
        if (!ok) exit_override = 1;
      }
      return out;
    };
  });

  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // help request
    return emit_error("invalid_arguments", e.what(), format, 2);
  }

  try {
    render(runner(), format);
  } catch (const nlohmann::json::exception& e) {
    return emit_error("validation_error", e.what(), format, 2);
  } catch (const std::invalid_argument& e) {
    return emit_error("validation_error", e.what(), format, 2);
  } catch (const std::domain_error& e) {
    return emit_error("validation_error", e.what(), format, 2);
  } catch (const std::out_of_range& e) {
    return emit_error("validation_error", e.what(), format, 2);
  } catch (const std::exception& e) {
    return emit_error("internal_error", e.what(), format, 3);
  }
  return exit_override;
}
