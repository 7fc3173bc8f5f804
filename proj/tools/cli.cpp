#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "toricmult/corpus.hpp"
#include "toricmult/oracles.hpp"
#include "toricmult/resolution.hpp"
#include "toricmult/test_ideal.hpp"

namespace toricmult::cli {

namespace {

using json = nlohmann::ordered_json;

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void usage(const std::string& m) { throw Failure{2, m}; }

// ---- problem files ----------------------------------------------------------

struct Problem {
  std::size_t rank = 0;
  std::vector<LatticeVector> rays;
  std::optional<std::vector<Rational>> delta;
  std::optional<std::vector<LatticeVector>> ideal;
  std::optional<Rational> c;
};

Integer parse_integer(const json& j, const std::string& where) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) usage(where + ": malformed integer \"" + s + "\"");
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') usage(where + ": malformed integer \"" + s + "\"");
    return Integer(s);
  }
  usage(where + ": expected an integer");
}

Rational parse_rational_field(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(parse_integer(j, where));
  if (!j.is_string()) usage(where + ": expected a rational string such as \"5/6\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    usage(where + ": " + e.what());
  }
}

Rational parse_rational_arg(const std::string& s, const std::string& where) {
  try {
    return parse_rational(s);
  } catch (const Error& e) {
    usage(where + ": " + e.what());
  }
}

LatticeVector parse_vector(const json& j, std::size_t rank, const std::string& where) {
  if (!j.is_array()) usage(where + ": expected an array of integers");
  if (j.size() != rank) usage(where + ": expected " + std::to_string(rank) + " entries");
  LatticeVector v(rank);
  for (std::size_t i = 0; i < rank; ++i) v[i] = parse_integer(j[i], where);
  return v;
}

std::vector<LatticeVector> parse_vectors(const json& j, std::size_t rank, const std::string& where) {
  if (!j.is_array()) usage(where + ": expected an array of vectors");
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_vector(j[i], rank, where + "[" + std::to_string(i) + "]"));
  return out;
}

Problem parse_problem(const json& doc) {
  if (!doc.is_object()) usage("problem file must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "rank" && key != "rays" && key != "delta" && key != "ideal" && key != "c")
      usage("unknown field \"" + key + "\"");
  Problem p;
  if (!doc.contains("rank")) usage("missing field \"rank\"");
  if (!doc["rank"].is_number_unsigned() || doc["rank"].get<std::uint64_t>() == 0)
    usage("rank: expected a positive integer");
  p.rank = doc["rank"].get<std::size_t>();
  if (!doc.contains("rays")) usage("missing field \"rays\"");
  p.rays = parse_vectors(doc["rays"], p.rank, "rays");
  if (doc.contains("delta")) {
    const json& d = doc["delta"];
    if (!d.is_array()) usage("delta: expected an array of rational strings");
    if (d.size() != p.rays.size()) usage("delta: expected one coefficient per ray");
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < d.size(); ++i) coeffs.push_back(parse_rational_field(d[i], "delta"));
    p.delta = coeffs;
  }
  if (doc.contains("ideal")) p.ideal = parse_vectors(doc["ideal"], p.rank, "ideal");
  if (doc.contains("c")) p.c = parse_rational_field(doc["c"], "c");
  return p;
}

Problem read_problem(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) usage("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    usage(std::string("malformed JSON: ") + e.what());
  }
  return parse_problem(doc);
}

// ---- rendering ----------------------------------------------------------------

json integer_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return json(z.convert_to<std::int64_t>());
  return json(to_string(z));
}

json vector_json(const LatticeVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(integer_json(x));
  return a;
}

json rational_vector_json(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::string monomial(const LatticeVector& v) {
  std::string s = "x^(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

json vectors_json(const std::vector<LatticeVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vector_json(v));
  return a;
}

void put_generators(json& obj, const std::vector<LatticeVector>& gens) {
  obj["generators"] = vectors_json(gens);
  json m = json::array();
  for (const auto& g : gens) m.push_back(monomial(g));
  obj["monomials"] = m;
}

std::string monomial_list(const std::vector<LatticeVector>& gens) {
  std::string s;
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + monomial(gens[i]);
  return s;
}

json problem_json(const Problem& p) {
  json j;
  j["rank"] = p.rank;
  j["rays"] = vectors_json(p.rays);
  if (p.delta) {
    json d = json::array();
    for (const auto& x : *p.delta) d.push_back(to_string(x));
    j["delta"] = d;
  }
  if (p.ideal) j["ideal"] = vectors_json(*p.ideal);
  if (p.c) j["c"] = to_string(*p.c);
  return j;
}

json facets_json(const NewtonPolyhedron& np) {
  json a = json::array();
  for (const auto& f : np.facets) {
    json row;
    row["normal"] = vector_json(f.normal);
    row["b"] = integer_json(f.b);
    a.push_back(row);
  }
  return a;
}

json system_json(const HalfspaceSystem& h) {
  json a = json::array();
  for (const auto& r : h.rows) {
    json row;
    row["normal"] = rational_vector_json(r.normal);
    row["offset"] = to_string(r.offset);
    row["strict"] = r.strict;
    a.push_back(row);
  }
  return a;
}

json document(const std::string& op, const Problem& p) {
  json d;
  d["operation"] = op;
  d["input"] = problem_json(p);
  return d;
}

// ---- building library objects ----------------------------------------------

ToricVariety variety_of(const Problem& p) { return make_variety(p.rays); }

MonomialIdeal ideal_of(const Problem& p, const ToricVariety& x) {
  if (!p.ideal) usage("missing field \"ideal\"");
  return make_ideal(x, *p.ideal);
}

Rational c_of(const Problem& p) {
  if (!p.c) usage("missing field \"c\"");
  return *p.c;
}

QDivisor delta_of(const Problem& p, const ToricVariety& x) {
  if (p.delta) return QDivisor{*p.delta};
  return QDivisor{std::vector<Rational>(x.rays().size(), Rational(0))};
}

void forbid_delta(const Problem& p, const std::string& op) {
  if (p.delta) usage(op + " takes no delta");
}

bool is_smooth(const ToricVariety& x) {
  return x.rays().size() == x.rank() && abs(determinant(x.rays())) == 1;
}

// ---- commands -----------------------------------------------------------------

int cmd_info(const Problem& p, std::ostream& out, std::ostream& err) {
  ToricVariety x = variety_of(p);
  json doc = document("info", p);
  json r;
  r["rays"] = vectors_json(x.rays());
  r["primitivized"] = x.primitivized();
  r["dual_rays"] = vectors_json(x.sigma_dual().rays());
  r["dual_hilbert_basis"] = vectors_json(x.dual_hilbert_basis().elements);
  r["simplicial"] = x.rays().size() == x.rank();
  r["smooth"] = is_smooth(x);
  json k = json::array();
  for (const auto& c : canonical_divisor(x).coeffs) k.push_back(to_string(c));
  r["canonical_divisor"] = k;
  auto g = q_gorenstein_weight(x);
  r["q_gorenstein"] = bool(g);
  if (g) {
    r["gorenstein_weight"] = rational_vector_json(g->first);
    r["gorenstein_index"] = integer_json(g->second);
  }
  json omega;
  put_generators(omega, omega_generators(x));
  r["omega"] = omega;
  if (p.delta) {
    auto w = q_cartier_witness(x, [&] {
      QDivisor t;
      for (const auto& d : *p.delta) t.coeffs.push_back(1 - d);
      return t;
    }());
    r["pair_q_cartier"] = bool(w);
    if (w) r["pair_weight"] = rational_vector_json(*w);
  }
  if (p.ideal) {
    MonomialIdeal a = ideal_of(p, x);
    json ideal;
    put_generators(ideal, a.exponents());
    ideal["newton_facets"] = facets_json(a.newton());
    ideal["newton_vertices"] = vectors_json(a.newton().vertices);
    r["ideal"] = ideal;
  }
  doc["result"] = r;
  out << doc.dump(2) << "\n";
  err << "info: rank " << x.rank() << ", " << x.rays().size() << " rays, smooth=" << (is_smooth(x) ? "yes" : "no")
      << ", Q-Gorenstein=" << (g ? "yes (index " + to_string(g->second) + ")" : std::string("no")) << "\n";
  return 0;
}

int cmd_mult_ideal(const Problem& p, std::ostream& out, std::ostream& err) {
  ToricVariety x = variety_of(p);
  MonomialIdeal a = ideal_of(p, x);
  const Rational c = c_of(p);
  Pair pair = make_pair(x, delta_of(p, x));
  IdealResult res = multiplier_ideal(pair, a, c);
  json doc = document("mult-ideal", p);
  json r;
  r["c"] = to_string(c);
  put_generators(r, res.generators);
  doc["result"] = r;
  json d;
  d["weight"] = rational_vector_json(res.weight_used);
  d["newton_facets"] = facets_json(a.newton());
  d["defining_system"] = system_json(res.defining_system);
  doc["diagnostics"] = d;
  out << doc.dump(2) << "\n";
  err << "mult-ideal at c=" << to_string(c) << ": " << monomial_list(res.generators) << "\n";
  return 0;
}

int cmd_mult_module(const Problem& p, std::ostream& out, std::ostream& err) {
  forbid_delta(p, "mult-module");
  ToricVariety x = variety_of(p);
  MonomialIdeal a = ideal_of(p, x);
  const Rational c = c_of(p);
  IdealResult res = multiplier_module(x, a, c);
  json doc = document("mult-module", p);
  json r;
  r["c"] = to_string(c);
  put_generators(r, res.generators);
  doc["result"] = r;
  json d;
  d["newton_facets"] = facets_json(a.newton());
  d["defining_system"] = system_json(res.defining_system);
  doc["diagnostics"] = d;
  out << doc.dump(2) << "\n";
  err << "mult-module at c=" << to_string(c) << ": " << monomial_list(res.generators) << "\n";
  return 0;
}

int cmd_test_ideal(const Problem& p, std::ostream& out, std::ostream& err) {
  forbid_delta(p, "test-ideal");
  ToricVariety x = variety_of(p);
  MonomialIdeal a = ideal_of(p, x);
  const Rational c = c_of(p);
  IdealResult res = test_ideal(x, a, c);
  json doc = document("test-ideal", p);
  json r;
  r["c"] = to_string(c);
  put_generators(r, res.generators);
  doc["result"] = r;
  json d;
  auto g = q_gorenstein_weight(x);
  d["q_gorenstein"] = bool(g);
  int code = 0;
  if (g) {
    const bool agree = multiplier_ideal(make_pair(x, delta_of(p, x)), a, c).generators == res.generators;
    d["note"] = agree ? "Q-Gorenstein: agrees with multiplier ideal" : "Q-Gorenstein: differs from multiplier ideal";
    if (!agree) code = 1;
  }
  d["newton_facets"] = facets_json(a.newton());
  d["defining_system"] = system_json(res.defining_system);
  doc["diagnostics"] = d;
  out << doc.dump(2) << "\n";
  err << "test-ideal at c=" << to_string(c) << ": " << monomial_list(res.generators) << "\n";
  return code;
}

std::string threshold_string(const Threshold& t) { return t.infinite ? "inf" : to_string(t.value); }

int cmd_lct(const Problem& p, std::ostream& out, std::ostream& err) {
  ToricVariety x = variety_of(p);
  MonomialIdeal a = ideal_of(p, x);
  Pair pair = make_pair(x, delta_of(p, x));
  const Threshold t = lct(pair, a);
  json doc = document("lct", p);
  json r;
  r["lct"] = threshold_string(t);
  doc["result"] = r;
  json d;
  d["weight"] = rational_vector_json(pair.weight);
  d["newton_facets"] = facets_json(a.newton());
  doc["diagnostics"] = d;
  out << doc.dump(2) << "\n";
  err << "lct = " << threshold_string(t) << "\n";
  return 0;
}

int cmd_jumps(const Problem& p, const Rational& c_max, std::ostream& out, std::ostream& err) {
  ToricVariety x = variety_of(p);
  MonomialIdeal a = ideal_of(p, x);
  Pair pair = make_pair(x, delta_of(p, x));
  JumpReport rep = jumping_numbers(pair, a, c_max);
  json doc = document("jumps", p);
  json r;
  r["c_max"] = to_string(c_max);
  json initial;
  put_generators(initial, rep.initial);
  r["initial"] = initial;
  json jumps = json::array();
  std::string summary;
  for (const auto& j : rep.jumps) {
    json e;
    e["xi"] = to_string(j.xi);
    put_generators(e, j.generators);
    jumps.push_back(e);
    summary += (summary.empty() ? "" : ", ") + to_string(j.xi);
  }
  r["jumps"] = jumps;
  json cands = json::array();
  for (const auto& c : rep.candidates) cands.push_back(to_string(c));
  r["candidates"] = cands;
  doc["result"] = r;
  json d;
  d["weight"] = rational_vector_json(pair.weight);
  d["newton_facets"] = facets_json(a.newton());
  doc["diagnostics"] = d;
  out << doc.dump(2) << "\n";
  err << "jumping numbers in (0," << to_string(c_max) << "]: " << (summary.empty() ? "none" : summary) << "\n";
  return 0;
}

LatticeVector parse_monomial(const std::string& text, std::size_t rank) {
  std::vector<LatticeVector::value_type> coords;
  std::stringstream ss(text);
  std::string part;
  json parts = json::array();
  while (std::getline(ss, part, ',')) {
    while (!part.empty() && part.front() == ' ') part.erase(part.begin());
    while (!part.empty() && part.back() == ' ') part.pop_back();
    parts.push_back(part);
  }
  if (!text.empty() && text.back() == ',') usage("--monomial: trailing comma");
  return parse_vector(parts, rank, "--monomial");
}

int cmd_membership(const Problem& p, const std::string& mono, std::ostream& out, std::ostream& err) {
  ToricVariety x = variety_of(p);
  MonomialIdeal a = ideal_of(p, x);
  const LatticeVector m = parse_monomial(mono, x.rank());
  if (!x.sigma_dual().contains(m)) throw Error("exponent " + to_string(m) + " is not in the dual cone");
  json doc = document("membership", p);
  json r;
  r["monomial"] = monomial(m);
  r["in_ideal"] = ideal_membership(a, m);
  bool closure = true;
  for (const auto& f : a.newton().facets) closure = closure && dot(f.normal, m) >= f.b;
  r["in_integral_closure"] = closure;
  std::string summary = monomial(m) + ": ideal=" + (ideal_membership(a, m) ? "yes" : "no");
  if (p.c) {
    const Rational c = *p.c;
    r["c"] = to_string(c);
    Pair pair = make_pair(x, delta_of(p, x));
    const bool j = multiplier_ideal_membership(pair, a, c, m);
    r["multiplier_ideal"] = j;
    const bool jw = interior_contains(a.newton(), c, to_rational(m));
    r["multiplier_module"] = jw;
    auto t = test_ideal_membership(x, a, c, m);
    json tj;
    tj["member"] = t.member;
    if (t.witness) tj["witness"] = rational_vector_json(*t.witness);
    r["test_ideal"] = tj;
    summary += std::string(", multiplier ideal=") + (j ? "yes" : "no") + ", multiplier module=" + (jw ? "yes" : "no") +
               ", test ideal=" + (t.member ? "yes" : "no");
  }
  doc["result"] = r;
  out << doc.dump(2) << "\n";
  err << summary << "\n";
  return 0;
}

// ---- verify ---------------------------------------------------------------------

/// Returns an empty string when the instance agrees, else a description of the disagreement.
std::string check_resolution(const Instance& in) {
  Pair p = make_pair(in.x, in.delta);
  const auto j = multiplier_ideal(p, in.a, in.c).generators;
  const auto m = multiplier_module(in.x, in.a, in.c).generators;
  Fan2D f = log_resolution_2d(in.x, in.a);
  Fan2D r = refine(f);
  if (multiplier_ideal_via_resolution(p, in.a, in.c, f) != j) return "multiplier ideal differs from the resolution";
  if (multiplier_module_via_resolution(in.x, in.a, in.c, f) != m) return "multiplier module differs from the resolution";
  if (multiplier_ideal_via_resolution(p, in.a, in.c, r) != j) return "multiplier ideal differs on the refined fan";
  if (multiplier_module_via_resolution(in.x, in.a, in.c, r) != m) return "multiplier module differs on the refined fan";
  return {};
}

LatticeVector to_ray_coordinates(const ToricVariety& x, const LatticeVector& m) {
  LatticeVector out(x.rank());
  for (std::size_t i = 0; i < x.rank(); ++i) out[i] = dot(m, x.rays()[i]);
  return out;
}

/// Smooth X only: in the coordinates m -> ((m, v_i))_i the variety is affine space.
std::string check_howald(const Instance& in, int box) {
  std::vector<LatticeVector> exps;
  for (const auto& e : in.a.exponents()) exps.push_back(to_ray_coordinates(in.x, e));
  auto expected = oracle::howald_generators(exps, in.c, box);
  std::vector<LatticeVector> got;
  for (const auto& g : multiplier_ideal(make_pair(in.x, in.delta), in.a, in.c).generators)
    got.push_back(to_ray_coordinates(in.x, g));
  std::sort(got.begin(), got.end());
  return got == expected ? std::string() : "multiplier ideal differs from the Howald box scan";
}

Integer degree_bound(const ToricVariety& x, const std::vector<LatticeVector>& gens) {
  const LatticeVector grading = oracle::brute_grading(x);
  Integer d = 0;
  for (const auto& g : gens) d = std::max(d, dot(grading, g));
  for (const auto& h : x.dual_hilbert_basis().elements) d = std::max(d, dot(grading, h));
  return 2 * d;
}

std::string check_brute(const Instance& in) {
  Pair p = make_pair(in.x, in.delta);
  const auto j = multiplier_ideal(p, in.a, in.c).generators;
  if (oracle::brute_minimal(in.x, degree_bound(in.x, j), [&](const LatticeVector& m) {
        return multiplier_ideal_membership(p, in.a, in.c, m);
      }) != j)
    return "multiplier ideal differs from brute force";
  const auto m = multiplier_module(in.x, in.a, in.c).generators;
  if (oracle::brute_minimal(in.x, degree_bound(in.x, m), [&](const LatticeVector& y) {
        return interior_contains(in.a.newton(), in.c, to_rational(y));
      }) != m)
    return "multiplier module differs from brute force";
  const auto t = test_ideal(in.x, in.a, in.c).generators;
  if (oracle::brute_minimal(in.x, degree_bound(in.x, t), [&](const LatticeVector& y) {
        return test_ideal_membership(in.x, in.a, in.c, y).member;
      }) != t)
    return "test ideal differs from per-point feasibility";
  return {};
}

std::string check_corollary(const Instance& in, std::uint64_t seed) {
  CorollaryReport rep = corollary_check(in.x, in.a, in.c, 20, seed);
  if (rep.pass) return {};
  std::string s = "corollary check failed:";
  for (const auto& c : rep.counterexamples) s += " " + c + ";";
  return s;
}

Instance instance_of(const Problem& p) {
  ToricVariety x = variety_of(p);
  MonomialIdeal a = ideal_of(p, x);
  return Instance{x, delta_of(p, x), a, c_of(p)};
}

int cmd_verify(const std::optional<std::string>& file, bool use_corpus, std::uint64_t seed, std::size_t count,
               const std::string& oracle_name, std::ostream& out, std::ostream& err) {
  if (oracle_name != "resolution2d" && oracle_name != "howald" && oracle_name != "brute" &&
      oracle_name != "corollary")
    usage("unknown oracle \"" + oracle_name + "\"");
  if (use_corpus == bool(file)) usage("verify needs either a problem file or --corpus");

  json doc;
  doc["operation"] = "verify";
  doc["oracle"] = oracle_name;
  json mismatches = json::array();
  std::size_t instances = 0;
  auto record = [&](const Instance& in, const std::string& detail) {
    ++instances;
    if (detail.empty()) return;
    json e;
    e["instance"] = json::parse(describe(in));
    e["detail"] = detail;
    mismatches.push_back(e);
  };

  if (file) {
    Problem p = read_problem(*file);
    doc["input"] = problem_json(p);
    Instance in = instance_of(p);
    if (oracle_name == "resolution2d") {
      if (in.x.rank() != 2) usage("resolution2d needs a rank 2 problem");
      record(in, check_resolution(in));
    } else if (oracle_name == "howald") {
      if (!is_smooth(in.x)) usage("howald needs a smooth variety");
      for (const auto& d : in.delta.coeffs)
        if (d != 0) usage("howald needs delta = 0");
      Integer top = 0;
      for (const auto& e : in.a.exponents())
        for (const auto& v : to_ray_coordinates(in.x, e)) top = std::max(top, v);
      const Integer box = std::max(Integer(30), ceil(in.c * Rational(top) * Rational(in.x.rank())) + 1);
      record(in, check_howald(in, box.convert_to<int>()));
    } else if (oracle_name == "brute") {
      record(in, check_brute(in));
    } else {
      forbid_delta(p, "corollary");
      record(in, check_corollary(in, seed));
    }
  } else {
    doc["seed"] = seed;
    doc["count"] = count;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
      if (oracle_name == "resolution2d") {
        Instance in = corpus::resolution_instance(rng);
        record(in, check_resolution(in));
      } else if (oracle_name == "howald") {
        Instance in = corpus::howald_instance(rng);
        for (int k = 0; k < 5; ++k) {
          in.c = corpus::random_positive(rng, 3, 6);
          record(in, check_howald(in, 30));
        }
      } else if (oracle_name == "brute") {
        Instance in = corpus::brute_instance(rng);
        record(in, check_brute(in));
      } else {
        Instance in = i % 3 == 0   ? corpus::q_gorenstein_instance(rng)
                      : i % 3 == 1 ? corpus::resolution_instance(rng)
                                   : corpus::non_q_gorenstein_instance(rng);
        in.delta.coeffs.assign(in.x.rays().size(), Rational(0));
        record(in, check_corollary(in, seed + i));
      }
    }
  }
  doc["instances"] = instances;
  doc["mismatches"] = mismatches;
  doc["status"] = mismatches.empty() ? "agree" : "mismatch";
  out << doc.dump(2) << "\n";
  err << "verify " << oracle_name << ": " << instances << " instances, " << mismatches.size() << " mismatches\n";
  return mismatches.empty() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiplier ideals, multiplier modules and test ideals of monomial ideals on affine toric varieties"};
  app.require_subcommand(1);
  std::string file;
  std::string max_text, mono;
  bool use_corpus = false;
  std::uint64_t seed = 42;
  std::size_t count = 100;
  std::string oracle_name;

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "problem file (JSON), - for stdin")->required(); };
  auto* info = app.add_subcommand("info", "cone, dual cone, Hilbert basis, canonical data, Newton polyhedron");
  add_file(info);
  auto* mi = app.add_subcommand("mult-ideal", "multiplier ideal J((X,delta), a^c)");
  add_file(mi);
  auto* mm = app.add_subcommand("mult-module", "multiplier module J_omega(a^c)");
  add_file(mm);
  auto* ti = app.add_subcommand("test-ideal", "test ideal tau(a^c)");
  add_file(ti);
  auto* lc = app.add_subcommand("lct", "log canonical threshold");
  add_file(lc);
  auto* jp = app.add_subcommand("jumps", "jumping numbers in (0, max]");
  add_file(jp);
  jp->add_option("--max", max_text, "upper end of the range, as p/q")->required();
  auto* mb = app.add_subcommand("membership", "membership of one monomial in the ideal and its invariants");
  add_file(mb);
  mb->add_option("--monomial", mono, "exponent vector, e.g. \"1,0\"")->required();
  auto* vf = app.add_subcommand("verify", "compare against an independent oracle");
  vf->add_option("file", file, "problem file (JSON)");
  vf->add_flag("--corpus", use_corpus, "use the seeded random corpus instead of a file");
  vf->add_option("--seed", seed, "corpus seed")->capture_default_str();
  vf->add_option("--count", count, "corpus size")->capture_default_str();
  vf->add_option("--oracle", oracle_name, "resolution2d | howald | brute | corollary")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*vf) {
      std::optional<std::string> f;
      if (!file.empty()) f = file;
      return cmd_verify(f, use_corpus, seed, count, oracle_name, out, err);
    }
    const Problem p = read_problem(file);
    if (*info) return cmd_info(p, out, err);
    if (*mi) return cmd_mult_ideal(p, out, err);
    if (*mm) return cmd_mult_module(p, out, err);
    if (*ti) return cmd_test_ideal(p, out, err);
    if (*lc) return cmd_lct(p, out, err);
    if (*jp) return cmd_jumps(p, parse_rational_arg(max_text, "--max"), out, err);
    if (*mb) return cmd_membership(p, mono, out, err);
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace toricmult::cli
