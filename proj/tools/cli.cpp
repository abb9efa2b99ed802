#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "skewbrace/brace.hpp"
#include "skewbrace/catalog.hpp"
#include "skewbrace/lattice.hpp"
#include "skewbrace/rota_baxter.hpp"
#include "skewbrace/schreier.hpp"
#include "skewbrace/structure.hpp"
#include "skewbrace/system.hpp"

namespace skb::cli {

using nlohmann::json;

namespace {

// Input problems exit with code 2; everything else thrown by the library is a
// verification failure.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_input_error(Errc c) {
  switch (c) {
    case Errc::ParseError:
    case Errc::MalformedTable:
    case Errc::RankMismatch:
    case Errc::PreconditionFails:
    case Errc::OrderCapExceeded:
    case Errc::NotLatinSquare:
    case Errc::NoIdentity:
    case Errc::NotAssociative:
    case Errc::NoInverse:
      return true;
    default:
      return false;
  }
}

struct Globals {
  std::uint64_t seed = 0;
  int samples = 500;
  int max_order = 24;
  std::string out;
  std::string format = "json";
};

struct Result {
  json report = json::object();
  int status = 0;
  std::string dot;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("FileNotFound: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("ParseError: ") + path + ": " + e.what());
  }
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("ParseError: missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("ParseError: field \"") + key + "\": " + e.what());
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("ParseError: bad integer \"" + tok + "\" in list \"" + text + "\"");
    }
  }
  return out;
}

json table_json(const FiniteGroup& g) { return g.table(); }

json violation_json(const AxiomViolation& v) {
  return {{"kind", std::string(errc_name(v.kind))}, {"witness", v.witness}, {"message", v.message}};
}

FiniteGroup group_from_json(const json& j) {
  std::string name = j.value("name", std::string{});
  if (j.contains("table")) {
    auto v = verify_group(field<Table>(j, "table"), name);
    if (!v.ok()) {
      const auto& first = v.violations.front();
      std::vector<long long> w(first.witness.begin(), first.witness.end());
      throw Error(first.kind, first.message, w);
    }
    return *v.group;
  }
  if (j.contains("degree")) {
    int degree = field<int>(j, "degree");
    std::vector<Perm> gens;
    for (const auto& s : field<std::vector<std::string>>(j, "generators")) gens.push_back(parse_cycles(s, degree));
    return permutation_group(name, degree, gens);
  }
  throw InputError("ParseError: group file needs \"table\" or \"degree\" and \"generators\"");
}

struct GroupSource {
  std::string in;
  std::string name;

  void add(CLI::App* app) {
    app->add_option("--in", in, "Group JSON file");
    app->add_option("--group", name, "Named group such as Z4, S3, D4, Q8, Z2xZ4");
  }
  FiniteGroup load(const Limits& limits) const {
    if (!in.empty() && !name.empty()) throw InputError("Usage: give either --in or --group");
    FiniteGroup g;
    if (!name.empty()) g = group_by_name(name);
    else if (!in.empty()) g = group_from_json(load_json(in));
    else throw InputError("Usage: a group is required (--in or --group)");
    if (g.order() > limits.max_group_order)
      throw Error(Errc::OrderCapExceeded, "group order above --max-order", {g.order(), limits.max_group_order});
    return g;
  }
};

SkewBrace brace_from_json(const json& j) {
  int n = field<int>(j, "order");
  auto add = field<Table>(j, "add");
  auto circ = field<Table>(j, "circ");
  if (static_cast<int>(add.size()) != n || static_cast<int>(circ.size()) != n)
    throw Error(Errc::MalformedTable, "table size differs from order", {n});
  return SkewBrace(FiniteGroup::from_table("add", add), FiniteGroup::from_table("circ", circ));
}

struct BraceSource {
  GroupSource group;
  std::string in;
  std::string kind = "op";

  void add(CLI::App* app) {
    app->add_option("--in", in, "Brace JSON file {\"order\", \"add\", \"circ\"}");
    app->add_option("--group", group.name, "Named group for a built-in brace");
    app->add_option("--brace", kind, "Built-in brace on --group: op or trivial")
        ->check(CLI::IsMember({"op", "trivial"}));
  }
  SkewBrace load(const Limits& limits) const {
    if (!in.empty() && !group.name.empty()) throw InputError("Usage: give either --in or --group");
    if (!in.empty()) {
      SkewBrace b = brace_from_json(load_json(in));
      if (b.order() > limits.max_group_order)
        throw Error(Errc::OrderCapExceeded, "brace order above --max-order", {b.order(), limits.max_group_order});
      return b;
    }
    FiniteGroup g = group.load(limits);
    if (kind == "trivial") return SkewBrace::trivial(g);
    return SkewBrace(g, g.opposite());
  }
};

std::vector<Perm> lambda_from_json(const json& j, int order) {
  int n = field<int>(j, "order");
  if (n != order) throw Error(Errc::PreconditionFails, "λ file order differs from the group order", {n, order});
  auto lam = field<std::vector<Perm>>(j, "lambda");
  if (static_cast<int>(lam.size()) != n)
    throw Error(Errc::MalformedTable, "one λ_a per element is required", {static_cast<long long>(lam.size()), n});
  return lam;
}

json classify_json(const SkewBrace& b) {
  auto c = classify(b);
  return {{"lambda_homomorphic", c.lambda_homomorphic}, {"lambda_anti_homomorphic", c.lambda_anti_homomorphic},
          {"symmetric", c.symmetric},                   {"lambda_cyclic", c.lambda_cyclic},
          {"natural", c.natural},                       {"two_sided", c.two_sided},
          {"trivial", c.trivial}};
}

json lambda_json(const SkewBrace& b) {
  const auto& l = b.lambda();
  json maps = json::array();
  for (const auto& m : l.maps) maps.push_back(m.images);
  return {{"maps", maps},
          {"kernel", l.kernel},
          {"image_order", l.image_order},
          {"image_exponent", l.image_exponent},
          {"image_abelian", l.image_abelian},
          {"image_cyclic", l.image_cyclic},
          {"homomorphic_on_add", l.homomorphic_on_add},
          {"anti_homomorphic_on_add", l.anti_homomorphic_on_add}};
}

json brace_json(const SkewBrace& b) {
  return {{"order", b.order()}, {"add", table_json(b.add())}, {"circ", table_json(b.circ())}, {"classify", classify_json(b)}};
}

json witness_json(const std::optional<std::array<int, 3>>& w) {
  if (!w) return nullptr;
  return {(*w)[0], (*w)[1], (*w)[2]};
}

json system_json(const BraceSystem& s) {
  json vertices = json::array();
  for (const auto& v : s.vertices) vertices.push_back(table_json(v));
  json edges = json::array();
  auto sorted = s.edges;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& e : sorted) edges.push_back({e.from, e.to, std::string(status_name(e.status))});
  json levels = json::array();
  for (const auto& [level, v] : s.levels) levels.push_back({level, v});
  json j = {{"carrier_order", s.carrier_order},
            {"kind", std::string(kind_name(s.kind))},
            {"labels", s.labels},
            {"vertices", vertices},
            {"edges", edges},
            {"levels", levels},
            {"advisories", s.advisories},
            {"all_pairs_verified", s.all_pairs_verified()}};
  return j;
}

json formula_json(const std::vector<FormulaCheck>& fs) {
  json a = json::array();
  for (const auto& f : fs) a.push_back({{"id", f.id}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"holds", f.holds}, {"note", f.note}});
  return a;
}

template <class T>
json opt_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

FreeAutomorphism theta_from(const std::string& kind, int n, const std::string& word) {
  if (kind == "cycle") return FreeAutomorphism::cycle(n);
  if (kind == "identity") return FreeAutomorphism::identity(n);
  return FreeAutomorphism::inner(FreeWord::parse(word, n));
}

// Command handlers.

Result run_verify_group(const GroupSource& src, const Limits& limits) {
  Result r;
  FiniteGroup g;
  if (!src.in.empty() && src.name.empty()) {
    json j = load_json(src.in);
    if (j.contains("table")) {
      auto v = verify_group(field<Table>(j, "table"), j.value("name", std::string{}));
      r.report["relabeling"] = v.relabeling;
      json viol = json::array();
      for (const auto& x : v.violations) viol.push_back(violation_json(x));
      r.report["violations"] = viol;
      r.report["group_ok"] = v.ok();
      if (!v.ok()) {
        r.status = 1;
        return r;
      }
      g = *v.group;
    } else {
      g = group_from_json(j);
    }
  } else {
    g = src.load(limits);
  }
  if (g.order() > limits.max_group_order)
    throw Error(Errc::OrderCapExceeded, "group order above --max-order", {g.order(), limits.max_group_order});
  r.report["group_ok"] = true;
  if (!r.report.contains("violations")) r.report["violations"] = json::array();
  r.report["name"] = g.name();
  r.report["order"] = g.order();
  r.report["abelian"] = g.is_abelian();
  r.report["exponent"] = g.exponent();
  r.report["center"] = center(g);
  r.report["derived_subgroup"] = derived_subgroup(g);
  r.report["nilpotency_class"] = opt_json(nilpotency_class(g));
  r.report["automorphism_count"] = automorphism_group(g, limits).size();
  return r;
}

Result run_verify_brace(const BraceSource& src, const Limits& limits) {
  Result r;
  SkewBrace b = SkewBrace::trivial(FiniteGroup());
  FiniteGroup add, circ;
  if (!src.in.empty()) {
    json j = load_json(src.in);
    add = FiniteGroup::from_table("add", field<Table>(j, "add"));
    circ = FiniteGroup::from_table("circ", field<Table>(j, "circ"));
    if (add.order() != field<int>(j, "order") || circ.order() != add.order())
      throw Error(Errc::MalformedTable, "table size differs from order", {add.order()});
  } else {
    b = src.load(limits);
    add = b.add();
    circ = b.circ();
  }
  auto v = verify_brace(add, circ);
  r.report["left_ok"] = v.left_ok;
  r.report["right_ok"] = v.right_ok;
  r.report["two_sided"] = v.two_sided;
  r.report["witness"] = witness_json(v.left_witness);
  r.report["right_witness"] = witness_json(v.right_witness);
  if (!v.left_ok) {
    r.report["classify"] = nullptr;
    r.status = 1;
    return r;
  }
  r.report["classify"] = classify_json(SkewBrace(add, circ));
  return r;
}

Result run_classify(const BraceSource& src, const Limits& limits) {
  Result r;
  SkewBrace b = src.load(limits);
  r.report["order"] = b.order();
  r.report["classify"] = classify_json(b);
  r.report["lambda"] = lambda_json(b);
  if (b.lambda().homomorphic_on_add) {
    auto o = opposite_symmetry_check(b);
    r.report["opposite_symmetry"] = {{"opposite_symmetric", o.opposite_symmetric},
                                     {"inn_centralizes_lambda", o.inn_centralizes_lambda},
                                     {"agree", o.agree}};
  }
  return r;
}

struct ConstructOpts {
  GroupSource group;
  std::string kind = "op";
  std::string lambda_file;
  std::string mode = "hom";
  std::string a, b;
  std::string unification_file;
};

Result run_construct(const ConstructOpts& o, const Limits& limits) {
  Result r;
  FiniteGroup g = o.group.load(limits);
  std::optional<SkewBrace> b;
  if (o.kind == "op") b = SkewBrace(g, g.opposite());
  else if (o.kind == "trivial") b = SkewBrace::trivial(g);
  else if (o.kind == "lambda") {
    if (o.lambda_file.empty()) throw InputError("Usage: --kind lambda needs --lambda");
    b = construct_from_lambda(g, lambda_from_json(load_json(o.lambda_file), g.order()),
                              o.mode == "anti" ? LambdaMode::AntiHomomorphic : LambdaMode::Homomorphic);
  } else if (o.kind == "exact") {
    b = construct_exact_factorization(g, parse_int_list(o.a), parse_int_list(o.b));
  } else {
    if (o.unification_file.empty()) throw InputError("Usage: --kind unification needs --data");
    json j = load_json(o.unification_file);
    b = construct_unification(g, field<Perm>(j, "f"), field<Table>(j, "alpha"), field<int>(j, "epsilon"));
  }
  r.report["kind"] = o.kind;
  r.report["group"] = g.name();
  r.report["brace"] = brace_json(*b);
  return r;
}

Result run_enumerate(const GroupSource& src, bool tables, const Limits& limits) {
  Result r;
  FiniteGroup g = src.load(limits);
  auto braces = enumerate_circ_ops(g, limits);
  r.report["group"] = g.name();
  r.report["order"] = g.order();
  r.report["count"] = braces.size();
  json list = json::array();
  for (const auto& b : braces) {
    json e = {{"classify", classify_json(b)}};
    if (tables) e["circ"] = table_json(b.circ());
    list.push_back(e);
  }
  r.report["braces"] = list;
  return r;
}

struct SystemOpts {
  GroupSource group;
  std::string kind = "linear";
  std::string lambda_file, lambda2_file, rb_file, map;
  std::optional<int> depth;
  bool negative = false;
  int k = 2;
};

Perm rb_map_from(const std::string& file, const std::string& inline_map, int order) {
  if (!inline_map.empty()) return parse_int_list(inline_map);
  if (file.empty()) throw InputError("Usage: a Rota-Baxter operator is required (--rb or --map)");
  json j = load_json(file);
  int n = field<int>(j, "order");
  if (n != order) throw Error(Errc::PreconditionFails, "operator order differs from the group order", {n, order});
  return field<Perm>(j, "map");
}

Result run_system(const SystemOpts& o, const Limits& limits) {
  Result r;
  FiniteGroup g = o.group.load(limits);
  BraceSystem s;
  if (o.kind == "linear" || o.kind == "union") {
    if (o.lambda_file.empty()) throw InputError("Usage: --kind " + o.kind + " needs --lambda");
    s = build_linear_system(g, lambda_from_json(load_json(o.lambda_file), g.order()), o.depth, o.negative, limits);
    if (o.kind == "union") {
      if (o.lambda2_file.empty()) throw InputError("Usage: --kind union needs --lambda2");
      BraceSystem t =
          build_linear_system(g, lambda_from_json(load_json(o.lambda2_file), g.order()), o.depth, o.negative, limits);
      s = union_systems(s, t);
    } else {
      r.report["period"] = opt_json(detect_period(s));
      auto lr = level_report(s);
      r.report["level_report"] = {{"kernel_same", lr.kernel_same},
                                  {"image_same", lr.image_same},
                                  {"lambda_automorphism_everywhere", lr.lambda_automorphism_everywhere},
                                  {"closed_form_holds", lr.closed_form_holds}};
      r.report["image_exponent"] = s.image_exponent;
      if (!s.all_pairs_verified()) r.status = 1;
    }
  } else if (o.kind == "rb") {
    s = build_rb_multibrace(g, rb_map_from(o.rb_file, o.map, g.order()), o.k);
  } else {
    s = rooted_system(g, enumerate_circ_ops(g, limits));
  }
  r.report["system"] = system_json(s);
  r.dot = export_dot(s);
  return r;
}

Result run_structure(const BraceSource& src, const Limits& limits) {
  Result r;
  Limits l = limits;
  l.max_structure_order = std::min(l.max_structure_order, limits.max_group_order);
  SkewBrace b = src.load(limits);
  r.report["order"] = b.order();
  r.report["ideals"] = all_ideals(b, l);
  auto st = triviality_step(b, l);
  r.report["st"] = st ? json(st->step) : json(nullptr);
  r.report["chain"] = st ? json(st->chain) : json(nullptr);
  auto k = kernel_ideal(b);
  r.report["kernel"] = k.elements;
  r.report["quotient_by_kernel_order"] = quotient_brace(b, k.elements).order();
  r.report["brace_automorphism_count"] = brace_automorphisms(b, l).size();
  if (b.lambda().anti_homomorphic_on_add) {
    auto n = naturality_report(b);
    r.report["naturality"] = {{"is_natural", n.is_natural}, {"quotient_natural", n.quotient_natural}};
  } else {
    r.report["naturality"] = nullptr;
  }
  return r;
}

struct FreeOpts {
  int n = 2;
  std::string w = "x1";
  std::string theta = "cycle";
  std::string a = "1", b = "1";
  long long modulus = 0;
  long long window = 6;
  int max_len = 8;
};

Result run_free(const std::string& sub, const FreeOpts& o, const Globals& gl) {
  Result r;
  r.report["n"] = o.n;
  if (sub == "verify-cyclic") {
    auto c = verify_cyclic1(o.n, gl.seed);
    r.report["generator_count"] = c.generator_count;
    r.report["expected_count"] = c.expected_count;
    r.report["kernel_rank"] = c.generator_count;
    r.report["nielsen_schreier"] = c.nielsen_schreier;
    r.report["theta_order_ok"] = c.theta_order_ok;
    r.report["closed_form_conjugation_ok"] = c.closed_form_conjugation_ok;
    r.report["round_trip_ok"] = c.round_trip_ok;
    r.report["round_trip_samples"] = c.round_trip_samples;
    r.report["formulas"] = formula_json(c.formulas);
    r.report["printed_variants"] = formula_json(c.printed_variants);
    r.report["interpretations"] = c.interpretations;
    r.report["mismatches"] = c.mismatches();
    r.report["ok"] = c.ok();
    if (!c.ok()) r.status = 1;
  } else if (sub == "verify-t4") {
    auto t = verify_t4(o.n, FreeWord::parse(o.w, o.n), o.window);
    r.report["w"] = t.w;
    r.report["m"] = t.m;
    r.report["w0"] = t.w0;
    r.report["window"] = t.window;
    r.report["shift_checks"] = t.shift_checks;
    r.report["shift_failures"] = t.shift_failures;
    r.report["raw_checks"] = t.raw_checks;
    r.report["raw_failures"] = t.raw_failures;
    r.report["closed_form_conjugation_ok"] = t.closed_form_conjugation_ok;
    r.report["direct_product"] = t.direct_product;
    r.report["fundamental_count"] = opt_json(t.fundamental_count);
    r.report["expected_count"] = opt_json(t.expected_count);
    r.report["rank"] = opt_json(t.rank);
    r.report["rank_formula"] = opt_json(t.rank_formula);
    r.report["rank_consistent"] = t.rank_consistent;
    r.report["printed_recurrence"] = t.printed_recurrence;
    r.report["derived_recurrence"] = t.derived_recurrence;
    r.report["printed_recurrence_consistent"] = t.printed_recurrence_consistent;
    r.report["recurrence_note"] = t.recurrence_note;
    r.report["witnesses"] = t.witnesses;
    r.report["ok"] = t.ok();
    if (!t.ok()) r.status = 1;
  } else if (sub == "check") {
    auto theta = theta_from(o.theta, o.n, o.w);
    auto c = sampled_brace_check(theta, gl.samples, o.max_len, gl.seed);
    r.report["theta"] = theta.describe();
    r.report["samples"] = c.samples;
    r.report["max_len"] = o.max_len;
    r.report["left_failures"] = c.left_failures;
    r.report["symmetry_failures"] = c.symmetry_failures;
    r.report["direct_symmetric_failures"] = c.direct_symmetric_failures;
    r.report["inverse_failures"] = c.inverse_failures;
    r.report["witnesses"] = c.witnesses;
    r.report["ok"] = c.ok();
    if (!c.ok()) r.status = 1;
  } else if (sub == "rewrite") {
    SchreierRewriter rw(o.n, o.modulus > 0 ? std::optional<long long>(o.modulus) : std::nullopt);
    FreeWord w = FreeWord::parse(o.w, o.n);
    auto p = rw.rewrite(w);
    json letters = json::array();
    for (const auto& [g, e] : p) letters.push_back({g.name(), e});
    r.report["word"] = w.str();
    r.report["modulus"] = o.modulus > 0 ? json(o.modulus) : json("infinite");
    r.report["product"] = format_product(p);
    r.report["letters"] = letters;
    r.report["expansion"] = rw.expand(p).str();
  } else {
    auto theta = theta_from(o.theta, o.n, o.w);
    FreeWord a = FreeWord::parse(o.a, o.n), b = FreeWord::parse(o.b, o.n);
    r.report["theta"] = theta.describe();
    r.report["a"] = a.str();
    r.report["b"] = b.str();
    r.report["circ"] = circ_eval(a, b, theta).str();
    r.report["circ_inverse_a"] = circ_inverse(a, theta).str();
  }
  return r;
}

struct LatticeOpts {
  long long p = 1;
  int depth = 3;
  std::vector<long long> a, b;
  long long level = 1;
};

Result run_lattice(const LatticeOpts& o, const Globals& gl) {
  Result r;
  Mat2 m = lattice_lambda(o.p);
  r.report["p"] = o.p;
  r.report["matrix"] = {{m.a, m.b}, {m.c, m.d}};
  if (!o.a.empty() || !o.b.empty()) {
    if (o.a.size() != 2 || o.b.size() != 2) throw InputError("Usage: --a and --b take two integers each");
    Vec2 c = lattice_circ({o.a[0], o.a[1]}, {o.b[0], o.b[1]}, o.p, o.level);
    r.report["circ"] = {c.x, c.y};
    r.report["level"] = o.level;
  }
  auto rep = lattice_system_check(o.p, o.depth, gl.samples, gl.seed);
  r.report["check"] = {{"depth", rep.depth},
                       {"samples", rep.samples},
                       {"power_law_failures", rep.power_law_failures},
                       {"closed_form_failures", rep.closed_form_failures},
                       {"group_failures", rep.group_failures},
                       {"associativity_failures", rep.associativity_failures},
                       {"commutativity_failures", rep.commutativity_failures},
                       {"compatibility_failures", rep.compatibility_failures},
                       {"torsion_failures", rep.torsion_failures},
                       {"generation_failures", rep.generation_failures},
                       {"lambda_hom_failures", rep.lambda_hom_failures},
                       {"kernel_condition_failures", rep.kernel_condition_failures},
                       {"witnesses", rep.witnesses},
                       {"ok", rep.ok()}};
  if (!rep.ok()) r.status = 1;
  return r;
}

struct RbOpts {
  GroupSource group;
  std::string rb_file, map;
  bool search = false;
  bool endomorphisms = false;
  long long max_m = 3;
  int max_len = 8;
};

Result run_rb(const RbOpts& o, const Globals& gl, const Limits& limits) {
  Result r;
  if (!o.rb_file.empty() && o.map.empty()) {
    json j = load_json(o.rb_file);
    if (j.contains("rank")) {
      int n = field<int>(j, "rank");
      std::vector<FreeWord> images;
      for (const auto& s : field<std::vector<std::string>>(j, "images")) images.push_back(FreeWord::parse(s, n));
      if (static_cast<int>(images.size()) != n)
        throw Error(Errc::RankMismatch, "one image per generator is required", {static_cast<long long>(images.size()), n});
      auto c = free_is_rb(images, gl.samples, o.max_len, gl.seed);
      json imgs = json::array();
      for (const auto& w : images) imgs.push_back(w.str());
      r.report["rank"] = n;
      r.report["images"] = imgs;
      r.report["samples"] = c.samples;
      r.report["rb_failures"] = c.failures;
      r.report["witnesses"] = c.witnesses;
      bool x1_exp_sum = n == 2 && std::all_of(images.begin(), images.end(),
                                              [](const FreeWord& w) { return w == FreeWord::generator(2, 1); });
      if (x1_exp_sum) {
        auto f = free_rb_check(o.max_m, gl.samples, o.max_len, gl.seed);
        r.report["family"] = {{"max_m", o.max_m},
                              {"multibrace_failures", f.multibrace_failures},
                              {"recursion_failures", f.recursion_failures},
                              {"witnesses", f.witnesses}};
        if (f.multibrace_failures || f.recursion_failures) r.status = 1;
      }
      if (c.failures) r.status = 1;
      return r;
    }
  }
  FiniteGroup g = o.group.load(limits);
  r.report["group"] = g.name();
  if (o.search) {
    auto ops = find_rb_operators(g, o.endomorphisms);
    r.report["search"] = o.endomorphisms ? "endomorphisms" : "all maps";
    r.report["count"] = ops.size();
    r.report["operators"] = ops;
    return r;
  }
  Perm b = rb_map_from(o.rb_file, o.map, g.order());
  auto check = is_rb(g, b);
  r.report["map"] = b;
  r.report["is_rb"] = check.ok;
  r.report["witness"] = check.witness ? json({check.witness->first, check.witness->second}) : json(nullptr);
  if (!check.ok) {
    r.status = 1;
    return r;
  }
  SkewBrace br = rb_brace(g, b);
  auto sym = rb_symmetry_check(g, b);
  auto hom = rb_lambda_hom_check(g, b);
  auto second = rb_second_level_check(g, b);
  r.report["derived"] = table_json(br.circ());
  r.report["classify"] = classify_json(br);
  r.report["symmetry"] = {{"symmetric", sym.property}, {"center_condition", sym.center_condition}, {"agree", sym.agree}};
  r.report["lambda_hom"] = {
      {"lambda_homomorphic", hom.property}, {"center_condition", hom.center_condition}, {"agree", hom.agree}};
  r.report["second_level"] = {{"circ2_matches", second.circ2_matches}, {"lambda1_matches", second.lambda1_matches}};
  if (analyze_map(g, b).is_anti_homomorphism) r.report["anti_hom_lemma"] = rb_anti_hom_lemma_check(g, b);
  else r.report["anti_hom_lemma"] = nullptr;
  if (!second.circ2_matches || !second.lambda1_matches) r.status = 1;
  return r;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skew braces, brace systems and their structure"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--seed", gl.seed, "Sampling seed")->capture_default_str();
  app.add_option("--samples", gl.samples, "Sample count")->capture_default_str()->check(CLI::NonNegativeNumber);
  app.add_option("--max-order", gl.max_order, "Largest accepted group order")->capture_default_str();
  app.add_option("--out", gl.out, "Write the report to this file");
  app.add_option("--format", gl.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  std::function<Result(const Limits&)> handler;

  GroupSource vg;
  auto* c_vg = app.add_subcommand("verify-group", "Check group axioms and report structure");
  vg.add(c_vg);
  c_vg->callback([&] { handler = [&](const Limits& l) { return run_verify_group(vg, l); }; });

  BraceSource vb;
  auto* c_vb = app.add_subcommand("verify-brace", "Check the left and right brace laws");
  vb.add(c_vb);
  c_vb->callback([&] { handler = [&](const Limits& l) { return run_verify_brace(vb, l); }; });

  BraceSource cl;
  auto* c_cl = app.add_subcommand("classify", "Classify a brace");
  cl.add(c_cl);
  c_cl->callback([&] { handler = [&](const Limits& l) { return run_classify(cl, l); }; });

  ConstructOpts co;
  auto* c_co = app.add_subcommand("construct", "Build a brace from a construction");
  co.group.add(c_co);
  c_co->add_option("--kind", co.kind, "op, trivial, lambda, exact or unification")
      ->check(CLI::IsMember({"op", "trivial", "lambda", "exact", "unification"}));
  c_co->add_option("--lambda", co.lambda_file, "λ file {\"order\", \"lambda\"}");
  c_co->add_option("--mode", co.mode, "hom or anti")->check(CLI::IsMember({"hom", "anti"}));
  c_co->add_option("--factor-a", co.a, "Comma-separated subgroup A");
  c_co->add_option("--factor-b", co.b, "Comma-separated subgroup B");
  c_co->add_option("--data", co.unification_file, "Unification file {\"f\", \"alpha\", \"epsilon\"}");
  c_co->callback([&] { handler = [&](const Limits& l) { return run_construct(co, l); }; });

  GroupSource en;
  bool en_tables = true;
  auto* c_en = app.add_subcommand("enumerate", "List all braces with the given additive group");
  en.add(c_en);
  c_en->add_flag("--tables,!--no-tables", en_tables, "Include ∘ tables");
  c_en->callback([&] { handler = [&](const Limits& l) { return run_enumerate(en, en_tables, l); }; });

  SystemOpts so;
  auto* c_so = app.add_subcommand("system", "Build a brace system");
  so.group.add(c_so);
  c_so->add_option("--kind", so.kind, "linear, union, rb or rooted")
      ->check(CLI::IsMember({"linear", "union", "rb", "rooted"}));
  c_so->add_option("--lambda", so.lambda_file, "λ file");
  c_so->add_option("--lambda2", so.lambda2_file, "Second λ file for --kind union");
  c_so->add_option("--depth", so.depth, "Number of levels");
  c_so->add_flag("--negative", so.negative, "Also build negative levels");
  c_so->add_option("--rb", so.rb_file, "Rota-Baxter file {\"order\", \"map\"}");
  c_so->add_option("--map", so.map, "Comma-separated Rota-Baxter map");
  c_so->add_option("--k", so.k, "Multibrace depth")->check(CLI::NonNegativeNumber);
  c_so->callback([&] { handler = [&](const Limits& l) { return run_system(so, l); }; });

  BraceSource st;
  auto* c_st = app.add_subcommand("structure", "Ideals, triviality step and naturality");
  st.add(c_st);
  c_st->callback([&] { handler = [&](const Limits& l) { return run_structure(st, l); }; });

  FreeOpts fo;
  std::string free_sub;
  auto* c_fr = app.add_subcommand("freegroup", "Free-group braces and Schreier rewriting");
  c_fr->require_subcommand(1);
  auto add_free = [&](const std::string& name, const std::string& desc) {
    auto* c = c_fr->add_subcommand(name, desc);
    c->fallthrough();
    c->callback([&, name] {
      free_sub = name;
      handler = [&](const Limits&) { return run_free(free_sub, fo, gl); };
    });
    return c;
  };
  auto* f_cy = add_free("verify-cyclic", "Generator cycle: Schreier generators and conjugation formulas");
  f_cy->add_option("--n", fo.n, "Rank")->required();
  auto* f_t4 = add_free("verify-t4", "Inner automorphism: shift law and rank formula");
  f_t4->add_option("--n", fo.n, "Rank")->required();
  f_t4->add_option("--w", fo.w, "Word w of θ = inner(w)")->required();
  f_t4->add_option("--window", fo.window, "Window |k| <= K");
  auto* f_ck = add_free("check", "Sampled brace laws for λ_a = θ^{l(a)}");
  f_ck->add_option("--n", fo.n, "Rank")->required();
  f_ck->add_option("--theta", fo.theta, "cycle, inner or identity")->check(CLI::IsMember({"cycle", "inner", "identity"}));
  f_ck->add_option("--w", fo.w, "Word for --theta inner");
  f_ck->add_option("--max-len", fo.max_len, "Syllables per sampled word");
  auto* f_rw = add_free("rewrite", "Rewrite a kernel word in Schreier generators");
  f_rw->add_option("--n", fo.n, "Rank")->required();
  f_rw->add_option("--modulus", fo.modulus, "Coset modulus, 0 for the full kernel");
  f_rw->add_option("--w", fo.w, "Word")->required();
  auto* f_ci = add_free("circ", "Evaluate a ∘ b");
  f_ci->add_option("--n", fo.n, "Rank")->required();
  f_ci->add_option("--theta", fo.theta, "cycle, inner or identity")->check(CLI::IsMember({"cycle", "inner", "identity"}));
  f_ci->add_option("--w", fo.w, "Word for --theta inner");
  f_ci->add_option("--a", fo.a, "Word a");
  f_ci->add_option("--b", fo.b, "Word b");

  LatticeOpts lo;
  auto* c_la = app.add_subcommand("lattice", "Braces on Z^2");
  c_la->add_option("--p", lo.p, "Parameter p");
  c_la->add_option("--depth", lo.depth, "Levels checked")->check(CLI::Range(0, 8));
  c_la->add_option("--a", lo.a, "Vector a")->expected(2);
  c_la->add_option("--b", lo.b, "Vector b")->expected(2);
  c_la->add_option("--level", lo.level, "Level i for --a/--b")->check(CLI::NonNegativeNumber);
  c_la->callback([&] { handler = [&](const Limits&) { return run_lattice(lo, gl); }; });

  RbOpts ro;
  auto* c_rb = app.add_subcommand("rb", "Rota-Baxter operators");
  ro.group.add(c_rb);
  c_rb->add_option("--rb", ro.rb_file, "Operator file {\"order\", \"map\"} or {\"rank\", \"images\"}");
  c_rb->add_option("--map", ro.map, "Comma-separated operator values");
  c_rb->add_flag("--search", ro.search, "List every Rota-Baxter operator");
  c_rb->add_flag("--endomorphisms", ro.endomorphisms, "Restrict --search to endomorphisms");
  c_rb->add_option("--max-m", ro.max_m, "Largest m in the free family");
  c_rb->add_option("--max-len", ro.max_len, "Syllables per sampled word");
  c_rb->callback([&] { handler = [&](const Limits& l) { return run_rb(ro, gl, l); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "Usage: " << e.what() << "\n";
    return 2;
  }

  std::string command;
  for (const auto* sub : app.get_subcommands()) {
    command = sub->get_name();
    for (const auto* inner : sub->get_subcommands()) command += " " + inner->get_name();
  }
  json config = {{"command", command}, {"seed", gl.seed},  {"samples", gl.samples},
                 {"max_order", gl.max_order}, {"format", gl.format}};
  Limits limits;
  limits.max_group_order = gl.max_order;

  Result result;
  try {
    if (!handler) throw InputError("Usage: missing command");
    result = handler(limits);
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (is_input_error(e.code())) {
      err << e.what() << "\n";
      return 2;
    }
    result.report = json::object();
    result.report["error"] = {{"kind", std::string(errc_name(e.code()))}, {"message", e.what()}, {"witness", e.witness()}};
    result.status = 1;
  }

  std::string text;
  if (gl.format == "dot") {
    if (result.dot.empty()) {
      err << "UnsupportedFormat: dot output is only available for system\n";
      return 2;
    }
    text = result.dot;
  } else {
    result.report["config"] = config;
    text = result.report.dump(2) + "\n";
  }
  if (!gl.out.empty()) {
    std::ofstream f(gl.out);
    if (!f) {
      err << "cannot write " << gl.out << "\n";
      return 2;
    }
    f << text;
  } else {
    out << text;
  }
  return result.status;
}

}  // namespace skb::cli
