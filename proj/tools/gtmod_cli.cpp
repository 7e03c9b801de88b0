// gtmod: command line front end for the tableaux engine.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "gtmod/gtmod.hpp"

using namespace gtmod;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Opts {
  int n = 0;
  std::string in, out, format = "json", z, y, w, lambda, sigma, word, kind = "oriented", box = "-3:0", mode;
  int depth = 2, jobs = 1, samples = 50;
  unsigned long rng_seed = 1;
  bool verma = false, open = false, sweep = false, minimal = false;
};

json load(const std::string& src) {
  if (src.empty()) throw InputError("missing input (--in)");
  std::string text = src;
  auto first = src.find_first_not_of(" \t\n");
  if (first == std::string::npos) throw InputError("empty input");
  if (src[first] != '{' && src[first] != '[') {
    std::ifstream f(src);
    if (!f) throw InputError("cannot open " + src);
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Point load_point(const Opts& o) {
  Point p = point_from_json(load(o.in));
  if (o.n && o.n != p.n()) throw InputError("--n does not match the input point");
  return p;
}

int require_n(const Opts& o, int fallback = 0) {
  int n = o.n ? o.n : fallback;
  if (n < 1) throw InputError("--n is required");
  return n;
}

Shift parse_shift(int n, const std::string& s, const char* what) {
  if (s.empty()) return Shift(n);
  try {
    return shift_from_json(n, load(s));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

std::vector<long> parse_list(const std::string& s) {
  std::vector<long> r;
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream is(t);
  long v;
  while (is >> v) r.push_back(v);
  if (!is.eof()) throw InputError("bad integer list: " + s);
  return r;
}

std::pair<long, long> parse_box(const std::string& s) {
  auto c = s.find(':');
  if (c == std::string::npos) throw InputError("--box must be lo:hi");
  try {
    long lo = std::stol(s.substr(0, c)), hi = std::stol(s.substr(c + 1));
    if (lo > hi) throw InputError("--box lo exceeds hi");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InputError("--box must be lo:hi");
  }
}

std::string text_of(const TableauVector& v) { return v.to_string(); }

json cert_json(const Certificate& c, const ReplayResult& r) {
  json steps = json::array();
  for (auto& s : c.steps)
    steps.push_back({{"index", to_json(s.at)}, {"sign", s.sign}, {"to", s.to.inner_rows()}, {"leading", s.leading.to_string()}});
  return {{"start", c.start.inner_rows()},
          {"target", c.target.inner_rows()},
          {"steps", steps},
          {"replay", {{"ok", r.ok}, {"message", r.message}}}};
}

struct Result {
  json payload;
  std::string text;
  std::string dot;
  int code = 0;
};

Result cmd_seed(const Opts& o) {
  Point v = load_point(o);
  auto nf = normal_form(v);
  auto sd = seed_of(v);
  Result r;
  r.payload = {{"normal_form", to_json(nf.point)},
               {"seed", to_json(sd.seed)},
               {"z", to_json(sd.z)},
               {"sigma", to_json(sd.sigma)}};
  r.text = "seed " + sd.seed.to_string() + "\nz " + sd.z.to_string() + "\nsigma " + sd.sigma.to_string() + "\n";
  return r;
}

Result cmd_graph(const Opts& o) {
  Point v = load_point(o);
  Shift z = parse_shift(v.n(), o.z, "--z");
  GtGraph g(v.n(), false);
  if (o.kind == "unoriented") {
    g = graph_of(v + z);
  } else {
    if (!is_seed(v)) throw InputError("oriented graphs need a seed point");
    GtGraph og = orient(v, z);
    if (o.kind == "oriented") g = og;
    else if (o.kind == "plus") g = split(og).plus;
    else if (o.kind == "minus") g = split(og).minus;
    else if (o.kind == "reduced") g = reduce(og);
    else throw InputError("unknown --kind " + o.kind);
  }
  Result r;
  r.payload = to_json(g);
  r.text = g.to_text();
  r.dot = g.to_dot(o.kind);
  return r;
}

Result cmd_cone(const Opts& o) {
  Point v = load_point(o);
  Shift w = parse_shift(v.n(), o.w.empty() ? o.z : o.w, "--w");
  Cone c = cone_of(v, w, !o.open);
  Result r;
  r.payload = to_json(c);
  r.text = c.to_text();
  return r;
}

Result cmd_support(const Opts& o) {
  Result r;
  if (o.verma) {
    int n = require_n(o);
    Shift z = parse_shift(n, o.z, "--z");
    bool s = verma_supp_test(z);
    r.payload = {{"supp", s}};
    r.text = std::string("supp ") + (s ? "true" : "false") + "\n";
    return r;
  }
  Point v = load_point(o);
  auto [lo, hi] = parse_box(o.box);
  json list = json::array();
  for_each_in_box(v.n(), lo, hi, [&](const Shift& z) {
    if (!in_seed_cone(v, z)) return;
    list.push_back({{"z", z.inner_rows()}, {"fo_bound", fo_bound(v, z)}});
    r.text += z.to_string() + " fo_bound " + std::to_string(fo_bound(v, z)) + "\n";
  });
  r.payload = list;
  return r;
}

Result cmd_essupp(const Opts& o) {
  Result r;
  if (o.verma) {
    int n = require_n(o);
    Shift z = parse_shift(n, o.z, "--z");
    bool e = verma_essupp_test(z);
    r.payload = {{"essential", e}};
    r.text = std::string("essential ") + (e ? "true" : "false") + "\n";
    return r;
  }
  Point v = load_point(o);
  Shift z = parse_shift(v.n(), o.z, "--z");
  bool in = in_seed_cone(v, z);
  long fo = fo_bound(v, z);
  r.payload = {{"in_seed_cone", in}, {"fo_bound", fo}, {"fully_critical", is_fully_critical(v, z)}};
  r.text = std::string("in_seed_cone ") + (in ? "true" : "false") + "\nfo_bound " + std::to_string(fo) + "\n";
  return r;
}

// word like "E43 E32 E21 c21": rightmost letter acts first
TableauVector apply_word(const UniversalModule& M, const std::string& word, TableauVector t) {
  std::istringstream is(word);
  std::vector<std::string> letters;
  for (std::string s; is >> s;) letters.push_back(s);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const std::string& s = *it;
    if (s.size() != 3 || (s[0] != 'E' && s[0] != 'c') || !isdigit(s[1]) || !isdigit(s[2]))
      throw InputError("bad operator " + s + " (use Epq or cki with single digits)");
    int a = s[1] - '0', b = s[2] - '0';
    if (s[0] == 'E') t = M.act_E(a, b, t);
    else {
      if (a < 1 || a > M.n() || b < 1 || b > a) throw InputError("bad Gamma generator " + s);
      t = M.act_gamma(a, b, t);
    }
  }
  return t;
}

Result cmd_act(const Opts& o) {
  if (o.y.empty()) throw InputError("act needs the seed point via --seed");
  Point seed = point_from_json(load(o.y));
  UniversalModule M(seed);
  TableauVector t = o.in.empty() ? M.classical(Shift(seed.n())) : tableau_vector_from_json(seed.n(), load(o.in));
  for (auto& [k, c] : t.terms())
    if (!M.is_basis_key(k)) throw InputError("not a derivative tableau: " + k.to_string());
  TableauVector r = apply_word(M, o.word, t);
  Result res;
  res.payload = to_json(r);
  res.text = text_of(r) + "\n";
  return res;
}

std::vector<Affine> lambda_of(const Opts& o, int n) {
  std::vector<Affine> lam;
  if (o.lambda.empty()) {
    for (int j = 0; j < n; ++j) lam.push_back(Affine(j));
    return lam;
  }
  std::string t = o.lambda;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream is(t);
  for (std::string s; is >> s;) lam.push_back(Affine::parse(s));
  if (static_cast<int>(lam.size()) != n) throw InputError("--lambda must have n entries");
  return lam;
}

Result cmd_hw(const Opts& o) {
  int n = require_n(o);
  auto lam = lambda_of(o, n);
  std::vector<int> sigma;
  if (o.sigma.empty())
    for (int j = 1; j <= n; ++j) sigma.push_back(j);
  else
    for (long v : parse_list(o.sigma)) sigma.push_back(static_cast<int>(v));
  Point p = hw_tableau(lam, sigma);
  auto sd = seed_of(p);
  UniversalModule M(sd.seed);
  TableauVector t = M.classical(sd.z);
  bool hw = true;
  for (int k = 1; k < n; ++k) hw = hw && M.act_E(k, k + 1, t).is_zero();
  json w = json::array();
  for (auto& s : M.cartan_weight(sd.z)) w.push_back(s.to_string());
  json dot = json::array();
  for (auto& a : dot_action(lam, sigma)) dot.push_back(a.to_string());
  Result r;
  r.payload = {{"point", to_json(p)}, {"cartan_weight", w}, {"dot_action", dot}, {"highest_weight", hw}};
  r.text = p.to_string() + "\nweight " + w.dump() + "\nhighest weight " + (hw ? "true" : "false") + "\n";
  r.code = hw ? 0 : 2;
  return r;
}

Result cmd_certify(const Opts& o) {
  Certificate c;
  Point seed(1);
  if (o.sweep) {
    int n = require_n(o);
    c = support_sweep_certificate(n);
    seed = c.seed;
  } else {
    seed = load_point(o);
    Shift z = parse_shift(seed.n(), o.z, "--z"), y = parse_shift(seed.n(), o.y, "--y");
    auto cert = reachability_certificate(seed, z, y);
    if (!cert) {
      Result r;
      r.payload = {{"certificate", nullptr}};
      r.text = "no certificate\n";
      r.code = 2;
      return r;
    }
    c = *cert;
  }
  UniversalModule M(seed);
  auto rep = replay(M, c);
  Result r;
  r.payload = cert_json(c, rep);
  for (auto& s : c.steps)
    r.text += (s.sign > 0 ? "+" : "-") + index_name(s.at) + " -> " + s.to.to_string() + "\n";
  r.text += rep.message + "\n";
  r.code = rep.ok ? 0 : 2;
  return r;
}

Result cmd_verma(const Opts& o) {
  int n = require_n(o);
  std::vector<Q> lam;
  for (auto& a : lambda_of(o, n)) {
    if (!a.is_rational()) throw InputError("the oracle needs a rational highest weight");
    lam.push_back(a.constant());
  }
  bool minus_rho = lam == VermaModule::minus_rho_tilde(n);
  VermaModule V(n, lam);
  auto dec = gt_decompose(V, o.depth, o.jobs);
  Result r;
  json list = json::array();
  for (auto& e : dec.entries) {
    json w = json::array();
    for (auto& q : e.cartan_weight) w.push_back(q.get_str());
    json item = {{"cartan_weight", w},
                 {"z", e.z.inner_rows()},
                 {"character_rows", to_json(e.point).at("rows")},
                 {"multiplicity", e.multiplicity}};
    if (minus_rho) {
      item["supp"] = verma_supp_test(e.z);
      item["essential"] = verma_essupp_test(e.z);
    }
    list.push_back(item);
    r.text += e.z.to_string() + " mult " + std::to_string(e.multiplicity) + "\n";
  }
  r.payload = {{"source", "oracle"}, {"characters", list}, {"failures", dec.failures}};
  if (minus_rho) {
    auto pr = compare_with_predictions(dec);
    r.payload["predictions"] = {{"ok", pr.ok()}, {"mismatches", pr.mismatches}};
    if (!pr.ok()) r.code = 2;
  }
  for (auto& f : dec.failures) r.text += "FAILURE " + f + "\n";
  if (!dec.failures.empty()) r.code = 2;
  return r;
}

Result cmd_verify(const Opts& o) {
  Result r;
  if (o.mode == "rep") {
    Point seed = o.in.empty() ? Point(require_n(o)) : load_point(o);
    UniversalModule M(seed);
    auto keys = tableaux_up_to(M, o.depth);
    std::mt19937_64 rng(o.rng_seed);
    std::shuffle(keys.begin(), keys.end(), rng);
    if (static_cast<int>(keys.size()) > o.samples) keys.resize(o.samples);
    std::sort(keys.begin(), keys.end());
    int jobs = std::max(1, o.jobs);
    std::vector<RelationReport> parts(jobs);
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&, j] {
        std::vector<TableauKey> mine;
        for (size_t t = j; t < keys.size(); t += jobs) mine.push_back(keys[t]);
        parts[j] = verify_rep_relations(M, mine);
      });
    for (auto& th : pool) th.join();
    long checked = 0;
    std::vector<std::string> fails;
    for (auto& p : parts) {
      checked += p.checked;
      fails.insert(fails.end(), p.failures.begin(), p.failures.end());
    }
    std::sort(fails.begin(), fails.end());
    r.payload = {{"samples", keys.size()}, {"checked", checked}, {"failures", fails}};
    r.text = "samples " + std::to_string(keys.size()) + " checks " + std::to_string(checked) + " failures " +
             std::to_string(fails.size()) + "\n";
    r.code = fails.empty() ? 0 : 2;
  } else if (o.mode == "gamma") {
    Point seed = o.in.empty() ? Point(require_n(o)) : load_point(o);
    UniversalModule M(seed);
    json list = json::array();
    bool ok = true;
    for_each_in_box(seed.n(), -o.depth, o.depth, [&](const Shift& z) {
      if (!M.in_d(z)) return;
      auto g = gamma_slice_structure(M, z);
      bool good = g.triangular && g.unique_eigenvector && g.nilpotency;
      ok = ok && good;
      list.push_back({{"z", z.inner_rows()}, {"triangular", g.triangular}, {"unique_eigenvector", g.unique_eigenvector},
                      {"nilpotency", g.nilpotency}, {"exponent", g.exponent}});
      if (!good) r.text += "FAIL " + z.to_string() + " " + g.detail + "\n";
    });
    r.payload = {{"slices", list}, {"ok", ok}};
    r.text += std::string("gamma structure ") + (ok ? "ok" : "FAILED") + "\n";
    r.code = ok ? 0 : 2;
  } else {
    throw InputError("verify mode must be rep or gamma");
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gelfand-Tsetlin tableaux engine for gl(n)"};
  app.require_subcommand(1, 1);
  Opts o;
  auto common = [&](CLI::App* s) {
    s->add_option("--n", o.n, "rank n of gl(n)");
    s->add_option("--in", o.in, "input file or inline JSON");
    s->add_option("--out", o.out, "output file");
    s->add_option("--format", o.format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
    s->add_option("--depth", o.depth, "exploration depth");
    s->add_option("--box", o.box, "box lo:hi for enumerations");
    s->add_option("--rng-seed", o.rng_seed, "seed for random sampling");
    s->add_option("--jobs", o.jobs, "worker threads");
  };
  std::map<std::string, std::function<Result(const Opts&)>> handlers;
  auto add = [&](const std::string& name, const std::string& help, std::function<Result(const Opts&)> h) {
    auto* s = app.add_subcommand(name, help);
    common(s);
    handlers[name] = std::move(h);
    return s;
  };
  add("seed", "normal form and seed of a point", cmd_seed);
  auto* g = add("graph", "graphs of a point", cmd_graph);
  g->add_option("--z", o.z, "shift");
  g->add_option("--kind", o.kind, "unoriented, oriented, plus, minus or reduced");
  auto* c = add("cone", "cone of Omega+(v+w)", cmd_cone);
  c->add_option("--w,--z", o.w, "shift w");
  c->add_flag("--open", o.open, "strict Omega- conditions");
  auto* su = add("support", "support points in a box, or the Verma support test", cmd_support);
  su->add_flag("--verma", o.verma);
  su->add_option("--z", o.z);
  auto* es = add("essupp", "essential support test", cmd_essupp);
  es->add_flag("--verma", o.verma);
  es->add_option("--z", o.z);
  auto* ac = add("act", "apply a word in E_pq and c_ki to a vector", cmd_act);
  ac->add_option("--seed", o.y, "seed point");
  ac->add_option("--word", o.word, "e.g. \"E43 E32 E21\"");
  auto* hw = add("hw", "highest weight tableau", cmd_hw);
  hw->add_option("--lambda", o.lambda, "comma separated weight (default -rho~)");
  hw->add_option("--sigma", o.sigma, "permutation in one-line notation");
  auto* ce = add("certify", "reachability certificate", cmd_certify);
  ce->add_option("--z", o.z);
  ce->add_option("--y", o.y);
  ce->add_flag("--sweep", o.sweep, "support sweep from 0 to the staircase");
  auto* ve = add("verma", "Gelfand-Tsetlin decomposition of a Verma module", cmd_verma);
  ve->add_option("--lambda", o.lambda, "comma separated weight (default -rho~)");
  auto* vf = add("verify", "relation checks", cmd_verify);
  vf->add_option("mode", o.mode, "rep or gamma")->required();
  vf->add_option("--samples", o.samples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  auto* sub = app.get_subcommands().front();
  Result r;
  try {
    r = handlers.at(sub->get_name())(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::string body;
  if (o.format == "text") body = r.text;
  else if (o.format == "dot") {
    if (r.dot.empty()) {
      std::cerr << "error: dot output is only available for graph\n";
      return 1;
    }
    body = r.dot;
  } else body = r.payload.dump(2) + "\n";
  if (o.out.empty()) std::cout << body;
  else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 1;
    }
    f << body;
  }
  return r.code;
}
