// Command-line driver.

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "dp1/cliques.hpp"
#include "dp1/io.hpp"
#include "dp1/reproduce.hpp"
#include "dp1/search.hpp"
#include "dp1/symbolic.hpp"

using namespace dp1;
using json = nlohmann::json;

namespace {

// Exit codes beyond 0/1.
constexpr int kRealizationsFound = 2;
constexpr int kBudgetExceeded = 3;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream s;
  for (unsigned i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return s.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Output with the wall-time lines removed; the manifest digest covers this.
std::string stable_part(const std::string& out) {
  std::istringstream in(out);
  std::string line, s;
  while (std::getline(in, line))
    if (line.rfind("seconds: ", 0) != 0) s += line + "\n";
  return s;
}

struct Globals {
  unsigned workers = 1;
  double budget = 0;
  std::string out;
  std::string manifest;
};

// Option storage for every subcommand; only one subcommand runs.
struct Opts {
  std::vector<std::string> words;
  std::string weights = "1,2", required, db, config, cls, setup = "A", rep, clique, contains, replay;
  int size = 10, type = 0;
  std::uint32_t p = 0;
  long height = 100;
  bool no_blowups = false;
  std::vector<std::string> targets;
};

struct Run {
  Opts o;
  std::ostringstream out;
  int status = 0;
  std::vector<std::string> inputs;  // files whose digests go into the manifest
};

Clique clique_from_classes(const std::vector<LatticeVector>& cls) {
  Clique k;
  for (const auto& c : cls) k.push_back(require_index(c));
  std::sort(k.begin(), k.end());
  return k;
}

// ---------------------------------------------------------------------------

void add_classes(CLI::App& app, Run& run) {
  auto* cmd = app.add_subcommand("classes", "The 240 exceptional classes");
  cmd->require_subcommand(1);
  auto* list = cmd->add_subcommand("list", "Print every class with its index and family");
  list->callback([&run] {
    const auto& cls = all_classes();
    for (std::size_t i = 0; i < cls.size(); ++i)
      run.out << i << "\t" << to_string(cls[i]) << "\t" << family_name(family(cls[i])) << "\n";
  });
  auto* show = cmd->add_subcommand("show", "Pairing data of one class");
  auto& o = run.o;
  show->add_option("class", o.words, "a b1 .. b8, quoted or as nine arguments")->required()->expected(1, 9);
  show->callback([&] {
    std::string text;
    for (const auto& w : o.words) text += (text.empty() ? "" : " ") + w;
    const auto v = parse_class(text);
    if (!is_exceptional(v)) throw std::invalid_argument("not an exceptional class: " + text);
    const auto pc = pairing_distribution(v);
    run.out << "class: " << to_string(v) << "\nindex: " << int{require_index(v)} << "\nfamily: " << family_name(family(v))
            << "\npartner: " << to_string(partner(v)) << "\npairings (3,2,1,0): " << pc.n3 << "," << pc.n2 << ","
            << pc.n1 << "," << pc.n0 << "\n";
  });
}

void add_graph(CLI::App& app, Run& run) {
  auto* cmd = app.add_subcommand("graph", "The weighted intersection graph and its symmetry group");
  cmd->require_subcommand(1);
  cmd->add_subcommand("stats", "Edge counts per weight and the order of the generated group")->callback([&run] {
    const auto& g = WeightedGraph::instance();
    std::array<std::uint64_t, 4> edges{};
    for (int i = 0; i < kNumClasses; ++i)
      for (int j = i + 1; j < kNumClasses; ++j) ++edges[static_cast<std::size_t>(g.weight(static_cast<ClassId>(i), static_cast<ClassId>(j)))];
    run.out << "vertices: " << kNumClasses << "\n";
    for (int w = 0; w < 4; ++w) run.out << "edges of weight " << w << ": " << edges[static_cast<std::size_t>(w)] << "\n";
    run.out << "group order: " << group_order(g.generators()) << "\n";
  });
}

void add_cliques(CLI::App& app, Run& run, const Globals& gl) {
  auto* cmd = app.add_subcommand("cliques", "Weighted cliques");
  cmd->require_subcommand(1);
  auto& o = run.o;

  auto* en = cmd->add_subcommand("enumerate", "All cliques of a size and weight set containing required classes (database format)");
  en->add_option("--weights", o.weights)->capture_default_str();
  en->add_option("--size", o.size)->capture_default_str();
  en->add_option("--required", o.required, "class-list file (default: l12, l34)");
  en->callback([&] {
    CliqueDbHeader h;
    h.weights = parse_weight_set(o.weights);
    h.size = o.size;
    if (o.required.empty()) {
      const auto pair = fixed_pair();
      h.required.assign(pair.begin(), pair.end());
    } else {
      h.required = clique_from_classes(read_class_list_file(o.required));
      run.inputs.push_back(o.required);
    }
    EnumerateOptions eo;
    eo.workers = gl.workers;
    write_clique_db(run.out, h, enumerate_cliques(WeightedGraph::instance(), h.weights, o.size, h.required, eo));
  });

  auto* cl = cmd->add_subcommand("classify", "Isomorphism type of every clique in a database");
  cl->add_option("--db", o.db)->required();
  cl->callback([&] {
    run.inputs.push_back(o.db);
    const auto d = read_clique_db_file(o.db);
    const auto& g = WeightedGraph::instance();
    std::map<std::string, std::uint64_t> counts;
    for (const auto& k : d.cliques) {
      const auto t = classify(g, k);
      const int n = type_number(t);
      ++counts[n ? "type " + std::to_string(n) : describe(t)];
    }
    for (const auto& [name, n] : counts) run.out << name << ": " << n << "\n";
  });

  cmd->add_subcommand("table", "Sub-orbit table through the fixed pair l12, l34")->callback([&] {
    EnumerateOptions eo;
    eo.workers = gl.workers;
    const auto t = suborbit_table(WeightedGraph::instance(), eo);
    run.out << "type\tsuborbit\tweight1\torbit\tstabilizer\tmaximal\n";
    for (const auto& r : t.rows)
      run.out << r.type << "\t" << r.suborbit << "\t" << r.w1_edges << "\t" << r.orbit << "\t" << r.stabilizer << "\t"
              << r.maximal << "\n";
    run.out << "total\t" << t.total << "\n";
  });

  auto* fr = cmd->add_subcommand("find-rep", "Representative of a type containing l12, l34, l56, l78 and no blow-up class");
  fr->add_option("--type", o.type)->required()->check(CLI::Range(1, 8));
  fr->callback([&] {
    const auto reps = pinned_representatives(gl.workers);
    const auto& k = reps[static_cast<std::size_t>(o.type - 1)];
    for (auto v : k) run.out << to_string(all_classes()[v]) << "\n";
  });
}

void add_plane(CLI::App& app, Run& run) {
  auto* cmd = app.add_subcommand("plane", "Concrete point configurations");
  cmd->require_subcommand(1);
  auto& o = run.o;
  auto* gp = cmd->add_subcommand("gp", "General-position test for a configuration file");
  gp->add_option("--config", o.config)->required();
  gp->callback([&] {
    run.inputs.push_back(o.config);
    const auto c = read_config_file(o.config);
    auto report = [&](const auto& field) {
      const auto cfg = instantiate(field, c);
      const auto r = general_position(field, std::span<const ProjPoint<typename std::decay_t<decltype(field)>::Elem>>(cfg.points));
      run.out << "general_position: " << (r.ok ? "yes" : "no") << "\n";
      if (!r.ok) run.out << "violation: " << r.witness << "\n";
      run.status = r.ok ? 0 : 1;
    };
    if (c.p) report(PrimeField(c.p));
    else report(RationalField{});
  });
  auto* cv = cmd->add_subcommand("curve", "Curve of a class through a configuration");
  cv->add_option("--config", o.config)->required();
  cv->add_option("--class", o.cls, "\"a b1 .. b8\"")->required();
  cv->callback([&] {
    run.inputs.push_back(o.config);
    const auto c = read_config_file(o.config);
    const auto v = parse_class(o.cls);
    auto show = [&](const auto& field) {
      using E = typename std::decay_t<decltype(field)>::Elem;
      const auto cfg = instantiate(field, c);
      const auto curve = curve_for_class(field, std::span<const ProjPoint<E>>(cfg.points), v);
      if (!curve) {
        run.out << "curve: none\n";
        run.status = 1;
        return;
      }
      run.out << "curve: " << to_string(field, *curve) << "\nthrough P: "
              << (is_zero(evaluate(field, *curve, cfg.target)) ? "yes" : "no") << "\n";
    };
    if (c.p) show(PrimeField(c.p));
    else show(RationalField{});
  });
}

void add_symbolic(CLI::App& app, Run& run) {
  auto* cmd = app.add_subcommand("symbolic", "Constraint polynomials over the set-up parameters");
  cmd->require_subcommand(1);
  auto& o = run.o;
  auto* cn = cmd->add_subcommand("constraint", "Condition for the curve of a class to pass through P");
  cn->add_option("--setup", o.setup)->check(CLI::IsMember({"A", "B"}))->capture_default_str();
  cn->add_option("--class", o.cls, "\"a b1 .. b8\"")->required();
  cn->callback([&] {
    const auto r = constraint_polynomial(o.setup[0], parse_class(o.cls));
    run.out << "residual: " << r.residual << "\nscalar: " << r.scalar.get_str() << "\n";
    for (const auto& f : r.stripped) run.out << "general-position factor: " << f.factor << " ^" << f.multiplicity << "\n";
    run.out << "identity: " << (r.identity_holds() ? "holds" : "FAILS") << "\n";
  });
  auto* gs = cmd->add_subcommand("gp-set", "Pairwise coprime polynomials whose nonvanishing is general position");
  gs->add_option("--setup", o.setup)->check(CLI::IsMember({"A", "B"}))->capture_default_str();
  gs->callback([&] {
    for (const auto& poly : general_position_polynomials(o.setup[0])) run.out << poly << "\n";
  });
}

void add_search(CLI::App& app, Run& run, const Globals& gl) {
  auto* cmd = app.add_subcommand("search", "Finite-field searches and exact verification");
  cmd->require_subcommand(1);
  auto& o = run.o;

  auto* ge = cmd->add_subcommand("gp-exists", "Whether 8 points in general position exist over F_p");
  ge->add_option("--p", o.p)->required();
  ge->callback([&] { run.out << to_text(general_position_exists(o.p)); });

  auto* ek = cmd->add_subcommand("eckardt", "Scan a set-up for concurrent curves of a clique representative");
  ek->add_option("--p", o.p)->required();
  ek->add_option("--setup", o.setup)->check(CLI::IsMember({"A", "B"}))->capture_default_str();
  ek->add_option("--rep", o.rep, "class-list file (default: the pinned clique-8 representative)");
  ek->callback([&] {
    std::vector<LatticeVector> k;
    if (o.rep.empty()) {
      k = to_classes(pinned_type8());
    } else {
      k = read_class_list_file(o.rep);
      run.inputs.push_back(o.rep);
    }
    SearchOptions so;
    so.workers = static_cast<int>(gl.workers);
    so.budget_seconds = gl.budget;
    const auto r = eckardt_search(o.p, o.setup[0], std::span<const LatticeVector>(k), so);
    run.out << to_text(r);
    run.status = !r.complete ? kBudgetExceeded : r.realization_count ? kRealizationsFound : 0;
  });

  auto* vf = cmd->add_subcommand("verify", "Exact verification of a configuration against a clique");
  vf->add_option("--config", o.config)->required();
  vf->add_option("--clique", o.clique)->required();
  vf->callback([&] {
    run.inputs.push_back(o.config);
    run.inputs.push_back(o.clique);
    const auto c = read_config_file(o.config);
    const auto k = read_class_list_file(o.clique);
    auto go = [&](const auto& field) {
      const auto v = verify_config(field, instantiate(field, c), std::span<const LatticeVector>(k));
      run.out << "general_position: " << (v.general_position.ok ? "yes" : "no " + v.general_position.witness) << "\n";
      for (const auto& cc : v.classes)
        run.out << "class " << to_string(cc.cls) << ": " << (!cc.exists ? "no curve" : cc.through_target ? "through P" : "misses P")
                << "\n";
      run.out << "concurrent: " << v.concurrent << "/" << k.size() << "\npartner_pair: " << (v.partner_pair ? "yes" : "no")
              << "\npartners_concurrent: " << (v.partners_concurrent ? "yes" : "no") << "\n";
      run.status = v.general_position.ok && v.concurrent == static_cast<int>(k.size()) ? 0 : 1;
    };
    if (c.p) go(PrimeField(c.p));
    else go(RationalField{});
  });

  auto* fm = cmd->add_subcommand("family", "Rational points of the slice b=-1, c=5/4, d=-1 up to a height");
  fm->add_option("--height", o.height)->capture_default_str()->check(CLI::PositiveNumber);
  fm->callback([&] {
    run.out << "slice: " << family_slice() << "\nheight: max(|numerator|, denominator) of e and f, bound " << o.height << "\n";
    for (const auto& fp : family_point_scan(o.height))
      run.out << "point: e=" << fp.e.get_str() << " f=" << fp.f.get_str() << " a=" << (fp.a ? fp.a->get_str() : "-")
              << " on_curve=" << fp.on_curve << " avoids_v2=" << fp.avoids_v2 << " realizes=" << fp.realizes << "\n";
  });
}

void add_db(CLI::App& app, Run& run, const Globals& gl) {
  auto* cmd = app.add_subcommand("db", "Sub-orbit clique databases");
  cmd->require_subcommand(1);
  auto& o = run.o;

  auto* gen = cmd->add_subcommand("generate", "Sub-orbit of one type through the fixed pair");
  gen->add_option("--type", o.type)->required()->check(CLI::Range(1, 8));
  gen->callback([&] {
    const auto& g = WeightedGraph::instance();
    const auto pair = fixed_pair();
    EnumerateOptions eo;
    eo.workers = gl.workers;
    std::vector<Clique> ks;
    for (auto& k : enumerate_cliques(g, weight_set({1, 2}), 10, pair, eo))
      if (type_number(classify(g, k)) == o.type) ks.push_back(std::move(k));
    CliqueDbHeader h;
    h.required.assign(pair.begin(), pair.end());
    write_clique_db(run.out, h, ks);
  });

  auto* q = cmd->add_subcommand("query", "First clique containing the given classes");
  q->add_option("--db", o.db)->required();
  q->add_option("--contains", o.contains, "class-list file")->required();
  q->add_flag("--no-blowups", o.no_blowups, "skip cliques containing a blow-up class");
  q->callback([&] {
    run.inputs.push_back(o.db);
    run.inputs.push_back(o.contains);
    const auto d = read_clique_db_file(o.db);
    const auto must = clique_from_classes(read_class_list_file(o.contains));
    std::function<bool(ClassId)> ex;
    if (o.no_blowups) ex = is_blowup_class;
    const auto k = find_representative(d.cliques, must, ex);
    if (!k) {
      run.out << "none\n";
      run.status = 1;
      return;
    }
    run.out << clique_line(*k) << "\n";
  });

  auto* val = cmd->add_subcommand("validate", "Check headers, cliques and canonical order");
  val->add_option("--db", o.db)->required();
  val->callback([&] {
    run.inputs.push_back(o.db);
    const auto d = read_clique_db_file(o.db);
    run.out << "valid: " << d.cliques.size() << " cliques of size " << d.header.size << "\n";
  });
}

void add_reproduce(CLI::App& app, Run& run, const Globals& gl) {
  auto& o = run.o;
  auto* cmd = app.add_subcommand("reproduce", "Run pinned pipelines and check expected values");
  cmd->add_option("targets", o.targets, "targets (or 'all')")->required();
  cmd->callback([&] {
    std::vector<std::string> ts;
    for (const auto& t : o.targets) {
      if (t == "all") {
        for (const auto& x : reproduce_targets())
          if (x != "p17" && x != "p23") ts.push_back(x);
      } else {
        if (std::find(reproduce_targets().begin(), reproduce_targets().end(), t) == reproduce_targets().end())
          throw CLI::ValidationError("targets", "unknown target '" + t + "'");
        ts.push_back(t);
      }
    }
    ReproduceOptions ro;
    ro.workers = gl.workers;
    ro.budget_seconds = gl.budget;
    for (const auto& t : ts) {
      const auto r = reproduce(t, ro);
      run.out << r.text();
      if (!r.ok()) run.status = 1;
    }
  });
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Exceptional curves on degree-1 del Pezzo surfaces"};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--workers", gl.workers, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--budget", gl.budget, "time budget in seconds for long runs (0 = none)")->capture_default_str();
  app.add_option("--out", gl.out, "write output here instead of stdout");
  app.add_option("--manifest", gl.manifest, "write a JSON run manifest here");
  app.set_version_flag("--version", kToolVersion);

  Run run;
  add_classes(app, run);
  add_graph(app, run);
  add_cliques(app, run, gl);
  add_plane(app, run);
  add_symbolic(app, run);
  add_search(app, run, gl);
  add_db(app, run, gl);
  add_reproduce(app, run, gl);

  auto* rp = app.add_subcommand("replay", "Re-run a manifest and compare the output digest");
  rp->add_option("manifest", run.o.replay)->required();
  const std::string& replay = run.o.replay;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (rp->parsed()) {
    const json m = json::parse(read_file(replay));
    std::vector<std::string> args = m.at("argv").get<std::vector<std::string>>();
    for (const auto& [path, digest] : m.at("inputs").items())
      if (sha256_hex(read_file(path)) != digest.get<std::string>()) {
        std::cerr << "input changed: " << path << "\n";
        return 1;
      }
    const std::string want = m.at("output_sha256");
    // Re-run with the output captured into a temp file; globals go before the subcommand.
    std::string out_flag = "--out", tmp = replay + ".replay.out";
    std::vector<char*> av{argv[0], out_flag.data(), tmp.data()};
    for (auto& a : args) av.push_back(a.data());
    const int rc = run_cli(static_cast<int>(av.size()), av.data());
    const std::string got = sha256_hex(stable_part(read_file(tmp)));
    std::remove(tmp.c_str());
    std::cout << "exit: " << rc << " (recorded " << m.at("exit").get<int>() << ")\noutput digest: " << got
              << (got == want ? " (matches)" : " (recorded " + want + ")") << "\n";
    return got == want && rc == m.at("exit").get<int>() ? 0 : 1;
  }

  const std::string text = run.out.str();
  if (gl.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(gl.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << gl.out << "\n";
      return 1;
    }
    f << text;
  }
  if (!gl.manifest.empty()) {
    json m;
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
      const std::string a = argv[i];
      if (a == "--out" || a == "--manifest") {
        ++i;
        continue;
      }
      if (a.rfind("--out=", 0) == 0 || a.rfind("--manifest=", 0) == 0) continue;
      args.push_back(a);
    }
    std::string sub;
    for (const auto* s : app.get_subcommands()) sub = s->get_name();
    m["tool_version"] = kToolVersion;
    m["subcommand"] = sub;
    m["argv"] = args;
    m["flags"] = {{"workers", gl.workers}, {"budget", gl.budget}};
    json inputs = json::object();
    for (const auto& path : run.inputs) inputs[path] = sha256_hex(read_file(path));
    m["inputs"] = inputs;
    m["output_sha256"] = sha256_hex(stable_part(text));
    m["output_digest_excludes"] = "lines starting with 'seconds: '";
    m["exit"] = run.status;
    std::ofstream(gl.manifest) << m.dump(2) << "\n";
  }
  return run.status;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
