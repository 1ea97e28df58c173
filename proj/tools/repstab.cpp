// repstab: command-line front end for the decomposition library.

#include "repstab/acceptance.hpp"
#include "repstab/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <future>
#include <iostream>
#include <set>

using namespace repstab;

namespace {

struct Globals {
  std::string format = "table";
  int max_n = 0, max_degree = 0, threads = 0, window = 0;
  bool timing = false;
};

/// One output record: the computed terms plus the parameters that produced them.
struct Record {
  std::string family;
  int n = 0;
  json params = json::object();
  std::vector<std::pair<Label, Mult>> terms;
  bool is_virtual = false;
  double seconds = -1;
};

Record record_of(const Decomposition& d, json params) {
  Record r{to_string(d.family()), d.n(), std::move(params), {}, d.is_virtual(), -1};
  for (const auto& [l, m] : d.terms()) r.terms.emplace_back(l, m);
  return r;
}

Record record_of(const SchurVector& v, int degree, json params) {
  Record r{"SCHUR", degree, std::move(params), {}, false, -1};
  for (const auto& [p, m] : v.terms()) r.terms.emplace_back(p, m);
  return r;
}

json to_json(const Record& r, const std::string& command) {
  json out{{"command", command}, {"family", r.family}, {"n", r.n}};
  for (const auto& [k, v] : r.params.items()) out[k] = v;
  if (r.is_virtual) out["virtual"] = true;
  json terms = json::array();
  for (const auto& [l, m] : r.terms) terms.push_back(json{{"lambda", label_to_json(l)}, {"mult", m}});
  out["terms"] = std::move(terms);
  if (r.seconds >= 0) out["seconds"] = r.seconds;
  return out;
}

std::string params_text(const json& params) {
  std::string s;
  for (const auto& [k, v] : params.items()) s += "  " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  return s;
}

void emit(const Globals& g, const std::string& command, const std::vector<Record>& records, bool as_array) {
  if (g.format == "json") {
    if (as_array) {
      json arr = json::array();
      for (const auto& r : records) arr.push_back(to_json(r, command));
      std::cout << arr.dump(2) << '\n';
    } else {
      for (const auto& r : records) std::cout << to_json(r, command).dump(2) << '\n';
    }
  } else if (g.format == "tsv") {
    std::cout << "family\tn\tlambda\tmult\n";
    for (const auto& r : records)
      for (const auto& [l, m] : r.terms) std::cout << r.family << '\t' << r.n << '\t' << to_string(l) << '\t' << m << '\n';
  } else {
    for (const auto& r : records) {
      std::string row;
      for (const auto& [l, m] : r.terms) {
        if (!row.empty()) row += " + ";
        if (m < 0) row += "(" + std::to_string(m) + ")";
        row += "V(" + to_string(l) + ")";
        if (m > 1) row += "^" + std::to_string(m);
      }
      if (row.empty()) row = "0";
      std::cout << r.family << "  n=" << r.n << params_text(r.params) << "  :  " << row;
      if (r.seconds >= 0) std::cout << "  [" << std::fixed << std::setprecision(4) << r.seconds << std::defaultfloat << " s]";
      std::cout << '\n';
    }
  }
}

std::vector<int> parse_range(const std::string& s) {
  std::vector<int> out;
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      out.push_back(std::stoi(s));
    } else {
      int lo = std::stoi(s.substr(0, dots)), hi = std::stoi(s.substr(dots + 2));
      if (lo > hi) fail(ErrorKind::Usage, "empty range '" + s + "'");
      for (int n = lo; n <= hi; ++n) out.push_back(n);
    }
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::Usage, "bad range '" + s + "' (expected N or A..B)");
  } catch (const std::out_of_range&) {
    fail(ErrorKind::Usage, "bad range '" + s + "'");
  }
  for (int n : out)
    if (n < 0) fail(ErrorKind::Usage, "ranks must be nonnegative");
  return out;
}

/// "2*3,1+1|1" style sums of labels.
Decomposition parse_module(Family family, int n, const std::string& text) {
  Decomposition d(family, n);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '+')) {
    Mult m = 1;
    auto star = item.find('*');
    if (star != std::string::npos) {
      try {
        m = std::stol(item.substr(0, star));
      } catch (const std::exception&) {
        fail(ErrorKind::Usage, "bad multiplicity in '" + item + "'");
      }
      item = item.substr(star + 1);
    }
    d.add(parse_label(family, item), m);
  }
  return d;
}

/// Runs f over the ranks, `threads` at a time, and returns results in rank order.
std::vector<Record> over_ranks(const std::vector<int>& ranks, int threads, bool timing,
                               const std::function<Record(int)>& f) {
  auto timed = [&](int n) {
    auto start = std::chrono::steady_clock::now();
    Record r = f(n);
    if (timing) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  };
  std::vector<Record> out;
  if (threads <= 1) {
    for (int n : ranks) out.push_back(timed(n));
    return out;
  }
  for (std::size_t b = 0; b < ranks.size(); b += static_cast<std::size_t>(threads)) {
    std::vector<std::future<Record>> batch;
    for (std::size_t t = b; t < std::min(ranks.size(), b + static_cast<std::size_t>(threads)); ++t)
      batch.push_back(std::async(std::launch::async, timed, ranks[t]));
    for (auto& fut : batch) out.push_back(fut.get());
  }
  return out;
}

/// Options shared by `decompose <kind>` and `stability <kind>`.
struct FamilyOptions {
  std::string kind;
  std::string n = "";
  int i = -1, k = -1, m = -1, j = -1;
  std::string w, set;
  bool literal = false, raw = false, cross = false;
};

const std::vector<std::string> kKinds{"pure-braid", "wn-braid", "coinv",       "coinv-b",   "free-lie",
                                      "lie-nilpotent", "heisenberg", "schubert", "lefschetz"};

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::Usage, what);
}

std::pair<Decomposition, json> compute_kind(const FamilyOptions& o, int n) {
  json p = json::object();
  auto need_i = [&] {
    require(o.i >= 0, o.kind + " needs --i");
    p["i"] = o.i;
  };
  if (o.kind == "pure-braid" || o.kind == "wn-braid") {
    need_i();
    const Arrangement arr = o.kind == "pure-braid" ? Arrangement::A : Arrangement::B;
    return {braid_decomposition(arr, n, o.i), p};
  }
  if (o.kind == "coinv") {
    need_i();
    return {coinv_decomposition(n, o.i), p};
  }
  if (o.kind == "coinv-b") {
    need_i();
    if (o.literal) p["literal"] = true;
    return {coinv_b_decomposition(n, o.i, o.literal), p};
  }
  if (o.kind == "free-lie") {
    require(o.m >= 1, "free-lie needs --m >= 1");
    p["m"] = o.m;
    return {free_lie_decomposition(o.m, n), p};
  }
  if (o.kind == "lie-nilpotent") {
    need_i();
    require(o.k >= 1, "lie-nilpotent needs --k >= 1");
    p["k"] = o.k;
    std::optional<int> j;
    if (o.j >= 0) {
      j = o.j;
      p["j"] = o.j;
    }
    return {nilpotent_homology(n, o.k, o.i, j), p};
  }
  if (o.kind == "heisenberg") {
    need_i();
    return {heisenberg_homology(n, o.i), p};
  }
  if (o.kind == "schubert") {
    need_i();
    require(!o.w.empty(), "schubert needs --w");
    Permutation w = parse_permutation(o.w);
    p["w"] = to_string(w);
    return {schubert_decomposition(w, n, o.i), p};
  }
  if (o.kind == "lefschetz") {
    auto S = parse_int_set(o.set);
    p["set"] = std::vector<int>(S.begin(), S.end());
    if (o.cross) {
      p["cross_polytope"] = true;
      return {cross_polytope_decomposition(S, n), p};
    }
    if (o.raw) p["raw"] = true;
    return {lefschetz_decomposition(S, n, o.raw), p};
  }
  fail(ErrorKind::Usage, "unknown family '" + o.kind + "'");
}

void add_family_options(CLI::App* cmd, FamilyOptions& o, bool range_required) {
  auto* n = cmd->add_option("--n", o.n, "rank or range A..B");
  if (range_required) n->required();
  cmd->add_option("--i", o.i, "homological or polynomial degree");
  cmd->add_option("--k", o.k, "nilpotency step");
  cmd->add_option("--m", o.m, "free Lie grading");
  cmd->add_option("--j", o.j, "single grading");
  cmd->add_option("--w", o.w, "permutation in one-line notation");
  cmd->add_option("--set", o.set, "rank set, e.g. 1,3");
  cmd->add_flag("--literal", o.literal, "count the descent n in the flag major index");
  cmd->add_flag("--raw", o.raw, "Lefschetz multiplicities without the sign normalization");
  cmd->add_flag("--cross", o.cross, "cross-polytope (W_n) version of the Lefschetz count");
}

std::vector<int> ranks_for(const FamilyOptions& o) {
  if (!o.n.empty()) return parse_range(o.n);
  if (o.kind == "free-lie" && o.m >= 1) return {o.m};
  fail(ErrorKind::Usage, "--n is required");
}

int run_selftest() {
  int failures = 0;
  for (const auto& check : acceptance::all_checks()) {
    auto r = acceptance::run(check);
    std::cout << acceptance::format(r) << std::endl;
    failures += !r.pass;
  }
  std::cout << (failures ? std::to_string(failures) + " criterion(s) failed" : std::string("all criteria passed")) << '\n';
  return failures ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irreducible decompositions of representation sequences and stability detection"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"table", "json", "tsv"}));
  app.add_option("--max-n", g.max_n, "override rank caps");
  app.add_option("--max-degree", g.max_degree, "override the plethysm degree cap");
  app.add_option("--threads", g.threads, "parallel ranks");
  app.add_option("--window", g.window, "trailing window for stability verdicts");
  app.add_flag("--timing", g.timing, "include timings in records");

  // Echo from the subcommand on; global options do not change results.
  const std::set<std::string> subcommands{"lr", "plethysm", "tensor", "branch", "restrict", "schur",
                                          "divide", "decompose", "stability", "selftest"};
  std::string command_echo;
  for (int a = 1, started = 0; a < argc; ++a) {
    started = started || subcommands.count(argv[a]);
    if (started) command_echo += (command_echo.empty() ? "" : " ") + std::string(argv[a]);
  }

  std::function<int()> action;

  // lr / plethysm
  std::string a1, a2;
  auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson product s_lambda * s_mu");
  lr_cmd->add_option("lambda", a1)->required();
  lr_cmd->add_option("mu", a2)->required();
  lr_cmd->callback([&] {
    action = [&] {
      Partition l = parse_partition(a1), m = parse_partition(a2);
      emit(g, command_echo, {record_of(lr(l, m), l.size() + m.size(), json::object())}, false);
      return 0;
    };
  });
  auto* pl_cmd = app.add_subcommand("plethysm", "plethysm s_lambda[s_mu]");
  pl_cmd->add_option("lambda", a1)->required();
  pl_cmd->add_option("mu", a2)->required();
  pl_cmd->callback([&] {
    action = [&] {
      Partition l = parse_partition(a1), m = parse_partition(a2);
      emit(g, command_echo, {record_of(plethysm(l, m), l.size() * m.size(), json::object())}, false);
      return 0;
    };
  });

  // tensor / schur / divide
  std::string family_name;
  int rank = -1;
  auto* tensor_cmd = app.add_subcommand("tensor", "tensor product of two modules");
  tensor_cmd->add_option("--family", family_name, "SYM, HYP, GL, SL or SP")->required();
  tensor_cmd->add_option("--n", rank, "rank")->required();
  tensor_cmd->add_option("a", a1, "module, e.g. 2,1 or 2*1+1,1")->required();
  tensor_cmd->add_option("b", a2)->required();
  tensor_cmd->callback([&] {
    action = [&] {
      Family f = parse_family(family_name);
      emit(g, command_echo, {record_of(tensor(parse_module(f, rank, a1), parse_module(f, rank, a2)), json::object())}, false);
      return 0;
    };
  });
  auto* schur_cmd = app.add_subcommand("schur", "Schur functor S_lambda applied to a module");
  schur_cmd->add_option("--family", family_name)->required();
  schur_cmd->add_option("--n", rank)->required();
  schur_cmd->add_option("lambda", a1)->required();
  schur_cmd->add_option("module", a2)->required();
  schur_cmd->callback([&] {
    action = [&] {
      Family f = parse_family(family_name);
      emit(g, command_echo, {record_of(schur_functor(parse_partition(a1), parse_module(f, rank, a2)), json::object())}, false);
      return 0;
    };
  });
  auto* divide_cmd = app.add_subcommand("divide", "the module X with X (x) W = VW");
  divide_cmd->add_option("--family", family_name)->required();
  divide_cmd->add_option("--n", rank)->required();
  divide_cmd->add_option("w", a1)->required();
  divide_cmd->add_option("vw", a2)->required();
  divide_cmd->callback([&] {
    action = [&] {
      Family f = parse_family(family_name);
      emit(g, command_echo, {record_of(divide(parse_module(f, rank, a1), parse_module(f, rank, a2)), json::object())}, false);
      return 0;
    };
  });

  // branch / restrict
  auto* branch_cmd = app.add_subcommand("branch", "Sp_2n -> Sp_2n-2 branching");
  branch_cmd->add_option("--n", rank)->required();
  branch_cmd->add_option("lambda", a1)->required();
  branch_cmd->callback([&] {
    action = [&] {
      emit(g, command_echo, {record_of(branch_sp(parse_partition(a1), rank), json::object())}, false);
      return 0;
    };
  });
  int steps = 1;
  auto* restrict_cmd = app.add_subcommand("restrict", "restriction: GL_n->GL_n-k, SL_n->SL_n-k, S_n->S_n-k, GL_2n->Sp_2n");
  restrict_cmd->add_option("--family", family_name, "GL, SL, SYM or littlewood")->required();
  restrict_cmd->add_option("--n", rank)->required();
  restrict_cmd->add_option("--k", steps, "number of ranks to drop");
  restrict_cmd->add_option("lambda", a1)->required();
  restrict_cmd->callback([&] {
    action = [&] {
      std::string fam = family_name;
      std::transform(fam.begin(), fam.end(), fam.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      json p{{"k", steps}};
      Decomposition d;
      if (fam == "littlewood") {
        d = littlewood_restrict(parse_partition(a1), rank);
        p = json::object();
      } else {
        switch (parse_family(fam)) {
        case Family::GL: d = restrict_gl(parse_pseudo_partition(a1), rank, steps); break;
        case Family::SL: d = restrict_sl(parse_partition(a1), rank, steps); break;
        case Family::SYM: d = restrict_sym(parse_partition(a1), rank, steps); break;
        default: fail(ErrorKind::Usage, "restrict supports GL, SL, SYM and littlewood");
        }
      }
      emit(g, command_echo, {record_of(d, p)}, false);
      return 0;
    };
  });

  // decompose <kind>
  FamilyOptions fo;
  auto* decompose_cmd = app.add_subcommand("decompose", "decompose a named representation sequence");
  decompose_cmd->require_subcommand(1);
  for (const auto& kind : kKinds) {
    auto* sub = decompose_cmd->add_subcommand(kind);
    add_family_options(sub, fo, false);
    sub->callback([&, kind] {
      fo.kind = kind;
      action = [&] {
        auto records = over_ranks(ranks_for(fo), g.threads, g.timing, [&](int n) {
          auto [d, p] = compute_kind(fo, n);
          return record_of(d, p);
        });
        emit(g, command_echo, records, true);
        return 0;
      };
    });
  }

  // stability
  std::string file;
  bool simple = false;
  auto* stab_cmd = app.add_subcommand("stability", "detect stability over a range of ranks");
  stab_cmd->add_option("kind", fo.kind, "built-in family")->check(CLI::IsMember(kKinds));
  stab_cmd->add_option("--file", file, "JSON file of decompositions");
  stab_cmd->add_flag("--simple", simple, "test simple stability (GL sequences)");
  add_family_options(stab_cmd, fo, false);
  stab_cmd->callback([&] {
    action = [&] {
      DecompositionSequence seq;
      if (!file.empty()) {
        std::ifstream in(file);
        if (!in) fail(ErrorKind::Usage, "cannot read " + file);
        json j;
        try {
          j = json::parse(in);
        } catch (const json::exception& e) {
          fail(ErrorKind::Usage, std::string("bad JSON in ") + file + ": " + e.what());
        }
        seq = sequence_from_json(j);
      } else {
        require(!fo.kind.empty(), "stability needs a family name or --file");
        const auto ranks = ranks_for(fo);
        std::vector<Decomposition> parts(ranks.size());
        over_ranks(ranks, g.threads, false, [&](int n) {
          auto [d, p] = compute_kind(fo, n);
          parts[static_cast<std::size_t>(n - ranks.front())] = d;
          return record_of(d, p);
        });
        seq.family = parts.front().family();
        for (const auto& d : parts) seq.add(d);
        seq.provenance = fo.kind;
      }
      const int window = Limits::global().window;
      StabilityReport report = simple ? detect_simple(seq, window) : detect(seq, window);
      json out = to_json(report);
      if (!seq.provenance.empty()) out["source"] = seq.provenance;
      if (g.format == "table") {
        std::cout << "verdict " << report.verdict_string() << ", uniform onset "
                  << (report.uniform_onset ? std::to_string(*report.uniform_onset) : std::string("none")) << " over n="
                  << report.first << ".." << report.last << " (window " << report.window << "; " << report.note << ")\n";
      } else {
        std::cout << out.dump(2) << '\n';
      }
      return 0;
    };
  });

  auto* self_cmd = app.add_subcommand("selftest", "run the acceptance suite");
  self_cmd->callback([&] { action = run_selftest; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Limits& L = Limits::global();
    if (g.max_n > 0) {
      L.max_sym_n = g.max_n;
      L.max_braid_n = g.max_n;
      L.max_lie_rank = g.max_n;
    }
    if (g.max_degree > 0) L.max_plethysm_degree = g.max_degree;
    if (g.threads > 0) L.threads = g.threads;
    if (g.window > 0) L.window = g.window;
    g.threads = L.threads;
    return action ? action() : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
