#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "cutpaste/metrics.hpp"
#include "cutpaste/oracle.hpp"
#include "cutpaste/sorter.hpp"
#include "cutpaste/trace.hpp"

namespace cutpaste::cli {

namespace {

struct RunConfig {
  std::string algo;  // empty: refined, or every algorithm for bench
  std::string perm;
  std::string n;
  std::uint64_t seed = 0;
  std::size_t limit = 0;
  std::string trace;
  std::string out;
  bool allow_n9 = false;
  int reps = 5;
};

Algorithm algorithm(const RunConfig& c) {
  if (c.algo.empty()) return Algorithm::Refined;
  auto a = parse_algorithm(c.algo);
  if (!a) throw InputError("unknown algorithm '" + c.algo + "' (basic, refined, insertion, monotone)");
  return *a;
}

Permutation read_permutation(const RunConfig& c, std::istream& in) {
  std::string text = c.perm;
  if (text.empty()) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
      text = line;
      break;
    }
  }
  try {
    return parse_permutation(text);
  } catch (const InputError& e) {
    std::string what = std::string("permutation: ") + e.what();
    if (e.position()) what += " (position " + std::to_string(*e.position()) + ")";
    throw InputError(what, e.position());
  }
}

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 1) throw InputError("--n expects positive integers, got '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("--n is required");
  return out;
}

int single_n(const RunConfig& c) {
  const auto ns = parse_n_list(c.n);
  if (ns.size() != 1) throw InputError("--n takes a single value here");
  return ns.front();
}

int oracle_limit(const RunConfig& c) { return c.allow_n9 ? kLongRunOracleLimit : kDefaultOracleLimit; }

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  return f;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

int cmd_sort(const RunConfig& c, std::istream& in, std::ostream& out) {
  const Algorithm a = algorithm(c);
  const Permutation p = read_permutation(c, in);
  const SortResult r = sort_with(a, p);
  write_trace(out, r.trace);
  if (!c.out.empty()) {
    auto f = open_out(c.out);
    write_trace(f, r.trace);
  }
  const bool ok = is_identity(replay(r.trace)) && r.move_count <= r.bound;
  out << "moves=" << r.move_count << " bound=" << r.bound << " ok=" << (ok ? "true" : "false") << '\n';
  return ok ? kOk : kInvariantFailure;
}

int cmd_verify(const RunConfig& c, std::istream& in, std::ostream& out) {
  Trace t = [&] {
    if (c.trace.empty()) return read_trace(in);
    std::ifstream f(c.trace);
    if (!f) throw InputError("cannot read " + c.trace);
    return read_trace(f);
  }();
  const Algorithm a = algorithm(c);
  const int n = t.initial.size();
  // Basic traces keep circular adjacencies; everything else is judged linearly.
  const bool circular = a == Algorithm::Basic;
  std::vector<int> v = t.initial.vector();
  bool broke = false;
  for (std::size_t idx = 0; idx < t.moves.size(); ++idx) {
    const int before = circular ? mode_adjacencies(v, Mode::Circular) : adjacencies(Permutation(v));
    if (!is_legal(t.moves[idx], n)) throw InputError("move " + std::to_string(idx + 1) + " is illegal", idx + 1);
    apply_move_inplace(v, t.moves[idx]);
    const int after = circular ? mode_adjacencies(v, Mode::Circular) : adjacencies(Permutation(v));
    if (after < before) broke = true;
  }
  const int moves = static_cast<int>(t.moves.size());
  const int bound = sort_bound(a, n);
  const bool sorted = is_identity(v);
  out << "final=" << format_values(v) << '\n';
  out << "moves=" << moves << " bound=" << bound << " within_bound=" << (moves <= bound ? "true" : "false") << '\n';
  out << "broke_adjacency=" << (broke ? "true" : "false") << '\n';
  out << "ok=" << (sorted ? "true" : "false") << '\n';
  return sorted ? kOk : kInvariantFailure;
}

int cmd_distance(const RunConfig& c, std::istream& in, std::ostream& out) {
  const Permutation p = read_permutation(c, in);
  const int d = bfs_distance(p, oracle_limit(c));
  const BoundCertificate cert = certify_lower_bound(p);
  out << "distance=" << d << '\n';
  out << "certificate=" << cert.best << " parity_bound=" << cert.parity_bound << " adjacency_bound=" << cert.adjacency_bound
      << '\n';
  out << "refined_moves=" << sort_refined(p).move_count << '\n';
  return kOk;
}

int cmd_table(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const int n = single_n(c);
  if (n >= kLongRunOracleLimit) err << "building distance table for n=" << n << " ...\n";
  const DistanceTable t = build_table(n, oracle_limit(c), c.limit ? c.limit : 1000);
  std::ostringstream summary;
  summary << "n=" << n << " fmax=" << t.fmax << " lower=" << n / 2 << " upper=" << 2 * n / 3 << '\n';
  if (c.out.empty()) {
    write_table_csv(out, t);
    err << summary.str();
  } else {
    auto f = open_out(c.out);
    write_table_csv(f, t);
    auto w = open_out(c.out + ".witnesses");
    write_witnesses(w, t);
    out << summary.str();
  }
  return kOk;
}

int cmd_witness(const RunConfig& c, std::ostream& out) {
  const int n = single_n(c);
  const auto ws = hard_witnesses(n, c.limit ? c.limit : 10, c.seed);
  std::ofstream f;
  if (!c.out.empty()) f = open_out(c.out);
  std::ostream& dst = c.out.empty() ? out : f;
  for (const auto& w : ws) dst << format_permutation(w) << '\n';
  return kOk;
}

int cmd_bound(const RunConfig& c, std::istream& in, std::ostream& out) {
  const BoundCertificate cert = certify_lower_bound(read_permutation(c, in));
  out << "parity_bound=" << cert.parity_bound << " adjacency_bound=" << cert.adjacency_bound << " best=" << cert.best
      << '\n';
  return kOk;
}

int cmd_bench(const RunConfig& c, std::ostream& out) {
  const auto ns = parse_n_list(c.n.empty() ? "1000,2000,4000" : c.n);
  if (c.reps < 1) throw InputError("--reps must be positive");
  std::vector<Algorithm> algos;
  if (c.algo.empty() || c.algo == "all") {
    algos = {Algorithm::Basic, Algorithm::Refined, Algorithm::Insertion, Algorithm::Monotone};
  } else {
    algos = {algorithm(c)};
  }
  std::ostream* csv = &out;
  std::ofstream f;
  if (!c.out.empty()) {
    f = open_out(c.out);
    csv = &f;
  }
  *csv << "n,algo,reps,mean_moves,max_moves,bound,mean_ms\n";
  for (int n : ns) {
    std::vector<Permutation> inputs;
    for (int r = 0; r < c.reps; ++r) inputs.push_back(random_permutation(n, c.seed + static_cast<std::uint64_t>(r)));
    for (Algorithm a : algos) {
      long total = 0;
      int worst = 0;
      double ms = 0;
      for (const auto& p : inputs) {
        const auto t0 = std::chrono::steady_clock::now();
        const SortResult res = sort_with(a, p);
        ms += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        total += res.move_count;
        worst = std::max(worst, res.move_count);
      }
      *csv << n << ',' << to_string(a) << ',' << c.reps << ',' << fixed(static_cast<double>(total) / c.reps, 3) << ','
           << worst << ',' << sort_bound(a, n) << ',' << fixed(ms / c.reps, 3) << '\n';
    }
  }
  return kOk;
}

int cmd_random(const RunConfig& c, std::ostream& out) {
  out << format_permutation(random_permutation(single_n(c), c.seed)) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Cut-and-paste sorting of permutations", "cutpaste"};
  app.require_subcommand(1);

  auto add_algo = [&](CLI::App* s) { s->add_option("--algo", c.algo, "basic, refined, insertion or monotone"); };
  auto add_perm = [&](CLI::App* s) { s->add_option("--perm", c.perm, "permutation, e.g. \"2 4 1 3\" (default: stdin)"); };

  auto* sort = app.add_subcommand("sort", "sort a permutation and print the annotated trace");
  add_algo(sort);
  add_perm(sort);
  sort->add_option("--out", c.out, "also write the trace to this file");

  auto* verify = app.add_subcommand("verify", "replay a trace and check it");
  verify->add_option("--trace", c.trace, "trace file (default: stdin)");
  add_algo(verify);

  auto* distance = app.add_subcommand("distance", "exact distance by breadth-first search");
  add_perm(distance);
  distance->add_flag("--allow-n9", c.allow_n9, "permit n=9");

  auto* table = app.add_subcommand("table", "distance table for all permutations of n");
  table->add_option("--n", c.n)->required();
  table->add_option("--out", c.out, "CSV path; witnesses go to <out>.witnesses");
  table->add_option("--limit", c.limit, "witness cap (default 1000)");
  table->add_flag("--allow-n9", c.allow_n9, "permit n=9");

  auto* witness = app.add_subcommand("witness", "permutations with the fewest parity adjacencies");
  witness->add_option("--n", c.n)->required();
  witness->add_option("--limit", c.limit, "how many (default 10)");
  witness->add_option("--seed", c.seed);
  witness->add_option("--out", c.out);

  auto* bound = app.add_subcommand("bound", "lower-bound certificate");
  add_perm(bound);

  auto* bench = app.add_subcommand("bench", "CSV of move counts and timings");
  bench->add_option("--n", c.n, "comma-separated sizes (default 1000,2000,4000)");
  bench->add_option("--algo", c.algo, "an algorithm or 'all' (default all)");
  bench->add_option("--reps", c.reps, "inputs per size (default 5)");
  bench->add_option("--seed", c.seed);
  bench->add_option("--out", c.out);

  auto* random = app.add_subcommand("random", "print a seeded random permutation");
  random->add_option("--n", c.n)->required();
  random->add_option("--seed", c.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (sort->parsed()) return cmd_sort(c, in, out);
    if (verify->parsed()) return cmd_verify(c, in, out);
    if (distance->parsed()) return cmd_distance(c, in, out);
    if (table->parsed()) return cmd_table(c, out, err);
    if (witness->parsed()) return cmd_witness(c, out);
    if (bound->parsed()) return cmd_bound(c, in, out);
    if (bench->parsed()) return cmd_bench(c, out);
    if (random->parsed()) return cmd_random(c, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceGuardError& e) {
    err << "refused: " << e.what() << '\n';
    return kGuardRefused;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n' << "offending permutation: " << format_values(e.offending()) << '\n';
    return kInvariantFailure;
  }
  return kInputError;
}

}  // namespace cutpaste::cli
