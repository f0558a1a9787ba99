#include "cutpaste/trace.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace cutpaste {

namespace {

constexpr std::string_view kCategoryNames[] = {
    "opening", "block", "bonus", "extra_bonus", "absorbing_pair", "closing", "special_opening",
};

std::string line_error(std::size_t line, const std::string& msg) {
  return "trace line " + std::to_string(line) + ": " + msg;
}

}  // namespace

std::string_view to_string(StepCategory c) { return kCategoryNames[static_cast<int>(c)]; }

std::optional<StepCategory> parse_category(std::string_view text) {
  for (int c = 0; c < static_cast<int>(std::size(kCategoryNames)); ++c)
    if (kCategoryNames[c] == text) return static_cast<StepCategory>(c);
  return std::nullopt;
}

Permutation replay(const Trace& t) {
  std::vector<int> v = t.initial.vector();
  const int n = t.initial.size();
  for (std::size_t idx = 0; idx < t.moves.size(); ++idx) {
    if (!is_legal(t.moves[idx], n)) {
      throw InputError("move " + std::to_string(idx + 1) + " is illegal for n=" + std::to_string(n), idx + 1);
    }
    apply_move_inplace(v, t.moves[idx]);
  }
  return Permutation(std::move(v));
}

void write_trace(std::ostream& os, const Trace& t) {
  os << "n " << t.initial.size() << '\n';
  os << "init " << format_permutation(t.initial) << '\n';
  std::size_t next_step = 0;
  for (std::size_t idx = 0; idx < t.moves.size(); ++idx) {
    while (next_step < t.steps.size() && t.steps[next_step].first_move == idx) {
      const auto& s = t.steps[next_step++];
      os << "# step " << to_string(s.category) << " gain=" << s.gain_thirds << '\n';
    }
    const Move& m = t.moves[idx];
    os << "move " << m.i << ' ' << m.j << ' ' << m.k << ' ' << to_string(m.variant) << '\n';
  }
}

std::string format_trace(const Trace& t) {
  std::ostringstream os;
  write_trace(os, t);
  return os.str();
}

Trace read_trace(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<int> n;
  std::optional<Trace> trace;
  std::optional<StepAnnotation> pending;

  auto flush_pending = [&] {
    if (pending && trace) {
      pending->count = trace->moves.size() - pending->first_move;
      trace->steps.push_back(*pending);
    }
    pending.reset();
  };

  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head[0] == '#') {
      std::string word, category, gain;
      std::istringstream cs(line.substr(1));
      if (cs >> word && word == "step" && cs >> category >> gain && trace) {
        auto c = parse_category(category);
        if (c && gain.rfind("gain=", 0) == 0) {
          flush_pending();
          pending = StepAnnotation{trace->moves.size(), 0, *c, std::stoi(gain.substr(5))};
        }
      }
      continue;
    }
    if (head == "n") {
      int value = 0;
      if (n || !(ls >> value) || value < 1) throw InputError(line_error(lineno, "bad header"), lineno);
      n = value;
    } else if (head == "init") {
      if (!n || trace) throw InputError(line_error(lineno, "init must follow the n header once"), lineno);
      std::string rest;
      std::getline(ls, rest);
      try {
        Permutation p = parse_permutation(rest);
        if (p.size() != *n) throw InputError("length differs from header");
        trace.emplace(std::move(p));
      } catch (const InputError& e) {
        throw InputError(line_error(lineno, e.what()), lineno);
      }
    } else if (head == "move") {
      if (!trace) throw InputError(line_error(lineno, "move before init"), lineno);
      Move m;
      std::string variant, extra;
      if (!(ls >> m.i >> m.j >> m.k >> variant) || (ls >> extra)) {
        throw InputError(line_error(lineno, "expected: move <i> <j> <k> <variant>"), lineno);
      }
      auto v = parse_variant(variant);
      if (!v) throw InputError(line_error(lineno, "unknown variant '" + variant + "'"), lineno);
      m.variant = *v;
      if (!is_legal(m, *n)) throw InputError(line_error(lineno, "illegal cut points for n=" + std::to_string(*n)), lineno);
      trace->moves.push_back(m);
    } else {
      throw InputError(line_error(lineno, "unknown directive '" + head + "'"), lineno);
    }
  }
  if (!trace) throw InputError("trace has no init line", lineno);
  flush_pending();
  return std::move(*trace);
}

Trace parse_trace(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_trace(is);
}

}  // namespace cutpaste
