#include "cutpaste/sorter.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "segment_move.hpp"

namespace cutpaste {

using detail::segment_move;

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Basic: return "basic";
    case Algorithm::Refined: return "refined";
    case Algorithm::Insertion: return "insertion";
    case Algorithm::Monotone: return "monotone";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view text) {
  for (Algorithm a : {Algorithm::Basic, Algorithm::Refined, Algorithm::Insertion, Algorithm::Monotone})
    if (to_string(a) == text) return a;
  return std::nullopt;
}

int ceil_sqrt(int n) {
  int r = 0;
  while (r * r < n) ++r;
  return r;
}

int sort_bound(Algorithm a, int n) {
  switch (a) {
    case Algorithm::Basic: return 2 * n / 3 + 1;
    case Algorithm::Refined: return 2 * n / 3;
    case Algorithm::Insertion: return n - 1;
    case Algorithm::Monotone: return n - ceil_sqrt(n) + 1;
  }
  return 0;
}

namespace {

int floor_for(StepCategory c) {
  switch (c) {
    case StepCategory::Block:
    case StepCategory::Bonus: return 3;
    case StepCategory::ExtraBonus: return 4;
    case StepCategory::AbsorbingPair: return 6;
    default: return 0;
  }
}

// Value positions and block structure of one arrangement.
struct Layout {
  std::vector<int> v;
  int n = 0;
  Mode mode = Mode::Circular;
  std::vector<int> pos;  // value -> 0-based position
  BlockDecomposition d;

  Layout(std::vector<int> values, Mode m) : v(std::move(values)), n(static_cast<int>(v.size())), mode(m) {
    pos.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int t = 0; t < n; ++t) pos[static_cast<std::size_t>(v[t])] = t;
    d = decompose(v, mode);
  }

  int seg(int value) const { return d.segment_of[static_cast<std::size_t>(pos[static_cast<std::size_t>(value)])]; }
  const Segment& segment_of_value(int value) const { return d.segments[static_cast<std::size_t>(seg(value))]; }
  bool in_block(int value) const { return segment_of_value(value).is_block(); }
  int succ(int value) const { return successor(value, n, mode); }
  int pred(int value) const { return predecessor(value, n, mode); }

  // [s, e) starts and ends on segment boundaries.
  bool clean(int s, int e) const {
    return d.segments[static_cast<std::size_t>(d.segment_of[static_cast<std::size_t>(s)])].begin == s &&
           d.segments[static_cast<std::size_t>(d.segment_of[static_cast<std::size_t>(e - 1)])].end == e;
  }
};

[[noreturn]] void fail(const std::string& what, const std::vector<int>& v) {
  std::ostringstream os;
  os << what << " on [" << format_values(v) << "]";
  throw InvariantError(os.str(), v);
}

// Cut the block holding one of the pair and paste it against the other so
// the pair becomes adjacent. The front block is never cut.
Move merge_blocks(const Layout& L, int u, int w) {
  const int su = L.seg(u);
  const int sw = L.seg(w);
  bool cut_u;
  if (su == 0) cut_u = false;
  else if (sw == 0) cut_u = true;
  else cut_u = su > sw;
  const int kv = cut_u ? w : u;
  const int cv = cut_u ? u : w;
  const Segment& keep = L.segment_of_value(kv);
  const Segment& cut = L.segment_of_value(cv);
  const int pk = L.pos[static_cast<std::size_t>(kv)];
  const int pc = L.pos[static_cast<std::size_t>(cv)];
  if (pk == keep.end - 1) return segment_move(cut.begin, cut.end, keep.end, pc != cut.begin);
  if (pk != keep.begin) fail("block pair value is not at a block end", L.v);
  return segment_move(cut.begin, cut.end, keep.begin, pc != cut.end - 1);
}

// Smallest value i with {i, succ(i)} in two distinct blocks.
std::optional<Move> find_block_move(const Layout& L) {
  for (int i = 1; i <= L.n; ++i) {
    const int j = L.succ(i);
    if (j == 0 || j == i) continue;
    if (L.in_block(i) && L.in_block(j) && L.seg(i) != L.seg(j)) return merge_blocks(L, i, j);
  }
  return std::nullopt;
}

enum class CandidateCase { BonusSingleton = 0, BonusBlock = 1, Absorbing = 2, BlockAroundB = 3 };

struct Candidate {
  int value = 0;
  CandidateCase kind = CandidateCase::BonusSingleton;
  int s = 0, e = 0;  // string S for the bonus cases
  int q = 0, q_next = 0;
};

struct Frame {
  int anchor_seg = 0;  // block whose right end receives insertions
  int dir = +1;        // +1: the anchor wants succ(end); -1: pred(end)
};

std::vector<int> applied(std::vector<int> v, const Move& m) {
  apply_move_inplace(v, m);
  return v;
}

// Case analysis after block moves are exhausted, relative to the anchor
// block X: l is X's right-end value, l' its missing neighbour and p the
// value right after X.
std::optional<SortStep> plan_from_anchor(const Layout& L, const Frame& f) {
  const Segment& X = L.d.segments[static_cast<std::size_t>(f.anchor_seg)];
  const int px = X.end;
  if (px >= L.n) return std::nullopt;
  const int l = L.v[static_cast<std::size_t>(X.end - 1)];
  const int l_next = f.dir > 0 ? L.succ(l) : L.pred(l);
  if (l_next == 0 || L.in_block(l_next)) return std::nullopt;
  const int p = L.v[static_cast<std::size_t>(px)];
  const int sp = L.seg(p);
  const int pl = L.pos[static_cast<std::size_t>(l_next)];

  std::vector<Candidate> candidates;
  for (int c : {L.succ(p), L.pred(p)}) {
    if (c == 0 || c == p) continue;
    if (std::any_of(candidates.begin(), candidates.end(), [&](const Candidate& k) { return k.value == c; })) continue;
    const int sc = L.seg(c);
    if (sc == sp || sc == 0 || sc == f.anchor_seg) continue;
    const int pc = L.pos[static_cast<std::size_t>(c)];
    Candidate cand;
    cand.value = c;
    cand.s = std::min(pl, pc);
    cand.e = std::max(pl, pc) + 1;
    const Segment& B = L.d.segments[static_cast<std::size_t>(sc)];
    if (!B.is_block()) {
      cand.kind = CandidateCase::BonusSingleton;
    } else if (B.begin >= cand.s && B.end <= cand.e) {
      cand.kind = CandidateCase::BonusBlock;
    } else {
      cand.q = pc == B.begin ? L.v[static_cast<std::size_t>(B.end - 1)] : L.v[static_cast<std::size_t>(B.begin)];
      for (int r : {L.succ(cand.q), L.pred(cand.q)}) {
        if (r != 0 && L.seg(r) != sc) cand.q_next = r;
      }
      if (cand.q_next == 0) continue;
      cand.kind = (L.in_block(cand.q_next) || L.in_block(p)) ? CandidateCase::BlockAroundB : CandidateCase::Absorbing;
    }
    candidates.push_back(cand);
  }
  if (candidates.empty()) return std::nullopt;
  const Candidate& best = *std::min_element(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.value < b.value;
  });

  SortStep step;
  switch (best.kind) {
    case CandidateCase::BonusSingleton:
    case CandidateCase::BonusBlock: {
      if (!L.clean(best.s, best.e) || best.s <= px) fail("bonus string splits a block", L.v);
      step.moves.push_back(segment_move(best.s, best.e, px, pl != best.s));
      const bool extra = best.kind == CandidateCase::BonusBlock || L.in_block(p);
      step.category = extra ? StepCategory::ExtraBonus : StepCategory::Bonus;
      return step;
    }
    case CandidateCase::BlockAroundB: {
      const int partner = L.in_block(best.q_next) ? best.q_next : p;
      step.moves.push_back(merge_blocks(L, partner == p ? best.value : best.q, partner));
      step.category = StepCategory::Block;
      return step;
    }
    case CandidateCase::Absorbing: {
      const Segment& B = L.segment_of_value(best.value);
      const int pc = L.pos[static_cast<std::size_t>(best.value)];
      const Move first = segment_move(B.begin, B.end, px, pc == B.begin);
      step.moves.push_back(first);
      step.category = StepCategory::AbsorbingPair;
      const Layout L2(applied(L.v, first), L.mode);
      if (is_identity(L2.v) || L2.d.segments.size() == 1) return step;
      const int q = best.q;
      const int qn = best.q_next;
      const int pl2 = L2.pos[static_cast<std::size_t>(l_next)];
      const int pq2 = L2.pos[static_cast<std::size_t>(qn)];
      const int s = std::min(pl2, pq2);
      const int e = std::max(pl2, pq2) + 1;
      const bool bonus_ready = L2.v[static_cast<std::size_t>(px)] == q && !L2.in_block(l_next) && !L2.in_block(qn) &&
                               s > px + B.length() && L2.clean(s, e);
      if (bonus_ready) {
        step.moves.push_back(segment_move(s, e, px, pl2 != s));
      } else if (auto bm = find_block_move(L2)) {
        step.moves.push_back(*bm);
      } else {
        fail("no second move for the absorbing pair", L.v);
      }
      return step;
    }
  }
  return std::nullopt;
}

SortStep plan_step_values(const std::vector<int>& values, Mode mode) {
  const Layout L(values, mode);
  const Segment& front = L.d.segments.front();
  if (!front.is_block() || front.orientation != Orientation::Increasing) fail("front is not an increasing block", values);
  if (mode == Mode::Linear && values.front() != 1) fail("linear front block does not start at 1", values);
  if (L.d.segments.size() == 1) fail("already a single block", values);

  std::optional<SortStep> step;
  if (auto bm = find_block_move(L)) {
    step = SortStep{{*bm}, StepCategory::Block, 0};
  } else {
    step = plan_from_anchor(L, Frame{0, +1});
    // With no wrap-around, value n has no upper neighbour; then the block
    // that follows the front block (necessarily descending from n) serves
    // as the anchor, growing downward.
    if (!step && mode == Mode::Linear && L.d.segments.size() > 1) {
      const Segment& next = L.d.segments[1];
      if (next.is_block() && next.orientation == Orientation::Decreasing) step = plan_from_anchor(L, Frame{1, -1});
    }
  }
  if (!step) fail("no applicable case", values);

  std::vector<int> work = values;
  for (const Move& m : step->moves) {
    if (!is_legal(m, L.n)) fail("planned an illegal move", values);
    apply_move_inplace(work, m);
  }
  step->claimed_gain = weight(values, mode).value - weight(work, mode).value;
  if (step->claimed_gain < floor_for(step->category)) {
    std::ostringstream os;
    os << to_string(step->category) << " step gained " << step->claimed_gain << " thirds, below its floor";
    fail(os.str(), values);
  }
  return *step;
}

// Accumulates moves on a window [offset, n) of the full arrangement, where
// window values are full values minus offset.
class TraceBuilder {
 public:
  explicit TraceBuilder(const Permutation& p) : result_{Trace(p), 0, 0, {}}, values_(p.vector()) {}

  const std::vector<int>& values() const { return values_; }

  std::vector<int> window(int offset) const {
    std::vector<int> w(values_.begin() + offset, values_.end());
    for (int& x : w) x -= offset;
    return w;
  }

  void add(const std::vector<Move>& local, StepCategory c, int gain, int offset = 0) {
    if (local.empty()) return;
    result_.trace.steps.push_back({result_.trace.moves.size(), local.size(), c, gain});
    for (Move m : local) {
      m.i += offset;
      m.j += offset;
      m.k += offset;
      apply_move_inplace(values_, m);
      result_.trace.moves.push_back(m);
    }
    ++result_.category_histogram[c];
  }

  SortResult finish(Algorithm a) {
    result_.move_count = static_cast<int>(result_.trace.moves.size());
    result_.bound = sort_bound(a, result_.trace.initial.size());
    if (!is_identity(values_)) fail("sorter finished without reaching the identity", result_.trace.initial.vector());
    return std::move(result_);
  }

 private:
  SortResult result_;
  std::vector<int> values_;
};

int gain_of(const std::vector<int>& before, const std::vector<Move>& moves, Mode mode) {
  std::vector<int> after = before;
  for (const Move& m : moves) apply_move_inplace(after, m);
  return weight(before, mode).value - weight(after, mode).value;
}

// Refined opening for a window whose first value a >= 3 and where 1 is a
// singleton: bring the string from 1 to a' to the front, then put the string
// from 2 to b' between 1 and b. Candidates that would split a block are
// skipped; every accepted opening is checked against the window budget.
struct Opening {
  std::vector<Move> moves;
  bool run_main_loop = true;
};

// The string with `head` at one end and `tail` at the other, moved to cut
// point `dest` with head first. Empty when the cut would split a block.
std::optional<Move> string_move(const Layout& L, int head, int tail, int dest) {
  if (tail == 0) return std::nullopt;
  const int ph = L.pos[static_cast<std::size_t>(head)];
  const int pt = L.pos[static_cast<std::size_t>(tail)];
  const int s = std::min(ph, pt);
  const int e = std::max(ph, pt) + 1;
  if (s < dest || !L.clean(s, e)) return std::nullopt;
  if (s == dest && ph == s) return std::nullopt;  // already in place
  return segment_move(s, e, dest, ph != s);
}

// Moves the main loop actually spends from `v`, or nullopt if it cannot run.
std::optional<int> main_loop_moves(std::vector<int> v) {
  int count = 0;
  try {
    while (!is_identity(v)) {
      const SortStep s = plan_step_values(v, Mode::Linear);
      for (const Move& m : s.moves) apply_move_inplace(v, m);
      count += static_cast<int>(s.moves.size());
    }
  } catch (const InvariantError&) {
    return std::nullopt;
  }
  return count;
}

std::optional<Opening> judge_opening(const std::vector<int>& w, std::vector<Move> moves, bool exact = false) {
  const int m = static_cast<int>(w.size());
  std::vector<int> after = w;
  for (const Move& mv : moves) apply_move_inplace(after, mv);
  if (after[0] != 1 || after[1] != 2) return std::nullopt;
  const int t = static_cast<int>(moves.size());
  const int budget = 2 * m / 3;
  const int loop_cost = t + (weight(after, Mode::Linear).value - 3) / 3;
  if (loop_cost <= budget) return Opening{std::move(moves), true};
  int stripped = 0;
  while (stripped < m && after[static_cast<std::size_t>(stripped)] == stripped + 1) ++stripped;
  if (t + 2 * (m - stripped) / 3 <= budget) return Opening{std::move(moves), false};
  if (exact) {
    if (auto spent = main_loop_moves(after); spent && t + *spent <= budget) return Opening{std::move(moves), true};
  }
  return std::nullopt;
}

// The segment holding `value` (at one of its ends) moved to `dest`, value first.
std::optional<Move> own_segment_move(const Layout& L, int value, int dest) {
  const Segment& g = L.segment_of_value(value);
  const int pv = L.pos[static_cast<std::size_t>(value)];
  if (g.begin < dest || (pv != g.begin && pv != g.end - 1)) return std::nullopt;
  if (g.begin == dest && pv == g.begin) return std::nullopt;
  return segment_move(g.begin, g.end, dest, pv != g.begin);
}

// Every clean string lying at or after `dest` with `value` at one end, moved
// to `dest` with value first.
std::vector<Move> strings_ending_in(const Layout& L, int value, int dest) {
  std::vector<Move> out;
  const Segment& g = L.segment_of_value(value);
  const int pv = L.pos[static_cast<std::size_t>(value)];
  if (pv == g.begin) {
    for (std::size_t sg = static_cast<std::size_t>(L.d.segment_of[static_cast<std::size_t>(pv)]); sg < L.d.segments.size(); ++sg) {
      const int e = L.d.segments[sg].end;
      if (pv >= dest && !(pv == dest)) out.push_back(segment_move(pv, e, dest, false));
    }
  }
  if (pv == g.end - 1) {
    for (int sg = L.d.segment_of[static_cast<std::size_t>(pv)]; sg >= 0; --sg) {
      const int s = L.d.segments[static_cast<std::size_t>(sg)].begin;
      if (s < dest) break;
      if (pv + 1 - s >= 2 || s != dest) out.push_back(segment_move(s, pv + 1, dest, true));
    }
  }
  return out;
}

std::optional<Opening> choose_opening(const std::vector<int>& w) {
  const Layout L(w, Mode::Linear);
  const int a = w[0];

  // First move: the string from 1 to a' to the front, else 1's own segment.
  std::vector<Move> firsts;
  for (int a_next : {L.pred(a), L.succ(a)})
    if (auto mv = string_move(L, 1, a_next, 0)) firsts.push_back(*mv);
  if (auto mv = own_segment_move(L, 1, 0)) firsts.push_back(*mv);

  for (const Move& first : firsts) {
    const Layout L1(applied(w, first), Mode::Linear);
    const int b = L1.v[1];
    if (b == 2) {
      if (auto o = judge_opening(w, {first})) return o;
      continue;
    }
    // Second move: the string from 2 to b' between 1 and b, else 2's own segment.
    std::vector<Move> seconds;
    for (int b_next : {L1.pred(b), L1.succ(b)})
      if (b_next != 1)
        if (auto mv = string_move(L1, 2, b_next, 1)) seconds.push_back(*mv);
    if (auto mv = own_segment_move(L1, 2, 1)) seconds.push_back(*mv);
    for (const Move& second : seconds)
      if (auto o = judge_opening(w, {first, second})) return o;
  }

  // Wider search, reached when the candidates above split blocks or fall
  // short (typically a == n, which has no upper neighbour): any clean string
  // ending in 1 goes to the front, then any clean string ending in 2 goes
  // right behind it.
  for (const Move& first : strings_ending_in(L, 1, 0)) {
    const Layout L1(applied(w, first), Mode::Linear);
    if (L1.v[1] == 2) {
      if (auto o = judge_opening(w, {first}, true)) return o;
      continue;
    }
    for (const Move& second : strings_ending_in(L1, 2, 1))
      if (auto o = judge_opening(w, {first, second}, true)) return o;
  }

  return std::nullopt;
}

}  // namespace

SortStep plan_step(const Permutation& p, Mode mode) { return plan_step_values(p.vector(), mode); }

SortResult sort_basic(const Permutation& p) {
  TraceBuilder tb(p);
  const int n = p.size();
  if (!is_identity(p) && n >= 2) {
    {
      const Layout L(tb.values(), Mode::Circular);
      const Segment& front = L.d.segments.front();
      std::vector<Move> opening;
      if (front.is_block() && front.orientation == Orientation::Decreasing) {
        opening.push_back(Move::reverse(0, front.end));
      } else if (!front.is_block()) {
        const int x = L.succ(L.v[0]);
        const Segment& X = L.segment_of_value(x);
        opening.push_back(segment_move(X.begin, X.end, 1, L.pos[static_cast<std::size_t>(x)] != X.begin));
      }
      tb.add(opening, StepCategory::Opening, gain_of(tb.values(), opening, Mode::Circular));
    }
    while (weight(tb.values(), Mode::Circular).value > 3) {
      SortStep s = plan_step_values(tb.values(), Mode::Circular);
      tb.add(s.moves, s.category, s.claimed_gain);
    }
    if (!is_identity(tb.values())) {
      const auto& v = tb.values();
      const int one = static_cast<int>(std::find(v.begin(), v.end(), 1) - v.begin());
      std::vector<Move> closing{{0, one, n, Variant::Swap}};
      tb.add(closing, StepCategory::Closing, gain_of(v, closing, Mode::Circular));
    }
  }
  return tb.finish(Algorithm::Basic);
}

SortResult sort_refined(const Permutation& p) {
  TraceBuilder tb(p);
  const int n = p.size();
  int offset = 0;
  for (;;) {
    while (offset < n && tb.values()[static_cast<std::size_t>(offset)] == offset + 1) ++offset;
    if (offset == n) break;
    const std::vector<int> w = tb.window(offset);
    const Layout L(w, Mode::Linear);
    const Segment& one = L.segment_of_value(1);
    const int p1 = L.pos[1];

    if (one.is_block() || w[0] == 2) {
      // 1 leaves together with its block, or a == 2: either way at least
      // two values become a sorted prefix after one move.
      std::vector<Move> mv{segment_move(one.begin, one.end, 0, one.is_block() && p1 != one.begin)};
      tb.add(mv, StepCategory::SpecialOpening, gain_of(w, mv, Mode::Linear), offset);
      continue;
    }

    auto opening = choose_opening(w);
    if (!opening) fail("no opening fits the move budget", w);
    tb.add(opening->moves, StepCategory::Opening, gain_of(w, opening->moves, Mode::Linear), offset);
    if (!opening->run_main_loop) continue;

    for (;;) {
      const std::vector<int> cur = tb.window(offset);
      if (is_identity(cur)) break;
      SortStep s = plan_step_values(cur, Mode::Linear);
      tb.add(s.moves, s.category, s.claimed_gain, offset);
    }
    break;
  }
  return tb.finish(Algorithm::Refined);
}

SortResult sort_with(Algorithm a, const Permutation& p) {
  switch (a) {
    case Algorithm::Basic: return sort_basic(p);
    case Algorithm::Refined: return sort_refined(p);
    case Algorithm::Insertion: return sort_insertion(p);
    case Algorithm::Monotone: return sort_monotone(p);
  }
  return sort_refined(p);
}

}  // namespace cutpaste
