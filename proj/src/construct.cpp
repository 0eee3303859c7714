#include "gtdraw/construct.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gtdraw/sweep.hpp"
#include "gtdraw/triangles.hpp"

namespace gtdraw {

namespace {

Rat twisted_radius(int i) {
  Rat p(1);
  for (int k = 0; k < i; ++k) p = p / Rat(4);
  return Rat(i) + p;
}

}  // namespace

Drawing twisted(int n) {
  if (n < 3) throw Error("twisted drawing needs n >= 3");
  std::vector<Pt> vp;
  for (int i = 1; i <= n; ++i) vp.push_back({Rat(i, n + 1), twisted_radius(i)});
  std::vector<Arc> arcs;
  for (const EdgeId& e : all_edges(n)) {
    Pt from{Rat(e.v, n + 1), twisted_radius(e.v)};
    Pt to{Rat(e.u, n + 1) + Rat(1), twisted_radius(e.u)};
    arcs.push_back({e, {std::move(from), std::move(to)}, true});
  }
  Drawing d = Drawing::make(n, Mode::kCylinder, std::move(vp), std::move(arcs));
  if (!validate_simple(d).ok()) throw Error("internal: twisted drawing failed validation");
  if (!validate_gt(d).is_gt) throw Error("internal: twisted drawing is not generalized twisted");
  return d;
}

// ---------------------------------------------------------------------------
// Word search. A drawing on vertices 1..m+1 restricted to 1..m is again a
// valid word, so every word arises by inserting the last vertex into a word
// one size down: pick where the new departure block enters the radial order,
// then weave the new arcs through the old event sequence one crossing at a
// time. The searches below (exhaustive enumeration, seeded sampling) both run
// on that insertion step.
// ---------------------------------------------------------------------------

namespace {

// The two words on three vertices (mirror images); no pair may cross, so the
// radial order alone distinguishes them.
std::vector<SweepWord> base_words() {
  SweepWord a;
  a.n = 3;
  a.pi0 = {EdgeId(1, 2), EdgeId(1, 3), EdgeId(2, 3)};
  a.events = {vert_event(1, {}), vert_event(2, {EdgeId(1, 2)}),
              vert_event(3, {EdgeId(1, 3), EdgeId(2, 3)}, 1)};
  SweepWord b;
  b.n = 3;
  b.pi0 = {EdgeId(2, 3), EdgeId(1, 3), EdgeId(1, 2)};
  b.events = {vert_event(1, {}), vert_event(2, {EdgeId(1, 2)}),
              vert_event(3, {EdgeId(2, 3), EdgeId(1, 3)}, 0)};
  for (const SweepWord& w : {a, b})
    if (!validate_sweep_word(w).ok()) throw Error("internal: base word does not validate");
  return {a, b};
}

// Parent word digested for the insertion step: the radial order just after
// its last vertex event, every crossing with the section it falls in (number
// of vertex events before it) and its radial position there, plus the
// same-section predecessors each crossing must wait for. With `chain` the
// predecessor is simply the previous crossing of the section (replay in the
// recorded order only); otherwise crossings whose positions are two or more
// apart may be replayed in either order — swapping them slides two crossings
// past each other angularly, which changes nothing about the drawing.
struct ParentDigest {
  int m = 0;
  std::vector<EdgeId> start;
  std::vector<std::vector<EdgeId>> depart;  // [v-1]
  int last_rank = 0;
  struct Cross {
    EdgeId a, b;
    int sec = 0;
    int pos = 0;
    std::vector<int> pred;
  };
  std::vector<Cross> cross;
  std::vector<std::vector<int>> sec;  // [1..m] -> crossing indices in word order
};

ParentDigest digest(const SweepWord& w, bool chain) {
  ParentDigest d;
  d.m = w.n;
  d.depart.resize(w.n);
  d.sec.assign(w.n + 1, {});
  std::vector<EdgeId> active = w.pi0;
  int seen = 0;
  for (const SweepEvent& ev : w.events) {
    if (ev.kind == SweepEvent::Kind::kVert) {
      int lo = -1, cnt = 0;
      for (int t = 0; t < static_cast<int>(active.size()); ++t) {
        if (active[t].u == ev.vertex) {
          if (lo < 0) lo = t;
          ++cnt;
        }
      }
      int p = cnt > 0 ? lo : *ev.rank;
      if (cnt > 0) active.erase(active.begin() + lo, active.begin() + lo + cnt);
      active.insert(active.begin() + p, ev.depart.begin(), ev.depart.end());
      d.depart[ev.vertex - 1] = ev.depart;
      if (ev.vertex == w.n) d.last_rank = p;
      ++seen;
      if (seen == w.n) d.start = active;
    } else {
      if (seen == 0)
        throw Error("internal: insertion expects no crossings before the first vertex");
      int ia = -1, ib = -1;
      for (int t = 0; t < static_cast<int>(active.size()); ++t) {
        if (active[t] == ev.a) ia = t;
        if (active[t] == ev.b) ib = t;
      }
      if (ia < 0 || ib < 0 || std::abs(ia - ib) != 1)
        throw Error("internal: crossing of a non-adjacent pair in a digested word");
      ParentDigest::Cross c;
      c.a = ev.a;
      c.b = ev.b;
      c.sec = seen;
      c.pos = std::min(ia, ib);
      for (int j : d.sec[seen]) {
        if (chain || std::abs(d.cross[j].pos - c.pos) <= 1) c.pred.push_back(j);
      }
      std::swap(active[ia], active[ib]);
      d.sec[seen].push_back(static_cast<int>(d.cross.size()));
      d.cross.push_back(std::move(c));
    }
  }
  return d;
}

struct SearchOptions {
  // Emit one representative per angular interleaving: reorderable crossings
  // are replayed smallest radial position first, and the freed orderings are
  // pruned. Off: replay old crossings exactly as recorded, no pruning.
  bool normalize = true;
  std::mt19937_64* rng = nullptr;            // shuffles every choice point
  std::atomic<long long>* budget = nullptr;  // one unit per event placed
  int block_tries = 0;  // with rng: sampled block orders when m! is too big
  // Nodes allowed below one (rank, block order) choice before giving up on
  // it and moving to the next; 0 = unlimited. Refuting a bad block order by
  // exhausting its interleavings costs far more than skipping it.
  long long per_block_cap = 0;
  // Instrumentation: pin the insertion to one rank / one block order.
  int fixed_rank = -1;
  const std::vector<EdgeId>* fixed_order = nullptr;
};

// Inserts vertex m+1 into a parent word on 1..m and emits every resulting
// word on 1..m+1 (per options) until the sink says stop.
class Inserter {
 public:
  Inserter(const SweepWord& parent, const SearchOptions& opt)
      : opt_(opt), pd_(digest(parent, !opt.normalize)), m_(parent.n), cn_(parent.n + 1) {
    for (int u = 1; u <= m_; ++u) fresh_.emplace_back(u, cn_);
    ec_ = edge_count(cn_);
    crossed_.assign(static_cast<size_t>(ec_) * ec_, 0);
    remaining_.assign(m_ + 1, 0);
    for (int s = 1; s <= m_; ++s) remaining_[s] = static_cast<int>(pd_.sec[s].size());
    fired_.assign(pd_.cross.size(), 0);
    active_ = pd_.start;
  }

  bool run(const std::function<bool(SweepWord&&)>& sink) {
    sink_ = &sink;
    dfs(kStagePre, std::nullopt);
    return stopped_ && !aborted_;
  }

  bool aborted() const { return aborted_; }
  // Some subtree was cut off by the per-block cap, so an empty run does not
  // prove the parent has no children.
  bool block_capped() const { return block_capped_any_; }

 private:
  // Rebuild of one full turn, starting just after the parent's last vertex
  // event: optionally some of the parent's final-section crossings, then the
  // insertion, then the rest of that section plus new crossings, then the
  // ray, then vertices 1..m with their sections. Old strands close up on
  // their own; the new strands are all gone once vertex m is swept.
  // Stage 0: before the insertion. Stage 1: after it, up to the ray.
  // Stage i+1 for i >= 1: the section swept after vertex i.
  static constexpr int kStagePre = 0;
  static constexpr int kStagePost = 1;

  int parent_section(int stage) const { return stage <= kStagePost ? m_ : stage - 1; }

  bool spend() {
    if (!opt_.budget) return true;
    const long long before = opt_.budget->fetch_sub(1, std::memory_order_relaxed);
    if (before <= 0) {
      aborted_ = true;
      stopped_ = true;
      return false;
    }
    if (opt_.per_block_cap > 0 && block_start_ - (before - 1) > opt_.per_block_cap) {
      block_abort_ = true;
      block_capped_any_ = true;
      return false;
    }
    return true;
  }

  bool rule_ok(int p, const std::optional<int>& last) const {
    return !opt_.normalize || !last || p >= *last - 1;
  }

  bool crossed(const EdgeId& a, const EdgeId& b) const {
    return crossed_[static_cast<size_t>(edge_index(a, cn_)) * ec_ + edge_index(b, cn_)] != 0;
  }
  void set_crossed(const EdgeId& a, const EdgeId& b, uint8_t on) {
    crossed_[static_cast<size_t>(edge_index(a, cn_)) * ec_ + edge_index(b, cn_)] = on;
    crossed_[static_cast<size_t>(edge_index(b, cn_)) * ec_ + edge_index(a, cn_)] = on;
  }

  struct Move {
    enum Kind { kOld, kNew, kVert, kInsert } kind;
    int arg = 0;  // kOld: crossing index; kNew: lower position; kInsert: rank
  };

  void collect(int stage, const std::optional<int>& last, std::vector<Move>& out) const {
    const int ps = parent_section(stage);
    for (int idx : pd_.sec[ps]) {
      if (fired_[idx]) continue;
      const ParentDigest::Cross& c = pd_.cross[idx];
      bool ready = true;
      for (int j : c.pred) {
        if (!fired_[j]) {
          ready = false;
          break;
        }
      }
      if (!ready) continue;
      int ia = -1, ib = -1;
      for (int t = 0; t < static_cast<int>(active_.size()); ++t) {
        if (active_[t] == c.a) ia = t;
        if (active_[t] == c.b) ib = t;
      }
      if (ia < 0 || ib < 0) throw Error("internal: old strand missing during insertion");
      if (std::abs(ia - ib) != 1) continue;  // a new strand sits in between
      if (!rule_ok(std::min(ia, ib), last)) continue;
      out.push_back({Move::kOld, idx});
    }
    if (stage >= kStagePost) {
      for (int p = 0; p + 1 < static_cast<int>(active_.size()); ++p) {
        const EdgeId& a = active_[p];
        const EdgeId& b = active_[p + 1];
        if ((a.v == cn_) == (b.v == cn_)) continue;  // exactly one fresh strand
        if (a.adjacent(b)) continue;
        if (crossed(a, b)) continue;
        if (!rule_ok(p, last)) continue;
        out.push_back({Move::kNew, p});
      }
    }
    if (stage == kStagePre) {
      for (int r = 0; r <= static_cast<int>(active_.size()); ++r) {
        if (opt_.fixed_rank >= 0 && r != opt_.fixed_rank) continue;
        out.push_back({Move::kInsert, r});
      }
    } else if (remaining_[parent_section(stage)] == 0) {
      const int v = stage == kStagePost ? 1 : stage;  // next vertex to sweep
      int lo = -1, hi = -1, cnt = 0;
      for (int t = 0; t < static_cast<int>(active_.size()); ++t) {
        if (active_[t].u == v) {
          if (lo < 0) lo = t;
          hi = t;
          ++cnt;
        }
      }
      if (cnt != cn_ - v) throw Error("internal: arrival went missing during insertion");
      if (hi - lo + 1 == cnt && (v != m_ || lo == pd_.last_rank)) out.push_back({Move::kVert, v});
    }
  }

  void dfs(int stage, std::optional<int> last) {
    std::vector<Move> moves;
    collect(stage, last, moves);
    if (opt_.rng) {
      std::shuffle(moves.begin(), moves.end(), *opt_.rng);
      // Insertions at the radial extremes succeed far more often than the
      // rest; scan them first so the common case stays cheap.
      const int top = static_cast<int>(active_.size());
      std::stable_partition(moves.begin(), moves.end(), [&](const Move& mv) {
        return mv.kind == Move::kInsert && (mv.arg == 0 || mv.arg == top);
      });
    }
    for (const Move& mv : moves) {
      if (stopped_ || block_abort_) return;
      switch (mv.kind) {
        case Move::kOld: {
          if (!spend()) return;
          const ParentDigest::Cross& c = pd_.cross[mv.arg];
          int ia = find_pos(c.a), ib = find_pos(c.b);
          std::swap(active_[ia], active_[ib]);
          fired_[mv.arg] = 1;
          --remaining_[c.sec];
          cycle_.push_back(cross_event(c.a, c.b));
          dfs(stage, std::min(ia, ib));
          cycle_.pop_back();
          ++remaining_[c.sec];
          fired_[mv.arg] = 0;
          std::swap(active_[ia], active_[ib]);
          break;
        }
        case Move::kNew: {
          if (!spend()) return;
          const int p = mv.arg;
          EdgeId a = active_[p], b = active_[p + 1];
          set_crossed(a, b, 1);
          std::swap(active_[p], active_[p + 1]);
          cycle_.push_back(cross_event(a, b));
          dfs(stage, p);
          cycle_.pop_back();
          std::swap(active_[p], active_[p + 1]);
          set_crossed(a, b, 0);
          break;
        }
        case Move::kInsert:
          insert_blocks(mv.arg);
          if (block_abort_) throw Error("internal: block cap leaked out of the insertion");
          break;
        case Move::kVert: {
          if (!spend()) return;
          const int v = mv.arg;
          int lo = -1, cnt = 0;
          for (int t = 0; t < static_cast<int>(active_.size()); ++t) {
            if (active_[t].u == v) {
              if (lo < 0) lo = t;
              ++cnt;
            }
          }
          // The emitted word starts at the ray, which sits just before this
          // event when v == 1: snapshot the radial order as its pi0.
          if (v == 1) {
            ray_order_ = active_;
            ray_at_ = static_cast<int>(cycle_.size());
          }
          std::vector<EdgeId> block(active_.begin() + lo, active_.begin() + lo + cnt);
          active_.erase(active_.begin() + lo, active_.begin() + lo + cnt);
          const std::vector<EdgeId>& dep = pd_.depart[v - 1];
          active_.insert(active_.begin() + lo, dep.begin(), dep.end());
          cycle_.push_back(vert_event(v, dep));
          if (v == m_) {
            finish();
          } else {
            dfs(v + 1, std::nullopt);
          }
          cycle_.pop_back();
          active_.erase(active_.begin() + lo, active_.begin() + lo + dep.size());
          active_.insert(active_.begin() + lo, block.begin(), block.end());
          break;
        }
      }
      if (stopped_ || block_abort_) return;
    }
  }

  void insert_blocks(int rank) {
    if (opt_.fixed_order) {
      try_block(rank, *opt_.fixed_order);
      return;
    }
    std::vector<EdgeId> order = fresh_;
    if (!opt_.rng) {
      do {
        if (stopped_) return;
        try_block(rank, order);
      } while (std::next_permutation(order.begin(), order.end()));
      return;
    }
    if (m_ <= 5) {  // try every block order, in random order
      std::vector<std::vector<EdgeId>> all;
      do {
        all.push_back(order);
      } while (std::next_permutation(order.begin(), order.end()));
      std::shuffle(all.begin(), all.end(), *opt_.rng);
      for (const auto& o : all) {
        if (stopped_) return;
        try_block(rank, o);
      }
      return;
    }
    // Workable block orders are rare and hug the two monotone ones: the new
    // strands have to leave the vertex nested the way they will die. Try
    // ascending, descending, and a few local perturbations of each.
    std::vector<std::vector<EdgeId>> cands;
    cands.push_back(order);
    cands.emplace_back(order.rbegin(), order.rend());
    for (int t = 2; t < opt_.block_tries; ++t) {
      std::vector<EdgeId> o = (*opt_.rng)() & 1 ? cands[0] : cands[1];
      const int swaps = 1 + static_cast<int>((*opt_.rng)() % 3);
      for (int k = 0; k < swaps; ++k) {
        const size_t i = (*opt_.rng)() % (o.size() - 1);
        std::swap(o[i], o[i + 1]);
      }
      cands.push_back(std::move(o));
    }
    std::shuffle(cands.begin(), cands.end(), *opt_.rng);
    for (const auto& o : cands) {
      if (stopped_) return;
      try_block(rank, o);
    }
  }

  void try_block(int rank, const std::vector<EdgeId>& order) {
    if (opt_.per_block_cap > 0 && opt_.budget) block_start_ = opt_.budget->load();
    if (!spend()) return;
    active_.insert(active_.begin() + rank, order.begin(), order.end());
    cycle_.push_back(vert_event(cn_, order, rank));
    dfs(kStagePost, std::nullopt);
    cycle_.pop_back();
    active_.erase(active_.begin() + rank, active_.begin() + rank + m_);
    block_abort_ = false;  // this choice is done; the next one starts fresh
  }

  void finish() {
    if (active_ != pd_.start) throw Error("internal: insertion did not close up");
    SweepWord w;
    w.n = cn_;
    w.pi0 = ray_order_;
    w.events.reserve(cycle_.size());
    w.events.insert(w.events.end(), cycle_.begin() + ray_at_, cycle_.end());
    w.events.insert(w.events.end(), cycle_.begin(), cycle_.begin() + ray_at_);
    if (!validate_sweep_word(w).ok()) throw Error("internal: emitted word does not validate");
    if ((*sink_)(std::move(w))) stopped_ = true;
  }

  int find_pos(const EdgeId& e) const {
    for (int t = 0; t < static_cast<int>(active_.size()); ++t)
      if (active_[t] == e) return t;
    throw Error("internal: strand not active");
  }

  SearchOptions opt_;
  ParentDigest pd_;
  int m_, cn_, ec_ = 0;
  std::vector<EdgeId> fresh_;
  std::vector<EdgeId> active_;
  std::vector<uint8_t> fired_;
  std::vector<uint8_t> crossed_;
  std::vector<int> remaining_;
  std::vector<SweepEvent> cycle_;
  std::vector<EdgeId> ray_order_;
  int ray_at_ = 0;
  const std::function<bool(SweepWord&&)>* sink_ = nullptr;
  bool stopped_ = false;
  bool aborted_ = false;
  bool block_abort_ = false;
  bool block_capped_any_ = false;
  long long block_start_ = 0;
};

std::string encode_word(const SweepWord& w) {
  std::string s = std::to_string(w.n);
  s += '|';
  for (const EdgeId& e : w.pi0) {
    s += e.str();
    s += ',';
  }
  s += '|';
  for (const SweepEvent& ev : w.events) {
    if (ev.kind == SweepEvent::Kind::kVert) {
      s += 'v';
      s += std::to_string(ev.vertex);
      if (ev.rank) {
        s += '@';
        s += std::to_string(*ev.rank);
      }
      s += '(';
      for (const EdgeId& e : ev.depart) {
        s += e.str();
        s += ',';
      }
      s += ')';
    } else {
      s += ev.a.str();
      s += 'x';
      s += ev.b.str();
      s += ';';
    }
  }
  return s;
}

std::string encode_pairs(const CrossingSet& cs, int n) {
  std::string s = std::to_string(n);
  s += ':';
  for (const auto& [e, f] : cs.pairs) {
    s += e.str();
    s += 'x';
    s += f.str();
    s += ';';
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Canonical keys
// ---------------------------------------------------------------------------

namespace {

using QuadList = std::vector<std::array<int, 4>>;

QuadList relabel(const std::vector<std::pair<EdgeId, EdgeId>>& pairs,
                 const std::vector<int>& newlabel) {
  QuadList out;
  out.reserve(pairs.size());
  for (const auto& [e, f] : pairs) {
    int a = newlabel[e.u - 1], b = newlabel[e.v - 1];
    if (a > b) std::swap(a, b);
    int c = newlabel[f.u - 1], d = newlabel[f.v - 1];
    if (c > d) std::swap(c, d);
    std::array<int, 4> q{a, b, c, d};
    if (c < a || (c == a && d < b)) q = {c, d, a, b};
    out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Splits 1..n by an iterated structural signature: how often a vertex shares
// an edge, or faces across a crossing, a vertex of each current class. Class
// ids are ranks of the signature values, so the partition does not depend on
// the input labels.
std::vector<int> refine(const std::vector<std::pair<EdgeId, EdgeId>>& pairs, int n,
                        std::vector<int> cls) {
  for (;;) {
    std::vector<std::vector<long long>> sig(n);
    for (int v = 0; v < n; ++v) sig[v].push_back(cls[v]);
    for (const auto& [e, f] : pairs) {
      auto feed = [&](int x, int mate, int o1, int o2) {
        long long lo = std::min(cls[o1 - 1], cls[o2 - 1]);
        long long hi = std::max(cls[o1 - 1], cls[o2 - 1]);
        sig[x - 1].push_back(((cls[mate - 1] * (n + 1LL) + lo) * (n + 1) + hi) + (n + 1LL));
      };
      feed(e.u, e.v, f.u, f.v);
      feed(e.v, e.u, f.u, f.v);
      feed(f.u, f.v, e.u, e.v);
      feed(f.v, f.u, e.u, e.v);
    }
    for (auto& s : sig) std::sort(s.begin() + 1, s.end());
    std::vector<std::vector<long long>> uniq(sig.begin(), sig.end());
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) -
                                 uniq.begin());
    if (next == cls) return cls;
    cls = std::move(next);
  }
}

// Scans the relabelings that respect the ordered partition `cls`; when the
// orbit is still too big, individualizes each vertex of the first
// non-singleton class in turn and recurses, keeping the overall minimum.
void scan_orbit(const std::vector<std::pair<EdgeId, EdgeId>>& pairs, int n,
                const std::vector<int>& cls, QuadList& best, bool& have) {
  std::vector<std::vector<int>> blocks;
  {
    const int k = *std::max_element(cls.begin(), cls.end()) + 1;
    blocks.resize(k);
    for (int v = 0; v < n; ++v) blocks[cls[v]].push_back(v + 1);
  }
  long long orbit = 1;
  for (const auto& b : blocks) {
    for (int t = 2; t <= static_cast<int>(b.size()) && orbit <= 100000; ++t) orbit *= t;
  }
  if (orbit > 100000) {
    for (const auto& b : blocks) {
      if (b.size() < 2) continue;
      for (int v : b) {
        std::vector<int> split(cls.begin(), cls.end());
        for (int u = 0; u < n; ++u)
          split[u] = 2 * split[u] + (u + 1 == v ? 0 : 1);  // v first within its class
        scan_orbit(pairs, n, refine(pairs, n, std::move(split)), best, have);
      }
      return;
    }
  }
  std::vector<std::vector<int>> arrange = blocks;
  std::vector<int> newlabel(n);
  for (;;) {
    int next = 1;
    for (const auto& b : arrange)
      for (int v : b) newlabel[v - 1] = next++;
    QuadList cand = relabel(pairs, newlabel);
    if (!have || cand < best) {
      best = std::move(cand);
      have = true;
    }
    size_t j = 0;
    while (j < arrange.size() && !std::next_permutation(arrange[j].begin(), arrange[j].end()))
      ++j;
    if (j == arrange.size()) return;
  }
}

}  // namespace

CanonicalKey canonical_key(const CrossingSet& cs, int n) {
  if (n < 1) throw Error("canonical key needs n >= 1");
  for (const auto& [e, f] : cs.pairs)
    if (e.v > n || f.v > n) throw Error("crossing names a vertex beyond n");
  QuadList best;
  bool have = false;
  if (n <= 8) {
    std::vector<int> newlabel(n);
    std::iota(newlabel.begin(), newlabel.end(), 1);
    do {
      QuadList cand = relabel(cs.pairs, newlabel);
      if (!have || cand < best) {
        best = std::move(cand);
        have = true;
      }
    } while (std::next_permutation(newlabel.begin(), newlabel.end()));
  } else {
    scan_orbit(cs.pairs, n, refine(cs.pairs, n, std::vector<int>(n, 0)), best, have);
  }
  std::string bytes = "n" + std::to_string(n) + ":";
  for (const auto& q : best) {
    bytes += std::to_string(q[0]) + "-" + std::to_string(q[1]) + "x" + std::to_string(q[2]) +
             "-" + std::to_string(q[3]) + ";";
  }
  return CanonicalKey{std::move(bytes)};
}

std::string short_hash(const CanonicalKey& k) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : k.bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = hex[h & 15];
    h >>= 4;
  }
  return s;
}

bool weakly_isomorphic(const Drawing& a, const Drawing& b) {
  if (a.n != b.n) throw Error("weak isomorphism compares drawings on the same vertex count");
  return canonical_key(crossing_set(a), a.n) == canonical_key(crossing_set(b), b.n);
}

// ---------------------------------------------------------------------------
// Enumeration and sampling
// ---------------------------------------------------------------------------

namespace {

struct ClassAcc {
  SweepWord witness;
  std::string witness_enc;
  long long words = 0;
};

EnumResult run_enumeration(int n, long long budget, int jobs, bool normalize,
                           const std::function<void(const SweepWord&)>* observe = nullptr) {
  if (n < 3 || n > 7) throw Error("class enumeration supports 3 <= n <= 7");
  if (budget <= 0) throw Error("enumeration budget must be positive");
  if (jobs < 1) jobs = 1;

  std::atomic<long long> nodes{budget};
  std::atomic<bool> cut_short{false};
  std::map<CanonicalKey, ClassAcc> acc;
  std::mutex acc_mu;

  auto record = [&](SweepWord&& w) {
    if (observe) (*observe)(w);
    static thread_local std::unordered_map<std::string, CanonicalKey> memo;
    const CrossingSet cs = word_crossing_set(w);
    const std::string raw = encode_pairs(cs, w.n);
    CanonicalKey key;
    if (auto it = memo.find(raw); it != memo.end()) {
      key = it->second;
    } else {
      key = canonical_key(cs, w.n);
      memo.emplace(raw, key);
    }
    std::string enc = encode_word(w);
    std::lock_guard<std::mutex> lk(acc_mu);
    ClassAcc& a = acc[key];
    ++a.words;
    if (a.witness_enc.empty() || enc < a.witness_enc) {
      a.witness_enc = std::move(enc);
      a.witness = std::move(w);
    }
  };

  std::vector<SweepWord> frontier = base_words();
  if (n == 3) {
    for (SweepWord& w : frontier) record(std::move(w));
  } else {
    std::function<bool(SweepWord&&, int)> down = [&](SweepWord&& w, int lev) -> bool {
      if (lev == n) {
        record(std::move(w));
        return cut_short.load(std::memory_order_relaxed);
      }
      SearchOptions so;
      so.normalize = normalize;
      so.budget = &nodes;
      Inserter ins(w, so);
      ins.run([&](SweepWord&& cw) { return down(std::move(cw), lev + 1); });
      if (ins.aborted()) cut_short.store(true);
      return cut_short.load(std::memory_order_relaxed);
    };

    // Expand the frontier a few levels sequentially until there are enough
    // independent subtrees to keep the workers busy.
    int seed_level = 3;
    while (jobs > 1 && seed_level < n - 1 &&
           frontier.size() < static_cast<size_t>(16 * jobs) && !cut_short.load()) {
      std::vector<SweepWord> next;
      for (SweepWord& w : frontier) {
        SearchOptions so;
        so.normalize = normalize;
        so.budget = &nodes;
        Inserter ins(w, so);
        ins.run([&](SweepWord&& cw) {
          next.push_back(std::move(cw));
          return false;
        });
        if (ins.aborted()) cut_short.store(true);
      }
      frontier = std::move(next);
      ++seed_level;
    }

    std::atomic<size_t> cursor{0};
    auto work = [&] {
      for (;;) {
        const size_t i = cursor.fetch_add(1);
        if (i >= frontier.size() || cut_short.load()) break;
        SweepWord w = frontier[i];
        down(std::move(w), seed_level);
      }
    };
    if (jobs == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
      for (std::thread& t : pool) t.join();
    }
  }

  EnumResult res;
  res.n = n;
  res.exhaustive = !cut_short.load();
  for (auto& [key, a] : acc) {
    Drawing d = realize(a.witness);
    if (!validate_simple(d).ok()) throw Error("internal: enumerated witness fails validation");
    GtVerdict gv = validate_gt(d);
    if (!gv.is_gt)
      throw Error("internal: enumerated witness is not generalized twisted: " + gv.reason);
    // The triangle machinery starts at n = 4; K_3 has its one triangle, which
    // is empty since there is no fourth vertex.
    int empty = 1;
    if (n >= 4) {
      SuiteReport sr = verify_suite(d, SuiteLevel::kGt);
      if (!sr.all_pass()) {
        for (const SuiteCheck& c : sr.checks)
          if (!c.pass) throw Error("internal: enumerated class fails check " + c.name);
        throw Error("internal: enumerated class fails the suite");
      }
      empty = count_empty(d);
    }
    res.classes.push_back({key, std::move(a.witness), a.words, empty});
  }
  return res;
}

}  // namespace

EnumResult enumerate_gt(int n, long long budget, int jobs) {
  return run_enumeration(n, budget, jobs, true);
}

namespace detail {

// Reference search without the interleaving normalization: old crossings are
// replayed exactly as recorded and no orderings are pruned. Much slower, kept
// to cross-check the enumerator.
EnumResult enumerate_gt_plain(int n, long long budget) {
  return run_enumeration(n, budget, 1, false);
}

EnumResult enumerate_gt_observed(int n, const std::function<void(const SweepWord&)>& fn) {
  if (n > 6) throw Error("observed enumeration is exhaustive only up to n = 6");
  EnumResult res = run_enumeration(n, kEnumBudgetDefault, 1, true, &fn);
  if (!res.exhaustive) throw Error("internal: observed enumeration ran out of budget");
  return res;
}

}  // namespace detail

SweepWord random_gt_word(int n, std::uint64_t seed, long long budget) {
  if (n < 3) throw Error("random sampling needs n >= 3");
  if (budget <= 0) throw Error("sampling budget must be positive");
  std::mt19937_64 rng(seed);
  long long remaining = budget;
  const std::vector<SweepWord> roots = base_words();
  auto out_of_budget = [&] {
    return SearchExhaustedError("no generalized-twisted word of K_" + std::to_string(n) +
                                " found within the node budget");
  };
  // Greedy descent with backtracking: grow the word one vertex at a time,
  // giving each insertion a few capped, freshly shuffled slices of the
  // budget. One doomed choice deep in a full backtracking search can cost
  // more than the whole budget; abandoning the slice and reshuffling
  // sidesteps that. A word that refuses to extend is usually the fault of
  // the previous insertion, so failure backs up one level and redraws. The
  // normalization stays on: it cuts the tree down without dropping any
  // crossing set, so sampled classes still cover everything reachable.
  std::vector<SweepWord> stack;
  stack.push_back(roots[rng() & 1]);
  while (stack.back().n < n) {
    const int lev = stack.back().n;
    std::optional<SweepWord> child;
    auto grab = [&child](SweepWord&& cw) {
      child = std::move(cw);
      return true;
    };
    // Past K_7 the shuffled slices rarely land and the fallback nearly
    // always does, so stop paying for diversity that is not there.
    const int tries = lev >= 8 ? 2 : 6;
    for (int r = 0; r < tries && !child; ++r) {
      if (remaining <= 0) throw out_of_budget();
      // Deeper insertions have longer completions and more ranks to scan,
      // so both caps scale with the current size.
      const long long base = lev >= 8 ? 500LL * lev * lev : 2'000LL * lev * lev;
      const long long cap = std::min(remaining, base << r);
      std::atomic<long long> slice{cap};
      SearchOptions so;
      so.rng = &rng;
      so.budget = &slice;
      so.block_tries = 12;
      so.per_block_cap = 300LL * lev;
      Inserter ins(stack.back(), so);
      ins.run(grab);
      remaining -= cap - std::max<long long>(slice.load(), 0);
      // Coming back empty without hitting any cap settles it for good:
      // the parent has no children; with sampled block orders or capped
      // subtrees a reshuffle could still find one, but spend that effort on
      // the fallback below or on a fresh parent instead.
      if (!child && !ins.aborted() && !ins.block_capped()) break;
    }
    // Fallback: the two radially extremal insertions complete from almost
    // every parent, and quickly, under the unshuffled move order -- the new
    // bundle goes innermost with its strands nested one way, or outermost
    // nested the other way. Try them with generous room before giving up.
    for (int f = 0; f < 2 && !child; ++f) {
      if (remaining <= 0) throw out_of_budget();
      std::vector<EdgeId> order;
      for (int u = 1; u <= lev; ++u) order.emplace_back(u, lev + 1);
      if (f == 0) std::reverse(order.begin(), order.end());
      const long long cap = std::min(remaining, 1'000'000LL);
      std::atomic<long long> slice{cap};
      SearchOptions so;
      so.budget = &slice;
      so.fixed_rank = f == 0 ? 0 : edge_count(lev);
      so.fixed_order = &order;
      Inserter ins(stack.back(), so);
      ins.run(grab);
      remaining -= cap - std::max<long long>(slice.load(), 0);
    }
    if (child) {
      stack.push_back(std::move(*child));
    } else {
      if (remaining <= 0) throw out_of_budget();
      if (stack.size() > 1)
        stack.pop_back();
      else
        stack.back() = roots[rng() & 1];
    }
  }
  return stack.back();
}

Drawing random_gt(int n, std::uint64_t seed) {
  SweepWord w = random_gt_word(n, seed);
  Drawing d = realize(w);
  if (!validate_simple(d).ok()) throw Error("internal: sampled drawing failed validation");
  if (!validate_gt(d).is_gt) throw Error("internal: sampled drawing is not generalized twisted");
  return d;
}


}  // namespace gtdraw
