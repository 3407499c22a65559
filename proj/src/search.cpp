#include "coinweigh/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

#include "coinweigh/bounds.hpp"
#include "coinweigh/construct.hpp"

namespace coinweigh {

namespace {

using Clock = std::chrono::steady_clock;

constexpr Int kInf = std::numeric_limits<Int>::max() / 4;

struct SubtreeResult {
  Int best = kInf;
  std::set<std::vector<Int>> witnesses;
  std::uint64_t nodes = 0;
  bool complete = true;
};

// DFS over one separation point. Positions are assigned n, n-1, ..., 1;
// values strictly increase along that order. Right-pan positions (>= s)
// hold negatives bounded above by the ladder value -(p-s+1); left-pan
// positions hold nonnegatives.
class SubtreeSearch {
 public:
  SubtreeSearch(Int n, Int s, Objective obj, Int cap, const SearchOptions& opts,
                const Clock::time_point* deadline)
      : n_(n),
        s_(s),
        obj_(obj),
        cap_(cap),
        opts_(opts),
        deadline_(deadline),
        left_ladder_w_(comb3(s)),
        left_ladder_c_(triangular(s - 2)),
        a_(static_cast<size_t>(n), 0) {
    min_right_w_.assign(static_cast<size_t>(n) + 1, 0);
    min_right_c_.assign(static_cast<size_t>(n) + 1, 0);
    for (Int p = s; p <= n; ++p) {
      min_right_w_[p] = min_right_w_[p - 1] + p * (p - s + 1);
      min_right_c_[p] = min_right_c_[p - 1] + (p - s + 1);
    }
  }

  SubtreeResult run() {
    dfs(n_, -kInf, 0, 0, 0);
    return std::move(out_);
  }

 private:
  Int budget() const { return std::min(cap_, out_.best); }

  bool expired() {
    if (!deadline_) return false;
    if ((out_.nodes & 1023) == 0 && Clock::now() > *deadline_) timed_out_ = true;
    return timed_out_;
  }

  // Allowed final totals: {0,-1}, extended downward when non-tight
  // imbalances are included.
  bool total_allowed(Int t) const {
    return t == 0 || t == -1 || (opts_.include_nontight && t < -1);
  }

  void record(Int value) {
    if (value < out_.best) {
      out_.best = value;
      out_.witnesses.clear();
    }
    if (value == out_.best) {
      out_.witnesses.insert(a_);
      if (static_cast<Int>(out_.witnesses.size()) > opts_.witness_limit) {
        out_.witnesses.erase(std::prev(out_.witnesses.end()));
      }
    }
  }

  void leaf(Int sum_t, Int w_acc, Int c_acc) {
    if (!total_allowed(sum_t)) return;
    if (sum_t < -1) {
      // Beyond tight imbalances the downhill shape no longer guarantees
      // verifying; ask the oracle (the gap precondition weeds most out).
      Weighing w{a_};
      if (min_gap(w) < -sum_t) return;
      if (!is_verifying(w, opts_.oracle_cap).verifying) return;
    }
    record(obj_ == Objective::Weight ? w_acc : c_acc);
  }

  void dfs(Int p, Int prev, Int sum_t, Int w_acc, Int c_acc) {
    ++out_.nodes;
    if (expired()) {
      out_.complete = false;
      return;
    }
    if (p == 0) {
      leaf(sum_t, w_acc, c_acc);
      return;
    }
    const Int b = budget();
    if (p >= s_) {
      // Remaining: right positions s..p plus the whole left pan.
      const Int min_rw = min_right_w_[p];
      const Int min_rc = min_right_c_[p];
      if (obj_ == Objective::Weight) {
        if (w_acc + min_rw + left_ladder_w_ > b) return;
        const Int rem = b - w_acc;
        if (sum_t + (rem - min_rw) - min_rw < t_min()) return;
        if (sum_t + 2 * left_ladder_w_ - rem > 0) return;
      } else {
        if (c_acc + min_rc + left_ladder_c_ > b) return;
        const Int rem = b - c_acc;
        if (sum_t + (s_ - 1) * (rem - min_rc) - min_rw < t_min()) return;
        if (sum_t + left_ladder_w_ - n_ * (rem - left_ladder_c_) > 0) return;
      }
      // Enumerate a_p from the ladder value downward.
      const Int hi = -(p - s_ + 1);
      Int lo;
      if (obj_ == Objective::Weight) {
        lo = -((b - w_acc - min_right_w_[p - 1] - left_ladder_w_) / p);
      } else {
        lo = -(b - c_acc - min_right_c_[p - 1] - left_ladder_c_);
      }
      if (prev != -kInf) lo = std::max(lo, prev + 1);
      for (Int v = hi; v >= lo; --v) {
        a_[p - 1] = v;
        dfs(p - 1, v, sum_t + p * v, w_acc + p * (-v), c_acc + (-v));
        if (timed_out_) return;
      }
      return;
    }
    // Left pan. Remaining positions 1..p, all values above prev (or >= 0 at
    // the boundary).
    const Int floor = p == s_ - 1 ? 0 : prev + 1;
    Int min_lw, min_lc;
    if (p == s_ - 1) {
      min_lw = comb3(p + 1);
      min_lc = triangular(p - 1);
    } else {
      min_lw = prev * triangular(p) + comb3(p + 2);
      min_lc = prev * p + triangular(p);
    }
    if (obj_ == Objective::Weight) {
      if (w_acc + min_lw > b) return;
      if (sum_t + (b - w_acc) < t_min()) return;  // only nonnegative additions remain
      if (sum_t + min_lw > 0) return;
    } else {
      if (c_acc + min_lc > b) return;
      if (sum_t + p * (b - c_acc) < t_min()) return;
      if (sum_t + min_lw > 0) return;
    }
    Int hi;
    if (obj_ == Objective::Weight) {
      hi = (b - w_acc - comb3(p + 1)) / (p + triangular(p - 1));
    } else {
      hi = (b - c_acc - triangular(p - 1)) / p;
    }
    for (Int v = floor; v <= hi; ++v) {
      a_[p - 1] = v;
      dfs(p - 1, v, sum_t + p * v, w_acc + p * v, c_acc + v);
      if (timed_out_) return;
    }
  }

  Int t_min() const { return opts_.include_nontight ? -kInf : -1; }

  const Int n_;
  const Int s_;
  const Objective obj_;
  const Int cap_;
  const SearchOptions& opts_;
  const Clock::time_point* deadline_;
  const Int left_ladder_w_;
  const Int left_ladder_c_;
  std::vector<Int> a_;
  std::vector<Int> min_right_w_;
  std::vector<Int> min_right_c_;
  SubtreeResult out_;
  bool timed_out_ = false;
};

SearchResult merge_subtrees(Int n, Objective obj, Restriction restriction,
                            const std::vector<SubtreeResult>& parts, Int witness_limit) {
  SearchResult result;
  result.n = n;
  result.objective = obj;
  result.restriction = restriction;
  result.proven = true;
  Int best = kInf;
  for (const auto& part : parts) {
    result.nodes_explored += part.nodes;
    result.proven = result.proven && part.complete;
    best = std::min(best, part.best);
  }
  if (best == kInf) {
    throw CapExceeded("no verifying weighing within the objective cap");
  }
  std::set<std::vector<Int>> merged;
  for (const auto& part : parts) {
    if (part.best != best) continue;
    for (const auto& w : part.witnesses) {
      merged.insert(w);
      if (static_cast<Int>(merged.size()) > witness_limit) merged.erase(std::prev(merged.end()));
    }
  }
  result.optimum = best;
  for (const auto& m : merged) result.witnesses.push_back(Weighing{m});
  return result;
}

}  // namespace

Int default_search_cap(Int n, Objective objective) {
  if (objective == Objective::Weight) return closed_form_min_weight(n);
  const Construction c = construct_weight_optimal(n);
  return classify(c.weighing).total_coins;
}

SearchResult search_downhill(Int n, Objective objective, Int cap, const SearchOptions& options) {
  if (n < 2) throw OutOfRange("need n >= 2");
  if (cap < 0) throw OutOfRange("cap must be nonnegative");
  if (options.include_nontight && n > options.oracle_cap) {
    throw TooLarge("non-tight search verifies via the oracle and needs n <= oracle cap");
  }

  std::optional<Clock::time_point> deadline;
  if (options.timeout_seconds > 0) {
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(options.timeout_seconds));
  }

  // Subtrees never share their incumbents, so node counts and witnesses are
  // identical no matter how many workers run.
  std::vector<Int> seps;
  for (Int s = 2; s <= n; ++s) {
    if (objective == Objective::Weight) {
      const BoundingWeights bw = bounding_weights(s, n);
      const Int lower = options.include_nontight
                            ? std::max(2 * bw.w_left, bw.w_left + bw.w_right)
                            : bw.w_bounding;
      if (lower > cap) continue;
    } else {
      if (coin_floor(s, n) > cap) continue;
    }
    seps.push_back(s);
  }

  std::vector<SubtreeResult> parts(seps.size());
  unsigned workers = options.threads > 0 ? static_cast<unsigned>(options.threads)
                                         : std::max(1u, std::thread::hardware_concurrency());
  if (seps.size() < workers) workers = static_cast<unsigned>(std::max<size_t>(seps.size(), 1));
  std::atomic<size_t> next{0};
  auto drain = [&]() {
    for (;;) {
      const size_t idx = next.fetch_add(1);
      if (idx >= seps.size()) return;
      SubtreeSearch search(n, seps[idx], objective, cap, options,
                           deadline ? &*deadline : nullptr);
      parts[idx] = search.run();
    }
  };
  if (workers <= 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(drain);
    for (auto& t : pool) t.join();
  }

  const Restriction restriction = options.include_nontight
                                      ? Restriction::DownhillIncludeNonTight
                                      : Restriction::DownhillBalancedOrTight;
  SearchResult result = merge_subtrees(n, objective, restriction, parts, options.witness_limit);
  return result;
}

SearchResult search_all_oracle(Int n, Objective objective, Int multiplicity_cap,
                               Int objective_cap, const SearchOptions& options) {
  if (n < 2) throw OutOfRange("need n >= 2");
  if (n > 6) throw TooLarge("oracle search is limited to n <= 6");
  if (multiplicity_cap < 0 || objective_cap < 0) throw OutOfRange("caps must be nonnegative");

  SubtreeResult part;
  std::vector<Int> a(static_cast<size_t>(n), 0);
  Int best = kInf;

  // Positions assigned n..1 so the heaviest (most constrained) coins come
  // first under the weight objective.
  auto rec = [&](auto&& self, Int p, Int w_acc, Int c_acc) -> void {
    ++part.nodes;
    const Int b = std::min(objective_cap, best);
    if ((objective == Objective::Weight ? w_acc : c_acc) > b) return;
    if (p == 0) {
      Weighing w{a};
      const VerifyReport report = is_verifying_bruteforce(w, options.oracle_cap);
      if (!report.verifying) return;
      const Int value = objective == Objective::Weight ? w_acc : c_acc;
      if (value < best) {
        best = value;
        part.best = value;
        part.witnesses.clear();
      }
      if (value == best) {
        part.witnesses.insert(a);
        if (static_cast<Int>(part.witnesses.size()) > options.witness_limit) {
          part.witnesses.erase(std::prev(part.witnesses.end()));
        }
      }
      return;
    }
    for (Int v = -multiplicity_cap; v <= multiplicity_cap; ++v) {
      const Int wv = p * (v < 0 ? -v : v);
      const Int cv = v < 0 ? -v : v;
      if ((objective == Objective::Weight ? w_acc + wv : c_acc + cv) > b) continue;
      a[p - 1] = v;
      self(self, p - 1, w_acc + wv, c_acc + cv);
    }
    a[p - 1] = 0;
  };
  rec(rec, n, 0, 0);

  return merge_subtrees(n, objective, Restriction::AllWeighingsViaOracle, {part},
                        options.witness_limit);
}

const char* objective_name(Objective o) {
  return o == Objective::Weight ? "weight" : "coins";
}

const char* restriction_name(Restriction r) {
  switch (r) {
    case Restriction::DownhillBalancedOrTight: return "downhill-balanced-or-tight";
    case Restriction::DownhillIncludeNonTight: return "downhill-include-nontight";
    case Restriction::AllWeighingsViaOracle: return "all-weighings-via-oracle";
  }
  return "?";
}

}  // namespace coinweigh
