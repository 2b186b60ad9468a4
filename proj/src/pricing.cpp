#include "listchroma/pricing.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

namespace listchroma {

namespace {

using Word = std::uint64_t;

class StableSetSearch {
 public:
  StableSetSearch(const Graph& graph, const PricingTask& task, bool early_exit,
                  const AbortCheck& abort)
      : early_exit_(early_exit), target_(task.threshold + kEps), abort_(abort) {
    const auto& pi = *task.pi;
    for (VertexId v : task.vertices)
      if (pi[v] > 1e-12) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](VertexId a, VertexId b) { return pi[a] > pi[b]; });
    const std::size_t m = order_.size();
    words_ = (m + 63) / 64;
    weight_.resize(m);
    later_compatible_.assign(m, std::vector<Word>(words_, 0));
    for (std::size_t p = 0; p < m; ++p) {
      weight_[p] = pi[order_[p]];
      for (std::size_t q = p + 1; q < m; ++q)
        if (!graph.adjacent(order_[p], order_[q])) later_compatible_[p][q / 64] |= Word{1} << (q % 64);
    }
  }

  StableSetResult run() {
    std::vector<Word> all(words_, 0);
    for (std::size_t p = 0; p < order_.size(); ++p) all[p / 64] |= Word{1} << (p % 64);
    pool_.assign(order_.size() + 2, std::vector<Word>(words_, 0));
    expand(all, 0.0, 0);
    StableSetResult res;
    for (std::size_t p : best_set_) res.set.push_back(order_[p]);
    std::sort(res.set.begin(), res.set.end());
    res.weight = best_;
    res.aborted = aborted_;
    res.complete = !stopped_;
    res.nodes = nodes_;
    return res;
  }

 private:
  void expand(const std::vector<Word>& cand, double current, std::size_t depth) {
    if (stopped_) return;
    if (++nodes_ % kAbortCheckInterval == 0 && abort_ && abort_()) {
      stopped_ = aborted_ = true;
      return;
    }
    double remaining = 0.0;
    for_each_bit(cand, [&](std::size_t p) { remaining += weight_[p]; });

    std::vector<Word>& next = pool_[depth];
    for (std::size_t w = 0; w < words_; ++w) {
      for (Word bits = cand[w]; bits; bits &= bits - 1) {
        if (current + remaining <= best_ + 1e-12) return;
        const std::size_t p = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        for (std::size_t k = 0; k < words_; ++k) next[k] = cand[k] & later_compatible_[p][k];
        const double with = current + weight_[p];
        current_set_.push_back(p);
        if (with > best_) {
          best_ = with;
          best_set_ = current_set_;
          if (early_exit_ && best_ > target_) {
            stopped_ = true;
            return;
          }
        }
        expand(next, with, depth + 1);
        current_set_.pop_back();
        if (stopped_) return;
        remaining -= weight_[p];
      }
    }
  }

  template <class F>
  void for_each_bit(const std::vector<Word>& set, F&& f) const {
    for (std::size_t w = 0; w < words_; ++w)
      for (Word bits = set[w]; bits; bits &= bits - 1)
        f(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
  }

  bool early_exit_;
  double target_;
  const AbortCheck& abort_;
  std::vector<VertexId> order_;
  std::vector<double> weight_;
  std::vector<std::vector<Word>> later_compatible_;
  std::size_t words_ = 0;

  std::vector<std::vector<Word>> pool_;  // one candidate buffer per depth
  std::vector<std::size_t> current_set_;
  std::vector<std::size_t> best_set_;
  double best_ = 0.0;
  bool stopped_ = false;
  bool aborted_ = false;
  std::size_t nodes_ = 0;
};

}  // namespace

StableSetResult mwss_search(const Graph& graph, const PricingTask& task, bool early_exit,
                            const AbortCheck& abort) {
  return StableSetSearch(graph, task, early_exit, abort).run();
}

std::vector<VertexId> extend_to_maximal(const std::vector<VertexId>& set, const Graph& graph,
                                        const std::vector<VertexId>& candidates,
                                        const std::vector<double>& pi) {
  std::vector<VertexId> order = candidates;
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return pi[a] != pi[b] ? pi[a] > pi[b] : a < b;
  });
  std::vector<VertexId> out = set;
  for (VertexId c : order) {
    const bool fits = std::none_of(out.begin(), out.end(), [&](VertexId s) {
      return s == c || graph.adjacent(s, c);
    });
    if (fits) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PricingOutcome::any() const {
  return std::any_of(per_class.begin(), per_class.end(), [](const auto& c) { return c.has_value(); });
}

std::vector<Column> PricingOutcome::columns() const {
  std::vector<Column> out;
  for (const auto& c : per_class)
    if (c) out.push_back(*c);
  return out;
}

PricingOutcome price_all(const Instance& inst, const ColorPartition& partition,
                         const DualSolution& duals, bool early_exit, const AbortCheck& abort) {
  const std::size_t nclasses = partition.classes.size();
  PricingOutcome out;
  out.per_class.assign(nclasses, std::nullopt);

  std::vector<double> threshold(nclasses);
  for (std::size_t k = 0; k < nclasses; ++k)
    threshold[k] = static_cast<double>(partition.classes[k].weight) + duals.gamma[k];
  std::vector<std::size_t> order(nclasses);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (threshold[a] != threshold[b]) return threshold[a] > threshold[b];
    return partition.classes[a].rep < partition.classes[b].rep;
  });

  // V_k -> search result (with the set already extended to a maximal one)
  std::map<std::vector<VertexId>, StableSetResult> cache;
  for (std::size_t k : order) {
    const auto& cls = partition.classes[k];
    auto it = cache.find(cls.vertices);
    if (it != cache.end()) {
      ++out.stats.cache_hits;
    } else {
      PricingTask task{cls.rep, cls.vertices, &duals.pi, threshold[k]};
      StableSetResult res = mwss_search(inst.graph, task, early_exit, abort);
      ++out.stats.searches;
      out.stats.nodes += res.nodes;
      if (res.aborted) {
        out.aborted = true;
        return out;
      }
      res.set = extend_to_maximal(res.set, inst.graph, cls.vertices, duals.pi);
      res.weight = 0.0;
      for (VertexId v : res.set) res.weight += duals.pi[v];
      it = cache.emplace(cls.vertices, std::move(res)).first;
    }
    // a cached result either beat a larger threshold or is an exact maximum
    const StableSetResult& res = it->second;
    if (res.weight > threshold[k] + kEps)
      out.per_class[k] = Column{res.set, cls.rep, cls.weight};
  }
  return out;
}

}  // namespace listchroma
