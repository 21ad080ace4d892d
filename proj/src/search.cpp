#include "mgs/search.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace mgs {

namespace {

struct Dfs {
  SearchConfig cfg;
  bool use_dedup = false;
  FramedSeed state;
  std::vector<VertexLabel> path;
  std::map<std::vector<Int>, int> shallowest;  // state cells -> depth expanded at
  SearchResult result;
  bool stop = false;

  void visit(int depth) {
    if (stop) return;
    if (++result.states_visited > cfg.max_states) {
      result.status = SearchStatus::BudgetExceeded;
      stop = true;
      return;
    }
    if (is_final(state)) {
      result.sequences.push_back(path);
      if (cfg.mode == SearchMode::First) stop = true;
      return;
    }
    if (depth >= cfg.max_depth) return;
    if (use_dedup) {
      auto [it, inserted] = shallowest.try_emplace(state.cells(), depth);
      if (!inserted) {
        if (it->second <= depth) return;
        it->second = depth;
      }
    }
    for (int i = 0; i < state.size() && !stop; ++i) {
      if (color_of(state, i) != VertexColor::Green) continue;
      mutate_in_place(state, i);
      path.push_back(state.label(i));
      visit(depth + 1);
      path.pop_back();
      mutate_in_place(state, i);  // involution restores the state exactly
    }
  }
};

}  // namespace

SearchResult search_mgs(const ExchangeMatrix& m, const SearchConfig& config) {
  Dfs dfs;
  dfs.cfg = config;
  dfs.use_dedup = config.dedup && config.mode == SearchMode::First;
  dfs.state = frame(m);
  dfs.visit(0);
  if (dfs.result.status != SearchStatus::BudgetExceeded) {
    dfs.result.status = dfs.result.sequences.empty() ? SearchStatus::Exhausted
                                                     : SearchStatus::Found;
  }
  std::sort(dfs.result.sequences.begin(), dfs.result.sequences.end());
  return dfs.result;
}

std::vector<std::vector<VertexLabel>> enumerate_all(const ExchangeMatrix& m,
                                                    int max_len) {
  if (m.size() > 4) {
    throw RankTooLarge("exhaustive enumeration is limited to rank <= 4, got rank " +
                       std::to_string(m.size()));
  }
  SearchConfig cfg;
  cfg.max_depth = max_len;
  cfg.max_states = std::numeric_limits<long long>::max();
  cfg.mode = SearchMode::All;
  cfg.dedup = false;
  return search_mgs(m, cfg).sequences;
}

}  // namespace mgs
