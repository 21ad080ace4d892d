#pragma once

#include <vector>

#include "mgs/seed.hpp"

namespace mgs {

enum class SearchMode { First, All };

struct SearchConfig {
  int max_depth = 0;
  long long max_states = 1'000'000;
  SearchMode mode = SearchMode::First;
  // Depth-aware state dedup for First mode: a revisited state is re-expanded
  // only when reached strictly shallower. All mode never dedups, since it
  // enumerates sequences rather than states.
  bool dedup = true;
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<std::vector<VertexLabel>> sequences;
  long long states_visited = 0;
};

// Depth-first search for maximal green sequences from the fresh framing of
// m, branching over green vertices in matrix order.
SearchResult search_mgs(const ExchangeMatrix& m, const SearchConfig& config);

// Every maximal green sequence of length <= max_len, lexicographically
// ordered. Throws RankTooLarge above rank 4.
std::vector<std::vector<VertexLabel>> enumerate_all(const ExchangeMatrix& m,
                                                    int max_len);

}  // namespace mgs
